"""
Écriture des rapports en JSON, CSV et Markdown.
"""

import csv
import io
import json
import logging
from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel

logger = logging.getLogger(__name__)

Payload = Union[BaseModel, Sequence[BaseModel]]


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        if all(isinstance(v, int) for v in value):
            return "(" + ", ".join(str(v) for v in value) + ")"
        return "; ".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ", ".join(f"{k}: {_cell(v)}" for k, v in value.items())
    return str(value)


# Sous-objets éclatés en colonnes a_b ; les autres dictionnaires restent une cellule
NESTED_KEYS = ("status", "chern", "dual_twist")


def flatten(data: Dict[str, Any], prefix: str = "") -> Dict[str, str]:
    flat: Dict[str, str] = {}
    for key, value in data.items():
        if key in NESTED_KEYS and isinstance(value, dict):
            flat.update(flatten(value, f"{prefix}{key}_"))
        else:
            flat[f"{prefix}{key}"] = _cell(value)
    return flat


class ReportWriter:
    """Sérialise les schémas pydantic dans les formats de la ligne de commande."""

    FORMATS = ("json", "csv", "markdown")

    def _as_list(self, payload: Payload) -> List[BaseModel]:
        return [payload] if isinstance(payload, BaseModel) else list(payload)

    def to_json(self, payload: Payload) -> str:
        if isinstance(payload, BaseModel):
            data: Any = payload.model_dump(mode="json")
        else:
            data = [item.model_dump(mode="json") for item in payload]
        return json.dumps(data, ensure_ascii=False, indent=2) + "\n"

    def to_csv(self, payload: Payload) -> str:
        rows = [flatten(item.model_dump(mode="json")) for item in self._as_list(payload)]
        if not rows:
            return ""
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()

    def to_markdown(self, payload: Payload, title: Optional[str] = None) -> str:
        rows = [flatten(item.model_dump(mode="json")) for item in self._as_list(payload)]
        lines = []
        if title:
            lines += [f"## {title}", ""]
        if not rows:
            lines.append("(empty)")
            return "\n".join(lines) + "\n"
        header = list(rows[0].keys())
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "|".join("---" for _ in header) + "|")
        for row in rows:
            lines.append("| " + " | ".join(row[k].replace("|", "\\|") for k in header) + " |")
        return "\n".join(lines) + "\n"

    def render(self, payload: Payload, fmt: str, title: Optional[str] = None) -> str:
        if fmt == "json":
            return self.to_json(payload)
        if fmt == "csv":
            return self.to_csv(payload)
        if fmt == "markdown":
            return self.to_markdown(payload, title)
        raise ValueError(f"format {fmt!r} is not available here (expected one of {', '.join(self.FORMATS)})")

    def export_to_file(self, text: str, filepath: str) -> bool:
        """Écrit un rendu sur disque ; False (et un log) en cas d'échec."""
        try:
            with open(filepath, "w", encoding="utf-8") as f:
                f.write(text)
            return True
        except OSError as e:
            logger.error("Erreur export %s : %s", filepath, e)
            return False


# Instance partagée
writer = ReportWriter()
