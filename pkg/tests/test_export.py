"""
Tests de l'écriture des rapports (JSON, CSV, Markdown, fichiers).
"""

import json

import pytest

from src.export.report_writer import flatten, writer
from src.export.schemas import CheckSchema, CohomTableSchema, StatusSchema, VanishingHitSchema


def _tables():
    return [
        CohomTableSchema(variety="F", bundle=[-2, 2], h=[0, 3, 0, 0]),
        CohomTableSchema(variety="F", bundle=[0, 0], h=[1, 0, 0, 0]),
    ]


# ==========================================
# Tests JSON
# ==========================================


def test_json_keeps_field_order():
    """Test que l'ordre des champs du schéma est conservé."""
    text = writer.to_json(_tables()[0])
    assert list(json.loads(text)) == ["variety", "bundle", "h"]
    assert text.endswith("\n")


def test_json_list():
    """Test l'export d'une liste de schémas."""
    data = json.loads(writer.to_json(_tables()))
    assert [row["h"] for row in data] == [[0, 3, 0, 0], [1, 0, 0, 0]]


# ==========================================
# Tests CSV et Markdown
# ==========================================


def test_csv_cells():
    """Test le rendu des listes d'entiers et des booléens."""
    lines = writer.to_csv(_tables()).splitlines()
    assert lines[0] == "variety,bundle,h"
    assert lines[1] == 'F,"(-2, 2)","(0, 3, 0, 0)"'
    check = CheckSchema(name="serre-duality", scope="cohomology", passed=True, detail="")
    assert writer.to_csv([check]).splitlines()[1] == "serre-duality,cohomology,yes,"


def test_flatten_nested_status():
    """Test que le statut est éclaté en colonnes status_*."""
    status = StatusSchema(kind="Admissible", detail="d", citation="c", anchor="a")
    flat = flatten({"alpha": [0, 1], "status": status.model_dump()})
    assert flat == {
        "alpha": "(0, 1)",
        "status_kind": "Admissible",
        "status_detail": "d",
        "status_citation": "c",
        "status_anchor": "a",
    }


def test_markdown_table():
    """Test le titre, l'en-tête et une ligne du tableau Markdown."""
    hit = VanishingHitSchema(a2=1, b1=2, b2=0, t=-1, h1=1)
    lines = writer.to_markdown([hit], "Hits").splitlines()
    assert lines[0] == "## Hits"
    assert lines[2] == "| a2 | b1 | b2 | t | h1 |"
    assert lines[4] == "| 1 | 2 | 0 | -1 | 1 |"


def test_markdown_empty():
    """Test une table vide."""
    assert writer.to_markdown([], "Empty") == "## Empty\n\n(empty)\n"


def test_render_unknown_format():
    """Test qu'un format non tabulaire est refusé."""
    with pytest.raises(ValueError):
        writer.render(_tables(), "svg")


# ==========================================
# Tests d'écriture sur disque
# ==========================================


def test_export_to_file(tmp_path):
    """Test l'écriture d'un rendu dans un fichier."""
    path = tmp_path / "table.json"
    assert writer.export_to_file(writer.to_json(_tables()), str(path))
    assert json.loads(path.read_text(encoding="utf-8"))[0]["bundle"] == [-2, 2]


def test_export_to_missing_directory(tmp_path):
    """Test qu'un chemin invalide renvoie False."""
    assert writer.export_to_file("x", str(tmp_path / "missing" / "table.json")) is False
