"""
Vue vérification : exécute la suite et rend un résultat par contrôle.
"""

from typing import Optional

from src.errors import UnsupportedOperationError
from src.export.report_writer import writer
from src.export.schemas import CheckSchema, VerifyReportSchema
from src.verification.suite import VerificationSuite


class VerifyView:
    FORMATS = ("markdown", "json", "csv")

    def __init__(self, scope: str = "all", fmt: Optional[str] = None):
        self.fmt = fmt or self.FORMATS[0]
        if self.fmt not in self.FORMATS:
            raise UnsupportedOperationError(f"format {self.fmt!r} is not available for verify")
        self.report = VerificationSuite().run(scope)

    @property
    def passed(self) -> bool:
        return self.report.overall

    def build(self) -> str:
        checks = [
            CheckSchema(name=c.name, scope=c.scope, passed=c.passed, detail=c.detail)
            for c in self.report.checks
        ]
        if self.fmt == "json":
            return writer.to_json(VerifyReportSchema(overall=self.report.overall, checks=checks))
        if self.fmt == "csv":
            return writer.to_csv(checks)
        lines = [
            f"- {c.name}: {'pass' if c.passed else 'fail'}" + (f" ({c.detail})" if c.detail else "")
            for c in checks
        ]
        lines.append("")
        lines.append(f"overall: {'pass' if self.report.overall else 'fail'}")
        return "\n".join(lines) + "\n"
