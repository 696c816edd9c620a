"""Sérialisation des résultats (JSON, CSV, Markdown)."""

from .report_writer import ReportWriter, writer

__all__ = ["ReportWriter", "writer"]
