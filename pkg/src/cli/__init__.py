"""Banco de verificaciones: configuración, suites, ejecución y reporte."""

from src.cli.config import SUITES, RunConfig, parse_range
from src.cli.report import CheckRecord, CheckStatus, Report, ReportSummary, emit, print_summary
from src.cli.runner import run_suite
from src.cli.suites import SUITE_REGISTRY, CheckSkipped, SuiteContext, reference_club

__all__ = [
    "SUITES",
    "SUITE_REGISTRY",
    "CheckRecord",
    "CheckSkipped",
    "CheckStatus",
    "Report",
    "ReportSummary",
    "RunConfig",
    "SuiteContext",
    "emit",
    "parse_range",
    "print_summary",
    "reference_club",
    "run_suite",
]
