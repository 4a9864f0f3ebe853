"""
Reporte de una corrida: un registro por verificación, resumen y eco de
la configuración. Se serializa como JSON versionado o como CSV con una
fila por verificación.
"""

import csv
import io
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from pydantic import BaseModel

from src.errors import IoFailure

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1.0"

CSV_COLUMNS = ("check_id", "suite", "parameters", "expected", "observed", "status", "reason", "runtime")


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


class CheckRecord(BaseModel):
    check_id: str
    suite: str
    parameters: dict[str, int]
    expected: Any = None
    observed: Any = None
    status: CheckStatus
    reason: Optional[str] = None
    runtime: Optional[float] = None
    witness: Optional[dict] = None


class ReportSummary(BaseModel):
    total: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0

    @property
    def success(self) -> bool:
        return self.failed == 0


class Report(BaseModel):
    schema_version: str = SCHEMA_VERSION
    library_version: str
    config: dict
    checks: list[CheckRecord] = []
    summary: ReportSummary = ReportSummary()

    @property
    def success(self) -> bool:
        return self.summary.success

    @classmethod
    def assemble(cls, library_version: str, config: dict, checks: list[CheckRecord]) -> "Report":
        ids = [c.check_id for c in checks]
        if len(set(ids)) != len(ids):
            raise ValueError("Hay verificaciones repetidas en el reporte")
        summary = ReportSummary(
            total=len(checks),
            passed=sum(c.status == CheckStatus.PASS for c in checks),
            failed=sum(c.status == CheckStatus.FAIL for c in checks),
            skipped=sum(c.status == CheckStatus.SKIPPED for c in checks),
        )
        return cls(library_version=library_version, config=config, checks=checks, summary=summary)


# ── Serialización ──────────────────────────────────────────

def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, sort_keys=True)
    if isinstance(value, Enum):
        return value.value
    return str(value)


def to_json(report: Report) -> str:
    return json.dumps(report.model_dump(mode="json"), ensure_ascii=False, indent=2) + "\n"


def to_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for check in report.checks:
        row = check.model_dump(mode="json")
        writer.writerow([_cell(row[column]) for column in CSV_COLUMNS])
    return buffer.getvalue()


def emit(report: Report, format: str = "json", path: Optional[Path] = None) -> str:
    """Serializa el reporte y, si se indica path, lo escribe."""
    if format == "json":
        text = to_json(report)
    elif format == "csv":
        text = to_csv(report)
    else:
        raise ValueError(f"Formato desconocido: {format}")
    if path is not None:
        try:
            path = Path(path)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
        except OSError as e:
            raise IoFailure(f"No se pudo escribir {path}: {e}") from e
        logger.info(f"Reporte guardado en {path}")
    return text


def print_summary(report: Report) -> str:
    """Resumen legible del reporte."""
    s = report.summary
    lines = [
        "=" * 70,
        "RESUMEN DE VERIFICACIONES",
        "=" * 70,
        f"Total: {s.total} | Pasan: {s.passed} | Fallan: {s.failed} | Omitidas: {s.skipped}",
        "-" * 70,
    ]
    for check in report.checks:
        mark = {CheckStatus.PASS: "OK  ", CheckStatus.FAIL: "FAIL", CheckStatus.SKIPPED: "SKIP"}[check.status]
        detail = f" ({check.reason})" if check.reason else ""
        lines.append(f"  [{mark}] {check.check_id}{detail}")
    lines.append("=" * 70)
    return "\n".join(lines)
