"""
Ejecución de las suites: recorre suites × (q, n, r), ejecuta cada
verificación y arma el reporte.
"""

import logging
import time
from typing import Optional

import src
from src.cli.config import RunConfig
from src.cli.report import CheckRecord, CheckStatus, Report
from src.cli.suites import SUITE_REGISTRY, Check, CheckSkipped, SuiteContext
from src.errors import GeometryError

logger = logging.getLogger(__name__)


def _parameters(q: int, n: int, r: int) -> dict[str, int]:
    return {"q": q, "n": n, "r": r}


def _suffix(q: int, n: int, r: int) -> str:
    return f"[q={q},n={n},r={r}]"


def _execute(suite: str, check: Check, q: int, n: int, r: int, timings: bool) -> CheckRecord:
    check_id = f"{suite}.{check.name}{_suffix(q, n, r)}"
    start = time.perf_counter()
    record = {"check_id": check_id, "suite": suite, "parameters": _parameters(q, n, r)}
    try:
        outcome = check.run()
        record.update(
            expected=outcome.expected,
            observed=outcome.observed,
            status=CheckStatus.PASS if outcome.passed else CheckStatus.FAIL,
            witness=outcome.witness,
        )
    except CheckSkipped as e:
        record.update(status=CheckStatus.SKIPPED, reason=str(e))
    except GeometryError as e:
        logger.error(f"{check_id}: {type(e).__name__}: {e}")
        record.update(status=CheckStatus.FAIL, reason=f"{type(e).__name__}: {e}")
    except Exception as e:
        # Un error inesperado falla sólo esta verificación
        logger.exception(f"{check_id}: error inesperado")
        record.update(status=CheckStatus.FAIL, reason=f"{type(e).__name__}: {e}")
    if timings:
        record["runtime"] = round(time.perf_counter() - start, 6)
    result = CheckRecord(**record)
    logger.info(f"{check_id}: {result.status.value}")
    return result


def run_suite(config: RunConfig, context: Optional[SuiteContext] = None) -> Report:
    """Ejecuta las suites pedidas; los parámetros fuera de dominio quedan como omitidos."""
    context = context or SuiteContext(config)
    records: list[CheckRecord] = []
    for suite in config.suites:
        domain, builder = SUITE_REGISTRY[suite]
        for q, n, r in config.parameters():
            reason = domain(config, q, n, r)
            if reason is not None:
                records.append(
                    CheckRecord(
                        check_id=f"{suite}{_suffix(q, n, r)}",
                        suite=suite,
                        parameters=_parameters(q, n, r),
                        status=CheckStatus.SKIPPED,
                        reason=reason,
                    )
                )
                continue
            logger.info(f"Suite {suite} con q={q}, n={n}, r={r}")
            for check in builder(context, q, n, r):
                records.append(_execute(suite, check, q, n, r, config.timings))
    return Report.assemble(src.__version__, config.echo(), records)
