"""
Script para ejecutar el banco de verificaciones de splashes y conjuntos lineales.
Recorre las suites pedidas sobre los (q, n, r) indicados y escribe el reporte.

Uso:
    python run_suite.py                                   # Todas las suites en (2, 3, 3)
    python run_suite.py --suite counting --q 2..3         # Conteos para q = 2 y 3
    python run_suite.py --suite section5 --q 2 --n 2      # Testigo de subgeometrías con el mismo splash
    python run_suite.py --format csv --out reports/r.csv  # Reporte en CSV

Códigos de salida: 0 si todo pasa, 1 si alguna verificación falla, 2 si la
configuración es inválida.
"""

import sys
import argparse
import logging
from pathlib import Path

ROOT = Path(__file__).resolve().parent
sys.path.insert(0, str(ROOT))

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s | %(name)-30s | %(levelname)-7s | %(message)s",
    handlers=[
        logging.StreamHandler(sys.stdout),
        logging.FileHandler(ROOT / "suite.log", encoding="utf-8"),
    ],
)
logger = logging.getLogger("suite")


def parse_args():
    parser = argparse.ArgumentParser(
        description="Verificación exacta de splashes, conjuntos lineales y clubs"
    )
    parser.add_argument("--q", type=str, default=None, help="Orden del subcuerpo: entero o rango a..b")
    parser.add_argument("--n", type=str, default=None, help="Grado de la extensión: entero o rango a..b")
    parser.add_argument("--r", type=str, default=None, help="Rango: entero o rango a..b")
    parser.add_argument(
        "--suite", type=str, default=None,
        help="Suites separadas por comas, o 'all'",
    )
    parser.add_argument("--seed", type=int, default=None, help="Semilla de todas las selecciones aleatorias")
    parser.add_argument("--workers", type=int, default=None, help="Procesos para las enumeraciones")
    parser.add_argument("--out", type=Path, default=None, help="Ruta del reporte")
    parser.add_argument("--format", type=str, choices=("json", "csv"), default=None, help="Formato del reporte")
    parser.add_argument("--budget", type=int, default=None, help="Límite de nodos de la búsqueda de equivalencias")
    parser.add_argument("--samples", type=int, default=None, help="Muestras por verificación aleatoria")
    parser.add_argument("--timings", action="store_true", help="Registrar el tiempo de cada verificación")
    parser.add_argument("--progress", action="store_true", help="Mostrar barras de progreso")
    return parser.parse_args()


def main() -> int:
    args = parse_args()

    from config import settings
    from src.cli import RunConfig, emit, print_summary, run_suite
    from src.errors import InvalidConfig, IoFailure

    logger.info("=" * 70)
    logger.info("BANCO DE VERIFICACIONES - SPLASHES Y CONJUNTOS LINEALES")
    logger.info("=" * 70)

    try:
        config = RunConfig.build(
            q=args.q,
            n=args.n,
            r=args.r,
            suites=args.suite,
            seed=args.seed,
            workers=args.workers,
            out=args.out,
            format=args.format,
            budget=args.budget,
            samples=args.samples,
            timings=args.timings,
            show_progress=args.progress,
        )
    except InvalidConfig as e:
        logger.error(f"Configuración inválida: {e}")
        return 2

    logger.info(f"Suites: {', '.join(config.suites)}")
    logger.info(f"Parámetros: {len(config.parameters())} combinaciones (q, n, r), semilla {config.seed}")

    report = run_suite(config)

    out = config.out or settings.REPORT_PATH
    if config.out is None and config.format == "csv":
        out = out.with_suffix(".csv")
    try:
        emit(report, config.format, out)
    except IoFailure as e:
        logger.error(str(e))
        return 2

    print(print_summary(report))
    logger.info(f"\nReporte guardado en: {out}")
    return 0 if report.success else 1


if __name__ == "__main__":
    sys.exit(main())
