"""
Configuración centralizada de splashkit.
"""

from pathlib import Path
from typing import ClassVar

from pydantic import BaseModel
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Rutas del proyecto; sólo REPORT_PATH se toma del entorno o de .env."""

    # ── Rutas ──────────────────────────────────────────────
    PROJECT_ROOT: ClassVar[Path] = Path(__file__).resolve().parent.parent
    REPORT_DIR: ClassVar[Path] = Path(__file__).resolve().parent.parent / "reports"
    REPORT_PATH: Path = Path(__file__).resolve().parent.parent / "reports" / "report.json"

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }


class SearchDefaults(BaseModel):
    """Valores por defecto de las búsquedas y muestreos; no se leen del entorno."""

    model_config = {"frozen": True}

    # ── Azar ───────────────────────────────────────────────
    seed: int = 20140101
    samples: int = 100
    random_cases: int = 1000
    equivalence_trials: int = 50

    # ── Ejecución ──────────────────────────────────────────
    workers: int = 1
    budget: int = 200_000

    # ── Límites ────────────────────────────────────────────
    max_field_order: int = 64
    max_lines: int = 800
