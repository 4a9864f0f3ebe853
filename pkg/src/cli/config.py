"""
Configuración de una ejecución del banco de verificaciones.
"""

import itertools
import logging
from pathlib import Path
from typing import Literal, Optional, Union

import galois
from pydantic import BaseModel, ValidationError, field_validator

from config import defaults
from src.errors import InvalidConfig

logger = logging.getLogger(__name__)

SUITES = (
    "splash-linearity",
    "weight",
    "club-characterization",
    "uniqueness",
    "counting",
    "section5",
    "infrastructure",
    "census",
)


def parse_range(value: Union[int, str, list, tuple]) -> list[int]:
    """Un entero, "a..b" (inclusive; vacío si b < a) o una lista de enteros."""
    if isinstance(value, (list, tuple)):
        values = [int(v) for v in value]
    elif isinstance(value, int):
        values = [value]
    else:
        text = str(value).strip()
        if ".." in text:
            low, high = (int(part) for part in text.split("..", 1))
            values = list(range(low, high + 1))
        else:
            values = [int(text)]
    if any(v <= 0 for v in values):
        raise ValueError(f"Los parámetros deben ser positivos: {value}")
    return values


class RunConfig(BaseModel):
    """Parámetros de una corrida; la semilla determina toda selección aleatoria."""

    model_config = {"extra": "forbid", "frozen": True}

    q: list[int] = [2]
    n: list[int] = [3]
    r: list[int] = [3]
    suites: list[str] = list(SUITES)
    seed: int = defaults.seed
    workers: int = defaults.workers
    out: Optional[Path] = None
    format: Literal["json", "csv"] = "json"
    budget: int = defaults.budget
    samples: int = defaults.samples
    random_cases: int = defaults.random_cases
    equivalence_trials: int = defaults.equivalence_trials
    max_field_order: int = defaults.max_field_order
    max_lines: int = defaults.max_lines
    timings: bool = False
    show_progress: bool = False

    @field_validator("q", "n", "r", mode="before")
    @classmethod
    def _ranges(cls, value):
        return parse_range(value)

    @field_validator("q")
    @classmethod
    def _prime_powers(cls, value: list[int]) -> list[int]:
        bad = [q for q in value if not galois.is_prime_power(q)]
        if bad:
            raise ValueError(f"q debe ser potencia de primo: {bad}")
        return value

    @field_validator("suites", mode="before")
    @classmethod
    def _suites(cls, value):
        if isinstance(value, str):
            value = [part.strip() for part in value.split(",") if part.strip()]
        if "all" in value:
            return list(SUITES)
        unknown = [s for s in value if s not in SUITES]
        if unknown:
            raise ValueError(f"Suites desconocidas: {unknown}")
        return [s for s in SUITES if s in value]

    @field_validator(
        "workers", "budget", "samples", "random_cases", "equivalence_trials", "max_field_order", "max_lines"
    )
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError(f"Se esperaba un entero positivo: {value}")
        return value

    @field_validator("seed")
    @classmethod
    def _seed(cls, value: int) -> int:
        if value < 0:
            raise ValueError(f"Semilla negativa: {value}")
        return value

    @classmethod
    def build(cls, **values) -> "RunConfig":
        """Valida; cualquier error de validación se traduce en InvalidConfig."""
        values = {k: v for k, v in values.items() if v is not None}
        try:
            return cls.model_validate(values)
        except ValidationError as e:
            raise InvalidConfig(str(e)) from e

    def parameters(self) -> list[tuple[int, int, int]]:
        return list(itertools.product(self.q, self.n, self.r))

    def echo(self) -> dict:
        """Configuración tal como aparece en el reporte."""
        return self.model_dump(mode="json", exclude={"show_progress"})
