"""
Puntos y subespacios de PG(m, F) en forma canónica.

Los puntos se guardan normalizados (primera coordenada no nula = 1) y los
subespacios por su matriz en forma escalonada reducida, de modo que la
igualdad es comparación de tuplas y la deduplicación un lookup de hash.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from src.errors import AmbientMismatch, NotInSpan
from src.gf import Field, normalized_vectors, to_ints
from src.projgeom import linalg

logger = logging.getLogger(__name__)


def _normalize(field: Field, coords: Sequence[int]) -> tuple[int, ...]:
    coords = [int(c) for c in coords]
    lead = next((c for c in coords if c != 0), 0)
    if lead == 0:
        raise ValueError("El vector nulo no define un punto")
    if lead == 1:
        return tuple(coords)
    scale = field.tables.mul[field.tables.inv[lead]]
    return tuple(scale[c] for c in coords)


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Punto de PG(m, F) en coordenadas homogéneas normalizadas."""
    field: Field
    coords: tuple[int, ...]

    def __post_init__(self):
        if _normalize(self.field, self.coords) != tuple(self.coords):
            raise ValueError(f"Coordenadas no normalizadas: {self.coords}")

    @classmethod
    def from_vector(cls, field: Field, vector) -> "ProjPoint":
        return cls(field, _normalize(field, to_ints(vector).reshape(-1).tolist()))

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def vector(self):
        return self.field.gf(np.array(self.coords, dtype=np.int64))

    def __str__(self) -> str:
        return "(" + ":".join(str(self.field.element(c)) for c in self.coords) + ")"

    def to_dict(self) -> str:
        return str(self)


@dataclass(frozen=True)
class ProjSubspace:
    """Subespacio de PG(m, F) dado por su base en forma escalonada reducida."""
    field: Field
    ambient_dim: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        width = self.ambient_dim + 1
        if any(len(r) != width for r in self.rows):
            raise AmbientMismatch(f"Filas de longitud distinta de {width}")

    # ── Constructores ──────────────────────────────────────

    @classmethod
    def from_rows(cls, field: Field, ambient_dim: int, rows) -> "ProjSubspace":
        return cls(field, ambient_dim, linalg.rref(field, rows, ambient_dim + 1))

    @classmethod
    def from_point(cls, point: ProjPoint) -> "ProjSubspace":
        return cls.from_rows(point.field, point.dimension, [point.coords])

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "ProjSubspace":
        width = ambient_dim + 1
        return cls(field, ambient_dim, tuple(tuple(int(i == j) for j in range(width)) for i in range(width)))

    @classmethod
    def empty(cls, field: Field, ambient_dim: int) -> "ProjSubspace":
        return cls(field, ambient_dim, ())

    # ── Propiedades ────────────────────────────────────────

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    @property
    def width(self) -> int:
        return self.ambient_dim + 1

    def matrix(self):
        return self.field.gf(np.array(self.rows, dtype=np.int64).reshape(-1, self.width))

    def contains(self, obj: Union[ProjPoint, "ProjSubspace"]) -> bool:
        _check_ambient([self, obj])
        other_rows = [obj.coords] if isinstance(obj, ProjPoint) else list(obj.rows)
        if not other_rows:
            return True
        if not self.rows:
            return False
        return linalg.rank(self.field, list(self.rows) + other_rows, self.width) == len(self.rows)

    def contains_vectors(self, vectors) -> np.ndarray:
        """Máscara booleana: qué filas de vectors pertenecen al subespacio."""
        vectors = to_ints(vectors).reshape(-1, self.width)
        annihilator = dual(self)
        if not annihilator.rows:
            return np.ones(vectors.shape[0], dtype=bool)
        products = to_ints(self.field.gf(vectors) @ annihilator.matrix().T)
        return ~products.any(axis=1)

    def points(self) -> list[ProjPoint]:
        return list(enumerate_points(self))

    def __str__(self) -> str:
        return "[" + ", ".join(str(list(r)) for r in self.rows) + "]"

    def to_dict(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def _check_ambient(objects: Sequence[Union[ProjPoint, ProjSubspace]]) -> tuple[Field, int]:
    keys = set()
    for obj in objects:
        if isinstance(obj, ProjPoint):
            keys.add((obj.field, obj.dimension))
        else:
            keys.add((obj.field, obj.ambient_dim))
    if len(keys) != 1:
        raise AmbientMismatch("Objetos de espacios proyectivos distintos")
    return next(iter(keys))


# ── Operaciones de retículo ────────────────────────────────

def span(objects: Iterable[Union[ProjPoint, ProjSubspace]]) -> ProjSubspace:
    """Menor subespacio que contiene a todos los objetos."""
    objects = list(objects)
    if not objects:
        raise ValueError("span de una lista vacía")
    field, m = _check_ambient(objects)
    rows = []
    for obj in objects:
        rows.extend([obj.coords] if isinstance(obj, ProjPoint) else obj.rows)
    return ProjSubspace.from_rows(field, m, rows)


def dual(s: ProjSubspace) -> ProjSubspace:
    """Anulador respecto de la forma bilineal estándar."""
    return ProjSubspace.from_rows(s.field, s.ambient_dim, linalg.null_space(s.field, s.rows, s.width))


def meet(a: ProjSubspace, b: ProjSubspace) -> ProjSubspace:
    _check_ambient([a, b])
    return dual(span([dual(a), dual(b)]))


def enumerate_points(s: ProjSubspace) -> Iterator[ProjPoint]:
    """Los θ_{d+1} puntos de s en orden lexicográfico."""
    if not s.rows:
        return iter(())
    coefficients = normalized_vectors(s.field.order, len(s.rows))
    vectors = s.field.gf(coefficients) @ s.matrix()
    normalized = sorted(map(tuple, linalg.normalize_rows(s.field, vectors).tolist()))
    return (ProjPoint(s.field, coords) for coords in normalized)


def enumerate_hyperplanes(field: Field, ambient_dim: int) -> Iterator[ProjSubspace]:
    """Hiperplanos de PG(m, F) como duales de los puntos."""
    for point in enumerate_points(ProjSubspace.full(field, ambient_dim)):
        yield dual(ProjSubspace.from_point(point))


# ── Marco de una recta ─────────────────────────────────────

@dataclass(frozen=True)
class LineFrame:
    """
    Base ordenada (a, b) de una recta; identifica λa + μb con el punto
    (λ:μ) de PG(1, F).
    """
    field: Field
    a: tuple[int, ...]
    b: tuple[int, ...]

    @classmethod
    def default(cls, line: ProjSubspace) -> "LineFrame":
        if line.dim != 1:
            raise ValueError(f"Se esperaba una recta, dimensión {line.dim}")
        return cls(line.field, line.rows[0], line.rows[1])

    @classmethod
    def from_vectors(cls, field: Field, a, b) -> "LineFrame":
        return cls(field, tuple(to_ints(a).tolist()), tuple(to_ints(b).tolist()))

    @property
    def line(self) -> ProjSubspace:
        return ProjSubspace.from_rows(self.field, len(self.a) - 1, [self.a, self.b])

    def basis(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=np.int64)

    def to_line(self, points: Sequence[ProjPoint]) -> list[ProjPoint]:
        """Puntos de la recta -> coordenadas (λ:μ) en PG(1, F)."""
        if not points:
            return []
        gf = self.field.gf
        basis = self.basis()
        cols = list(linalg.independent_columns(self.field, basis, basis.shape[1]))
        vectors = np.array([p.coords for p in points], dtype=np.int64)
        coeffs = gf(vectors[:, cols]) @ np.linalg.inv(gf(basis[:, cols]))
        rebuilt = linalg.normalize_rows(self.field, coeffs @ gf(basis))
        if not np.array_equal(rebuilt, vectors):
            raise NotInSpan("Hay puntos fuera de la recta")
        return [ProjPoint(self.field, tuple(c)) for c in linalg.normalize_rows(self.field, coeffs).tolist()]

    def from_line(self, points: Sequence[ProjPoint]) -> list[ProjPoint]:
        """Coordenadas (λ:μ) -> puntos de la recta."""
        if not points:
            return []
        coeffs = self.field.gf(np.array([p.coords for p in points], dtype=np.int64))
        vectors = coeffs @ self.field.gf(self.basis())
        return [ProjPoint(self.field, tuple(c)) for c in linalg.normalize_rows(self.field, vectors).tolist()]

    def to_dict(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}
