"""
Colineaciones de PG(m, F): x ↦ x^σ · A con σ: x ↦ x^{p^j}.

Los puntos son vectores fila. j = 0 es una proyectividad.
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from src.errors import DimensionMismatch, MixedFields, NonInvertibleMatrix
from src.gf import Field, to_ints
from src.projgeom import linalg
from src.projgeom.space import ProjPoint, ProjSubspace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Collineation:
    """Matriz invertible más exponente de automorfismo."""
    field: Field
    matrix: tuple[tuple[int, ...], ...]
    exponent: int = 0

    def __post_init__(self):
        size = len(self.matrix)
        if any(len(row) != size for row in self.matrix):
            raise DimensionMismatch("La matriz de una colineación debe ser cuadrada")
        if linalg.rank(self.field, self.matrix, size) != size:
            raise NonInvertibleMatrix("La matriz de la colineación es singular")
        object.__setattr__(self, "exponent", self.exponent % self.field.k)

    @classmethod
    def from_array(cls, field: Field, matrix, exponent: int = 0) -> "Collineation":
        arr = to_ints(matrix)
        return cls(field, tuple(tuple(row) for row in arr.tolist()), exponent)

    @classmethod
    def identity(cls, field: Field, size: int) -> "Collineation":
        return cls.from_array(field, np.eye(size, dtype=np.int64))

    @classmethod
    def frobenius(cls, field: Field, size: int, exponent: int = 1) -> "Collineation":
        return cls.from_array(field, np.eye(size, dtype=np.int64), exponent)

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def automorphism_power(self) -> int:
        return self.field.p**self.exponent

    @property
    def is_projectivity(self) -> bool:
        return self.exponent == 0

    def array(self):
        return self.field.gf(np.array(self.matrix, dtype=np.int64))

    def map_vectors(self, vectors) -> np.ndarray:
        """Imagen (sin normalizar) de vectores fila."""
        gf = self.field.gf
        arr = gf(to_ints(vectors).reshape(-1, self.size))
        return to_ints((arr ** self.automorphism_power) @ self.array())

    def compose(self, other: "Collineation") -> "Collineation":
        """Primero self, luego other."""
        if other.field != self.field:
            raise MixedFields("Colineaciones sobre cuerpos distintos")
        if other.size != self.size:
            raise DimensionMismatch("Colineaciones de tamaño distinto")
        twisted = self.array() ** other.automorphism_power
        return Collineation.from_array(self.field, twisted @ other.array(), self.exponent + other.exponent)

    def inverse(self) -> "Collineation":
        back = (self.field.k - self.exponent) % self.field.k
        inv = self.field.gf(linalg.inverse(self.field, self.matrix)) ** (self.field.p**back)
        return Collineation.from_array(self.field, inv, back)

    def projectively_equal(self, other: "Collineation") -> bool:
        """Misma acción: matrices proporcionales y mismo exponente."""
        if other.exponent != self.exponent or other.size != self.size:
            return False
        mine = linalg.normalize_rows(self.field, self.array().reshape(1, -1))
        theirs = linalg.normalize_rows(self.field, other.array().reshape(1, -1))
        return np.array_equal(mine, theirs)

    def to_dict(self) -> dict:
        return {
            "field_order": self.field.order,
            "matrix": [list(row) for row in self.matrix],
            "automorphism_exponent": self.exponent,
            "group": "PGL" if self.is_projectivity else "PΓL",
        }


def apply(c: Collineation, obj: Union[ProjPoint, ProjSubspace]):
    """Imagen de un punto o subespacio, recanonizada."""
    if isinstance(obj, ProjPoint):
        if obj.field != c.field:
            raise MixedFields(f"{obj.field} vs {c.field}")
        if obj.dimension + 1 != c.size:
            raise DimensionMismatch(f"Punto de PG({obj.dimension}) y colineación de tamaño {c.size}")
        return ProjPoint.from_vector(c.field, c.map_vectors([obj.coords]))
    if isinstance(obj, ProjSubspace):
        if obj.field != c.field:
            raise MixedFields(f"{obj.field} vs {c.field}")
        if obj.width != c.size:
            raise DimensionMismatch(f"Subespacio de PG({obj.ambient_dim}) y colineación de tamaño {c.size}")
        if not obj.rows:
            return obj
        return ProjSubspace.from_rows(c.field, obj.ambient_dim, c.map_vectors(obj.rows))
    raise TypeError(f"No se puede aplicar una colineación a {type(obj).__name__}")
