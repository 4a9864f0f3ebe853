"""
Conjuntos lineales B(U) sobre PG(1, q^n).

Los pesos se guardan como dimensión vectorial de F(x) ∩ U, que coincide
con la dimensión proyectiva más uno; el rango es la dimensión de U.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from src.errors import InvariantViolation, ParameterDomain, ZeroSubspace
from src.fieldred.reduction import ReductionContext
from src.gf import to_ints
from src.projgeom import ProjPoint, ProjSubspace, linalg

logger = logging.getLogger(__name__)


def theta(j: int, q: int) -> int:
    """Número de puntos de PG(j-1, q)."""
    return (q**j - 1) // (q - 1)


@dataclass(frozen=True, eq=False)
class LinearSet:
    """Conjunto lineal de rango dim(U) con su mapa de pesos."""
    ctx: ReductionContext
    subspace: ProjSubspace
    weights: dict[ProjPoint, int] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.subspace.rows)

    @property
    def points(self) -> tuple[ProjPoint, ...]:
        return tuple(sorted(self.weights))

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        """Clave de deduplicación: lista ordenada de puntos normalizados."""
        return tuple(p.coords for p in self.points)

    def weight(self, point: ProjPoint) -> int:
        return self.weights.get(point, 0)

    def weight_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.weights.values(), reverse=True))

    def basis_vectors(self) -> np.ndarray:
        """Base sobre GF(q) de U en coordenadas de GF(q^n)^2."""
        return self.ctx.contract(np.array(self.subspace.rows, dtype=np.int64))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearSet):
            return NotImplemented
        return self.ctx.ext == other.ctx.ext and self.weights == other.weights

    def __hash__(self) -> int:
        return hash(tuple(sorted((p.coords, w) for p, w in self.weights.items())))

    def __len__(self) -> int:
        return len(self.weights)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "points": [str(p) for p in self.points],
            "weights": {str(p): w for p, w in sorted(self.weights.items())},
        }


def point_weights(ctx: ReductionContext, basis_vectors) -> dict[ProjPoint, int]:
    """Pesos de B(⟨basis⟩_q) a partir de una base de U en GF(q^n)^m."""
    ext = ctx.ext
    vectors = to_ints(basis_vectors)
    k = vectors.shape[0]
    _, coefficients = ctx.tower.projective_coefficients(k)
    images = linalg.normalize_rows(ext, coefficients @ ext.gf(vectors))
    counts = Counter(map(tuple, images.tolist()))
    by_theta = {theta(j, ctx.q): j for j in range(1, k + 1)}
    weights = {}
    for coords, count in counts.items():
        if count not in by_theta:
            raise InvariantViolation(f"Multiplicidad {count} no es un θ_j")
        weights[ProjPoint(ext, coords)] = by_theta[count]
    return weights


def linear_set(ctx: ReductionContext, subspace: ProjSubspace) -> LinearSet:
    """B(U) con rango y pesos; U es un subespacio de PG(2n-1, q)."""
    if ctx.r != 2:
        raise ParameterDomain("Los conjuntos lineales viven en PG(1, q^n)")
    if subspace.field != ctx.base or subspace.ambient_dim != ctx.reduced_dim:
        raise ParameterDomain("U no es un subespacio de PG(2n-1, q)")
    if not subspace.rows:
        raise ZeroSubspace("U es el subespacio nulo")
    basis = ctx.contract(np.array(subspace.rows, dtype=np.int64))
    weights = point_weights(ctx, basis)
    total = sum(theta(w, ctx.q) for w in weights.values())
    if total != theta(len(subspace.rows), ctx.q):
        raise InvariantViolation("Falla la identidad de pesos")
    return LinearSet(ctx, subspace, weights)


def linear_set_from_vectors(ctx: ReductionContext, vectors: Sequence) -> LinearSet:
    """Conjunto lineal del GF(q)-subespacio generado por vectores de GF(q^n)^2."""
    arr = to_ints(vectors).reshape(-1, 2)
    if arr.shape[0] == 0 or not arr.any():
        raise ZeroSubspace("U es el subespacio nulo")
    subspace = ProjSubspace.from_rows(ctx.base, ctx.reduced_dim, ctx.expand(arr))
    return linear_set(ctx, subspace)


class LinearSetKind(str, Enum):
    SCATTERED = "scattered"
    CLUB = "club"
    SUBLINE = "subline"
    OTHER = "other"


@dataclass(frozen=True)
class LinearSetClass:
    kind: LinearSetKind
    head: Optional[ProjPoint] = None
    profile: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "head": str(self.head) if self.head is not None else None,
            "profile": list(self.profile),
        }


def classify_weights(weights: dict[ProjPoint, int], rank: int) -> LinearSetClass:
    profile = tuple(sorted(weights.values(), reverse=True))
    heavy = [p for p, w in weights.items() if w > 1]
    if rank == 2 and not heavy:
        return LinearSetClass(LinearSetKind.SUBLINE, None, profile)
    if rank >= 3 and len(heavy) == 1 and weights[heavy[0]] == rank - 1:
        return LinearSetClass(LinearSetKind.CLUB, heavy[0], profile)
    if not heavy:
        return LinearSetClass(LinearSetKind.SCATTERED, None, profile)
    return LinearSetClass(LinearSetKind.OTHER, None, profile)


def classify_linear_set(linear: LinearSet) -> LinearSetClass:
    """Escaso, club (con cabeza), subrecta u otro, según el multiconjunto de pesos."""
    return classify_weights(linear.weights, linear.rank)
