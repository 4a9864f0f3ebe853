"""
Enumeración exhaustiva de GF(q)-subespacios de GF(q)^N por patrón de
pivotes y cálculo por lotes de los conjuntos lineales que definen.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from src.errors import ParameterDomain
from src.fieldred.linear_set import theta
from src.fieldred.reduction import ReductionContext
from src.gf import Field, to_ints
from src.projgeom import linalg

logger = logging.getLogger(__name__)


def gaussian_binomial(N: int, k: int, q: int) -> int:
    """Número de subespacios de dimensión k de GF(q)^N."""
    if k < 0 or k > N:
        return 0
    numerator, denominator = 1, 1
    for i in range(k):
        numerator *= q ** (N - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


def pivot_patterns(k: int, N: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(N), k))


def rref_block(q: int, pivots: tuple[int, ...], N: int) -> np.ndarray:
    """Todas las matrices RREF k×N con los pivotes dados, forma (M, k, N)."""
    k = len(pivots)
    pivot_set = set(pivots)
    free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, N) if j not in pivot_set]
    if free:
        values = np.array(list(itertools.product(range(q), repeat=len(free))), dtype=np.int64)
    else:
        values = np.zeros((1, 0), dtype=np.int64)
    block = np.zeros((values.shape[0], k, N), dtype=np.int64)
    for i, p in enumerate(pivots):
        block[:, i, p] = 1
    for column, (i, j) in enumerate(free):
        block[:, i, j] = values[:, column]
    return block


def iter_subspaces(q: int, k: int, N: int) -> Iterator[np.ndarray]:
    """Bases RREF de los subespacios de dimensión k, un bloque por patrón de pivotes."""
    if k < 1 or k > N:
        raise ParameterDomain(f"Dimensión {k} fuera de rango para GF({q})^{N}")
    for pivots in pivot_patterns(k, N):
        yield rref_block(q, pivots, N)


def random_subspace(base: Field, k: int, N: int, rng: np.random.Generator) -> np.ndarray:
    """Base k×N de un subespacio elegido al azar (rechazo hasta rango completo)."""
    while True:
        candidate = rng.integers(0, base.order, size=(k, N), dtype=np.int64)
        if linalg.rank(base, candidate, N) == k:
            return candidate


@dataclass(frozen=True)
class LinearSetProfile:
    """Puntos (códigos de PG(1, q^n)) y pesos de un conjunto lineal."""
    codes: tuple[int, ...]
    weights: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.codes)

    def club_head(self, rank: int) -> Optional[int]:
        """Código de la cabeza si el perfil es un club de ese rango."""
        heavy = [c for c, w in zip(self.codes, self.weights) if w > 1]
        if rank < 3 or len(heavy) != 1:
            return None
        if self.weights[self.codes.index(heavy[0])] != rank - 1:
            return None
        return heavy[0]


def linear_set_profiles(ctx: ReductionContext, bases) -> list[LinearSetProfile]:
    """
    Perfiles de B(U) para un lote de bases (M, k, 2n) sobre GF(q).

    Los puntos se codifican como en ProjectiveLine: t ↦ (1:t), q^n ↦ (0:1).
    """
    bases = to_ints(bases)
    M, k, width = bases.shape
    if width != 2 * ctx.n:
        raise ParameterDomain(f"Las bases deben tener {2 * ctx.n} columnas")
    ext = ctx.ext
    gf = ext.gf
    vectors = ctx.contract(bases.reshape(M * k, width)).reshape(M, k, 2)
    _, coefficients = ctx.tower.projective_coefficients(k)
    stacked = gf(vectors.transpose(1, 0, 2).reshape(k, M * 2))
    images = to_ints(coefficients @ stacked).reshape(-1, M, 2)
    x0, x1 = images[..., 0], images[..., 1]
    inverses = np.asarray(ext.tables.inv, dtype=np.int64)[x0]
    slopes = to_ints(gf(x1) * gf(inverses))
    codes = np.where(x0 != 0, slopes, ext.order)

    by_theta = {theta(j, ctx.q): j for j in range(1, k + 1)}
    profiles = []
    for m in range(M):
        points, counts = np.unique(codes[:, m], return_counts=True)
        weights = tuple(by_theta[int(c)] for c in counts)
        profiles.append(LinearSetProfile(tuple(int(p) for p in points), weights))
    return profiles
