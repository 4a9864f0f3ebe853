"""
Reducción de cuerpo F_{r,n,q}: PG(r-1, q^n) -> subespacios de PG(rn-1, q),
la spread desarguesiana y el operador B(T).
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

import numpy as np

from src.errors import ParameterDomain
from src.gf import Field, FieldTower, field_tower, to_ints
from src.projgeom import ProjPoint, ProjSubspace, enumerate_points, linalg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionContext:
    """Parámetros (r, n, q) y base fija 1, α, …, α^{n-1} de GF(q^n) sobre GF(q)."""
    r: int
    n: int
    q: int
    ext_field: Optional[Field] = None

    def __post_init__(self):
        if self.r < 1 or self.n < 1:
            raise ParameterDomain(f"Parámetros inválidos r={self.r}, n={self.n}")

    @property
    def tower(self) -> FieldTower:
        return field_tower(self.q, self.n, self.ext_field)

    @property
    def ext(self) -> Field:
        return self.tower.ext

    @property
    def base(self) -> Field:
        return self.tower.base

    @property
    def reduced_dim(self) -> int:
        """Dimensión proyectiva rn-1 del espacio reducido."""
        return self.r * self.n - 1

    def expand(self, vectors) -> np.ndarray:
        """Vectores de GF(q^n)^r (N×r) -> GF(q)^{rn} (N×rn)."""
        arr = to_ints(vectors).reshape(-1, self.r)
        return self.tower.expand(arr).reshape(arr.shape[0], self.r * self.n)

    def contract(self, coords) -> np.ndarray:
        """Inversa de expand."""
        arr = to_ints(coords).reshape(-1, self.r, self.n)
        return self.tower.contract(arr).reshape(-1, self.r)

    def with_rank(self, r: int) -> "ReductionContext":
        return ReductionContext(r, self.n, self.q, self.ext_field)


def reduction_context(r: int, n: int, q: int, ext: Optional[Field] = None) -> ReductionContext:
    return ReductionContext(r, n, q, ext)


@dataclass(frozen=True)
class SpreadElement:
    """Elemento (n-1)-dimensional de la spread y el punto que representa."""
    subspace: ProjSubspace
    point: ProjPoint


def field_reduce_point(ctx: ReductionContext, x: ProjPoint) -> SpreadElement:
    """Subespacio generado por las expansiones de α^j·v, j = 0..n-1."""
    if x.field != ctx.ext or x.dimension + 1 != ctx.r:
        raise ParameterDomain(f"{x} no es un punto de PG({ctx.r - 1}, {ctx.ext.order})")
    gf = ctx.ext.gf
    multiples = ctx.tower.basis[:, np.newaxis] * gf(np.array(x.coords, dtype=np.int64))[np.newaxis, :]
    rows = ctx.expand(multiples)
    return SpreadElement(ProjSubspace.from_rows(ctx.base, ctx.reduced_dim, rows), x)


def desarguesian_spread(ctx: ReductionContext) -> Iterator[SpreadElement]:
    """Los (q^{rn}-1)/(q^n-1) elementos de la spread."""
    for point in enumerate_points(ProjSubspace.full(ctx.ext, ctx.r - 1)):
        yield field_reduce_point(ctx, point)


def contract_points(ctx: ReductionContext, rows) -> np.ndarray:
    """Puntos de PG(rn-1, q) (filas) -> coordenadas normalizadas en PG(r-1, q^n)."""
    vectors = ctx.contract(rows)
    return linalg.normalize_rows(ctx.ext, vectors)


def b_operator(ctx: ReductionContext, target: Union[ProjSubspace, Iterable[ProjPoint]]) -> frozenset[ProjPoint]:
    """Puntos de PG(r-1, q^n) cuyo elemento de spread corta a target."""
    if isinstance(target, ProjSubspace):
        if target.field != ctx.base or target.ambient_dim != ctx.reduced_dim:
            raise ParameterDomain("El subespacio no vive en PG(rn-1, q)")
        points = list(enumerate_points(target))
    else:
        points = list(target)
    if not points:
        return frozenset()
    rows = np.array([p.coords for p in points], dtype=np.int64)
    images = contract_points(ctx, rows)
    return frozenset(ProjPoint(ctx.ext, tuple(row)) for row in images.tolist())
