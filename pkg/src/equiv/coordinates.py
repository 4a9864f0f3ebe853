"""
Coordenadas algebraicas de un splash tangente: T = ⟨u⟩, P = ⟨v⟩ y
escalares ρ_1, …, ρ_{r-2} con 1, ρ_1, … independientes sobre GF(q), de
modo que S∖{T} = {⟨(x + Σ y_i ρ_i)·u + v⟩ : x, y_i ∈ GF(q)}.
"""

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from src.errors import InvariantViolation, NotTangent, ParameterDomain
from src.gf import Field, field_tower, subfield_degree, to_ints
from src.projgeom import ProjPoint, linalg, projective_line
from src.splash import Splash, SplashKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SplashCoordinates:
    """u, v en el espacio ambiente del splash y los escalares ρ."""
    field: Field
    q: int
    u: tuple[int, ...]
    v: tuple[int, ...]
    rho: tuple[int, ...]
    centre: ProjPoint
    base_point: ProjPoint

    @property
    def rho_vector(self) -> np.ndarray:
        """(1, ρ_1, …, ρ_{r-2})."""
        return np.array((1,) + tuple(self.rho), dtype=np.int64)

    @property
    def rank(self) -> int:
        return len(self.rho) + 2

    def regenerate(self) -> frozenset[ProjPoint]:
        """Los q^{r-1} puntos ⟨(x + Σ y_i ρ_i)·u + v⟩."""
        gf = self.field.gf
        n = self.field.k // subfield_degree(self.field, self.q)
        tower = field_tower(self.q, n, self.field)
        combos = np.array(list(itertools.product(range(self.q), repeat=self.rank - 1)), dtype=np.int64)
        scalars = gf(tower.embed(combos)) @ gf(self.rho_vector)[:, np.newaxis]
        u = gf(np.array(self.u, dtype=np.int64))
        v = gf(np.array(self.v, dtype=np.int64))
        vectors = scalars * u[np.newaxis, :] + v[np.newaxis, :]
        rows = linalg.normalize_rows(self.field, vectors)
        return frozenset(ProjPoint(self.field, tuple(row)) for row in rows.tolist())

    def to_dict(self) -> dict:
        return {
            "u": list(self.u),
            "v": list(self.v),
            "rho": list(self.rho),
            "centre": str(self.centre),
            "base_point": str(self.base_point),
        }


def splash_coordinates(splash: Splash, P: ProjPoint) -> SplashCoordinates:
    """Coordenadas con P = ⟨v⟩; u = c·t para el menor c no nulo del conjunto de desplazamientos."""
    if splash.kind != SplashKind.TANGENT or splash.centre is None:
        raise NotTangent(f"Splash {splash.kind.value}: se requiere un splash tangente")
    if P == splash.centre or P not in splash.hyperplane_counts:
        raise ParameterDomain(f"{P} no pertenece a S∖{{T}}")
    field = splash.field
    q = splash.q
    n = field.k // subfield_degree(field, q)
    tower = field_tower(q, n, field)
    line = projective_line(field)
    frame = splash.frame
    tables = field.tables

    others = [x for x in splash.points if x != splash.centre]
    t_code = line.code(frame.to_line([splash.centre])[0])
    p_code = line.code(frame.to_line([P])[0])
    offsets = sorted({line.tangent_offset(t_code, p_code, line.code(x)) for x in frame.to_line(others)})
    r = splash.rank
    expanded = tower.expand(np.array(offsets, dtype=np.int64))
    if len(offsets) != q ** (r - 1) or linalg.rank(tower.base, expanded, n) != r - 1:
        raise NotTangent("Los desplazamientos no forman un GF(q)-subespacio de dimensión r-1")

    scale = next(c for c in offsets if c != 0)
    normalized = sorted(tables.mul[c][tables.inv[scale]] for c in offsets)
    basis = [1]
    for c in normalized:
        if len(basis) == r - 1:
            break
        if c == 0 or c in basis:
            continue
        if linalg.rank(tower.base, tower.expand(np.array(basis + [c], dtype=np.int64)), n) == len(basis) + 1:
            basis.append(c)

    gf = field.gf
    frame_basis = gf(frame.basis())
    t_rep = gf(np.array(line.rep(t_code), dtype=np.int64))
    u_line = gf(scale) * t_rep
    v_line = gf(np.array(line.rep(p_code), dtype=np.int64))
    u = to_ints(u_line[np.newaxis, :] @ frame_basis).reshape(-1)
    v = to_ints(v_line[np.newaxis, :] @ frame_basis).reshape(-1)
    coordinates = SplashCoordinates(
        field=field,
        q=q,
        u=tuple(u.tolist()),
        v=tuple(v.tolist()),
        rho=tuple(basis[1:]),
        centre=splash.centre,
        base_point=P,
    )
    if coordinates.regenerate() != frozenset(others):
        raise InvariantViolation("Las coordenadas no reproducen S∖{T}")
    return coordinates
