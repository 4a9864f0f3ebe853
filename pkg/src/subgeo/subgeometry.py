"""
q-subgeometrías de PG(r-1, q^n).

Una subgeometría se da por una base ambiente B (filas): sus puntos son
⟨a·B⟩ con a ∈ GF(q)^r no nulo. Los hiperplanos de la subgeometría se
representan por sus coordenadas duales h ∈ GF(q)^r; la extensión del
hiperplano h es el hiperplano ambiente de coordenadas duales h·(B^{-1})^T.
"""

import itertools
import logging
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Sequence

import numpy as np

from src.errors import DegenerateFrame, LineInExtendedHyperplane, ParameterDomain
from src.gf import Field, FieldTower, field_tower, subfield_degree, to_ints
from src.projgeom import Collineation, ProjPoint, ProjSubspace, dual, linalg

logger = logging.getLogger(__name__)


class Subgeometry:
    """q-subgeometría con caché de puntos de inicialización única."""

    def __init__(self, tower: FieldTower, basis):
        arr = to_ints(basis)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ParameterDomain(f"Base de forma {arr.shape}: se esperaba r×r")
        self.tower = tower
        self.field: Field = tower.ext
        self.r = arr.shape[0]
        self.basis: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in arr.tolist())
        self._inverse = linalg.inverse(self.field, arr)
        self._lock = threading.Lock()
        self._point_rows: Optional[np.ndarray] = None
        self._point_set: Optional[frozenset] = None

    # ── Propiedades ────────────────────────────────────────

    @property
    def q(self) -> int:
        return self.tower.q

    @property
    def n(self) -> int:
        return self.tower.n

    @property
    def ambient_dim(self) -> int:
        return self.r - 1

    def basis_array(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64)

    def _build_points(self) -> None:
        _, coefficients = self.tower.projective_coefficients(self.r)
        vectors = coefficients @ self.field.gf(self.basis_array())
        rows = linalg.normalize_rows(self.field, vectors)
        order = np.lexsort(rows.T[::-1])
        self._point_rows = rows[order]
        self._point_set = frozenset(map(tuple, self._point_rows.tolist()))

    def point_rows(self) -> np.ndarray:
        """Coordenadas normalizadas de los θ_r puntos, en orden lexicográfico."""
        if self._point_rows is None:
            with self._lock:
                if self._point_rows is None:
                    self._build_points()
        return self._point_rows

    @property
    def point_set(self) -> frozenset:
        self.point_rows()
        return self._point_set

    @property
    def points(self) -> list[ProjPoint]:
        return [ProjPoint(self.field, tuple(row)) for row in self.point_rows().tolist()]

    def contains(self, point: ProjPoint) -> bool:
        return point.field == self.field and tuple(point.coords) in self.point_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgeometry):
            return NotImplemented
        return self.field == other.field and self.r == other.r and self.q == other.q and self.point_set == other.point_set

    def __hash__(self) -> int:
        return hash((self.field, self.r, self.q, self.point_set))

    def __repr__(self) -> str:
        return f"Subgeometry(q={self.q}, n={self.n}, r={self.r}, basis={[list(b) for b in self.basis]})"

    # ── Hiperplanos ────────────────────────────────────────

    def hyperplane_coordinates(self) -> np.ndarray:
        """Coordenadas duales h ∈ GF(q)^r normalizadas, en orden lexicográfico."""
        rows, _ = self.tower.projective_coefficients(self.r)
        return rows

    def hyperplane_duals(self) -> np.ndarray:
        """Coordenadas duales ambiente c_h = h·(B^{-1})^T de las extensiones."""
        _, embedded = self.tower.projective_coefficients(self.r)
        return to_ints(embedded @ self.field.gf(self._inverse).T)

    def extended_hyperplanes_containing(self, line: ProjSubspace) -> np.ndarray:
        """Índices de hiperplanos cuya extensión contiene a la recta."""
        products = to_ints(line.matrix() @ self.field.gf(self.hyperplane_duals()).T)
        return np.flatnonzero(~products.any(axis=0))

    def check_line(self, line: ProjSubspace) -> None:
        if line.field != self.field or line.ambient_dim != self.ambient_dim or line.dim != 1:
            raise ParameterDomain("La recta no pertenece al espacio ambiente")
        inside = self.extended_hyperplanes_containing(line)
        if inside.size:
            h = self.hyperplane_coordinates()[inside[0]].tolist()
            raise LineInExtendedHyperplane(f"La recta está en la extensión del hiperplano {h}")

    # ── Transformaciones ───────────────────────────────────

    def transform(self, c: Collineation) -> "Subgeometry":
        """Imagen bajo una colineación: base B^σ·A."""
        return Subgeometry(self.tower, c.map_vectors(self.basis_array()))

    def dual_subgeometry(self) -> "Subgeometry":
        """Subgeometría de las coordenadas duales de sus hiperplanos."""
        return Subgeometry(self.tower, self._inverse.T)

    def to_dict(self) -> dict:
        return {"q": self.q, "n": self.n, "r": self.r, "basis": [list(row) for row in self.basis]}


@dataclass(frozen=True, eq=False)
class SubHyperplane:
    """Hiperplano de una subgeometría y su extensión al espacio ambiente."""
    owner: Subgeometry
    coordinates: tuple[int, ...]
    dual_point: tuple[int, ...]

    @property
    def extension(self) -> ProjSubspace:
        point = ProjSubspace.from_rows(self.owner.field, self.owner.ambient_dim, [self.dual_point])
        return dual(point)

    def vectors(self) -> np.ndarray:
        """Base sobre GF(q) del subespacio vectorial (en coordenadas ambiente)."""
        tower = self.owner.tower
        kernel = linalg.null_space(tower.base, [self.coordinates], self.owner.r)
        embedded = self.owner.field.gf(tower.embed(np.array(kernel, dtype=np.int64)))
        return to_ints(embedded @ self.owner.field.gf(self.owner.basis_array()))

    def contains(self, point: ProjPoint) -> bool:
        gf = self.owner.field.gf
        return int((gf(np.array(point.coords)) * gf(np.array(self.dual_point))).sum()) == 0

    def points(self) -> list[ProjPoint]:
        return [p for p in self.owner.points if self.contains(p)]

    def to_dict(self) -> dict:
        return {"coordinates": list(self.coordinates), "extension": self.extension.to_dict()}


class LineKind(str, Enum):
    SECANT = "secant"
    TANGENT = "tangent"
    EXTERNAL = "external"


@dataclass(frozen=True)
class LinePosition:
    kind: LineKind
    centre: Optional[ProjPoint]
    points: tuple[ProjPoint, ...]


# ── Construcción ───────────────────────────────────────────

def canonical_subgeometry(r: int, q: int, ext: Field) -> Subgeometry:
    """Puntos de PG(r-1, q^n) con todas las coordenadas en GF(q)."""
    n = ext.k // subfield_degree(ext, q)
    if n <= 1:
        raise ParameterDomain("Se requiere n > 1")
    if r < 2:
        raise ParameterDomain("Se requiere r >= 2")
    return Subgeometry(field_tower(q, n, ext), np.eye(r, dtype=np.int64))


def subgeometry_from_frame(frame: Sequence[ProjPoint], q: int) -> Subgeometry:
    """
    Única q-subgeometría que contiene un marco de r+1 puntos en posición
    general; la base devuelta lleva el marco estándar al marco dado.
    """
    if not frame:
        raise DegenerateFrame("Marco vacío")
    field = frame[0].field
    r = frame[0].dimension + 1
    if len(frame) != r + 1 or any(p.field != field or p.dimension + 1 != r for p in frame):
        raise DegenerateFrame(f"Un marco de PG({r - 1}) tiene {r + 1} puntos")
    vectors = np.array([p.coords for p in frame], dtype=np.int64)
    for subset in itertools.combinations(range(r + 1), r):
        if linalg.rank(field, vectors[list(subset)], r) != r:
            raise DegenerateFrame(f"Los puntos {subset} del marco son dependientes")
    scalars = field.gf(linalg.solve_in_span(field, vectors[:r], vectors[r]))
    basis = field.gf(vectors[:r]) * scalars[:, np.newaxis]
    n = field.k // subfield_degree(field, q)
    return Subgeometry(field_tower(q, n, field), to_ints(basis))


def sub_hyperplanes(s: Subgeometry) -> Iterator[SubHyperplane]:
    """Los θ_r hiperplanos de la subgeometría con sus extensiones."""
    duals = s.hyperplane_duals()
    for h, c in zip(s.hyperplane_coordinates().tolist(), duals.tolist()):
        yield SubHyperplane(s, tuple(h), tuple(c))


def line_position(s: Subgeometry, line: ProjSubspace) -> LinePosition:
    """Secante, tangente (con su centro) o exterior."""
    s.check_line(line)
    inside = line.contains_vectors(s.point_rows())
    hits = tuple(ProjPoint(s.field, tuple(row)) for row in s.point_rows()[inside].tolist())
    if len(hits) >= 2:
        return LinePosition(LineKind.SECANT, None, hits)
    if len(hits) == 1:
        return LinePosition(LineKind.TANGENT, hits[0], hits)
    return LinePosition(LineKind.EXTERNAL, None, ())


def subgeometries_through(hyperplane: SubHyperplane, centre: ProjPoint) -> list[Subgeometry]:
    """
    Todas las q-subgeometrías que contienen al hiperplano dado y al punto
    centre (fuera de su extensión): bases [z_0..z_{r-2}; μ·t] con μ en
    GF(q^n)*/GF(q)*.
    """
    owner = hyperplane.owner
    if hyperplane.contains(centre):
        raise ParameterDomain("El centro pertenece a la extensión del hiperplano")
    gf = owner.field.gf
    z = hyperplane.vectors()
    t = gf(np.array(centre.coords, dtype=np.int64))
    base_scalars = owner.tower.nonzero_base_elements()
    seen: set[int] = set()
    result = []
    for mu in range(1, owner.field.order):
        if mu in seen:
            continue
        seen.update(to_ints(gf(mu) * gf(base_scalars)).tolist())
        basis = np.vstack([z, to_ints(gf(mu) * t)[np.newaxis, :]])
        result.append(Subgeometry(owner.tower, basis))
    logger.debug(f"{len(result)} subgeometrías por el hiperplano {hyperplane.coordinates}")
    return result
