"""
Splash de una q-subgeometría sobre una recta: las intersecciones de la
recta con las extensiones de los hiperplanos de la subgeometría.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

import numpy as np

from src.errors import InvariantViolation, LineInExtendedHyperplane, ParameterDomain
from src.fieldred import LinearSet, LinearSetKind, classify_weights, theta
from src.gf import Field
from src.projgeom import LineFrame, ProjPoint, ProjSubspace, enumerate_hyperplanes, linalg, projective_line
from src.subgeo import LineKind, Subgeometry, line_position

logger = logging.getLogger(__name__)


class SplashKind(str, Enum):
    TANGENT = "tangent"
    EXTERNAL = "external"
    SECANT = "secant"


def weight_from_count(count: int, q: int) -> int:
    """w con θ_w(q) = count."""
    w, value = 1, 1
    while value < count:
        w += 1
        value = theta(w, q)
    if value != count:
        raise InvariantViolation(f"{count} hiperplanos no es un θ_w para q={q}")
    return w


@dataclass(frozen=True, eq=False)
class Splash:
    """Conjunto de puntos de una recta con su clasificación y procedencia."""
    line: ProjSubspace
    frame: LineFrame
    hyperplane_counts: dict[ProjPoint, int]
    kind: SplashKind
    centre: Optional[ProjPoint]
    rank: int
    q: int
    provenance: Optional[Subgeometry] = None

    @property
    def field(self) -> Field:
        return self.line.field

    @property
    def points(self) -> tuple[ProjPoint, ...]:
        return tuple(sorted(self.hyperplane_counts))

    @property
    def weights(self) -> dict[ProjPoint, int]:
        return {p: weight_from_count(c, self.q) for p, c in self.hyperplane_counts.items()}

    def line_counts(self) -> dict[ProjPoint, int]:
        """Conteos en coordenadas de PG(1, q^n) según el marco."""
        points = self.points
        return dict(zip(self.frame.to_line(points), (self.hyperplane_counts[p] for p in points)))

    def line_points(self) -> list[ProjPoint]:
        return sorted(self.line_counts())

    def line_centre(self) -> Optional[ProjPoint]:
        if self.centre is None:
            return None
        return self.frame.to_line([self.centre])[0]

    def codes(self) -> frozenset[int]:
        return projective_line(self.field).codes(self.line_points())

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        """Clave de deduplicación: lista ordenada de puntos normalizados."""
        return tuple(p.coords for p in self.line_points())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Splash):
            return NotImplemented
        return self.field == other.field and self.key == other.key

    def __hash__(self) -> int:
        return hash((self.field, self.key))

    def __len__(self) -> int:
        return len(self.hyperplane_counts)

    def to_dict(self) -> dict:
        counts = self.line_counts()
        centre = self.line_centre()
        return {
            "kind": self.kind.value,
            "centre": str(centre) if centre is not None else None,
            "rank": self.rank,
            "points": [str(p) for p in sorted(counts)],
            "hyperplane_counts": {str(p): c for p, c in sorted(counts.items())},
            "provenance": self.provenance.to_dict() if self.provenance is not None else "synthetic",
        }

    # ── Splashes sintéticos ────────────────────────────────

    @classmethod
    def synthetic(cls, field: Field, weights: dict[ProjPoint, int], q: int, rank: int) -> "Splash":
        """Splash sobre PG(1, q^n) dado por un mapa de pesos; conteo = θ_peso."""
        line = ProjSubspace.full(field, 1)
        classification = classify_weights(weights, rank)
        if rank == 2:
            kind, centre = SplashKind.SECANT, None
        elif classification.kind == LinearSetKind.CLUB:
            kind, centre = SplashKind.TANGENT, classification.head
        else:
            kind, centre = SplashKind.EXTERNAL, None
        counts = {p: theta(w, q) for p, w in weights.items()}
        return cls(line, LineFrame.default(line), counts, kind, centre, rank, q)

    @classmethod
    def from_linear_set(cls, linear: LinearSet) -> "Splash":
        return cls.synthetic(linear.ctx.ext, linear.weights, linear.ctx.q, linear.rank)

    @classmethod
    def from_codes(cls, field: Field, codes, weights, q: int, rank: int) -> "Splash":
        line = projective_line(field)
        return cls.synthetic(field, {line.point(c): w for c, w in zip(codes, weights)}, q, rank)


# ── Cálculo ────────────────────────────────────────────────

def compute_splash(s: Subgeometry, line: ProjSubspace, frame: Optional[LineFrame] = None) -> Splash:
    """Puntos l ∩ H̄ para todos los hiperplanos H de la subgeometría, con su conteo."""
    s.check_line(line)
    position = line_position(s, line)
    frame = frame or LineFrame.default(line)
    gf = s.field.gf
    basis = line.matrix()
    duals = gf(s.hyperplane_duals())
    products = basis @ duals.T
    a_dot, b_dot = products[0], products[1]
    vectors = b_dot[:, np.newaxis] * basis[0][np.newaxis, :] - a_dot[:, np.newaxis] * basis[1][np.newaxis, :]
    counts = Counter(map(tuple, linalg.normalize_rows(s.field, vectors).tolist()))
    hyperplane_counts = {ProjPoint(s.field, coords): c for coords, c in counts.items()}

    kind = {
        LineKind.TANGENT: SplashKind.TANGENT,
        LineKind.SECANT: SplashKind.SECANT,
        LineKind.EXTERNAL: SplashKind.EXTERNAL,
    }[position.kind]
    result = Splash(line, frame, hyperplane_counts, kind, position.centre, s.r, s.q, s)

    if kind == SplashKind.TANGENT:
        if len(result) != s.q ** (s.r - 1) + 1 or position.centre not in hyperplane_counts:
            raise InvariantViolation(f"Splash tangente de {len(result)} puntos")
    elif kind == SplashKind.SECANT and set(position.points) != set(hyperplane_counts):
        raise InvariantViolation("El splash secante no coincide con la subrecta π0 ∩ l")
    return result


def admissible_lines(
    s: Subgeometry, limit: int, rng: Optional[np.random.Generator] = None
) -> Iterator[ProjSubspace]:
    """
    Rectas que no están en ninguna extensión de hiperplano. En PG(2) se
    recorren todas (o una muestra si hay más de limit); en dimensión mayor
    se muestrean rectas por pares de puntos al azar.
    """
    field = s.field
    if s.r == 2:
        yield ProjSubspace.full(field, 1)
        return
    if s.r == 3:
        lines = list(enumerate_hyperplanes(field, 2))
        if len(lines) > limit:
            if rng is None:
                raise ParameterDomain(f"{len(lines)} rectas superan el límite {limit}")
            chosen = sorted(rng.choice(len(lines), size=limit, replace=False).tolist())
            lines = [lines[i] for i in chosen]
        for line in lines:
            try:
                s.check_line(line)
            except LineInExtendedHyperplane:
                continue
            yield line
        return
    if rng is None:
        raise ParameterDomain("Se requiere un generador aleatorio para r > 3")
    seen: set = set()
    attempts = 0
    while len(seen) < limit and attempts < 50 * limit:
        attempts += 1
        pair = rng.integers(0, field.order, size=(2, s.r), dtype=np.int64)
        if linalg.rank(field, pair, s.r) != 2:
            continue
        line = ProjSubspace.from_rows(field, s.r - 1, pair)
        if line in seen:
            continue
        try:
            s.check_line(line)
        except LineInExtendedHyperplane:
            continue
        seen.add(line)
        yield line
