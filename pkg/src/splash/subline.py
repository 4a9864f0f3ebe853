"""
q-subrectas subl_q(P1, P2, P3), el test de clausura de un conjunto
T ∪ A y el testigo no lineal para q = 2.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from src.errors import InvariantViolation, NotCollinear, NotDistinct, ParameterDomain
from src.fieldred import ReductionContext, gaussian_binomial, iter_subspaces, linear_set_profiles
from src.gf import Field, field_tower, subfield_degree, to_ints
from src.projgeom import ProjPoint, ProjSubspace, linalg, projective_line

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Subline:
    """q+1 puntos de una recta: ⟨v + λt⟩ (λ ∈ GF(q)) y ⟨t⟩."""
    defining: tuple[ProjPoint, ProjPoint, ProjPoint]
    points: frozenset[ProjPoint]
    transversal: ProjSubspace
    q: int

    def __contains__(self, point: ProjPoint) -> bool:
        return point in self.points

    def __len__(self) -> int:
        return len(self.points)

    def to_dict(self) -> dict:
        return {
            "defining": [str(p) for p in self.defining],
            "points": [str(p) for p in sorted(self.points)],
            "transversal": self.transversal.to_dict(),
        }


def _extension_degree(field: Field, q: int) -> int:
    return field.k // subfield_degree(field, q)


def subfield_codes(field: Field, q: int) -> list[int]:
    """Enteros de field que forman la imagen de GF(q)."""
    tower = field_tower(q, _extension_degree(field, q), field)
    return tower.embed(np.arange(q)).tolist()


def subline_through(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, q: int) -> Subline:
    """Única q-subrecta por tres puntos colineales distintos."""
    points = (p1, p2, p3)
    field = p1.field
    width = p1.dimension + 1
    if any(p.field != field or p.dimension + 1 != width for p in points):
        raise NotCollinear("Los puntos no pertenecen al mismo espacio")
    if len(set(points)) != 3:
        raise NotDistinct("Se necesitan tres puntos distintos")
    vectors = np.array([p.coords for p in points], dtype=np.int64)
    if linalg.rank(field, vectors, width) != 2:
        raise NotCollinear("Los tres puntos no están alineados")

    gf = field.gf
    t, v, w = vectors[0], vectors[1], vectors[2]
    alpha, beta = linalg.solve_in_span(field, [v, t], w).tolist()
    v_scaled = gf(v) * gf(alpha)
    t_scaled = gf(t) * gf(beta)
    n = _extension_degree(field, q)
    lambdas = gf(field_tower(q, n, field).embed(np.arange(q)))
    members = v_scaled[np.newaxis, :] + lambdas[:, np.newaxis] * t_scaled[np.newaxis, :]
    result = {ProjPoint(field, tuple(row)) for row in linalg.normalize_rows(field, members).tolist()}
    result.add(p1)

    ctx = ReductionContext(width, n, q, field)
    spanning = ctx.expand(np.stack([to_ints(v_scaled), to_ints(t_scaled)]))
    transversal = ProjSubspace.from_rows(ctx.base, ctx.reduced_dim, spanning)
    return Subline(points, frozenset(result), transversal, q)


def _ambient_line(T: ProjPoint, others: Sequence[ProjPoint] = ()):
    if T.dimension != 1 or any(p.field != T.field or p.dimension != 1 for p in others):
        raise NotCollinear("La clausura se define sólo sobre puntos de PG(1, q^n)")
    return projective_line(T.field)


def closure_test(T: ProjPoint, A: Iterable[ProjPoint], q: int) -> bool:
    """
    True sii subl_q(T, P, Q) ⊆ T ∪ A para todo par P ≠ Q de A.

    Los puntos deben ser de PG(1, q^n); en otra dimensión lanza NotCollinear.
    """
    A = list(A)
    line = _ambient_line(T, A)
    subfield = subfield_codes(T.field, q)
    t = line.code(T)
    codes = sorted(line.codes(A))
    if t in codes:
        raise NotDistinct("T no puede pertenecer a A")
    allowed = set(codes) | {t}
    return all(line.subline(t, a, b, subfield) <= allowed for a, b in itertools.combinations(codes, 2))


def _close_codes(line, t: int, start: set[int], subfield: Sequence[int], limit: Optional[int]) -> set[int]:
    current = set(start)
    changed = True
    while changed:
        changed = False
        others = sorted(current - {t})
        for a, b in itertools.combinations(others, 2):
            new = line.subline(t, a, b, subfield) - current
            if new:
                current |= new
                changed = True
                if limit is not None and len(current) > limit:
                    return current
    return current


def subline_closure(
    T: ProjPoint, seeds: Iterable[ProjPoint], q: int, limit: Optional[int] = None
) -> frozenset[ProjPoint]:
    """
    Menor conjunto que contiene T y seeds y es cerrado por subl_q(T, ·, ·).
    Con limit se corta en cuanto el conjunto supera ese tamaño.
    """
    seeds = list(seeds)
    line = _ambient_line(T, seeds)
    t = line.code(T)
    start = set(line.codes(seeds)) | {t}
    closed = _close_codes(line, t, start, subfield_codes(T.field, q), limit)
    return frozenset(line.points(closed))


@dataclass
class ClosureCensus:
    """Clausuras de todas las semillas T, P, Q, R con R fuera de subl_q(T, P, Q)."""
    seeds: int = 0
    sizes: Counter = field(default_factory=Counter)
    closures: set = field(default_factory=set)


def closure_census(T: ProjPoint, q: int, size: int) -> ClosureCensus:
    """
    Recorre las semillas ordenadas P < Q < R y guarda las clausuras de
    exactamente size puntos; las mayores se cortan.
    """
    line = _ambient_line(T)
    subfield = subfield_codes(T.field, q)
    t = line.code(T)
    others = [c for c in line.all_codes() if c != t]
    census = ClosureCensus()
    for a, b in itertools.combinations(others, 2):
        base = line.subline(t, a, b, subfield)
        for c in others:
            if c <= b or c in base:
                continue
            census.seeds += 1
            closed = _close_codes(line, t, set(base) | {c}, subfield, size)
            census.sizes[len(closed)] += 1
            if len(closed) == size:
                census.closures.add(tuple(sorted(closed)))
    logger.info(f"Clausuras: {census.seeds} semillas, tamaños {dict(census.sizes)}")
    return census


@dataclass(frozen=True)
class NonLinearWitness:
    """Conjunto de 2^{r-1}+1 puntos que cumple la clausura pero no es lineal."""
    points: tuple[ProjPoint, ...]
    centre: ProjPoint
    closure_holds: bool
    scanned_subspaces: int

    def to_dict(self) -> dict:
        return {
            "points": [str(p) for p in self.points],
            "centre": str(self.centre),
            "closure_holds": self.closure_holds,
            "scanned_subspaces": self.scanned_subspaces,
        }


def q2_nonlinear_witness(n: int = 4, r: int = 3) -> NonLinearWitness:
    """
    Primer conjunto (orden lexicográfico de códigos) de 2^{r-1}+1 puntos de
    PG(1, 2^n) que contiene a (1:0), cumple la clausura y no coincide con
    ningún conjunto lineal de rango r.

    En PG(1, 8) con r = 3 los 126 conjuntos de 5 puntos son clubs, así que
    no hay testigo y se lanza ParameterDomain.
    """
    if r < 3 or r > n:
        raise ParameterDomain(f"Se requiere 3 <= r <= n (r={r}, n={n})")
    ctx = ReductionContext(2, n, 2)
    line = projective_line(ctx.ext)
    linear_keys = set()
    scanned = 0
    for block in iter_subspaces(2, r, 2 * n):
        profiles = linear_set_profiles(ctx, block)
        scanned += len(profiles)
        linear_keys.update(p.codes for p in profiles)
    if scanned != gaussian_binomial(2 * n, r, 2):
        raise InvariantViolation("Recorrido de subespacios incompleto")

    t = 0
    centre = line.point(t)
    others = [c for c in line.all_codes() if c != t]
    for subset in itertools.combinations(others, 2 ** (r - 1)):
        key = tuple(sorted((t,) + subset))
        if key in linear_keys:
            continue
        members = line.points(subset)
        if closure_test(centre, members, 2):
            logger.info(f"Testigo no lineal: {key} ({scanned} subespacios recorridos)")
            return NonLinearWitness(tuple(line.points(key)), centre, True, scanned)
    raise ParameterDomain("No hay testigo no lineal para estos parámetros")
