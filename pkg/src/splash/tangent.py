"""
Splashes tangentes: construcción única por T, U_1, …, U_r, fórmulas de
conteo y enumeración exhaustiva de clubs sobre PG(1, q^n).
"""

import logging
import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import Iterator, Optional, Sequence, Union

import numpy as np
from tqdm import tqdm

from src.errors import (
    GeneralPositionViolated,
    InvariantViolation,
    NotDistinct,
    ParameterDomain,
    RankExceedsN,
)
from src.fieldred import ReductionContext, linear_set_from_vectors, linear_set_profiles, pivot_patterns, rref_block
from src.gf import field_tower, subfield_degree, to_ints
from src.projgeom import ProjPoint, linalg, projective_line
from src.splash.splash import Splash, SplashKind

logger = logging.getLogger(__name__)


# ── Construcción por puntos ────────────────────────────────

def tangent_splash_through(T: ProjPoint, points: Sequence[ProjPoint], q: int) -> Splash:
    """
    Único splash tangente de rango r = len(points) con centro T por los
    U_j: conjunto lineal de W = ⟨v, c_2 t, …, c_r t⟩_q con U_j = ⟨v + c_j t⟩.
    """
    field = T.field
    n = field.k // subfield_degree(field, q)
    r = len(points)
    if r < 2:
        raise ParameterDomain("Se necesitan al menos dos puntos U_j")
    if r > n:
        raise RankExceedsN(f"Rango {r} mayor que n={n}")
    line = projective_line(field)
    t_code = line.code(T)
    codes = [line.code(u) for u in points]
    if t_code in codes or len(set(codes)) != r:
        raise NotDistinct("T y los U_j deben ser distintos")

    tower = field_tower(q, n, field)
    offsets = [line.tangent_offset(t_code, codes[0], c) for c in codes[1:]]
    expanded = tower.expand(np.array(offsets, dtype=np.int64))
    for j in range(1, len(offsets) + 1):
        if linalg.rank(tower.base, expanded[:j], n) != j:
            raise GeneralPositionViolated(f"U_{j + 1} no aumenta la dimensión de W")

    gf = field.gf
    t = gf(np.array(line.rep(t_code), dtype=np.int64))
    v = np.array(line.rep(codes[0]), dtype=np.int64)
    vectors = np.vstack([v] + [to_ints(gf(c) * t) for c in offsets])
    linear = linear_set_from_vectors(ReductionContext(2, n, q, field), vectors)
    splash = Splash.from_linear_set(linear)
    if r >= 3 and (splash.kind != SplashKind.TANGENT or splash.centre != T):
        raise InvariantViolation("W no define un club con cabeza T")
    return splash


def admissible_tuples(
    T: ProjPoint, q: int, n: int, r: int, as_codes: bool = False
) -> Iterator[tuple[Union[ProjPoint, int], ...]]:
    """
    Tuplas ordenadas (U_1, …, U_r) en posición general respecto de T:
    U_j = ⟨v + c_j t⟩ con c_2, …, c_r linealmente independientes sobre GF(q).
    """
    field = T.field
    if field.k // subfield_degree(field, q) != n:
        raise ParameterDomain(f"{field} no es GF({q}^{n})")
    line = projective_line(field)
    tables = field.tables
    add, mul = tables.add, tables.mul
    scalars = field_tower(q, n, field).embed(np.arange(q)).tolist()
    t_code = line.code(T)
    t = line.rep(t_code)

    def point_code(v: tuple[int, int], c: int) -> int:
        return line.encode(add[v[0]][mul[c][t[0]]], add[v[1]][mul[c][t[1]]])

    def extend(v, chosen: list[int], span: frozenset[int]):
        if len(chosen) == r:
            yield tuple(chosen)
            return
        for c in range(1, field.order):
            if c in span:
                continue
            grown = frozenset(add[s][mul[lam][c]] for s in span for lam in scalars)
            yield from extend(v, chosen + [point_code(v, c)], grown)

    for first in line.all_codes():
        if first == t_code:
            continue
        v = line.rep(first)
        for codes in extend(v, [first], frozenset([0])):
            yield codes if as_codes else tuple(line.point(c) for c in codes)


# ── Conteo ─────────────────────────────────────────────────

def _check_counting_domain(q: int, n: int, r: int) -> None:
    if not 3 <= r <= n:
        raise ParameterDomain(f"El conteo requiere 3 <= r <= n (r={r}, n={n})")
    if q < 2:
        raise ParameterDomain(f"q={q} inválido")


def count_tangent_splashes(q: int, n: int, r: int, per_centre: bool = True) -> int:
    """Número de splashes tangentes de rango r (por centro o en total)."""
    _check_counting_domain(q, n, r)
    value = Fraction(q ** (n + 1 - r))
    for i in range(r - 1):
        value *= Fraction(q ** (n - i) - 1, q ** (r - 1 - i) - 1)
    if value.denominator != 1:
        raise InvariantViolation(f"Conteo no entero: {value}")
    count = int(value)
    return count if per_centre else count * (q**n + 1)


@dataclass(frozen=True)
class CountingIdentities:
    """K tuplas admisibles por centro = N · (tuplas admisibles dentro de cada splash)."""
    q: int
    n: int
    r: int
    tuples_per_centre: int
    tuples_per_splash: int
    splashes_per_centre: int
    formula_per_centre: int
    formula_total: int

    @property
    def consistent(self) -> bool:
        return (
            self.tuples_per_centre == self.splashes_per_centre * self.tuples_per_splash
            and self.splashes_per_centre == self.formula_per_centre
        )

    def to_dict(self) -> dict:
        return {
            "K": self.tuples_per_centre,
            "tuples_per_splash": self.tuples_per_splash,
            "N": self.splashes_per_centre,
            "formula_per_centre": self.formula_per_centre,
            "formula_total": self.formula_total,
            "consistent": self.consistent,
        }


def counting_identities(q: int, n: int, r: int) -> CountingIdentities:
    _check_counting_domain(q, n, r)
    K = q**n
    for i in range(r - 1):
        K *= q**n - q**i
    per_splash = q ** (r - 1)
    for i in range(r - 1):
        per_splash *= q ** (r - 1) - q**i
    N = Fraction(K, per_splash)
    if N.denominator != 1:
        raise InvariantViolation(f"K/N no entero: {N}")
    return CountingIdentities(
        q=q,
        n=n,
        r=r,
        tuples_per_centre=K,
        tuples_per_splash=per_splash,
        splashes_per_centre=int(N),
        formula_per_centre=count_tangent_splashes(q, n, r),
        formula_total=count_tangent_splashes(q, n, r, per_centre=False),
    )


# ── Enumeración ────────────────────────────────────────────

def _club_block(
    q: int, n: int, r: int, centre_code: Optional[int], pivots: tuple[int, ...]
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Clubs de rango r definidos por los subespacios de un patrón de pivotes."""
    ctx = ReductionContext(2, n, q)
    found = {}
    for profile in linear_set_profiles(ctx, rref_block(q, pivots, 2 * n)):
        head = profile.club_head(r)
        if head is None or (centre_code is not None and head != centre_code):
            continue
        found.setdefault(profile.codes, profile.weights)
    return list(found.items())


def enumerate_tangent_splashes(
    q: int,
    n: int,
    r: int,
    centre: Optional[ProjPoint] = None,
    workers: int = 1,
    max_field_order: int = 64,
    show_progress: bool = False,
) -> Iterator[Splash]:
    """
    Todos los clubs de rango r (con cabeza centre si se indica), una vez
    cada uno. Los bloques de pivotes se reparten entre procesos y se
    fusionan en orden, así la salida no depende de workers.
    """
    _check_counting_domain(q, n, r)
    if q**n > max_field_order:
        raise ParameterDomain(f"q^n = {q ** n} supera el máximo {max_field_order}")
    ctx = ReductionContext(2, n, q)
    centre_code = projective_line(ctx.ext).code(centre) if centre is not None else None
    patterns = pivot_patterns(r, 2 * n)
    worker = partial(_club_block, q, n, r, centre_code)
    logger.debug(f"Enumerando clubs ({q}, {n}, {r}) en {len(patterns)} bloques con {workers} procesos")

    pool = multiprocessing.get_context("spawn").Pool(processes=workers) if workers > 1 else None
    try:
        results = pool.imap(worker, patterns) if pool else map(worker, patterns)
        seen: set = set()
        for block in tqdm(results, total=len(patterns), disable=not show_progress, desc="clubs"):
            for codes, weights in block:
                if codes in seen:
                    continue
                seen.add(codes)
                yield Splash.from_codes(ctx.ext, codes, weights, q, r)
    finally:
        if pool:
            pool.terminate()
            pool.join()
