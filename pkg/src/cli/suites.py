"""
Suites de verificación. Cada suite declara su dominio de parámetros y
construye, para un (q, n, r), una lista de verificaciones perezosas que
devuelven lo esperado, lo observado y si coinciden.
"""

import itertools
import logging
import zlib
from collections import Counter
from dataclasses import dataclass
from math import comb, gcd
from typing import Any, Callable, Iterator, Optional

import numpy as np

from src.cli.config import SUITES, RunConfig
from src.equiv import (
    club_orbit_census,
    construct_same_splash_pair,
    find_projectivity_same_splash,
    hyperplane_through,
    lift_equivalence,
    random_collineation,
    random_line_stabilizer,
    restrict_to_line,
    search_equivalence,
    solve_s_tuple,
    splash_equivalence_bruteforce,
)
from src.errors import DegenerateLinearSet, InvariantViolation, LineInExtendedHyperplane
from src.fieldred import (
    LinearSet,
    LinearSetKind,
    ReductionContext,
    b_operator,
    classify_linear_set,
    desarguesian_spread,
    field_reduce_point,
    gaussian_binomial,
    iter_subspaces,
    linear_set_from_vectors,
    linear_set_profiles,
    random_subspace,
    theta,
)
from src.gf import field_tower
from src.projgeom import Collineation, ProjPoint, ProjSubspace, apply, enumerate_points, linalg, projective_line
from src.splash import (
    Splash,
    SplashKind,
    admissible_lines,
    admissible_tuples,
    closure_census,
    closure_test,
    compute_splash,
    count_tangent_splashes,
    counting_identities,
    enumerate_tangent_splashes,
    q2_nonlinear_witness,
    realize_linear_set_as_splash,
    splash_to_linear_subspace,
    subfield_codes,
    tangent_splash_through,
)
from src.subgeo import canonical_subgeometry, subgeometries_through

logger = logging.getLogger(__name__)

# Por debajo de estos tamaños los recorridos son exhaustivos
EXHAUSTIVE_SUBSPACES = 2000
EXHAUSTIVE_POINTS = 20000
MAX_TUPLES = 1_000_000
MAX_WITNESS_SCAN = 200_000


class CheckSkipped(Exception):
    """La verificación no aplica a estos parámetros."""


@dataclass(frozen=True)
class Outcome:
    expected: Any
    observed: Any
    passed: bool
    witness: Optional[dict] = None


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], Outcome]


def _outcome(expected: Any, observed: Any, witness: Optional[dict] = None) -> Outcome:
    return Outcome(expected, observed, expected == observed, witness)


class SuiteContext:
    """Estado compartido por las suites de una corrida: configuración y cachés."""

    def __init__(self, config: RunConfig):
        self.config = config
        self._clubs: dict[tuple[int, int, int], list[Splash]] = {}

    def rng(self, suite: str, q: int, n: int, r: int, check: str) -> np.random.Generator:
        """Generador propio de cada verificación; no depende del orden de ejecución."""
        key = [self.config.seed, SUITES.index(suite), q, n, r, zlib.crc32(check.encode("utf-8"))]
        return np.random.default_rng(key)

    def clubs(self, q: int, n: int, r: int) -> list[Splash]:
        if (q, n, r) not in self._clubs:
            self._clubs[(q, n, r)] = list(
                enumerate_tangent_splashes(
                    q,
                    n,
                    r,
                    workers=self.config.workers,
                    max_field_order=self.config.max_field_order,
                    show_progress=self.config.show_progress,
                )
            )
        return self._clubs[(q, n, r)]


# ── Dominios ───────────────────────────────────────────────

def _field_domain(config: RunConfig, q: int, n: int, r: int) -> Optional[str]:
    if n < 2:
        return "se requiere n >= 2"
    if q**n > config.max_field_order:
        return f"q^n = {q ** n} supera max_field_order = {config.max_field_order}"
    return None


def _linearity_domain(config: RunConfig, q: int, n: int, r: int) -> Optional[str]:
    if not 2 <= r <= 2 * n:
        return "se requiere 2 <= r <= 2n"
    return _field_domain(config, q, n, r)


def _weight_domain(config: RunConfig, q: int, n: int, r: int) -> Optional[str]:
    if r < 3:
        return "se requiere r >= 3"
    return _field_domain(config, q, n, r)


def _club_domain(config: RunConfig, q: int, n: int, r: int) -> Optional[str]:
    if not 3 <= r <= n:
        return "se requiere 3 <= r <= n"
    return _field_domain(config, q, n, r)


def _same_splash_domain(config: RunConfig, q: int, n: int, r: int) -> Optional[str]:
    if r < 3 or r - 1 > n:
        return "se requiere r >= 3 y r - 1 <= n"
    return _field_domain(config, q, n, r)


# ── Auxiliares ─────────────────────────────────────────────

def reference_club(q: int, n: int, r: int) -> LinearSet:
    """Club de W = ⟨(0,1), (1,0), (α,0), …, (α^{r-2},0)⟩_q con cabeza (1:0)."""
    ctx = ReductionContext(2, n, q)
    tables = ctx.ext.tables
    scalars = [1]
    for _ in range(r - 2):
        scalars.append(tables.mul[scalars[-1]][ctx.tower.alpha])
    vectors = np.array([[0, 1]] + [[c, 0] for c in scalars], dtype=np.int64)
    return linear_set_from_vectors(ctx, vectors)


def _lines(ctx: SuiteContext, s, r: int, rng: np.random.Generator) -> list[ProjSubspace]:
    limit = ctx.config.max_lines if r == 3 else ctx.config.samples
    return list(admissible_lines(s, limit, rng))


def _subspace_bases(red: ReductionContext, k: int, rng: np.random.Generator, samples: int) -> Iterator[np.ndarray]:
    """Todas las bases k×N si son pocas; si no, samples bases al azar."""
    N = red.reduced_dim + 1
    if gaussian_binomial(N, k, red.q) <= EXHAUSTIVE_SUBSPACES:
        for block in iter_subspaces(red.q, k, N):
            yield from block
    else:
        for _ in range(samples):
            yield random_subspace(red.base, k, N, rng)


def _coded_counts(splash: Splash) -> dict[int, int]:
    line = projective_line(splash.field)
    return {line.code(p): c for p, c in splash.line_counts().items()}


def _transform_linear_set(linear: LinearSet, g) -> LinearSet:
    return linear_set_from_vectors(linear.ctx, g.map_vectors(linear.basis_vectors()))


# ── splash-linearity ───────────────────────────────────────

def _splash_linearity(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    suite = "splash-linearity"

    def lines() -> Outcome:
        ext = field_tower(q, n).ext
        s = canonical_subgeometry(r, q, ext)
        checked = _lines(ctx, s, r, ctx.rng(suite, q, n, r, "lines"))
        failures = []
        for line in checked:
            splash = compute_splash(s, line)
            try:
                linear = splash_to_linear_subspace(splash)
            except InvariantViolation:
                failures.append(line.to_dict())
                continue
            if linear.rank != r:
                failures.append(line.to_dict())
        witness = {"first_failure": failures[0]} if failures else None
        return _outcome(len(checked), len(checked) - len(failures), witness)

    def realize() -> Outcome:
        rng = ctx.rng(suite, q, n, r, "realize")
        red = ReductionContext(2, n, q)
        verified = degenerate = 0
        for _ in range(ctx.config.samples):
            basis = random_subspace(red.base, r, 2 * n, rng)
            linear = linear_set_from_vectors(red, red.contract(basis))
            try:
                realization = realize_linear_set_as_splash(linear)
            except DegenerateLinearSet:
                degenerate += 1
                continue
            back = splash_to_linear_subspace(realization.splash)
            if back.weights == linear.weights:
                verified += 1
        return _outcome(ctx.config.samples - degenerate, verified, {"degenerate": degenerate})

    return [Check("lines", lines), Check("realize", realize)]


# ── weight ─────────────────────────────────────────────────

def _weight(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    suite = "weight"
    cache: dict[str, list] = {}

    def pairs() -> list[tuple[Splash, LinearSet]]:
        if "pairs" not in cache:
            ext = field_tower(q, n).ext
            s = canonical_subgeometry(r, q, ext)
            checked = _lines(ctx, s, r, ctx.rng(suite, q, n, r, "lines"))
            splashes = [compute_splash(s, line) for line in checked]
            cache["pairs"] = [(sp, splash_to_linear_subspace(sp)) for sp in splashes]
        return cache["pairs"]

    def counts() -> Outcome:
        mismatches = 0
        for splash, linear in pairs():
            for point, count in splash.line_counts().items():
                if count != theta(linear.weight(point), q):
                    mismatches += 1
        return _outcome(0, mismatches, {"lines": len(pairs())})

    def scattered() -> Outcome:
        disagreements = 0
        tally = Counter()
        for splash, linear in pairs():
            is_scattered = classify_linear_set(linear).kind == LinearSetKind.SCATTERED
            external_one = splash.kind == SplashKind.EXTERNAL and set(splash.hyperplane_counts.values()) == {1}
            tally[(splash.kind.value, is_scattered)] += 1
            if is_scattered != external_one:
                disagreements += 1
        witness = {f"{kind}/{'scattered' if flag else 'not-scattered'}": c for (kind, flag), c in sorted(tally.items())}
        return _outcome(0, disagreements, witness)

    return [Check("counts", counts), Check("scattered-iff-external", scattered)]


# ── club-characterization ──────────────────────────────────

def _club_characterization(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    suite = "club-characterization"

    def tangent_lines() -> Outcome:
        ext = field_tower(q, n).ext
        s = canonical_subgeometry(r, q, ext)
        checked = _lines(ctx, s, r, ctx.rng(suite, q, n, r, "tangent-lines"))
        disagreements = tangents = 0
        for line in checked:
            splash = compute_splash(s, line)
            cls = classify_linear_set(splash_to_linear_subspace(splash))
            tangent = splash.kind == SplashKind.TANGENT
            tangents += tangent
            club = cls.kind == LinearSetKind.CLUB and cls.head == splash.line_centre()
            if tangent != club:
                disagreements += 1
        return _outcome(0, disagreements, {"lines": len(checked), "tangent": tangents})

    def subspaces() -> Outcome:
        rng = ctx.rng(suite, q, n, r, "subspaces")
        red = ReductionContext(2, n, q)
        disagreements = clubs = total = 0
        for basis in _subspace_bases(red, r, rng, ctx.config.random_cases):
            linear = linear_set_from_vectors(red, red.contract(basis))
            try:
                realization = realize_linear_set_as_splash(linear)
            except DegenerateLinearSet:
                continue
            total += 1
            cls = classify_linear_set(linear)
            club = cls.kind == LinearSetKind.CLUB
            clubs += club
            splash = realization.splash
            tangent = splash.kind == SplashKind.TANGENT and splash.line_centre() == cls.head
            if club != tangent:
                disagreements += 1
        return _outcome(0, disagreements, {"subspaces": total, "clubs": clubs})

    def closure() -> Outcome:
        failing = 0
        clubs = ctx.clubs(q, n, r)
        for club in clubs:
            centre = club.line_centre()
            others = [p for p in club.line_points() if p != centre]
            if not closure_test(centre, others, q):
                failing += 1
        return _outcome(0, failing, {"clubs": len(clubs)})

    def converse() -> Outcome:
        if q == 2:
            size = 2 ** (r - 1) + 1
            line = projective_line(field_tower(q, n).ext)
            clubs = {c.codes() for c in ctx.clubs(q, n, r)}
            if len(clubs) == comb(line.order + 1, size):
                # Todo conjunto de ese tamaño es club: no puede haber testigo
                centre = line.point(0)
                others = [c for c in line.all_codes() if c != 0]
                closed = non_clubs = 0
                for subset in itertools.combinations(others, size - 1):
                    if closure_test(centre, line.points(subset), q):
                        closed += 1
                        non_clubs += frozenset((0,) + subset) not in clubs
                return _outcome(0, non_clubs, {"all_sets_are_clubs": True, "closed_sets": closed})
            if gaussian_binomial(2 * n, r, 2) > MAX_WITNESS_SCAN:
                raise CheckSkipped("el recorrido de subespacios es demasiado grande")
            witness = q2_nonlinear_witness(n, r)
            found = frozenset(line.codes(witness.points))
            return _outcome(
                {"closure_holds": True, "linear": False},
                {"closure_holds": witness.closure_holds, "linear": found in clubs},
                witness.to_dict(),
            )
        if r != 3:
            raise CheckSkipped("las clausuras de cuatro puntos sólo generan clubs de rango 3")
        ext = field_tower(q, n).ext
        line = projective_line(ext)
        centre = line.point(0)
        target = q**2 + 1
        census = closure_census(centre, q, target)
        heads = {c.codes() for c in ctx.clubs(q, n, r) if line.code(c.line_centre()) == 0}
        found = sum(frozenset(closed) in heads for closed in census.closures)
        smaller = sum(count for k, count in census.sizes.items() if k < target)
        return _outcome(
            {"smaller_closures": 0, "clubs": len(census.closures)},
            {"smaller_closures": smaller, "clubs": found},
            {"seeds": census.seeds, "sizes": {str(k): v for k, v in sorted(census.sizes.items())}},
        )

    return [
        Check("tangent-iff-club-lines", tangent_lines),
        Check("club-iff-tangent-subspaces", subspaces),
        Check("club-closure", closure),
        Check("closure-converse", converse),
    ]


# ── uniqueness ─────────────────────────────────────────────

def _uniqueness(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    def tuples() -> Outcome:
        K = counting_identities(q, n, r).tuples_per_centre
        if K > MAX_TUPLES:
            raise CheckSkipped(f"K = {K} tuplas supera el máximo {MAX_TUPLES}")
        ext = field_tower(q, n).ext
        line = projective_line(ext)
        T = line.point(0)
        heads = [c.codes() for c in ctx.clubs(q, n, r) if line.code(c.line_centre()) == 0]
        containing: dict[int, set[int]] = {}
        for i, codes in enumerate(heads):
            for code in codes:
                containing.setdefault(code, set()).add(i)
        exactly_one = total = 0
        first = None
        for codes in admissible_tuples(T, q, n, r, as_codes=True):
            total += 1
            matches = set.intersection(*(containing.get(c, set()) for c in codes))
            if len(matches) == 1:
                exactly_one += 1
                if first is None:
                    first = (codes, next(iter(matches)))
        constructed = False
        witness = None
        if first is not None:
            codes, index = first
            built = tangent_splash_through(T, [line.point(c) for c in codes], q)
            constructed = built.codes() == heads[index]
            witness = {"tuple": list(codes), "club": sorted(heads[index])}
        expected = {"tuples": K, "exactly_one_club": K, "constructed_matches": True}
        observed = {"tuples": total, "exactly_one_club": exactly_one, "constructed_matches": constructed}
        return _outcome(expected, observed, witness)

    return [Check("tuples", tuples)]


# ── counting ───────────────────────────────────────────────

def _counting(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    def per_centre() -> Outcome:
        line = projective_line(field_tower(q, n).ext)
        centres = Counter(line.code(c.line_centre()) for c in ctx.clubs(q, n, r))
        values = sorted(set(centres.values()))
        observed = values[0] if len(values) == 1 and len(centres) == q**n + 1 else values
        return _outcome(count_tangent_splashes(q, n, r), observed)

    def total() -> Outcome:
        return _outcome(count_tangent_splashes(q, n, r, per_centre=False), len(ctx.clubs(q, n, r)))

    def identities() -> Outcome:
        ids = counting_identities(q, n, r)
        if ids.tuples_per_centre > MAX_TUPLES:
            raise CheckSkipped(f"K = {ids.tuples_per_centre} tuplas supera el máximo {MAX_TUPLES}")
        T = projective_line(field_tower(q, n).ext).point(0)
        streamed = sum(1 for _ in admissible_tuples(T, q, n, r, as_codes=True))
        expected = {"K": ids.tuples_per_centre, "consistent": True}
        observed = {"K": streamed, "consistent": ids.consistent}
        return _outcome(expected, observed, ids.to_dict())

    return [Check("per-centre", per_centre), Check("total", total), Check("identities", identities)]


# ── section5 ───────────────────────────────────────────────

def _same_splash(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    suite = "section5"
    d = gcd(n, r - 1)
    cache: dict[str, Any] = {}

    def witness():
        if d == 1:
            raise CheckSkipped(f"gcd({n}, {r - 1}) = 1")
        if "witness" not in cache:
            cache["witness"] = construct_same_splash_pair(q, n, r)
        return cache["witness"]

    def reference():
        if "reference" not in cache:
            cache["reference"] = realize_linear_set_as_splash(reference_club(q, n, r))
        return cache["reference"]

    def same_splash_pair() -> Outcome:
        w = witness()
        splash = compute_splash(w.pi1, w.line)
        expected = {"distinct": True, "splash_size": q ** (r - 1) + 1, "certificate_unique": False}
        observed = {"distinct": w.pi0 != w.pi1, "splash_size": len(splash), "certificate_unique": w.certificate.unique}
        return _outcome(expected, observed, w.to_dict())

    def projectivity() -> Outcome:
        w = witness()
        kappa = find_projectivity_same_splash(w.pi0, w.pi1, w.line)
        identity = find_projectivity_same_splash(w.pi0, w.pi0, w.line)
        observed = {
            "line_fixed": apply(kappa, w.line) == w.line,
            "maps_pi0_to_pi1": w.pi0.transform(kappa) == w.pi1,
            "identity_for_equal": identity.projectively_equal(Collineation.identity(identity.field, identity.size)),
        }
        expected = {key: True for key in observed}
        return _outcome(expected, observed, {"kappa": kappa.to_dict()})

    def uniqueness() -> Outcome:
        if d != 1:
            raise CheckSkipped(f"gcd({n}, {r - 1}) = {d} > 1")
        R0 = reference()
        pi0, line = R0.subgeometry, R0.line
        splash = compute_splash(pi0, line)
        T = splash.centre
        P = next(p for p in splash.points if p != T)
        H0 = hyperplane_through(pi0, P, T)
        solution = solve_s_tuple(pi0, line, P, H0)
        target = splash.line_counts()
        sharing = []
        candidates = subgeometries_through(H0, T)
        for candidate in candidates:
            try:
                if compute_splash(candidate, line).line_counts() == target:
                    sharing.append(candidate)
            except LineInExtendedHyperplane:
                continue
        expected = {"certificate_unique": True, "sharing_subgeometries": 1, "equals_pi0": True}
        observed = {
            "certificate_unique": solution.certificate.unique,
            "sharing_subgeometries": len(sharing),
            "equals_pi0": all(c == pi0 for c in sharing),
        }
        return _outcome(expected, observed, {"candidates": len(candidates), "s": solution.to_dict()})

    def round_trip() -> Outcome:
        if r > n:
            raise CheckSkipped("los clubs requieren r <= n")
        rng = ctx.rng(suite, q, n, r, "equivalence-round-trip")
        R0 = reference()
        linear = R0.linear_set
        lifted = found = 0
        nodes = 0
        for _ in range(ctx.config.equivalence_trials):
            g = random_collineation(linear.ctx.ext, 2, rng, "PGL")
            R1 = realize_linear_set_as_splash(_transform_linear_set(linear, g))
            certificate = search_equivalence(R0.splash, R1.splash, "PGL", ctx.config.budget, ctx.config.workers)
            nodes += certificate.nodes
            if certificate.witness is None:
                continue
            found += 1
            lift = lift_equivalence(R0, R1, certificate.witness)
            if apply(lift.tau, R0.line) == R0.line and R0.subgeometry.transform(lift.tau) == lift.target.subgeometry:
                lifted += 1
        trials = ctx.config.equivalence_trials
        return _outcome({"found": trials, "lifted": trials}, {"found": found, "lifted": lifted}, {"nodes": nodes})

    def stabilizer() -> Outcome:
        if r > n:
            raise CheckSkipped("los clubs requieren r <= n")
        rng = ctx.rng(suite, q, n, r, "stabilizer-restriction")
        R0 = reference()
        line_model = projective_line(R0.subgeometry.field)
        source = _coded_counts(R0.splash)
        agreeing = 0
        for _ in range(ctx.config.equivalence_trials):
            tau = random_line_stabilizer(R0.frame, r, rng, "PΓL")
            pi1 = R0.subgeometry.transform(tau)
            perm = line_model.permutation(restrict_to_line(tau, R0.frame))
            image = {perm[c]: count for c, count in source.items()}
            if _coded_counts(compute_splash(pi1, R0.line, R0.frame)) == image:
                agreeing += 1
        return _outcome(ctx.config.equivalence_trials, agreeing)

    def bruteforce() -> Outcome:
        if q**n > 16:
            raise CheckSkipped("el barrido completo se limita a q^n <= 16")
        if r > n:
            raise CheckSkipped("los clubs requieren r <= n")
        rng = ctx.rng(suite, q, n, r, "bruteforce-agreement")
        R0 = reference()
        linear = R0.linear_set
        trials = min(5, ctx.config.equivalence_trials)
        agree = 0
        for _ in range(trials):
            g = random_collineation(linear.ctx.ext, 2, rng, "PΓL")
            S1 = realize_linear_set_as_splash(_transform_linear_set(linear, g)).splash
            for group in ("PGL", "PΓL"):
                fast = search_equivalence(R0.splash, S1, group, ctx.config.budget).equivalent
                slow = splash_equivalence_bruteforce(R0.splash, S1, group) is not None
                agree += fast == slow
        return _outcome(2 * trials, agree)

    return [
        Check("same-splash-pair", same_splash_pair),
        Check("projectivity", projectivity),
        Check("s-tuple-uniqueness", uniqueness),
        Check("equivalence-round-trip", round_trip),
        Check("stabilizer-restriction", stabilizer),
        Check("bruteforce-agreement", bruteforce),
    ]


# ── infrastructure ─────────────────────────────────────────

def _infrastructure(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    suite = "infrastructure"
    rank = r if r >= 2 and theta(r * n, q) <= EXHAUSTIVE_POINTS else 2

    def spread() -> Outcome:
        red = ReductionContext(rank, n, q)
        seen: set[ProjPoint] = set()
        elements = overlaps = 0
        for element in desarguesian_spread(red):
            elements += 1
            for point in enumerate_points(element.subspace):
                overlaps += point in seen
                seen.add(point)
        expected = {"elements": theta(rank, q**n), "points": theta(rank * n, q), "overlaps": 0}
        observed = {"elements": elements, "points": len(seen), "overlaps": overlaps}
        return _outcome(expected, observed, {"rank": rank})

    def b_of_f() -> Outcome:
        red = ReductionContext(rank, n, q)
        ext = red.ext
        if q**n <= 16:
            points = list(enumerate_points(ProjSubspace.full(ext, rank - 1)))
        else:
            rng = ctx.rng(suite, q, n, r, "b-of-f")
            points = []
            while len(points) < ctx.config.random_cases:
                vector = rng.integers(0, ext.order, size=rank, dtype=np.int64)
                if vector.any():
                    points.append(ProjPoint.from_vector(ext, vector))
        failures = sum(b_operator(red, field_reduce_point(red, x).subspace) != {x} for x in points)
        return _outcome(0, failures, {"points": len(points), "rank": rank})

    def weight_sum() -> Outcome:
        rng = ctx.rng(suite, q, n, r, "weight-sum")
        red = ReductionContext(2, n, q)
        k = min(r, 2 * n)
        sums = direct = checked = profiled = 0
        if q**n <= 16 and gaussian_binomial(2 * n, k, q) > EXHAUSTIVE_SUBSPACES:
            # Suma sobre todos los subespacios con los perfiles vectorizados
            for block in iter_subspaces(q, k, 2 * n):
                for profile in linear_set_profiles(red, block):
                    profiled += 1
                    if sum(q**w - 1 for w in profile.weights) != q**k - 1:
                        sums += 1
        for basis in _subspace_bases(red, k, rng, ctx.config.random_cases):
            checked += 1
            linear = linear_set_from_vectors(red, red.contract(basis))
            if sum(q**w - 1 for w in linear.weights.values()) != q**k - 1:
                sums += 1
            for point, w in linear.weights.items():
                rows = np.vstack([basis, np.array(field_reduce_point(red, point).subspace.rows, dtype=np.int64)])
                if k + n - linalg.rank(red.base, rows, 2 * n) != w:
                    direct += 1
        return _outcome(
            {"sum_failures": 0, "weight_failures": 0},
            {"sum_failures": sums, "weight_failures": direct},
            {"subspaces": checked, "profiled": profiled, "rank": k},
        )

    def subline_equivariance() -> Outcome:
        rng = ctx.rng(suite, q, n, r, "subline-equivariance")
        ext = field_tower(q, n).ext
        line = projective_line(ext)
        subfield = subfield_codes(ext, q)
        if q**n <= 16:
            triples = list(itertools.combinations(line.all_codes(), 3))
        else:
            triples = [
                tuple(int(c) for c in rng.choice(line.size, size=3, replace=False))
                for _ in range(ctx.config.random_cases)
            ]
        failures = 0
        for t, a, b in triples:
            perm = line.permutation(random_collineation(ext, 2, rng, "PΓL"))
            image = frozenset(perm[c] for c in line.subline(t, a, b, subfield))
            if image != line.subline(perm[t], perm[a], perm[b], subfield):
                failures += 1
        return _outcome(0, failures, {"triples": len(triples)})

    return [
        Check("spread-partition", spread),
        Check("b-of-f", b_of_f),
        Check("weight-sum", weight_sum),
        Check("subline-equivariance", subline_equivariance),
    ]


# ── census ─────────────────────────────────────────────────

def _census(ctx: SuiteContext, q: int, n: int, r: int) -> list[Check]:
    def orbits(group: str) -> Callable[[], Outcome]:
        def run() -> Outcome:
            clubs = ctx.clubs(q, n, r)
            census = club_orbit_census(q, n, r, group, clubs=clubs)
            expected = count_tangent_splashes(q, n, r, per_centre=False)
            observed = sum(census.orbit_sizes) if census.total == len(clubs) else -1
            return _outcome(expected, observed, census.to_dict())

        return run

    return [Check("orbits-pgl", orbits("PGL")), Check("orbits-pgammal", orbits("PΓL"))]


SUITE_REGISTRY: dict[str, tuple[Callable, Callable]] = {
    "splash-linearity": (_linearity_domain, _splash_linearity),
    "weight": (_weight_domain, _weight),
    "club-characterization": (_club_domain, _club_characterization),
    "uniqueness": (_club_domain, _uniqueness),
    "counting": (_club_domain, _counting),
    "section5": (_same_splash_domain, _same_splash),
    "infrastructure": (_field_domain, _infrastructure),
    "census": (_club_domain, _census),
}
