"""
Tests de la búsqueda de equivalencias entre splashes de PG(1, 8).
"""

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.equiv import (
    group_exponents,
    random_collineation,
    search_equivalence,
    splash_equivalence,
    splash_equivalence_bruteforce,
)
from src.errors import MixedFields, ParameterDomain, SearchBudgetExceeded
from src.fieldred import ReductionContext, linear_set_from_vectors
from src.gf import field_create
from src.projgeom import projective_line
from src.splash import Splash

GF8 = field_create(2, 3)


def moved(linear, g):
    return Splash.from_linear_set(linear_set_from_vectors(linear.ctx, g.map_vectors(linear.basis_vectors())))


class TestSearchEquivalence:
    """Tests de search_equivalence y splash_equivalence."""

    def setup_method(self):
        self.ctx = ReductionContext(2, 3, 2)
        tables = self.ctx.ext.tables
        alpha = self.ctx.tower.alpha
        alpha2 = tables.mul[alpha][alpha]
        self.club = linear_set_from_vectors(self.ctx, [[0, 1], [1, 0], [alpha, 0]])
        self.scattered = linear_set_from_vectors(
            self.ctx, [[1, 1], [alpha, alpha2], [alpha2, tables.mul[alpha2][alpha2]]]
        )
        self.line = projective_line(GF8)
        self.rng = np.random.default_rng(11)

    def _maps(self, theta, S0, S1):
        perm = self.line.permutation(theta)
        return frozenset(perm[c] for c in S0.codes()) == S1.codes()

    def test_finds_projectivity(self):
        S0 = Splash.from_linear_set(self.club)
        for _ in range(5):
            S1 = moved(self.club, random_collineation(GF8, 2, self.rng))
            certificate = search_equivalence(S0, S1)
            assert certificate.equivalent
            assert certificate.witness.is_projectivity
            assert self._maps(certificate.witness, S0, S1)
            assert 1 <= certificate.nodes <= certificate.candidates

    def test_finds_semilinear_map(self):
        S0 = Splash.from_linear_set(self.scattered)
        g = random_collineation(GF8, 2, self.rng, "PΓL")
        S1 = moved(self.scattered, g)
        theta = splash_equivalence(S0, S1, "PΓL")
        assert theta is not None
        assert self._maps(theta, S0, S1)

    def test_pruned_by_size(self):
        certificate = search_equivalence(Splash.from_linear_set(self.club), Splash.from_linear_set(self.scattered))
        assert not certificate.equivalent
        assert certificate.pruned
        assert certificate.nodes == 0

    def test_workers_do_not_change_witness(self):
        S0 = Splash.from_linear_set(self.scattered)
        S1 = moved(self.scattered, random_collineation(GF8, 2, self.rng))
        single = search_equivalence(S0, S1, workers=1)
        threaded = search_equivalence(S0, S1, workers=2)
        assert single.witness == threaded.witness
        assert single.nodes == threaded.nodes

    def test_budget_exhausted(self):
        S0 = Splash.from_linear_set(self.club)
        with pytest.raises(SearchBudgetExceeded) as info:
            search_equivalence(S0, S0, budget=0)
        assert info.value.nodes == 0
        assert info.value.partial["witness"] is None

    def test_budget_cut_in_last_batch(self):
        S0 = Splash.from_linear_set(self.club)
        for _ in range(20):
            S1 = moved(self.club, random_collineation(GF8, 2, self.rng))
            full = search_equivalence(S0, S1)
            if full.nodes > 1:
                break
        assert full.nodes > 1
        assert full.candidates <= 64
        with pytest.raises(SearchBudgetExceeded) as info:
            search_equivalence(S0, S1, budget=full.nodes - 1)
        assert info.value.nodes == full.nodes - 1
        assert info.value.partial["candidates"] == full.candidates

    def test_mixed_fields(self):
        other = Splash.from_linear_set(
            linear_set_from_vectors(ReductionContext(2, 2, 2), [[0, 1], [1, 0]])
        )
        with pytest.raises(MixedFields):
            search_equivalence(Splash.from_linear_set(self.club), other)

    def test_agrees_with_bruteforce(self):
        S0 = Splash.from_linear_set(self.club)
        for target in (self.club, self.scattered):
            S1 = moved(target, random_collineation(GF8, 2, self.rng))
            for group in ("PGL", "PΓL"):
                fast = search_equivalence(S0, S1, group).equivalent
                slow = splash_equivalence_bruteforce(S0, S1, group) is not None
                assert fast == slow


class TestGroups:
    """Tests de los exponentes de cada grupo."""

    def test_exponents(self):
        assert list(group_exponents(GF8, "PGL")) == [0]
        assert list(group_exponents(GF8, "PΓL")) == [0, 1, 2]

    def test_unknown_group(self):
        with pytest.raises(ParameterDomain):
            group_exponents(GF8, "AGL")

    def test_bruteforce_order_limit(self):
        splash = Splash.from_linear_set(linear_set_from_vectors(ReductionContext(2, 3, 3), [[0, 1], [1, 0]]))
        with pytest.raises(ParameterDomain):
            splash_equivalence_bruteforce(splash, splash)
