"""
Tests del cálculo de splashes y su correspondencia con conjuntos lineales.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.errors import DegenerateLinearSet, InvariantViolation, LineInExtendedHyperplane, ParameterDomain
from src.fieldred import (
    LinearSetKind,
    ReductionContext,
    classify_linear_set,
    linear_set_from_vectors,
    random_subspace,
    theta,
)
from src.gf import field_create, field_tower
from src.projgeom import ProjPoint, ProjSubspace
from src.splash import (
    Splash,
    SplashKind,
    admissible_lines,
    compute_splash,
    realize_linear_set_as_splash,
    splash_to_linear_subspace,
    weight_from_count,
)
from src.subgeo import canonical_subgeometry

GF8 = field_create(2, 3)


class TestComputeSplash:
    """Tests del splash de PG(2, 2) ⊂ PG(2, 8)."""

    def setup_method(self):
        self.s = canonical_subgeometry(3, 2, GF8)
        self.alpha = field_tower(2, 3).alpha

    def test_tangent_splash(self):
        line = ProjSubspace.from_rows(GF8, 2, [[1, 0, 0], [0, 1, self.alpha]])
        splash = compute_splash(self.s, line)
        assert splash.kind == SplashKind.TANGENT
        assert splash.centre == ProjPoint(GF8, (1, 0, 0))
        assert len(splash) == 5
        assert splash.hyperplane_counts[splash.centre] == 3
        assert sum(splash.hyperplane_counts.values()) == 7

    def test_external_splash_counts_every_hyperplane(self):
        line = ProjSubspace.from_rows(GF8, 2, [[1, self.alpha, 0], [0, 1, self.alpha]])
        splash = compute_splash(self.s, line)
        assert splash.kind == SplashKind.EXTERNAL
        assert splash.centre is None
        assert sum(splash.hyperplane_counts.values()) == 7

    def test_line_in_extended_hyperplane(self):
        line = ProjSubspace.from_rows(GF8, 2, [[1, 0, 0], [0, 1, 0]])
        with pytest.raises(LineInExtendedHyperplane):
            compute_splash(self.s, line)

    def test_admissible_lines_of_plane(self):
        lines = list(admissible_lines(self.s, limit=100))
        assert len(lines) == 73 - 7

    def test_admissible_lines_sampling_needs_rng(self):
        with pytest.raises(ParameterDomain):
            list(admissible_lines(self.s, limit=10))

    def test_line_counts_in_frame_coordinates(self):
        line = ProjSubspace.from_rows(GF8, 2, [[1, 0, 0], [0, 1, self.alpha]])
        splash = compute_splash(self.s, line)
        assert splash.line_centre() == ProjPoint(GF8, (1, 0))
        assert splash.to_dict()["centre"] == str(ProjPoint(GF8, (1, 0)))


class TestSplashLinearity:
    """Tests de splash -> conjunto lineal y conjunto lineal -> splash."""

    def setup_method(self):
        self.s = canonical_subgeometry(3, 2, GF8)
        self.ctx = ReductionContext(2, 3, 2)
        self.alpha = self.ctx.tower.alpha

    def test_every_line_gives_rank_three_linear_set(self):
        for line in admissible_lines(self.s, limit=100):
            splash = compute_splash(self.s, line)
            linear = splash_to_linear_subspace(splash)
            assert linear.rank == 3
            for point, count in splash.line_counts().items():
                assert count == theta(linear.weight(point), 2)

    def test_tangent_iff_club(self):
        for line in admissible_lines(self.s, limit=100):
            splash = compute_splash(self.s, line)
            cls = classify_linear_set(splash_to_linear_subspace(splash))
            is_club = cls.kind == LinearSetKind.CLUB and cls.head == splash.line_centre()
            assert (splash.kind == SplashKind.TANGENT) == is_club

    def test_scattered_iff_all_counts_one(self):
        for line in admissible_lines(self.s, limit=100):
            splash = compute_splash(self.s, line)
            scattered = classify_linear_set(splash_to_linear_subspace(splash)).kind == LinearSetKind.SCATTERED
            assert scattered == (splash.kind == SplashKind.EXTERNAL and set(splash.hyperplane_counts.values()) == {1})

    def test_realize_club(self):
        linear = linear_set_from_vectors(self.ctx, [[0, 1], [1, 0], [self.alpha, 0]])
        realization = realize_linear_set_as_splash(linear)
        assert realization.splash.kind == SplashKind.TANGENT
        assert realization.splash.line_centre() == ProjPoint(self.ctx.ext, (1, 0))
        assert splash_to_linear_subspace(realization.splash) == linear

    def test_realize_random_subspaces(self):
        rng = np.random.default_rng(2014)
        for _ in range(20):
            basis = random_subspace(self.ctx.base, 3, 6, rng)
            linear = linear_set_from_vectors(self.ctx, self.ctx.contract(basis))
            try:
                realization = realize_linear_set_as_splash(linear)
            except DegenerateLinearSet:
                continue
            assert splash_to_linear_subspace(realization.splash).weights == linear.weights

    def test_synthetic_splash_without_provenance(self):
        linear = linear_set_from_vectors(self.ctx, [[0, 1], [1, 0], [self.alpha, 0]])
        splash = Splash.from_linear_set(linear)
        assert splash.kind == SplashKind.TANGENT
        with pytest.raises(ParameterDomain):
            splash_to_linear_subspace(splash)


class TestWeightFromCount:
    """Tests de la inversión de θ."""

    def test_values(self):
        assert weight_from_count(1, 2) == 1
        assert weight_from_count(7, 2) == 3
        assert weight_from_count(13, 3) == 3

    def test_not_a_theta(self):
        with pytest.raises(InvariantViolation):
            weight_from_count(5, 2)
