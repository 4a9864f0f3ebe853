"""
Tests del paso entre colineaciones de la recta y del plano ambiente.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.equiv import (
    lift_equivalence,
    lift_line_collineation,
    random_collineation,
    random_line_stabilizer,
    restrict_to_line,
    search_equivalence,
    transport_realization,
)
from src.errors import InvariantViolation
from src.fieldred import ReductionContext, linear_set_from_vectors
from src.projgeom import Collineation, apply, linalg
from src.splash import realize_linear_set_as_splash


class TestLineRestriction:
    """Tests de θ̄ y de su restricción a l."""

    def setup_method(self):
        ctx = ReductionContext(2, 3, 2)
        self.ext = ctx.ext
        linear = linear_set_from_vectors(ctx, [[0, 1], [1, 0], [ctx.tower.alpha, 0]])
        self.realization = realize_linear_set_as_splash(linear)
        self.rng = np.random.default_rng(5)

    def test_lift_restricts_to_theta(self):
        frame = self.realization.frame
        for group in ("PGL", "PΓL"):
            theta = random_collineation(self.ext, 2, self.rng, group)
            lifted = lift_line_collineation(theta, frame, 3)
            assert apply(lifted, self.realization.line) == self.realization.line
            assert restrict_to_line(lifted, frame) == theta

    def test_stabilizer_fixes_line(self):
        for _ in range(5):
            tau = random_line_stabilizer(self.realization.frame, 3, self.rng, "PΓL")
            assert apply(tau, self.realization.line) == self.realization.line

    def test_restriction_needs_invariant_line(self):
        frame = self.realization.frame
        G = self.ext.gf(linalg.complete_basis(self.ext, frame.basis(), 3))
        swap = self.ext.gf(np.array([[0, 0, 1], [0, 1, 0], [1, 0, 0]]))
        leaving = Collineation.from_array(self.ext, np.linalg.inv(G) @ swap @ G)
        with pytest.raises(InvariantViolation):
            restrict_to_line(leaving, frame)


class TestLiftEquivalence:
    """Tests de τ con l^τ = l y π0^τ = π1."""

    def setup_method(self):
        self.ctx = ReductionContext(2, 3, 2)
        self.linear = linear_set_from_vectors(self.ctx, [[0, 1], [1, 0], [self.ctx.tower.alpha, 0]])
        self.R0 = realize_linear_set_as_splash(self.linear)
        self.rng = np.random.default_rng(23)

    def _image(self, g):
        return realize_linear_set_as_splash(
            linear_set_from_vectors(self.ctx, g.map_vectors(self.linear.basis_vectors()))
        )

    def test_transport_keeps_line_coordinates(self):
        R1 = self._image(random_collineation(self.ctx.ext, 2, self.rng))
        moved = transport_realization(R1, self.R0)
        assert moved.line == self.R0.line
        assert moved.splash.line_counts() == R1.splash.line_counts()

    def test_lift(self):
        for _ in range(3):
            R1 = self._image(random_collineation(self.ctx.ext, 2, self.rng))
            theta = search_equivalence(self.R0.splash, R1.splash).witness
            lift = lift_equivalence(self.R0, R1, theta)
            assert apply(lift.tau, self.R0.line) == self.R0.line
            assert self.R0.subgeometry.transform(lift.tau) == lift.target.subgeometry
            assert restrict_to_line(lift.theta_bar, self.R0.frame) == theta
            assert "tau" in lift.to_dict()
