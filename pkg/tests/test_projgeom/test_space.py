"""
Tests de puntos, subespacios, marcos de recta y colineaciones.
"""

import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.errors import AmbientMismatch, NonInvertibleMatrix, NotDistinct, NotInSpan
from src.gf import field_create
from src.projgeom import (
    Collineation,
    LineFrame,
    ProjPoint,
    ProjSubspace,
    apply,
    dual,
    enumerate_hyperplanes,
    enumerate_points,
    linalg,
    meet,
    projective_line,
    span,
)

GF4 = field_create(2, 2)
GF8 = field_create(2, 3)


class TestProjPoint:
    """Tests de representantes normalizados."""

    def test_scalar_multiples_are_equal(self):
        for scale in range(1, 8):
            vector = [GF8.tables.mul[scale][c] for c in (1, 3, 5)]
            assert ProjPoint.from_vector(GF8, vector) == ProjPoint(GF8, (1, 3, 5))

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            ProjPoint.from_vector(GF8, [0, 0, 0])

    def test_unnormalized_rejected(self):
        with pytest.raises(ValueError):
            ProjPoint(GF8, (2, 1, 0))

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(0, 7), min_size=3, max_size=3).filter(any), st.integers(1, 7))
    def test_representative_invariance(self, coords, scale):
        scaled = [GF8.tables.mul[scale][c] for c in coords]
        assert ProjPoint.from_vector(GF8, coords) == ProjPoint.from_vector(GF8, scaled)


class TestProjSubspace:
    """Tests de subespacios, dualidad y enumeración."""

    def test_point_counts(self):
        plane = ProjSubspace.full(GF4, 2)
        assert len(list(enumerate_points(plane))) == 21
        assert len(list(enumerate_hyperplanes(GF4, 2))) == 21

    def test_span_and_meet(self):
        p = ProjPoint(GF8, (1, 0, 0))
        q = ProjPoint(GF8, (0, 1, 0))
        line = span([p, q])
        assert line.dim == 1
        assert line.contains(p) and line.contains(q)
        other = span([ProjPoint(GF8, (0, 0, 1)), ProjPoint(GF8, (1, 1, 0))])
        assert meet(line, other).dim == 0

    def test_dual_is_involution(self):
        line = span([ProjPoint(GF8, (1, 2, 3)), ProjPoint(GF8, (0, 1, 4))])
        assert dual(dual(line)) == line
        assert dual(line).dim == 0

    def test_contains_vectors_mask(self):
        line = ProjSubspace.from_rows(GF8, 2, [[1, 0, 0], [0, 1, 0]])
        mask = line.contains_vectors([[1, 1, 0], [0, 0, 1], [3, 5, 0]])
        assert mask.tolist() == [True, False, True]

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatch):
            span([ProjPoint(GF8, (1, 0)), ProjPoint(GF8, (1, 0, 0))])

    def test_complete_basis_and_solve(self):
        rows = [[1, 2, 3]]
        basis = linalg.complete_basis(GF8, rows, 3)
        assert linalg.rank(GF8, basis, 3) == 3
        coeffs = linalg.solve_in_span(GF8, [[1, 0, 0], [0, 1, 0]], [5, 6, 0])
        assert coeffs.tolist() == [5, 6]
        with pytest.raises(NotInSpan):
            linalg.solve_in_span(GF8, [[1, 0, 0], [0, 1, 0]], [0, 0, 1])

    def test_singular_inverse(self):
        with pytest.raises(NonInvertibleMatrix):
            linalg.inverse(GF8, [[1, 1], [1, 1]])


class TestLineFrame:
    """Tests de la identificación de una recta con PG(1, F)."""

    def setup_method(self):
        self.frame = LineFrame.from_vectors(GF8, [1, 2, 0], [0, 3, 1])

    def test_round_trip(self):
        points = list(enumerate_points(self.frame.line))
        coords = self.frame.to_line(points)
        assert sorted(self.frame.from_line(coords)) == sorted(points)
        assert len(set(coords)) == 9

    def test_basis_vectors_are_frame_points(self):
        a = ProjPoint.from_vector(GF8, self.frame.a)
        b = ProjPoint.from_vector(GF8, self.frame.b)
        assert self.frame.to_line([a, b]) == [ProjPoint(GF8, (1, 0)), ProjPoint(GF8, (0, 1))]

    def test_point_outside_line(self):
        with pytest.raises(NotInSpan):
            self.frame.to_line([ProjPoint(GF8, (0, 1, 0))])


class TestCollineation:
    """Tests de colineaciones y su acción."""

    def setup_method(self):
        self.a = Collineation.from_array(GF8, [[1, 2], [0, 3]])
        self.frob = Collineation.frobenius(GF8, 2)

    def test_singular_rejected(self):
        with pytest.raises(NonInvertibleMatrix):
            Collineation.from_array(GF8, [[1, 1], [1, 1]])

    def test_inverse(self):
        for c in (self.a, self.frob, self.a.compose(self.frob)):
            assert c.compose(c.inverse()).projectively_equal(Collineation.identity(GF8, 2))

    def test_compose_order(self):
        composed = self.a.compose(self.frob)
        point = ProjPoint(GF8, (1, 5))
        assert apply(composed, point) == apply(self.frob, apply(self.a, point))

    def test_frobenius_exponent_wraps(self):
        assert Collineation.frobenius(GF8, 2, 3).is_projectivity

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 72), st.integers(0, 72), st.integers(0, 2))
    def test_incidence_preserved(self, p, h, exponent):
        point = list(enumerate_points(ProjSubspace.full(GF8, 2)))[p]
        plane_line = list(enumerate_hyperplanes(GF8, 2))[h]
        c = Collineation.from_array(GF8, [[1, 0, 2], [0, 1, 0], [3, 0, 1]], exponent)
        assert plane_line.contains(point) == apply(c, plane_line).contains(apply(c, point))


class TestProjectiveLine:
    """Tests del modelo codificado de PG(1, F)."""

    def setup_method(self):
        self.line = projective_line(GF8)

    def test_codes(self):
        assert self.line.size == 9
        assert self.line.rep(0) == (1, 0)
        assert self.line.rep(self.line.infinity) == (0, 1)
        for code in self.line.all_codes():
            assert self.line.code(self.line.point(code)) == code

    def test_subline_size(self):
        subline = self.line.subline(0, self.line.infinity, 1, [0, 1])
        assert len(subline) == 3
        assert subline == frozenset({0, self.line.infinity, 1})

    def test_subline_needs_distinct_points(self):
        with pytest.raises(NotDistinct):
            self.line.subline(0, 0, 1, [0, 1])

    def test_permutation_is_bijection(self):
        c = Collineation.from_array(GF8, [[1, 2], [3, 1]], 1)
        perm = self.line.permutation(c)
        assert sorted(perm) == list(self.line.all_codes())

    def test_frame_map(self):
        source = (0, self.line.infinity, 1)
        target = (2, 5, 7)
        for exponent in range(3):
            c = self.line.frame_map(source, target, exponent)
            perm = self.line.permutation(c)
            assert tuple(perm[s] for s in source) == target
            assert c.exponent == exponent

    def test_frame_matrix_maps_standard_frame(self):
        matrix = self.line.frame_matrix(2, 5, 7)
        c = Collineation.from_array(GF8, matrix)
        perm = self.line.permutation(c)
        assert (perm[0], perm[self.line.infinity], perm[1]) == (2, 5, 7)

    def test_identity_has_matrix_identity(self):
        assert np.array_equal(Collineation.identity(GF8, 3).array(), GF8.gf(np.eye(3, dtype=np.int64)))
