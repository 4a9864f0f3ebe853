"""
Tests de subrectas, del test de clausura y del testigo no lineal para q = 2.
"""

import itertools
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.errors import NotCollinear, NotDistinct, ParameterDomain
from src.fieldred import LinearSetKind, ReductionContext, classify_linear_set, linear_set_from_vectors
from src.gf import field_create
from src.projgeom import ProjPoint, projective_line
from src.splash import (
    closure_census,
    closure_test,
    enumerate_tangent_splashes,
    q2_nonlinear_witness,
    subfield_codes,
    subline_closure,
    subline_through,
)

GF8 = field_create(2, 3)
GF16 = field_create(2, 4)
GF27 = field_create(3, 3)


class TestSubline:
    """Tests de subl_q(P1, P2, P3)."""

    def test_binary_subline_is_the_three_points(self):
        line = projective_line(GF8)
        p1, p2, p3 = (line.point(c) for c in (0, 5, 6))
        subline = subline_through(p1, p2, p3, 2)
        assert subline.points == frozenset({p1, p2, p3})
        assert subline.transversal.dim == 1

    def test_quaternary_subline_size(self):
        line = projective_line(GF16)
        subline = subline_through(line.point(0), line.point(line.infinity), line.point(1), 4)
        assert len(subline) == 5
        expected = {0, line.infinity} | {c for c in subfield_codes(GF16, 4) if c}
        assert line.codes(subline.points) == frozenset(expected)

    def test_plane_points_must_be_collinear(self):
        points = [ProjPoint(GF8, c) for c in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
        with pytest.raises(NotCollinear):
            subline_through(*points, 2)

    def test_points_must_be_distinct(self):
        p = ProjPoint(GF8, (1, 0))
        with pytest.raises(NotDistinct):
            subline_through(p, p, ProjPoint(GF8, (0, 1)), 2)


class TestClosure:
    """Tests del test de clausura T ∪ A."""

    def setup_method(self):
        self.line = projective_line(GF27)
        self.T = self.line.point(0)

    def test_subline_is_closed(self):
        members = [self.line.point(c) for c in (self.line.infinity, 1, 2)]
        assert closure_test(self.T, members, 3)

    def test_missing_point_breaks_closure(self):
        members = [self.line.point(c) for c in (self.line.infinity, 1)]
        assert not closure_test(self.T, members, 3)

    def test_centre_in_set(self):
        with pytest.raises(NotDistinct):
            closure_test(self.T, [self.T, self.line.point(1)], 3)

    def test_only_defined_on_the_projective_line(self):
        plane = [ProjPoint(GF27, c) for c in ((1, 0, 0), (0, 1, 0), (1, 1, 0))]
        with pytest.raises(NotCollinear):
            closure_test(plane[0], plane[1:], 3)
        with pytest.raises(NotCollinear):
            subline_closure(plane[0], plane[1:], 3)
        with pytest.raises(NotCollinear):
            closure_census(plane[0], 3, 10)

    def test_club_is_closed(self):
        ctx = ReductionContext(2, 3, 3)
        linear = linear_set_from_vectors(ctx, [[0, 1], [1, 0], [ctx.tower.alpha, 0]])
        cls = classify_linear_set(linear)
        assert cls.kind == LinearSetKind.CLUB
        others = [p for p in linear.points if p != cls.head]
        assert closure_test(cls.head, others, 3)

    def test_closure_of_subline_seeds(self):
        seeds = [self.line.point(c) for c in (self.line.infinity, 1)]
        closed = subline_closure(self.T, seeds, 3)
        assert self.line.codes(closed) == frozenset({0, self.line.infinity, 1, 2})

    def test_binary_clubs_are_closed(self):
        for club in enumerate_tangent_splashes(2, 3, 3):
            centre = club.line_centre()
            assert closure_test(centre, [p for p in club.line_points() if p != centre], 2)

    @pytest.mark.slow
    def test_closures_of_size_ten_are_clubs(self):
        census = closure_census(self.T, 3, 10)
        clubs = {c.codes() for c in enumerate_tangent_splashes(3, 3, 3, centre=self.T)}
        assert census.closures
        assert all(frozenset(closed) in clubs for closed in census.closures)


class TestNonLinearWitness:
    """Tests del conjunto cerrado no lineal para q = 2."""

    def test_every_five_set_of_pg1_8_is_a_club(self):
        clubs = {c.codes() for c in enumerate_tangent_splashes(2, 3, 3)}
        assert clubs == {frozenset(s) for s in itertools.combinations(range(9), 5)}

    def test_no_witness_on_pg1_8(self):
        with pytest.raises(ParameterDomain):
            q2_nonlinear_witness(3, 3)

    @pytest.mark.slow
    def test_witness_on_pg1_16(self):
        witness = q2_nonlinear_witness()
        assert len(witness.points) == 5
        assert witness.closure_holds
        assert witness.scanned_subspaces == 97155
        assert witness.centre == ProjPoint(GF16, (1, 0))
        clubs = {c.codes() for c in enumerate_tangent_splashes(2, 4, 3)}
        assert projective_line(GF16).codes(witness.points) not in clubs

    def test_domain(self):
        with pytest.raises(ParameterDomain):
            q2_nonlinear_witness(3, 4)
