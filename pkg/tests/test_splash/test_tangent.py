"""
Tests de splashes tangentes: construcción por puntos, conteos y enumeración.
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.errors import GeneralPositionViolated, NotDistinct, ParameterDomain, RankExceedsN
from src.gf import field_create
from src.projgeom import projective_line
from src.splash import (
    SplashKind,
    admissible_tuples,
    count_tangent_splashes,
    counting_identities,
    enumerate_tangent_splashes,
    tangent_splash_through,
)

GF8 = field_create(2, 3)
GF27 = field_create(3, 3)


class TestCountingFormulas:
    """Tests de las fórmulas de conteo."""

    def test_known_values(self):
        assert count_tangent_splashes(2, 3, 3) == 14
        assert count_tangent_splashes(2, 3, 3, per_centre=False) == 126
        assert count_tangent_splashes(3, 3, 3) == 39
        assert count_tangent_splashes(3, 3, 3, per_centre=False) == 1092
        assert count_tangent_splashes(2, 4, 3) == 140
        assert count_tangent_splashes(2, 4, 3, per_centre=False) == 2380

    def test_domain(self):
        with pytest.raises(ParameterDomain):
            count_tangent_splashes(2, 3, 4)
        with pytest.raises(ParameterDomain):
            count_tangent_splashes(2, 3, 2)

    def test_identities(self):
        ids = counting_identities(2, 3, 3)
        assert ids.tuples_per_centre == 336
        assert ids.tuples_per_splash == 24
        assert ids.splashes_per_centre == 14
        assert ids.consistent
        assert ids.to_dict()["K"] == 336

    def test_admissible_tuple_count(self):
        T = projective_line(GF8).point(0)
        assert sum(1 for _ in admissible_tuples(T, 2, 3, 3, as_codes=True)) == 336


class TestTangentSplashThrough:
    """Tests del splash tangente determinado por T y U_1, …, U_r."""

    def setup_method(self):
        self.line = projective_line(GF8)
        self.T = self.line.point(0)

    def test_construction(self):
        points = next(admissible_tuples(self.T, 2, 3, 3))
        splash = tangent_splash_through(self.T, points, 2)
        assert splash.kind == SplashKind.TANGENT
        assert splash.centre == self.T
        assert len(splash) == 5
        assert set(points) <= set(splash.points)

    def test_rank_exceeds_n(self):
        points = [self.line.point(c) for c in (1, 2, 3, 4)]
        with pytest.raises(RankExceedsN):
            tangent_splash_through(self.T, points, 2)

    def test_centre_among_points(self):
        points = [self.line.point(c) for c in (0, 1, 2)]
        with pytest.raises(NotDistinct):
            tangent_splash_through(self.T, points, 2)

    def test_general_position(self):
        line = projective_line(GF27)
        # U = ⟨v + c t⟩ con c = 1 y c = 2, dependientes sobre GF(3)
        points = [line.point(c) for c in (line.infinity, 1, 2)]
        with pytest.raises(GeneralPositionViolated):
            tangent_splash_through(line.point(0), points, 3)

    def test_every_tuple_lies_in_exactly_one_club(self):
        clubs = [c.codes() for c in enumerate_tangent_splashes(2, 3, 3, centre=self.T)]
        assert len(clubs) == 14
        for codes in admissible_tuples(self.T, 2, 3, 3, as_codes=True):
            assert sum(set(codes) <= club for club in clubs) == 1


class TestEnumeration:
    """Tests de la enumeración exhaustiva de clubs."""

    def test_pg1_8(self):
        clubs = list(enumerate_tangent_splashes(2, 3, 3))
        assert len(clubs) == 126
        assert len(set(clubs)) == 126
        assert all(c.kind == SplashKind.TANGENT and len(c) == 5 for c in clubs)

    @pytest.mark.slow
    def test_workers_do_not_change_output(self):
        # Los procesos hijos arrancan con spawn tras haber usado galois en este proceso
        single = [c.codes() for c in enumerate_tangent_splashes(2, 3, 3)]
        parallel = [c.codes() for c in enumerate_tangent_splashes(2, 3, 3, workers=2)]
        assert single == parallel

    def test_field_order_limit(self):
        with pytest.raises(ParameterDomain):
            list(enumerate_tangent_splashes(3, 3, 3, max_field_order=16))

    @pytest.mark.slow
    def test_pg1_27(self):
        clubs = list(enumerate_tangent_splashes(3, 3, 3))
        assert len(clubs) == 1092
        per_centre = {}
        line = projective_line(GF27)
        for club in clubs:
            code = line.code(club.line_centre())
            per_centre[code] = per_centre.get(code, 0) + 1
        assert set(per_centre.values()) == {39}

    @pytest.mark.slow
    def test_pg1_16(self):
        assert sum(1 for _ in enumerate_tangent_splashes(2, 4, 3)) == 2380
