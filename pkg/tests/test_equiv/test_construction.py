"""
Tests de subgeometrías distintas con el mismo splash tangente.
"""

import sys
from dataclasses import replace
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.equiv import check_witness, construct_same_splash_pair, find_projectivity_same_splash
from src.errors import GcdIsOne, InvariantViolation, NotTangent, ParameterDomain, RankExceedsN
from src.gf import field_create
from src.projgeom import Collineation, ProjSubspace, apply
from src.splash import SplashKind, compute_splash
from src.subgeo import canonical_subgeometry


class TestConstructSameSplashPair:
    """Tests del testigo π0 ≠ π1 cuando gcd(n, r-1) > 1."""

    @pytest.mark.parametrize("q,n,r", [(2, 2, 3), (3, 2, 3)])
    def test_witness(self, q, n, r):
        witness = construct_same_splash_pair(q, n, r)
        assert witness.pi0 != witness.pi1
        splash0 = compute_splash(witness.pi0, witness.line)
        splash1 = compute_splash(witness.pi1, witness.line)
        assert splash0.kind == SplashKind.TANGENT
        assert splash0.line_counts() == splash1.line_counts()
        check_witness(witness)

    def test_certificate_holds_both_solutions(self):
        witness = construct_same_splash_pair(2, 2, 3)
        assert not witness.certificate.unique
        assert witness.s in witness.certificate.solutions
        assert witness.s_prime in witness.certificate.solutions

    def test_kappa_fixes_line(self):
        witness = construct_same_splash_pair(2, 2, 3)
        assert apply(witness.kappa, witness.line) == witness.line
        assert witness.pi0.transform(witness.kappa) == witness.pi1
        assert witness.kappa.is_projectivity

    def test_to_dict(self):
        data = construct_same_splash_pair(2, 2, 3).to_dict()
        assert (data["q"], data["n"], data["r"]) == (2, 2, 3)
        assert data["kappa"]["group"] == "PGL"
        assert len(data["s"]) == 2

    def test_tampered_witness(self):
        witness = construct_same_splash_pair(2, 2, 3)
        tampered = replace(witness, pi1=witness.pi0)
        with pytest.raises(InvariantViolation):
            check_witness(tampered)

    def test_gcd_is_one(self):
        with pytest.raises(GcdIsOne):
            construct_same_splash_pair(2, 3, 3)

    def test_rank_below_three(self):
        with pytest.raises(ParameterDomain):
            construct_same_splash_pair(2, 3, 2)

    def test_rank_exceeds_n(self):
        with pytest.raises(RankExceedsN):
            construct_same_splash_pair(2, 2, 4)

    @pytest.mark.slow
    def test_pg1_16(self):
        witness = construct_same_splash_pair(2, 4, 3)
        check_witness(witness)
        assert len(witness.omegas) == 2


class TestFindProjectivity:
    """Tests de κ con l^κ = l y π0^κ = π1."""

    def test_maps_pi0_to_pi1(self):
        witness = construct_same_splash_pair(2, 2, 3)
        kappa = find_projectivity_same_splash(witness.pi0, witness.pi1, witness.line)
        assert witness.pi0.transform(kappa) == witness.pi1
        assert apply(kappa, witness.line) == witness.line

    def test_same_subgeometry_gives_identity(self):
        witness = construct_same_splash_pair(2, 2, 3)
        kappa = find_projectivity_same_splash(witness.pi0, witness.pi0, witness.line)
        assert kappa == Collineation.identity(witness.pi0.field, 3)

    def test_external_line(self):
        GF8 = field_create(2, 3)
        s = canonical_subgeometry(3, 2, GF8)
        alpha = s.tower.alpha
        line = ProjSubspace.from_rows(GF8, 2, [[1, alpha, 0], [0, 1, alpha]])
        with pytest.raises(NotTangent):
            find_projectivity_same_splash(s, s, line)
