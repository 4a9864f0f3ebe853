"""
Tests de reducción de cuerpo, spread desarguesiana y conjuntos lineales.
"""

import sys
from pathlib import Path

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT))

from src.errors import ParameterDomain, ZeroSubspace
from src.fieldred import (
    LinearSetKind,
    LinearSetProfile,
    ReductionContext,
    b_operator,
    classify_linear_set,
    desarguesian_spread,
    field_reduce_point,
    gaussian_binomial,
    iter_subspaces,
    linear_set,
    linear_set_from_vectors,
    linear_set_profiles,
    random_subspace,
    rref_block,
    theta,
)
from src.projgeom import ProjPoint, ProjSubspace, enumerate_points, projective_line


class TestFieldReduction:
    """Tests de F y B sobre PG(1, 8) -> PG(5, 2)."""

    def setup_method(self):
        self.ctx = ReductionContext(2, 3, 2)

    def test_spread_partitions_points(self):
        elements = list(desarguesian_spread(self.ctx))
        assert len(elements) == 9
        seen = set()
        for element in elements:
            assert element.subspace.dim == 2
            points = set(enumerate_points(element.subspace))
            assert not points & seen
            seen |= points
        assert len(seen) == 63

    def test_b_inverts_f(self):
        for x in enumerate_points(ProjSubspace.full(self.ctx.ext, 1)):
            assert b_operator(self.ctx, field_reduce_point(self.ctx, x).subspace) == {x}

    def test_reduce_wrong_point(self):
        with pytest.raises(ParameterDomain):
            field_reduce_point(self.ctx, ProjPoint(self.ctx.ext, (1, 0, 0)))

    def test_expand_contract(self):
        vectors = np.array([[1, 2], [3, 7]], dtype=np.int64)
        assert self.ctx.contract(self.ctx.expand(vectors)).tolist() == vectors.tolist()

    def test_plane_spread_size(self):
        ctx = ReductionContext(3, 2, 2)
        assert sum(1 for _ in desarguesian_spread(ctx)) == theta(3, 4)


class TestLinearSet:
    """Tests de pesos y clasificación de conjuntos lineales."""

    def setup_method(self):
        self.ctx = ReductionContext(2, 3, 2)
        tables = self.ctx.ext.tables
        self.alpha = self.ctx.tower.alpha
        self.alpha2 = tables.mul[self.alpha][self.alpha]
        self.alpha4 = tables.mul[self.alpha2][self.alpha2]

    def test_club(self):
        linear = linear_set_from_vectors(self.ctx, [[1, 0], [self.alpha, 0], [0, 1]])
        cls = classify_linear_set(linear)
        assert linear.rank == 3
        assert len(linear) == 5
        assert cls.kind == LinearSetKind.CLUB
        assert cls.head == ProjPoint(self.ctx.ext, (1, 0))
        assert linear.weight(cls.head) == 2

    def test_scattered(self):
        vectors = [[1, 1], [self.alpha, self.alpha2], [self.alpha2, self.alpha4]]
        linear = linear_set_from_vectors(self.ctx, vectors)
        assert len(linear) == 7
        assert classify_linear_set(linear).kind == LinearSetKind.SCATTERED

    def test_subline(self):
        linear = linear_set_from_vectors(self.ctx, [[1, 0], [0, 1]])
        assert len(linear) == 3
        assert classify_linear_set(linear).kind == LinearSetKind.SUBLINE

    def test_weight_identity(self):
        linear = linear_set_from_vectors(self.ctx, [[1, 0], [self.alpha, 0], [0, 1]])
        assert sum(theta(w, 2) for w in linear.weights.values()) == theta(linear.rank, 2)

    def test_zero_subspace(self):
        with pytest.raises(ZeroSubspace):
            linear_set_from_vectors(self.ctx, [[0, 0]])

    def test_requires_projective_line(self):
        ctx = ReductionContext(3, 2, 2)
        with pytest.raises(ParameterDomain):
            linear_set(ctx, ProjSubspace.full(ctx.base, ctx.reduced_dim))

    def test_basis_vectors_span_same_set(self):
        linear = linear_set_from_vectors(self.ctx, [[1, 0], [self.alpha, 0], [0, 1]])
        assert linear_set_from_vectors(self.ctx, linear.basis_vectors()) == linear


class TestEnumeration:
    """Tests de enumeración de subespacios y perfiles por lotes."""

    def test_gaussian_binomial(self):
        assert gaussian_binomial(6, 3, 2) == 1395
        assert gaussian_binomial(4, 2, 3) == 130
        assert gaussian_binomial(3, 4, 2) == 0

    def test_iter_subspaces_count(self):
        total = sum(block.shape[0] for block in iter_subspaces(2, 3, 6))
        assert total == 1395

    def test_block_without_free_entries(self):
        block = rref_block(2, (3, 4, 5), 6)
        assert block.shape == (1, 3, 6)
        assert block[0].tolist() == [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]

    def test_iter_subspaces_domain(self):
        with pytest.raises(ParameterDomain):
            next(iter_subspaces(2, 7, 6))

    def test_profiles_match_linear_sets(self):
        ctx = ReductionContext(2, 3, 2)
        line = projective_line(ctx.ext)
        block = next(iter_subspaces(2, 3, 6))[:20]
        for basis, profile in zip(block, linear_set_profiles(ctx, block)):
            linear = linear_set_from_vectors(ctx, ctx.contract(basis))
            assert profile.codes == tuple(sorted(line.code(p) for p in linear.points))
            assert sum(theta(w, 2) for w in profile.weights) == 7

    def test_club_head(self):
        profile = LinearSetProfile(codes=(0, 1, 2, 3, 8), weights=(2, 1, 1, 1, 1))
        assert profile.club_head(3) == 0
        assert profile.club_head(4) is None

    def test_random_subspace_has_full_rank(self):
        ctx = ReductionContext(2, 3, 2)
        rng = np.random.default_rng(7)
        basis = random_subspace(ctx.base, 3, 6, rng)
        linear = linear_set_from_vectors(ctx, ctx.contract(basis))
        assert linear.rank == 3
