"""Reducción de cuerpo, spread desarguesiana y conjuntos lineales sobre PG(1, q^n)."""

from src.fieldred.enumeration import (
    LinearSetProfile,
    gaussian_binomial,
    iter_subspaces,
    linear_set_profiles,
    pivot_patterns,
    random_subspace,
    rref_block,
)
from src.fieldred.linear_set import (
    LinearSet,
    LinearSetClass,
    LinearSetKind,
    classify_linear_set,
    classify_weights,
    linear_set,
    linear_set_from_vectors,
    point_weights,
    theta,
)
from src.fieldred.reduction import (
    ReductionContext,
    SpreadElement,
    b_operator,
    contract_points,
    desarguesian_spread,
    field_reduce_point,
    reduction_context,
)

__all__ = [
    "LinearSet",
    "LinearSetClass",
    "LinearSetKind",
    "LinearSetProfile",
    "ReductionContext",
    "SpreadElement",
    "b_operator",
    "classify_linear_set",
    "classify_weights",
    "contract_points",
    "desarguesian_spread",
    "field_reduce_point",
    "gaussian_binomial",
    "iter_subspaces",
    "linear_set",
    "linear_set_from_vectors",
    "linear_set_profiles",
    "pivot_patterns",
    "point_weights",
    "random_subspace",
    "reduction_context",
    "rref_block",
    "theta",
]
