"""Splashes de subgeometrías, subrectas, clubs y conteos de splashes tangentes."""

from src.splash.linearity import SplashRealization, realize_linear_set_as_splash, splash_to_linear_subspace
from src.splash.splash import Splash, SplashKind, admissible_lines, compute_splash, weight_from_count
from src.splash.subline import (
    ClosureCensus,
    NonLinearWitness,
    Subline,
    closure_census,
    closure_test,
    q2_nonlinear_witness,
    subfield_codes,
    subline_closure,
    subline_through,
)
from src.splash.tangent import (
    CountingIdentities,
    admissible_tuples,
    count_tangent_splashes,
    counting_identities,
    enumerate_tangent_splashes,
    tangent_splash_through,
)

__all__ = [
    "ClosureCensus",
    "CountingIdentities",
    "NonLinearWitness",
    "Splash",
    "SplashKind",
    "SplashRealization",
    "Subline",
    "admissible_lines",
    "admissible_tuples",
    "closure_census",
    "closure_test",
    "compute_splash",
    "count_tangent_splashes",
    "counting_identities",
    "enumerate_tangent_splashes",
    "q2_nonlinear_witness",
    "realize_linear_set_as_splash",
    "splash_to_linear_subspace",
    "subfield_codes",
    "subline_closure",
    "subline_through",
    "tangent_splash_through",
    "weight_from_count",
]
