"""Coordenadas de splashes tangentes, subgeometrías con el mismo splash y equivalencia de splashes."""

from src.equiv.census import OrbitCensus, OrbitGraph, club_orbit_census, line_generators
from src.equiv.construction import (
    SameSplashWitness,
    check_witness,
    construct_same_splash_pair,
    find_projectivity_same_splash,
)
from src.equiv.coordinates import SplashCoordinates, splash_coordinates
from src.equiv.lifting import (
    EquivalenceLift,
    lift_equivalence,
    lift_line_collineation,
    random_line_stabilizer,
    restrict_to_line,
    transport_realization,
)
from src.equiv.search import (
    GROUPS,
    EquivalenceCertificate,
    group_exponents,
    random_collineation,
    search_equivalence,
    splash_equivalence,
    splash_equivalence_bruteforce,
)
from src.equiv.stuple import (
    SolutionCertificate,
    STuple,
    ambiguity_certificate,
    hyperplane_through,
    solve_s_tuple,
)

__all__ = [
    "GROUPS",
    "EquivalenceCertificate",
    "EquivalenceLift",
    "OrbitCensus",
    "OrbitGraph",
    "STuple",
    "SameSplashWitness",
    "SolutionCertificate",
    "SplashCoordinates",
    "ambiguity_certificate",
    "check_witness",
    "club_orbit_census",
    "construct_same_splash_pair",
    "find_projectivity_same_splash",
    "group_exponents",
    "hyperplane_through",
    "lift_equivalence",
    "lift_line_collineation",
    "line_generators",
    "random_collineation",
    "random_line_stabilizer",
    "restrict_to_line",
    "search_equivalence",
    "solve_s_tuple",
    "splash_coordinates",
    "splash_equivalence",
    "splash_equivalence_bruteforce",
    "transport_realization",
]
