"""q-subgeometrías de PG(r-1, q^n), sus hiperplanos y posición de rectas."""

from src.subgeo.subgeometry import (
    LineKind,
    LinePosition,
    Subgeometry,
    SubHyperplane,
    canonical_subgeometry,
    line_position,
    sub_hyperplanes,
    subgeometries_through,
    subgeometry_from_frame,
)

__all__ = [
    "LineKind",
    "LinePosition",
    "SubHyperplane",
    "Subgeometry",
    "canonical_subgeometry",
    "line_position",
    "sub_hyperplanes",
    "subgeometries_through",
    "subgeometry_from_frame",
]
