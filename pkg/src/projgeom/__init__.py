"""Geometría proyectiva PG(m, F): puntos, subespacios, dualidad y colineaciones."""

from src.projgeom.collineation import Collineation, apply
from src.projgeom.line import ProjectiveLine, projective_line
from src.projgeom.space import (
    LineFrame,
    ProjPoint,
    ProjSubspace,
    dual,
    enumerate_hyperplanes,
    enumerate_points,
    meet,
    span,
)

__all__ = [
    "Collineation",
    "LineFrame",
    "ProjPoint",
    "ProjSubspace",
    "ProjectiveLine",
    "apply",
    "dual",
    "enumerate_hyperplanes",
    "enumerate_points",
    "meet",
    "projective_line",
    "span",
]
