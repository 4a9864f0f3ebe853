"""
Todo splash es un conjunto lineal y todo conjunto lineal de rango r que
genera la recta es el splash de una q-subgeometría de PG(r-1, q^n).

Con l = ⟨a, b⟩ y un hiperplano de coordenadas duales c, la intersección
es (b·c)a − (a·c)b, es decir el punto (b·c : −a·c) en el marco (a, b).
Esa aplicación es lineal sobre GF(q^n), de modo que el splash es B(U)
con U la imagen GF(q)-lineal de la subgeometría dual.
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.errors import DegenerateLinearSet, InvariantViolation, ParameterDomain
from src.fieldred import LinearSet, ReductionContext, linear_set_from_vectors, theta
from src.gf import to_ints
from src.projgeom import LineFrame, ProjSubspace, linalg
from src.splash.splash import Splash, compute_splash
from src.subgeo import Subgeometry, canonical_subgeometry

logger = logging.getLogger(__name__)


def _check_counts(splash: Splash, linear: LinearSet) -> None:
    expected = {p: theta(w, linear.ctx.q) for p, w in linear.weights.items()}
    if splash.line_counts() != expected:
        raise InvariantViolation("El splash y el conjunto lineal no coinciden en puntos o pesos")


def splash_to_linear_subspace(splash: Splash) -> LinearSet:
    """Conjunto lineal B(U) = S, con U construido por la ruta dual."""
    s = splash.provenance
    if s is None:
        raise ParameterDomain("El splash no tiene subgeometría de procedencia")
    gf = s.field.gf
    duals = gf(s.dual_subgeometry().basis_array())
    a = gf(np.array(splash.frame.a, dtype=np.int64))
    b = gf(np.array(splash.frame.b, dtype=np.int64))
    projection = gf(np.stack([to_ints(b), to_ints(-a)], axis=1))
    vectors = duals @ projection
    ctx = ReductionContext(2, s.n, s.q, s.field)
    linear = linear_set_from_vectors(ctx, vectors)
    if linear.rank != s.r:
        raise InvariantViolation(f"Rango {linear.rank} distinto de r={s.r}")
    _check_counts(splash, linear)
    return linear


@dataclass(frozen=True)
class SplashRealization:
    """Subgeometría, recta y marco cuyo splash reproduce el conjunto lineal."""
    linear_set: LinearSet
    subgeometry: Subgeometry
    line: ProjSubspace
    frame: LineFrame
    splash: Splash

    def to_dict(self) -> dict:
        return {
            "linear_set": self.linear_set.to_dict(),
            "subgeometry": self.subgeometry.to_dict(),
            "line": self.line.to_dict(),
            "frame": self.frame.to_dict(),
            "splash": self.splash.to_dict(),
        }


def realize_linear_set_as_splash(linear: LinearSet) -> SplashRealization:
    """
    Para U = ⟨v_1, …, v_r⟩_q: π0 canónica y l = ⟨a, b⟩ con a = −(columna 2 de V)
    y b = columna 1, de modo que la ruta dual devuelve exactamente V. En rango 2
    la subrecta es el splash de sí misma sobre PG(1, q^n).
    """
    ctx = linear.ctx
    ext = ctx.ext
    if len(linear.points) < 2:
        raise DegenerateLinearSet("El conjunto lineal es un único punto")
    vectors = linear.basis_vectors()
    r = linear.rank
    if r == 2:
        subgeometry = Subgeometry(ctx.tower, vectors)
        line = ProjSubspace.full(ext, 1)
        frame = LineFrame.default(line)
    else:
        subgeometry = canonical_subgeometry(r, ctx.q, ext)
        gf = ext.gf
        a = -gf(vectors[:, 1])
        b = gf(vectors[:, 0])
        frame = LineFrame.from_vectors(ext, a, b)
        line = frame.line
        if linalg.rank(ext, frame.basis(), r) != 2:
            raise DegenerateLinearSet("Los vectores de U generan un único punto")
    splash = compute_splash(subgeometry, line, frame)
    _check_counts(splash, linear)
    logger.debug(f"Conjunto lineal de rango {r} realizado como splash {splash.kind.value}")
    return SplashRealization(linear, subgeometry, line, frame, splash)
