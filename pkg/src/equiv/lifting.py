"""
Paso entre colineaciones de la recta y del espacio ambiente.

Una colineación θ de PG(1, q^n), leída en el marco (a, b) de l, se
extiende a θ̄ completando (a, b) a una base G: θ̄ = G^{-σ}·diag(K, I)·G.
Si S0^θ = S1, τ = θ̄ seguida de la κ que corrige la subgeometría
cumple l^τ = l y π0^τ = π1.
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.equiv.construction import find_projectivity_same_splash
from src.equiv.search import random_collineation
from src.errors import AmbientMismatch, InvariantViolation, NotInSpan, SplashesDiffer
from src.gf import to_ints
from src.projgeom import Collineation, LineFrame, apply, linalg
from src.splash import SplashRealization, compute_splash

logger = logging.getLogger(__name__)


def _completed(frame: LineFrame, r: int) -> np.ndarray:
    return linalg.complete_basis(frame.field, frame.basis(), r)


def restrict_to_line(c: Collineation, frame: LineFrame) -> Collineation:
    """Acción de c sobre l en coordenadas del marco; l debe ser invariante."""
    field = frame.field
    images = c.map_vectors(frame.basis())
    try:
        rows = [linalg.solve_in_span(field, frame.basis(), image) for image in images]
    except NotInSpan as e:
        raise InvariantViolation("La colineación no fija la recta") from e
    return Collineation.from_array(field, np.array(rows, dtype=np.int64), c.exponent)


def lift_line_collineation(theta: Collineation, frame: LineFrame, r: int) -> Collineation:
    """θ̄ en PG(r-1, q^n) con l^θ̄ = l y restricción θ."""
    field = frame.field
    gf = field.gf
    G = gf(_completed(frame, r))
    block = np.eye(r, dtype=np.int64)
    block[:2, :2] = np.array(theta.matrix, dtype=np.int64)
    twisted_inverse = np.linalg.inv(G ** theta.automorphism_power)
    lifted = Collineation.from_array(field, to_ints(twisted_inverse @ gf(block) @ G), theta.exponent)
    if restrict_to_line(lifted, frame) != theta:
        raise InvariantViolation("La restricción de θ̄ no es θ")
    return lifted


def transport_realization(source: SplashRealization, target: SplashRealization) -> SplashRealization:
    """
    Mueve source para que use la recta y el marco de target: g lleva la
    base completada de un marco a la del otro, de modo que las coordenadas
    sobre la recta no cambian.
    """
    if source.subgeometry.field != target.subgeometry.field or source.subgeometry.r != target.subgeometry.r:
        raise AmbientMismatch("Las realizaciones viven en espacios distintos")
    r = target.subgeometry.r
    field = target.subgeometry.field
    gf = field.gf
    g = np.linalg.inv(gf(_completed(source.frame, r))) @ gf(_completed(target.frame, r))
    moved = source.subgeometry.transform(Collineation.from_array(field, to_ints(g)))
    splash = compute_splash(moved, target.line, target.frame)
    if splash.line_counts() != source.splash.line_counts():
        raise InvariantViolation("El transporte alteró el splash en coordenadas de la recta")
    return SplashRealization(source.linear_set, moved, target.line, target.frame, splash)


@dataclass(frozen=True)
class EquivalenceLift:
    """τ = θ̄ seguida de κ, con sus piezas y la realización destino transportada."""
    tau: Collineation
    theta_bar: Collineation
    kappa: Collineation
    target: SplashRealization

    def to_dict(self) -> dict:
        return {
            "tau": self.tau.to_dict(),
            "theta_bar": self.theta_bar.to_dict(),
            "kappa": self.kappa.to_dict(),
            "target_subgeometry": self.target.subgeometry.to_dict(),
            "line": self.target.line.to_dict(),
        }


def lift_equivalence(R0: SplashRealization, R1: SplashRealization, theta: Collineation) -> EquivalenceLift:
    """Dado S0^θ = S1 en la recta, τ con l^τ = l y π0^τ = π1 (π1 transportada a la recta de π0)."""
    target = transport_realization(R1, R0)
    line, frame = R0.line, R0.frame
    theta_bar = lift_line_collineation(theta, frame, R0.subgeometry.r)
    image = R0.subgeometry.transform(theta_bar)
    if compute_splash(image, line, frame).line_counts() != target.splash.line_counts():
        raise SplashesDiffer("θ no lleva S0 sobre S1")
    kappa = find_projectivity_same_splash(image, target.subgeometry, line)
    tau = theta_bar.compose(kappa)
    if apply(tau, line) != line or R0.subgeometry.transform(tau) != target.subgeometry:
        raise InvariantViolation("τ no cumple l^τ = l y π0^τ = π1")
    logger.debug(f"Equivalencia levantada: τ con exponente {tau.exponent}")
    return EquivalenceLift(tau, theta_bar, kappa, target)


def random_line_stabilizer(
    frame: LineFrame, r: int, rng: np.random.Generator, group: str = "PGL"
) -> Collineation:
    """
    Colineación al azar que deja fija l: θ̄ de una θ al azar de la recta
    seguida de una proyectividad al azar que fija l punto a punto.
    """
    field = frame.field
    gf = field.gf
    theta = random_collineation(field, 2, rng, group)
    G = gf(_completed(frame, r))
    while True:
        lower = np.eye(r, dtype=np.int64)
        lower[2:, :] = rng.integers(0, field.order, size=(r - 2, r), dtype=np.int64)
        if linalg.rank(field, lower, r) == r:
            break
    fixing = Collineation.from_array(field, to_ints(np.linalg.inv(G) @ gf(lower) @ G))
    return lift_line_collineation(theta, frame, r).compose(fixing)
