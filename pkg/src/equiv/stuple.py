"""
Resolución de s = (s_0, …, s_{r-2}) para una subgeometría tangente:
(i) B(⟨s⟩_q) es el hiperplano H0, (ii) v = s_0 + Σ ρ_i s_i y, además,
(iii) π0 = B(⟨u, s_0, …, s_{r-2}⟩_q).

Cuando gcd(n, r-1) > 1 la solución puede no ser única; el certificado
recorre todas las s' = ζ^{-1}·M·s con M ∈ GL(r-1, q) y M^T ρ = ζ ρ.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.equiv.coordinates import SplashCoordinates, splash_coordinates
from src.errors import InvariantViolation, NoSolution, NotInSpan, NotTangent
from src.gf import Field, to_ints
from src.projgeom import ProjPoint, ProjSubspace, linalg
from src.splash import SplashKind, compute_splash
from src.subgeo import Subgeometry, SubHyperplane, sub_hyperplanes

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolutionCertificate:
    """Soluciones distintas dentro de la clase de ambigüedad (ζ, M); la primera es la canónica."""
    solutions: tuple[tuple[tuple[int, ...], ...], ...]
    multipliers: tuple[dict, ...]
    scanned: int

    @property
    def unique(self) -> bool:
        return len(self.solutions) == 1

    def to_dict(self) -> dict:
        return {
            "unique": self.unique,
            "solutions": [[list(row) for row in s] for s in self.solutions],
            "multipliers": list(self.multipliers),
            "scanned_matrices": self.scanned,
        }


@dataclass(frozen=True)
class STuple:
    field: Field
    vectors: tuple[tuple[int, ...], ...]
    coordinates: SplashCoordinates
    hyperplane: SubHyperplane
    certificate: Optional[SolutionCertificate] = None

    def array(self) -> np.ndarray:
        return np.array(self.vectors, dtype=np.int64)

    def to_dict(self) -> dict:
        return {
            "s": [list(row) for row in self.vectors],
            "coordinates": self.coordinates.to_dict(),
            "hyperplane": self.hyperplane.to_dict(),
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def hyperplane_through(s: Subgeometry, P: ProjPoint, T: ProjPoint) -> SubHyperplane:
    """Primer hiperplano de la subgeometría cuya extensión contiene a P pero no a T."""
    for h in sub_hyperplanes(s):
        if h.contains(P) and not h.contains(T):
            return h
    raise NoSolution(f"Ningún hiperplano extendido contiene a {P} sin contener a {T}")


def _span_points(field: Field, tower, vectors: np.ndarray) -> frozenset:
    _, coefficients = tower.projective_coefficients(vectors.shape[0])
    rows = linalg.normalize_rows(field, coefficients @ field.gf(vectors))
    return frozenset(map(tuple, rows.tolist()))


def _satisfies(
    field: Field, tower, s: np.ndarray, rho: np.ndarray, v: np.ndarray, hyperplane_points: frozenset
) -> bool:
    gf = field.gf
    combined = to_ints(gf(rho)[np.newaxis, :] @ gf(s)).reshape(-1)
    if not np.array_equal(combined, v):
        return False
    return _span_points(field, tower, s) == hyperplane_points


def ambiguity_certificate(
    s: Subgeometry, coordinates: SplashCoordinates, solution: np.ndarray, hyperplane: SubHyperplane
) -> SolutionCertificate:
    """Recorre GL(r-1, q) y conserva las s' válidas distintas, en orden de aparición."""
    field, tower = s.field, s.tower
    gf = field.gf
    rho = gf(coordinates.rho_vector)
    v = np.array(coordinates.v, dtype=np.int64)
    points = frozenset(p.coords for p in hyperplane.points())
    size = s.r - 1
    found = {tuple(map(tuple, solution.tolist())): {"zeta": 1, "M": np.eye(size, dtype=int).tolist()}}
    scanned = 0
    for entries in itertools.product(range(tower.q), repeat=size * size):
        matrix = np.array(entries, dtype=np.int64).reshape(size, size)
        if linalg.rank(tower.base, matrix, size) != size:
            continue
        scanned += 1
        embedded = gf(tower.embed(matrix))
        image = embedded.T @ rho[:, np.newaxis]
        zeta = image[0, 0]
        if zeta == 0 or not np.array_equal(to_ints(image).reshape(-1), to_ints(zeta * rho)):
            continue
        candidate = to_ints((embedded @ gf(solution)) / zeta)
        key = tuple(map(tuple, candidate.tolist()))
        if key in found:
            continue
        if not _satisfies(field, tower, candidate, coordinates.rho_vector, v, points):
            raise InvariantViolation("Una s' de la clase de ambigüedad no cumple (i) y (ii)")
        found[key] = {"zeta": int(zeta), "M": matrix.tolist()}
    logger.debug(f"Certificado: {len(found)} soluciones en {scanned} matrices de GL({size}, {tower.q})")
    return SolutionCertificate(tuple(found), tuple(found.values()), scanned)


def solve_s_tuple(
    s: Subgeometry,
    line: ProjSubspace,
    P: ProjPoint,
    H0: SubHyperplane,
    coordinates: Optional[SplashCoordinates] = None,
    certify: bool = True,
) -> STuple:
    """
    Construye s: se escala la base de π0 para que u pertenezca a ella,
    z_j = λ·(base de H0) y ξ resuelve v = Σ ξ_j z_j; la matriz A ∈ GF(q)^{(r-1)×(r-1)} con ξ = ρ·A da s = A·z.
    """
    splash = compute_splash(s, line)
    if splash.kind != SplashKind.TANGENT:
        raise NotTangent(f"La recta es {splash.kind.value} a la subgeometría")
    T = splash.centre
    if H0.owner != s:
        raise NoSolution("H0 no es un hiperplano de π0")
    if not line.contains(P) or not H0.contains(P):
        raise NoSolution(f"{P} no está en H̄0 ∩ l")
    if H0.contains(T):
        raise NoSolution("El centro pertenece a H̄0")
    coordinates = coordinates or splash_coordinates(splash, P)
    if coordinates.base_point != P or coordinates.centre != T:
        raise NoSolution("Las coordenadas no corresponden a P y T")

    field, tower = s.field, s.tower
    gf = field.gf
    r = s.r
    u = gf(np.array(coordinates.u, dtype=np.int64))
    v = np.array(coordinates.v, dtype=np.int64)

    y = u[np.newaxis, :] @ gf(s._inverse)
    lead = next(c for c in y.reshape(-1) if c != 0)
    if not all(tower.in_base(c) for c in to_ints(y / lead).reshape(-1)):
        raise NoSolution("u no es múltiplo de un vector de π0")
    z = gf(to_ints(lead * gf(H0.vectors())))
    if linalg.rank(field, np.vstack([to_ints(u)[np.newaxis, :], to_ints(z)]), r) != r:
        raise NoSolution("u pertenece al subespacio de H0")
    try:
        xi = linalg.solve_in_span(field, to_ints(z), v)
    except NotInSpan as e:
        raise NoSolution("v no pertenece a la extensión de H0") from e

    rho_expanded = tower.expand(coordinates.rho_vector)
    xi_expanded = tower.expand(xi)
    columns = []
    for j in range(r - 1):
        try:
            columns.append(linalg.solve_in_span(tower.base, rho_expanded, xi_expanded[j]))
        except NotInSpan as e:
            raise NoSolution(f"ξ_{j} no es GF(q)-combinación de 1, ρ") from e
    A = np.array(columns, dtype=np.int64).T
    solution = to_ints(gf(tower.embed(A)) @ z)

    hyperplane_points = frozenset(p.coords for p in H0.points())
    if not _satisfies(field, tower, solution, coordinates.rho_vector, v, hyperplane_points):
        raise InvariantViolation("La solución no cumple (i) y (ii)")
    if Subgeometry(tower, np.vstack([to_ints(u)[np.newaxis, :], solution])) != s:
        raise InvariantViolation("La solución no cumple (iii)")

    certificate = ambiguity_certificate(s, coordinates, solution, H0) if certify else None
    return STuple(field, tuple(map(tuple, solution.tolist())), coordinates, H0, certificate)
