"""
Dos q-subgeometrías distintas con el mismo splash tangente cuando
d = gcd(n, r-1) > 1, y la proyectividad que lleva una en la otra
fijando la recta.
"""

import logging
from dataclasses import dataclass
from math import gcd

import numpy as np

from src.equiv.coordinates import SplashCoordinates, splash_coordinates
from src.equiv.stuple import SolutionCertificate, hyperplane_through, solve_s_tuple
from src.errors import (
    GcdIsOne,
    InvariantViolation,
    NotTangent,
    ParameterDomain,
    RankExceedsN,
    SplashesDiffer,
)
from src.fieldred import ReductionContext, linear_set_from_vectors
from src.gf import field_tower, minimal_polynomial, to_ints
from src.projgeom import Collineation, ProjPoint, ProjSubspace, apply, linalg
from src.splash import SplashKind, compute_splash, realize_linear_set_as_splash
from src.subgeo import Subgeometry, SubHyperplane

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SameSplashWitness:
    pi0: Subgeometry
    pi1: Subgeometry
    line: ProjSubspace
    centre: ProjPoint
    hyperplane: SubHyperplane
    zeta: int
    companion: tuple[tuple[int, ...], ...]
    eigenvector: tuple[int, ...]
    omegas: tuple[int, ...]
    block: tuple[tuple[int, ...], ...]
    coordinates: SplashCoordinates
    s: tuple[tuple[int, ...], ...]
    s_prime: tuple[tuple[int, ...], ...]
    kappa: Collineation
    certificate: SolutionCertificate

    def to_dict(self) -> dict:
        return {
            "q": self.pi0.q,
            "n": self.pi0.n,
            "r": self.pi0.r,
            "field_modulus": list(self.pi0.field.modulus),
            "pi0": self.pi0.to_dict(),
            "pi1": self.pi1.to_dict(),
            "line": self.line.to_dict(),
            "centre": list(self.centre.coords),
            "hyperplane": self.hyperplane.to_dict(),
            "hyperplane_vectors": self.hyperplane.vectors().tolist(),
            "zeta": self.zeta,
            "companion_matrix": [list(row) for row in self.companion],
            "eigenvector": list(self.eigenvector),
            "omegas": list(self.omegas),
            "block_matrix": [list(row) for row in self.block],
            "coordinates": self.coordinates.to_dict(),
            "s": [list(row) for row in self.s],
            "s_prime": [list(row) for row in self.s_prime],
            "kappa": self.kappa.to_dict(),
        }


# ── Piezas de la construcción ──────────────────────────────

def _companion(tower, d: int):
    """Primer ζ (por entero) de grado d sobre GF(q) y la matriz compañera de su polinomio mínimo."""
    ext = tower.ext
    for value in range(2, ext.order):
        poly = minimal_polynomial(ext.element(value), tower.q)
        if poly.degree == d:
            break
    else:
        raise ParameterDomain(f"GF({ext.order}) no tiene elementos de grado {d} sobre GF({tower.q})")
    base = tower.base.gf
    low = base(to_ints(poly.coeffs)[::-1][:d])
    companion = np.zeros((d, d), dtype=np.int64)
    for i in range(d - 1):
        companion[i, i + 1] = 1
    companion[d - 1] = to_ints(-low)
    return value, companion


def _eigenvector(tower, companion: np.ndarray, zeta: int) -> np.ndarray:
    """w con M0·w = ζ·w normalizado a w_1 = 1."""
    ext = tower.ext
    gf = ext.gf
    d = companion.shape[0]
    shifted = gf(tower.embed(companion)) - gf(zeta) * gf(np.eye(d, dtype=np.int64))
    kernel = linalg.null_space(ext, to_ints(shifted), d)
    if len(kernel) != 1 or kernel[0][0] == 0:
        raise InvariantViolation("El autoespacio de ζ no es una recta con w_1 ≠ 0")
    w = gf(np.array(kernel[0], dtype=np.int64))
    w = w / w[0]
    if not np.array_equal(to_ints(gf(tower.embed(companion)) @ w), to_ints(gf(zeta) * w)):
        raise InvariantViolation("w no es autovector de M0")
    return to_ints(w)


def _omega_basis(tower, w: np.ndarray, d: int) -> list[int]:
    """1 = ω_1, …, ω_{n/d}: potencias de α que amplían el GF(q)-rango de {ω_i w_j} en d."""
    ext = tower.ext
    tables = ext.tables
    omegas = [1]
    products = list(w.tolist())
    power = 1
    while len(omegas) < tower.n // d:
        power = tables.mul[power][tower.alpha]
        candidate = [tables.mul[power][x] for x in w.tolist()]
        expanded = tower.expand(np.array(products + candidate, dtype=np.int64))
        if linalg.rank(tower.base, expanded, tower.n) == len(products) + d:
            omegas.append(power)
            products += candidate
    return omegas


# ── Construcción ───────────────────────────────────────────

def construct_same_splash_pair(q: int, n: int, r: int) -> SameSplashWitness:
    """Testigo π0 ≠ π1 con el mismo splash tangente y un hiperplano H0 común."""
    d = gcd(n, r - 1)
    if r < 3:
        raise ParameterDomain("Se requiere r >= 3")
    if r - 1 > n:
        raise RankExceedsN(f"r - 1 = {r - 1} mayor que n = {n}")
    if d == 1:
        raise GcdIsOne(f"gcd({n}, {r - 1}) = 1: el splash determina la subgeometría")

    tower = field_tower(q, n)
    ext = tower.ext
    gf = ext.gf
    tables = ext.tables
    zeta, companion = _companion(tower, d)
    w = _eigenvector(tower, companion, zeta)
    omegas = _omega_basis(tower, w, d)
    rho = np.array([tables.mul[omega][x] for omega in omegas[: (r - 1) // d] for x in w.tolist()], dtype=np.int64)
    block = np.zeros((r - 1, r - 1), dtype=np.int64)
    for i in range(0, r - 1, d):
        block[i : i + d, i : i + d] = companion
    embedded_block = gf(tower.embed(block))
    if not np.array_equal(to_ints(embedded_block @ gf(rho)), to_ints(gf(zeta) * gf(rho))):
        raise InvariantViolation("ρ no es autovector de M")
    logger.info(f"Construcción ({q}, {n}, {r}): ζ={zeta}, ρ={rho.tolist()}, ω={omegas}")

    ctx = ReductionContext(2, n, q, ext)
    vectors = np.vstack([np.array([[0, 1]], dtype=np.int64)] + [np.array([[c, 0]], dtype=np.int64) for c in rho])
    realization = realize_linear_set_as_splash(linear_set_from_vectors(ctx, vectors))
    pi0, line, frame = realization.subgeometry, realization.line, realization.frame
    splash = compute_splash(pi0, line)
    if splash.kind != SplashKind.TANGENT:
        raise InvariantViolation("La realización del club no es tangente")

    u, v = frame.basis()
    centre = ProjPoint.from_vector(ext, u)
    P = ProjPoint.from_vector(ext, v)
    if centre != splash.centre:
        raise InvariantViolation("El centro no es ⟨u⟩")
    coordinates = SplashCoordinates(ext, q, tuple(u.tolist()), tuple(v.tolist()), tuple(rho[1:].tolist()), centre, P)
    if coordinates.regenerate() != frozenset(p for p in splash.points if p != centre):
        raise InvariantViolation("u, v, ρ no reproducen el splash")

    H0 = hyperplane_through(pi0, P, centre)
    solution = solve_s_tuple(pi0, line, P, H0, coordinates)
    s = gf(solution.array())
    s_prime = to_ints((embedded_block.T @ s) / gf(zeta))
    frame0 = np.vstack([u[np.newaxis, :], to_ints(s)])
    frame1 = np.vstack([u[np.newaxis, :], s_prime])
    pi1 = Subgeometry(tower, frame1)
    kappa = Collineation.from_array(ext, to_ints(np.linalg.inv(gf(frame0)) @ gf(frame1)))

    witness = SameSplashWitness(
        pi0=pi0,
        pi1=pi1,
        line=line,
        centre=centre,
        hyperplane=H0,
        zeta=int(zeta),
        companion=tuple(map(tuple, companion.tolist())),
        eigenvector=tuple(w.tolist()),
        omegas=tuple(omegas),
        block=tuple(map(tuple, block.tolist())),
        coordinates=coordinates,
        s=solution.vectors,
        s_prime=tuple(map(tuple, s_prime.tolist())),
        kappa=kappa,
        certificate=solution.certificate,
    )
    check_witness(witness)
    logger.info(f"Testigo ({q}, {n}, {r}) verificado: π0 ≠ π1 con el mismo splash")
    return witness


def check_witness(witness: SameSplashWitness) -> None:
    """Todas las propiedades del testigo; InvariantViolation si alguna falla."""
    pi0, pi1, line = witness.pi0, witness.pi1, witness.line
    if pi0 == pi1:
        raise InvariantViolation("π0 y π1 coinciden")
    splash0 = compute_splash(pi0, line)
    splash1 = compute_splash(pi1, line)
    if splash1.kind != SplashKind.TANGENT or splash0.line_counts() != splash1.line_counts():
        raise InvariantViolation("Los splashes de π0 y π1 difieren")
    if any(not (pi0.contains(p) and pi1.contains(p)) for p in witness.hyperplane.points()):
        raise InvariantViolation("H0 no está en π0 ∩ π1")
    if witness.hyperplane.contains(witness.centre):
        raise InvariantViolation("T pertenece a H̄0")
    basis = line.matrix()
    if not np.array_equal(witness.kappa.map_vectors(basis), to_ints(basis)):
        raise InvariantViolation("κ no fija la recta punto a punto")
    if pi0.transform(witness.kappa) != pi1:
        raise InvariantViolation("κ no lleva π0 en π1")


# ── Proyectividad entre subgeometrías con el mismo splash ──

def find_projectivity_same_splash(pi0: Subgeometry, pi1: Subgeometry, line: ProjSubspace) -> Collineation:
    """κ con u^κ = u, s_i^κ = s'_i; fija la recta y lleva π0 en π1."""
    splash0 = compute_splash(pi0, line)
    splash1 = compute_splash(pi1, line)
    if splash0.kind != SplashKind.TANGENT or splash1.kind != SplashKind.TANGENT:
        raise NotTangent("Ambas subgeometrías deben ser tangentes a la recta")
    if splash0.line_counts() != splash1.line_counts():
        raise SplashesDiffer("Los splashes de π0 y π1 son distintos")
    field = pi0.field
    if pi0 == pi1:
        return Collineation.identity(field, pi0.r)

    centre = splash0.centre
    P = next(p for p in splash0.points if p != centre)
    coordinates = splash_coordinates(splash0, P)
    s0 = solve_s_tuple(pi0, line, P, hyperplane_through(pi0, P, centre), coordinates, certify=False)
    s1 = solve_s_tuple(pi1, line, P, hyperplane_through(pi1, P, centre), coordinates, certify=False)
    gf = field.gf
    u = np.array([coordinates.u], dtype=np.int64)
    frame0 = gf(np.vstack([u, s0.array()]))
    frame1 = gf(np.vstack([u, s1.array()]))
    kappa = Collineation.from_array(field, to_ints(np.linalg.inv(frame0) @ frame1))
    if pi0.transform(kappa) != pi1 or apply(kappa, line) != line:
        raise InvariantViolation("κ no cumple l^κ = l y π0^κ = π1")
    return kappa
