"""
Equivalencia de splashes sobre PG(1, q^n) bajo PGL(2, q^n) o PΓL(2, q^n).

La búsqueda lleva un marco ordenado de S0 (centre + dos puntos, o los
tres primeros puntos) a marcos de S1 compatibles en pesos; cada candidato
determina una única colineación, que se verifica sobre todo el splash.
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import partial
from multiprocessing.pool import ThreadPool
from typing import Optional

import numpy as np

from src.errors import MixedFields, ParameterDomain, SearchBudgetExceeded
from src.gf import Field, to_ints
from src.projgeom import Collineation, linalg, projective_line
from src.splash import Splash

logger = logging.getLogger(__name__)

GROUPS = ("PGL", "PΓL")


def group_exponents(field: Field, group: str) -> range:
    """Exponentes de automorfismo del grupo; 0 primero."""
    if group not in GROUPS:
        raise ParameterDomain(f"Grupo desconocido: {group}")
    return range(field.k) if group == "PΓL" else range(1)


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Resultado de la búsqueda: testigo o "ninguno" tras recorrer todos los candidatos."""
    witness: Optional[Collineation]
    group: str
    nodes: int
    candidates: int
    pruned: bool = False
    details: dict = field(default_factory=dict)

    @property
    def equivalent(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "group": self.group,
            "witness": self.witness.to_dict() if self.witness else None,
            "nodes": self.nodes,
            "candidates": self.candidates,
            "pruned_by_invariants": self.pruned,
            **self.details,
        }


def _coded(splash: Splash) -> tuple[dict[int, int], Optional[int]]:
    line = projective_line(splash.field)
    counts = {line.code(p): c for p, c in splash.line_counts().items()}
    centre = splash.line_centre()
    return counts, line.code(centre) if centre is not None else None


def _source_frame(counts: dict[int, int], centre: Optional[int]) -> tuple[int, int, int]:
    if centre is not None:
        others = sorted(c for c in counts if c != centre)
        return centre, others[0], others[1]
    first = sorted(counts)
    return first[0], first[1], first[2]


def _candidates(source, counts0, counts1, centre1, exponents) -> list[tuple[int, tuple[int, int, int]]]:
    """(exponente, marco destino) con los mismos conteos que el marco origen."""
    result = []
    wanted = [counts0[c] for c in source]
    for e in exponents:
        pool = sorted(counts1)
        for target in itertools.permutations(pool, 3):
            if [counts1[c] for c in target] != wanted:
                continue
            if centre1 is not None and target[0] != centre1:
                continue
            result.append((e, target))
    return result


def _verify(line, source, counts0: dict, counts1: dict, candidate) -> Optional[Collineation]:
    """La colineación del candidato si lleva S0 sobre S1 conservando los conteos."""
    exponent, target = candidate
    theta = line.frame_map(source, target, exponent)
    perm = line.permutation(theta)
    if all(counts1.get(perm[c]) == count for c, count in counts0.items()):
        return theta
    return None


def _budget_exceeded(budget: int, nodes: int, group: str, total: int) -> SearchBudgetExceeded:
    return SearchBudgetExceeded(
        f"Presupuesto de {budget} nodos agotado",
        nodes=nodes,
        partial={"group": group, "explored": nodes, "candidates": total, "witness": None},
    )


def search_equivalence(
    S0: Splash, S1: Splash, group: str = "PGL", budget: int = 200_000, workers: int = 1
) -> EquivalenceCertificate:
    """
    Búsqueda con poda por |S|, multiconjunto de pesos y centro. Con varios
    hilos los candidatos se evalúan por lotes y gana el de menor índice,
    así el testigo no depende de workers.
    """
    if S0.field != S1.field:
        raise MixedFields(f"{S0.field} vs {S1.field}")
    ext = S0.field
    exponents = group_exponents(ext, group)
    counts0, centre0 = _coded(S0)
    counts1, centre1 = _coded(S1)
    if (
        len(counts0) != len(counts1)
        or sorted(counts0.values()) != sorted(counts1.values())
        or (centre0 is None) != (centre1 is None)
    ):
        return EquivalenceCertificate(None, group, 0, 0, pruned=True)

    line = projective_line(ext)
    source = _source_frame(counts0, centre0)
    candidates = _candidates(source, counts0, counts1, centre1, exponents)
    check = partial(_verify, line, source, counts0, counts1)

    nodes = 0
    chunk = max(1, 64 * workers)
    pool = ThreadPool(workers) if workers > 1 else None
    try:
        for start in range(0, len(candidates), chunk):
            batch = candidates[start : start + chunk][: max(0, budget - nodes)]
            if not batch:
                raise _budget_exceeded(budget, nodes, group, len(candidates))
            results = pool.map(check, batch) if pool else [check(c) for c in batch]
            for offset, theta in enumerate(results):
                if theta is not None:
                    nodes += offset + 1
                    logger.debug(f"Testigo en el nodo {nodes} de {len(candidates)}")
                    return EquivalenceCertificate(theta, group, nodes, len(candidates))
            nodes += len(batch)
    finally:
        if pool:
            pool.close()
            pool.join()
    if nodes < len(candidates):
        raise _budget_exceeded(budget, nodes, group, len(candidates))
    logger.debug(f"Sin testigo tras {nodes} candidatos ({group})")
    return EquivalenceCertificate(None, group, nodes, len(candidates))


def splash_equivalence(
    S0: Splash, S1: Splash, group: str = "PGL", budget: int = 200_000, workers: int = 1
) -> Optional[Collineation]:
    """θ con S0^θ = S1, o None si no existe en el grupo."""
    return search_equivalence(S0, S1, group, budget, workers).witness


def splash_equivalence_bruteforce(S0: Splash, S1: Splash, group: str = "PGL") -> Optional[Collineation]:
    """Recorre el grupo completo; sólo para q^n <= 16."""
    if S0.field != S1.field:
        raise MixedFields(f"{S0.field} vs {S1.field}")
    ext = S0.field
    if ext.order > 16:
        raise ParameterDomain(f"Barrido completo limitado a q^n <= 16 (q^n = {ext.order})")
    line = projective_line(ext)
    counts0, _ = _coded(S0)
    counts1, _ = _coded(S1)
    if len(counts0) != len(counts1):
        return None
    standard = (0, line.infinity, 1)
    for e in group_exponents(ext, group):
        for target in itertools.permutations(line.all_codes(), 3):
            theta = _verify(line, standard, counts0, counts1, (e, target))
            if theta is not None:
                return theta
    return None


def random_collineation(ext: Field, size: int, rng: np.random.Generator, group: str = "PGL") -> Collineation:
    """Matriz invertible al azar (y exponente al azar en PΓL)."""
    exponents = group_exponents(ext, group)
    while True:
        matrix = rng.integers(0, ext.order, size=(size, size), dtype=np.int64)
        if linalg.rank(ext, matrix, size) == size:
            break
    exponent = int(rng.integers(0, len(exponents)))
    return Collineation.from_array(ext, to_ints(matrix), exponent)
