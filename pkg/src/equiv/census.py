"""
Órbitas de los clubs de rango r de PG(1, q^n) bajo PGL(2, q^n) o
PΓL(2, q^n): componentes conexas del grafo de acción de los generadores.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from src.equiv.search import group_exponents
from src.errors import InvariantViolation
from src.gf import Field
from src.projgeom import Collineation, projective_line
from src.splash import Splash, enumerate_tangent_splashes

logger = logging.getLogger(__name__)


def line_generators(ext: Field, group: str = "PGL") -> list[Collineation]:
    """t ↦ t+1, t ↦ γt (γ primitivo), t ↦ 1/t y, en PΓL, la de Frobenius."""
    gamma = int(ext.gf.primitive_element)
    generators = [
        Collineation.from_array(ext, np.array([[1, 1], [0, 1]], dtype=np.int64)),
        Collineation.from_array(ext, np.array([[1, 0], [0, gamma]], dtype=np.int64)),
        Collineation.from_array(ext, np.array([[0, 1], [1, 0]], dtype=np.int64)),
    ]
    if len(group_exponents(ext, group)) > 1:
        generators.append(Collineation.frobenius(ext, 2))
    return generators


class OrbitGraph:
    """Grafo no dirigido: club i unido a club j si un generador lleva i en j."""

    def __init__(self, ext: Field, clubs: Sequence[Splash]):
        self.ext = ext
        self.clubs = list(clubs)
        self.graph = nx.Graph()
        self._index = {club.codes(): i for i, club in enumerate(self.clubs)}

    def build(self, generators: Sequence[Collineation]) -> nx.Graph:
        line = projective_line(self.ext)
        perms = [line.permutation(g) for g in generators]
        self.graph.add_nodes_from(range(len(self.clubs)))
        for key, i in self._index.items():
            for perm in perms:
                j = self._index.get(frozenset(perm[c] for c in key))
                if j is None:
                    raise InvariantViolation("La imagen de un club no está en la enumeración")
                if i != j:
                    self.graph.add_edge(i, j)
        logger.debug(f"Grafo de órbitas: {self.graph.number_of_nodes()} nodos, {self.graph.number_of_edges()} aristas")
        return self.graph

    def orbits(self) -> list[list[int]]:
        """Componentes conexas, cada una ordenada y en orden de su menor índice."""
        components = [sorted(c) for c in nx.connected_components(self.graph)]
        return sorted(components, key=lambda c: c[0])


@dataclass
class OrbitCensus:
    q: int
    n: int
    r: int
    group: str
    total: int = 0
    orbit_sizes: list[int] = field(default_factory=list)
    representatives: list[Splash] = field(default_factory=list)

    @property
    def orbit_count(self) -> int:
        return len(self.orbit_sizes)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "r": self.r,
            "group": self.group,
            "total": self.total,
            "orbits": self.orbit_count,
            "orbit_sizes": self.orbit_sizes,
            "representatives": [sorted(rep.codes()) for rep in self.representatives],
        }


def club_orbit_census(
    q: int,
    n: int,
    r: int,
    group: str = "PGL",
    workers: int = 1,
    max_field_order: int = 64,
    show_progress: bool = False,
    clubs: Optional[Sequence[Splash]] = None,
) -> OrbitCensus:
    """Órbitas de los clubs; clubs permite reutilizar una enumeración ya hecha."""
    if clubs is None:
        clubs = list(
            enumerate_tangent_splashes(
                q, n, r, workers=workers, max_field_order=max_field_order, show_progress=show_progress
            )
        )
    ext = clubs[0].field
    graph = OrbitGraph(ext, clubs)
    graph.build(line_generators(ext, group))
    orbits = graph.orbits()
    census = OrbitCensus(
        q=q,
        n=n,
        r=r,
        group=group,
        total=len(clubs),
        orbit_sizes=[len(o) for o in orbits],
        representatives=[clubs[o[0]] for o in orbits],
    )
    logger.info(f"Clubs ({q}, {n}, {r}) bajo {group}: {census.total} en {census.orbit_count} órbitas {census.orbit_sizes}")
    return census
