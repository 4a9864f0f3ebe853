"""
Modelo codificado de PG(1, F) para búsquedas exhaustivas.

Cada punto es un entero: t ↦ (1:t) y |F| ↦ (0:1). Las operaciones
escalares usan las tablas del cuerpo.
"""

import logging
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from src.errors import NotCollinear, NotDistinct
from src.gf import Field, to_ints
from src.projgeom import linalg
from src.projgeom.collineation import Collineation
from src.projgeom.space import ProjPoint

logger = logging.getLogger(__name__)


class ProjectiveLine:
    """PG(1, F) con puntos codificados como enteros 0..|F|."""

    def __init__(self, field: Field):
        self.field = field
        self.order = field.order
        self.infinity = field.order
        self.size = field.order + 1
        tables = field.tables
        self._add, self._mul, self._neg, self._inv = tables.add, tables.mul, tables.neg, tables.inv

    # ── Codificación ───────────────────────────────────────

    def encode(self, x0: int, x1: int) -> int:
        if x0 == 0:
            if x1 == 0:
                raise ValueError("El vector nulo no define un punto")
            return self.infinity
        return self._mul[self._inv[x0]][x1]

    def rep(self, code: int) -> tuple[int, int]:
        return (0, 1) if code == self.infinity else (1, code)

    def code(self, point: ProjPoint) -> int:
        if point.field != self.field or point.dimension != 1:
            raise NotCollinear(f"{point} no es un punto de PG(1, {self.order})")
        return self.encode(*point.coords)

    def point(self, code: int) -> ProjPoint:
        return ProjPoint(self.field, self.rep(code))

    def codes(self, points: Iterable[ProjPoint]) -> frozenset[int]:
        return frozenset(self.code(p) for p in points)

    def points(self, codes: Iterable[int]) -> list[ProjPoint]:
        return [self.point(c) for c in sorted(codes)]

    def all_codes(self) -> range:
        return range(self.size)

    # ── Aritmética ─────────────────────────────────────────

    def _sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def _det(self, u: tuple[int, int], v: tuple[int, int]) -> int:
        return self._sub(self._mul[u[0]][v[1]], self._mul[u[1]][v[0]])

    def decompose(self, w: tuple[int, int], v: tuple[int, int], t: tuple[int, int]) -> tuple[int, int]:
        """(α, β) con w = α·v + β·t; v, t independientes."""
        det = self._det(v, t)
        if det == 0:
            raise NotDistinct("Los vectores de referencia son proporcionales")
        inv = self._inv[det]
        alpha = self._mul[self._det(w, t)][inv]
        beta = self._mul[self._det(v, w)][inv]
        return alpha, beta

    def subline(self, t_code: int, p_code: int, r_code: int, subfield: Sequence[int]) -> frozenset[int]:
        """
        Subrecta sobre el subcuerpo (enteros de F en la imagen de GF(q))
        por los puntos T, P, R.
        """
        if len({t_code, p_code, r_code}) != 3:
            raise NotDistinct("Se necesitan tres puntos distintos")
        t, v, w = self.rep(t_code), self.rep(p_code), self.rep(r_code)
        alpha, beta = self.decompose(w, v, t)
        v_scaled = (self._mul[alpha][v[0]], self._mul[alpha][v[1]])
        t_scaled = (self._mul[beta][t[0]], self._mul[beta][t[1]])
        result = {t_code}
        for lam in subfield:
            x0 = self._add[v_scaled[0]][self._mul[lam][t_scaled[0]]]
            x1 = self._add[v_scaled[1]][self._mul[lam][t_scaled[1]]]
            result.add(self.encode(x0, x1))
        return frozenset(result)

    def tangent_offset(self, t_code: int, v_code: int, u_code: int) -> int:
        """c con U = ⟨v + c·t⟩ para los representantes normalizados de T y P = ⟨v⟩."""
        alpha, beta = self.decompose(self.rep(u_code), self.rep(v_code), self.rep(t_code))
        if alpha == 0:
            raise NotDistinct("U coincide con el centro")
        return self._mul[beta][self._inv[alpha]]

    # ── Colineaciones ──────────────────────────────────────

    def permutation(self, c: Collineation) -> tuple[int, ...]:
        """Acción de c sobre los códigos 0..|F|."""
        reps = np.array([self.rep(code) for code in self.all_codes()], dtype=np.int64)
        images = linalg.normalize_rows(self.field, c.map_vectors(reps))
        return tuple(self.encode(int(x0), int(x1)) for x0, x1 in images.tolist())

    def frame_matrix(self, a_code: int, b_code: int, c_code: int) -> np.ndarray:
        """Matriz que lleva (1:0), (0:1), (1:1) a los tres puntos dados."""
        a, b, c = self.rep(a_code), self.rep(b_code), self.rep(c_code)
        lam, mu = self.decompose(c, a, b)
        if lam == 0 or mu == 0:
            raise NotDistinct("Los tres puntos del marco deben ser distintos")
        return np.array(
            [[self._mul[lam][a[0]], self._mul[lam][a[1]]], [self._mul[mu][b[0]], self._mul[mu][b[1]]]],
            dtype=np.int64,
        )

    def frame_map(self, source: Sequence[int], target: Sequence[int], exponent: int = 0) -> Collineation:
        """Colineación con exponente dado que lleva el marco source al marco target."""
        if exponent:
            twist = Collineation.frobenius(self.field, 2, exponent)
            perm = self.permutation(twist)
            source = [perm[code] for code in source]
        gf = self.field.gf
        source_matrix = gf(self.frame_matrix(*source))
        target_matrix = gf(self.frame_matrix(*target))
        matrix = np.linalg.inv(source_matrix) @ target_matrix
        return Collineation.from_array(self.field, to_ints(matrix), exponent)


@lru_cache(maxsize=None)
def projective_line(field: Field) -> ProjectiveLine:
    return ProjectiveLine(field)
