"""
Torres GF(q) ⊂ GF(q^n): inmersión del subcuerpo, Frobenius, polinomio
mínimo e (in)dependencia lineal sobre GF(q).

La inmersión no depende de que los módulos sean compatibles: se localiza
en GF(q^n) una raíz del polinomio mínimo de un generador de GF(q)* y se
extiende multiplicativamente.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

import galois
import numpy as np

from src.errors import InvalidSubfieldOrder, InvariantViolation, MixedFields
from src.gf.field import Field, FieldElement, field_create, to_ints

logger = logging.getLogger(__name__)


def subfield_degree(field: Field, q: int) -> int:
    """Grado m con q = p^m; exige que m divida al grado de field."""
    m, power = 0, 1
    while power < q:
        power *= field.p
        m += 1
    if power != q or m == 0 or field.k % m != 0:
        raise InvalidSubfieldOrder(f"{q} no es orden de un subcuerpo de {field}")
    return m


# ── Inmersión ──────────────────────────────────────────────

@dataclass(frozen=True)
class SubfieldEmbedding:
    """Inmersión GF(q) -> GF(q^n) determinada por la imagen del generador de GF(q)*."""
    source: Field
    target: Field
    generator_image: int

    @property
    def table(self) -> np.ndarray:
        return _embedding_tables(self)[0]

    @property
    def inverse_table(self) -> dict[int, int]:
        return _embedding_tables(self)[1]

    def __call__(self, a: FieldElement) -> FieldElement:
        if a.field != self.source:
            raise MixedFields(f"{a.field} no es el cuerpo de origen {self.source}")
        return FieldElement(self.target, int(self.table[a.value]))

    def image(self) -> frozenset[int]:
        return frozenset(self.inverse_table)

    def contains(self, b: FieldElement) -> bool:
        return b.field == self.target and b.value in self.inverse_table

    def preimage(self, b: FieldElement) -> FieldElement:
        if not self.contains(b):
            raise InvalidSubfieldOrder(f"{b} no pertenece a la imagen de {self.source}")
        return FieldElement(self.source, self.inverse_table[b.value])


@lru_cache(maxsize=None)
def _embedding_tables(embedding: SubfieldEmbedding) -> tuple[np.ndarray, dict[int, int]]:
    q = embedding.source.order
    exponents = np.arange(q - 1)
    g = embedding.source.gf.primitive_element
    h = embedding.target.gf(embedding.generator_image)
    forward = np.zeros(q, dtype=np.int64)
    forward[to_ints(g**exponents)] = to_ints(h**exponents)
    inverse = {int(b): a for a, b in enumerate(forward.tolist())}
    return forward, inverse


@lru_cache(maxsize=None)
def embed_subfield(source: Field, target: Field) -> SubfieldEmbedding:
    """Inmersión canónica (raíz mínima) de source en target."""
    if source.p != target.p or target.k % source.k != 0:
        raise InvalidSubfieldOrder(f"{source} no es subcuerpo de {target}")
    generator = source.gf.primitive_element
    min_poly = generator.minimal_poly()
    lifted = galois.Poly(target.gf(to_ints(min_poly.coeffs)), field=target.gf)
    roots = sorted(to_ints(lifted.roots()).tolist())
    if not roots:
        raise InvariantViolation(f"Sin raíces de {min_poly} en {target}")
    logger.debug(f"Inmersión {source} -> {target}: generador -> {roots[0]}")
    return SubfieldEmbedding(source, target, roots[0])


# ── Torre GF(q) ⊂ GF(q^n) ──────────────────────────────────

class FieldTower:
    """
    Par GF(q) ⊂ GF(q^n) con la base fija 1, α, …, α^{n-1} (α primitivo
    de GF(q^n)) y las tablas de expansión/contracción de coordenadas.
    """

    def __init__(self, base: Field, ext: Field):
        self.base = base
        self.ext = ext
        self.q = base.order
        self.n = ext.k // base.k
        self.embedding = embed_subfield(base, ext)
        self.embed_table = self.embedding.table

        alpha = ext.gf.primitive_element
        self.alpha = int(alpha)
        self.basis = ext.gf(to_ints(alpha ** np.arange(self.n)))

        coords = np.array(list(itertools.product(range(self.q), repeat=self.n)), dtype=np.int64)
        coords = coords.reshape(-1, self.n)
        values = to_ints(ext.gf(self.embed_table[coords]) @ self.basis[:, np.newaxis]).reshape(-1)
        self.place_weights = self.q ** np.arange(self.n, dtype=np.int64)

        self.expand_table = np.zeros((ext.order, self.n), dtype=np.int64)
        self.expand_table[values] = coords
        self.contract_table = np.zeros(self.q**self.n, dtype=np.int64)
        self.contract_table[coords @ self.place_weights] = values
        if len(set(values.tolist())) != ext.order:
            raise InvariantViolation("Las potencias de α no forman una base sobre GF(q)")

    def __repr__(self) -> str:
        return f"FieldTower(GF({self.q}) ⊂ {self.ext})"

    def embed(self, values) -> np.ndarray:
        """Enteros de GF(q) -> enteros de GF(q^n)."""
        return self.embed_table[to_ints(values)]

    def expand(self, values) -> np.ndarray:
        """Enteros de GF(q^n) (forma (...)) -> coordenadas sobre GF(q) (forma (..., n))."""
        return self.expand_table[to_ints(values)]

    def contract(self, coords) -> np.ndarray:
        """Inversa de expand."""
        return self.contract_table[to_ints(coords) @ self.place_weights]

    def in_base(self, value: int) -> bool:
        return int(value) in self.embedding.inverse_table

    def restrict(self, values) -> np.ndarray:
        """Enteros de GF(q^n) en la imagen -> enteros de GF(q)."""
        inverse = self.embedding.inverse_table
        try:
            return np.array([inverse[int(v)] for v in np.ravel(to_ints(values))], dtype=np.int64).reshape(
                np.shape(values)
            )
        except KeyError as e:
            raise InvalidSubfieldOrder(f"{e.args[0]} no pertenece a GF({self.q})") from e

    def projective_coefficients(self, k: int) -> tuple[np.ndarray, galois.FieldArray]:
        """Vectores normalizados de GF(q)^k en orden lexicográfico y su inmersión en GF(q^n)."""
        rows = normalized_vectors(self.q, k)
        return rows, self.ext.gf(self.embed_table[rows])

    def nonzero_base_elements(self) -> np.ndarray:
        """Enteros de GF(q^n) de la imagen de GF(q)*, en orden del origen."""
        return self.embed_table[1:]


@lru_cache(maxsize=None)
def normalized_vectors(q: int, k: int) -> np.ndarray:
    rows = []
    for lead in range(k):
        for tail in itertools.product(range(q), repeat=k - 1 - lead):
            rows.append((0,) * lead + (1,) + tail)
    rows.sort()
    return np.array(rows, dtype=np.int64).reshape(-1, k)


@lru_cache(maxsize=None)
def field_tower(q: int, n: int, ext: Optional[Field] = None) -> FieldTower:
    """Torre GF(q) ⊂ GF(q^n) con módulos por defecto salvo que se indique ext."""
    if not galois.is_prime_power(int(q)) or n < 1:
        raise InvalidSubfieldOrder(f"Parámetros de torre inválidos: q={q}, n={n}")
    primes, exponents = galois.factors(int(q))
    p, m = int(primes[0]), int(exponents[0])
    if ext is None:
        ext = field_create(p, m * n)
    elif ext.p != p or ext.k != m * n:
        raise InvalidSubfieldOrder(f"{ext} no es GF({q}^{n})")
    base = field_create(p, m)
    return FieldTower(base, ext)


def tower_of(z: FieldElement, q: int) -> FieldTower:
    m = subfield_degree(z.field, q)
    return field_tower(q, z.field.k // m, z.field)


# ── Operaciones ────────────────────────────────────────────

def frobenius(a: FieldElement, q: int) -> FieldElement:
    """a^q; automorfismo que fija GF(q) punto a punto."""
    subfield_degree(a.field, q)
    return a ** q


def minimal_polynomial(z: FieldElement, q: int) -> galois.Poly:
    """Polinomio mínimo de z sobre GF(q), como galois.Poly sobre el cuerpo base."""
    tower = tower_of(z, q)
    gf = z.field.gf
    conjugates = [z.array()]
    current = conjugates[0] ** q
    while current != conjugates[0]:
        conjugates.append(current)
        current = current ** q

    poly = galois.Poly.One(field=gf)
    for c in conjugates:
        poly = poly * galois.Poly(gf([1, int(-c)]))
    coeffs = tower.restrict(to_ints(poly.coeffs))
    return galois.Poly(tower.base.gf(coeffs))


def independent_over_subfield(elems: Sequence[FieldElement], q: int) -> bool:
    """True sii ninguna combinación GF(q)-lineal no trivial de elems se anula."""
    if not elems:
        return True
    field = elems[0].field
    if any(e.field != field for e in elems):
        raise MixedFields("Elementos de cuerpos distintos")
    tower = tower_of(elems[0], q)
    if len(elems) > tower.n:
        return False
    matrix = tower.base.gf(tower.expand([e.value for e in elems]))
    return int(np.linalg.matrix_rank(matrix)) == len(elems)


def moore_matrix(elems: Sequence[FieldElement], q: int) -> galois.FieldArray:
    """Matriz (x_i^{q^j}) con filas j = 0..m-1."""
    if not elems:
        raise ValueError("Lista vacía")
    tower_of(elems[0], q)
    gf = elems[0].field.gf
    x = elems[0].field.array(list(elems))
    return gf(np.array([to_ints(x ** (q**j)) for j in range(len(elems))]))
