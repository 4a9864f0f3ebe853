"""
Aritmética exacta en GF(p^k) sobre galois.

Un Field es un valor inmutable (p, k, módulo) y la clase galois asociada
se construye una sola vez por módulo. Los elementos se representan por su
entero galois (evaluación del polinomio residuo en x = p).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

import galois
import numpy as np

from src.errors import MixedFields, NonPrimeCharacteristic, ParameterDomain, ReducibleModulus

logger = logging.getLogger(__name__)


def to_ints(array) -> np.ndarray:
    """Vista entera (np.int64) de un FieldArray o array numérico."""
    if isinstance(array, galois.FieldArray):
        array = array.view(np.ndarray)
    return np.asarray(array, dtype=np.int64)


# ── Serialización de polinomios ────────────────────────────

def parse_polynomial(text: str, p: int) -> tuple[int, ...]:
    """Lee "1,1,0,1" (coeficientes de menor a mayor grado) reducido mod p."""
    try:
        coeffs = [int(c.strip()) % p for c in text.split(",") if c.strip()]
    except ValueError as e:
        raise ReducibleModulus(f"Polinomio ilegible: {text!r}") from e
    return tuple(coeffs)


def format_polynomial(coeffs: Union[Sequence[int], galois.Poly]) -> str:
    """Formato "1,1,0,1" de menor a mayor grado."""
    if isinstance(coeffs, galois.Poly):
        coeffs = [int(c) for c in reversed(to_ints(coeffs.coeffs).tolist())]
    return ",".join(str(int(c)) for c in coeffs)


# ── Cuerpo ─────────────────────────────────────────────────

@lru_cache(maxsize=None)
def _galois_class(p: int, k: int, modulus: tuple[int, ...]) -> type:
    if k == 1:
        return galois.GF(p)
    prime_field = galois.GF(p)
    poly = galois.Poly(list(reversed(modulus)), field=prime_field)
    logger.debug(f"Construyendo GF({p}^{k}) con módulo {format_polynomial(modulus)}")
    return galois.GF(p**k, irreducible_poly=poly)


@dataclass(frozen=True)
class FieldTables:
    """Tablas de operación indexadas por entero galois."""
    add: list[list[int]]
    mul: list[list[int]]
    neg: list[int]
    inv: list[int]  # inv[0] = 0 por convención


@lru_cache(maxsize=None)
def _field_tables(p: int, k: int, modulus: tuple[int, ...]) -> FieldTables:
    gf = _galois_class(p, k, modulus)
    elems = gf.elements
    inverses = [0] + to_ints(elems[1:] ** -1).tolist()
    return FieldTables(
        add=to_ints(elems[:, np.newaxis] + elems[np.newaxis, :]).tolist(),
        mul=to_ints(elems[:, np.newaxis] * elems[np.newaxis, :]).tolist(),
        neg=to_ints(-elems).tolist(),
        inv=inverses,
    )


@dataclass(frozen=True)
class Field:
    """GF(p^k) con módulo irreducible explícito (coeficientes de menor a mayor)."""
    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def gf(self) -> type:
        """Clase galois.FieldArray del cuerpo."""
        return _galois_class(self.p, self.k, self.modulus)

    @property
    def tables(self) -> FieldTables:
        return _field_tables(self.p, self.k, self.modulus)

    @property
    def is_prime_field(self) -> bool:
        return self.k == 1

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, int(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def primitive_element(self) -> "FieldElement":
        return FieldElement(self, int(self.gf.primitive_element))

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, v) for v in range(self.order)]

    def from_coefficients(self, coeffs: Sequence[int]) -> "FieldElement":
        """Elemento de coeficientes (de menor a mayor grado) sobre GF(p)."""
        if len(coeffs) > self.k:
            raise ParameterDomain(f"Se esperaban a lo sumo {self.k} coeficientes")
        value = sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))
        return FieldElement(self, value)

    def array(self, values) -> galois.FieldArray:
        """Convierte enteros galois (o FieldElements) en FieldArray."""
        if isinstance(values, FieldElement):
            return self.gf(values.value)
        if isinstance(values, (list, tuple)) and values and isinstance(values[0], FieldElement):
            values = [v.value for v in values]
        return self.gf(to_ints(values))

    def subfield_orders(self) -> list[int]:
        return [self.p**m for m in range(1, self.k + 1) if self.k % m == 0]

    def __str__(self) -> str:
        return f"GF({self.order})"


def field_create(
    p: int,
    k: int = 1,
    modulus: Optional[Union[str, Iterable[int]]] = None,
) -> Field:
    """
    Construye GF(p^k).

    Sin módulo se usa el polinomio mónico irreducible de grado k
    lexicográficamente menor sobre GF(p).
    """
    if not galois.is_prime(int(p)):
        raise NonPrimeCharacteristic(f"{p} no es primo")
    if k < 1:
        raise ParameterDomain(f"Grado de extensión inválido: {k}")

    if modulus is None:
        poly = galois.irreducible_poly(p, k, method="min")
        coeffs = [int(c) for c in reversed(to_ints(poly.coeffs).tolist())]
        return Field(p, k, tuple(coeffs))

    coeffs = list(parse_polynomial(modulus, p) if isinstance(modulus, str) else (int(c) % p for c in modulus))
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) - 1 != k:
        raise ReducibleModulus(f"El módulo {format_polynomial(coeffs)} no tiene grado {k}")

    lead_inverse = pow(coeffs[-1], -1, p)
    coeffs = [(c * lead_inverse) % p for c in coeffs]
    poly = galois.Poly(list(reversed(coeffs)), field=galois.GF(p))
    if not poly.is_irreducible():
        raise ReducibleModulus(f"El módulo {format_polynomial(coeffs)} es reducible sobre GF({p})")
    return Field(p, k, tuple(coeffs))


# ── Elementos ──────────────────────────────────────────────

@dataclass(frozen=True)
class FieldElement:
    """Elemento con semántica de valor; hashable."""
    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise ValueError(f"{self.value} fuera de {self.field}")

    def _other(self, other: "FieldElement") -> galois.FieldArray:
        if not isinstance(other, FieldElement):
            raise TypeError(f"Operando no soportado: {type(other).__name__}")
        if other.field != self.field:
            raise MixedFields(f"{self.field} vs {other.field}")
        return self.field.gf(other.value)

    def _wrap(self, result) -> "FieldElement":
        return FieldElement(self.field, int(result))

    def array(self) -> galois.FieldArray:
        return self.field.gf(self.value)

    def __add__(self, other):
        return self._wrap(self.array() + self._other(other))

    def __sub__(self, other):
        return self._wrap(self.array() - self._other(other))

    def __mul__(self, other):
        return self._wrap(self.array() * self._other(other))

    def __truediv__(self, other):
        divisor = self._other(other)
        if int(divisor) == 0:
            raise ZeroDivisionError("División por cero en el cuerpo")
        return self._wrap(self.array() / divisor)

    def __neg__(self):
        return self._wrap(-self.array())

    def __pow__(self, exponent: int):
        if exponent < 0 and self.value == 0:
            raise ZeroDivisionError("Potencia negativa de cero")
        return self._wrap(self.array() ** int(exponent))

    def inverse(self) -> "FieldElement":
        return self ** -1

    def __int__(self) -> int:
        return self.value

    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def coefficients(self) -> tuple[int, ...]:
        """Coeficientes sobre GF(p), de menor a mayor grado (longitud k)."""
        return tuple(int(c) for c in reversed(to_ints(self.array().vector()).tolist()))

    def __str__(self) -> str:
        if self.field.is_prime_field:
            return str(self.value)
        return "[" + ",".join(str(c) for c in self.coefficients) + "]"
