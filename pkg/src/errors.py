"""
Jerarquía de excepciones de la biblioteca de geometría de Galois.

Todas derivan de GeometryError. Las que señalan un argumento inválido
derivan además de ValueError.
"""

from typing import Optional


class GeometryError(Exception):
    """Error base de la biblioteca."""


class InvariantViolation(GeometryError):
    """Una postcondición interna no se cumplió (defecto, no estado de error)."""


# ── Cuerpos finitos ─────────────────────────────────────────

class NonPrimeCharacteristic(GeometryError, ValueError):
    """La característica indicada no es un número primo."""


class ReducibleModulus(GeometryError, ValueError):
    """El módulo no es irreducible sobre GF(p) o tiene grado incorrecto."""


class InvalidSubfieldOrder(GeometryError, ValueError):
    """q no es el orden de un subcuerpo del cuerpo dado."""


class MixedFields(GeometryError, ValueError):
    """Operación binaria entre elementos de cuerpos distintos."""


# ── Geometría proyectiva ────────────────────────────────────

class AmbientMismatch(GeometryError, ValueError):
    """Objetos de espacios proyectivos distintos."""


class DimensionMismatch(GeometryError, ValueError):
    """La dimensión de la colineación no coincide con la del objeto."""


class NonInvertibleMatrix(GeometryError, ValueError):
    """Matriz singular donde se requiere una invertible."""


class NotInSpan(GeometryError, ValueError):
    """El vector no pertenece al subespacio generado."""


# ── Subgeometrías ───────────────────────────────────────────

class DegenerateFrame(GeometryError, ValueError):
    """El marco tiene un subconjunto de r puntos dependiente."""


class LineInExtendedHyperplane(GeometryError, ValueError):
    """La recta está contenida en la extensión de un hiperplano de la subgeometría."""


# ── Reducción de cuerpo ─────────────────────────────────────

class ZeroSubspace(GeometryError, ValueError):
    """Se pidió el conjunto lineal del subespacio nulo."""


# ── Splashes ────────────────────────────────────────────────

class NotCollinear(GeometryError, ValueError):
    """Los puntos no están sobre una misma recta."""


class NotDistinct(GeometryError, ValueError):
    """Se esperaban puntos distintos."""


class DegenerateLinearSet(GeometryError, ValueError):
    """El conjunto lineal se reduce a un único punto."""


class GeneralPositionViolated(GeometryError, ValueError):
    """Un punto U_j no aumenta la dimensión del subespacio W."""


class RankExceedsN(GeometryError, ValueError):
    """El rango pedido supera el grado n de la extensión."""


class ParameterDomain(GeometryError, ValueError):
    """Parámetros (q, n, r) fuera del dominio de la operación."""


# ── Equivalencias ───────────────────────────────────────────

class NotTangent(GeometryError, ValueError):
    """El splash no es tangente."""


class NoSolution(GeometryError):
    """El sistema para la tupla s no tiene solución (precondiciones violadas)."""


class GcdIsOne(GeometryError, ValueError):
    """gcd(n, r-1) = 1: no existe el par de subgeometrías distintas."""


class SplashesDiffer(GeometryError, ValueError):
    """Las subgeometrías no comparten el splash sobre la recta."""


class SearchBudgetExceeded(GeometryError):
    """La búsqueda superó el presupuesto de nodos."""

    def __init__(self, message: str, nodes: int, partial: Optional[dict] = None):
        super().__init__(message)
        self.nodes = nodes
        self.partial = partial or {}


# ── CLI ─────────────────────────────────────────────────────

class InvalidConfig(GeometryError, ValueError):
    """Configuración de ejecución inválida."""


class IoFailure(GeometryError, OSError):
    """No se pudo escribir el reporte."""
