"""
Álgebra lineal sobre cuerpos finitos: formas escalonadas, núcleos,
inversas y resolución en un subespacio generado. Todo pasa por galois;
las entradas y salidas son enteros galois.
"""

import itertools
import logging
from typing import Sequence

import galois
import numpy as np

from src.errors import NonInvertibleMatrix, NotInSpan
from src.gf import Field, to_ints

logger = logging.getLogger(__name__)

Rows = tuple[tuple[int, ...], ...]


def _as_matrix(rows, width: int) -> np.ndarray:
    arr = to_ints(rows)
    return arr.reshape(-1, width)


def rref(field: Field, rows, width: int) -> Rows:
    """Forma escalonada reducida sin filas nulas."""
    arr = _as_matrix(rows, width)
    if arr.shape[0] == 0:
        return ()
    reduced = to_ints(field.gf(arr).row_reduce())
    return tuple(tuple(r) for r in reduced.tolist() if any(r))


def rank(field: Field, rows, width: int) -> int:
    arr = _as_matrix(rows, width)
    if arr.shape[0] == 0:
        return 0
    return int(np.linalg.matrix_rank(field.gf(arr)))


def null_space(field: Field, rows, width: int) -> Rows:
    """Base (en RREF) de {x : rows · x = 0}."""
    arr = _as_matrix(rows, width)
    if arr.shape[0] == 0 or not arr.any():
        return tuple(tuple(int(i == j) for j in range(width)) for i in range(width))
    kernel = to_ints(field.gf(arr).null_space())
    if kernel.size == 0:
        return ()
    return rref(field, kernel, width)


def inverse(field: Field, matrix) -> np.ndarray:
    arr = to_ints(matrix)
    size = arr.shape[0]
    if arr.shape != (size, size) or rank(field, arr, size) != size:
        raise NonInvertibleMatrix(f"Matriz {arr.shape} no invertible sobre {field}")
    return to_ints(np.linalg.inv(field.gf(arr)))


def normalize_rows(field: Field, vectors) -> np.ndarray:
    """Escala cada fila para que su primera coordenada no nula valga 1."""
    gf = field.gf
    arr = vectors if isinstance(vectors, galois.FieldArray) else gf(to_ints(vectors))
    arr = arr.reshape(-1, arr.shape[-1])
    nonzero = to_ints(arr) != 0
    if not nonzero.any(axis=1).all():
        raise ValueError("Vector nulo: no define un punto proyectivo")
    lead_index = np.argmax(nonzero, axis=1)
    lead = arr[np.arange(arr.shape[0]), lead_index]
    return to_ints(arr / lead[:, np.newaxis])


def independent_columns(field: Field, rows, width: int) -> tuple[int, ...]:
    """Primer conjunto lexicográfico de columnas con menor principal invertible."""
    arr = _as_matrix(rows, width)
    k = arr.shape[0]
    for cols in itertools.combinations(range(width), k):
        if rank(field, arr[:, list(cols)], k) == k:
            return cols
    raise NonInvertibleMatrix("Las filas no son independientes")


def solve_in_span(field: Field, rows, target: Sequence[int]) -> np.ndarray:
    """Coeficientes c con c · rows = target; rows independientes."""
    target = to_ints(target).reshape(-1)
    arr = _as_matrix(rows, target.size)
    cols = independent_columns(field, arr, target.size)
    gf = field.gf
    minor_inverse = np.linalg.inv(gf(arr[:, list(cols)]))
    coeffs = gf(target[list(cols)]).reshape(1, -1) @ minor_inverse
    if not np.array_equal(to_ints(coeffs @ gf(arr)).reshape(-1), target):
        raise NotInSpan(f"{target.tolist()} no pertenece al subespacio generado")
    return to_ints(coeffs).reshape(-1)


def complete_basis(field: Field, rows, width: int) -> np.ndarray:
    """Completa filas independientes a una base de F^width con vectores canónicos."""
    basis = [list(r) for r in _as_matrix(rows, width).tolist()]
    current = rank(field, basis, width)
    if current != len(basis):
        raise NonInvertibleMatrix("Las filas a completar no son independientes")
    for j in range(width):
        if len(basis) == width:
            break
        candidate = basis + [[int(i == j) for i in range(width)]]
        if rank(field, candidate, width) > current:
            basis = candidate
            current += 1
    return np.array(basis, dtype=np.int64)
