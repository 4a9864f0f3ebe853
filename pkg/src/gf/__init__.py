"""Cuerpos finitos GF(p^k), torres GF(q) ⊂ GF(q^n) y subcuerpos."""

from src.gf.field import (
    Field,
    FieldElement,
    FieldTables,
    field_create,
    format_polynomial,
    parse_polynomial,
    to_ints,
)
from src.gf.tower import (
    FieldTower,
    SubfieldEmbedding,
    embed_subfield,
    field_tower,
    frobenius,
    independent_over_subfield,
    minimal_polynomial,
    moore_matrix,
    normalized_vectors,
    subfield_degree,
)

__all__ = [
    "Field",
    "FieldElement",
    "FieldTables",
    "FieldTower",
    "SubfieldEmbedding",
    "embed_subfield",
    "field_create",
    "field_tower",
    "format_polynomial",
    "frobenius",
    "independent_over_subfield",
    "minimal_polynomial",
    "moore_matrix",
    "normalized_vectors",
    "parse_polynomial",
    "subfield_degree",
    "to_ints",
]
