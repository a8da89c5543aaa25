"""Exact combinatorics of type-G2 crystals.

Words over the seven-letter alphabet with Kashiwara operators, admissible
columns and tableaux, the plactic monoid with its column insertion and
Robinson-Schensted correspondence, and canonical bases of the corresponding
quantized modules with integral Laurent-polynomial coordinates.
"""

from .laurent import (
    LaurentPoly,
    NotDivisibleError,
    exact_divide,
    gamma_symmetrize,
    quantum_factorial,
    quantum_integer,
)
from .words import (
    ALPHABET,
    Weight,
    Word,
    apply_kashiwara,
    component_graph,
    crystal_iso,
    parse_word,
    similar,
    string_stats,
    weight,
    word_to_text,
)
from .tableaux import (
    Shape,
    Tabloid,
    columns_ordered,
    dist,
    enumerate_tableaux,
    is_admissible,
    oscillating_steps,
    tabloid_compare,
    validate_tableau,
)
from .plactic import (
    InsertionOutcome,
    RSPair,
    congruent,
    insert_into_tableau,
    insert_letter,
    p_symbol,
    q_symbol,
    relation_instances,
    rs_inverse,
    rs_pair,
    theta,
    theta_inv,
)
from .modules import (
    ModuleVector,
    divided_power,
    e_v1,
    f_tensor,
    f_v1,
    f_w2,
    t_scalar,
    wedge_normalize,
)
from .canonical import (
    BasisMatrix,
    a_vector,
    canonical_basis,
    column_global_basis,
    monomial_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "BasisMatrix",
    "InsertionOutcome",
    "LaurentPoly",
    "ModuleVector",
    "NotDivisibleError",
    "RSPair",
    "Shape",
    "Tabloid",
    "Weight",
    "Word",
    "a_vector",
    "apply_kashiwara",
    "canonical_basis",
    "column_global_basis",
    "columns_ordered",
    "component_graph",
    "congruent",
    "crystal_iso",
    "dist",
    "divided_power",
    "e_v1",
    "enumerate_tableaux",
    "exact_divide",
    "f_tensor",
    "f_v1",
    "f_w2",
    "gamma_symmetrize",
    "insert_into_tableau",
    "insert_letter",
    "is_admissible",
    "monomial_sequence",
    "oscillating_steps",
    "p_symbol",
    "parse_word",
    "q_symbol",
    "quantum_factorial",
    "quantum_integer",
    "relation_instances",
    "rs_inverse",
    "rs_pair",
    "similar",
    "string_stats",
    "t_scalar",
    "tabloid_compare",
    "theta",
    "theta_inv",
    "validate_tableau",
    "wedge_normalize",
    "weight",
    "word_to_text",
]
