import pytest

from g2crystal.canonical import (
    a_vector,
    canonical_basis,
    column_global_basis,
    descent_steps,
    evaluate_monomial,
    monomial_sequence,
)
from g2crystal.laurent import LaurentPoly, ONE
from g2crystal.modules import ModuleVector
from g2crystal.tableaux import (
    Shape,
    Tabloid,
    enumerate_tableaux,
    highest_weight_tableau,
)
from g2crystal.words import parse_word

W = parse_word


def P(pairs):
    return LaurentPoly(pairs)


def vec(shape, entries):
    return ModuleVector(shape, {Tabloid(cols): coeff for cols, coeff in entries.items()})


# The 14-row column table; the (3,-3) row carries (2,-2), forced by weight
# homogeneity and the node-2 lowering table.
COLUMN_TABLE = {
    (1, 2): {((1, 2),): ONE},
    (1, 3): {((1, 3),): ONE},
    (2, 3): {((2, 3),): ONE, ((1, 0),): P({1: 1})},
    (2, -3): {((2, -3),): ONE},
    (2, 0): {((2, 0),): ONE, ((1, -3),): P({2: 1})},
    (3, 0): {((3, 0),): ONE, ((1, -2),): P({2: 1})},
    (3, -3): {((3, -3),): ONE, ((2, -2),): P({3: 1})},
    (-2, -1): {((-2, -1),): ONE},
    (-3, -1): {((-3, -1),): ONE},
    (-3, -2): {((-3, -2),): ONE, ((0, -1),): P({1: 1})},
    (3, -2): {((3, -2),): ONE},
    (0, -2): {((0, -2),): ONE, ((3, -1),): P({2: 1})},
    (0, -3): {((0, -3),): ONE, ((2, -1),): P({2: 1})},
    (0, 0): {
        ((0, 0),): ONE,
        ((3, -3),): P({3: 1, 1: 1}),
        ((2, -2),): P({2: 1}),
        ((1, -1),): P({3: 1}),
    },
}


# -- descent -------------------------------------------------------------------


def test_monomial_sequence_trivial():
    for shape in (Shape(1, 0), Shape(0, 1), Shape(2, 1)):
        assert monomial_sequence(highest_weight_tableau(shape)) == ()


def test_monomial_sequence_single_columns():
    assert monomial_sequence(Tabloid(((1, 3),))) == ((2, 1),)
    # the ambiguous column reading 0.-2 starts with node 1 and follows the
    # unique alternating path back to the top column
    assert monomial_sequence(Tabloid(((0, -2),))) == ((1, 1), (2, 2), (1, 3), (2, 1))


def test_worked_descent_example():
    t = Tabloid(((3, -2), (-3, -1), (-1,)))
    steps = descent_steps(t)
    expected_intermediates = [
        Tabloid(((3, -2), (3, -2), (-2,))),
        Tabloid(((2, -3), (2, -3), (-3,))),
        Tabloid(((1, 3), (1, 3), (3,))),
        Tabloid(((1, 2), (1, 2), (2,))),
        Tabloid(((1, 2), (1, 2), (1,))),
    ]
    assert [s[2] for s in steps] == expected_intermediates
    # the four printed factors, plus the final step the weight count forces
    # (13 node-1 lowerings are needed in total, the printed monomial has 12)
    assert monomial_sequence(t) == ((1, 4), (2, 5), (1, 8), (2, 3), (1, 1))


def test_monomial_factors_alternate():
    for shape in (Shape(2, 0), Shape(1, 1), Shape(0, 2)):
        for t in enumerate_tableaux(shape):
            seq = monomial_sequence(t)
            assert all(seq[k][0] != seq[k + 1][0] for k in range(len(seq) - 1))


def test_monomial_rejects_non_tableau():
    with pytest.raises(Exception):
        monomial_sequence(Tabloid(((0, 0), (0, 0))))


# -- a_vector ------------------------------------------------------------------


def test_a_vector_highest_weight():
    t = highest_weight_tableau(Shape(1, 1))
    assert a_vector(t) == ModuleVector.basis(t)


def test_a_vector_diagonal_is_one():
    for t in enumerate_tableaux(Shape(1, 1))[::9]:
        assert a_vector(t).coefficient(t) == ONE


def test_a_vector_on_columns_is_the_table():
    for col, entries in COLUMN_TABLE.items():
        assert a_vector(Tabloid((col,))) == vec(Shape(0, 1), entries)


def test_evaluate_monomial_matches_paper_example():
    t = Tabloid(((3, -2), (-3, -1), (-1,)))
    v = evaluate_monomial(t.shape(), monomial_sequence(t))
    assert v.coefficient(t) == ONE
    assert v.homogeneous_weight() == t.weight()


# -- column route ----------------------------------------------------------------


def test_column_global_basis_table():
    for col, entries in COLUMN_TABLE.items():
        assert column_global_basis(col) == vec(Shape(0, 1), entries)


def test_column_global_basis_rejects():
    with pytest.raises(Exception):
        column_global_basis((1, 0))
    with pytest.raises(Exception):
        column_global_basis((3,))


# -- the correction loop -----------------------------------------------------------


def test_canonical_basis_column_shape_matches_table():
    matrix = canonical_basis(Shape(0, 1))
    assert len(matrix.tableaux) == 14
    for col, entries in COLUMN_TABLE.items():
        idx = matrix.tableaux.index(Tabloid((col,)))
        assert matrix.vectors[idx] == vec(Shape(0, 1), entries)


def test_canonical_basis_letters_identity():
    matrix = canonical_basis(Shape(1, 0))
    assert len(matrix.tableaux) == 7
    for t, v in zip(matrix.tableaux, matrix.vectors):
        assert v == ModuleVector.basis(t)


@pytest.mark.parametrize("shape", [Shape(2, 0), Shape(1, 1), Shape(2, 1)])
def test_canonical_basis_properties(shape):
    matrix = canonical_basis(shape)
    assert matrix.tableaux[0] == highest_weight_tableau(shape)
    for t, v in zip(matrix.tableaux, matrix.vectors):
        assert v.coefficient(t) == ONE
        for tau, d in v.terms():
            assert d.in_z_q()
            if tau != t:
                assert d.at_q_zero() == 0
            assert tau.weight() == t.weight()
            assert tau.sort_key() <= t.sort_key()
    for gamma in matrix.gammas:
        assert gamma.is_bar_symmetric()


def test_correction_is_idempotent():
    matrix = canonical_basis(Shape(1, 1))
    for idx, v in enumerate(matrix.vectors):
        for j in range(idx):
            assert v.coefficient(matrix.tableaux[j]).in_q_z_q()


GOLDEN_COLUMN_CSV = """\
,1 2,1 3,2 3,2 0,2 -3,3 0,3 -3,3 -2,0 0,0 -3,0 -2,-3 -2,-3 -1,-2 -1
1 2,1,0,0,0,0,0,0,0,0,0,0,0,0,0
1 3,0,1,0,0,0,0,0,0,0,0,0,0,0,0
1 0,0,0,q,0,0,0,0,0,0,0,0,0,0,0
1 -3,0,0,0,q^2,0,0,0,0,0,0,0,0,0,0
1 -2,0,0,0,0,0,q^2,0,0,0,0,0,0,0,0
1 -1,0,0,0,0,0,0,0,0,q^3,0,0,0,0,0
2 3,0,0,1,0,0,0,0,0,0,0,0,0,0,0
2 0,0,0,0,1,0,0,0,0,0,0,0,0,0,0
2 -3,0,0,0,0,1,0,0,0,0,0,0,0,0,0
2 -2,0,0,0,0,0,0,q^3,0,q^2,0,0,0,0,0
2 -1,0,0,0,0,0,0,0,0,0,q^2,0,0,0,0
3 0,0,0,0,0,0,1,0,0,0,0,0,0,0,0
3 -3,0,0,0,0,0,0,1,0,q + q^3,0,0,0,0,0
3 -2,0,0,0,0,0,0,0,1,0,0,0,0,0,0
3 -1,0,0,0,0,0,0,0,0,0,0,q^2,0,0,0
0 0,0,0,0,0,0,0,0,0,1,0,0,0,0,0
0 -3,0,0,0,0,0,0,0,0,0,1,0,0,0,0
0 -2,0,0,0,0,0,0,0,0,0,0,1,0,0,0
0 -1,0,0,0,0,0,0,0,0,0,0,0,q,0,0
-3 -2,0,0,0,0,0,0,0,0,0,0,0,1,0,0
-3 -1,0,0,0,0,0,0,0,0,0,0,0,0,1,0
-2 -1,0,0,0,0,0,0,0,0,0,0,0,0,0,1
"""


def test_column_shape_golden_csv():
    assert canonical_basis(Shape(0, 1)).to_csv() == GOLDEN_COLUMN_CSV


def test_entry_and_exports():
    matrix = canonical_basis(Shape(0, 1))
    assert matrix.entry(Tabloid(((1, 0),)), Tabloid(((2, 3),))) == P({1: 1})
    assert matrix.entry(Tabloid(((1, 2),)), Tabloid(((2, 3),))).is_zero()
    csv_text = matrix.to_csv()
    lines = csv_text.strip().split("\n")
    assert len(lines) == 1 + 22
    assert lines[0].startswith(",1 2,1 3")
    data = matrix.to_json()
    assert data["shape"] == [0, 1]
    assert len(data["columns"]) == 14
