"""Quantized module actions on tabloid-indexed bases.

The height-1 module has basis {v_x} over the seven letters; the height-2
module has basis {v_C} over the 22 legal two-letter columns and is presented
as a quotient of the two-fold tensor square by wedge relations.  General
shapes are tensor products, with the rightmost column of a tabloid as the
leftmost tensor factor.  All coefficients live in Z[q, q^-1].
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .laurent import (
    LaurentPoly,
    ONE,
    ZERO,
    exact_divide,
    q_power,
    quantum_factorial,
)
from .tableaux import Column, Shape, Tabloid, is_legal_column
from .words import E_STEP, F_STEP, Weight, WordError, weight

Term = tuple[Column, LaurentPoly]


def t_scalar(i: int, wt: Weight) -> LaurentPoly:
    """Torus eigenvalue on a weight vector: q^a for node 1, q^(3b) for node 2."""
    if i == 1:
        return q_power(wt.a)
    if i == 2:
        return q_power(3 * wt.b)
    raise WordError(f"node index must be 1 or 2, got {i}")


@lru_cache(maxsize=None)
def column_weight(col: Column) -> Weight:
    return weight(col)


class ModuleVector:
    """A finite Z[q,q^-1]-combination of tabloid basis vectors of one shape."""

    __slots__ = ("shape", "_terms")

    def __init__(self, shape: Shape, terms: dict[Tabloid, LaurentPoly] | None = None):
        self.shape = shape
        clean: dict[Tabloid, LaurentPoly] = {}
        for tab, coeff in (terms or {}).items():
            if coeff:
                if tab.shape() != shape:
                    raise WordError(f"tabloid {tab!r} has the wrong shape")
                clean[tab] = coeff
        self._terms = clean

    @classmethod
    def basis(cls, tab: Tabloid) -> "ModuleVector":
        return cls(tab.shape(), {tab: ONE})

    @classmethod
    def zero(cls, shape: Shape) -> "ModuleVector":
        return cls(shape, {})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, tab: Tabloid) -> LaurentPoly:
        return self._terms.get(tab, ZERO)

    def terms(self) -> list[tuple[Tabloid, LaurentPoly]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def support(self) -> list[Tabloid]:
        return [tab for tab, _ in self.terms()]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ModuleVector)
            and self.shape == other.shape
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.shape, tuple(self.terms())))

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        if self.shape != other.shape:
            raise WordError("shape mismatch in vector addition")
        terms = dict(self._terms)
        for tab, coeff in other._terms.items():
            v = terms.get(tab, ZERO) + coeff
            if v:
                terms[tab] = v
            else:
                terms.pop(tab, None)
        out = ModuleVector.__new__(ModuleVector)
        out.shape = self.shape
        out._terms = terms
        return out

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + other.scaled(LaurentPoly.const(-1))

    def scaled(self, factor: LaurentPoly) -> "ModuleVector":
        if not factor:
            return ModuleVector.zero(self.shape)
        out = ModuleVector.__new__(ModuleVector)
        out.shape = self.shape
        out._terms = {tab: coeff * factor for tab, coeff in self._terms.items()}
        return out

    def map_coefficients(self, fn) -> "ModuleVector":
        return ModuleVector(self.shape, {t: fn(c) for t, c in self._terms.items()})

    def homogeneous_weight(self) -> Weight | None:
        """Common weight of the support, or None for the zero vector.

        Raises if the support mixes weights; every operation here preserves
        homogeneity, so a mix indicates a bug.
        """
        wts = {tab.weight() for tab in self._terms}
        if not wts:
            return None
        if len(wts) > 1:
            raise WordError(f"inhomogeneous vector: weights {wts}")
        return wts.pop()

    def to_json(self) -> dict:
        return {
            "shape": self.shape.as_pair(),
            "terms": [
                {"tabloid": tab.to_json(), "coeff": coeff.to_pairs()}
                for tab, coeff in self.terms()
            ],
        }

    def __repr__(self) -> str:
        body = " + ".join(
            f"({coeff.to_text()})*v[{'|'.join(map(str, tab.columns))}]"
            for tab, coeff in self.terms()
        )
        return f"ModuleVector({body or '0'})"


SHAPE1 = Shape(1, 0)
SHAPE2 = Shape(0, 1)


def _vec1(terms: Iterable[tuple[int, LaurentPoly]]) -> ModuleVector:
    return ModuleVector(SHAPE1, {Tabloid(((x,),)): c for x, c in terms})


def f_v1(i: int, x: int) -> ModuleVector:
    """Chevalley lowering on the 7-dimensional module."""
    if x == 0:
        if i == 1:
            return _vec1([(-3, LaurentPoly({1: 1, -1: 1}))])
        return ModuleVector.zero(SHAPE1)
    y = F_STEP[i].get(x)
    return _vec1([(y, ONE)]) if y is not None else ModuleVector.zero(SHAPE1)


def e_v1(i: int, x: int) -> ModuleVector:
    """Chevalley raising on the 7-dimensional module."""
    if x == 0:
        if i == 1:
            return _vec1([(3, LaurentPoly({1: 1, -1: 1}))])
        return ModuleVector.zero(SHAPE1)
    y = E_STEP[i].get(x)
    return _vec1([(y, ONE)]) if y is not None else ModuleVector.zero(SHAPE1)


def _bar_letter(x: int) -> int:
    return -x


def _vec2(terms: Iterable[tuple[Column, LaurentPoly]]) -> ModuleVector:
    out: dict[Tabloid, LaurentPoly] = {}
    for col, coeff in terms:
        tab = Tabloid((col,))
        prev = out.get(tab, ZERO) + coeff
        if prev:
            out[tab] = prev
        else:
            out.pop(tab, None)
    return ModuleVector(SHAPE2, out)


# Exchange relations for non-column pairs with x > y and x != bar(y): the
# prefactor exponent depends only on the underlying admissible pair (y, x).
_SWAP_Q3 = {(3, 2), (-2, -3)}

# v_x ^ v_y for the barred pairs and the non-admissible exchanges, written as
# {(x, y): ((column, coefficient), ...)}.
_WEDGE_SPECIAL: dict[tuple[int, int], tuple[tuple[Column, LaurentPoly], ...]] = {
    (-3, 3): (((3, -3), LaurentPoly({4: -1})), ((0, 0), LaurentPoly({1: -1}))),
    (-2, 2): (
        ((2, -2), LaurentPoly({4: -1})),
        ((3, -3), LaurentPoly({7: 1, 1: -1})),
        ((0, 0), LaurentPoly({4: 1})),
    ),
    (-1, 1): (
        ((1, -1), LaurentPoly({4: -1})),
        ((2, -2), LaurentPoly({5: 1, 3: -1})),
        ((3, -3), LaurentPoly({8: -1, 6: 1, 4: 1, 2: 1})),
        ((0, 0), LaurentPoly({5: -1, 3: 1, 1: -1})),
    ),
    (0, 1): (((1, 0), LaurentPoly({2: -1})), ((2, 3), LaurentPoly({5: 1, 1: -1}))),
    (-3, 1): (((1, -3), LaurentPoly({3: -1})), ((2, 0), LaurentPoly({3: 1, 1: -1}))),
    (-2, 1): (((1, -2), LaurentPoly({3: -1})), ((3, 0), LaurentPoly({3: 1, 1: -1}))),
    (-1, 0): (((0, -1), LaurentPoly({2: -1})), ((-3, -2), LaurentPoly({5: 1, 1: -1}))),
    (-1, 3): (((3, -1), LaurentPoly({3: -1})), ((0, -2), LaurentPoly({3: 1, 1: -1}))),
    (-1, 2): (((2, -1), LaurentPoly({3: -1})), ((0, -3), LaurentPoly({3: 1, 1: -1}))),
}


def wedge_normalize(x: int, y: int) -> ModuleVector:
    """Express v_x ^ v_y in the 22-column basis of the height-2 module."""
    if is_legal_column((x, y)):
        return _vec2([((x, y), ONE)])
    if x == y:
        return ModuleVector.zero(SHAPE2)
    special = _WEDGE_SPECIAL.get((x, y))
    if special is not None:
        return _vec2(special)
    # Plain exchange: (y, x) is an admissible column and x != bar(y).
    if x == 0 or y == 0:
        n = 2
    elif (x, y) in _SWAP_Q3:
        n = 3
    else:
        n = 1
    return _vec2([((y, x), q_power(n, -1))])


def _p(pairs: dict[int, int]) -> LaurentPoly:
    return LaurentPoly(pairs)


# Printed lowering tables on the 22-column basis, keyed by node index.
F_TABLES: dict[int, dict[Column, tuple[Term, ...]]] = {
    1: {
        (1, 3): (((2, 3), ONE), ((1, 0), _p({1: 1}))),
        (1, 0): (((2, 0), ONE), ((1, -3), _p({2: 1, 0: 1}))),
        (1, -3): (((2, -3), ONE),),
        (1, -2): (((2, -2), ONE), ((1, -1), _p({1: 1}))),
        (1, -1): (((2, -1), ONE),),
        (2, 3): (((2, 0), _p({-1: 1})),),
        (2, 0): (((2, -3), _p({0: 1, -2: 1})),),
        (2, -2): (((2, -1), _p({-1: 1})),),
        (3, 0): (((0, 0), ONE), ((3, -3), _p({3: 1, 1: 1}))),
        (3, -3): (((0, -3), ONE),),
        (3, -2): (((0, -2), ONE), ((3, -1), _p({2: 1}))),
        (3, -1): (((0, -1), ONE),),
        (0, 0): (((0, -3), _p({-1: 1, 3: -1})),),
        (0, -2): (((-3, -2), _p({1: 1, -1: 1})), ((0, -1), ONE)),
        (0, -1): (((-3, -1), _p({1: 1, -1: 1})),),
        (-3, -2): (((-3, -1), _p({-2: 1})),),
    },
    2: {
        (1, 2): (((1, 3), ONE),),
        (2, -1): (((3, -1), ONE),),
        (2, 0): (((3, 0), ONE),),
        (-3, -1): (((-2, -1), ONE),),
        (0, -3): (((0, -2), ONE),),
        (1, -3): (((1, -2), ONE),),
        (2, -3): (((3, -3), ONE), ((2, -2), _p({3: 1}))),
        (2, -2): (((3, -2), ONE),),
        (3, -3): (((3, -2), _p({-3: 1})),),
    },
}


def f_w2(i: int, col: Column) -> ModuleVector:
    """Chevalley lowering on the 22-dimensional height-2 module (table lookup)."""
    if len(col) != 2 or not is_legal_column(col):
        raise WordError(f"not a height-2 column: {col!r}")
    return _vec2(F_TABLES[i].get(tuple(col), ()))


def f_w2_from_wedge(i: int, col: Column) -> ModuleVector:
    """Re-derivation of f_w2 from the tensor rule plus wedge normalization.

    Kept as an independent oracle against transcription errors in the tables.
    """
    c1, c2 = col
    out = ModuleVector.zero(SHAPE2)
    for tab, coeff in f_v1(i, c1).terms():
        out = out + wedge_normalize(tab.columns[0][0], c2).scaled(coeff)
    t = t_scalar(i, weight((c1,)))
    for tab, coeff in f_v1(i, c2).terms():
        out = out + wedge_normalize(c1, tab.columns[0][0]).scaled(coeff * t)
    return out


def column_action(i: int, col: Column) -> tuple[Term, ...]:
    """Lowering action on a single column basis vector, as (column, coeff) pairs."""
    if len(col) == 1:
        x = col[0]
        if x == 0:
            if i == 1:
                return (((-3,), LaurentPoly({1: 1, -1: 1})),)
            return ()
        y = F_STEP[i].get(x)
        return (((y,), ONE),) if y is not None else ()
    return F_TABLES[i].get(tuple(col), ())


def f_tensor(i: int, vec: ModuleVector) -> ModuleVector:
    """Lowering on a tensor product: act on each factor with the torus twist
    of everything to its left.

    The leftmost tensor factor is the rightmost column of each tabloid.
    """
    terms: dict[Tabloid, LaurentPoly] = {}
    for tab, coeff in vec._terms.items():
        cols = tab.columns
        prefix = Weight(0, 0)
        for pos in range(len(cols) - 1, -1, -1):
            col = cols[pos]
            action = column_action(i, col)
            if action:
                factor = coeff * t_scalar(i, prefix)
                for new_col, acoeff in action:
                    new_tab = Tabloid(cols[:pos] + (new_col,) + cols[pos + 1:])
                    v = terms.get(new_tab, ZERO) + factor * acoeff
                    if v:
                        terms[new_tab] = v
                    else:
                        terms.pop(new_tab, None)
            prefix = prefix + column_weight(col)
    return ModuleVector(vec.shape, terms)


def divided_power(i: int, m: int, vec: ModuleVector) -> ModuleVector:
    """f_i^(m) = f_i^m / [m]_i!, evaluated exactly."""
    if m < 0:
        raise WordError("divided power needs m >= 0")
    out = vec
    for _ in range(m):
        out = f_tensor(i, out)
    if m >= 2:
        fact = quantum_factorial(m, i)
        out = out.map_coefficients(lambda c: exact_divide(c, fact))
    return out


def tensor_pair(left: ModuleVector, right: ModuleVector) -> ModuleVector:
    """Combine vectors over two shapes into one over the concatenated shape.

    ``left`` is the leftmost tensor block, i.e. its columns end up to the
    RIGHT of ``right``'s columns in the combined tabloids.
    """
    s = Shape(
        left.shape.lambda1 + right.shape.lambda1,
        left.shape.lambda2 + right.shape.lambda2,
    )
    terms: dict[Tabloid, LaurentPoly] = {}
    for tl, cl in left._terms.items():
        for tr, cr in right._terms.items():
            tab = Tabloid(tr.columns + tl.columns)
            v = terms.get(tab, ZERO) + cl * cr
            if v:
                terms[tab] = v
    return ModuleVector(s, terms)
