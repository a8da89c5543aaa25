"""The type-G2 plactic monoid: insertion, P- and Q-symbols, Robinson-Schensted.

Letter-into-column insertion has seven cases.  Height 1, column [a], letter x:

    (i)   x <= a, (x,a) != (0,0): the row with reading a.x
    (ii)  (a,x) an admissible column: that column
    (iv)  a.x == 1.(-1): empty
    (iii) otherwise: the single box carrying the image of a.x in the basic crystal

Height 2, column (a,b), letter x, keyed on the word b.x:

    (v)   b.x not a column word: the image x'.a'.b' of a.b.x in the component of
          1.1.2 gives a replacement column (a',b') and a bumped letter x'
    (vi)  b.x an admissible column: contract via the component of 1.1.0
    (vii) b.x a non-admissible column: contract to a single box via the
          component of 1

Every case map is realized by crystal_iso (raise, record, replay), so the
printed correspondence tables serve as test fixtures rather than code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .tableaux import (
    Column,
    EMPTY_TABLOID,
    Shape,
    Tabloid,
    is_admissible,
    is_legal_column,
    validate_tableau,
)
from .words import (
    ALPHABET,
    Word,
    WordError,
    crystal_iso,
    letter_le,
    similar,
)

# The 14-word domain of the two-letter correspondence table, with its images.
THETA: dict[Word, Word] = {
    (2, 1): (1, 2),
    (3, 1): (1, 3),
    (0, 1): (2, 3),
    (-3, 1): (2, 0),
    (-3, 2): (2, -3),
    (-2, 1): (3, 0),
    (-2, 2): (3, -3),
    (-1, 1): (0, 0),
    (-1, 2): (0, -3),
    (-2, 3): (3, -2),
    (-1, 3): (0, -2),
    (-1, 0): (-3, -2),
    (-1, -3): (-3, -1),
    (-1, -2): (-2, -1),
}
THETA_INV: dict[Word, Word] = {v: k for k, v in THETA.items()}


class ThetaDomainError(KeyError):
    """Raised for arguments outside the correspondence table."""


def theta(word: Word) -> Word:
    try:
        return THETA[tuple(word)]
    except KeyError:
        raise ThetaDomainError(f"word {word!r} not in the table domain") from None


def theta_inv(word: Word) -> Word:
    try:
        return THETA_INV[tuple(word)]
    except KeyError:
        raise ThetaDomainError(f"word {word!r} not in the table image") from None


CONTRACTION_CASES = frozenset({"iii", "iv", "vi", "vii"})


@dataclass(frozen=True)
class InsertionOutcome:
    """Bookkeeping for one letter-into-column insertion.

    ``bumped`` lists the letters that continue rightward when the insertion
    happens inside a tableau, in the order they are re-inserted.
    """

    case: str
    replaced_column: Column | None
    bumped: tuple[int, ...]

    @property
    def contraction(self) -> bool:
        return self.case in CONTRACTION_CASES


_HW1: Word = (1,)
_HW112: Word = (1, 1, 2)
_HW110: Word = (1, 1, 0)


@lru_cache(maxsize=None)
def insert_letter(x: int, col: Column) -> tuple[tuple[Column, ...], InsertionOutcome]:
    """Insert letter x into the admissible column, standalone.

    Returns the resulting fragment (a tuple of columns forming a valid
    tableau whose reading is plactically congruent to w(col).x) plus the case
    bookkeeping.
    """
    if not is_admissible(col):
        raise WordError(f"column {col!r} is not admissible")
    if len(col) == 1:
        a = col[0]
        if letter_le(x, a) and (x, a) != (0, 0):
            return ((x,), (a,)), InsertionOutcome("i", None, ())
        if is_admissible((a, x)):
            return ((a, x),), InsertionOutcome("ii", (a, x), ())
        if (a, x) == (1, -1):
            return (), InsertionOutcome("iv", None, ())
        y = crystal_iso((a, x), _HW1)[0]
        return ((y,),), InsertionOutcome("iii", None, (y,))
    a, b = col
    bx = (b, x)
    if not is_legal_column(bx):
        img = crystal_iso((a, b, x), _HW112)
        bumped, new_col = img[0], (img[1], img[2])
        return (new_col, (bumped,)), InsertionOutcome("v", new_col, (bumped,))
    if is_admissible(bx):
        u = crystal_iso((a, b, x), _HW110)
        right = u[0]
        left = crystal_iso((u[1], u[2]), _HW1)[0]
        return ((left,), (right,)), InsertionOutcome("vi", None, (right, left))
    y = crystal_iso((a, crystal_iso(bx, _HW1)[0]), _HW1)[0]
    return ((y,),), InsertionOutcome("vii", None, (y,))


def insert_into_tableau(x: int, t: Tabloid) -> Tabloid:
    """Insert a letter into a tableau, producing a tableau whose reading is
    congruent to reading(t).x."""
    if not t.columns:
        return Tabloid(((x,),))
    first, rest = t.columns[0], Tabloid(t.columns[1:])
    fragment, out = insert_letter(x, first)
    if out.case in ("i", "ii", "iv"):
        result = Tabloid(fragment + rest.columns)
    elif out.case == "iii":
        result = insert_into_tableau(out.bumped[0], rest)
    elif out.case == "v":
        inner = insert_into_tableau(out.bumped[0], rest)
        result = Tabloid((out.replaced_column,) + inner.columns)
    elif out.case == "vi":
        right, left = out.bumped
        result = insert_into_tableau(left, insert_into_tableau(right, rest))
    else:  # vii
        result = insert_into_tableau(out.bumped[0], rest)
    assert validate_tableau(result), f"insertion produced a non-tableau: {result!r}"
    return result


def p_symbol(word: Word) -> Tabloid:
    """Left-to-right insertion fold; the plactic normal form of the word."""
    t = EMPTY_TABLOID
    for x in word:
        t = insert_into_tableau(x, t)
    return t


def q_symbol(word: Word) -> tuple[Shape, ...]:
    """Shapes of the successive P-symbols of the word's prefixes."""
    t = EMPTY_TABLOID
    shapes = []
    for x in word:
        t = insert_into_tableau(x, t)
        shapes.append(t.shape())
    return tuple(shapes)


@dataclass(frozen=True)
class RSPair:
    p: Tabloid
    q: tuple[Shape, ...]

    def to_json(self) -> dict:
        return {
            "p": self.p.to_json(),
            "q": [s.as_pair() for s in self.q],
        }


def rs_pair(word: Word) -> RSPair:
    t = EMPTY_TABLOID
    shapes = []
    for x in word:
        t = insert_into_tableau(x, t)
        shapes.append(t.shape())
    return RSPair(t, tuple(shapes))


class NoPreimageError(ValueError):
    """Raised when an RS pair is outside the image of the correspondence."""


def rs_inverse(pair: RSPair) -> Word:
    """The unique word mapping to the pair, rebuilt by shape-guided search.

    At step k every letter whose insertion matches the recorded shape is
    tried; bijectivity guarantees exactly one full reconstruction survives.
    """
    shapes = pair.q
    if shapes and pair.p.shape() != shapes[-1]:
        raise NoPreimageError("final recorded shape differs from the tableau shape")
    if not shapes and pair.p.columns:
        raise NoPreimageError("empty shape record with a nonempty tableau")

    def search(k: int, t: Tabloid, acc: list[int]) -> Word | None:
        if k == len(shapes):
            return tuple(acc) if t == pair.p else None
        for x in ALPHABET:
            u = insert_into_tableau(x, t)
            if u.shape() == shapes[k]:
                acc.append(x)
                found = search(k + 1, u, acc)
                if found is not None:
                    return found
                acc.pop()
        return None

    word = search(0, EMPTY_TABLOID, [])
    if word is None:
        raise NoPreimageError("pair has no preimage")
    return word


def congruent(w1: Word, w2: Word) -> bool:
    """Plactic congruence, decided by equality of P-symbols."""
    return p_symbol(tuple(w1)) == p_symbol(tuple(w2))


# -- defining relations, materialized -----------------------------------------

# Two-letter contractions: each left side sits in the 7-vertex component of
# 1.0 (or is the null pair 1.(-1)) and maps to its image in the basic crystal.
R1_PAIRS: tuple[tuple[Word, Word], ...] = (
    ((1, 0), (1,)),
    ((1, -3), (2,)),
    ((1, -2), (3,)),
    ((2, -2), (0,)),
    ((0, -1), (-1,)),
    ((3, -1), (-2,)),
    ((2, -1), (-3,)),
)
R2_PAIR: tuple[Word, Word] = ((1, -1), ())


def relation_instances() -> list[tuple[Word, Word]]:
    """Every defining relation at word level.

    The two three-letter families are materialized by scanning all 343 words:
    one family has an admissible-column prefix and a row-word suffix (64
    instances, the component of 1.2.1), the other has two overlapping
    admissible columns (27 instances, the component of 1.2.3).  Right-hand
    sides come from the component isomorphisms.
    """
    pairs: list[tuple[Word, Word]] = list(R1_PAIRS)
    pairs.append(R2_PAIR)
    for a in ALPHABET:
        for b in ALPHABET:
            for c in ALPHABET:
                w = (a, b, c)
                if is_admissible((a, b)):
                    if letter_le(c, b) and (c, b) != (0, 0):
                        pairs.append((w, crystal_iso(w, _HW112)))
                    elif is_admissible((b, c)):
                        pairs.append((w, crystal_iso(w, _HW110)))
    return pairs


def verify_relation_instances() -> bool:
    """Cross-check: every materialized relation is a plactic congruence."""
    return all(similar(lhs, rhs) for lhs, rhs in relation_instances())
