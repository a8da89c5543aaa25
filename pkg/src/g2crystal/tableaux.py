"""Columns, tableaux and tabloids of type G2.

Shapes have columns of height 1 or 2 only.  A tabloid is any juxtaposition of
legal columns with the height-2 columns first; a tableau additionally has
admissible columns with consecutive pairs ordered by the juxtaposition rule.
Readings go column by column from right to left, each column top to bottom.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .words import (
    ALPHABET,
    ORDER_INDEX,
    Weight,
    Word,
    WordError,
    apply_kashiwara,
    letter_le,
    sort_key,
    weight,
)

Column = tuple[int, ...]  # 1 or 2 letters, top to bottom

# Position of each letter along the basic 7-letter crystal chain.
_CHAIN_POS = ORDER_INDEX


def dist(a: int, b: int) -> int:
    """Number of arrows between a and b along the basic crystal chain (a <= b)."""
    if not letter_le(a, b):
        raise WordError(f"dist requires a <= b, got {a}, {b}")
    return _CHAIN_POS[b] - _CHAIN_POS[a]


def is_legal_column(col: Column) -> bool:
    """Height 1, or height 2 with strictly increasing letters or the (0,0) column."""
    if len(col) == 1:
        return col[0] in ORDER_INDEX
    if len(col) != 2:
        return False
    a, b = col
    if a not in ORDER_INDEX or b not in ORDER_INDEX:
        return False
    return (letter_le(a, b) and a != b) or (a == 0 and b == 0)


def is_admissible(col: Column) -> bool:
    """Admissibility filter: height 1 always; height 2 via the dist rule."""
    if not is_legal_column(col):
        return False
    if len(col) == 1:
        return True
    a, b = col
    limit = 2 if a in (1, 0) else 3
    return dist(a, b) <= limit


def all_columns(height: int) -> tuple[Column, ...]:
    """All legal columns of the given height (7 of height 1, 22 of height 2)."""
    if height == 1:
        return tuple((x,) for x in ALPHABET)
    if height == 2:
        return tuple(
            (a, b)
            for a in ALPHABET
            for b in ALPHABET
            if is_legal_column((a, b))
        )
    raise ValueError(f"columns have height 1 or 2, got {height}")


def admissible_columns(height: int) -> tuple[Column, ...]:
    return tuple(c for c in all_columns(height) if is_admissible(c))


def columns_ordered(c1: Column, c2: Column) -> bool:
    """Juxtaposition order: True when c1 may stand immediately left of c2."""
    h1, h2 = len(c1), len(c2)
    if h1 < h2:
        return False
    if h1 == 1:
        a, b = c1[0], c2[0]
        return letter_le(a, b) and (a, b) != (0, 0)
    if h2 == 1:
        a, c = c1[0], c2[0]
        return letter_le(a, c) and (a, c) != (0, 0)
    a, b = c1
    c, d = c2
    if not (letter_le(a, c) and (a, c) != (0, 0)):
        return False
    if not (letter_le(b, d) and (b, d) != (0, 0)):
        return False
    if a in (2, 3, 0):
        return dist(a, d) >= 3
    if a == -3:
        return dist(a, d) >= 2
    return True


@dataclass(frozen=True, order=False)
class Shape:
    """lambda1 columns of height 1 and lambda2 of height 2."""

    lambda1: int
    lambda2: int

    def boxes(self) -> int:
        return self.lambda1 + 2 * self.lambda2

    def column_heights(self) -> tuple[int, ...]:
        return (2,) * self.lambda2 + (1,) * self.lambda1

    def as_pair(self) -> list[int]:
        return [self.lambda1, self.lambda2]


class Tabloid:
    """A juxtaposition of legal columns, tallest first.

    Tabloids index the natural basis of the modules in :mod:`g2crystal.modules`;
    they need not be tableaux.  Immutable and hashable.
    """

    __slots__ = ("columns",)

    def __init__(self, columns: tuple[Column, ...] | list[Column]):
        cols = tuple(tuple(c) for c in columns)
        heights = [len(c) for c in cols]
        if any(h not in (1, 2) for h in heights):
            raise WordError(f"bad column heights in {cols!r}")
        if heights != sorted(heights, reverse=True):
            raise WordError(f"columns must have weakly decreasing heights: {cols!r}")
        for c in cols:
            if not is_legal_column(c):
                raise WordError(f"not a legal column: {c!r}")
        object.__setattr__(self, "columns", cols)

    def __setattr__(self, name, value):
        raise AttributeError("Tabloid is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tabloid) and self.columns == other.columns

    def __hash__(self) -> int:
        return hash(self.columns)

    def __repr__(self) -> str:
        return f"Tabloid({self.columns!r})"

    def shape(self) -> Shape:
        heights = [len(c) for c in self.columns]
        return Shape(heights.count(1), heights.count(2))

    def reading(self) -> Word:
        """Concatenated column readings, rightmost column first."""
        out: list[int] = []
        for c in reversed(self.columns):
            out.extend(c)
        return tuple(out)

    def weight(self) -> Weight:
        return weight(self.reading())

    def sort_key(self) -> tuple[int, ...]:
        return sort_key(self.reading())

    def is_tableau(self) -> bool:
        return validate_tableau(self)

    def to_json(self) -> dict:
        return {
            "shape": self.shape().as_pair(),
            "columns": [list(c) for c in self.columns],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Tabloid":
        return cls(tuple(tuple(int(x) for x in c) for c in data["columns"]))

    def render_text(self) -> str:
        """Two-line rendering, top row above bottom row."""
        top = " ".join(str(c[0]) for c in self.columns)
        bottom = " ".join(str(c[1]) for c in self.columns if len(c) == 2)
        return top if not bottom else top + "\n" + bottom


EMPTY_TABLOID = Tabloid(())


def validate_tableau(t: Tabloid) -> bool:
    """All columns admissible and every consecutive pair ordered."""
    cols = t.columns
    if not all(is_admissible(c) for c in cols):
        return False
    return all(columns_ordered(cols[k], cols[k + 1]) for k in range(len(cols) - 1))


def reading(t: Tabloid) -> Word:
    return t.reading()


def tabloid_compare(t1: Tabloid, t2: Tabloid) -> int:
    """-1, 0 or 1: lexicographic comparison of readings in the crystal order."""
    if t1.shape() != t2.shape():
        raise WordError("tabloid_compare requires equal shapes")
    k1, k2 = t1.sort_key(), t2.sort_key()
    return (k1 > k2) - (k1 < k2)


def highest_weight_tableau(shape: Shape) -> Tabloid:
    """The tableau whose k-th row is filled with the letter k."""
    return Tabloid(((1, 2),) * shape.lambda2 + ((1,),) * shape.lambda1)


@lru_cache(maxsize=None)
def enumerate_tableaux(shape: Shape) -> tuple[Tabloid, ...]:
    """All tableaux of the shape, sorted by the reading order.

    Brute-force filter over per-column candidates; shapes at this scale are
    tiny, so the filter doubles as the definition.
    """
    pools = [admissible_columns(h) for h in shape.column_heights()]
    out = []
    for combo in itertools.product(*pools):
        if all(columns_ordered(combo[k], combo[k + 1]) for k in range(len(combo) - 1)):
            out.append(Tabloid(combo))
    out.sort(key=Tabloid.sort_key)
    return tuple(out)


def enumerate_tabloids(shape: Shape) -> tuple[Tabloid, ...]:
    """All tabloids of the shape, sorted by the reading order."""
    pools = [all_columns(h) for h in shape.column_heights()]
    out = [Tabloid(combo) for combo in itertools.product(*pools)]
    out.sort(key=Tabloid.sort_key)
    return tuple(out)


# -- oscillating tableaux -----------------------------------------------------


def oscillating_steps(shape: Shape) -> tuple[Shape, ...]:
    """Legal successor shapes: add or delete one box, keep, or move one box
    between heights; results with negative column counts are dropped.

    Keeping the shape needs a height-1 column: an insertion that leaves the
    shape unchanged ends by absorbing a letter into a height-1 column, so a
    shape with lambda1 = 0 never repeats.  (Without this restriction the
    length-3 pair count would be 358, not 7^3.)
    """
    l1, l2 = shape.lambda1, shape.lambda2
    candidates = {
        (l1 + 1, l2),      # add a height-1 box
        (l1 - 1, l2 + 1),  # add a box on top of a height-1 column
        (l1 - 1, l2),      # delete a height-1 column
        (l1 + 1, l2 - 1),  # delete a box from a height-2 column
        (l1 + 2, l2 - 1),  # move a box from height 2 to height 1
        (l1 - 2, l2 + 1),  # move a box from height 1 to height 2
    }
    if l1 >= 1:
        candidates.add((l1, l2))  # keep
    return tuple(
        sorted(
            (Shape(a, b) for a, b in candidates if a >= 0 and b >= 0),
            key=lambda s: (s.lambda1, s.lambda2),
        )
    )


def is_oscillating(shapes: tuple[Shape, ...]) -> bool:
    """Valid oscillating tableau: starts at a single box, legal steps after."""
    if not shapes:
        return True
    if shapes[0] != Shape(1, 0):
        return False
    return all(
        shapes[k + 1] in oscillating_steps(shapes[k]) for k in range(len(shapes) - 1)
    )


def crystal_reachable_readings(shape: Shape) -> set[Word]:
    """Readings reachable from the highest-weight tableau by lowering operators."""
    start = highest_weight_tableau(shape).reading()
    seen = {start}
    frontier = [start]
    while frontier:
        w = frontier.pop()
        for i in (1, 2):
            u = apply_kashiwara(w, i, "lower")
            if u is not None and u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen
