"""Canonical bases: monomial descent, column vectors, and the correction loop.

For a tableau T the descent walks T back to the highest-weight filling,
emitting one divided-power factor per step; evaluating the factors on the
highest-weight vector gives a bar-invariant vector A(T) that is unitriangular
against the tabloid basis.  The correction loop then strips the bar-symmetric
parts of the coefficients on smaller tableaux, leaving the basis vector G(T)
whose off-diagonal coordinates vanish at q = 0.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .laurent import LaurentPoly, ONE, gamma_symmetrize
from .modules import F_TABLES, ModuleVector, divided_power
from .tableaux import (
    Column,
    Shape,
    Tabloid,
    enumerate_tableaux,
    enumerate_tabloids,
    highest_weight_tableau,
    is_admissible,
    validate_tableau,
)
from .words import (
    F_STEP,
    Word,
    WordError,
    apply_kashiwara,
    greedy_raise,
    string_stats,
    weight,
    word_to_text,
)

MonomialWord = tuple[tuple[int, int], ...]  # (node index, divided power) factors


class CanonicalBasisError(RuntimeError):
    """A structural guarantee of the construction failed; indicates a bug."""


_HW_COLUMN_READINGS = {(1,), (1, 2)}


def _module_f_is_zero(i: int, col: Column) -> bool:
    """Whether the Chevalley lowering kills the column basis vector."""
    if len(col) == 1:
        x = col[0]
        if x == 0:
            return i != 1
        return x not in F_STEP[i]
    return tuple(col) not in F_TABLES[i]


def _raise_fully(col: Column, i: int) -> tuple[Column, int]:
    """Raise the column word to the top of its i-string; return (column, steps)."""
    w: Word = tuple(col)
    steps = 0
    while True:
        u = apply_kashiwara(w, i, "raise")
        if u is None:
            return w, steps
        w = u
        steps += 1


def _column_depth(col: Column) -> int:
    """Crystal depth of a column below its component's highest-weight column."""
    top = weight((1,)) if len(col) == 1 else weight((1, 2))
    return weight(tuple(col)).height_from(top)


def monomial_sequence(t: Tabloid) -> MonomialWord:
    """Descent from a tableau to the highest-weight filling.

    Each pass picks the rightmost column whose reading is not highest weight,
    the node index that raises it (node 1 for the ambiguous reading 0.-2),
    and a window of columns to raise together; the emitted (index, power)
    pairs, applied right-to-left as divided powers to the highest-weight
    vector, give A(t).
    """
    return tuple((i, r) for i, r, _ in descent_steps(t))


def descent_steps(t: Tabloid) -> list[tuple[int, int, Tabloid]]:
    """The descent passes as (node index, power, resulting tableau) triples."""
    if not validate_tableau(t):
        raise WordError(f"not a tableau: {t!r}")
    target = highest_weight_tableau(t.shape())
    seq: list[tuple[int, int, Tabloid]] = []
    current = t
    while current != target:
        cols = current.columns
        k = max(
            (j for j, c in enumerate(cols) if tuple(c) not in _HW_COLUMN_READINGS),
            default=None,
        )
        if k is None:
            raise CanonicalBasisError(f"no descent column but {current!r} != target")
        wk = tuple(cols[k])
        if wk == (0, -2):
            i1 = 1
        else:
            raisable = [i for i in (1, 2) if string_stats(wk, i)[0] > 0]
            if len(raisable) != 1:
                raise CanonicalBasisError(f"ambiguous raising index on {wk!r}")
            i1 = raisable[0]
        if k == 0:
            l = 0
        elif not _module_f_is_zero(i1, cols[k]) or string_stats(tuple(cols[k - 1]), i1)[0] == 0:
            l = k
        else:
            l = k - 1
            while (
                l > 0
                and _module_f_is_zero(i1, cols[l])
                and string_stats(tuple(cols[l - 1]), i1)[0] > 0
            ):
                l -= 1
        eps = [string_stats(tuple(cols[j]), i1)[0] for j in range(l, k + 1)]
        r = sum(eps)
        if r <= 0:
            raise CanonicalBasisError(f"descent stalled on {current!r}")
        new_cols = list(cols)
        for off, j in enumerate(range(l, k + 1)):
            col, steps = _raise_fully(cols[j], i1)
            if steps != eps[off]:
                raise CanonicalBasisError("column raising mismatch")
            new_cols[j] = col
        nxt = Tabloid(tuple(new_cols))
        if not validate_tableau(nxt):
            raise CanonicalBasisError(f"descent left the tableau family: {nxt!r}")
        # Total crystal depth of the columns strictly decreases each pass.
        if sum(map(_column_depth, nxt.columns)) >= sum(map(_column_depth, cols)):
            raise CanonicalBasisError("descent failed to make progress")
        seq.append((i1, r, nxt))
        current = nxt
    return seq


def evaluate_monomial(shape: Shape, seq: MonomialWord) -> ModuleVector:
    """Apply the divided-power factors, rightmost first, to the highest-weight vector."""
    v = ModuleVector.basis(highest_weight_tableau(shape))
    for i, r in reversed(seq):
        v = divided_power(i, r, v)
    return v


def a_vector(t: Tabloid) -> ModuleVector:
    """The monomial basis vector attached to a tableau.

    Asserts the structural guarantees: unit coefficient on t itself, support
    weight-homogeneous and bounded by t in the reading order.
    """
    seq = monomial_sequence(t)
    v = evaluate_monomial(t.shape(), seq)
    if v.coefficient(t) != ONE:
        raise CanonicalBasisError(f"diagonal coefficient is not 1 for {t!r}")
    v.homogeneous_weight()
    key = t.sort_key()
    for tab, _ in v.terms():
        if tab.sort_key() > key:
            raise CanonicalBasisError(f"support above the diagonal for {t!r}")
    return v


def column_global_basis(col: Column) -> ModuleVector:
    """Canonical basis vector of an admissible height-2 column.

    The raising record of the column word fixes the divided-power path from
    the highest-weight column; the smallest-index-first record reproduces the
    stated branch at the one ambiguous reading 0.-2.
    """
    col = tuple(col)
    if len(col) != 2 or not is_admissible(col):
        raise WordError(f"not an admissible height-2 column: {col!r}")
    record, hw = greedy_raise(col)
    if hw != (1, 2):
        raise CanonicalBasisError(f"column {col!r} did not raise to the top column")
    v = ModuleVector.basis(Tabloid(((1, 2),)))
    for i, power in _runs(tuple(reversed(record))):
        v = divided_power(i, power, v)
    return v


def _runs(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    out: list[tuple[int, int]] = []
    for i in seq:
        if out and out[-1][0] == i:
            out[-1] = (i, out[-1][1] + 1)
        else:
            out.append((i, 1))
    return out


@dataclass(frozen=True)
class BasisMatrix:
    """Coordinates of the canonical basis on the tabloid basis of one shape."""

    shape: Shape
    tableaux: tuple[Tabloid, ...]
    vectors: tuple[ModuleVector, ...]
    gammas: tuple[LaurentPoly, ...]

    def entry(self, tau: Tabloid, t: Tabloid) -> LaurentPoly:
        return self.vectors[self.tableaux.index(t)].coefficient(tau)

    def tabloids(self) -> tuple[Tabloid, ...]:
        return enumerate_tabloids(self.shape)

    def to_json(self) -> dict:
        return {
            "shape": self.shape.as_pair(),
            "tableaux": [t.to_json() for t in self.tableaux],
            "columns": [v.to_json() for v in self.vectors],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        rows = self.tabloids()
        writer.writerow([""] + [word_to_text(t.reading()) for t in self.tableaux])
        for tau in rows:
            writer.writerow(
                [word_to_text(tau.reading())]
                + [v.coefficient(tau).to_text() for v in self.vectors]
            )
        return buf.getvalue()


def canonical_basis(shape: Shape) -> BasisMatrix:
    """Canonical basis of the irreducible module of the given highest weight,
    expanded over tabloids.

    Builds the monomial vectors in increasing reading order, then corrects
    each one by the bar-symmetric parts of its coefficients on the smaller
    tableaux, largest first.
    """
    tableaux = enumerate_tableaux(shape)
    if tableaux and tableaux[0] != highest_weight_tableau(shape):
        raise CanonicalBasisError("highest-weight tableau is not minimal")
    vectors: list[ModuleVector] = []
    gammas: list[LaurentPoly] = []
    for idx, t in enumerate(tableaux):
        v = a_vector(t)
        for j in range(idx - 1, -1, -1):
            alpha = v.coefficient(tableaux[j])
            gamma = gamma_symmetrize(alpha)
            if gamma:
                if not gamma.is_bar_symmetric():
                    raise CanonicalBasisError("correction coefficient not bar-fixed")
                gammas.append(gamma)
                v = v - vectors[j].scaled(gamma)
        vectors.append(v)
    matrix = BasisMatrix(shape, tableaux, tuple(vectors), tuple(gammas))
    _validate_matrix(matrix)
    return matrix


def _validate_matrix(matrix: BasisMatrix) -> None:
    for t, v in zip(matrix.tableaux, matrix.vectors):
        wt = t.weight()
        key = t.sort_key()
        for tau, d in v.terms():
            if not d.in_z_q():
                raise CanonicalBasisError(f"entry outside Z[q] at {tau!r}, {t!r}")
            if tau == t:
                if d != ONE:
                    raise CanonicalBasisError(f"diagonal entry not 1 at {t!r}")
            elif d.at_q_zero() != 0:
                raise CanonicalBasisError(f"off-diagonal entry nonzero at q=0: {tau!r}, {t!r}")
            if tau.weight() != wt:
                raise CanonicalBasisError(f"weight mismatch at {tau!r}, {t!r}")
            if tau.sort_key() > key:
                raise CanonicalBasisError(f"entry above the diagonal at {tau!r}, {t!r}")
