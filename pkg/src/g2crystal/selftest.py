"""Self-contained oracle suites, runnable from the CLI or the service.

Each suite recomputes one family of guarantees from first principles and
reports a single pass/fail line.  ``max_len`` bounds the word lengths used by
the exhaustive scans (default 4; 5 is the intended heavy setting).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from .laurent import LaurentPoly, exact_divide, gamma_symmetrize, quantum_integer
from .canonical import a_vector, canonical_basis, column_global_basis
from .modules import f_w2, f_w2_from_wedge
from .plactic import p_symbol, q_symbol, relation_instances
from .tableaux import (
    Shape,
    Tabloid,
    admissible_columns,
    all_columns,
    enumerate_tableaux,
    is_oscillating,
    oscillating_steps,
)
from .words import (
    ALPHABET,
    apply_kashiwara,
    apply_kashiwara_recursive,
    component_graph,
    greedy_raise,
    similarity_key,
    string_stats,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _words(length: int):
    return itertools.product(ALPHABET, repeat=length)


def _random_poly(rng: random.Random) -> LaurentPoly:
    return LaurentPoly(
        {rng.randint(-5, 5): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))}
    )


def suite_laurent_ring(max_len: int) -> SuiteResult:
    rng = random.Random(20240601)
    for _ in range(300):
        p, r, s = (_random_poly(rng) for _ in range(3))
        if (p + r) * s != p * s + r * s or p * r != r * p or (p * r) * s != p * (r * s):
            return SuiteResult("laurent-ring-axioms", False, "ring axiom failed")
        if p.bar().bar() != p or (p * r).bar() != p.bar() * r.bar():
            return SuiteResult("laurent-ring-axioms", False, "bar involution failed")
        if r and exact_divide(p * r, r) != p:
            return SuiteResult("laurent-ring-axioms", False, "exact division failed")
        g = gamma_symmetrize(p)
        if g.bar() != g or not (p - g).in_q_z_q():
            return SuiteResult("laurent-ring-axioms", False, "gamma symmetry failed")
    for m in range(7):
        for i in (1, 2):
            if not quantum_integer(m, i).is_bar_symmetric():
                return SuiteResult("laurent-ring-axioms", False, "[m]_i not bar-fixed")
    return SuiteResult("laurent-ring-axioms", True, "300 random triples")


def suite_tensor_rule(max_len: int) -> SuiteResult:
    n = min(max_len, 4)
    checked = 0
    for length in range(1, n + 1):
        words = _words(length) if length < 4 else itertools.islice(_words(4), 0, None, 3)
        for w in words:
            w = tuple(w)
            for i in (1, 2):
                for direction in ("lower", "raise"):
                    if apply_kashiwara(w, i, direction) != apply_kashiwara_recursive(
                        w, i, direction
                    ):
                        return SuiteResult(
                            "tensor-rule-agreement", False, f"mismatch on {w}"
                        )
                    checked += 1
    return SuiteResult("tensor-rule-agreement", True, f"{checked} operator applications")


def suite_two_letter_components(max_len: int) -> SuiteResult:
    sizes = sorted(component_graph((a, b)).size() for a in ALPHABET for b in ALPHABET)
    expected = [1] + [7] * 7 + [14] * 14 + [27] * 27
    ok = sizes == expected
    return SuiteResult(
        "two-letter-components", ok, "sizes 27/14/7/1 with multiplicities"
    )


def suite_congruence_is_similarity(max_len: int) -> SuiteResult:
    by_p: dict = {}
    by_s: dict = {}
    for length in range(0, min(max_len, 3) + 1):
        for w in _words(length):
            w = tuple(w)
            pk = p_symbol(w).columns
            sk = similarity_key(w)
            if by_p.setdefault(pk, sk) != sk or by_s.setdefault(sk, pk) != pk:
                return SuiteResult("congruence-vs-similarity", False, f"split at {w}")
    rng = random.Random(8128)
    for _ in range(2000):
        length = rng.randint(1, max_len)
        w1 = tuple(rng.choice(ALPHABET) for _ in range(length))
        w2 = tuple(rng.choice(ALPHABET) for _ in range(rng.randint(1, max_len)))
        if (p_symbol(w1) == p_symbol(w2)) != (similarity_key(w1) == similarity_key(w2)):
            return SuiteResult("congruence-vs-similarity", False, f"{w1} vs {w2}")
    return SuiteResult(
        "congruence-vs-similarity", True, "all pairs len<=3 plus 2000 random pairs"
    )


def suite_insertion_soundness(max_len: int) -> SuiteResult:
    count = 0
    for length in range(0, max_len + 1):
        for w in _words(length):
            w = tuple(w)
            t = p_symbol(w)
            if not t.is_tableau():
                return SuiteResult("insertion-soundness", False, f"invalid P at {w}")
            if similarity_key(t.reading()) != similarity_key(w):
                return SuiteResult("insertion-soundness", False, f"P not similar at {w}")
            count += 1
    return SuiteResult("insertion-soundness", True, f"{count} words")


def suite_q_symbol(max_len: int) -> SuiteResult:
    n = min(max_len, 4)
    by_q: dict = {}
    by_top: dict = {}
    for length in range(1, n + 1):
        by_q.clear()
        by_top.clear()
        for w in _words(length):
            w = tuple(w)
            qk = q_symbol(w)
            top = greedy_raise(w)[1]
            if by_q.setdefault(qk, top) != top or by_top.setdefault(top, qk) != qk:
                return SuiteResult("q-symbol-components", False, f"split at {w}")
    return SuiteResult("q-symbol-components", True, f"lengths 1..{n}")


def suite_oscillating(max_len: int) -> SuiteResult:
    for length in range(0, max_len + 1):
        for w in _words(length):
            if not is_oscillating(q_symbol(tuple(w))):
                return SuiteResult("oscillating-validity", False, f"bad Q at {w}")
    return SuiteResult("oscillating-validity", True, f"lengths 0..{max_len}")


def _oscillating_count(length: int) -> int:
    """Independent count of RS pairs of the given word length."""
    if length == 0:
        return 1
    total = 0
    stack = [(Shape(1, 0), 1)]
    while stack:
        shape, depth = stack.pop()
        if depth == length:
            total += len(enumerate_tableaux(shape))
            continue
        for nxt in oscillating_steps(shape):
            stack.append((nxt, depth + 1))
    return total


def suite_rs_bijection(max_len: int) -> SuiteResult:
    for length in range(0, max_len + 1):
        seen = set()
        for w in _words(length):
            w = tuple(w)
            pair = (p_symbol(w).columns, q_symbol(w))
            if pair in seen:
                return SuiteResult("rs-bijection", False, f"collision at {w}")
            seen.add(pair)
        expected = _oscillating_count(length)
        if len(seen) != expected:
            return SuiteResult(
                "rs-bijection",
                False,
                f"length {length}: image {len(seen)} != count {expected}",
            )
    return SuiteResult("rs-bijection", True, f"injective with matching counts to {max_len}")


def suite_relations(max_len: int) -> SuiteResult:
    for lhs, rhs in relation_instances():
        if similarity_key(lhs) != similarity_key(rhs):
            return SuiteResult("relation-compatibility", False, f"{lhs} != {rhs}")
        for i in (1, 2):
            if string_stats(lhs, i) != string_stats(rhs, i):
                return SuiteResult("relation-compatibility", False, f"stats at {lhs}")
            for direction in ("lower", "raise"):
                a = apply_kashiwara(lhs, i, direction)
                b = apply_kashiwara(rhs, i, direction)
                if (a is None) != (b is None):
                    return SuiteResult("relation-compatibility", False, f"kill at {lhs}")
                if a is not None and similarity_key(a) != similarity_key(b):
                    return SuiteResult("relation-compatibility", False, f"step at {lhs}")
    return SuiteResult("relation-compatibility", True, "99 instances, both operators")


def suite_module_tables(max_len: int) -> SuiteResult:
    for col in all_columns(2):
        for i in (1, 2):
            if f_w2(i, col) != f_w2_from_wedge(i, col):
                return SuiteResult("module-tables", False, f"mismatch at {col}, i={i}")
    return SuiteResult("module-tables", True, "tables match the wedge re-derivation")


def suite_column_basis(max_len: int) -> SuiteResult:
    matrix = canonical_basis(Shape(0, 1))
    for col in admissible_columns(2):
        t = Tabloid((col,))
        direct = column_global_basis(col)
        if a_vector(t) != direct:
            return SuiteResult("column-basis-routes", False, f"monomial route at {col}")
        if matrix.vectors[matrix.tableaux.index(t)] != direct:
            return SuiteResult("column-basis-routes", False, f"matrix route at {col}")
    return SuiteResult("column-basis-routes", True, "three routes agree on 14 columns")


def suite_canonical_shapes(max_len: int) -> SuiteResult:
    for shape in (Shape(1, 0), Shape(2, 0), Shape(1, 1)):
        canonical_basis(shape)  # validation happens inside
    return SuiteResult("canonical-shapes", True, "shapes (1,0), (2,0), (1,1) validated")


SUITES: tuple[Callable[[int], SuiteResult], ...] = (
    suite_laurent_ring,
    suite_tensor_rule,
    suite_two_letter_components,
    suite_congruence_is_similarity,
    suite_insertion_soundness,
    suite_q_symbol,
    suite_oscillating,
    suite_rs_bijection,
    suite_relations,
    suite_module_tables,
    suite_column_basis,
    suite_canonical_shapes,
)


def run_selftest(max_len: int = 4) -> list[SuiteResult]:
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    return [suite(max_len) for suite in SUITES]
