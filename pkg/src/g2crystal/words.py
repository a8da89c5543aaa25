"""Words over the 7-letter type-G2 alphabet and their crystal structure.

Letters are plain ints: 1, 2, 3, 0 and -3, -2, -1, where a negative letter is
the barred version of its absolute value.  The crystal order is

    1 < 2 < 3 < 0 < -3 < -2 < -1

and the basic crystal on single letters is the chain

    1 -1-> 2 -2-> 3 -1-> 0 -1-> -3 -2-> -2 -1-> -1

Words are tuples of letters; the empty tuple is the empty word.  Raising and
lowering operators on words follow the tensor rule, evaluated by signature
reduction: encode each letter as eps_i minus signs followed by phi_i plus
signs, cancel every "+" immediately left of a "-", then f acts on the letter
owning the leftmost surviving "+" and e on the letter owning the rightmost
surviving "-".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Letter = int
Word = tuple[int, ...]

ALPHABET: Word = (1, 2, 3, 0, -3, -2, -1)
ORDER_INDEX = {x: k for k, x in enumerate(ALPHABET)}

# Single-letter lowering steps, by node index.
F_STEP: dict[int, dict[int, int]] = {
    1: {1: 2, 3: 0, 0: -3, -2: -1},
    2: {2: 3, -3: -2},
}
E_STEP: dict[int, dict[int, int]] = {
    i: {y: x for x, y in step.items()} for i, step in F_STEP.items()
}


def _string_data(i: int) -> tuple[dict[int, int], dict[int, int]]:
    eps = {x: 0 for x in ALPHABET}
    phi = {x: 0 for x in ALPHABET}
    for x in ALPHABET:
        y, n = x, 0
        while y in E_STEP[i]:
            y, n = E_STEP[i][y], n + 1
        eps[x] = n
        y, n = x, 0
        while y in F_STEP[i]:
            y, n = F_STEP[i][y], n + 1
        phi[x] = n
    return eps, phi


LETTER_EPS: dict[int, dict[int, int]] = {}
LETTER_PHI: dict[int, dict[int, int]] = {}
for _i in (1, 2):
    LETTER_EPS[_i], LETTER_PHI[_i] = _string_data(_i)


class WordError(ValueError):
    """Raised for malformed words or letters."""


def letter_le(x: int, y: int) -> bool:
    """x precedes-or-equals y in the crystal order."""
    return ORDER_INDEX[x] <= ORDER_INDEX[y]


def parse_word(text: str) -> Word:
    """Parse space-separated signed tokens, e.g. "2 0 -3"."""
    word = []
    for tok in text.split():
        try:
            x = int(tok)
        except ValueError:
            raise WordError(f"bad letter token: {tok!r}") from None
        if x not in ORDER_INDEX:
            raise WordError(f"bad letter token: {tok!r}")
        word.append(x)
    return tuple(word)


def word_to_text(word: Word) -> str:
    return " ".join(str(x) for x in word)


def sort_key(word: Word) -> tuple[int, ...]:
    """Key realizing the lexicographic order on words of equal length."""
    return tuple(ORDER_INDEX[x] for x in word)


# -- weights ----------------------------------------------------------------


@dataclass(frozen=True)
class Weight:
    """An integral weight a*L1 + b*L2 in the fundamental-weight basis."""

    a: int
    b: int

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Weight":
        return Weight(-self.a, -self.b)

    def height_from(self, top: "Weight") -> int:
        """Number of simple-root steps from this weight up to ``top``.

        top - self = x*alpha_1 + y*alpha_2 must have integer x, y; the height
        is x + y.  With alpha_1 = 2L1 - L2 and alpha_2 = -3L1 + 2L2 the inverse
        change of basis is x = 2a + 3b, y = a + 2b.
        """
        d = top - self
        x = 2 * d.a + 3 * d.b
        y = d.a + 2 * d.b
        return x + y


ZERO_WEIGHT = Weight(0, 0)
ALPHA = {1: Weight(2, -1), 2: Weight(-3, 2)}

LETTER_WEIGHT: dict[int, Weight] = {}
for _x in ALPHABET:
    _d = [0, 0, 0]
    if _x:
        _d[abs(_x) - 1] = 1 if _x > 0 else -1
    LETTER_WEIGHT[_x] = Weight(_d[0] - _d[1] + 2 * _d[2], _d[1] - _d[2])


def weight(word: Word) -> Weight:
    a = b = 0
    for x in word:
        w = LETTER_WEIGHT[x]
        a += w.a
        b += w.b
    return Weight(a, b)


# -- Kashiwara operators on words -------------------------------------------


def _reduced_signs(word: Word, i: int) -> list[tuple[int, int]]:
    """Surviving (position, sign) pairs after cancelling "+-" in the signature."""
    eps, phi = LETTER_EPS[i], LETTER_PHI[i]
    stack: list[tuple[int, int]] = []
    for pos, x in enumerate(word):
        for _ in range(eps[x]):
            if stack and stack[-1][1] > 0:
                stack.pop()
            else:
                stack.append((pos, -1))
        for _ in range(phi[x]):
            stack.append((pos, +1))
    return stack


def apply_kashiwara(word: Word, i: int, direction: str) -> Word | None:
    """Apply f_i ("lower") or e_i ("raise"); None when the operator kills the word."""
    if i not in (1, 2):
        raise WordError(f"node index must be 1 or 2, got {i}")
    signs = _reduced_signs(word, i)
    if direction == "lower":
        plus = [pos for pos, s in signs if s > 0]
        if not plus:
            return None
        pos = plus[0]
        return word[:pos] + (F_STEP[i][word[pos]],) + word[pos + 1:]
    if direction == "raise":
        minus = [pos for pos, s in signs if s < 0]
        if not minus:
            return None
        pos = minus[-1]
        return word[:pos] + (E_STEP[i][word[pos]],) + word[pos + 1:]
    raise WordError(f"direction must be 'raise' or 'lower', got {direction!r}")


def apply_kashiwara_recursive(word: Word, i: int, direction: str) -> Word | None:
    """Reference implementation straight off the two-factor tensor rule.

    Splits the word as first letter (x) tensor rest and recurses; slower than
    the signature reduction but independent of it, so the two are tested
    against each other.
    """
    if not word:
        return None
    if len(word) == 1:
        step = F_STEP[i] if direction == "lower" else E_STEP[i]
        y = step.get(word[0])
        return (y,) if y is not None else None
    head, tail = word[:1], word[1:]
    phi_head = string_stats(head, i)[1]
    eps_tail = apply_kashiwara_recursive_eps(tail, i)
    if direction == "lower":
        act_head = phi_head > eps_tail
    else:
        act_head = phi_head >= eps_tail
    if act_head:
        u = apply_kashiwara_recursive(head, i, direction)
        return None if u is None else u + tail
    u = apply_kashiwara_recursive(tail, i, direction)
    return None if u is None else head + u


def apply_kashiwara_recursive_eps(word: Word, i: int) -> int:
    n = 0
    w: Word | None = word
    while True:
        w = apply_kashiwara_recursive(w, i, "raise")
        if w is None:
            return n
        n += 1


def lower(word: Word, i: int) -> Word | None:
    return apply_kashiwara(word, i, "lower")


def raise_(word: Word, i: int) -> Word | None:
    return apply_kashiwara(word, i, "raise")


def string_stats(word: Word, i: int) -> tuple[int, int]:
    """(eps_i, phi_i): maximal numbers of raising / lowering steps."""
    signs = _reduced_signs(word, i)
    eps = sum(1 for _, s in signs if s < 0)
    return eps, len(signs) - eps


def is_highest_weight(word: Word) -> bool:
    return string_stats(word, 1)[0] == 0 and string_stats(word, 2)[0] == 0


@lru_cache(maxsize=None)
def greedy_raise(word: Word) -> tuple[tuple[int, ...], Word]:
    """Raise to highest weight, always using the smallest applicable node index.

    Returns (record of node indices in application order, highest-weight word).
    """
    record: list[int] = []
    w = word
    while True:
        for i in (1, 2):
            u = apply_kashiwara(w, i, "raise")
            if u is not None:
                record.append(i)
                w = u
                break
        else:
            return tuple(record), w


def similar(w1: Word, w2: Word) -> bool:
    """True when the words sit at the same place in isomorphic components.

    Crystal isomorphisms preserve eps/phi, so two words correspond exactly
    when their greedy raising records match and the highest-weight vertices
    reached have equal weights.
    """
    r1, h1 = greedy_raise(w1)
    r2, h2 = greedy_raise(w2)
    return r1 == r2 and weight(h1) == weight(h2)


def similarity_key(word: Word) -> tuple[tuple[int, ...], Weight]:
    r, h = greedy_raise(word)
    return r, weight(h)


class IsoError(ValueError):
    """Raised when a crystal-component isomorphism cannot be realized."""


@lru_cache(maxsize=None)
def crystal_iso(word: Word, target_hw: Word) -> Word:
    """Image of ``word`` under the component isomorphism sending its highest
    weight vertex to ``target_hw``.

    The raising record of ``word`` is replayed downward from ``target_hw``.
    ``target_hw`` must be a highest-weight word of the same weight as the
    highest-weight vertex above ``word``.
    """
    if not is_highest_weight(target_hw):
        raise IsoError(f"target {word_to_text(target_hw)!r} is not highest weight")
    record, hw = greedy_raise(word)
    if weight(hw) != weight(target_hw):
        raise IsoError(
            f"weight mismatch: component top {word_to_text(hw)!r} vs "
            f"target {word_to_text(target_hw)!r}"
        )
    v = target_hw
    for i in reversed(record):
        u = apply_kashiwara(v, i, "lower")
        if u is None:
            raise IsoError(
                f"lowering step {i} died replaying onto {word_to_text(target_hw)!r}"
            )
        v = u
    return v


# -- connected components ----------------------------------------------------


@dataclass(frozen=True)
class CrystalComponent:
    """A connected component of the word crystal, with f-labelled edges."""

    vertices: tuple[Word, ...]
    edges: tuple[tuple[Word, int, Word], ...]
    highest_weight: Word

    def size(self) -> int:
        return len(self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": [word_to_text(w) for w in self.vertices],
            "edges": [[word_to_text(a), i, word_to_text(b)] for a, i, b in self.edges],
            "highest_weight": word_to_text(self.highest_weight),
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {"]
        for w in self.vertices:
            lines.append(f'  "{word_to_text(w)}";')
        for a, i, b in self.edges:
            lines.append(f'  "{word_to_text(a)}" -> "{word_to_text(b)}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines)


def component_graph(word: Word) -> CrystalComponent:
    """Closure of a word under raising and lowering, as a labelled graph."""
    seen = {word}
    frontier = [word]
    while frontier:
        w = frontier.pop()
        for i in (1, 2):
            for direction in ("lower", "raise"):
                u = apply_kashiwara(w, i, direction)
                if u is not None and u not in seen:
                    seen.add(u)
                    frontier.append(u)
    vertices = tuple(sorted(seen, key=sort_key))
    edges = []
    for w in vertices:
        for i in (1, 2):
            u = apply_kashiwara(w, i, "lower")
            if u is not None:
                edges.append((w, i, u))
    tops = [w for w in vertices if is_highest_weight(w)]
    if len(tops) != 1:
        raise IsoError(f"component of {word_to_text(word)!r} has {len(tops)} tops")
    return CrystalComponent(vertices, tuple(edges), tops[0])
