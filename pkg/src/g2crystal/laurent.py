"""Exact arithmetic in Z[q, q^-1].

A Laurent polynomial is stored as a mapping {exponent: coefficient} with all
zero coefficients removed, so equality of the mapping is equality in the ring.
Coefficients are Python ints (arbitrary precision); nothing here ever rounds.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class NotDivisibleError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class LaurentPoly:
    """An element of Z[q, q^-1].

    Instances are immutable in practice: all operations return new objects and
    the coefficient dict is never exposed mutably, so values can be shared
    freely between threads.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for exp, coeff in items:
            if coeff:
                c[exp] = c.get(exp, 0) + coeff
                if not c[exp]:
                    del c[exp]
        self._coeffs = c

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    def items(self) -> list[tuple[int, int]]:
        """Terms as (exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._coeffs.items())

    def coefficient(self, exp: int) -> int:
        return self._coeffs.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def min_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self._coeffs)

    def max_exponent(self) -> int:
        if not self._coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        c = dict(self._coeffs)
        for exp, coeff in other._coeffs.items():
            v = c.get(exp, 0) + coeff
            if v:
                c[exp] = v
            else:
                c.pop(exp, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = c
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {e: -v for e, v in self._coeffs.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out._coeffs = {e: v * other for e, v in self._coeffs.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._coeffs.items():
            for e2, v2 in other._coeffs.items():
                e = e1 + e2
                v = c.get(e, 0) + v1 * v2
                if v:
                    c[e] = v
                else:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = c
        return out

    __rmul__ = __mul__

    def shifted(self, n: int) -> "LaurentPoly":
        """Multiply by q^n."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {e + n: v for e, v in self._coeffs.items()}
        return out

    def bar(self) -> "LaurentPoly":
        """The bar involution q -> q^-1 (negate every exponent)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {-e: v for e, v in self._coeffs.items()}
        return out

    def is_bar_symmetric(self) -> bool:
        return all(self._coeffs.get(-e, 0) == v for e, v in self._coeffs.items())

    def at_q_zero(self) -> int:
        """Value at q=0. Only defined for ordinary polynomials (no negative exponents)."""
        if self._coeffs and min(self._coeffs) < 0:
            raise ValueError("negative exponents present; value at q=0 undefined")
        return self._coeffs.get(0, 0)

    def in_z_q(self) -> bool:
        """True if the element lies in Z[q] (no negative exponents)."""
        return not self._coeffs or min(self._coeffs) >= 0

    def in_q_z_q(self) -> bool:
        """True if the element lies in q*Z[q] (all exponents strictly positive)."""
        return not self._coeffs or min(self._coeffs) >= 1

    # -- text and JSON forms ------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: terms in ascending exponent order.

        Examples: "q^-2 + 2*q^-1 + 3 + 5*q", "0".
        """
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for exp, coeff in self.items():
            mag = abs(coeff)
            if exp == 0:
                body = str(mag)
            else:
                var = "q" if exp == 1 else f"q^{exp}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [exponent, coefficient] pairs sorted by exponent."""
        return [[e, v] for e, v in self.items()]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "LaurentPoly":
        return cls((int(e), int(v)) for e, v in pairs)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def q_power(exp: int, coeff: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(exp, coeff)


def quantum_integer(m: int, i: int) -> LaurentPoly:
    """[m]_i = q_i^(m-1) + q_i^(m-3) + ... + q_i^(1-m), with q_1 = q and q_2 = q^3."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    d = _exponent_scale(i)
    return LaurentPoly({d * (m - 1 - 2 * k): 1 for k in range(m)})


def quantum_factorial(m: int, i: int) -> LaurentPoly:
    """[m]_i! = [m]_i [m-1]_i ... [1]_i."""
    out = ONE
    for j in range(1, m + 1):
        out = out * quantum_integer(j, i)
    return out


def _exponent_scale(i: int) -> int:
    if i == 1:
        return 1
    if i == 2:
        return 3
    raise ValueError(f"node index must be 1 or 2, got {i}")


def exact_divide(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return r with r*den == num, or raise NotDivisibleError.

    Division is exact in Z[q,q^-1]; a nonzero remainder (or a non-integer
    coefficient quotient) indicates a bug upstream and is never rounded away.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return ZERO
    # Shift both operands to ordinary polynomials and divide from the top.
    vn, vd = num.min_exponent(), den.min_exponent()
    rem = {e - vn: v for e, v in num._coeffs.items()}
    d = {e - vd: v for e, v in den._coeffs.items()}
    dd = max(d)
    lead = d[dd]
    quot: dict[int, int] = {}
    while rem:
        e = max(rem)
        if e < dd:
            raise NotDivisibleError(f"{num.to_text()} is not divisible by {den.to_text()}")
        c, r = divmod(rem[e], lead)
        if r:
            raise NotDivisibleError(f"{num.to_text()} is not divisible by {den.to_text()}")
        quot[e - dd] = c
        for ed, vd_ in d.items():
            k = e - dd + ed
            v = rem.get(k, 0) - c * vd_
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly(quot).shifted(vn - vd)


def gamma_symmetrize(alpha: LaurentPoly) -> LaurentPoly:
    """Bar-symmetric part used by the canonical-basis correction loop.

    Keeps every term with exponent <= 0 and mirrors each strictly negative
    exponent's coefficient onto the corresponding positive exponent.  The
    result g satisfies bar(g) == g and alpha - g lies in q*Z[q].
    """
    c: dict[int, int] = {}
    for e, v in alpha.items():
        if e <= 0:
            c[e] = c.get(e, 0) + v
            if e < 0:
                c[-e] = c.get(-e, 0) + v
    return LaurentPoly(c)
