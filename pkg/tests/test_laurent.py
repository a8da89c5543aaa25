import random

import pytest

from g2crystal.laurent import (
    LaurentPoly,
    NotDivisibleError,
    ONE,
    exact_divide,
    gamma_symmetrize,
    quantum_factorial,
    quantum_integer,
)


def P(pairs):
    return LaurentPoly(pairs)


def rand_poly(rng):
    return LaurentPoly({rng.randint(-6, 6): rng.randint(-9, 9) for _ in range(rng.randint(0, 6))})


def test_quantum_integers():
    assert quantum_integer(2, 1) == P({1: 1, -1: 1})
    assert quantum_integer(2, 2) == P({3: 1, -3: 1})
    assert quantum_integer(3, 1) == P({2: 1, 0: 1, -2: 1})
    assert quantum_integer(0, 1) == LaurentPoly.zero()
    assert quantum_integer(1, 2) == ONE


def test_quantum_factorial():
    assert quantum_factorial(0, 1) == ONE
    assert quantum_factorial(2, 1) == quantum_integer(2, 1)
    assert quantum_factorial(3, 1) == quantum_integer(3, 1) * quantum_integer(2, 1)


def test_bar_examples():
    assert P({2: 1, -1: -1}).bar() == P({-2: 1, 1: -1})
    assert P({0: 5}).bar() == P({0: 5})
    assert P({1: 1, -1: 1}).bar() == P({1: 1, -1: 1})


def test_exact_divide_examples():
    a = P({1: 1, -1: 1})
    b = P({3: 1, -3: 1})
    assert exact_divide(a * b, a) == b
    p = P({4: 3, 0: -2, -1: 7})
    assert exact_divide(p, ONE) == p
    with pytest.raises(NotDivisibleError):
        exact_divide(P({1: 1}), a)
    with pytest.raises(ZeroDivisionError):
        exact_divide(a, LaurentPoly.zero())


def test_gamma_symmetrize_examples():
    assert gamma_symmetrize(P({-2: 1, -1: 2, 0: 3, 1: 5})) == P(
        {-2: 1, -1: 2, 0: 3, 1: 2, 2: 1}
    )
    assert gamma_symmetrize(ONE) == ONE
    assert gamma_symmetrize(P({3: 1})) == LaurentPoly.zero()


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(500):
        p, r, s = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert p + r == r + p
        assert p * r == r * p
        assert (p + r) + s == p + (r + s)
        assert (p * r) * s == p * (r * s)
        assert p * (r + s) == p * r + p * s


def test_bar_is_ring_involution_random():
    rng = random.Random(12)
    for _ in range(300):
        p, r = rand_poly(rng), rand_poly(rng)
        assert p.bar().bar() == p
        assert (p * r).bar() == p.bar() * r.bar()
        assert (p + r).bar() == p.bar() + r.bar()


def test_exact_divide_random_roundtrip():
    rng = random.Random(13)
    done = 0
    while done < 300:
        p, d = rand_poly(rng), rand_poly(rng)
        if d.is_zero():
            continue
        assert exact_divide(p * d, d) == p
        done += 1


def test_gamma_properties_random():
    rng = random.Random(14)
    for _ in range(300):
        p = rand_poly(rng)
        g = gamma_symmetrize(p)
        assert g.bar() == g
        assert (p - g).in_q_z_q()


def test_quantum_integers_bar_fixed():
    for m in range(8):
        for i in (1, 2):
            assert quantum_integer(m, i).is_bar_symmetric()


def test_text_form():
    assert P({-2: 1, -1: 2, 0: 3, 1: 5}).to_text() == "q^-2 + 2*q^-1 + 3 + 5*q"
    assert LaurentPoly.zero().to_text() == "0"
    assert P({-2: 1, 1: -1}).to_text() == "q^-2 - q"
    assert P({0: -3, 2: 1}).to_text() == "-3 + q^2"
    assert ONE.to_text() == "1"


def test_json_form():
    p = P({3: -2, -1: 4})
    assert p.to_pairs() == [[-1, 4], [3, -2]]
    assert LaurentPoly.from_pairs(p.to_pairs()) == p


def test_no_zero_coefficients_stored():
    p = P({1: 1}) + P({1: -1})
    assert p.is_zero()
    assert p.to_pairs() == []
