import cmath
import random

import pytest

from qinv.errors import DegenerateSpecializationError, ExactDivisionError
from qinv.ring import (
    Cyclo,
    CyclotomicRing,
    Laurent,
    cyclotomic_poly,
    find_truncation_level,
    format_laurent,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
    specialize,
)

V = Laurent.v_power
Q = Laurent.q_power


def rand_laurent(rng, size=4, span=6, coeff=9):
    return Laurent({rng.randint(-span, span): rng.randint(-coeff, coeff) for _ in range(size)})


def test_basic_arithmetic():
    assert (Q(1) + Q(-1)) + (-Q(1)) == Q(-1)
    assert V(1) * V(-1) == Laurent.from_int(1)
    assert (V(1) + V(-1)) * (V(1) - V(-1)) == V(2) - V(-2)


def test_ring_axioms_random_triples():
    rng = random.Random(20260809)
    for _ in range(1000):
        x, y, z = (rand_laurent(rng) for _ in range(3))
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_quantum_integers():
    assert quantum_integer(1) == Laurent.from_int(1)
    assert quantum_integer(0) == Laurent()
    assert quantum_integer(2) == Q(1) + Q(-1)
    assert quantum_integer(-3) == -quantum_integer(3)


def test_quantum_integer_palindromic():
    for n in range(21):
        assert quantum_integer(n).bar() == quantum_integer(n)


def test_quantum_factorial_binomial():
    assert quantum_factorial(0) == Laurent.from_int(1)
    assert quantum_factorial(2) == Q(1) + Q(-1)
    assert quantum_binomial(2, 1) == Q(1) + Q(-1)
    for n in range(21):
        for k in range(n + 1):
            b = quantum_binomial(n, k)  # must divide exactly
            assert b == quantum_binomial(n, n - k)


def test_exact_division_raises():
    with pytest.raises(ExactDivisionError):
        (V(2) + Laurent.from_int(1)).exact_div(V(1) + Laurent.from_int(2))


def test_specialize_examples():
    assert specialize(V(4), 4) == Cyclo.one(4)
    assert specialize(Laurent.from_int(1), 7) == Cyclo.one(7)
    # [ell] vanishes at the derived truncation level
    for m in (6, 10, 14, 16):
        ell = find_truncation_level(m)
        assert not specialize(quantum_integer(ell), m)
        for k in range(2, ell):
            assert specialize(quantum_integer(k), m)


def test_specialize_is_homomorphism():
    rng = random.Random(99)
    for m in (5, 7, 10, 12, 16):
        for _ in range(60):
            x, y = rand_laurent(rng), rand_laurent(rng)
            assert specialize(x * y, m) == specialize(x, m) * specialize(y, m)
            assert specialize(x + y, m) == specialize(x, m) + specialize(y, m)


def test_v_has_order_m():
    for m in (3, 5, 6, 8, 10, 12, 16):
        v = Cyclo(m, (0, 1))
        powers = [v**k for k in range(1, m + 1)]
        assert powers[-1] == Cyclo.one(m)
        assert all(p != Cyclo.one(m) for p in powers[:-1])


def _truncation_oracle(m):
    # numeric: evaluate [k] at a primitive m-th root of unity
    z = cmath.exp(2j * cmath.pi / m)
    for k in range(2, m + 1):
        if abs(quantum_integer(k).evaluate(z)) < 1e-9:
            return k
    return None


@pytest.mark.parametrize("m,expected", [(6, 3), (16, 4), (10, 5), (14, 7), (3, 3), (5, 5), (7, 7), (20, 5)])
def test_find_truncation_level(m, expected):
    assert _truncation_oracle(m) == expected
    assert find_truncation_level(m) == expected


def test_truncation_degenerate_at_4():
    with pytest.raises(DegenerateSpecializationError):
        find_truncation_level(4)


def test_cyclotomic_polys():
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(1) == (-1, 1)
    # constant term 1 for every m >= 2, so v stays a unit in the quotient
    for m in range(2, 40):
        assert cyclotomic_poly(m)[0] == 1


def test_json_round_trip():
    x = Laurent({2: 1, -2: 1, 0: -3})
    assert Laurent.from_json(x.to_json()) == x
    c = specialize(x, 10)
    assert Cyclo.from_json(c.to_json()) == c


def test_format():
    assert format_laurent(Q(1) + Q(-1)) == "q + q^-1"
    assert format_laurent(V(5) + V(1)) == "v^5 + v"
    assert format_laurent(Laurent()) == "0"


def test_ring_tags():
    r = CyclotomicRing(10)
    assert r.convert(quantum_integer(5)) == r.zero
    assert r.convert(Laurent.from_int(1)) == r.one
