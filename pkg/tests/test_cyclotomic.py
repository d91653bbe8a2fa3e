import math
import random
from fractions import Fraction

import pytest

from spinblocks.cyclotomic import (
    CycMatrix,
    CycNumber,
    I_UNIT,
    ONE,
    ZERO,
    apply_sigma,
    coerce,
    cyclotomic_polynomial,
    gauss_sqrt,
    kron_all,
    sqrt_of_sign_times_two,
)
from spinblocks.signs import legendre


def zeta(n, k=1):
    return CycNumber.zeta(n, k)


def test_cyclotomic_polynomials():
    # constant-term-first coefficient tuples
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    deg = len(cyclotomic_polynomial(24)) - 1
    assert deg == 8  # phi(24)


def test_defining_relations():
    assert zeta(4) * zeta(4) == -1
    assert zeta(3) + zeta(3, 2) == -1
    x = zeta(8) + zeta(8, 7)
    assert x * x == 2


def test_field_operations():
    x = zeta(5) + 3
    assert x * x.inverse() == ONE
    assert (x - x).is_zero()
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    assert (x / x) == 1
    assert x**0 == ONE
    assert x**-1 == x.inverse()


def test_mixed_conductor_promotion():
    a = zeta(3)
    b = zeta(4)
    c = a * b
    assert c.conductor == 12
    assert c == zeta(12, 4) * zeta(12, 3)
    assert a == a.promoted(12)


def _random_cyc(rng, n):
    deg = max(1, len(cyclotomic_polynomial(n)) - 1)
    return CycNumber(
        n, [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(deg)]
    )


def test_sigma_is_an_automorphism():
    rng = random.Random(20240817)
    for n in (3, 4, 5, 8, 12, 15, 20, 24, 40):
        for p in (3, 7):
            if math.gcd(n, p) != 1:
                continue
            for _ in range(50):
                x, y = _random_cyc(rng, n), _random_cyc(rng, n)
                assert apply_sigma(x + y, p) == apply_sigma(x, p) + apply_sigma(y, p)
                assert apply_sigma(x * y, p) == apply_sigma(x, p) * apply_sigma(y, p)


def test_sigma_examples():
    assert apply_sigma(zeta(4), 5) == zeta(4)
    assert apply_sigma(zeta(4), 3) == -zeta(4)
    assert apply_sigma(coerce(7), 3) == 7
    with pytest.raises(ValueError):
        apply_sigma(zeta(3), 3)


def test_gauss_sums_square_correctly():
    for q in (3, 5, 7, 11, 13):
        g = gauss_sqrt(q, 3 if q != 3 else 5)
        expected = q if q % 4 == 1 else -q
        assert (g * g).as_rational() == expected
    with pytest.raises(ValueError):
        gauss_sqrt(5, 5)
    with pytest.raises(ValueError):
        gauss_sqrt(4, 3)


def test_sqrt_of_sign_times_two():
    for s in (1, -1):
        x = sqrt_of_sign_times_two(s)
        assert (x * x).as_rational() == 2 * s
    with pytest.raises(ValueError):
        sqrt_of_sign_times_two(0)


def test_sigma_on_sqrt_two_matches_legendre():
    # sigma multiplies sqrt(2s) by the Legendre symbol of 2s
    from spinblocks.signs import sigma_sqrt_sign

    for s in (1, -1):
        x = sqrt_of_sign_times_two(s)
        for p in (3, 5, 7, 11):
            assert apply_sigma(x, p) == x * sigma_sqrt_sign(2 * s, p)


class TestCycMatrix:
    def test_ring_axioms(self):
        rng = random.Random(99)
        mats = [
            CycMatrix([[_random_cyc(rng, 8) for _ in range(2)] for _ in range(2)])
            for _ in range(3)
        ]
        a, b, c = mats
        assert (a * b) * c == a * (b * c)
        assert a * CycMatrix.identity(2) == a
        assert a + (-a) == CycMatrix.identity(2).scaled(0)

    def test_kron_dimensions(self):
        a = CycMatrix([[1, 0], [0, -1]])
        k = a.kron(a)
        assert k.dim == 4
        assert k.rows[3][3] == 1
        assert kron_all([]).dim == 1

    def test_trace_and_pow(self):
        j = CycMatrix([[0, -1], [1, 0]])
        assert j.trace() == ZERO
        assert j**2 == -CycMatrix.identity(2)
        assert (j**4) == CycMatrix.identity(2)

    def test_scaled(self):
        a = CycMatrix.identity(2).scaled(I_UNIT)
        assert a * a == -CycMatrix.identity(2)
