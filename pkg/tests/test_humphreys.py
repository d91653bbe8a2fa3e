import random

import pytest

from spinblocks.cyclotomic import CycMatrix, CycNumber, I_UNIT
from spinblocks.humphreys import (
    HumphreysDescriptor,
    LocalCharDescriptor,
    combine,
    delta_value_from_matrix,
    scalar_matrix,
    two_factor_matrix,
)
from spinblocks.partitions import Associatedness

SA = Associatedness.SELF_ASSOCIATED
NSA = Associatedness.NON_SELF_ASSOCIATED


def test_single_self_associated_factor():
    d = combine([LocalCharDescriptor(5, SA)])
    assert d.degree == 5
    assert d.assoc is SA
    assert d.s == 0


def test_two_nonself_factors():
    a = CycNumber.zeta(8, 1)
    b = CycNumber.zeta(12, 7)
    d = combine(
        [LocalCharDescriptor(2, NSA, a), LocalCharDescriptor(3, NSA, b)]
    )
    assert d.degree == 2 * 2 * 3
    assert d.assoc is SA
    assert d.tagged_value == 2 * I_UNIT * a * b


def test_three_nonself_factors():
    d = combine([LocalCharDescriptor(1, NSA)] * 3)
    assert d.s == 3
    assert d.assoc is NSA
    assert d.degree == 2  # 2^floor(3/2)


def test_combine_needs_factors():
    with pytest.raises(ValueError):
        combine([])


def _random_descriptor(rng):
    assoc = rng.choice([SA, NSA])
    n = rng.choice([3, 4, 8, 12])
    value = CycNumber.zeta(n, rng.randrange(n)) * rng.randint(1, 3)
    return LocalCharDescriptor(rng.randint(1, 9), assoc, value)


def test_combine_is_bracketing_independent():
    rng = random.Random(4242)
    for _ in range(100):
        factors = [_random_descriptor(rng) for _ in range(rng.randint(2, 6))]
        whole = combine(factors)
        left = combine(factors[: len(factors) // 2])
        right = combine(factors[len(factors) // 2 :])
        refolded = combine(
            [
                LocalCharDescriptor(left.degree, left.assoc, left.tagged_value),
                LocalCharDescriptor(right.degree, right.assoc, right.tagged_value),
            ]
        )
        # the refold sees each half as one factor, so its pair count differs;
        # degree and value must still agree once the 2i bookkeeping is equal
        assert whole.s == left.s + right.s
        if (left.s % 2, right.s % 2) == (0, 0):
            assert refolded.degree == whole.degree
            assert refolded.tagged_value == whole.tagged_value
        assert whole.assoc is (NSA if whole.s % 2 else SA)


def test_defect_zero_valuation_identity():
    # p-adic valuation of the combined degree is the sum over factors
    rng = random.Random(11)
    for p in (3, 5, 7):
        for _ in range(50):
            factors = [
                LocalCharDescriptor(rng.randint(1, 200), rng.choice([SA, NSA]))
                for _ in range(rng.randint(1, 5))
            ]
            d = combine(factors)

            def val(x):
                v = 0
                while x % p == 0:
                    x //= p
                    v += 1
                return v

            assert val(d.degree) == sum(val(f.degree) for f in factors)


class TestTwoFactorMatrix:
    def test_identity_case(self):
        m = two_factor_matrix(CycMatrix.identity(1), CycMatrix.identity(1), (1, 1))
        assert m == CycMatrix.identity(2)

    def test_rotation_case(self):
        m = two_factor_matrix(CycMatrix.identity(1), CycMatrix.identity(1), (-1, -1))
        assert m == CycMatrix([[0, -1], [1, 0]])
        assert m.trace().is_zero()
        assert delta_value_from_matrix(m) == 2 * I_UNIT

    def test_rejects_mixed_signs(self):
        i1 = CycMatrix.identity(1)
        with pytest.raises(ValueError):
            two_factor_matrix(i1, i1, (1, -1))

    def test_delta_extraction_matches_combine(self):
        rng = random.Random(31337)
        for _ in range(60):
            n = rng.choice([4, 8, 12])
            a = CycNumber.zeta(n, rng.randrange(n)) * rng.randint(1, 4)
            b = CycNumber.zeta(n, rng.randrange(n)) * rng.randint(1, 4)
            m = two_factor_matrix(scalar_matrix(a), scalar_matrix(b), (-1, -1))
            assert delta_value_from_matrix(m) == 2 * I_UNIT * a * b
