import pytest

from spinblocks.bijection import (
    BlockLabel,
    IBrLabel,
    f_to_lambda,
    ibr_labels,
    lambda_to_f,
    reachable_cores,
    verify_all,
    verify_block,
)
from spinblocks.partitions import (
    BarPartition,
    Partition,
    enumerate_bar_partitions,
    is_self_associated,
)
from spinblocks.signs import SpinContext


def bp(*parts):
    return BarPartition(tuple(parts))


def block(kappa, n, p=3, eta=1):
    return BlockLabel(kappa=kappa, n=n, ctx=SpinContext(p, eta))


class TestBlockLabel:
    def test_weight(self):
        assert block(bp(1), 10).weight == 3

    def test_rejects_non_core(self):
        with pytest.raises(ValueError):
            block(bp(4), 7)

    def test_rejects_bad_n(self):
        with pytest.raises(ValueError):
            block(bp(1), 3)


class TestIBrLabels:
    def test_pairing_swaps_between_sides(self):
        cases = [
            (block(bp(1), 7), bp(7)),  # self-associated
            (block(bp(1), 7), bp(4, 2, 1)),  # self-associated
            (block(bp(5, 2), 7), bp(5, 2)),  # not self-associated
        ]
        for b, lam in cases:
            s_variants = sorted(
                l.variant for l in ibr_labels(b, "S") if l.lam == lam
            )
            a_variants = sorted(
                l.variant for l in ibr_labels(b, "A") if l.lam == lam
            )
            if is_self_associated(lam):
                assert s_variants == ["whole"]
                assert a_variants == ["+", "-"]
            else:
                assert s_variants == ["+", "-"]
                assert a_variants == ["whole"]

    def test_counts_match_on_both_sides(self):
        for n in range(1, 13):
            for kappa in reachable_cores(n, 3):
                b = block(kappa, n)
                lams = {l.lam for l in ibr_labels(b, "S")}
                n_self = sum(1 for lam in lams if is_self_associated(lam))
                n_nonself = len(lams) - n_self
                assert len(ibr_labels(b, "S")) == n_self + 2 * n_nonself
                assert len(ibr_labels(b, "A")) == 2 * n_self + n_nonself

    def test_rejects_bad_side(self):
        with pytest.raises(ValueError):
            ibr_labels(block(bp(1), 4), "X")
        with pytest.raises(ValueError):
            IBrLabel(bp(1), "S", "0")


class TestLabelDecomposition:
    def test_single_bar(self):
        kappa, f = lambda_to_f(bp(4), 3)
        assert kappa == bp(1)
        assert f == (((1, 0), Partition((1,))),)

    def test_core_maps_to_empty(self):
        kappa, f = lambda_to_f(bp(5, 2), 3)
        assert kappa == bp(5, 2)
        assert f == ()

    def test_runner_separation(self):
        # parts on different runners mod p land in different level-1 slots
        kappa1, f1 = lambda_to_f(bp(6, 3), 5)  # extra bar sits over runner 1
        kappa2, f2 = lambda_to_f(bp(8, 1), 5)  # extra bar sits over runner 2
        assert kappa1 == kappa2 == bp(3, 1)
        assert f1 == (((1, 0), Partition((1,))),)
        assert f2 == (((1, 1), Partition((1,))),)

    def test_inverse_examples(self):
        assert f_to_lambda(bp(1), (((1, 0), Partition((1,))),), 3) == bp(4)
        assert f_to_lambda(bp(5, 2), (), 3) == bp(5, 2)

    def test_inverse_rejects_non_core_entry(self):
        with pytest.raises(ValueError):
            f_to_lambda(bp(1), (((1, 0), Partition((3,))),), 3)

    def test_inverse_rejects_bad_index(self):
        with pytest.raises(ValueError):
            f_to_lambda(bp(1), (((1, 5), Partition((1,))),), 3)

    def test_round_trips_small(self):
        for p in (3, 5):
            for n in range(1, 13):
                for lam in enumerate_bar_partitions(n):
                    if any(x % p == 0 for x in lam.parts):
                        continue
                    kappa, f = lambda_to_f(lam, p)
                    assert f_to_lambda(kappa, f, p) == lam


class TestVerifyBlock:
    def test_weight_one_block(self):
        r = verify_block(block(bp(1), 4))
        assert r.passed and r.failure is None
        assert (r.ibr_self, r.ibr_nonself) == (0, 1)
        assert (r.weights_sym_plus, r.weights_sym_minus) == (0, 1)
        assert r.mu_table == ((bp(4), 1),)

    def test_defect_zero_block(self):
        r = verify_block(block(bp(5, 2), 7))
        assert r.passed
        assert r.ibr_self + r.ibr_nonself == 1
        assert r.weights_sym_plus + r.weights_sym_minus == 1

    def test_negative_eta_block(self):
        r = verify_block(block(bp(1), 10, eta=-1))
        assert r.passed
        assert r.ibr_self + 2 * r.ibr_nonself == (
            r.weights_sym_plus + 2 * r.weights_sym_minus
        )

    def test_n6_carries_note(self):
        r = verify_block(block(bp(), 6))
        assert r.passed
        assert r.note is not None and "n=6" in r.note
        assert verify_block(block(bp(1), 7)).note is None


def test_reachable_cores():
    cores = reachable_cores(7, 3)
    assert cores == [bp(5, 2), bp(1)]
    assert all((7 - k.size) % 3 == 0 for k in cores)


def test_verify_all_matches_serial_and_parallel():
    serial = verify_all(9, 3, 1)
    assert serial and all(r.passed for r in serial)
    assert verify_all(9, 3, 1, jobs=2) == serial
