"""End-to-end acceptance checks, one test per headline guarantee.

Each test is exhaustive over its stated parameter range and uses exact
arithmetic throughout; there are no tolerances anywhere in this file.
"""

import random
from fractions import Fraction

from spinblocks.bijection import f_to_lambda, lambda_to_f, verify_all
from spinblocks.cyclotomic import CycNumber, I_UNIT, apply_sigma, gauss_sqrt
from spinblocks.humphreys import (
    LocalCharDescriptor,
    combine,
    delta_value_from_matrix,
    scalar_matrix,
    two_factor_matrix,
)
from spinblocks.local_reps import (
    PresentationParams,
    alpha_tuples,
    brute_force_class_count,
    delta_alpha_plus,
    even_split_traces,
    sigma_equivalence,
    verify_action_relations,
    verify_s_relations,
    verify_t_relations,
)
from spinblocks.partitions import (
    Associatedness,
    BarPartition,
    assemble_quotient,
    assemble_tower,
    enumerate_bar_partitions,
    enumerate_partitions,
    is_self_associated,
    p_adic_split,
    p_bar_core,
    p_core_tower,
    p_quotient,
)
from spinblocks.signs import (
    SpinContext,
    eta_level,
    legendre,
    legendre_fraction,
    m_lambda,
    mu_lambda,
    mu_lambda_via_core,
    mu_psi,
    n_lambda,
    sigma_sqrt_sign,
)
from spinblocks.weights import c_d_slots, enumerate_c_sequences, slot_count


def test_01_main_sweep_all_blocks_verify():
    """Every spin block passes the full label/weight verification:
    p in {3,5,7}, both eta, n <= 15, and n <= 20 for p = 3."""
    for p in (3, 5, 7):
        top = 20 if p == 3 else 15
        for eta in (1, -1):
            for n in range(0, top + 1):
                for report in verify_all(n, p, eta):
                    assert report.passed, (p, eta, n, report.failure)


def test_02_core_recurrence_matches_direct_sign():
    """mu computed from the label equals mu computed from its bar-core and
    weight, for every p-regular strict partition of size <= 25."""
    for p in (3, 5, 7):
        contexts = [SpinContext(p, 1), SpinContext(p, -1)]
        for n in range(0, 26):
            for lam in enumerate_bar_partitions(n):
                if any(x % p == 0 for x in lam.parts):
                    continue
                kappa, w = p_bar_core(lam, p)
                sa = is_self_associated(lam)
                for ctx in contexts:
                    assert mu_lambda(lam, ctx) == mu_lambda_via_core(
                        kappa, w, ctx, sa
                    ), (p, ctx.eta, lam)


def test_03_signed_product_is_multiplicative_over_levels():
    """N factors over the p-adic levels of the label (with the level-count
    and pair-count sign prefactors), and the variant M factors with the
    pair-count prefactor alone while keeping the same Legendre symbol."""
    for p in (3, 5, 7):
        for eta in (1, -1):
            ctx = SpinContext(p, eta)
            for n in range(0, 21):
                for lam in enumerate_bar_partitions(n):
                    split = p_adic_split(lam, p)
                    level_count = sum(
                        j * lv.length for j, lv in enumerate(split.levels)
                    )
                    pre_n = Fraction(
                        (-1) ** (((p + 1) // 2) * level_count)
                        * (-1) ** (split.s_lambda // 2)
                    )
                    pre_m = Fraction((-1) ** (split.s_lambda // 2))
                    prod_n = pre_n
                    prod_m = pre_m
                    for j, lv in enumerate(split.levels):
                        ctx_j = SpinContext(p, eta_level(ctx, j))
                        prod_n *= n_lambda(lv, ctx_j)
                        prod_m *= m_lambda(lv, ctx_j)
                    assert n_lambda(lam, ctx) == prod_n, (p, eta, lam)
                    assert m_lambda(lam, ctx) == prod_m, (p, eta, lam)
                    assert legendre_fraction(m_lambda(lam, ctx), p) == (
                        legendre_fraction(n_lambda(lam, ctx), p)
                    )


def test_04_slot_counts_match_closed_form():
    """The level-d slot set has exactly (p-1)/2 * p^(d-1) members, and the
    per-composition contributions (p-1)^r / 2 sum to that total."""
    for p in (3, 5, 7, 11):
        for d in range(1, 7):
            slots = c_d_slots(d, p)
            assert len(slots) == slot_count(d, p) == (p - 1) * p ** (d - 1) // 2
            per_comp = {
                c: (p - 1) ** c.r // 2 for c in enumerate_c_sequences(d)
            }
            assert sum(per_comp.values()) == len(slots)
            for s in slots:
                per_comp[s.c_seq] -= 1
            assert all(v == 0 for v in per_comp.values())


def test_05_presentation_relations_and_galois_signs():
    """For every parameter tuple (p in {3,5,7}, both eta, |c| in {1,2},
    e in 1..4, r in {1,2}) and every legal alpha tuple: the generator images
    satisfy all defining relations exactly, the Galois twist is intertwined
    by the predicted matrix with the predicted sign (odd e), the even-e
    restriction splits with the predicted trace signs, and both signs agree
    with the closed form."""
    for p in (3, 5, 7):
        for eta in (1, -1):
            for c in (1, 2):
                for e in range(1, 5):
                    for r in (1, 2):
                        pr = PresentationParams(p=p, eta=eta, c_norm=c, r=r, e=e)
                        closed = mu_psi(pr.ctx, c, e)
                        for alpha in alpha_tuples(pr):
                            images = delta_alpha_plus(pr, alpha)
                            assert images.dim <= 4
                            for check in (
                                verify_t_relations,
                                verify_s_relations,
                                verify_action_relations,
                            ):
                                ok, witness = check(images, pr)
                                assert ok, (p, eta, c, e, r, witness)
                            if e % 2:
                                mu_prime, _ = sigma_equivalence(images, pr)
                                assert mu_prime == closed, (p, eta, c, e, r)
                            else:
                                even_split_traces(images, pr)
                                assert legendre((-1) ** pr.e0, p) == closed


def test_06_character_counts_match_brute_force():
    """Linear/nonlinear character counts and nonlinear degrees of the small
    local groups match the closed forms, via normal-form enumeration."""
    for p, e in ((3, 2), (3, 3), (5, 2), (5, 3), (7, 2)):
        pr = PresentationParams(p=p, eta=1, c_norm=1, r=1, e=e)
        linear, nonlinear, degree = brute_force_class_count(pr)
        half = (p - 1) // 2
        assert linear == (p - 1) ** e
        if e % 2 == 0:
            assert nonlinear == half**e
            assert degree == 2 ** (e // 2)
        else:
            assert nonlinear == 2 * half**e
            assert degree == 2 ** ((e - 1) // 2)


def test_07_gauss_sum_galois_action():
    """sigma sends the quadratic Gauss sum of q to legendre(p, q) times
    itself, and that sign matches the closed form for sqrt(+-q)."""
    for q in (3, 5, 7, 11, 13):
        for p in (3, 5, 7):
            if p == q:
                continue
            g = gauss_sqrt(q, p)
            assert apply_sigma(g, p) == g * legendre(p, q)
            q_star = q if q % 4 == 1 else -q
            assert legendre(p, q) == sigma_sqrt_sign(q_star, p)


def test_08_twisted_product_degree_parity_value():
    """combine reproduces the closed degree/parity/value formulas on 500
    random descriptor lists, and the matrix-level delta extraction equals
    2i * a * b on 200 random value pairs."""
    SA = Associatedness.SELF_ASSOCIATED
    NSA = Associatedness.NON_SELF_ASSOCIATED
    rng = random.Random(987654321)
    for _ in range(500):
        factors = []
        for _ in range(rng.randint(1, 6)):
            n = rng.choice([3, 4, 8, 12, 20])
            value = CycNumber.zeta(n, rng.randrange(n)) * rng.randint(1, 5)
            factors.append(
                LocalCharDescriptor(rng.randint(1, 12), rng.choice([SA, NSA]), value)
            )
        s = sum(1 for f in factors if f.assoc is NSA)
        got = combine(factors)
        assert got.s == s
        assert got.assoc is (NSA if s % 2 else SA)
        degree = 2 ** (s // 2)
        value = (2 * I_UNIT) ** (s // 2)
        for f in factors:
            degree *= f.degree
            value = value * f.tagged_value
        assert got.degree == degree
        assert got.tagged_value == value
    for _ in range(200):
        n = rng.choice([4, 8, 12])
        a = CycNumber.zeta(n, rng.randrange(n)) * rng.randint(1, 4)
        b = CycNumber.zeta(n, rng.randrange(n)) * rng.randint(1, 4)
        m = two_factor_matrix(scalar_matrix(a), scalar_matrix(b), (-1, -1))
        assert delta_value_from_matrix(m) == 2 * I_UNIT * a * b


def test_09_round_trips():
    """Quotient and tower decompositions reconstruct every partition of size
    <= 20, and the label bijection round-trips on every basic-set label
    (n <= 20 at p = 3; n <= 15 at p in {5,7})."""
    for p in (3, 5, 7):
        for n in range(0, 21):
            for mu in enumerate_partitions(n):
                core, quotient = p_quotient(mu, p)
                assert assemble_quotient(core, quotient, p) == mu
                assert assemble_tower(p_core_tower(mu, p), p) == mu
    for p in (3, 5, 7):
        top = 20 if p == 3 else 15
        for n in range(0, top + 1):
            for lam in enumerate_bar_partitions(n):
                if any(x % p == 0 for x in lam.parts):
                    continue
                kappa, f = lambda_to_f(lam, p)
                assert f_to_lambda(kappa, f, p) == lam, (p, lam)
