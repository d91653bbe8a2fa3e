"""Legendre-symbol sign calculus for spin blocks.

All signs are plain ints in {+1, -1}.  The signed products attached to a
strict partition are kept as exact Fractions; they are only ever consumed
through the Legendre map of their p'-signed part, so half-integral
intermediate values are harmless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    BarPartition,
    is_p_bar_core,
    is_self_associated,
)


def _check_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or any(p % q == 0 for q in range(3, math.isqrt(p) + 1, 2)):
        raise ValueError(f"p={p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion; rejects p | a."""
    _check_odd_prime(p)
    if a % p == 0:
        raise ValueError(f"p={p} divides a={a}")
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def legendre_fraction(x: Fraction | int, p: int) -> int:
    """Legendre symbol of a nonzero rational with numerator and denominator
    prime to p ((d/p)^2 = 1, so the symbol of n/d equals that of n*d)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no Legendre symbol")
    return legendre(x.numerator * x.denominator, p)


@dataclass(frozen=True)
class SpinContext:
    """The acting odd prime and the central-extension type."""

    p: int
    eta: int

    def __post_init__(self):
        _check_odd_prime(self.p)
        if self.eta not in (1, -1):
            raise ValueError("eta must be +1 or -1")


def _p_val_and_part(x: int, p: int) -> tuple[int, int]:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v, x


def sigma_sqrt_sign(m: int, p: int) -> int:
    """Sign by which the Galois generator multiplies sqrt(m):
    ((-1)^v * m_{p'} / p) where v is the p-valuation of m."""
    if m == 0:
        raise ValueError("m must be nonzero")
    sign = -1 if m < 0 else 1
    v, mp = _p_val_and_part(abs(m), p)
    return legendre((-1) ** v * sign * mp, p)


def n_lambda(lam: BarPartition, ctx: SpinContext) -> Fraction:
    """The signed product N attached to a strict partition: a global sign
    (-1)^floor((n-l)/2) times, per part, the signed p'-part, divided by
    2*eta for even parts."""
    n, l = lam.size, lam.length
    acc = Fraction((-1) ** ((n - l) // 2))
    for x in lam.parts:
        v, xp = _p_val_and_part(x, ctx.p)
        term = Fraction((-1) ** v * xp)
        if x % 2 == 0:
            term /= 2 * ctx.eta
        acc *= term
    return acc


def m_lambda(lam: BarPartition, ctx: SpinContext) -> Fraction:
    """Variant of n_lambda with (-1/p)^v in place of (-1)^v per part; has the
    same Legendre symbol and is multiplicative over p-adic levels without a
    level-count prefactor."""
    n, l = lam.size, lam.length
    minus_one = legendre(-1, ctx.p)
    acc = Fraction((-1) ** ((n - l) // 2))
    for x in lam.parts:
        v, xp = _p_val_and_part(x, ctx.p)
        term = Fraction(minus_one**v * xp)
        if x % 2 == 0:
            term /= 2 * ctx.eta
        acc *= term
    return acc


def mu_lambda(lam: BarPartition, ctx: SpinContext) -> int:
    """The sign by which the Galois generator acts on the character pair
    labeled by lam."""
    return legendre_fraction(n_lambda(lam, ctx), ctx.p)


def mu_lambda_via_core(
    kappa: BarPartition,
    w: int,
    ctx: SpinContext,
    lambda_self_associated: bool | None = None,
) -> int:
    """mu for any label of the block of kappa at bar weight w, computed from
    the core alone.  The exponent on (-1/p) is floor(w/2) when the label is
    self-associated (equivalently the core is not), ceil(w/2) otherwise; for
    even w the two cases agree."""
    if not is_p_bar_core(kappa, ctx.p):
        raise ValueError(f"{kappa} is not a {ctx.p}-bar-core")
    if w < 0:
        raise ValueError("w must be nonnegative")
    kappa_sa = is_self_associated(kappa)
    derived_sa = kappa_sa == (w % 2 == 0)
    if lambda_self_associated is not None and lambda_self_associated != derived_sa:
        raise ValueError(
            "label associatedness inconsistent with core type and weight parity"
        )
    if derived_sa or not kappa_sa:
        exponent = w // 2
    else:
        exponent = (w + 1) // 2
    sign = legendre_fraction(n_lambda(kappa, ctx), ctx.p)
    sign *= legendre(-1, ctx.p) ** exponent
    sign *= legendre(2 * ctx.eta, ctx.p) ** w
    return sign


def eta_level(ctx: SpinContext, j: int) -> int:
    """Extension type of the level-j factor of a p-element centralizer."""
    if j < 0:
        raise ValueError("level must be nonnegative")
    return legendre(-1, ctx.p) ** j * ctx.eta


def eta_prime(ctx: SpinContext, c_norm: int) -> int:
    """Extension type of the top symmetric factor over a wreath tower of
    total depth c_norm."""
    if c_norm < 1:
        raise ValueError("|c| must be at least 1")
    return legendre((-1) ** c_norm, ctx.p) * ctx.eta


def t_power_sign(ctx: SpinContext, c_norm: int) -> int:
    """Central value of the (p-1)-th power of a torus generator."""
    if c_norm < 1:
        raise ValueError("|c| must be at least 1")
    return legendre((-1) ** c_norm * 2 * ctx.eta, ctx.p)


def mu_psi(ctx: SpinContext, c_norm: int, e: int) -> int:
    """Galois sign on the defect-zero characters sitting over the e-th
    tensor power of a level-c_norm slot character."""
    if e < 1:
        raise ValueError("e must be at least 1")
    return legendre(-1, ctx.p) ** (e // 2) * t_power_sign(ctx, c_norm) ** e


def mu_w(ctx: SpinContext, w: int) -> int:
    """Galois sign of the positive-weight local factor at bar weight w."""
    if w < 0:
        raise ValueError("w must be nonnegative")
    return legendre(-1, ctx.p) ** ((w + 1) // 2) * legendre(2 * ctx.eta, ctx.p) ** w


def mu_kappa_f(kappa: BarPartition, w: int, ctx: SpinContext) -> int:
    """Galois sign of the weight label (kappa, f) at bar weight w.  Cases:
    non-self-associated label (core type and w parity differ from matching):
    exponent ceil(w/2); self-associated core and even w: w/2; non-self
    core and odd w: floor(w/2)."""
    if not is_p_bar_core(kappa, ctx.p):
        raise ValueError(f"{kappa} is not a {ctx.p}-bar-core")
    if w < 0:
        raise ValueError("w must be nonnegative")
    kappa_sa = is_self_associated(kappa)
    if kappa_sa != (w % 2 == 0):
        exponent = (w + 1) // 2  # label non-self-associated
    elif kappa_sa:
        exponent = w // 2
    else:
        exponent = w // 2
    sign = legendre_fraction(n_lambda(kappa, ctx), ctx.p)
    sign *= legendre(-1, ctx.p) ** exponent
    sign *= legendre(2 * ctx.eta, ctx.p) ** w
    return sign


def sym(kappa: BarPartition, n: int, ctx: SpinContext) -> int:
    """+1 when the pair (kappa, f) defines one self-associated weight, -1
    when it defines an associate pair."""
    if n < kappa.size or (n - kappa.size) % ctx.p != 0:
        raise ValueError("n must equal |kappa| plus a multiple of p")
    sym0 = 1 if is_self_associated(kappa) else -1
    return sym0 * (-1) ** (n - kappa.size)
