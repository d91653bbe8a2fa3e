"""Exact matrix models of the local torus-normalizer double covers.

The torus-like group has generators t_{kj} (1 <= k <= e, 1 <= j <= r) and a
central -1; the covering symmetric group on top contributes s_1..s_{e-1}.
Everything is realized with tensor products of Pauli matrices over exact
cyclotomic numbers, so every relation check below is a strict matrix
identity, not a numerical one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import (
    CycMatrix,
    CycNumber,
    I_UNIT,
    apply_sigma,
    coerce,
    kron_all,
    sqrt_of_sign_times_two,
)
from .signs import SpinContext, eta_prime, legendre, mu_psi, t_power_sign

SIGMA_X = CycMatrix([[0, 1], [1, 0]])
SIGMA_Y = CycMatrix([[0, -I_UNIT], [I_UNIT, 0]])
SIGMA_Z = CycMatrix([[1, 0], [0, -1]])


@dataclass(frozen=True)
class PresentationParams:
    """Parameters of one local group: acting prime p, extension type eta,
    wreath-tower depth c_norm = |c|, torus rank r, and e copies glued by the
    covering symmetric group."""

    p: int
    eta: int
    c_norm: int
    r: int
    e: int

    def __post_init__(self):
        SpinContext(self.p, self.eta)  # validates p, eta
        if self.c_norm < 1 or self.r < 1 or self.e < 1:
            raise ValueError("c_norm, r, e must all be at least 1")

    @property
    def ctx(self) -> SpinContext:
        return SpinContext(self.p, self.eta)

    @property
    def e0(self) -> int:
        return self.e // 2

    @property
    def dim(self) -> int:
        return 2**self.e0

    @property
    def eta_prime(self) -> int:
        return eta_prime(self.ctx, self.c_norm)

    @property
    def tau(self) -> int:
        """Central value of t_j^(p-1)."""
        return t_power_sign(self.ctx, self.c_norm)


def build_F(e0: int) -> list[CycMatrix]:
    """The 2*e0 + 1 anticommuting involutions F_k of dimension 2^e0:
    F_{2k0-1} = I^(e0-k0) (x) sigma_x (x) sigma_z^(k0-1), F_{2k0} likewise
    with sigma_y, and F_{2e0+1} = sigma_z^e0."""
    if e0 < 0:
        raise ValueError("e0 must be nonnegative")
    out = []
    for k0 in range(1, e0 + 1):
        pre = [CycMatrix.identity(2)] * (e0 - k0)
        post = [SIGMA_Z] * (k0 - 1)
        out.append(kron_all(pre + [SIGMA_X] + post))
        out.append(kron_all(pre + [SIGMA_Y] + post))
    out.append(kron_all([SIGMA_Z] * e0))
    return out


def build_E(e0: int) -> CycMatrix:
    """The involution with E F_k E = (-1)^e0 (-1)^(k-1) F_k: an alternating
    tensor product sigma_y (x) sigma_x (x) sigma_y (x) ... of e0 factors."""
    factors = [SIGMA_Y if i % 2 == 0 else SIGMA_X for i in range(e0)]
    return kron_all(factors)


@dataclass(frozen=True)
class GeneratorImages:
    """Matrices assigned to the generators; s is empty when only the torus
    part is represented."""

    t: dict[tuple[int, int], CycMatrix]
    s: dict[int, CycMatrix]
    minus_one: CycMatrix
    dim: int

    def __iter__(self):
        for key, m in sorted(self.t.items()):
            yield ("t", key, m)
        for k, m in sorted(self.s.items()):
            yield ("s", k, m)


def alpha_candidates(params: PresentationParams) -> list[CycNumber]:
    """All legal values of alpha(t_j): roots of unity of order dividing
    2(p-1) whose (p-1)-th power is the central sign tau."""
    n = 2 * (params.p - 1)
    start = 0 if params.tau == 1 else 1
    return [CycNumber.zeta(n, k) for k in range(start, n, 2)]


def alpha_tuples(params: PresentationParams) -> list[tuple[CycNumber, ...]]:
    """All legal alpha value tuples over the r torus generators."""
    return list(itertools.product(alpha_candidates(params), repeat=params.r))


def _check_alpha(params: PresentationParams, values: tuple[CycNumber, ...]) -> None:
    if len(values) != params.r:
        raise ValueError(f"need {params.r} alpha values")
    for v in values:
        if v ** (params.p - 1) != coerce(params.tau):
            raise ValueError("alpha value violates the torus power condition")


def delta_alpha_plus(
    params: PresentationParams, alpha_values: tuple[CycNumber, ...]
) -> GeneratorImages:
    """The distinguished extension: t_{kj} goes to alpha(t_j) F_k and s_k to
    (F_k - F_{k+1}) / sqrt(2 eta')."""
    _check_alpha(params, alpha_values)
    f = build_F(params.e0)
    t = {
        (k, j): f[k - 1].scaled(alpha_values[j - 1])
        for k in range(1, params.e + 1)
        for j in range(1, params.r + 1)
    }
    ep = params.eta_prime
    # 1/sqrt(2 eta') = sqrt(2 eta') / (2 eta')
    inv_sqrt = sqrt_of_sign_times_two(ep) * Fraction(1, 2 * ep)
    s = {
        k: (f[k - 1] - f[k]).scaled(inv_sqrt)
        for k in range(1, params.e)
    }
    return GeneratorImages(t=t, s=s, minus_one=-CycMatrix.identity(params.dim), dim=params.dim)


def delta_multi(
    params: PresentationParams, alpha_matrix: list[tuple[CycNumber, ...]]
) -> GeneratorImages:
    """Torus-only representation with an independent alpha_k per copy:
    t_{kj} goes to alpha_k(t_j) F_k."""
    if len(alpha_matrix) != params.e:
        raise ValueError(f"need {params.e} alpha rows")
    for row in alpha_matrix:
        _check_alpha(params, row)
    f = build_F(params.e0)
    t = {
        (k, j): f[k - 1].scaled(alpha_matrix[k - 1][j - 1])
        for k in range(1, params.e + 1)
        for j in range(1, params.r + 1)
    }
    return GeneratorImages(t=t, s={}, minus_one=-CycMatrix.identity(params.dim), dim=params.dim)


# ---------------------------------------------------------------------------
# relation verification
# ---------------------------------------------------------------------------

Verdict = tuple[bool, str | None]


def verify_t_relations(images: GeneratorImages, params: PresentationParams) -> Verdict:
    """t_{kj}^(p-1) is the central sign tau; same-copy generators commute,
    distinct-copy generators anticommute; -1 maps to -I."""
    tau_i = CycMatrix.identity(images.dim).scaled(params.tau)
    if images.minus_one != -CycMatrix.identity(images.dim):
        return False, "image of -1 is not -I"
    for (k, j), m in images.t.items():
        if m ** (params.p - 1) != tau_i:
            return False, f"t[{k},{j}]^(p-1) != tau*I"
    keys = sorted(images.t)
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            (k1, j1), (k2, j2) = keys[a], keys[b]
            m1, m2 = images.t[keys[a]], images.t[keys[b]]
            if k1 == k2:
                if m1 * m2 != m2 * m1:
                    return False, f"t[{k1},{j1}], t[{k2},{j2}] do not commute"
            else:
                if m1 * m2 != -(m2 * m1):
                    return False, f"t[{k1},{j1}], t[{k2},{j2}] do not anticommute"
    return True, None


def verify_s_relations(images: GeneratorImages, params: PresentationParams) -> Verdict:
    """s_k^2 = eta' I, (s_k s_{k+1})^3 = eta' I, and s_k, s_k' anticommute
    when |k - k'| >= 2."""
    if params.e < 2:
        return True, None
    ep_i = CycMatrix.identity(images.dim).scaled(params.eta_prime)
    for k, m in images.s.items():
        if m * m != ep_i:
            return False, f"s[{k}]^2 != eta'*I"
    for k in range(1, params.e - 1):
        if (images.s[k] * images.s[k + 1]) ** 3 != ep_i:
            return False, f"(s[{k}]s[{k + 1}])^3 != eta'*I"
    for k in images.s:
        for k2 in images.s:
            if k2 - k >= 2:
                a, b = images.s[k], images.s[k2]
                if a * b != -(b * a):
                    return False, f"s[{k}], s[{k2}] do not anticommute"
    return True, None


def verify_action_relations(images: GeneratorImages, params: PresentationParams) -> Verdict:
    """t_{k+1,j} = -s_k^(-1) t_{kj} s_k, and t_{kj} anticommutes with s_k'
    for k' outside {k-1, k}."""
    if params.e < 2:
        return True, None
    ep = params.eta_prime
    for k in range(1, params.e):
        s_k = images.s[k]
        s_inv = s_k.scaled(ep)  # s^2 = eta' I, eta'^2 = 1
        for j in range(1, params.r + 1):
            if images.t[(k + 1, j)] != -(s_inv * images.t[(k, j)] * s_k):
                return False, f"conjugation by s[{k}] fails on t[{k},{j}]"
    for (k, j), m in images.t.items():
        for k2, s in images.s.items():
            if k2 in (k - 1, k):
                continue
            if m * s != -(s * m):
                return False, f"t[{k},{j}], s[{k2}] do not anticommute"
    return True, None


def verify_all_relations(images: GeneratorImages, params: PresentationParams) -> Verdict:
    for check in (verify_t_relations, verify_s_relations, verify_action_relations):
        ok, witness = check(images, params)
        if not ok:
            return ok, witness
    return True, None


# ---------------------------------------------------------------------------
# Galois behaviour
# ---------------------------------------------------------------------------


def sigma_equivalence(
    images: GeneratorImages, params: PresentationParams
) -> tuple[int, CycMatrix]:
    """Apply the Galois generator entrywise and exhibit the intertwiner.

    Returns (mu', U) with mu' = ((-1)^(|c|+e0) 2 eta / p) such that
    sigma(image(g)) = U * (mu'-twist of image(g)) * U on every generator;
    the twist negates generator images when mu' = -1.  U is the identity for
    p = 1 mod 4 and the alternating involution E otherwise.  For even e it
    additionally checks that the sign-twisted representation is conjugate to
    the original by F_{2e0+1}; for odd e it checks the two central scalars
    that keep the twisted pair inequivalent.
    """
    p = params.p
    mu_prime = legendre((-1) ** (params.c_norm + params.e0) * 2 * params.eta, p)
    u = CycMatrix.identity(params.dim) if p % 4 == 1 else build_E(params.e0)
    for name, key, m in images:
        twisted = m if mu_prime == 1 else -m
        if m.map(lambda x: apply_sigma(x, p)) != u * twisted * u:
            raise AssertionError(f"intertwining fails on {name}{key}")
    if params.e % 2 == 0:
        f_last = build_F(params.e0)[-1]
        for name, key, m in images:
            if -m != f_last * m * f_last:
                raise AssertionError(f"sign-twist conjugation fails on {name}{key}")
    else:
        central = _central_product(images, params, j=1)
        scalar = central.rows[0][0]
        if central != CycMatrix.identity(params.dim).scaled(scalar) or scalar == -scalar:
            raise AssertionError("central element does not separate the twisted pair")
    return mu_prime, u


def _central_product(
    images: GeneratorImages, params: PresentationParams, j: int
) -> CycMatrix:
    """Image of t_{1j} t_{2j} ... t_{ej}."""
    out = CycMatrix.identity(images.dim)
    for k in range(1, params.e + 1):
        out = out * images.t[(k, j)]
    return out


def even_split_traces(
    images: GeneratorImages, params: PresentationParams
) -> tuple[CycNumber, CycNumber]:
    """For even e the representation splits in the index-two subgroup; the
    two halves take the scalar values +/- i^e0 alpha(t_j)^e on the central
    element t_{1j}...t_{ej}.  Returns (value_plus, value_minus) and checks
    that the Galois generator maps value_plus to the half selected by
    mu'' = ((-1)^e0 / p)."""
    if params.e % 2 != 0:
        raise ValueError("even_split_traces requires even e")
    central = _central_product(images, params, j=1)
    value_plus = central.rows[0][0]
    value_minus = -value_plus
    expected = kron_all([SIGMA_Z] * params.e0).scaled(value_plus)
    if central != expected:
        raise AssertionError("central element is not the expected diagonal split")
    mu_second = legendre((-1) ** params.e0, params.p)
    target = value_plus if mu_second == 1 else value_minus
    if apply_sigma(value_plus, params.p) != target:
        raise AssertionError("Galois action disagrees with the split sign")
    return value_plus, value_minus


def galois_signs_match(params: PresentationParams) -> bool:
    """The representation-level Galois signs equal the closed-form sign:
    mu' for odd e and mu'' for even e."""
    expected = mu_psi(params.ctx, params.c_norm, params.e)
    alpha = tuple(alpha_candidates(params)[:1] * params.r)
    images = delta_alpha_plus(params, alpha)
    if params.e % 2 == 0:
        even_split_traces(images, params)
        return legendre((-1) ** params.e0, params.p) == expected
    mu_prime, _ = sigma_equivalence(images, params)
    return mu_prime == expected


# ---------------------------------------------------------------------------
# brute-force finite-group oracle
# ---------------------------------------------------------------------------


class TTildeGroup:
    """The torus cover as a finite group in normal form.

    Elements are (sign, a) with sign = +/-1 and a an e*r exponent matrix mod
    p-1, standing for sign * prod_k prod_j t_{kj}^(a_kj) in that fixed order.
    Cross-copy generators anticommute and t^(p-1) wraps to the central tau.
    """

    def __init__(self, p: int, tau: int, e: int, r: int):
        if tau not in (1, -1):
            raise ValueError("tau must be +1 or -1")
        if (p - 1) ** (e * r) > 10**6:
            raise ValueError("group too large for brute-force enumeration")
        self.p = p
        self.tau = tau
        self.e = e
        self.r = r
        self.order = 2 * (p - 1) ** (e * r)

    def identity(self):
        return (1, tuple(tuple(0 for _ in range(self.r)) for _ in range(self.e)))

    def multiply(self, a, b):
        sa, ea = a
        sb, eb = b
        sign = sa * sb
        # moving the second factor's copy-k block past the first factor's
        # higher copies picks up one -1 per generator crossing
        u = [sum(row) for row in ea]
        v = [sum(row) for row in eb]
        crossings = sum(
            v[k] * u[k2] for k in range(self.e) for k2 in range(k + 1, self.e)
        )
        if crossings % 2:
            sign = -sign
        merged = []
        for k in range(self.e):
            row = []
            for j in range(self.r):
                c = ea[k][j] + eb[k][j]
                if c >= self.p - 1:
                    c -= self.p - 1
                    sign *= self.tau
                row.append(c)
            merged.append(tuple(row))
        return (sign, tuple(merged))

    def elements(self):
        ranges = [range(self.p - 1)] * (self.e * self.r)
        for flat in itertools.product(*ranges):
            mat = tuple(
                tuple(flat[k * self.r : (k + 1) * self.r]) for k in range(self.e)
            )
            yield (1, mat)
            yield (-1, mat)

    def generators(self):
        out = [(-1, self.identity()[1])]
        for k in range(self.e):
            for j in range(self.r):
                mat = tuple(
                    tuple(1 if (k2 == k and j2 == j) else 0 for j2 in range(self.r))
                    for k2 in range(self.e)
                )
                out.append((1, mat))
        return out

    def conjugate(self, g, h):
        """h g h^(-1), found by scanning for the inverse of h."""
        ident = self.identity()
        for cand in self.elements():
            if self.multiply(h, cand) == ident:
                return self.multiply(self.multiply(h, g), cand)
        raise AssertionError("inverse not found")

    def class_count(self) -> int:
        gens = self.generators()
        seen = set()
        count = 0
        for g in self.elements():
            if g in seen:
                continue
            count += 1
            orbit = {g}
            frontier = [g]
            while frontier:
                x = frontier.pop()
                for h in gens:
                    y = self.conjugate(x, h)
                    if y not in orbit:
                        orbit.add(y)
                        frontier.append(y)
            seen |= orbit
        return count

    def derived_subgroup_order(self) -> int:
        gens = self.generators()
        comms = set()
        for a in gens:
            for b in gens:
                ident = self.identity()
                inv_a = next(
                    x for x in self.elements() if self.multiply(a, x) == ident
                )
                inv_b = next(
                    x for x in self.elements() if self.multiply(b, x) == ident
                )
                comms.add(
                    self.multiply(self.multiply(a, b), self.multiply(inv_a, inv_b))
                )
        return 2 if (-1, self.identity()[1]) in comms else 1


def brute_force_class_count(params: PresentationParams) -> tuple[int, int, int]:
    """Enumerate the torus cover and return (linear character count,
    nonlinear character count, common nonlinear degree)."""
    g = TTildeGroup(params.p, params.tau, params.e, params.r)
    classes = g.class_count()
    linear = g.order // g.derived_subgroup_order()
    nonlinear = classes - linear
    if nonlinear == 0:
        return linear, 0, 0
    square, rem = divmod(g.order - linear, nonlinear)
    if rem != 0:
        raise AssertionError("nonlinear degrees are not all equal")
    degree = round(square**0.5)
    if degree * degree != square:
        raise AssertionError("nonlinear degree is not integral")
    return linear, nonlinear, degree
