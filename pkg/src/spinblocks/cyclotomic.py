"""Exact arithmetic in cyclotomic fields of p'-conductor.

A ``CycNumber`` is a rational polynomial in a fixed primitive N-th root of
unity, kept reduced modulo the N-th cyclotomic polynomial, so equality is
decidable coefficient equality.  The Galois generator acts by raising roots
of unity to the p-th power; conductors are always chosen coprime to p, so
the action is total on everything we ever build.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .signs import legendre

Rat = int | Fraction


def _poly_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod(
    num: Sequence[Fraction], den: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    """Exact division of rational polynomials, constant term first."""
    num = list(num)
    q = [Fraction(0)] * max(0, len(num) - len(den) + 1)
    inv_lead = 1 / Fraction(den[-1])
    for i in range(len(num) - len(den), -1, -1):
        coef = num[i + len(den) - 1] * inv_lead
        if coef:
            q[i] = coef
            for j, d in enumerate(den):
                num[i + j] -= coef * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not rem
    return tuple(poly)


class CycNumber:
    """Element of Q(zeta_N) in canonical reduced form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Iterable[Rat]):
        phi = cyclotomic_polynomial(conductor)
        c = [Fraction(x) for x in coeffs]
        if len(c) >= len(phi):
            _, c = _poly_divmod(c, phi)
        self.conductor = conductor
        self.coeffs: tuple[Fraction, ...] = tuple(_poly_trim(c))

    # -- construction ------------------------------------------------------

    @staticmethod
    def rational(q: Rat) -> "CycNumber":
        return CycNumber(1, [Fraction(q)])

    @staticmethod
    def zeta(conductor: int, k: int = 1) -> "CycNumber":
        """A primitive conductor-th root of unity raised to the k-th power."""
        k %= conductor
        return CycNumber(conductor, [0] * k + [1])

    # -- canonical form helpers --------------------------------------------

    def promoted(self, conductor: int) -> "CycNumber":
        """Rewrite at a larger conductor (a multiple of the current one)."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor != 0:
            raise ValueError("can only promote to a multiple of the conductor")
        step = conductor // self.conductor
        coeffs = [Fraction(0)] * (len(self.coeffs) * step or 1)
        for e, c in enumerate(self.coeffs):
            coeffs[e * step] += c
        return CycNumber(conductor, coeffs)

    def _pair(self, other: "CycNumber") -> tuple["CycNumber", "CycNumber"]:
        n = math.lcm(self.conductor, other.conductor)
        return self.promoted(n), other.promoted(n)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "CycNumber | Rat") -> "CycNumber":
        other = coerce(other)
        a, b = self._pair(other)
        m = max(len(a.coeffs), len(b.coeffs))
        pad = lambda c: list(c) + [Fraction(0)] * (m - len(c))
        return CycNumber(a.conductor, [x + y for x, y in zip(pad(a.coeffs), pad(b.coeffs))])

    __radd__ = __add__

    def __neg__(self) -> "CycNumber":
        return CycNumber(self.conductor, [-c for c in self.coeffs])

    def __sub__(self, other: "CycNumber | Rat") -> "CycNumber":
        return self + (-coerce(other))

    def __rsub__(self, other: Rat) -> "CycNumber":
        return coerce(other) - self

    def __mul__(self, other: "CycNumber | Rat") -> "CycNumber":
        other = coerce(other)
        a, b = self._pair(other)
        if not a.coeffs or not b.coeffs:
            return CycNumber(a.conductor, [])
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CycNumber(a.conductor, prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero cyclotomic number")
        phi = list(cyclotomic_polynomial(self.conductor))
        # Bezout: u*self + v*phi = gcd = const
        r0, r1 = phi, list(self.coeffs)
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            qu = [Fraction(0)] * (len(q) + len(u1) - 1)
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(u1):
                        qu[i + j] += x * y
            nu = [a - b for a, b in zip(u0 + [Fraction(0)] * len(qu), qu + [Fraction(0)] * len(u0))]
            r0, r1 = r1, r
            u0, u1 = u1, _poly_trim(nu)
        inv_const = 1 / r1[0]
        return CycNumber(self.conductor, [c * inv_const for c in u1])

    def __truediv__(self, other: "CycNumber | Rat") -> "CycNumber":
        return self * coerce(other).inverse()

    def __pow__(self, exp: int) -> "CycNumber":
        if exp < 0:
            return self.inverse() ** (-exp)
        result = CycNumber.rational(1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_rational(self) -> Fraction | None:
        """The value as an exact rational, or None if irrational."""
        if not self.coeffs:
            return Fraction(0)
        if len(self.coeffs) == 1:
            return self.coeffs[0]
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNumber.rational(other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = self._pair(other)
        return a.coeffs == b.coeffs

    def __hash__(self) -> int:
        r = self.as_rational()
        if r is not None:
            return hash(r)
        return hash((self.conductor, self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Cyc(0)"
        terms = " + ".join(
            f"{c}*z{self.conductor}^{e}" if e else str(c)
            for e, c in enumerate(self.coeffs)
            if c
        )
        return f"Cyc({terms})"


def coerce(x: "CycNumber | Rat") -> CycNumber:
    if isinstance(x, CycNumber):
        return x
    return CycNumber.rational(x)


ZERO = CycNumber.rational(0)
ONE = CycNumber.rational(1)
I_UNIT = CycNumber.zeta(4)


def apply_sigma(x: CycNumber, p: int) -> CycNumber:
    """The Galois generator: every root of unity goes to its p-th power."""
    if math.gcd(x.conductor, p) != 1:
        raise ValueError(f"conductor {x.conductor} not coprime to p={p}")
    coeffs = [Fraction(0)] * x.conductor
    for e, c in enumerate(x.coeffs):
        coeffs[(e * p) % x.conductor] += c
    return CycNumber(x.conductor, coeffs)


def gauss_sqrt(q: int, p: int) -> CycNumber:
    """The quadratic Gauss sum sum_t (t/q) zeta_q^t.

    Squares to q when q = 1 mod 4 and to -q when q = 3 mod 4.
    """
    if q == p:
        raise ValueError("gauss_sqrt requires q distinct from the acting prime")
    if q % 2 == 0 or q < 3:
        raise ValueError("q must be an odd prime")
    coeffs = [Fraction(0)] * q
    for t in range(1, q):
        coeffs[t] = Fraction(legendre(t, q))
    return CycNumber(q, coeffs)


def sqrt_of_sign_times_two(s: int) -> CycNumber:
    """An exact square root of 2s for s = +1 or -1, living in Q(zeta_8)."""
    if s == 1:
        return CycNumber.zeta(8, 1) + CycNumber.zeta(8, 7)
    if s == -1:
        return CycNumber.zeta(8, 1) + CycNumber.zeta(8, 3)
    raise ValueError("sign must be +1 or -1")


_MAT_MUL_CACHE: dict = {}


class CycMatrix:
    """Dense square matrix of CycNumbers with exact arithmetic."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[CycNumber | Rat]]):
        self.rows: tuple[tuple[CycNumber, ...], ...] = tuple(
            tuple(coerce(x) for x in row) for row in rows
        )
        n = len(self.rows)
        if any(len(row) != n for row in self.rows):
            raise ValueError("matrix must be square")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @staticmethod
    def identity(n: int) -> "CycMatrix":
        return CycMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __mul__(self, other: "CycMatrix") -> "CycMatrix":
        if not isinstance(other, CycMatrix):
            return NotImplemented
        n = self.dim
        if other.dim != n:
            raise ValueError("dimension mismatch")
        # relation sweeps multiply the same handful of small matrices over
        # and over; memoize products by canonical entries
        key = (self.rows, other.rows)
        cached = _MAT_MUL_CACHE.get(key)
        if cached is not None:
            return cached
        cols = list(zip(*other.rows))
        result = CycMatrix(
            [
                [sum((a * b for a, b in zip(row, col)), start=ZERO) for col in cols]
                for row in self.rows
            ]
        )
        if len(_MAT_MUL_CACHE) < 200_000:
            _MAT_MUL_CACHE[key] = result
        return result

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return CycMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "CycMatrix":
        return self.scaled(-1)

    def scaled(self, c: CycNumber | Rat) -> "CycMatrix":
        c = coerce(c)
        return CycMatrix([[c * x for x in row] for row in self.rows])

    def __pow__(self, exp: int) -> "CycMatrix":
        if exp < 0:
            raise ValueError("negative matrix powers not supported")
        result = CycMatrix.identity(self.dim)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def kron(self, other: "CycMatrix") -> "CycMatrix":
        m = other.dim
        return CycMatrix(
            [
                [self.rows[i // m][j // m] * other.rows[i % m][j % m] for j in range(self.dim * m)]
                for i in range(self.dim * m)
            ]
        )

    def trace(self) -> CycNumber:
        return sum((self.rows[i][i] for i in range(self.dim)), start=ZERO)

    def map(self, fn) -> "CycMatrix":
        return CycMatrix([[fn(x) for x in row] for row in self.rows])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.dim == other.dim and all(
            a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2)
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"CycMatrix({[list(r) for r in self.rows]!r})"


def kron_all(mats: Sequence[CycMatrix]) -> CycMatrix:
    """Tensor product of a sequence of matrices; empty product is [1]."""
    out = CycMatrix.identity(1)
    for m in mats:
        out = out.kron(m)
    return out
