"""Descriptor calculus for characters of twisted central products.

Characters of the factors are never materialized as class functions; each is
carried as a (degree, associatedness, tagged value) triple, where the tagged
value is the character value (or difference-character value) on a designated
odd element.  That is all the downstream weight bookkeeping consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycMatrix, CycNumber, I_UNIT, coerce
from .partitions import Associatedness


@dataclass(frozen=True)
class LocalCharDescriptor:
    """One factor character: degree, associatedness, and an optional value on
    the designated element of its factor."""

    degree: int
    assoc: Associatedness
    tagged_value: CycNumber | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")


@dataclass(frozen=True)
class HumphreysDescriptor:
    """The combined character of the twisted central product."""

    degree: int
    assoc: Associatedness
    s: int
    tagged_value: CycNumber | None = None


def combine(factors: list[LocalCharDescriptor]) -> HumphreysDescriptor:
    """Combine factor descriptors.

    With s factors not fixed by the sign character, the product character has
    degree 2^floor(s/2) times the product of factor degrees, is sign-fixed
    exactly when s is even, and its value on the product of the designated
    elements is (2i)^floor(s/2) times the product of the factor values.
    """
    if not factors:
        raise ValueError("need at least one factor")
    s = sum(1 for f in factors if f.assoc is Associatedness.NON_SELF_ASSOCIATED)
    degree = 2 ** (s // 2)
    for f in factors:
        degree *= f.degree
    assoc = (
        Associatedness.NON_SELF_ASSOCIATED
        if s % 2
        else Associatedness.SELF_ASSOCIATED
    )
    value: CycNumber | None = None
    if all(f.tagged_value is not None for f in factors):
        value = (2 * I_UNIT) ** (s // 2)
        for f in factors:
            assert f.tagged_value is not None
            value = value * f.tagged_value
    return HumphreysDescriptor(degree=degree, assoc=assoc, s=s, tagged_value=value)


_J = CycMatrix([[0, -1], [1, 0]])  # rotation block of the two-factor model


def two_factor_matrix(
    p1_image: CycMatrix, p2_image: CycMatrix, signs: tuple[int, int]
) -> CycMatrix:
    """Representing matrix of the two-factor twisted product on an element
    pair with equal sign-character values: I_2 (x) P1 (x) P2 on the even-even
    case and J (x) P1 (x) P2 on the odd-odd case."""
    s1, s2 = signs
    if s1 not in (1, -1) or s2 not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    if s1 != s2:
        raise ValueError("mixed sign pairs are outside the two-factor model")
    inner = p1_image.kron(p2_image)
    outer = CycMatrix.identity(2) if s1 == 1 else _J
    return outer.kron(inner)


def delta_value_from_matrix(r_matrix: CycMatrix) -> CycNumber:
    """Extract the difference-character value from a two-factor matrix on an
    odd-odd element: tr(-i (J (x) I) R).  For R = J (x) S this collapses to
    2i tr(S)."""
    if r_matrix.dim % 2 != 0:
        raise ValueError("matrix dimension must be even")
    weight = _J.kron(CycMatrix.identity(r_matrix.dim // 2))
    return (-I_UNIT) * (weight * r_matrix).trace()


def scalar_matrix(value: CycNumber | int, dim: int = 1) -> CycMatrix:
    """Convenience: value times the identity, as a factor image."""
    v = coerce(value)
    return CycMatrix.identity(dim).scaled(v)
