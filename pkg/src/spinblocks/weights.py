"""Weight-label enumeration for spin blocks.

A weight label is a pair (kappa, f): a bar-core kappa plus a sparse map f
from character slots to ordinary p-cores, subject to the size identity
n = |kappa| + sum |f(slot)| * p^d over slots at level d.  Labels carry a
sym sign deciding whether they stand for one self-associated weight (+1) or
a swapped pair (-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import BarPartition, Partition, is_p_bar_core, p_cores_of_size
from .signs import SpinContext, eta_level, mu_kappa_f, sym


@dataclass(frozen=True, order=True)
class CSequence:
    """A composition (c_1, ..., c_r) indexing an iterated wreath tower."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not self.entries or any(c < 1 for c in self.entries):
            raise ValueError("entries must be positive and nonempty")

    @property
    def norm(self) -> int:
        return sum(self.entries)

    @property
    def r(self) -> int:
        return len(self.entries)


def enumerate_c_sequences(d: int) -> list[CSequence]:
    """All 2^(d-1) compositions of d, first part descending."""
    if d < 1:
        raise ValueError("d must be at least 1")

    def gen(m: int):
        if m == 0:
            yield ()
            return
        for first in range(m, 0, -1):
            for rest in gen(m - first):
                yield (first,) + rest

    return [CSequence(c) for c in gen(d)]


@dataclass(frozen=True, order=True)
class Slot:
    """One character slot at level d; index is the position in the canonical
    level order, and (c_seq, alpha_class) records where it came from."""

    d: int
    index: int
    c_seq: CSequence
    alpha_class: int


@lru_cache(maxsize=None)
def c_d_slots(d: int, p: int) -> tuple[Slot, ...]:
    """Canonical slots at level d: per composition c of d, one slot per
    alpha-class, of which there are (p-1)^r / 2; the level total is
    (p-1) p^(d-1) / 2."""
    slots = []
    index = 0
    for c in enumerate_c_sequences(d):
        for a in range((p - 1) ** c.r // 2):
            slots.append(Slot(d=d, index=index, c_seq=c, alpha_class=a))
            index += 1
    return tuple(slots)


def slot_count(d: int, p: int) -> int:
    return (p - 1) * p ** (d - 1) // 2


@dataclass(frozen=True, order=True)
class RadicalShape:
    """Shape of a radical p-subgroup: a trivially-acted part of size n0 and
    a multiset of wreath towers with multiplicities."""

    n0: int
    components: tuple[tuple[CSequence, int], ...]

    def total(self, p: int) -> int:
        return self.n0 + sum(e * p**c.norm for c, e in self.components)


def enumerate_radical_shapes(n: int, p: int) -> list[RadicalShape]:
    """All shapes with n0 + sum e * p^|c| = n, in canonical order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    towers: list[CSequence] = []
    d = 1
    while p**d <= n:
        towers.extend(enumerate_c_sequences(d))
        d += 1
    towers.sort(key=lambda c: (c.norm, c.entries))

    shapes: list[RadicalShape] = []

    def assign(i: int, remaining: int, chosen: list[tuple[CSequence, int]]):
        if i == len(towers):
            shapes.append(RadicalShape(n0=remaining, components=tuple(chosen)))
            return
        c = towers[i]
        cost = p**c.norm
        e = 0
        while e * cost <= remaining:
            if e:
                chosen.append((c, e))
            assign(i + 1, remaining - e * cost, chosen)
            if e:
                chosen.pop()
            e += 1

    assign(0, n, [])
    return sorted(shapes)


@dataclass(frozen=True)
class WeightLabel:
    """A block weight label: bar-core, sparse slot assignment, sym sign and
    positive weight w."""

    kappa: BarPartition
    f: tuple[tuple[tuple[int, int], Partition], ...]  # ((d, slot index), core)
    sym: int
    w: int

    def assignment(self) -> dict[tuple[int, int], Partition]:
        return dict(self.f)

    def total_size(self, p: int) -> int:
        return self.kappa.size + sum(mu.size * p**d for (d, _), mu in self.f)


def enumerate_weight_labels(
    n: int, p: int, eta: int, kappa: BarPartition
) -> list[WeightLabel]:
    """All weight labels of the block of kappa at rank n: sparse assignments
    of p-cores to slots with sum |f| * p^(d-1) equal to the bar weight."""
    ctx = SpinContext(p, eta)
    if not is_p_bar_core(kappa, p):
        raise ValueError(f"{kappa} is not a {p}-bar-core")
    if n < kappa.size or (n - kappa.size) % p != 0:
        raise ValueError("n must equal |kappa| plus a nonnegative multiple of p")
    w = (n - kappa.size) // p
    sym_sign = sym(kappa, n, ctx)

    # flatten the usable slots: level d costs p^(d-1) per unit of core size
    slots: list[tuple[int, int, int]] = []  # (d, index, unit cost)
    d = 1
    while p ** (d - 1) <= w:
        for s in c_d_slots(d, p):
            slots.append((s.d, s.index, p ** (d - 1)))
        d += 1

    labels: list[WeightLabel] = []

    def assign(i: int, remaining: int, chosen: list[tuple[tuple[int, int], Partition]]):
        if remaining == 0:
            labels.append(WeightLabel(kappa=kappa, f=tuple(chosen), sym=sym_sign, w=w))
            return
        if i == len(slots):
            return
        level, index, cost = slots[i]
        for size in range(1, remaining // cost + 1):
            for core in p_cores_of_size(size, p):
                chosen.append((((level, index)), core))
                assign(i + 1, remaining - size * cost, chosen)
                chosen.pop()
        assign(i + 1, remaining, chosen)

    assign(0, w, [])
    labels.sort(key=lambda lab: lab.f)
    return labels


def sigma_on_weight(label: WeightLabel, ctx: SpinContext) -> int:
    """The sign by which the Galois generator acts on the weight(s) of the
    label: fixes the pair pointwise when +1, swaps when -1."""
    return mu_kappa_f(label.kappa, label.w, ctx)


def lemma41_centralizer_shape(
    cycle_type: dict[int, int], ctx: SpinContext
) -> list[tuple[int, int]]:
    """Quotient shape of the centralizer of a p-element whose image has m_j
    cycles of length p^j: one symmetric-cover factor of rank m_j and
    extension type eta_j per level."""
    if not cycle_type or any(j < 0 or m < 0 for j, m in cycle_type.items()):
        raise ValueError("cycle type must map levels j >= 0 to counts >= 0")
    top = max(cycle_type)
    return [(cycle_type.get(j, 0), eta_level(ctx, j)) for j in range(top + 1)]
