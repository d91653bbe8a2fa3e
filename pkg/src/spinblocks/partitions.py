"""Ordinary and strict partition combinatorics.

Covers cores, quotients, core towers and the runner ("abacus") constructions
used to translate between strict partitions and slot assignments.

Conventions fixed here:

* Ordinary p-cores/p-quotients use the first-column beta-set whose length is
  the smallest multiple of p at least the number of parts; runner i holds the
  beta-numbers congruent to i mod p, and quotient components are ordered by
  residue.  This makes (core, quotient) canonical.
* Strict partitions with no part divisible by p decompose along (p-1)/2
  runners.  Runner i is the doubly infinite bead sequence at positions
  i + k*p (k in Z): a bead sits at k >= 0 when i + k*p is a part, and a gap
  sits at k < 0 when -(i + k*p) is a part (those values are congruent to
  p - i).  Reading the bead diagram as a charged Maya diagram yields one
  ordinary partition per runner; pushing beads down yields the core.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Sequence


class Associatedness(Enum):
    SELF_ASSOCIATED = "self-associated"
    NON_SELF_ASSOCIATED = "non-self-associated"


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.parts
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or (p and p[-1] < 1):
            raise ValueError(f"not weakly decreasing positive parts: {p}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


@dataclass(frozen=True, order=True)
class BarPartition:
    """Strictly decreasing positive parts (a strict partition)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        p = self.parts
        if any(p[i] <= p[i + 1] for i in range(len(p) - 1)) or (p and p[-1] < 1):
            raise ValueError(f"not strictly decreasing positive parts: {p}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"BarPartition{self.parts}"


def associatedness(lam: BarPartition) -> Associatedness:
    """Self-associated iff size minus length is even (equivalently, the
    number of even parts is even)."""
    if (lam.size - lam.length) % 2 == 0:
        return Associatedness.SELF_ASSOCIATED
    return Associatedness.NON_SELF_ASSOCIATED


def is_self_associated(lam: BarPartition) -> bool:
    return associatedness(lam) is Associatedness.SELF_ASSOCIATED


# ---------------------------------------------------------------------------
# bar-core operations
# ---------------------------------------------------------------------------

BarOp = tuple[str, int]


def applicable_bar_operations(parts: tuple[int, ...], p: int) -> list[BarOp]:
    """All removal moves allowed on a strict partition:

    ("sub", x): replace x by x - p (x > p, x - p absent);
    ("del", x): remove the part equal to p;
    ("pair", x): remove x and p - x together (both present, x > p - x).
    """
    present = set(parts)
    ops: list[BarOp] = []
    for x in parts:
        if x > p and (x - p) not in present:
            ops.append(("sub", x))
        elif x == p:
            ops.append(("del", x))
        elif x < p and (p - x) in present and 2 * x > p:
            ops.append(("pair", x))
    return ops


def apply_bar_operation(parts: tuple[int, ...], op: BarOp, p: int) -> tuple[int, ...]:
    kind, x = op
    rest = [y for y in parts if y != x]
    if kind == "sub":
        rest.append(x - p)
    elif kind == "pair":
        rest.remove(p - x)
    elif kind != "del":
        raise ValueError(f"unknown operation {op}")
    return tuple(sorted(rest, reverse=True))


def p_bar_core(lam: BarPartition, p: int) -> tuple[BarPartition, int]:
    """The p-bar-core and the bar weight w, with |lam| = |core| + p*w."""
    parts = lam.parts
    while True:
        ops = applicable_bar_operations(parts, p)
        if not ops:
            break
        parts = apply_bar_operation(parts, ops[0], p)
    core = BarPartition(parts)
    w, rem = divmod(lam.size - core.size, p)
    assert rem == 0
    return core, w


def is_p_bar_core(lam: BarPartition, p: int) -> bool:
    return not applicable_bar_operations(lam.parts, p)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _strict_parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _strict_parts(n - k, k - 1):
            yield (k,) + rest


def enumerate_bar_partitions(n: int) -> list[BarPartition]:
    """All strict partitions of n, largest-part-first lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [BarPartition(p) for p in _strict_parts(n, n)]


def _parts(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _parts(n - k, k):
            yield (k,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in lexicographic descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _parts(n, n)]


def enumerate_lambda_kappa(n: int, kappa: BarPartition, p: int) -> list[BarPartition]:
    """Strict partitions of n with no part divisible by p whose p-bar-core
    is kappa (the basic-set labels of the block of kappa)."""
    if not is_p_bar_core(kappa, p):
        raise ValueError(f"{kappa} is not a {p}-bar-core")
    out = []
    for lam in enumerate_bar_partitions(n):
        if any(x % p == 0 for x in lam.parts):
            continue
        if p_bar_core(lam, p)[0] == kappa:
            out.append(lam)
    return out


# ---------------------------------------------------------------------------
# p-adic split
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PAdicSplit:
    """Levels of a strict partition sorted by the p-adic valuation of its
    parts; level j holds the parts with valuation j, divided by p^j."""

    levels: tuple[BarPartition, ...]
    s_lambda: int


def p_adic_split(lam: BarPartition, p: int) -> PAdicSplit:
    buckets: dict[int, list[int]] = {}
    for x in lam.parts:
        v = 0
        y = x
        while y % p == 0:
            y //= p
            v += 1
        buckets.setdefault(v, []).append(y)
    depth = max(buckets, default=0)
    levels = tuple(
        BarPartition(tuple(sorted(buckets.get(j, []), reverse=True)))
        for j in range(depth + 1)
    )
    s = sum(1 for lv in levels if not is_self_associated(lv))
    return PAdicSplit(levels, s)


# ---------------------------------------------------------------------------
# ordinary p-core / p-quotient via beta-sets
# ---------------------------------------------------------------------------


def _beta_set(mu: Partition, p: int) -> list[int]:
    """First-column beta-set, padded to a multiple of p beta-numbers."""
    m = len(mu.parts)
    m += (-m) % p
    padded = list(mu.parts) + [0] * (m - len(mu.parts))
    return [padded[i] + (m - 1 - i) for i in range(m)]


def _partition_from_beta(beta: Sequence[int]) -> Partition:
    desc = sorted(beta, reverse=True)
    m = len(desc)
    parts = tuple(b - (m - 1 - i) for i, b in enumerate(desc))
    return Partition(tuple(x for x in parts if x > 0))


def p_quotient(mu: Partition, p: int) -> tuple[Partition, tuple[Partition, ...]]:
    """Canonical (p-core, p-quotient); quotient components ordered by runner
    residue 0..p-1."""
    beta = _beta_set(mu, p)
    runners: list[list[int]] = [[] for _ in range(p)]
    for b in beta:
        runners[b % p].append((b - b % p) // p)
    quotient = tuple(
        _partition_from_beta(r) if r else Partition() for r in runners
    )
    core_beta = [r * p + i for i, r_beads in enumerate(runners) for r in range(len(r_beads))]
    core = _partition_from_beta(core_beta) if core_beta else Partition()
    return core, quotient


def p_core(mu: Partition, p: int) -> Partition:
    return p_quotient(mu, p)[0]


def is_p_core(mu: Partition, p: int) -> bool:
    return p_core(mu, p) == mu


def assemble_quotient(core: Partition, quotient: Sequence[Partition], p: int) -> Partition:
    """Inverse of p_quotient under the fixed beta-set convention."""
    if len(quotient) != p:
        raise ValueError(f"quotient must have exactly {p} components")
    t = len(core.parts) + max((len(q.parts) for q in quotient), default=0)
    t += (core.parts[0] if core.parts else 0) + 1
    m = p * t
    padded = list(core.parts) + [0] * (m - len(core.parts))
    core_beta = [padded[i] + (m - 1 - i) for i in range(m)]
    counts = [0] * p
    for b in core_beta:
        counts[b % p] += 1
    beta: list[int] = []
    for i in range(p):
        c = counts[i]
        q = quotient[i].parts
        if len(q) > c:
            raise ValueError("quotient component too long for chosen beta-set")
        qp = list(q) + [0] * (c - len(q))
        beta.extend((qp[j] + (c - 1 - j)) * p + i for j in range(c))
    return _partition_from_beta(beta)


@dataclass(frozen=True)
class CoreTower:
    """Iterated p-quotient tree: each node holds a p-core; children are the
    towers of the quotient components (empty tuple at leaves)."""

    root_core: Partition
    children: tuple["CoreTower", ...]

    @property
    def depth(self) -> int:
        return 1 + max((c.depth for c in self.children), default=-1)

    def nodes(self, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], Partition]]:
        yield path, self.root_core
        for i, child in enumerate(self.children):
            yield from child.nodes(path + (i,))

    def total_size(self, p: int) -> int:
        return sum(core.size * p ** len(path) for path, core in self.nodes())


def p_core_tower(mu: Partition, p: int) -> CoreTower:
    core, quotient = p_quotient(mu, p)
    if all(not q for q in quotient):
        return CoreTower(core, ())
    return CoreTower(core, tuple(p_core_tower(q, p) for q in quotient))


def assemble_tower(tower: CoreTower, p: int) -> Partition:
    if not tower.children:
        return tower.root_core
    quotient = [assemble_tower(c, p) for c in tower.children]
    return assemble_quotient(tower.root_core, quotient, p)


# ---------------------------------------------------------------------------
# bar quotient (runner decomposition of strict partitions)
# ---------------------------------------------------------------------------


def _runner_data(lam: BarPartition, p: int, i: int) -> tuple[int, Partition]:
    """Charge and Maya-diagram partition of runner i (1 <= i <= (p-1)/2)."""
    pos = sorted((x - i) // p for x in lam.parts if x % p == i)
    neg = sorted((x - (p - i)) // p for x in lam.parts if x % p == p - i)
    charge = len(pos) - len(neg)
    gap_ks = {-1 - m for m in neg}
    lo = min(gap_ks, default=0)
    hi = max(pos, default=-1)
    beads = [
        k
        for k in range(lo, hi + 1)
        if (k >= 0 and k in set(pos)) or (k < 0 and k not in gap_ks)
    ]
    gaps = sorted(
        k for k in range(lo, hi + 1) if k not in beads
    )
    parts = []
    for k in sorted(beads, reverse=True):
        below = sum(1 for g in gaps if g < k)
        if below:
            parts.append(below)
    return charge, Partition(tuple(parts))


def bar_charges(lam: BarPartition, p: int) -> tuple[int, ...]:
    """Runner charges; invariant under the bar-core operations."""
    out = []
    for i in range(1, (p + 1) // 2):
        a = sum(1 for x in lam.parts if x % p == i)
        b = sum(1 for x in lam.parts if x % p == p - i)
        out.append(a - b)
    return tuple(out)


def bar_quotient(lam: BarPartition, p: int) -> tuple[Partition, ...]:
    """One ordinary partition per runner i = 1..(p-1)/2; requires no part
    divisible by p.  |lam| = |p-bar-core| + p * (sum of component sizes)."""
    if any(x % p == 0 for x in lam.parts):
        raise ValueError("bar quotient requires no part divisible by p")
    return tuple(_runner_data(lam, p, i)[1] for i in range(1, (p + 1) // 2))


def bar_assemble(
    kappa: BarPartition, components: Sequence[Partition], p: int
) -> BarPartition:
    """Inverse of bar_quotient for the block of kappa."""
    if len(components) != (p - 1) // 2:
        raise ValueError(f"expected {(p - 1) // 2} components")
    charges = bar_charges(kappa, p)
    parts: list[int] = []
    for i in range(1, (p + 1) // 2):
        charge = charges[i - 1]
        nu = components[i - 1].parts
        j_max = len(nu) + abs(charge) + 2
        beads = {charge - j + (nu[j - 1] if j <= len(nu) else 0) for j in range(1, j_max + 1)}
        k_floor = charge - j_max
        for k in beads:
            if k >= 0:
                parts.append(i + k * p)
        for k in range(k_floor, 0):
            if k not in beads:
                parts.append((p - i) + (-1 - k) * p)
    return BarPartition(tuple(sorted(parts, reverse=True)))


@lru_cache(maxsize=None)
def p_cores_of_size(n: int, p: int) -> tuple[Partition, ...]:
    """All ordinary p-cores of n, lexicographic descending order."""
    return tuple(mu for mu in enumerate_partitions(n) if is_p_core(mu, p))
