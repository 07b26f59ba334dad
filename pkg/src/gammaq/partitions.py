"""Integer partition combinatorics.

A partition is a plain tuple of weakly decreasing positive ints; the empty
tuple is the unique partition of 0.  Strict partitions have pairwise
distinct parts, odd partitions have every part odd.  Partitions are
immutable values, safe to share freely.

Canonical ordering for enumeration and table axes is decreasing
lexicographic, e.g. (7), (6,1), (5,2), (4,3), (4,2,1).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and canonicalize to a tuple, else raise ValueError."""
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise ValueError(f"parts must be positive integers: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p}")
    return p


def check_strict(parts: Iterable[int]) -> Partition:
    """Validate a partition with pairwise distinct parts."""
    p = check_partition(parts)
    if len(set(p)) != len(p):
        raise ValueError(f"parts must be distinct: {p}")
    return p


def check_odd(parts: Iterable[int]) -> Partition:
    """Validate a partition with all parts odd."""
    p = check_partition(parts)
    if any(x % 2 == 0 for x in p):
        raise ValueError(f"parts must be odd: {p}")
    return p


def weight(p: Partition) -> int:
    """Sum of the parts."""
    return sum(p)


def n_stat(p: Partition) -> int:
    """The statistic n(p) = sum of (i-1)*p_i with rows indexed from 1."""
    return sum(i * part for i, part in enumerate(p))


def multiplicities(p: Partition) -> dict[int, int]:
    """Map part value -> multiplicity."""
    m: dict[int, int] = {}
    for part in p:
        m[part] = m.get(part, 0) + 1
    return m


def z_factor(p: Partition) -> int:
    """The order z_p = prod over part values i of i^{m_i} * m_i!."""
    z = 1
    for i, m in multiplicities(p).items():
        z *= i**m * factorial(m)
    return z


def epsilon(p: Partition) -> int:
    """Parity of |p| - l(p): 0 if even, 1 if odd."""
    return (sum(p) - len(p)) % 2


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff |a| = |b| and every partial sum of a is <= that of b."""
    if sum(a) != sum(b):
        return False
    ta = tb = 0
    for i in range(max(len(a), len(b))):
        ta += a[i] if i < len(a) else 0
        tb += b[i] if i < len(b) else 0
        if ta > tb:
            return False
    return True


def remove_part(p: Partition, i: int) -> Partition:
    """Delete the i-th part, 1-based."""
    if not 1 <= i <= len(p):
        raise IndexError(f"part index {i} out of range for {p}")
    return p[: i - 1] + p[i:]


def union_sorted(a: Partition, b: Partition) -> Partition:
    """Multiset union of parts, re-sorted decreasing."""
    return tuple(sorted(a + b, reverse=True))


def partition_str(p: Partition) -> str:
    """Text form: comma-separated parts, empty string for ()."""
    return ",".join(str(x) for x in p)


def parse_partition(text: str) -> Partition:
    """Inverse of partition_str; accepts '' or '()' for the empty partition."""
    text = text.strip()
    if text in ("", "()"):
        return ()
    return check_partition(int(x) for x in text.split(","))


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""

    def gen(m: int, cap: int) -> Iterator[Partition]:
        if m == 0:
            yield ()
            return
        for k in range(min(m, cap), 0, -1):
            for rest in gen(m - k, k):
                yield (k,) + rest

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def enumerate_strict(n: int) -> tuple[Partition, ...]:
    """All partitions of n into distinct parts, decreasing lexicographic."""

    def gen(m: int, cap: int) -> Iterator[Partition]:
        if m == 0:
            yield ()
            return
        for k in range(min(m, cap), 0, -1):
            for rest in gen(m - k, k - 1):
                yield (k,) + rest

    return tuple(gen(n, n))


@lru_cache(maxsize=None)
def enumerate_odd(n: int) -> tuple[Partition, ...]:
    """All partitions of n into odd parts, decreasing lexicographic."""

    def gen(m: int, cap: int) -> Iterator[Partition]:
        if m == 0:
            yield ()
            return
        k = min(m, cap)
        if k % 2 == 0:
            k -= 1
        for k in range(k, 0, -2):
            for rest in gen(m - k, k):
                yield (k,) + rest

    return tuple(gen(n, n))


def index_subpartitions(p: Partition, i: int) -> list[Partition]:
    """Subpartitions of weight i chosen by index subsequence, with multiplicity.

    Distinct index subsets are listed separately even when equal as
    partitions, e.g. ((1,1), 1) -> [(1), (1)].
    """
    if not 0 <= i <= sum(p):
        raise ValueError(f"subpartition weight {i} out of range for {p}")
    out = []
    for k in range(len(p) + 1):
        for idx in combinations(range(len(p)), k):
            sub = tuple(p[j] for j in idx)
            if sum(sub) == i:
                out.append(sub)
    return out


class HorizontalStrip(NamedTuple):
    """A skew shape outer/inner with at most one box per column."""

    inner: Partition
    outer: Partition
    a_stat: int


def a_statistic(inner: Partition, outer: Partition) -> int:
    """Number of columns holding a strip box with no strip box in the next column."""
    cols: set[int] = set()
    for r, o in enumerate(outer):
        lo = inner[r] if r < len(inner) else 0
        cols.update(range(lo + 1, o + 1))
    return sum(1 for c in cols if c + 1 not in cols)


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """True iff inner is contained in outer and outer/inner has <= 1 box per column."""
    if len(outer) < len(inner):
        return False
    for r, o in enumerate(outer):
        lo = inner[r] if r < len(inner) else 0
        if o < lo:
            return False
        if r + 1 < len(outer) and outer[r + 1] > lo:
            return False
    return True


def horizontal_strips(inner: Partition, r: int) -> list[HorizontalStrip]:
    """All strict outer shapes obtained by adding a horizontal r-strip to inner.

    r = 0 yields the single empty strip with a_stat = 0.  Results are in
    decreasing lexicographic order of the outer shape.
    """
    inner = check_strict(inner)
    if r < 0:
        raise ValueError("strip size must be non-negative")
    l = len(inner)
    results: list[Partition] = []

    def rec(i: int, prev: int, budget: int, rows: list[int]) -> None:
        if i == l:
            if budget == 0:
                results.append(tuple(rows))
            elif budget < prev and (l == 0 or budget <= inner[l - 1]):
                # one new row at the bottom absorbing the whole leftover
                results.append(tuple(rows + [budget]))
            return
        hi = min(inner[i] + budget, prev - 1)
        if i >= 1:
            hi = min(hi, inner[i - 1])
        for v in range(hi, inner[i] - 1, -1):
            rows.append(v)
            rec(i + 1, v, budget - (v - inner[i]), rows)
            rows.pop()

    sentinel = (inner[0] if inner else 0) + r + 1
    rec(0, sentinel, r, [])
    return [HorizontalStrip(inner, out, a_statistic(inner, out)) for out in results]
