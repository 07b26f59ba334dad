"""Q-Kostka polynomials: transition coefficients from the Q-Hall-Littlewood
basis to the Schur Q-basis.

Two independent routes are provided: l_direct pairs the vertex-operator
vectors, l_recursive peels the largest part of the column index and sums
over horizontal strips.  They agree; the recursion is the fast path used
for table generation.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import dataclass
from fractions import Fraction

from .gamma import pair
from .partitions import (
    Partition,
    check_strict,
    dominance_leq,
    enumerate_strict,
    horizontal_strips,
    partition_str,
    remove_part,
)
from .tpoly import ONE, TPoly, ZERO
from .vertexops import qhl, schur_q

_l_memo: dict[tuple[Partition, Partition], TPoly] = {}


def clear_memos() -> None:
    _l_memo.clear()


def _check_pair(lam, mu) -> tuple[Partition, Partition]:
    lam, mu = check_strict(lam), check_strict(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    return lam, mu


def l_direct(lam: Partition, mu: Partition) -> TPoly:
    """Coefficient of the Schur Q-vector at lam in the Q-Hall-Littlewood
    vector at mu, via the bilinear form: 2^{-l(lam)} <G_mu.1, Q_lam.1>."""
    lam, mu = _check_pair(lam, mu)
    return pair(qhl(mu), schur_q(lam)) * Fraction(1, 2 ** len(lam))


def l_recursive(lam: Partition, mu: Partition) -> TPoly:
    """Iterative route: peel mu_1, sum over rows lam_i >= mu_1 and over
    horizontal (lam_i - mu_1)-strips xi on lam with row i removed:

        sum_i sum_xi (-1)^{i-1} 2^{a(xi/lam^(i))} t^{lam_i - mu_1} L(xi, mu^(1))

    Memoized on the canonical partition pair."""
    lam, mu = _check_pair(lam, mu)
    return _l_rec(lam, mu)


def _l_rec(lam: Partition, mu: Partition) -> TPoly:
    if not mu:
        return ONE  # lam is forced empty by equal weights
    key = (lam, mu)
    cached = _l_memo.get(key)
    if cached is not None:
        return cached
    head, rest = mu[0], mu[1:]
    total = ZERO
    for i, part in enumerate(lam):
        if part < head:
            break  # parts strictly decrease
        r = part - head
        sign = (-1) ** i
        for strip in horizontal_strips(remove_part(lam, i + 1), r):
            sub = _l_rec(strip.outer, rest)
            if not sub.is_zero:
                total = total + sub * TPoly.term(sign * 2**strip.a_stat, r)
    _l_memo[key] = total
    return total


def l_two_row(lam: Partition, mu: Partition) -> TPoly:
    """Closed form for a two-row column index: zero unless mu <= lam in
    dominance, else 2^{1-delta(lam,mu)} t^{lam_1 - mu_1}."""
    lam, mu = _check_pair(lam, mu)
    if len(mu) != 2:
        raise ValueError(f"column index must have exactly two parts: {mu}")
    if not dominance_leq(mu, lam):
        return ZERO
    return TPoly.term(1 if lam == mu else 2, lam[0] - mu[0])


@dataclass
class QExpansion:
    """Expansion of a Q-Hall-Littlewood function in the Schur Q-basis."""

    weight: int
    entries: dict[Partition, TPoly]

    def to_json(self) -> dict:
        return {
            "n": self.weight,
            "terms": [
                {"partition": list(lam), "coeff": self.entries[lam].to_json()}
                for lam in sorted(self.entries, reverse=True)
            ],
        }


def expand_g_in_q(mu: Partition) -> QExpansion:
    """The column of the transition matrix at mu, from the recursion."""
    mu = check_strict(mu)
    n = sum(mu)
    entries = {}
    for lam in enumerate_strict(n):
        c = l_recursive(lam, mu)
        if not c.is_zero:
            entries[lam] = c
    return QExpansion(n, entries)


@dataclass
class LTable:
    """Full Q-Kostka matrix over the strict partitions of one weight."""

    weight: int
    entries: dict[tuple[Partition, Partition], TPoly]

    def rows(self) -> tuple[Partition, ...]:
        return enumerate_strict(self.weight)

    def cols(self) -> tuple[Partition, ...]:
        return enumerate_strict(self.weight)

    def entry(self, lam: Partition, mu: Partition) -> TPoly:
        return self.entries.get((tuple(lam), tuple(mu)), ZERO)

    def to_json(self) -> dict:
        return {
            "n": self.weight,
            "rows": [list(r) for r in self.rows()],
            "cols": [list(c) for c in self.cols()],
            "entries": [
                [self.entry(lam, mu).to_json() for mu in self.cols()]
                for lam in self.rows()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "LTable":
        rows = [tuple(r) for r in data["rows"]]
        cols = [tuple(c) for c in data["cols"]]
        entries = {}
        for i, lam in enumerate(rows):
            for j, mu in enumerate(cols):
                poly = TPoly.from_json(data["entries"][i][j])
                if not poly.is_zero:
                    entries[(lam, mu)] = poly
        return LTable(data["n"], entries)


def _table_cells(n: int, fn, jobs: int = 1) -> dict:
    """Evaluate fn on every (row, col) cell, optionally with worker threads.

    The shared memo dicts tolerate concurrent reads and idempotent inserts,
    so cell-level parallelism is safe; output assembly is single-threaded.
    """
    pairs = [(lam, mu) for lam in enumerate_strict(n) for mu in enumerate_strict(n)]
    if jobs > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=jobs) as pool:
            values = list(pool.map(lambda p: fn(*p), pairs))
    else:
        values = [fn(lam, mu) for lam, mu in pairs]
    return dict(zip(pairs, values))


def l_table(n: int, jobs: int = 1) -> LTable:
    """Full matrix over the strict partitions of n, via the recursion."""
    if n < 0:
        raise ValueError("weight must be non-negative")
    cells = _table_cells(n, l_recursive, jobs)
    return LTable(n, {k: v for k, v in cells.items() if not v.is_zero})


def memo_snapshot() -> dict[str, list]:
    """Serializable view of the recursion memo, for the CLI cache."""
    return {
        f"{partition_str(lam)}|{partition_str(mu)}": poly.to_json()
        for (lam, mu), poly in sorted(_l_memo.items())
    }


def memo_restore(data: dict[str, list]) -> None:
    """Seed the recursion memo from a cache snapshot."""
    from .partitions import parse_partition

    for key, coeffs in data.items():
        ltext, mtext = key.split("|")
        _l_memo[(parse_partition(ltext), parse_partition(mtext))] = TPoly.from_json(coeffs)
