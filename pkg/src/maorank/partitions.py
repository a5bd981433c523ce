"""Brute-force partition oracle: enumeration, Dyson and M2 ranks, rank tables.

Two independent counting routes exist.  ``method="enumerate"`` walks every
partition; ``method="dp"`` is a table recurrence on (size, largest allowed
part) that carries the number of parts modulo ``m`` and never
materializes a partition.  The DP is what makes n in the hundreds feasible;
the enumeration pins it down for small n.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache

from .series import LaurentSeries

# largest n for which method="auto" still walks every partition
ENUMERATION_LIMIT = {"m2": 60, "dyson": 45}


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        ps = self.parts
        if any(p < 1 for p in ps) or any(x < y for x, y in zip(ps, ps[1:])):
            raise ValueError(f"parts must be positive and non-increasing: {ps}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def count(self) -> int:
        return len(self.parts)

    def has_distinct_odd_parts(self) -> bool:
        odd = [p for p in self.parts if p % 2]
        return len(odd) == len(set(odd))


def _walk(n: int, cap: int, distinct_odd: bool, prefix: list[int]):
    if n == 0:
        yield tuple(prefix)
        return
    for p in range(min(n, cap), 0, -1):
        prefix.append(p)
        nxt = p - 1 if distinct_odd and p % 2 else p
        yield from _walk(n - p, nxt, distinct_odd, prefix)
        prefix.pop()


def enumerate_partitions(n: int, distinct_odd_only: bool = False) -> Iterator[Partition]:
    """Every partition of n exactly once, largest parts first."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for parts in _walk(n, n, distinct_odd_only, []):
        yield Partition(parts)


def dyson_rank(p: Partition) -> int:
    return p.largest - p.count


def m2_rank(p: Partition) -> int:
    # ceil(l/2) - n; caller guarantees no repeated odd parts
    return (p.largest + 1) // 2 - p.count


FLAVORS = ("dyson", "m2")


@dataclass(frozen=True)
class RankTable:
    flavor: str
    modulus: int
    max_n: int
    counts: tuple[tuple[int, ...], ...]     # counts[s][n]

    def __call__(self, s: int, n: int) -> int:
        return self.counts[s % self.modulus][n]

    def total(self, n: int) -> int:
        return sum(row[n] for row in self.counts)


@lru_cache(maxsize=8)
def _rank_histograms(flavor: str, max_n: int) -> tuple[dict[int, int], ...]:
    """Exact rank -> count for every n <= max_n, by visiting each partition.

    Same walk as enumerate_partitions, but (largest part, part count) are
    tracked on the way down instead of building Partition objects.
    """
    distinct_odd = flavor == "m2"
    hists: list[dict[int, int]] = [{0: 1}]

    def walk(rest: int, cap: int, head: int, nparts: int, hist: dict[int, int]):
        if rest == 0:
            r = head - nparts
            hist[r] = hist.get(r, 0) + 1
            return
        for p in range(min(rest, cap), 0, -1):
            walk(rest - p, p - 1 if distinct_odd and p % 2 else p, head, nparts + 1, hist)

    for n in range(1, max_n + 1):
        hist: dict[int, int] = {}
        for l in range(n, 0, -1):
            head = (l + 1) // 2 if distinct_odd else l
            walk(n - l, l - 1 if distinct_odd and l % 2 else l, head, 1, hist)
        hists.append(hist)
    return tuple(hists)


def _enumerated_counts(flavor: str, m: int, max_n: int) -> list[list[int]]:
    counts = [[0] * (max_n + 1) for _ in range(m)]
    for n, hist in enumerate(_rank_histograms(flavor, max_n)):
        for r, k in hist.items():
            counts[r % m][n] += k
    return counts


def _dp_counts(flavor: str, m: int, max_n: int) -> list[list[int]]:
    distinct_odd = flavor == "m2"
    N = max_n
    # hist[c][k]: partitions of k with parts <= cap, number of parts = c mod m
    hist = [[0] * (N + 1) for _ in range(m)]
    hist[0][0] = 1
    counts = [[0] * (N + 1) for _ in range(m)]
    counts[0][0] = 1
    for cap in range(1, N + 1):
        once = distinct_odd and cap % 2 == 1
        if once:
            below = [row[:] for row in hist]
            for k in range(cap, N + 1):
                for c in range(m):
                    hist[c][k] += below[(c - 1) % m][k - cap]
        else:
            for k in range(cap, N + 1):
                for c in range(m):
                    hist[c][k] += hist[(c - 1) % m][k - cap]
            below = hist
        # partitions whose largest part is exactly cap: cap + (rest fitting under it)
        head = (cap + 1) // 2 if distinct_odd else cap
        for n in range(cap, N + 1):
            for c in range(m):
                x = below[c][n - cap]
                if x:
                    counts[(head - c - 1) % m][n] += x
    return counts


@lru_cache(maxsize=64)
def rank_table(flavor: str, m: int, max_n: int, method: str = "auto") -> RankTable:
    """N(s, m, n) (dyson) or N2(s, m, n) (m2) for s < m, n <= max_n.

    ``auto`` enumerates up to ``ENUMERATION_LIMIT`` and switches to the DP above.
    """
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if method == "auto":
        method = "enumerate" if max_n <= ENUMERATION_LIMIT[flavor] else "dp"
    if method == "enumerate":
        counts = _enumerated_counts(flavor, m, max_n)
    elif method == "dp":
        counts = _dp_counts(flavor, m, max_n)
    else:
        raise ValueError(f"unknown method {method!r}")
    return RankTable(flavor, m, max_n, tuple(tuple(r) for r in counts))


def partition_counts(max_n: int, distinct_odd_only: bool = False) -> list[int]:
    """Counts by coin-change DP over allowed parts."""
    c = [1] + [0] * max_n
    for k in range(1, max_n + 1):
        if distinct_odd_only and k % 2:
            for i in range(max_n, k - 1, -1):
                c[i] += c[i - k]
        else:
            for i in range(k, max_n + 1):
                c[i] += c[i - k]
    return c


def p_of(n: int) -> int:
    return partition_counts(n)[n]


def d_values(max_n: int, method: str = "auto") -> list[int]:
    t = rank_table("m2", 6, max_n, method)
    return [t(0, n) + t(1, n) - t(2, n) - t(3, n) for n in range(max_n + 1)]


def d_series(max_n: int, method: str = "auto") -> LaurentSeries:
    """sum_{n <= max_n} (N2(0,6,n) + N2(1,6,n) - N2(2,6,n) - N2(3,6,n)) q^n."""
    if max_n < 0:
        raise ValueError("max_n must be non-negative")
    return LaurentSeries.from_coeffs(d_values(max_n, method), 0, max_n)
