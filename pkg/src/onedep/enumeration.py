"""Counting strings by how many adjacent pairs land in a fixed set.

Fix an alphabet {0..m-1} and a set B of ordered pairs.  A B-string is a
string whose every adjacent pair lies in B; m_k counts B-strings of
length k.  Seeding a 1-dependent process with uniform letters and
X_i = [(Y_i, Y_(i+1)) in B] ties the counts to one-run probabilities by
m_k = m^k p_(k-1), and the number f(n, k) of length-n strings with
exactly k adjacent pairs in B comes out of the bivariate expansion

    f(n, k) = [z^k v^n] (z - 1) / (z - G((z-1) v)),

where G(v) = sum_k m_k v^k.  Since m_0 = 1, the fraction simplifies to
1 / (1 - sum_(k>=1) m_k (z-1)^(k-1) v^k), which is what gets expanded:
no division by a non-unit ever happens.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import InternalInconsistency
from .series import BSeries, USeries, ZPoly, biv_inv, extract


class PairSet:
    """An alphabet size and a set of ordered pairs over it."""

    __slots__ = ("m", "pairs")

    m: int
    pairs: frozenset[tuple[int, int]]

    def __init__(self, m: int, pairs: Iterable[tuple[int, int]] = ()):
        if not isinstance(m, int) or m < 1:
            raise ValueError("alphabet size must be a positive integer")
        ps = frozenset((int(x), int(y)) for x, y in pairs)
        for x, y in ps:
            if not (0 <= x < m and 0 <= y < m):
                raise ValueError(f"pair ({x}, {y}) outside alphabet of size {m}")
        self.m = m
        self.pairs = ps

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PairSet):
            return self.m == other.m and self.pairs == other.pairs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PairSet", self.m, self.pairs))

    def __repr__(self) -> str:
        return f"PairSet({self.m}, {self.sorted_pairs()!r})"


class CountTable:
    """f(n, k) for 1 <= n <= N, 0 <= k <= n - 1; rows sum to m^n."""

    __slots__ = ("m", "counts")

    m: int
    counts: tuple[tuple[int, ...], ...]

    def __init__(self, m: int, counts: Iterable[Iterable[int]]):
        self.m = m
        self.counts = tuple(tuple(int(c) for c in row) for row in counts)

    @property
    def depth(self) -> int:
        return len(self.counts)

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.depth:
            raise ValueError(f"row {n} outside table depth {self.depth}")
        return self.counts[n - 1]

    def entry(self, n: int, k: int) -> int:
        row = self.row(n)
        if not 0 <= k < n:
            raise ValueError(f"pair count {k} outside 0..{n - 1}")
        return row[k]


def bstring_counts(ps: PairSet, N: int) -> list[int]:
    """m_0..m_N, where m_k counts B-strings of length k (m_0 = 1).

    Dynamic program over (length, last letter); exact integers.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    out = [1]
    if N == 0:
        return out
    allowed = {x: [] for x in range(ps.m)}
    for x, y in ps.sorted_pairs():
        allowed[x].append(y)
    ending = [1] * ps.m  # strings of length 1 ending at each letter
    out.append(ps.m)
    for _ in range(2, N + 1):
        nxt = [0] * ps.m
        for x in range(ps.m):
            c = ending[x]
            if c:
                for y in allowed[x]:
                    nxt[y] += c
        ending = nxt
        out.append(sum(ending))
    return out


def bstring_gf(counts: Iterable[int]) -> USeries:
    """G(v) = sum_k m_k v^k as an exact series."""
    cs = [int(c) for c in counts]
    if not cs or cs[0] != 1:
        raise ValueError("counts must start with m_0 = 1")
    if any(c < 0 for c in cs):
        raise ValueError("counts must be non-negative")
    return USeries([Fraction(c) for c in cs])


def pattern_count_table(ps: PairSet, N: int) -> CountTable:
    """f(n, k) for all n <= N by expanding (z-1)/(z - G((z-1)v))."""
    if N < 1:
        raise ValueError("table depth must be >= 1")
    ms = bstring_counts(ps, N)
    z_minus_one = ZPoly([-1, 1])
    rows = [ZPoly([1])]
    power = ZPoly([1])
    for k in range(1, N + 1):
        rows.append(-power * ms[k])
        power = power * z_minus_one
    expansion = biv_inv(BSeries(rows), zcap=N)
    table = []
    for n in range(1, N + 1):
        row = []
        for k in range(n):
            c = extract(expansion, k, n)
            if c.denominator != 1 or c < 0:
                raise InternalInconsistency(f"f({n}, {k}) came out as {c}")
            row.append(int(c))
        if sum(row) != ps.m**n:
            raise InternalInconsistency(
                f"row {n} sums to {sum(row)}, expected {ps.m}^{n}"
            )
        table.append(row)
    return CountTable(ps.m, table)


def florez_count(a: int, n: int, m: int) -> int:
    """[x^m y^n] 1 / (1 - (a + x) y + y^2), exactly.

    Counts a family of weighted lattice paths; agrees with
    pattern_count_table over an a-letter alphabet with the single pair
    (0, 1) through f(n + m, m).
    """
    if not isinstance(a, int) or a < 2:
        raise ValueError("weight a must be an integer >= 2")
    if n < 0 or m < 0:
        raise ValueError("indices must be >= 0")
    rows = [ZPoly([1]), ZPoly([-a, -1]), ZPoly([1])][: n + 1]
    rows += [ZPoly()] * (n + 1 - len(rows))
    expansion = biv_inv(BSeries(rows), zcap=n)
    c = extract(expansion, m, n)
    if c.denominator != 1:
        raise InternalInconsistency(f"lattice count ({n}, {m}) came out as {c}")
    return int(c)
