"""Determinantal formulas for 1-dependent string probabilities and pgfs.

A stationary 1-dependent 0/1 process is determinantal: there is a banded
kernel K(x, y) = k(y - x), with k(-1) = -1 and k(m) = 0 for m <= -2, such
that the correlation of seeing ones on a finite set A is det(K(x, y)) over
x, y in A.  The kernel is pinned to the one-run probabilities through

    (sum_m k(m) v^(m+1)) * P(v) = -1,

so k(m) = -[v^(m+1)] (1/P(v)).  The same machinery yields cylinder-set
probabilities, multivariate and univariate count pgfs, all as explicit
determinants of small banded (upper Hessenberg) matrices with one-run
entries.

Determinants are evaluated by fraction-free (Bareiss) elimination, with
Laplace expansion for matrices up to 5x5; Hessenberg structure is
asserted, never exploited.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .errors import ValidationError
from .series import RationalLike, RunSeq, ZPoly, as_rational, series_inv

# ---------------------------------------------------------------------------
# exact determinants


def _swap_in_nonzero(m: list, k: int) -> int:
    """Make m[k][k] nonzero by a row swap below; returns the sign factor."""
    if m[k][k]:
        return 1
    for i in range(k + 1, len(m)):
        if m[i][k]:
            m[k], m[i] = m[i], m[k]
            return -1
    return 0


def _det_laplace(mat: list) -> object:
    n = len(mat)
    if n == 1:
        return mat[0][0]
    acc = None
    for j in range(n):
        a = mat[0][j]
        if not a:
            continue
        minor = [row[:j] + row[j + 1:] for row in mat[1:]]
        term = a * _det_laplace(minor)
        if j % 2:
            term = -term
        acc = term if acc is None else acc + term
    return mat[0][0] * 0 if acc is None else acc


def _det_bareiss(mat: list, divexact) -> object:
    m = [list(row) for row in mat]
    n = len(m)
    sign = 1
    prev = None
    for k in range(n - 1):
        s = _swap_in_nonzero(m, k)
        if s == 0:
            return m[0][0] * 0
        sign *= s
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else divexact(num, prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def det_rational(mat: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square matrix of Fractions."""
    _require_square(mat)
    if len(mat) <= 5:
        return _det_laplace([list(r) for r in mat])
    return _det_bareiss(mat, lambda a, b: a / b)


def det_poly(mat: Sequence[Sequence[ZPoly]]) -> ZPoly:
    """Exact determinant of a square matrix of z-polynomials.

    Bareiss elimination only ever performs divisions that come out exact
    over an integral domain, so no rational-function arithmetic appears.
    """
    _require_square(mat)
    if len(mat) <= 5:
        return _det_laplace([list(r) for r in mat])
    return _det_bareiss(mat, lambda a, b: a.divexact(b))


def _require_square(mat) -> None:
    if not mat or any(len(row) != len(mat) for row in mat):
        raise ValueError("determinant wants a non-empty square matrix")


def _assert_hessenberg(mat) -> None:
    n = len(mat)
    assert all(
        not mat[i][j] for i in range(n) for j in range(n) if i > j + 1
    ), "matrix lost its Hessenberg band structure"


# ---------------------------------------------------------------------------
# domain types


class ExtendedOneRuns:
    """One-run probabilities with the boundary conventions baked in:

    p(-1) = p(0) = 1 and p(m) = 0 for m <= -2.  Indices above the stored
    order are a usage error, never silently zero.
    """

    __slots__ = ("values",)

    values: tuple[Fraction, ...]

    def __init__(self, values: Iterable[RationalLike]):
        vs = tuple(as_rational(v) for v in values)
        if not vs or vs[0] != 1:
            raise ValidationError("one-run values must start with p_0 = 1")
        self.values = vs

    @classmethod
    def from_runseq(cls, p: RunSeq) -> "ExtendedOneRuns":
        if p.kind != "one":
            raise ValidationError(f"expected one-run probabilities, got {p.kind}-runs")
        return cls(p.series.coeffs)

    @property
    def order(self) -> int:
        return len(self.values) - 1

    def __call__(self, m: int) -> Fraction:
        if m < -1:
            return Fraction(0)
        if m == -1:
            return Fraction(1)
        if m > self.order:
            raise ValueError(f"one-run index {m} beyond stored order {self.order}")
        return self.values[m]


class KernelBand:
    """The kernel diagonals k(-1)..k(hi); k is zero below lag -1."""

    __slots__ = ("hi", "values")

    hi: int
    values: tuple[Fraction, ...]

    def __init__(self, hi: int, values: Iterable[RationalLike]):
        vs = tuple(as_rational(v) for v in values)
        if hi < -1 or len(vs) != hi + 2:
            raise ValueError("band must hold exactly the lags -1..hi")
        if vs[0] != -1:
            raise ValidationError(f"k(-1) must be -1, got {vs[0]}")
        self.hi = hi
        self.values = vs

    def value(self, lag: int) -> Fraction:
        if lag < -1:
            return Fraction(0)
        if lag > self.hi:
            raise ValueError(f"lag {lag} beyond band limit {self.hi}")
        return self.values[lag + 1]


# ---------------------------------------------------------------------------
# kernel construction, two routes


def kernel_from_one_runs(p: RunSeq, hi: int) -> KernelBand:
    """Kernel diagonals from the reciprocal of the one-run gf:

        k(m) = -[v^(m+1)] (1 / P(v)).
    """
    if p.kind != "one":
        raise ValidationError(f"kernel wants one-run probabilities, got {p.kind}-runs")
    p.validate()
    if hi + 2 > p.series.order:
        raise ValueError(f"band up to lag {hi} needs one-run order >= {hi + 2}")
    rec = series_inv(p.series)
    return KernelBand(hi, [-rec.coeffs[m + 1] for m in range(-1, hi + 1)])


def _compositions(total: int):
    """All ordered tuples of positive integers summing to `total`."""
    for cuts in range(1 << max(total - 1, 0)):
        parts, run = [], 1
        for pos in range(total - 1):
            if cuts >> pos & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def kernel_direct(p: RunSeq, x: int, y: int) -> Fraction:
    """K(x, y) as an alternating sum over chains from x to y + 1.

    Every chain x = l_0 < l_1 < ... < l_r = y + 1 contributes
    (-1)^(r-1) times the product of p over the interval lengths
    l_(i+1) - l_i.  Exponential in y - x; meant for small lags as an
    independent check on `kernel_from_one_runs`.
    """
    if p.kind != "one":
        raise ValidationError(f"kernel wants one-run probabilities, got {p.kind}-runs")
    d = y - x
    if d < -1:
        return Fraction(0)
    if d == -1:
        return Fraction(-1)
    if d + 1 > p.series.order:
        raise ValueError(f"lag {d} needs one-run order >= {d + 1}")
    ps = p.series.coeffs
    total = Fraction(0)
    for parts in _compositions(d + 1):
        prod = Fraction(1)
        for c in parts:
            prod *= ps[c]
        total += prod if len(parts) % 2 else -prod
    return total


def correlation(kb: KernelBand, points: Iterable[int]) -> Fraction:
    """P(X_x = 1 for all x in the set) = det(k(y - x))_{x,y in set}."""
    pts = sorted(points)
    if not pts:
        return Fraction(1)
    if len(set(pts)) != len(pts):
        raise ValueError("correlation points must be distinct")
    mat = [[kb.value(y - x) for y in pts] for x in pts]
    return det_rational(mat)


# ---------------------------------------------------------------------------
# cylinder probabilities and pgfs


def string_probability(p: ExtendedOneRuns, n: int, zeros: Iterable[int]) -> Fraction:
    """Probability that X_1..X_n has zeros exactly at the given positions.

    With zero positions w_1 < ... < w_k padded by w_0 = 0 and
    w_(k+1) = n + 1, the probability is det(p(w_(j+1) - w_i - 1)) over
    0 <= i, j <= k.
    """
    if n < 0:
        raise ValueError("string length must be >= 0")
    w = sorted(zeros)
    if any(not 1 <= x <= n for x in w) or len(set(w)) != len(w):
        raise ValueError("zero positions must be distinct and within 1..n")
    if n > p.order:
        raise ValueError(f"length-{n} strings need one-run order >= {n}")
    ww = [0] + w + [n + 1]
    k = len(w)
    mat = [[p(ww[j + 1] - ww[i] - 1) for j in range(k + 1)] for i in range(k + 1)]
    _assert_hessenberg(mat)
    return det_rational(mat)


def multivariate_pgf(p: ExtendedOneRuns, n: int, zvals: Sequence[RationalLike]) -> Fraction:
    """E[z_1^(X_1) * ... * z_n^(X_n)] at fixed rational arguments.

    Evaluates the (n+1) x (n+1) determinant with entries p(j - i), except
    that the subdiagonal entry in column j is 1 - z_(j+1).
    """
    if n < 1:
        raise ValueError("multivariate pgf wants n >= 1")
    if len(zvals) != n:
        raise ValueError(f"expected {n} arguments, got {len(zvals)}")
    if n > p.order:
        raise ValueError(f"n = {n} needs one-run order >= {n}")
    zs = [as_rational(z) for z in zvals]
    mat = [
        [1 - zs[j] if i == j + 1 else p(j - i) for j in range(n + 1)]
        for i in range(n + 1)
    ]
    _assert_hessenberg(mat)
    return det_rational(mat)


def pgf_determinant(p: ExtendedOneRuns, n: int) -> ZPoly:
    """pgf of S_n as an (n+1) x (n+1) determinant in one-run values.

    Same matrix as `multivariate_pgf` with all arguments equal to a
    formal z, so the subdiagonal entries are the polynomial 1 - z.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > p.order:
        raise ValueError(f"n = {n} needs one-run order >= {n}")
    one_minus_z = ZPoly([1, -1])
    mat = [
        [one_minus_z if i == j + 1 else ZPoly([p(j - i)]) for j in range(n + 1)]
        for i in range(n + 1)
    ]
    _assert_hessenberg(mat)
    return det_poly(mat)


def pgf_fredholm(kb: KernelBand, n: int) -> ZPoly:
    """pgf of S_n as the n x n determinant det(I + (z - 1) K).

    K is the kernel restricted to positions 1..n; the band must reach
    lag n - 1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ZPoly([1])
    if kb.hi < n - 1:
        raise ValueError(f"fredholm pgf at n = {n} needs band up to lag {n - 1}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            lag = j - i
            k = kb.value(lag) if lag >= -1 else Fraction(0)
            entry = ZPoly([-k, k])  # (z - 1) * k(lag)
            if i == j:
                entry = entry + 1
            row.append(entry)
        rows.append(row)
    _assert_hessenberg(rows)
    return det_poly(rows)


def all_zero_sets(n: int):
    """All subsets of positions 1..n, smallest first, in stable order."""
    for size in range(n + 1):
        yield from combinations(range(1, n + 1), size)
