"""Exact truncated power-series arithmetic over the rationals.

Univariate series live in the variable v and carry a hard truncation
order: an order-N series stores exactly the coefficients of v^0..v^N and
is never silently extended.  Bivariate series are stored densely as one
z-polynomial per power of v.  All coefficients are `fractions.Fraction`;
floats are rejected at the door so every result stays exact.

The module also defines `RunSeq`, the tagged run-probability sequence
(either "zero" runs q_n = P(X_1 = ... = X_n = 0) or "one" runs
p_n = P(X_1 = ... = X_n = 1)) that the transform layer consumes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    CompositionDomainError,
    NonInvertibleSeries,
    ShiftDomainError,
    ValidationError,
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_rational(x: RationalLike) -> Fraction:
    """Coerce an exact value to Fraction.

    Accepts Fraction, int, and strings like "3/4".  Floats are refused:
    they are not exact and would quietly poison downstream results.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


# ---------------------------------------------------------------------------
# polynomials in z


class ZPoly:
    """Polynomial in z with rational coefficients.

    Trailing zero coefficients are stripped on construction, so equality
    and hashing are canonical.  The zero polynomial stores no
    coefficients and reports degree -1.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of z^k, zero beyond the stored degree."""
        if k < 0:
            raise ValueError("coefficient index must be >= 0")
        return self.coeffs[k] if k < len(self.coeffs) else _ZERO

    def __call__(self, x: RationalLike) -> Fraction:
        x = as_rational(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ZPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (Fraction, int)):
            return self.coeffs == ZPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("ZPoly", self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __neg__(self) -> "ZPoly":
        return ZPoly([-c for c in self.coeffs])

    def __add__(self, other: Union["ZPoly", RationalLike]) -> "ZPoly":
        other = _as_zpoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other: Union["ZPoly", RationalLike]) -> "ZPoly":
        return self + (-_as_zpoly(other))

    def __rsub__(self, other: RationalLike) -> "ZPoly":
        return _as_zpoly(other) + (-self)

    def __mul__(self, other: Union["ZPoly", RationalLike]) -> "ZPoly":
        if isinstance(other, (Fraction, int)):
            c = as_rational(other)
            return ZPoly([a * c for a in self.coeffs])
        if not isinstance(other, ZPoly):
            return NotImplemented
        return _poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ZPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        acc = ZPoly([1])
        for _ in range(n):
            acc = acc * self
        return acc

    def times_z(self, k: int = 1) -> "ZPoly":
        """Multiply by z^k."""
        if k < 0:
            raise ValueError("shift amount must be >= 0")
        if self.is_zero:
            return self
        return ZPoly((_ZERO,) * k + self.coeffs)

    def divexact(self, other: "ZPoly") -> "ZPoly":
        """Exact polynomial division; raises if the remainder is nonzero."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return self
        if self.degree < other.degree:
            raise ValueError("inexact polynomial division")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        quot = [_ZERO] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] / lead
            quot[i] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[i + j] -= c * oc
        if any(rem):
            raise ValueError("inexact polynomial division")
        return ZPoly(quot)

    def truncated(self, max_degree: int) -> "ZPoly":
        """Drop every term of degree above `max_degree`."""
        if max_degree < 0:
            return ZPoly()
        return ZPoly(self.coeffs[: max_degree + 1])

    def __repr__(self) -> str:
        return f"ZPoly({[str(c) for c in self.coeffs]})"


def _as_zpoly(x: Union[ZPoly, RationalLike]) -> ZPoly:
    return x if isinstance(x, ZPoly) else ZPoly([x])


def _poly_mul(a: ZPoly, b: ZPoly, cap: int | None = None) -> ZPoly:
    if a.is_zero or b.is_zero:
        return ZPoly()
    la, lb = a.coeffs, b.coeffs
    n = len(la) + len(lb) - 1
    if cap is not None:
        n = min(n, cap + 1)
    out = [_ZERO] * n
    for i, ca in enumerate(la):
        if not ca or i >= n:
            continue
        for j, cb in enumerate(lb):
            if i + j >= n:
                break
            if cb:
                out[i + j] += ca * cb
    return ZPoly(out)


def _poly_inv(p: ZPoly, cap: int) -> ZPoly:
    """Reciprocal of p as a power series in z, truncated at degree cap."""
    c0 = p.coeff(0)
    if c0 == 0:
        raise NonInvertibleSeries("constant term of the leading row is zero")
    inv0 = 1 / c0
    out = [inv0] + [_ZERO] * cap
    for m in range(1, cap + 1):
        s = _ZERO
        for t in range(1, min(m, p.degree) + 1):
            ct = p.coeff(t)
            if ct:
                s += ct * out[m - t]
        out[m] = -inv0 * s
    return ZPoly(out)


# ---------------------------------------------------------------------------
# univariate series in v


class USeries:
    """Truncated power series in v; coeffs[j] is the v^j coefficient."""

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = tuple(as_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least its constant term")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        if not 0 <= j <= self.order:
            raise ValueError(f"coefficient index {j} outside order {self.order}")
        return self.coeffs[j]

    def truncated(self, order: int) -> "USeries":
        """Restrict to a smaller truncation order."""
        if not 0 <= order <= self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to {order}")
        return USeries(self.coeffs[: order + 1])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, USeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("USeries", self.coeffs))

    def __neg__(self) -> "USeries":
        return USeries([-c for c in self.coeffs])

    def __add__(self, other: "USeries") -> "USeries":
        _require_same_order(self, other)
        return USeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "USeries") -> "USeries":
        _require_same_order(self, other)
        return USeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: Union["USeries", RationalLike]) -> "USeries":
        if isinstance(other, USeries):
            return series_mul(self, other)
        c = as_rational(other)
        return USeries([a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"USeries({[str(c) for c in self.coeffs]})"


def _require_same_order(a, b) -> None:
    if a.order != b.order:
        raise ValueError(f"series orders differ: {a.order} != {b.order}")


def useries_one(order: int) -> USeries:
    """The constant series 1 at the given truncation order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return USeries([_ONE] + [_ZERO] * order)


def series_mul(a: USeries, b: USeries) -> USeries:
    """Cauchy product truncated at the common order."""
    _require_same_order(a, b)
    n = a.order
    out = [_ZERO] * (n + 1)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j in range(n + 1 - i):
            cb = b.coeffs[j]
            if cb:
                out[i + j] += ca * cb
    return USeries(out)


def series_inv(a: USeries) -> USeries:
    """Reciprocal series at the same order.

    Uses the standard coefficient recurrence
    b_0 = 1/a_0, b_n = -(1/a_0) * sum_{j=1..n} a_j b_{n-j}.
    """
    if a.coeffs[0] == 0:
        raise NonInvertibleSeries("series has zero constant term")
    inv0 = 1 / a.coeffs[0]
    out = [inv0] + [_ZERO] * a.order
    for n in range(1, a.order + 1):
        s = _ZERO
        for j in range(1, n + 1):
            aj = a.coeffs[j]
            if aj:
                s += aj * out[n - j]
        out[n] = -inv0 * s
    return USeries(out)


def negate_variable(a: USeries) -> USeries:
    """Substitute v -> -v, flipping the sign of odd coefficients."""
    return USeries([c if j % 2 == 0 else -c for j, c in enumerate(a.coeffs)])


def shift(a: USeries) -> USeries:
    """Return 1 + v*a(v); the order grows by one."""
    return USeries((_ONE,) + a.coeffs)


def unshift(a: USeries) -> USeries:
    """Inverse of `shift`: strip a leading coefficient that must equal 1."""
    if a.coeffs[0] != 1:
        raise ShiftDomainError("constant term must be 1 to unshift")
    if a.order < 1:
        raise ValueError("cannot unshift an order-0 series")
    return USeries(a.coeffs[1:])


# ---------------------------------------------------------------------------
# bivariate series: one z-polynomial per power of v


class BSeries:
    """Truncated bivariate series: rows[n] is the z-polynomial of v^n."""

    __slots__ = ("rows",)

    rows: tuple[ZPoly, ...]

    def __init__(self, rows: Iterable[Union[ZPoly, RationalLike]]):
        rs = tuple(_as_zpoly(r) for r in rows)
        if not rs:
            raise ValueError("a bivariate series needs at least its v^0 row")
        self.rows = rs

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BSeries):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("BSeries", self.rows))

    def __neg__(self) -> "BSeries":
        return BSeries([-r for r in self.rows])

    def __add__(self, other: "BSeries") -> "BSeries":
        _require_same_order(self, other)
        return BSeries([a + b for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "BSeries") -> "BSeries":
        _require_same_order(self, other)
        return BSeries([a - b for a, b in zip(self.rows, other.rows)])

    def __mul__(self, other: "BSeries") -> "BSeries":
        return biv_mul(self, other)

    def __repr__(self) -> str:
        return f"BSeries({list(self.rows)!r})"


def bseries_one(order: int) -> BSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    return BSeries([ZPoly([1])] + [ZPoly()] * order)


def biv_mul(a: BSeries, b: BSeries, zcap: int | None = None) -> BSeries:
    """Product truncated at the common v-order.

    With `zcap` set, every row of the result is additionally truncated at
    that z-degree, i.e. the product is taken modulo z^(zcap+1).
    """
    _require_same_order(a, b)
    n = a.order
    rows = []
    for m in range(n + 1):
        acc = ZPoly()
        for i in range(m + 1):
            ra, rb = a.rows[i], b.rows[m - i]
            if ra.is_zero or rb.is_zero:
                continue
            acc = acc + _poly_mul(ra, rb, cap=zcap)
        rows.append(acc)
    return BSeries(rows)


def biv_inv(a: BSeries, zcap: int | None = None) -> BSeries:
    """Reciprocal bivariate series at the same v-order.

    rows[0] must have a nonzero constant term.  Its reciprocal is a full
    power series in z, so rows of the result are truncated at z-degree
    `zcap`, which defaults to the v-order.  All arithmetic happens modulo
    z^(zcap+1): coefficients of z^k with k <= zcap are exact.
    """
    if zcap is None:
        zcap = a.order
    inv0 = _poly_inv(a.rows[0], zcap)
    out = [inv0]
    for m in range(1, a.order + 1):
        s = ZPoly()
        for j in range(1, m + 1):
            rj = a.rows[j]
            if rj.is_zero:
                continue
            s = s + _poly_mul(rj, out[m - j], cap=zcap)
        out.append(-_poly_mul(inv0, s, cap=zcap))
    return BSeries(out)


def compose_positive_order(q: USeries, arg: BSeries, zcap: int | None = None) -> BSeries:
    """Substitute a bivariate series with no constant row into q.

    Evaluates q(arg) by Horner's rule, truncated at the common v-order.
    The substitution is only well defined when arg has v-valuation >= 1,
    i.e. rows[0] = 0.
    """
    _require_same_order(q, arg)
    if not arg.rows[0].is_zero:
        raise CompositionDomainError("composition argument must have zero constant row")
    acc = BSeries([ZPoly([q.coeffs[q.order]])] + [ZPoly()] * q.order)
    for j in range(q.order - 1, -1, -1):
        acc = biv_mul(acc, arg, zcap=zcap)
        acc = BSeries([acc.rows[0] + q.coeffs[j]] + list(acc.rows[1:]))
    return acc


def extract(Q: BSeries, k: int, n: int) -> Fraction:
    """Coefficient of z^k v^n."""
    if not 0 <= n <= Q.order:
        raise ValueError(f"v-power {n} outside series order {Q.order}")
    if k < 0:
        raise ValueError("z-power must be >= 0")
    return Q.rows[n].coeff(k)


def shift_biv(Q: BSeries) -> BSeries:
    """Return 1 + v*Q(z, v); the v-order grows by one."""
    return BSeries((ZPoly([1]),) + Q.rows)


def unshift_biv(Q: BSeries) -> BSeries:
    """Inverse of `shift_biv`: strip a leading row that must equal 1."""
    if Q.rows[0] != ZPoly([1]):
        raise ShiftDomainError("leading row must be the constant 1 to unshift")
    if Q.order < 1:
        raise ValueError("cannot unshift an order-0 series")
    return BSeries(Q.rows[1:])


def scale_substitute(q: USeries, s: ZPoly) -> BSeries:
    """Substitute v -> s(z)*v: rows[j] = q_j * s(z)^j.

    This is the exact expansion of q(s(z)*v) because the j-th coefficient
    of the composed series picks up exactly one factor s(z)^j.
    """
    rows = []
    power = ZPoly([1])
    for j, c in enumerate(q.coeffs):
        if j > 0:
            power = power * s
        rows.append(power * c)
    return BSeries(rows)


# ---------------------------------------------------------------------------
# run-probability sequences


_RUN_KINDS = ("zero", "one")


class RunSeq:
    """Run-probability sequence tagged with which symbol it tracks.

    kind "zero" holds q_n = P(X_1 = ... = X_n = 0); kind "one" holds
    p_n = P(X_1 = ... = X_n = 1); index 0 is the empty run, always 1.
    Construction checks only the tag; `validate` checks the probability
    constraints, since formal transforms may legitimately produce and
    consume sequences that are not realizable.
    """

    __slots__ = ("kind", "series")

    kind: str
    series: USeries

    def __init__(self, kind: str, series: USeries):
        if kind not in _RUN_KINDS:
            raise ValidationError(f"run kind must be one of {_RUN_KINDS}, got {kind!r}")
        if not isinstance(series, USeries):
            raise TypeError("RunSeq wants a USeries")
        self.kind = kind
        self.series = series

    @property
    def order(self) -> int:
        return self.series.order

    @property
    def dual_kind(self) -> str:
        return "one" if self.kind == "zero" else "zero"

    def violations(self) -> list[str]:
        """Messages for every probability constraint the values break."""
        out = []
        cs = self.series.coeffs
        if cs[0] != 1:
            out.append(f"index 0 must be 1, got {cs[0]}")
        for j, c in enumerate(cs):
            if not 0 <= c <= 1:
                out.append(f"value at index {j} outside [0, 1]: {c}")
                break
        for j in range(1, len(cs)):
            if cs[j] > cs[j - 1]:
                out.append(f"values increase at index {j}: {cs[j-1]} -> {cs[j]}")
                break
        return out

    def validate(self) -> "RunSeq":
        bad = self.violations()
        if bad:
            raise ValidationError(f"invalid {self.kind}-run sequence: " + "; ".join(bad))
        return self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RunSeq):
            return self.kind == other.kind and self.series == other.series
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RunSeq", self.kind, self.series))

    def __repr__(self) -> str:
        return f"RunSeq({self.kind!r}, {self.series!r})"
