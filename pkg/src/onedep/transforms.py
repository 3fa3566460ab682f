"""Count-distribution generating functions built from run probabilities.

For a stationary 1-dependent 0/1 process with zero-run probabilities
q_n = P(X_1 = ... = X_n = 0), gf Q(v), and one-run probabilities p_n with
gf P(v), the bivariate gf of the running counts S_n = X_1 + ... + X_n,

    Q(z, v) = sum_n E[z^(S_n)] v^n,

has two equivalent closed forms:

    Q(z, v) = Q((1-z)v) / (1 - z v Q((1-z)v))
            = P(-(1-z)v) / (1 - v P(-(1-z)v)).

Q and P determine each other through the involution
Q(v) = P(-v) / (1 - v P(-v)), which in shifted form (1 + vQ, 1 + vP)
is plain reciprocation at -v.  This module implements both bgf forms,
the involution, a first-return recursion for single pgfs, per-row
coefficient reversal (the complemented process), and the analogous
bgf transforms for exchangeable, renewal, and stationary renewal
processes built from the same run sequences.

Everything is exact; results are plain `BSeries`/`USeries` values.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

from .errors import (
    InternalInconsistency,
    NonInvertibleSeries,
    NotOneDependentWarning,
    ValidationError,
)
from .series import (
    BSeries,
    RunSeq,
    USeries,
    ZPoly,
    biv_inv,
    biv_mul,
    compose_positive_order,
    negate_variable,
    scale_substitute,
    series_inv,
    series_mul,
    shift,
    unshift,
)

_ONE_MINUS_Z = ZPoly([1, -1])
_Z_MINUS_ONE = ZPoly([-1, 1])
_Z = ZPoly([0, 1])


def _require_kind(r: RunSeq, kind: str, what: str) -> None:
    if r.kind != kind:
        raise ValidationError(f"{what} wants {kind}-run probabilities, got {r.kind}-runs")


def _checked_bgf(out: BSeries) -> BSeries:
    # Count bgf rows must be genuine pgf-like polynomials: supported on
    # z^0..z^n and summing to 1 at z = 1.  Anything else is a bug here.
    for n, row in enumerate(out.rows):
        if row.degree > n:
            raise InternalInconsistency(f"bgf row {n} has z-degree {row.degree}")
        if row(1) != 1:
            raise InternalInconsistency(f"bgf row {n} sums to {row(1)}, not 1")
    return out


def bgf_from_zero_runs(q: RunSeq) -> BSeries:
    """Count bgf Q((1-z)v) / (1 - z v Q((1-z)v)) from zero runs."""
    _require_kind(q, "zero", "bgf_from_zero_runs")
    q.validate()
    cap = q.order
    num = scale_substitute(q.series, _ONE_MINUS_Z)
    den_rows = [ZPoly([1])]
    for n in range(1, cap + 1):
        den_rows.append(-num.rows[n - 1].times_z(1))
    den = BSeries(den_rows)
    out = biv_mul(num, biv_inv(den, zcap=cap), zcap=cap)
    return _checked_bgf(out)


def bgf_from_one_runs(p: RunSeq) -> BSeries:
    """Count bgf P(-(1-z)v) / (1 - v P(-(1-z)v)) from one runs."""
    _require_kind(p, "one", "bgf_from_one_runs")
    p.validate()
    cap = p.order
    num = scale_substitute(p.series, _Z_MINUS_ONE)
    den_rows = [ZPoly([1])]
    for n in range(1, cap + 1):
        den_rows.append(-num.rows[n - 1])
    den = BSeries(den_rows)
    out = biv_mul(num, biv_inv(den, zcap=cap), zcap=cap)
    return _checked_bgf(out)


def involution(r: RunSeq) -> RunSeq:
    """Swap between zero-run and one-run probabilities.

    Computes r'(v) = r(-v) / (1 - v r(-v)) and flips the kind tag.
    Applying it twice is the identity.  The map is formal and total for
    any sequence with r_0 = 1; when the output leaves [0, 1] the input
    was not realizable by a 1-dependent process, which is reported with
    `NotOneDependentWarning` rather than an error so that round trips
    through non-realizable territory remain possible.
    """
    if r.series.coeffs[0] != 1:
        raise ValidationError("run sequence must start at 1")
    s = negate_variable(r.series)
    den = USeries((Fraction(1),) + tuple(-c for c in s.coeffs[:-1]))
    out = RunSeq(r.dual_kind, series_mul(s, series_inv(den)))
    bad = out.violations()
    if bad:
        warnings.warn(
            NotOneDependentWarning(
                "involution output is not a realizable run sequence: " + bad[0]
            )
        )
    return out


def shifted_involution(rt: USeries) -> USeries:
    """The involution on shifted gfs: 1 + vQ(v) = 1 / (1 + vP(v) at -v).

    Input and output both have constant term 1; the whole map is one
    series reciprocal at the negated variable.
    """
    if rt.coeffs[0] != 1:
        raise ValidationError("shifted run gf must have constant term 1")
    return series_inv(negate_variable(rt))


def dual_bgf(Q: BSeries) -> BSeries:
    """Reverse each row in z: the bgf of the complemented process.

    Row n maps z^k -> z^(n-k), which is the count bgf of (1 - X_i) when Q
    is the count bgf of (X_i).
    """
    rows = []
    for n, row in enumerate(Q.rows):
        if row.degree > n:
            raise ValueError(f"row {n} has z-degree {row.degree} > {n}; not a count bgf")
        rows.append(ZPoly([row.coeff(n - k) for k in range(n + 1)]))
    return BSeries(rows)


def pgf_by_recursion(q: RunSeq, n: int) -> ZPoly:
    """pgf of S_n by conditioning on the position of the first one:

        E[z^(S_n)] = (1-z)^n q_n
                   + sum_{k=1..n} (1-z)^(k-1) z q_(k-1) E[z^(S_(n-k))].

    An independent route to single rows of the bgf.
    """
    _require_kind(q, "zero", "pgf_by_recursion")
    q.validate()
    if not 0 <= n <= q.order:
        raise ValueError(f"need q_0..q_{n}, have order {q.order}")
    qs = q.series.coeffs
    pw = [ZPoly([1])]
    for _ in range(n):
        pw.append(pw[-1] * _ONE_MINUS_Z)
    pgfs = [ZPoly([1])]
    for m in range(1, n + 1):
        acc = pw[m] * qs[m]
        for k in range(1, m + 1):
            acc = acc + (pw[k - 1] * qs[k - 1] * pgfs[m - k]).times_z(1)
        pgfs.append(acc)
    return pgfs[n]


# ---------------------------------------------------------------------------
# comparison transforms: same run sequence, different dependence structure


def bgf_exchangeable(q: RunSeq) -> BSeries:
    """Count bgf of the exchangeable process with the given zero runs:

        Q((1-z)v / (1-zv)) / (1-zv).
    """
    _require_kind(q, "zero", "bgf_exchangeable")
    q.validate()
    cap = q.order
    arg_rows = [ZPoly()]
    for n in range(1, cap + 1):
        arg_rows.append(_ONE_MINUS_Z.times_z(n - 1))
    body = compose_positive_order(q.series, BSeries(arg_rows), zcap=cap)
    den = BSeries([ZPoly([1]), -_Z] + [ZPoly()] * (cap - 1)) if cap >= 1 else BSeries([ZPoly([1])])
    out = biv_mul(body, biv_inv(den, zcap=cap), zcap=cap)
    return _checked_bgf(out)


def bgf_renewal(q: RunSeq) -> BSeries:
    """Count bgf of the undelayed renewal process with the given zero runs:

        Q(v) / (1 - z (1 + (v-1) Q(v))).

    A renewal epoch sits at time 0, so this generally differs from the
    stationary 1-dependent bgf even for matching run probabilities.
    """
    _require_kind(q, "zero", "bgf_renewal")
    q.validate()
    cap = q.order
    qs = q.series.coeffs
    # w(v) = 1 + (v-1)Q(v); w_0 = 1 - q_0 = 0, w_n = q_(n-1) - q_n.
    w = [Fraction(0)] + [qs[n - 1] - qs[n] for n in range(1, cap + 1)]
    num = BSeries([ZPoly([c]) for c in qs])
    den = BSeries([(ZPoly([1]) if n == 0 else ZPoly()) - ZPoly([0, w[n]]) for n in range(cap + 1)])
    out = biv_mul(num, biv_inv(den, zcap=cap), zcap=cap)
    return _checked_bgf(out)


def bgf_stationary_renewal(q: RunSeq) -> BSeries:
    """Count bgf of the stationary (delayed) renewal process:

        ( -z + (z - v + (1-z) v q_1) Q(v) )
        / ( z(v-1) + (1-z) v (q_1 - 1) + z (v-1)^2 Q(v) ),

    where q_1 = Q'(0).  Numerator and denominator share one factor of v,
    which is cancelled before inverting, so an order-M input yields an
    order-(M-1) bgf.  Undefined when q_1 = 1 (no renewals ever happen).
    """
    _require_kind(q, "zero", "bgf_stationary_renewal")
    q.validate()
    if q.order < 2:
        raise ValueError("stationary renewal transform needs order >= 2")
    q1 = q.series.coeffs[1]
    if q1 == 1:
        raise NonInvertibleSeries("stationary renewal bgf is undefined when q_1 = 1")
    cap = q.order
    Qb = BSeries([ZPoly([c]) for c in q.series.coeffs])

    def _pad(rows: list[ZPoly]) -> BSeries:
        return BSeries(rows + [ZPoly()] * (cap + 1 - len(rows)))

    # numerator: -z + (z - v + (1-z) q_1 v) Q(v)
    t = _pad([_Z, ZPoly([q1 - 1, -q1])])
    num = _pad([-_Z]) + biv_mul(t, Qb, zcap=cap)
    # denominator: z(v-1) + (1-z)(q_1 - 1) v + z (v-1)^2 Q(v)
    d12 = _pad([-_Z, _Z + ZPoly([q1 - 1, 1 - q1])])
    d3 = biv_mul(_pad([_Z, -2 * _Z, _Z]), Qb, zcap=cap)
    den = d12 + d3
    if not (num.rows[0].is_zero and den.rows[0].is_zero):
        raise InternalInconsistency("stationary renewal fraction lost its shared v factor")
    num_v = BSeries(num.rows[1:])
    den_v = BSeries(den.rows[1:])
    out = biv_mul(num_v, biv_inv(den_v, zcap=cap - 1), zcap=cap - 1)
    return _checked_bgf(out)
