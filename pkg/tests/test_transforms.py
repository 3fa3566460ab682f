"""Count generating functions from run probabilities, plus the companions."""

import warnings
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onedep.errors import (
    NonInvertibleSeries,
    NotOneDependentWarning,
    ValidationError,
)
from onedep.series import BSeries, RunSeq, USeries, ZPoly, extract, shift
from onedep.transforms import (
    bgf_exchangeable,
    bgf_from_one_runs,
    bgf_from_zero_runs,
    bgf_renewal,
    bgf_stationary_renewal,
    dual_bgf,
    involution,
    pgf_by_recursion,
    shifted_involution,
)


def zero_runs(*coeffs) -> RunSeq:
    return RunSeq("zero", USeries([F(c) for c in coeffs]))


def one_runs(*coeffs) -> RunSeq:
    return RunSeq("one", USeries([F(c) for c in coeffs]))


ALL_ZEROS = zero_runs(1, 1, 1, 1, 1)   # the constant-0 process
ALL_ONES = zero_runs(1, 0, 0, 0, 0)    # the constant-1 process

ONEPAIR_Q = zero_runs(1, "3/4", "5/8", "1/2")     # p = 1/2
ONEPAIR_P = one_runs(1, "1/4", "1/8", "1/16")


class TestBgfConstruction:
    def test_constant_processes(self):
        assert bgf_from_zero_runs(ALL_ZEROS).rows == tuple(ZPoly([1]) for _ in range(5))
        assert bgf_from_zero_runs(ALL_ONES).rows == tuple(
            ZPoly([0] * n + [1]) for n in range(5)
        )

    def test_two_forms_agree_on_onepair(self):
        assert bgf_from_zero_runs(ONEPAIR_Q) == bgf_from_one_runs(ONEPAIR_P)

    def test_onepair_row_two(self):
        Q = bgf_from_zero_runs(ONEPAIR_Q)
        assert Q.rows[2] == ZPoly([F(5, 8), F(1, 4), F(1, 8)])

    def test_kind_enforced(self):
        with pytest.raises(ValidationError):
            bgf_from_zero_runs(ONEPAIR_P)
        with pytest.raises(ValidationError):
            bgf_from_one_runs(ONEPAIR_Q)

    def test_rows_are_probability_polynomials(self):
        Q = bgf_from_zero_runs(ONEPAIR_Q)
        for n, row in enumerate(Q.rows):
            assert row.degree <= n
            assert row(1) == 1


class TestInvolution:
    def test_onepair_pair(self):
        assert involution(ONEPAIR_P) == ONEPAIR_Q
        assert involution(ONEPAIR_Q) == ONEPAIR_P

    def test_constant_processes_swap(self):
        flipped = involution(ALL_ZEROS)
        assert flipped.kind == "one"
        assert flipped.series == USeries([F(1), F(0), F(0), F(0), F(0)])

    def test_requires_unit_start(self):
        with pytest.raises(ValidationError):
            involution(zero_runs(2, 1))

    def test_unrealizable_output_warns_but_returns(self):
        # q = (1, 1, 1/2) is monotone yet impossible: q_1 = 1 forces q_2 = 1
        r = zero_runs(1, 1, "1/2")
        with pytest.warns(NotOneDependentWarning):
            out = involution(r)
        assert out.series == USeries([F(1), F(0), F(-1, 2)])
        # and the formal round trip still lands exactly
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert involution(out) == r

    def test_shifted_form_is_plain_reciprocal(self):
        tilted = shifted_involution(shift(ONEPAIR_P.series))
        assert tilted == shift(ONEPAIR_Q.series)

    def test_shifted_form_demands_unit_constant(self):
        with pytest.raises(ValidationError):
            shifted_involution(USeries([F(2), F(1)]))

    @given(st.lists(st.fractions(min_value=0, max_value=1, max_denominator=8), min_size=1, max_size=7))
    @settings(max_examples=150)
    def test_involution_is_its_own_inverse(self, tail):
        r = RunSeq("one", USeries([F(1)] + tail))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            again = involution(involution(r))
        assert again == r


class TestRecursion:
    def test_order_one_closed_form(self):
        # conditioning on the first coordinate: (1 - z) q_1 + z
        q = zero_runs(1, "2/7")
        assert pgf_by_recursion(q, 1) == ZPoly([F(2, 7), F(5, 7)])

    def test_matches_bgf_rows(self):
        Q = bgf_from_zero_runs(ONEPAIR_Q)
        for n in range(4):
            assert pgf_by_recursion(ONEPAIR_Q, n) == Q.rows[n]

    def test_order_bound(self):
        with pytest.raises(ValueError):
            pgf_by_recursion(ONEPAIR_Q, 4)


class TestDual:
    def test_swapping_symbols_reverses_rows(self):
        Q = bgf_from_zero_runs(ONEPAIR_Q)
        # complemented process: one-runs become zero-runs
        flipped = bgf_from_zero_runs(zero_runs(1, "1/4", "1/8", "1/16"))
        assert dual_bgf(Q) == flipped
        assert dual_bgf(dual_bgf(Q)) == Q

    def test_rejects_overfull_rows(self):
        with pytest.raises(ValueError):
            dual_bgf(BSeries([ZPoly([1]), ZPoly([0, 0, 1])]))


class TestComparisonTransforms:
    def test_exchangeable_matches_at_order_two(self):
        # order <= 2 laws are pinned by q_1, q_2 alone, so the two
        # dependence structures are indistinguishable that early
        ex = bgf_exchangeable(zero_runs(1, "3/4", "5/8"))
        assert ex.rows[2] == ZPoly([F(5, 8), F(1, 4), F(1, 8)])

    def test_exchangeable_differs_at_order_three(self):
        ex = bgf_exchangeable(ONEPAIR_Q)
        dep = bgf_from_zero_runs(ONEPAIR_Q)
        assert ex.rows[3] != dep.rows[3]

    def test_exchangeable_constant_edges(self):
        assert bgf_exchangeable(ALL_ZEROS) == bgf_from_zero_runs(ALL_ZEROS)
        assert bgf_exchangeable(ALL_ONES) == bgf_from_zero_runs(ALL_ONES)

    def test_renewal_starts_fresh_at_origin(self):
        ren = bgf_renewal(ONEPAIR_Q)
        assert ren.rows[0] == ZPoly([1])
        assert ren.rows[1] == ZPoly([F(3, 4), F(1, 4)])
        assert ren.rows[2] == ZPoly([F(5, 8), F(5, 16), F(1, 16)])

    def test_stationary_renewal_restores_agreement(self):
        sr = bgf_stationary_renewal(ONEPAIR_Q)
        dep = bgf_from_zero_runs(zero_runs(1, "3/4", "5/8"))
        assert sr == dep

    def test_stationary_renewal_output_order_drops_by_one(self):
        assert bgf_stationary_renewal(ONEPAIR_Q).order == ONEPAIR_Q.order - 1

    def test_stationary_renewal_needs_gaps(self):
        with pytest.raises(NonInvertibleSeries):
            bgf_stationary_renewal(ALL_ZEROS)

    def test_stationary_renewal_needs_order_two(self):
        with pytest.raises(ValueError):
            bgf_stationary_renewal(zero_runs(1, "1/2"))


def test_extractable_probabilities_sum_to_one():
    Q = bgf_from_zero_runs(ONEPAIR_Q)
    for n in range(4):
        assert sum(extract(Q, k, n) for k in range(n + 1)) == 1
