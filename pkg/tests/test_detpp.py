"""Kernel bands, exact determinants, and the determinant route to count laws."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onedep.detpp import (
    ExtendedOneRuns,
    KernelBand,
    all_zero_sets,
    correlation,
    det_poly,
    det_rational,
    kernel_direct,
    kernel_from_one_runs,
    multivariate_pgf,
    pgf_determinant,
    pgf_fredholm,
    string_probability,
)
from onedep.errors import ValidationError
from onedep.models import Carries, Eulerian, Iid, OnePair, one_runs, zero_runs
from onedep.series import RunSeq, USeries, ZPoly, extract
from onedep.transforms import bgf_from_zero_runs


def bernoulli(N):
    """B_0..B_N via the defining recurrence; independent of the kernel code."""
    out = [F(1)]
    for n in range(1, N + 1):
        s = sum(F(_comb(n + 1, k)) * out[k] for k in range(n))
        out.append(-s / (n + 1))
    return out


def _comb(n, k):
    import math

    return math.comb(n, k)


# --- determinants --------------------------------------------------------


def _cofactor_det(mat):
    if len(mat) == 1:
        return mat[0][0]
    total = None
    for j, lead in enumerate(mat[0]):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = lead * _cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


matrices = st.integers(min_value=1, max_value=7).flatmap(
    lambda n: st.lists(
        st.lists(st.fractions(max_denominator=8), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


class TestDeterminants:
    @given(matrices)
    @settings(max_examples=80, deadline=None)
    def test_rational_matches_cofactor_expansion(self, mat):
        mat = [[F(x) for x in row] for row in mat]
        assert det_rational(mat) == _cofactor_det(mat)

    def test_zero_pivot_needs_a_swap(self):
        mat = [
            [F(0), F(1), F(2)],
            [F(1), F(0), F(1)],
            [F(2), F(1), F(0)],
        ]
        assert det_rational(mat) == _cofactor_det(mat)

    def test_singular_is_zero(self):
        mat = [[F(1), F(2), F(3)]] * 3
        # Bareiss path needs size > 5, so embed in a 6x6 block matrix
        big = [row + [F(0)] * 3 for row in mat]
        big += [[F(0)] * 3 + row for row in mat]
        assert det_rational(big) == 0

    def test_poly_determinant(self):
        z = ZPoly([0, 1])
        one = ZPoly([1])
        mat = [
            [one, z, one * 0],
            [one, one, z],
            [z, one, one],
        ]
        assert det_poly(mat) == _cofactor_det(mat)

    @given(matrices)
    @settings(max_examples=40, deadline=None)
    def test_poly_matches_rational_on_constants(self, mat):
        pm = [[ZPoly([F(x)]) for x in row] for row in mat]
        got = det_poly(pm)
        assert got.coeff(0) == det_rational([[F(x) for x in row] for row in mat])
        assert got.degree <= 0

    def test_empty_matrix_rejected(self):
        with pytest.raises(ValueError):
            det_rational([])


# --- extended one-run values ---------------------------------------------


class TestExtendedOneRuns:
    def test_boundary_conventions(self):
        ext = ExtendedOneRuns.from_runseq(one_runs(OnePair(F(1, 2)), 4))
        assert ext(-3) == 0
        assert ext(-1) == 1
        assert ext(0) == 1
        assert ext(2) == F(1, 8)
        with pytest.raises(ValueError):
            ext(5)

    def test_kind_enforced(self):
        with pytest.raises(ValidationError):
            ExtendedOneRuns.from_runseq(zero_runs(OnePair(F(1, 2)), 4))


# --- kernel band ----------------------------------------------------------


class TestKernelBand:
    def test_eulerian_band_is_bernoulli(self):
        # 1/P here is the classical Bernoulli-number generating function
        band = kernel_from_one_runs(one_runs(Eulerian(), 9), 7)
        B = bernoulli(9)
        import math

        for m in range(-1, 8):
            assert band.value(m) == -B[m + 1] / math.factorial(m + 1)

    def test_eulerian_frozen_values(self):
        band = kernel_from_one_runs(one_runs(Eulerian(), 9), 5)
        got = [band.value(m) for m in range(-1, 6)]
        assert got == [F(-1), F(1, 2), F(-1, 12), F(0), F(1, 720), F(0), F(-1, 30240)]

    def test_iid_band_dies_after_lag_zero(self):
        band = kernel_from_one_runs(one_runs(Iid(F(1, 3)), 8), 6)
        assert band.value(-1) == -1
        assert band.value(0) == F(1, 3)
        assert all(band.value(m) == 0 for m in range(1, 7))

    def test_order_precondition(self):
        with pytest.raises(ValueError):
            kernel_from_one_runs(one_runs(Eulerian(), 5), 4)

    def test_band_construction_validates_corner(self):
        with pytest.raises(ValidationError):
            KernelBand(0, [F(0), F(1, 2)])
        with pytest.raises(ValueError):
            KernelBand(1, [F(-1), F(1, 2)])  # wrong length

    def test_lag_bounds(self):
        band = KernelBand(0, [F(-1), F(1, 2)])
        with pytest.raises(ValueError):
            band.value(1)

    @pytest.mark.parametrize("m", [Eulerian(), OnePair(F(1, 2)), Carries(3)])
    def test_direct_route_agrees(self, m):
        p = one_runs(m, 8)
        band = kernel_from_one_runs(p, 6)
        for d in range(-1, 7):
            assert kernel_direct(p, 10, 10 + d) == band.value(d)

    def test_direct_route_shift_invariance(self):
        p = one_runs(Eulerian(), 6)
        assert kernel_direct(p, 0, 4) == kernel_direct(p, 3, 7)


# --- correlations and string probabilities --------------------------------


ONEPAIR_EXT = ExtendedOneRuns.from_runseq(one_runs(OnePair(F(1, 2)), 8))


class TestCorrelations:
    def test_empty_point_set(self):
        band = kernel_from_one_runs(one_runs(Eulerian(), 6), 4)
        assert correlation(band, []) == 1

    def test_single_point_is_marginal(self):
        band = kernel_from_one_runs(one_runs(Eulerian(), 6), 4)
        assert correlation(band, [3]) == F(1, 2)

    def test_consecutive_points_give_one_runs(self):
        p = one_runs(Carries(2), 8)
        band = kernel_from_one_runs(p, 6)
        for m in range(1, 7):
            assert correlation(band, range(m)) == p.series.coeffs[m]

    def test_distinct_points_required(self):
        band = kernel_from_one_runs(one_runs(Eulerian(), 6), 4)
        with pytest.raises(ValueError):
            correlation(band, [1, 1])


class TestStringProbability:
    def test_onepair_length_three_table(self):
        want = {
            (): F(1, 16),
            (1,): F(1, 16),
            (2,): F(0),  # 1,0,1 is impossible when ones come from shared letters
            (3,): F(1, 16),
            (1, 2): F(1, 8),
            (1, 3): F(1, 16),
            (2, 3): F(1, 8),
            (1, 2, 3): F(1, 2),
        }
        for zeros, pr in want.items():
            assert string_probability(ONEPAIR_EXT, 3, zeros) == pr

    def test_all_strings_sum_to_one(self):
        for n in range(1, 6):
            total = sum(string_probability(ONEPAIR_EXT, n, zs) for zs in all_zero_sets(n))
            assert total == 1

    def test_position_validation(self):
        with pytest.raises(ValueError):
            string_probability(ONEPAIR_EXT, 3, (0,))
        with pytest.raises(ValueError):
            string_probability(ONEPAIR_EXT, 3, (4,))
        with pytest.raises(ValueError):
            string_probability(ONEPAIR_EXT, 3, (2, 2))


def test_all_zero_sets_order_is_size_then_lex():
    got = list(all_zero_sets(3))
    assert got == [
        (),
        (1,),
        (2,),
        (3,),
        (1, 2),
        (1, 3),
        (2, 3),
        (1, 2, 3),
    ]


# --- pgf routes ------------------------------------------------------------


class TestPgfRoutes:
    def test_iid_fredholm_is_binomial(self):
        band = kernel_from_one_runs(one_runs(Iid(F(1, 3)), 8), 6)
        for n in range(7):
            assert pgf_fredholm(band, n) == ZPoly([F(2, 3), F(1, 3)]) ** n

    def test_three_routes_agree_on_onepair(self):
        p = one_runs(OnePair(F(1, 2)), 8)
        ext = ExtendedOneRuns.from_runseq(p)
        band = kernel_from_one_runs(p, 6)
        Q = bgf_from_zero_runs(zero_runs(OnePair(F(1, 2)), 7))
        for n in range(8):
            assert pgf_determinant(ext, n) == Q.rows[n]
            assert pgf_fredholm(band, n) == Q.rows[n]

    def test_onepair_frozen_row(self):
        assert pgf_determinant(ONEPAIR_EXT, 2) == ZPoly([F(5, 8), F(1, 4), F(1, 8)])

    def test_fredholm_at_zero_is_one(self):
        band = kernel_from_one_runs(one_runs(Eulerian(), 6), 4)
        assert pgf_fredholm(band, 0) == ZPoly([1])

    def test_fredholm_band_requirement(self):
        band = kernel_from_one_runs(one_runs(Eulerian(), 6), 2)
        with pytest.raises(ValueError):
            pgf_fredholm(band, 4)

    def test_multivariate_specializes_to_pgf(self):
        at = F(2, 5)
        got = multivariate_pgf(ONEPAIR_EXT, 4, [at] * 4)
        assert got == pgf_determinant(ONEPAIR_EXT, 4)(at)

    def test_multivariate_frozen_value(self):
        assert multivariate_pgf(ONEPAIR_EXT, 2, [F(1, 3), F(1, 5)]) == F(7, 10)

    def test_multivariate_argument_count(self):
        with pytest.raises(ValueError):
            multivariate_pgf(ONEPAIR_EXT, 2, [F(1, 2)])
