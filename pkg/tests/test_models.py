"""Bundled process models: exact runs, validators, and path samplers."""

import math
import random
from fractions import Fraction as F

import pytest

from onedep.errors import (
    DepthExceeded,
    SamplerUnavailable,
    ValidationError,
)
from onedep.models import (
    Carries,
    Eulerian,
    Flipping,
    Iid,
    NonTwoBlock,
    OnePair,
    one_runs,
    sample_path,
    validate_non2bf,
    zero_runs,
)
from onedep.oracles import transfer_matrix_distribution
from onedep.enumeration import PairSet
from onedep.series import USeries, extract, series_inv, series_mul, shift, useries_one
from onedep.transforms import bgf_from_zero_runs


def _useries(*coeffs):
    return USeries([F(c) for c in coeffs])


class TestParameterValidation:
    @pytest.mark.parametrize("bad", [F(-1, 2), F(3, 2)])
    def test_iid_probability_range(self, bad):
        with pytest.raises(ValidationError):
            Iid(bad)

    def test_iid_accepts_endpoints(self):
        assert Iid(0).p == 0
        assert Iid(1).p == 1

    @pytest.mark.parametrize("bad", [0, 1, F(3, 2)])
    def test_flipping_needs_interior_probability(self, bad):
        with pytest.raises(ValidationError):
            Flipping(bad)

    def test_carries_base(self):
        with pytest.raises(ValidationError):
            Carries(1)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Iid(0.5)

    def test_string_rationals_accepted(self):
        assert OnePair("1/3").p == F(1, 3)


class TestClosedFormRuns:
    """Shifted run gfs against textbook closed forms, all exact."""

    def test_eulerian_runs_are_reciprocal_factorials(self):
        q = zero_runs(Eulerian(), 6)
        p = one_runs(Eulerian(), 6)
        want = [F(1, math.factorial(n + 1)) for n in range(7)]
        assert list(q.series.coeffs) == want
        assert list(p.series.coeffs) == want  # ascents and descents are symmetric

    def test_eulerian_shifted_gf_is_exponential(self):
        t = shift(zero_runs(Eulerian(), 8).series)
        assert list(t.coeffs) == [F(1, math.factorial(n)) for n in range(10)]

    @pytest.mark.parametrize("p", [F(1, 2), F(1, 5)])
    def test_iid_shifted_gf(self, p):
        # 1 + v Q = (1 + p v) / (1 - (1-p) v)
        t = shift(zero_runs(Iid(p), 8).series)
        den = _useries(1, -(1 - p), *([0] * 8))
        num = _useries(1, p, *([0] * 8))
        assert series_mul(t, den) == num

    @pytest.mark.parametrize("b", [2, 3, 10])
    def test_carries_one_runs_binomial(self, b):
        p = one_runs(Carries(b), b + 3)
        want = [F(math.comb(b, n + 1), b ** (n + 1)) for n in range(b + 4)]
        assert list(p.series.coeffs) == want
        assert p.series.coeffs[b] == 0  # no room for b + 1 strict increases

    @pytest.mark.parametrize("b", [2, 5])
    def test_carries_shifted_gf_is_binomial_power(self, b):
        # 1 + v P = (1 + v/b)^b exactly, a polynomial identity
        t = shift(one_runs(Carries(b), b + 2).series)
        want = [F(math.comb(b, n), b**n) for n in range(b + 4)]
        assert list(t.coeffs) == want

    @pytest.mark.parametrize("p", [F(1, 2), F(2, 3)])
    def test_onepair_shifted_gf(self, p):
        # 1 + v Q = (1 + p v) / (1 - (1-p) v - p(1-p) v^2 ... ) in lowest
        # terms: multiply out against 1 - v + pv - pv^2 + p^2 v^2
        t = shift(zero_runs(OnePair(p), 8).series)
        den = _useries(1, p - 1, p * p - p, *([0] * 7))
        num = _useries(1, p, *([0] * 8))
        assert series_mul(t, den) == num

    def test_onepair_zero_runs_fixture(self):
        q = zero_runs(OnePair(F(1, 2)), 3)
        assert q.series == _useries(1, "3/4", "5/8", "1/2")

    def test_onepair_one_runs_are_powers(self):
        p = one_runs(OnePair(F(1, 3)), 5)
        assert list(p.series.coeffs) == [F(1)] + [F(1, 3) ** (n + 1) for n in range(1, 6)]

    def test_non2bf_shifted_gf_is_cubic_reciprocal(self):
        a, b = F(1, 4), F(1, 16)
        t = shift(zero_runs(NonTwoBlock(a, b), 8).series)
        cubic = _useries(1, -1, a, -b, *([0] * 6))
        assert series_mul(t, cubic) == useries_one(9)

    def test_flipping_small_runs(self):
        q = zero_runs(Flipping(F(1, 2)), 2)
        assert q.series == _useries(1, "1/2", "1/3")

    def test_flipping_depth_cap(self):
        with pytest.raises(DepthExceeded):
            zero_runs(Flipping(F(1, 2)), 9)

    def test_invalid_non2bf_rejected_with_witness(self):
        with pytest.raises(ValidationError):
            zero_runs(NonTwoBlock(1, 1), 4)


class TestNon2bfValidator:
    def test_alpha_beta_one_fails_with_exact_witness(self):
        res = validate_non2bf(F(1), F(1), depth=4)
        assert not res.valid
        assert res.witness.n == 3
        assert res.witness.zeros == (1, 2)
        assert res.witness.determinant == F(-1)

    def test_quarter_sixteenth_is_a_process(self):
        res = validate_non2bf(F(1, 4), F(1, 16), depth=6)
        assert res.valid
        assert res.witness is None

    def test_depth_must_be_positive(self):
        with pytest.raises(ValueError):
            validate_non2bf(F(1, 4), F(1, 16), depth=0)


class TestTransferMatrixAgreement:
    """Two-letter window constructions reproduce the model laws."""

    @pytest.mark.parametrize("p", [F(1, 2), F(1, 4)])
    def test_iid_window(self, p):
        ps = PairSet(2, [(1, 0), (1, 1)])  # depends on first letter only
        Q = bgf_from_zero_runs(zero_runs(Iid(p), 6))
        for n in range(7):
            got = transfer_matrix_distribution(ps, [1 - p, p], n)
            assert got.probs == tuple(extract(Q, k, n) for k in range(n + 1))

    @pytest.mark.parametrize("p", [F(1, 2), F(1, 3)])
    def test_onepair_window(self, p):
        ps = PairSet(2, [(1, 1)])
        Q = bgf_from_zero_runs(zero_runs(OnePair(p), 6))
        for n in range(7):
            got = transfer_matrix_distribution(ps, [1 - p, p], n)
            assert got.probs == tuple(extract(Q, k, n) for k in range(n + 1))

    @pytest.mark.parametrize("b", [2, 3])
    def test_carries_window_is_uniform_descents(self, b):
        ps = PairSet(b, [(x, y) for x in range(b) for y in range(b) if x > y])
        w = [F(1, b)] * b
        Q = bgf_from_zero_runs(zero_runs(Carries(b), 6))
        for n in range(7):
            got = transfer_matrix_distribution(ps, w, n)
            assert got.probs == tuple(extract(Q, k, n) for k in range(n + 1))


SAMPLED = [
    Eulerian(),
    Iid(F(1, 2)),
    Iid(F(1, 5)),
    OnePair(F(1, 2)),
    Carries(2),
    Flipping(F(1, 2)),
]


class TestSamplers:
    def test_paths_are_reproducible(self):
        for m in SAMPLED:
            assert sample_path(m, 9, seed=42) == sample_path(m, 9, seed=42)
            assert sample_path(m, 9, seed=42) != sample_path(m, 9, seed=43)

    def test_path_length_and_alphabet(self):
        path = sample_path(Carries(3), 25, seed=0)
        assert len(path.bits) == 25
        assert set(path.bits) <= {0, 1}

    def test_empty_path(self):
        assert sample_path(Eulerian(), 0, seed=1).bits == ()

    def test_non2bf_has_no_sampler(self):
        with pytest.raises(SamplerUnavailable):
            sample_path(NonTwoBlock(F(1, 4), F(1, 16)), 3, seed=0)

    @pytest.mark.parametrize("m", SAMPLED, ids=str)
    def test_stationarity_of_window_frequencies(self, m):
        # P(X_i = 1) should not depend on i: compare two offsets
        trials, n = 20_000, 6
        rng = random.Random(2026)
        hits = [0, 0]
        from onedep.models import path_bits

        for _ in range(trials):
            bits = path_bits(m, n, rng)
            hits[0] += bits[1]
            hits[1] += bits[4]
        p1 = float(one_runs(m, 1).series.coeffs[1])
        se = math.sqrt(p1 * (1 - p1) / trials)
        for h in hits:
            assert abs(h / trials - p1) < 4 * se

    @pytest.mark.parametrize("m", SAMPLED, ids=str)
    def test_one_dependence_gap_two_factorizes(self, m):
        # X_1 and X_3 are independent, so the joint hit rate is p_1^2
        trials = 20_000
        rng = random.Random(77)
        from onedep.models import path_bits

        hits = 0
        for _ in range(trials):
            bits = path_bits(m, 3, rng)
            hits += bits[0] & bits[2]
        p1 = float(one_runs(m, 1).series.coeffs[1])
        want = p1 * p1
        se = math.sqrt(want * (1 - want) / trials)
        assert abs(hits / trials - want) < 4 * se
