"""Brute-force and statistical reference oracles.

Everything here proceeds by exhaustive enumeration, dynamic programming,
or seeded simulation.  Nothing imports the generating-function
transforms, so agreement between an oracle and an analytic route is
evidence, not circularity.  (The Monte Carlo oracle necessarily drives a
model's path sampler; it imports that lazily and nothing else.)
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import permutations, product
from typing import Iterable, Sequence

from .enumeration import PairSet
from .errors import DepthExceeded, EmptyTrials, ValidationError
from .series import RationalLike, as_rational

MAX_PERMUTATION_N = 8
MAX_FLIPPING_N = 7
MAX_BRUTE_STRINGS = 10**7


class Distribution:
    """Exact law of a count in 0..n: probs[k] = P(S_n = k)."""

    __slots__ = ("probs",)

    probs: tuple[Fraction, ...]

    def __init__(self, probs: Iterable[RationalLike]):
        ps = tuple(as_rational(p) for p in probs)
        if not ps:
            raise ValidationError("a distribution needs at least one atom")
        if any(p < 0 for p in ps):
            raise ValidationError("distribution has a negative atom")
        if sum(ps) != 1:
            raise ValidationError(f"distribution sums to {sum(ps)}, not 1")
        self.probs = ps

    @property
    def n(self) -> int:
        return len(self.probs) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Distribution):
            return self.probs == other.probs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Distribution", self.probs))

    def __repr__(self) -> str:
        return f"Distribution({[str(p) for p in self.probs]})"


class EmpiricalDistribution:
    """Bin frequencies from seeded sampling, with binomial standard errors."""

    __slots__ = ("freqs", "trials", "seed")

    freqs: tuple[Fraction, ...]
    trials: int
    seed: int

    def __init__(self, freqs: Sequence[Fraction], trials: int, seed: int):
        self.freqs = tuple(freqs)
        self.trials = trials
        self.seed = seed

    @property
    def n(self) -> int:
        return len(self.freqs) - 1

    @property
    def std_errors(self) -> tuple[float, ...]:
        """Plug-in binomial standard errors, per bin."""
        return tuple(
            math.sqrt(float(f) * (1 - float(f)) / self.trials) for f in self.freqs
        )


def max_sigma_deviation(emp: EmpiricalDistribution, exact: Distribution) -> float:
    """Largest per-bin |freq - p| in units of sqrt(p(1-p)/trials).

    Standard errors use the exact bin probabilities, so the yardstick is
    deterministic.  Bins with p in {0, 1} have no sampling noise: any
    mismatch there is infinitely many sigmas away.
    """
    if emp.n != exact.n:
        raise ValueError(f"support mismatch: {emp.n} != {exact.n}")
    worst = 0.0
    for f, p in zip(emp.freqs, exact.probs):
        gap = abs(f - p)
        if p == 0 or p == 1:
            if gap:
                return math.inf
            continue
        se = math.sqrt(p * (1 - p) / emp.trials)
        worst = max(worst, float(gap) / se)
    return worst


# ---------------------------------------------------------------------------
# exhaustive oracles


def descent_distribution_bruteforce(n: int) -> Distribution:
    """Law of the number of descents among n+1 fresh uniform ranks.

    Literally walks all (n+1)! permutations; the counts are the classical
    Eulerian numbers.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_PERMUTATION_N:
        raise DepthExceeded(f"{n + 1}! permutations is past the line at n = {MAX_PERMUTATION_N}")
    counts = [0] * (n + 1)
    for perm in permutations(range(n + 1)):
        counts[sum(perm[i] > perm[i + 1] for i in range(n))] += 1
    total = math.factorial(n + 1)
    return Distribution([Fraction(c, total) for c in counts])


def transfer_matrix_distribution(
    ps: PairSet, weights: Sequence[RationalLike], n: int
) -> Distribution:
    """Law of the number of adjacent pairs (of n+1 iid letters) in the set.

    Dynamic program over (last letter, pairs so far): O(n^2 m) exact
    states, independent of any generating function.
    """
    ws = [as_rational(w) for w in weights]
    if len(ws) != ps.m:
        raise ValidationError(f"need {ps.m} letter weights, got {len(ws)}")
    if any(w < 0 for w in ws) or sum(ws) != 1:
        raise ValidationError("letter weights must be a probability vector")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Distribution([Fraction(1)])
    hits = ps.pairs
    state = {(y, 0): ws[y] for y in range(ps.m) if ws[y]}
    for _ in range(n):
        nxt: dict[tuple[int, int], Fraction] = {}
        for (x, c), mass in state.items():
            for y in range(ps.m):
                wy = ws[y]
                if not wy:
                    continue
                key = (y, c + ((x, y) in hits))
                nxt[key] = nxt.get(key, Fraction(0)) + mass * wy
        state = nxt
    probs = [Fraction(0)] * (n + 1)
    for (_, c), mass in state.items():
        probs[c] += mass
    return Distribution(probs)


def flipping_exact(p: RationalLike, n: int) -> tuple[Distribution, list[Fraction]]:
    """Exact law of S_n for the flipped-coins construction, plus zero runs.

    The construction: U_0..U_n iid uniform, W_0..W_n iid Bernoulli(p), and
    X_k = W_k if U_k > U_(k-1), else W_(k-1).  Only the relative order of
    the U's matters, so all (n+1)! orderings are enumerated with weight
    1/(n+1)!.  Per ordering, X_k reads coin a_k (a_k = k or k-1), and the
    law of S_n depends only on how many coins are read twice.  Returns
    (law of S_n, [q_1..q_n]) with q_j = P(X_1 = ... = X_j = 0).
    """
    pr = as_rational(p)
    if not 0 <= pr <= 1:
        raise ValidationError(f"coin bias must be in [0, 1], got {pr}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_FLIPPING_N:
        raise DepthExceeded(f"{n + 1}! orderings is past the line at n = {MAX_FLIPPING_N}")
    if n == 0:
        return Distribution([Fraction(1)]), []

    doubles_count = [0] * (n // 2 + 1)  # perms by number of coins read twice
    prefix_distinct = [[0] * (n + 1) for _ in range(n + 1)]  # [j][d]
    for perm in permutations(range(n + 1)):
        prev = -1  # a_0 sentinel; a_k values are strictly increasing or repeat
        distinct = 0
        doubles = 0
        for k in range(1, n + 1):
            a = k if perm[k] > perm[k - 1] else k - 1
            if a == prev:
                doubles += 1
            else:
                distinct += 1
            prefix_distinct[k][distinct] += 1
            prev = a
        doubles_count[doubles] += 1

    total = math.factorial(n + 1)
    q = 1 - pr
    # law of S_n: mixture over (q + p z)^(n - 2d) (q + p z^2)^d
    probs = [Fraction(0)] * (n + 1)
    for d, cnt in enumerate(doubles_count):
        if not cnt:
            continue
        pgf = [Fraction(1)]
        for _ in range(n - 2 * d):
            pgf = _convolve(pgf, [q, pr])
        for _ in range(d):
            pgf = _convolve(pgf, [q, Fraction(0), pr])
        for k, c in enumerate(pgf):
            probs[k] += Fraction(cnt, total) * c
    zero_runs = []
    for j in range(1, n + 1):
        acc = Fraction(0)
        for d, cnt in enumerate(prefix_distinct[j]):
            if cnt:
                acc += Fraction(cnt, total) * q**d
        zero_runs.append(acc)
    return Distribution(probs), zero_runs


def _convolve(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return out


def pattern_count_bruteforce(ps: PairSet, n: int) -> list[int]:
    """f(n, 0..n-1) by scanning every one of the m^n strings."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if ps.m**n > MAX_BRUTE_STRINGS:
        raise DepthExceeded(f"{ps.m}^{n} strings is past the line at {MAX_BRUTE_STRINGS}")
    hits = ps.pairs
    counts = [0] * n
    for s in product(range(ps.m), repeat=n):
        counts[sum(pair in hits for pair in zip(s, s[1:]))] += 1
    return counts


# ---------------------------------------------------------------------------
# seeded simulation


def monte_carlo_distribution(model, n: int, trials: int, seed: int) -> EmpiricalDistribution:
    """Empirical law of S_n from `trials` seeded sample paths.

    Deterministic for fixed (model, n, trials, seed): one PRNG drives all
    trials in order.
    """
    if trials <= 0:
        raise EmptyTrials("at least one trial is required")
    if n < 0:
        raise ValueError("n must be >= 0")
    import random

    from .models import path_bits  # lazily: only the sampler, never transforms

    rng = random.Random(seed)
    counts = [0] * (n + 1)
    for _ in range(trials):
        counts[sum(path_bits(model, n, rng))] += 1
    return EmpiricalDistribution(
        [Fraction(c, trials) for c in counts], trials, seed
    )
