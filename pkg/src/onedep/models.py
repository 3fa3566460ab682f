"""A zoo of stationary 1-dependent 0/1 processes.

Each model produces its zero-run and one-run probability sequences, and
(where a finite construction exists) exact seeded sample paths:

* Eulerian: X_k = [Y_k > Y_(k+1)] for iid continuous Y; runs 1/(n+1)!.
* Iid(p): independent Bernoulli(p) marks; runs are plain powers.
* OnePair(p): X_k = [Y_k = Y_(k+1) = 1] for iid Bernoulli(p) background.
* Carries(b): X_k = [Y_k > Y_(k+1)] for iid uniform base-b digits.
* Flipping(p): X_k reads coin W_k or W_(k-1) according to whether
  U_k rose or fell; runs come from exact enumeration of the U order
  statistics, so they are only available up to a hard exact depth.
* NonTwoBlock(alpha, beta): the process with one-run gf
  1 + v + alpha v^2 + beta v^3 (p_n = 0 past two); realizable only for
  some (alpha, beta), which `validate_non2bf` certifies by checking all
  cylinder determinants up to a depth.  No sampler.

Sampling never touches floats: uniform ranks are random permutations and
Bernoulli draws compare `randrange` output against exact numerators.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Union

from . import oracles
from .detpp import ExtendedOneRuns, string_probability, all_zero_sets
from .errors import DepthExceeded, SamplerUnavailable, ValidationError
from .series import RationalLike, RunSeq, USeries, as_rational
from .transforms import involution

NON2BF_VALIDATION_DEPTH = 6


def _coerce_prob(obj, field: str, open_ends: bool = False) -> None:
    val = as_rational(getattr(obj, field))
    lo_ok = val > 0 if open_ends else val >= 0
    hi_ok = val < 1 if open_ends else val <= 1
    if not (lo_ok and hi_ok):
        bounds = "(0, 1)" if open_ends else "[0, 1]"
        raise ValidationError(f"{field} must lie in {bounds}, got {val}")
    object.__setattr__(obj, field, val)


@dataclass(frozen=True)
class Eulerian:
    """Descent indicators of an iid continuous sequence."""


@dataclass(frozen=True)
class Iid:
    p: Fraction

    def __post_init__(self):
        _coerce_prob(self, "p")


@dataclass(frozen=True)
class OnePair:
    p: Fraction

    def __post_init__(self):
        _coerce_prob(self, "p")


@dataclass(frozen=True)
class Carries:
    b: int

    def __post_init__(self):
        if not isinstance(self.b, int) or self.b < 2:
            raise ValidationError(f"base must be an integer >= 2, got {self.b}")


@dataclass(frozen=True)
class Flipping:
    p: Fraction
    exact_depth: int = oracles.MAX_FLIPPING_N

    def __post_init__(self):
        _coerce_prob(self, "p", open_ends=True)
        if not 1 <= self.exact_depth <= oracles.MAX_FLIPPING_N:
            raise ValidationError(
                f"exact depth must be in 1..{oracles.MAX_FLIPPING_N}"
            )


@dataclass(frozen=True)
class NonTwoBlock:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        _coerce_prob(self, "alpha")
        _coerce_prob(self, "beta")


ModelSpec = Union[Eulerian, Iid, OnePair, Carries, Flipping, NonTwoBlock]


@dataclass(frozen=True)
class StringWitness:
    """A cylinder set whose determinant went negative."""

    n: int
    zeros: tuple[int, ...]
    determinant: Fraction


@dataclass(frozen=True)
class Non2bfValidation:
    valid: bool
    witness: StringWitness | None = None


@lru_cache(maxsize=None)
def validate_non2bf(
    alpha: Fraction, beta: Fraction, depth: int = NON2BF_VALIDATION_DEPTH
) -> Non2bfValidation:
    """Certify (alpha, beta) against every cylinder up to the depth.

    The candidate one-run values are p_1 = alpha, p_2 = beta, p_n = 0
    afterwards.  Realizability demands every string probability be
    non-negative; the first negative determinant (shortest string,
    positions in lexicographic order) is returned as the witness.
    """
    alpha = as_rational(alpha)
    beta = as_rational(beta)
    if depth < 1:
        raise ValueError("validation depth must be >= 1")
    values = [Fraction(1), alpha, beta] + [Fraction(0)] * max(depth - 2, 0)
    ext = ExtendedOneRuns(values[: depth + 1])
    for n in range(1, depth + 1):
        for zeros in all_zero_sets(n):
            det = string_probability(ext, n, zeros)
            if det < 0:
                return Non2bfValidation(False, StringWitness(n, zeros, det))
    return Non2bfValidation(True)


def _require_valid_non2bf(m: NonTwoBlock) -> None:
    res = validate_non2bf(m.alpha, m.beta)
    if not res.valid:
        w = res.witness
        raise ValidationError(
            f"(alpha, beta) = ({m.alpha}, {m.beta}) is not realizable: "
            f"zeros at {w.zeros} for n = {w.n} has probability {w.determinant}"
        )


# ---------------------------------------------------------------------------
# run probabilities


@lru_cache(maxsize=None)
def one_runs(m: ModelSpec, N: int) -> RunSeq:
    """p_0..p_N for the model, as a validated one-run sequence."""
    if N < 0:
        raise ValueError("order must be >= 0")
    if isinstance(m, Eulerian):
        vals = [Fraction(1, factorial(n + 1)) for n in range(N + 1)]
    elif isinstance(m, Iid):
        vals = [m.p**n for n in range(N + 1)]
    elif isinstance(m, OnePair):
        vals = [Fraction(1)] + [m.p ** (n + 1) for n in range(1, N + 1)]
    elif isinstance(m, Carries):
        vals = [Fraction(1)] + [
            Fraction(comb(m.b, n + 1), m.b ** (n + 1)) for n in range(1, N + 1)
        ]
    elif isinstance(m, Flipping):
        if N > m.exact_depth:
            raise DepthExceeded(
                f"flipping runs are exact only up to depth {m.exact_depth}"
            )
        vals = [Fraction(1)]
        for j in range(1, N + 1):
            dist, _ = oracles.flipping_exact(m.p, j)
            vals.append(dist.probs[j])
    elif isinstance(m, NonTwoBlock):
        _require_valid_non2bf(m)
        vals = [Fraction(1), m.alpha, m.beta][: N + 1]
        vals += [Fraction(0)] * (N + 1 - len(vals))
    else:
        raise TypeError(f"unknown model {m!r}")
    return RunSeq("one", USeries(vals)).validate()


@lru_cache(maxsize=None)
def zero_runs(m: ModelSpec, N: int) -> RunSeq:
    """q_0..q_N for the model, as a validated zero-run sequence."""
    if N < 0:
        raise ValueError("order must be >= 0")
    if isinstance(m, Eulerian):
        vals = [Fraction(1, factorial(n + 1)) for n in range(N + 1)]
    elif isinstance(m, Iid):
        vals = [(1 - m.p) ** n for n in range(N + 1)]
    elif isinstance(m, Carries):
        vals = [Fraction(comb(m.b + n, n + 1), m.b ** (n + 1)) for n in range(1, N + 1)]
        vals = [Fraction(1)] + vals
    elif isinstance(m, Flipping):
        if N > m.exact_depth:
            raise DepthExceeded(
                f"flipping runs are exact only up to depth {m.exact_depth}"
            )
        _, qs = oracles.flipping_exact(m.p, N)
        vals = [Fraction(1)] + qs
    elif isinstance(m, (OnePair, NonTwoBlock)):
        # no closed form kept here: the involution of the one runs is exact
        return involution(one_runs(m, N)).validate()
    else:
        raise TypeError(f"unknown model {m!r}")
    return RunSeq("zero", USeries(vals)).validate()


# ---------------------------------------------------------------------------
# exact seeded sampling


@dataclass(frozen=True)
class Path:
    """One sampled 0/1 trajectory."""

    bits: tuple[int, ...]

    @property
    def count(self) -> int:
        return sum(self.bits)


def _bernoulli(rng: random.Random, p: Fraction) -> int:
    # exact: no float comparison anywhere
    return 1 if rng.randrange(p.denominator) < p.numerator else 0


def path_bits(m: ModelSpec, n: int, rng: random.Random) -> list[int]:
    """X_1..X_n for one fresh realization drawn from `rng`."""
    if n < 0:
        raise ValueError("path length must be >= 0")
    if isinstance(m, Eulerian):
        ranks = list(range(n + 1))
        rng.shuffle(ranks)
        return [int(ranks[k] > ranks[k + 1]) for k in range(n)]
    if isinstance(m, Iid):
        return [_bernoulli(rng, m.p) for _ in range(n)]
    if isinstance(m, OnePair):
        ys = [_bernoulli(rng, m.p) for _ in range(n + 1)]
        return [ys[k] & ys[k + 1] for k in range(n)]
    if isinstance(m, Carries):
        ys = [rng.randrange(m.b) for _ in range(n + 1)]
        return [int(ys[k] > ys[k + 1]) for k in range(n)]
    if isinstance(m, Flipping):
        ranks = list(range(n + 1))
        rng.shuffle(ranks)
        ws = [_bernoulli(rng, m.p) for _ in range(n + 1)]
        return [ws[k] if ranks[k] > ranks[k - 1] else ws[k - 1] for k in range(1, n + 1)]
    if isinstance(m, NonTwoBlock):
        raise SamplerUnavailable("the non-two-block family has no finite sampler")
    raise TypeError(f"unknown model {m!r}")


def sample_path(m: ModelSpec, n: int, seed: int) -> Path:
    """Deterministic sample of X_1..X_n from an integer seed."""
    return Path(tuple(path_bits(m, n, random.Random(seed))))
