"""Concrete correlation-model families and the model registry.

Registered names:

- ``one``       psi == 1; coefficients e_0 in every dimension
- ``cosine``    psi = cos(theta); coefficients e_1 in every dimension
- ``example31`` the inverse-square cosine family b_{0,1} = 0,
                b_{n,1} = 6/(pi^2 n^2), whose sum collapses to the quadratic
                1 - 3 theta/pi + 3 theta^2/(2 pi^2)
- ``hs``        the dimension-2 family b_{0,2} = c0/2,
                b_{n,2} = (c_n/n^(2+eps)) (2n+1)/2 with c_n -> c
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exactnum import beta
from .series import SphericalModel, evaluate_series
from .walk import CoeffSeq

__all__ = [
    "HSModelSpec",
    "example_fourier_seq",
    "example_psi",
    "example_closed_form",
    "example_walked_closed_form_seq",
    "hs_model_seq",
    "fractal_index_estimate",
    "MODEL_NAMES",
    "get_model",
]

# Largest n on which the walked closed form runs in exact rationals; beyond
# it the log-gamma float route takes over (both agree to ~1e-12 relative).
_EXACT_LIMIT = 1000


def example_fourier_seq(n_max: int) -> CoeffSeq:
    """Inverse-square cosine coefficients: b_0 = 0, b_n = 6/(pi^2 n^2)."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    vals = [0.0] + [6.0 / (math.pi**2 * n**2) for n in range(1, n_max + 1)]
    return CoeffSeq.floats(1, vals)


def example_psi(theta: float) -> float:
    """Closed form of sum_n 6/(pi^2 n^2) cos(n theta) on [0, pi]."""
    return 1.0 - 3.0 * theta / math.pi + 1.5 * theta**2 / math.pi**2


def example_closed_form(n: int, k: int) -> float:
    """Walked inverse-square coefficient at dimension 2k+1 for n, k >= 1:

        3 k (n+k) B(n/2, k)^2 / (n pi^2 (n+2k)^2 B(n, 2k)).

    The Beta values are exact Fractions (Pochhammer form) up to n = 1000;
    larger n switches to the log-gamma float route. Strictly positive for all
    n, k >= 1 and O(n^-2) for fixed k.
    """
    if n < 1:
        raise ValueError("defined for n >= 1 (the closed form has n in a denominator)")
    if k < 1:
        raise ValueError("k must be >= 1")
    if n <= _EXACT_LIMIT:
        b_half = beta(Fraction(n, 2), k)
        b_full = beta(n, 2 * k)
        r = Fraction(3 * k * (n + k), n * (n + 2 * k) ** 2) * b_half**2 / b_full
        return float(r) / math.pi**2
    b_half = beta(n / 2, k, mode="float")
    b_full = beta(n, 2 * k, mode="float")
    return 3 * k * (n + k) * b_half**2 / (n * math.pi**2 * (n + 2 * k) ** 2 * b_full)


def example_walked_closed_form_seq(n_max: int, k: int) -> CoeffSeq:
    """Dimension-(2k+1) sequence of the inverse-square family from the closed
    form, with the n = 0 entry set to 0 like the base family.

    The raw walk assigns n = 0 a negative value (-3/(4 pi^2) at k = 1), so
    the walked function is not positive definite past dimension 1. Zeroing
    that single entry leaves a nonnegative coefficient sequence, whose
    reconstructed kernel is positive definite on the dimension-(2k+1) sphere
    by construction.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    vals = [0.0] + [example_closed_form(n, k) for n in range(1, n_max + 1)]
    return CoeffSeq.floats(2 * k + 1, vals)


@dataclass(frozen=True)
class HSModelSpec:
    """Coefficient rule c(0) = c0 and c(n) = c_n / n^(2+epsilon) for n >= 1.

    The c_n default to the constant limit value c (the tightest admissible
    bounds); an explicit table c_1, c_2, ... overrides the head of the
    sequence and must respect the declared bounds lambda1 <= c_n <= lambda2
    when those are given.
    """

    epsilon: float
    c0: float = 1.0
    c: float = 1.0
    cn_table: tuple[float, ...] | None = None
    lambda1: float | None = None
    lambda2: float | None = None

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError("epsilon must be > 0")
        if not self.c0 > 0 or not self.c > 0:
            raise ValueError("c0 and c must be > 0")
        if self.cn_table is not None:
            object.__setattr__(self, "cn_table", tuple(float(v) for v in self.cn_table))
            if any(v <= 0 for v in self.cn_table):
                raise ValueError("all c_n must be > 0")
        lo, hi = self.lambda1, self.lambda2
        if lo is not None or hi is not None:
            entries = list(self.cn_table or ()) + [self.c]
            if lo is not None and any(v < lo for v in entries):
                raise ValueError("coefficient table violates the lower bound lambda1")
            if hi is not None and any(v > hi for v in entries):
                raise ValueError("coefficient table violates the upper bound lambda2")

    def cn(self, n: int) -> float:
        if n < 1:
            raise ValueError("c_n is indexed from n = 1")
        if self.cn_table is not None and n <= len(self.cn_table):
            return self.cn_table[n - 1]
        return self.c


def hs_model_seq(spec: HSModelSpec, n_max: int) -> CoeffSeq:
    """Dimension-2 coefficients b_0 = c0/2, b_n = (c_n/n^(2+eps)) (2n+1)/2."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    vals = [spec.c0 * 0.5]
    for n in range(1, n_max + 1):
        vals.append(spec.cn(n) / n ** (2.0 + spec.epsilon) * (2 * n + 1) / 2.0)
    return CoeffSeq.floats(2, vals)


def fractal_index_estimate(seq: CoeffSeq, fit_range: tuple[int, int]) -> float:
    """Decay exponent of a dimension-1 sequence, reported as gamma = -slope - 1.

    Plain least squares on the log-log points over the inclusive fit range;
    coefficients behaving like n^(-gamma-1) give back gamma. This is a
    diagnostic, not an inference procedure: no error bars, and estimates
    landing outside (0, 1) are flagged with a warning because the index
    interpretation only holds on the open interval.
    """
    if seq.dimension != 1:
        raise ValueError("the index estimate reads dimension-1 coefficients")
    lo, hi = fit_range
    if not 1 <= lo < hi <= seq.n_max:
        raise ValueError("fit range must satisfy 1 <= n_lo < n_hi <= n_max")
    ns = np.arange(lo, hi + 1)
    bs = np.array([float(v) for v in seq.values[lo : hi + 1]])
    if np.any(bs <= 0):
        raise ValueError("fit range contains nonpositive entries")
    slope = float(np.polyfit(np.log(ns), np.log(bs), 1)[0])
    gamma = -slope - 1.0
    # estimates within roundoff of an endpoint count as boundary cases
    if not 1e-9 < gamma < 1.0 - 1e-9:
        warnings.warn(
            f"fractal index estimate {gamma:.6g} lies outside (0, 1); "
            "the power-law interpretation does not apply there",
            stacklevel=2,
        )
    return gamma


MODEL_NAMES = ("one", "cosine", "example31", "hs")


def _example31_oracle(n: int, d: int) -> float | None:
    if d == 1:
        return 0.0 if n == 0 else 6.0 / (math.pi**2 * n**2)
    if d >= 3 and d % 2 == 1 and n >= 1:
        return example_closed_form(n, (d - 1) // 2)
    return None


def get_model(name: str, **params) -> SphericalModel:
    """Look up a registered correlation model by name.

    ``hs`` accepts epsilon/c0/c/n_trunc parameters (its evaluator sums the
    truncated Legendre series; the family's slow tail makes exact evaluation
    impossible, so n_trunc bounds the truncation error). The other models
    take no parameters. Unknown names raise KeyError.
    """
    if name == "one":
        if params:
            raise ValueError(f"model {name!r} takes no parameters")
        return SphericalModel(
            "one", lambda theta: 1.0, lambda n, d: 1.0 if n == 0 else 0.0
        )
    if name == "cosine":
        if params:
            raise ValueError(f"model {name!r} takes no parameters")
        return SphericalModel(
            "cosine", math.cos, lambda n, d: 1.0 if n == 1 else 0.0
        )
    if name == "example31":
        if params:
            raise ValueError(f"model {name!r} takes no parameters")
        return SphericalModel("example31", example_psi, _example31_oracle)
    if name == "hs":
        n_trunc = int(params.pop("n_trunc", 2000))
        spec = HSModelSpec(
            epsilon=float(params.pop("epsilon", 1.0)),
            c0=float(params.pop("c0", 1.0)),
            c=float(params.pop("c", 1.0)),
        )
        if params:
            raise ValueError(f"unknown hs parameters: {sorted(params)}")
        seq = hs_model_seq(spec, n_trunc)

        def oracle(n: int, d: int) -> float | None:
            if d == 2 and 0 <= n <= n_trunc:
                return float(seq.values[n])
            return None

        return SphericalModel("hs", lambda theta: evaluate_series(seq, theta), oracle)
    raise KeyError(name)
