"""Series evaluation, coefficient extraction, and positive definiteness checks.

The float numerics live here: the normalized cosine/Legendre/Gegenbauer basis,
trapezoid and Gauss-Legendre extraction of expansion coefficients from an
evaluable correlation model, truncation-level membership evidence, and the
seeded random-point Gram matrix spot check of positive definiteness.

Everything is pure given (model, seed); per-coefficient extraction work is
independent row by row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .walk import EXACT, CoeffSeq

__all__ = [
    "ResolutionError",
    "SphericalModel",
    "GramReport",
    "QuadratureRule",
    "MembershipReport",
    "normalized_basis",
    "evaluate_series",
    "model_from_seq",
    "extract_fourier",
    "gauss_legendre_rule",
    "extract_legendre",
    "check_membership",
    "gram_psd_check",
    "symmetric_eigenvalues",
    "min_symmetric_eigenvalue",
]

NONNEG_TOL = 1e-12       # entries below -NONNEG_TOL count as violations
GRAM_EIGEN_TOL = 1e-9    # pass iff min eigenvalue >= -GRAM_EIGEN_TOL * point_count


class ResolutionError(ValueError):
    """Grid or quadrature order too small for the requested n_max."""


@dataclass(frozen=True)
class SphericalModel:
    """An evaluable correlation function on [0, pi].

    ``coefficient_oracle(n, d)``, when present, returns the known expansion
    coefficient at index n for sphere dimension d, or None if no formula
    applies; it exists so extraction results can be checked independently.
    """

    name: str
    evaluator: Callable[[float], float]
    coefficient_oracle: Callable[[int, int], float | None] | None = None


@dataclass(frozen=True)
class GramReport:
    """Outcome of one random-point positive-semidefiniteness spot check."""

    point_count: int
    min_eigen_estimate: float
    psd_pass: bool
    seed: int
    generator: str = "pcg64"


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on (-1, 1), nodes ascending."""

    nodes: np.ndarray
    weights: np.ndarray
    order: int


def _check_theta(theta: float) -> None:
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")


def normalized_basis(d: int, n: int, theta: float) -> float:
    """Degree-n basis function for sphere dimension d, equal to 1 at theta = 0.

    d = 1 gives cos(n theta), d = 2 the Legendre polynomial P_n(cos theta),
    and d >= 3 the ultraspherical polynomial of parameter (d-1)/2 divided by
    its value at 1. The recurrence is run directly on the normalized values,
    which keeps every iterate in [-1, 1] and cannot overflow for large n.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_theta(theta)
    if d == 1:
        return math.cos(n * theta)
    if n == 0:
        return 1.0
    x = math.cos(theta)
    lam = (d - 1) / 2
    q0, q1 = 1.0, x
    for j in range(2, n + 1):
        q0, q1 = q1, (2 * (j + lam - 1) * x * q1 - (j - 1) * q0) / (j + 2 * lam - 1)
    return q1


def _basis_matrix(d: int, n_max: int, x: np.ndarray) -> np.ndarray:
    """Normalized basis rows n = 0..n_max at x = cos(theta) points (d >= 1)."""
    x = np.asarray(x, dtype=float)
    out = np.empty((n_max + 1, x.size))
    out[0] = 1.0
    if n_max >= 1:
        out[1] = x
    lam = (d - 1) / 2
    for j in range(2, n_max + 1):
        out[j] = (2 * (j + lam - 1) * x * out[j - 1] - (j - 1) * out[j - 2]) / (
            j + 2 * lam - 1
        )
    return out


def evaluate_series(seq: CoeffSeq, theta: float) -> float:
    """Evaluate sum_n b_n * basis_n(theta) at one angle.

    theta = 0 short-circuits to the coefficient sum (computed exactly for
    exact sequences). Dimension 1 sums cosines directly; dimensions >= 2 use
    a Clenshaw backward recurrence on the normalized three-term relation

        Q_{j+1} = 2(j+lam)/(j+2 lam) x Q_j - j/(j+2 lam) Q_{j-1}.
    """
    _check_theta(theta)
    if theta == 0.0:
        return float(seq.total())
    b = seq.values if seq.kind != EXACT else tuple(float(v) for v in seq.values)
    if seq.dimension == 1:
        return math.fsum(b[n] * math.cos(n * theta) for n in range(len(b)))
    x = math.cos(theta)
    lam = (seq.dimension - 1) / 2
    y1 = y2 = 0.0
    for j in range(seq.n_max, 0, -1):
        a_j = 2 * (j + lam) / (j + 2 * lam)
        b_j1 = -(j + 1) / (j + 1 + 2 * lam)
        y1, y2 = b[j] + a_j * x * y1 + b_j1 * y2, y1
    return b[0] + x * y1 - y2 / (1 + 2 * lam)


def model_from_seq(seq: CoeffSeq, name: str = "sequence") -> SphericalModel:
    """Wrap a coefficient sequence as an evaluable model (truncated series)."""

    def oracle(n: int, d: int) -> float | None:
        if d == seq.dimension and 0 <= n <= seq.n_max:
            return float(seq.values[n])
        return None

    return SphericalModel(name, lambda theta: evaluate_series(seq, theta), oracle)


def extract_fourier(model: SphericalModel, n_max: int, grid_size: int) -> CoeffSeq:
    """Dimension-1 (Fourier cosine) coefficients by composite trapezoid rule.

    Uses the uniform closed grid theta_j = j pi/(grid_size-1), on which the
    half-weighted endpoint sum realizes discrete cosine orthogonality: the
    result is exact to roundoff whenever the model is a cosine polynomial of
    degree at most grid_size - 1 - n_max.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if grid_size < 2 * n_max + 1:
        raise ResolutionError(
            f"grid_size must be >= 2*n_max + 1 = {2 * n_max + 1}, got {grid_size}"
        )
    theta = np.linspace(0.0, math.pi, grid_size)
    psi = np.array([float(model.evaluator(t)) for t in theta])
    w = np.full(grid_size, math.pi / (grid_size - 1))
    w[0] *= 0.5
    w[-1] *= 0.5
    weighted = w * psi
    n = np.arange(n_max + 1)
    coeffs = (2.0 / math.pi) * (np.cos(np.outer(n, theta)) @ weighted)
    coeffs[0] *= 0.5
    return CoeffSeq.floats(1, coeffs.tolist())


def _legendre_pair(order: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """P_order(x) and its derivative via the three-term recurrence."""
    p0 = np.ones_like(x)
    p1 = np.array(x, dtype=float)
    if order == 0:
        return p0, np.zeros_like(x)
    for j in range(2, order + 1):
        p0, p1 = p1, ((2 * j - 1) * x * p1 - (j - 1) * p0) / j
    dp = order * (x * p1 - p0) / (x * x - 1.0)
    return p1, dp


@lru_cache(maxsize=128)
def gauss_legendre_rule(order: int) -> QuadratureRule:
    """Gauss-Legendre rule on [-1, 1] by Newton iteration on P_order roots.

    Starts from the Chebyshev-style angles cos(pi (i - 1/4)/(order + 1/2));
    convergence to ~1e-15 takes a handful of sweeps. Weights are
    2 / ((1 - x^2) P'_order(x)^2); the rule integrates polynomials of degree
    <= 2*order - 1 exactly.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    i = np.arange(1, order + 1)
    x = np.cos(math.pi * (i - 0.25) / (order + 0.5))
    for _ in range(100):
        p, dp = _legendre_pair(order, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    else:
        raise RuntimeError("Newton iteration for Gauss-Legendre nodes did not converge")
    _, dp = _legendre_pair(order, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    nodes = x[::-1].copy()
    weights = w[::-1].copy()
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return QuadratureRule(nodes=nodes, weights=weights, order=order)


def extract_legendre(model: SphericalModel, n_max: int, order: int) -> CoeffSeq:
    """Dimension-2 (Legendre) coefficients by Gauss-Legendre quadrature:

        b_n = (2n+1)/2 * integral_{-1}^{1} psi(arccos x) P_n(x) dx.

    Exact to roundoff when psi(arccos x) is a polynomial of degree at most
    2*order - 1 - n_max in x.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if order < n_max + 1:
        raise ResolutionError(f"order must be >= n_max + 1 = {n_max + 1}, got {order}")
    rule = gauss_legendre_rule(order)
    psi = np.array([float(model.evaluator(math.acos(x))) for x in rule.nodes])
    basis = _basis_matrix(2, n_max, rule.nodes)
    integrals = basis @ (rule.weights * psi)
    coeffs = (np.arange(n_max + 1) + 0.5) * integrals
    return CoeffSeq.floats(2, coeffs.tolist())


@dataclass(frozen=True)
class MembershipReport:
    """Truncation-level membership evidence for a coefficient sequence.

    This is evidence, not proof: nonnegativity and the normalization defect
    are checked on the available entries only, and the per-parity counts of
    strictly positive entries can never certify the infinitely-many
    condition required for strict positive definiteness.
    """

    nonneg_ok: bool
    violations: tuple[int, ...]
    normalization_defect: float
    positive_even: int
    positive_odd: int
    strict: bool

    @property
    def strict_evidence_ok(self) -> bool:
        return self.positive_even > 0 and self.positive_odd > 0

    @property
    def ok(self) -> bool:
        if not self.nonneg_ok:
            return False
        return self.strict_evidence_ok if self.strict else True


def check_membership(seq: CoeffSeq, strict: bool = False) -> MembershipReport:
    """Report nonnegativity violations, |sum - 1|, and parity counts."""
    vals = [float(v) for v in seq.values]
    violations = tuple(n for n, v in enumerate(vals) if v < -NONNEG_TOL)
    if seq.kind == EXACT:
        defect = float(abs(seq.total() - 1))
    else:
        defect = abs(math.fsum(vals) - 1.0)
    positive_even = sum(1 for n, v in enumerate(vals) if n % 2 == 0 and v > 0)
    positive_odd = sum(1 for n, v in enumerate(vals) if n % 2 == 1 and v > 0)
    return MembershipReport(
        nonneg_ok=not violations,
        violations=violations,
        normalization_defect=defect,
        positive_even=positive_even,
        positive_odd=positive_odd,
        strict=strict,
    )


def symmetric_eigenvalues(matrix, rel_tol: float = 1e-14, max_sweeps: int = 50) -> np.ndarray:
    """All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Each rotation annihilates one off-diagonal pair; sweeps repeat until the
    off-diagonal Frobenius mass drops below rel_tol * ||A||_F. Chosen over
    shifted power iteration because it stays accurate on clustered spectra,
    which kernel Gram matrices produce routinely. Intended for the modest
    sizes of spot checks (up to a few hundred).
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n)
    if float(np.max(np.abs(a - a.T))) > 1e-10 * scale:
        raise ValueError("matrix must be symmetric")
    a = (a + a.T) / 2.0
    skip = rel_tol * scale / (4.0 * n * n)
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        off = math.sqrt(2.0) * float(np.linalg.norm(a[iu]))
        if off <= rel_tol * scale:
            return np.sort(np.diagonal(a).copy())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (tau - math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
    raise RuntimeError("Jacobi sweeps did not converge")


def min_symmetric_eigenvalue(matrix) -> float:
    """Smallest eigenvalue of a symmetric matrix (Jacobi sweeps)."""
    return float(symmetric_eigenvalues(matrix)[0])


def _sphere_points(dimension: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """count pseudo-random unit vectors in R^(dimension+1), pairwise distinct.

    Normalized standard Gaussians; rows that collapse (zero norm) or collide
    with an earlier point (inner product at 1 within 1e-12) are redrawn.
    """
    pts = rng.standard_normal((count, dimension + 1))
    for _ in range(100):
        norms = np.linalg.norm(pts, axis=1)
        tiny = norms < 1e-12
        if np.any(tiny):
            pts[tiny] = rng.standard_normal((int(np.sum(tiny)), dimension + 1))
            continue
        unit = pts / norms[:, None]
        dots = unit @ unit.T
        np.fill_diagonal(dots, 0.0)
        dup_rows = np.unique(np.argwhere(dots > 1.0 - 1e-12)[:, 0])
        if dup_rows.size == 0:
            return unit
        pts[dup_rows] = rng.standard_normal((dup_rows.size, dimension + 1))
    raise RuntimeError("could not draw pairwise distinct sphere points")


def gram_psd_check(
    model: SphericalModel, dimension: int, point_count: int, seed: int = 0
) -> GramReport:
    """Random-point positive-semidefiniteness spot check on the dimension-sphere.

    Draws point_count unit vectors from seeded Gaussians (PCG64 behind
    numpy's default generator), forms the kernel matrix
    psi(arccos <x_i, x_j>) with inner products clamped to [-1, 1] before the
    arccos, and estimates the minimum eigenvalue by Jacobi sweeps. Passing
    means min eigenvalue >= -1e-9 * point_count. A failure report carries the
    seed so the witness configuration can be replayed.
    """
    if dimension < 1:
        raise ValueError("dimension must be >= 1")
    if point_count < 2:
        raise ValueError("point_count must be >= 2")
    rng = np.random.default_rng(seed)
    pts = _sphere_points(dimension, point_count, rng)
    dots = np.clip(pts @ pts.T, -1.0, 1.0)
    g = np.empty((point_count, point_count))
    for i in range(point_count):
        g[i, i] = float(model.evaluator(0.0))
        for j in range(i + 1, point_count):
            g[i, j] = g[j, i] = float(model.evaluator(math.acos(dots[i, j])))
    min_eig = min_symmetric_eigenvalue(g)
    return GramReport(
        point_count=point_count,
        min_eigen_estimate=min_eig,
        psd_pass=min_eig >= -GRAM_EIGEN_TOL * point_count,
        seed=seed,
    )
