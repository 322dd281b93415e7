"""
bounds.py
---------
Parameter inequalities and perturbation bounds for distance-regular graphs.

Contains:
- bipartite_diam3: the bipartite diameter-3 array {k, k-1, k-mu; 1, mu, k} and its spectrum
- tradeoff_inequality: lhs >= 1 - 4/(C-1) with C = b_j / c_{j+1} (exact)
- spectral_gap_estimate: xi <= k(1 - min(alpha,beta) + 2(d+2)^2 eps^(1/(d+1)))
- perturbation_bounds: root / eigenvalue matching radius for close polynomials or matrices

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import eigvals
from scipy.optimize import linear_sum_assignment

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.results import Inequality, NotApplicable, jsonable
from drg.intersection_array import IntersectionArray, InvalidArrayError
from drg.spectrum import Spectrum

logger = logging.getLogger(__name__)


class ParameterError(ValueError):
    """Parameters outside the range a formula is stated for."""
    pass


# =============================================================================
# BIPARTITE DIAMETER 3
# =============================================================================

def bipartite_diam3(k: int, mu: int) -> Tuple[IntersectionArray, Spectrum]:
    """
    Array {k, k-1, k-mu; 1, mu, k} with eigenvalues +-k (mult 1) and
    +-sqrt(k-mu) (mult n/2 - 1).

    Raises:
        ParameterError: unless 1 <= mu < k.
        InvalidArrayError: k(k-1)/mu not an integer.
    """
    if not 1 <= mu < k:
        raise ParameterError(f"need 1 <= mu < k, got k={k}, mu={mu}")
    array = IntersectionArray([k, k - 1, k - mu], [1, mu, k])
    if any(size.denominator != 1 for size in array.sizes):
        raise InvalidArrayError(f"k_i not integral for k={k}, mu={mu}: {array.sizes}")
    half = array.n // 2
    root = math.sqrt(k - mu)
    spectrum = Spectrum([(k, 1), (root, half - 1), (-root, half - 1), (-k, 1)])
    return array, spectrum


# =============================================================================
# TRADEOFF INEQUALITY
# =============================================================================

class TradeoffResult(Inequality):
    """Inequality lhs >= rhs together with C = b_j / c_{j+1}."""

    def __init__(self, j: int, s: int, C: Fraction, lhs: Fraction, rhs: Fraction):
        super().__init__(f"tradeoff(j={j},s={s})", lhs, rhs, lhs >= rhs)
        self.j = j
        self.s = s
        self.C = C

    def to_dict(self) -> Dict:
        data = super().to_dict()
        data.update({"C": jsonable(self.C), "j": self.j, "s": self.s,
                     "lhs_float": float(self.lhs), "rhs_float": float(self.rhs)})
        return data


def tradeoff_inequality(array: IntersectionArray, j: int, s: int,
                        primitive: Optional[bool] = None) -> Union[TradeoffResult, NotApplicable]:
    """
    lhs = b_{j+1}(sum_{t=1}^{s} 1/b_{t-1} + sum_{t=1}^{j+2-s} 1/b_{t-1})
          + c_{j+2} sum_{t=1}^{j+1} 1/b_{t-1}
    rhs = 1 - 4/(C-1)

    Raises:
        ParameterError: d < 3, j outside [1, d-2] or s outside [1, j+1].
    """
    d = array.d
    if d < 3:
        raise ParameterError(f"tradeoff needs d >= 3, got d = {d}")
    if not 1 <= j <= d - 2:
        raise ParameterError(f"j = {j} outside [1, {d - 2}]")
    if not 1 <= s <= j + 1:
        raise ParameterError(f"s = {s} outside [1, {j + 1}]")
    if primitive is None:
        primitive = array.is_primitive()
    if not primitive:
        return NotApplicable("tradeoff", "array is imprimitive", False, True)

    C = Fraction(array.b[j], array.c_(j + 1))
    if C <= 1:
        return NotApplicable("tradeoff", "C = b_j / c_{j+1} <= 1", C, 1)

    def harmonic(upto: int) -> Fraction:
        return sum((Fraction(1, array.b[t - 1]) for t in range(1, upto + 1)), Fraction(0))

    lhs = array.b_(j + 1) * (harmonic(s) + harmonic(j + 2 - s)) + array.c_(j + 2) * harmonic(j + 1)
    rhs = 1 - Fraction(4) / (C - 1)
    return TradeoffResult(j, s, C, lhs, rhs)


def all_tradeoffs(array: IntersectionArray) -> List[Union[TradeoffResult, NotApplicable]]:
    """Every valid (j, s) for a d >= 3 array."""
    if array.d < 3:
        return []
    primitive = array.is_primitive()
    return [tradeoff_inequality(array, j, s, primitive)
            for j in range(1, array.d - 1) for s in range(1, j + 2)]


# =============================================================================
# SPECTRAL GAP
# =============================================================================

def spectral_gap_formula(k: float, d: int, epsilon: float, alpha: float, beta: float) -> float:
    """Raw k(1 - min(alpha, beta) + 2(d+2)^2 eps^(1/(d+1))), unclamped."""
    return k * (1 - min(alpha, beta) + 2 * (d + 2) ** 2 * epsilon ** (1.0 / (d + 1)))


class SpectralGapEstimate:
    def __init__(self, bound: float, raw: float, i: int, epsilon: float, alpha: float, beta: float):
        self.bound = bound
        self.raw = raw
        self.i = i
        self.epsilon = epsilon
        self.alpha = alpha
        self.beta = beta

    def to_dict(self) -> Dict:
        return {
            "bound": self.bound, "raw": self.raw, "i": self.i,
            "epsilon": self.epsilon, "alpha": self.alpha, "beta": self.beta,
        }


def spectral_gap_estimate(array: IntersectionArray, epsilon: float,
                          i: Optional[int] = None,
                          alpha: Optional[float] = None,
                          beta: Optional[float] = None) -> Union[SpectralGapEstimate, NotApplicable]:
    """
    Upper bound on xi when b_i <= eps k, c_i <= eps k, b_{i-1} >= alpha k, c_{i+1} >= beta k.

    alpha / beta default to the largest admissible values b_{i-1}/k, c_{i+1}/k.
    With i = None every 1 <= i <= d is tried and the smallest bound kept.
    alpha and beta must be positive, so i = d (where c_{d+1} = 0) is never
    admissible.
    """
    k = array.k
    indices = [i] if i is not None else list(range(1, array.d + 1))
    best: Optional[SpectralGapEstimate] = None
    first_failure: Optional[NotApplicable] = None
    for idx in indices:
        if not 1 <= idx <= array.d:
            failure = NotApplicable("spectral-gap", f"1 <= i <= d with d = {array.d}", idx, array.d)
            first_failure = first_failure or failure
            continue
        a_val = b_prev = array.b[idx - 1] / k
        b_val = c_next = array.c_(idx + 1) / k
        a_val = a_val if alpha is None else alpha
        b_val = b_val if beta is None else beta
        if a_val <= 0 or b_val <= 0:
            name = "alpha > 0" if a_val <= 0 else "beta > 0"
            first_failure = first_failure or NotApplicable("spectral-gap", name, min(a_val, b_val), 0)
            continue
        checks = [
            (f"b_{idx} <= eps k", array.b_(idx), epsilon * k),
            (f"c_{idx} <= eps k", array.c_(idx), epsilon * k),
            (f"b_{idx - 1} >= alpha k", a_val * k, b_prev * k),
            (f"c_{idx + 1} >= beta k", b_val * k, c_next * k),
        ]
        failed = next((c for c in checks if c[1] > c[2]), None)
        if failed is not None:
            first_failure = first_failure or NotApplicable("spectral-gap", failed[0], failed[1], failed[2])
            continue
        raw = spectral_gap_formula(k, array.d, epsilon, a_val, b_val)
        estimate = SpectralGapEstimate(min(max(raw, 0.0), float(k)), raw, idx, epsilon, a_val, b_val)
        if best is None or estimate.bound < best.bound:
            best = estimate
    if best is None:
        return first_failure or NotApplicable("spectral-gap", "no admissible i", None, None)
    return best


# =============================================================================
# PERTURBATION
# =============================================================================

class PerturbationBound:
    def __init__(self, kind: str, bound: float, M: float, delta: Optional[float],
                 matched: bool, max_deviation: float):
        self.kind = kind
        self.bound = bound
        self.M = M
        self.delta = delta
        self.matched = matched
        self.max_deviation = max_deviation

    def to_dict(self) -> Dict:
        return {
            "kind": self.kind, "bound": self.bound, "M": self.M, "delta": self.delta,
            "matched": self.matched, "max_deviation": self.max_deviation,
        }


def matching_within(xs: Sequence[complex], ys: Sequence[complex], radius: float,
                    tol: float = 1e-9) -> Tuple[bool, float]:
    """
    Is there a permutation sigma with |x_i - y_sigma(i)| <= radius for all i?

    Returns:
        (exists, largest deviation of the assignment minimising violations)
    """
    xs = np.asarray(xs, dtype=complex)
    ys = np.asarray(ys, dtype=complex)
    distance = np.abs(xs[:, None] - ys[None, :])
    cost = (distance > radius + tol).astype(float)
    rows, cols = linear_sum_assignment(cost)
    exists = bool(cost[rows, cols].sum() == 0)
    return exists, float(distance[rows, cols].max()) if len(rows) else 0.0


def _poly_bound(f: Sequence[float], g: Sequence[float]) -> Tuple[float, float]:
    n = len(f) - 1
    M = max([abs(f[i]) ** (1.0 / i) for i in range(1, n + 1)] +
            [abs(g[i]) ** (1.0 / i) for i in range(1, n + 1)] + [0.0])
    total = sum(abs(g[i] - f[i]) * (2 * M) ** (n - i) for i in range(1, n + 1))
    return 2 * n * total ** (1.0 / n), M


def perturbation_bounds(kind: str, first, second) -> PerturbationBound:
    """
    kind = "poly": coefficient lists [1, a_1, ..., a_n] (monic, equal degree);
        eps = 2n (sum_i |b_i - a_i| (2M)^(n-i))^(1/n), M = max |a_i|^(1/i), |b_i|^(1/i), i >= 1.
    kind = "matrix": square matrices of equal size;
        bound = 2(n+1)^2 M delta^(1/n), M = max |entry|, delta = sum |A - B| / (n M).

    The matching property is verified with a min-cost assignment.

    Raises:
        ParameterError: non-monic polynomials, unequal sizes or unknown kind.
    """
    if kind == "poly":
        f = [float(x) for x in first]
        g = [float(x) for x in second]
        if len(f) != len(g) or len(f) < 2:
            raise ParameterError(f"need equal degree >= 1, got {len(f) - 1} and {len(g) - 1}")
        if f[0] != 1 or g[0] != 1:
            raise ParameterError("polynomials must be monic")
        bound, M = _poly_bound(f, g)
        xs, ys = np.roots(f), np.roots(g)
        matched, deviation = matching_within(xs, ys, bound)
        return PerturbationBound("poly", bound, M, None, matched, deviation)

    if kind == "matrix":
        A = np.asarray(first, dtype=float)
        B = np.asarray(second, dtype=float)
        if A.shape != B.shape or A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ParameterError(f"need equal square matrices, got {A.shape} and {B.shape}")
        n = A.shape[0]
        M = float(max(np.abs(A).max(), np.abs(B).max()))
        if M == 0:
            return PerturbationBound("matrix", 0.0, 0.0, 0.0, True, 0.0)
        delta = float(np.abs(A - B).sum()) / (n * M)
        bound = 2 * (n + 1) ** 2 * M * delta ** (1.0 / n)
        matched, deviation = matching_within(eigvals(A), eigvals(B), bound)
        return PerturbationBound("matrix", bound, M, delta, matched, deviation)

    raise ParameterError(f"unknown kind {kind!r}; expected 'poly' or 'matrix'")
