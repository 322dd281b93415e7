"""
certificates.py
---------------
Motion lower-bound rules. Each rule returns a MotionCertificate (a bound
on the minimum number of points moved by a non-identity automorphism, plus
the rule name and its inputs) or a NotApplicable naming the failed
precondition.

Rounding: rules that bound the number of distinguishing (hence moved)
vertices from below round up; rules that bound the number of fixed points
from above round that count down (with a 1e-9 allowance against float noise)
and subtract it from n.

Usage:
    from motion.certificates import bound_from_distinguishing, spectral_bound
    cert = bound_from_distinguishing(cfg)
    print(cert.bound, cert.rule)

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.coherence import (ConsistencyError, StructureConstants, color_distance,
                            max_color_distance, structure_constants)
from core.configuration import Configuration
from core.results import NotApplicable, jsonable
from drg.bounds import ParameterError
from drg.intersection_array import IntersectionArray
from drg.spectrum import adjacency_spectrum

logger = logging.getLogger(__name__)

FLOOR_ALLOWANCE = 1e-9

RULES = (
    "distinguishing",
    "color-propagation",
    "spectral",
    "bipartite-spectral",
    "primitive-drg",
    "bounded-degree",
    "sun-wilmes",
    "exceptional-family",
)


class IrregularGraphError(Exception):
    """Raised when a rule needs a regular graph."""


class NotBipartiteError(Exception):
    """Raised when a graph is not bipartite with two equal parts."""


class MotionCertificate:
    """A lower bound on motion with the rule and inputs that produced it."""

    def __init__(self, n: int, bound: int, rule: str, inputs: Optional[Dict[str, Any]] = None,
                 family: Optional[str] = None, all_rules: Optional[List[Dict]] = None):
        if rule not in RULES:
            raise ValueError(f"unknown rule {rule!r}")
        bound = max(0, int(bound))
        if bound > n:
            logger.warning(f"{rule}: bound {bound} exceeds n = {n}; clamped")
            bound = n
        self.n = n
        self.bound = bound
        self.rule = rule
        self.inputs = inputs or {}
        self.family = family
        self.all_rules = all_rules or []

    def to_dict(self) -> Dict:
        result = {
            "n": self.n,
            "bound": self.bound,
            "rule": self.rule,
            "inputs": jsonable(self.inputs),
            "all_rules": jsonable(self.all_rules),
        }
        if self.family is not None:
            result["family"] = self.family
        return result

    def __repr__(self) -> str:
        return f"MotionCertificate(bound={self.bound}, rule={self.rule}, n={self.n})"


def _ceil(value: Fraction) -> int:
    return math.ceil(value)


def _fixed_point_bound(n: int, fixed: float) -> int:
    return max(0, n - int(math.floor(fixed + FLOOR_ALLOWANCE)))


# =============================================================================
# DISTINGUISHING NUMBERS
# =============================================================================

class DistinguishingNumbers:
    """D(u, v) for every pair; per color when the input is homogeneous coherent."""

    def __init__(self, pairs: np.ndarray, per_color: Optional[Dict[int, int]]):
        self.pairs = pairs
        self.per_color = per_color

    @property
    def d_min(self) -> Optional[int]:
        n = self.pairs.shape[0]
        if n < 2:
            return None
        return int(self.pairs[~np.eye(n, dtype=bool)].min())

    def to_dict(self) -> Dict:
        result = {"d_min": self.d_min}
        if self.per_color is not None:
            result["per_color"] = {str(i): d for i, d in sorted(self.per_color.items())}
        return result


def distinguishing_numbers(cfg: Configuration,
                           sc: Optional[StructureConstants] = None) -> DistinguishingNumbers:
    """
    D(u, v) = |{x : c(x, u) != c(x, v)}|.

    Raises:
        ConsistencyError: homogeneous coherent input where D varies within a color.
    """
    colors = cfg.colors.astype(np.int64)
    n = cfg.n
    pairs = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        row = colors[x]
        pairs += row[:, None] != row[None, :]

    per_color = None
    if sc is None and cfg.is_homogeneous:
        result = structure_constants(cfg)
        sc = result if isinstance(result, StructureConstants) else None
    if sc is not None and cfg.is_homogeneous:
        per_color = {}
        for i in cfg.off_diagonal_colors:
            values = np.unique(pairs[colors == i])
            if len(values) != 1:
                raise ConsistencyError(f"D is not constant on color {i}: {values.tolist()}")
            per_color[i] = int(values[0])
    return DistinguishingNumbers(pairs, per_color)


def bound_from_distinguishing(cfg: Configuration,
                              numbers: Optional[DistinguishingNumbers] = None) -> MotionCertificate:
    """
    Every vertex distinguishing u from v is moved by an automorphism sending
    u to v, so motion >= D_min.

    With per-color values, D(j) >= D(i) / dist_j(i) for every j; the
    propagated bound max_i ceil(D(i) / max_j dist_j(i)) over colors every
    constituent reaches is recorded next to D_min and never exceeds it.
    """
    if numbers is None:
        numbers = distinguishing_numbers(cfg)
    d_min = numbers.d_min
    if d_min is None:
        return MotionCertificate(cfg.n, 0, "distinguishing", {"d_min": None})

    inputs: Dict[str, Any] = {"d_min": d_min}
    if numbers.per_color:
        inputs["per_color"] = {str(i): d for i, d in sorted(numbers.per_color.items())}
        result = structure_constants(cfg)
        if isinstance(result, StructureConstants):
            propagated = {}
            for i, d_i in numbers.per_color.items():
                reach = [color_distance(result, j, i) for j in result.off_diagonal_colors]
                if all(r is not None for r in reach):
                    propagated[str(i)] = _ceil(Fraction(d_i, max(reach)))
            if propagated:
                inputs["propagated"] = propagated
                if max(propagated.values()) > d_min:
                    logger.warning(f"Propagated bound {propagated} exceeds D_min = {d_min}")
    logger.info(f"Distinguishing bound: D_min = {d_min}")
    return MotionCertificate(cfg.n, d_min, "distinguishing", inputs)


def color_propagation_bound(sc: StructureConstants, i: int, d_i: int,
                            n: int) -> Union[MotionCertificate, NotApplicable]:
    """ceil(D(i) / max_j dist_j(i)) from the distinguishing number of one color."""
    reach = [color_distance(sc, j, i) for j in sc.off_diagonal_colors]
    if any(r is None for r in reach):
        return NotApplicable("color-propagation", "every constituent reaches color i", None, i)
    worst = max(reach) if reach else 1
    bound = _ceil(Fraction(d_i, worst))
    return MotionCertificate(n, bound, "color-propagation", {"color": i, "D": d_i, "max_dist": worst})


# =============================================================================
# SPECTRAL
# =============================================================================

def _regular_degree(graph: nx.Graph) -> int:
    degrees = {d for _, d in graph.degree()}
    if len(degrees) != 1:
        raise IrregularGraphError(f"degrees {sorted(degrees)}")
    return degrees.pop()


def max_common_neighbors(graph: nx.Graph) -> int:
    """q: max common neighbors over distinct pairs (the pair itself excluded)."""
    A = nx.to_numpy_array(graph, nodelist=sorted(graph.nodes()), dtype=np.int64)
    common = A @ A
    np.fill_diagonal(common, 0)
    return int(common.max()) if A.shape[0] > 1 else 0


def spectral_bound(graph: nx.Graph) -> Union[MotionCertificate, NotApplicable]:
    """
    A non-identity automorphism of a connected k-regular graph fixes at most
    n(q + xi)/k points; bound = max(0, n - floor(n(q + xi)/k)).

    Raises:
        IrregularGraphError: the graph is not regular.
    """
    n = graph.number_of_nodes()
    k = _regular_degree(graph)
    if k == 0 or not nx.is_connected(graph):
        return NotApplicable("spectral", "connected with k > 0", k, 0)
    xi = adjacency_spectrum(graph).xi
    q = max_common_neighbors(graph)
    fixed = n * (q + xi) / k
    bound = _fixed_point_bound(n, fixed)
    return MotionCertificate(n, bound, "spectral", {"k": k, "q": q, "xi": xi, "fixed_points": fixed})


def bipartite_spectral_bound(graph: nx.Graph) -> MotionCertificate:
    """
    Connected k-regular bipartite graph with equal parts: at most
    n(k + |lambda2| + q)/(2k) fixed points.

    Raises:
        IrregularGraphError: the graph is not regular.
        NotBipartiteError: not bipartite, disconnected or unbalanced.
    """
    n = graph.number_of_nodes()
    if n == 0 or not nx.is_connected(graph) or not nx.is_bipartite(graph):
        raise NotBipartiteError("graph is not connected bipartite")
    left, right = nx.bipartite.sets(graph)
    if len(left) != len(right):
        raise NotBipartiteError(f"parts of size {len(left)} and {len(right)}")
    k = _regular_degree(graph)
    second = adjacency_spectrum(graph).second_largest
    lambda2 = abs(second) if second is not None else 0.0
    q = max_common_neighbors(graph)
    fixed = n * (k + lambda2 + q) / (2 * k)
    bound = _fixed_point_bound(n, fixed)
    return MotionCertificate(n, bound, "bipartite-spectral",
                             {"k": k, "lambda2": lambda2, "q": q, "fixed_points": fixed})


# =============================================================================
# DISTANCE-REGULAR AND BOUNDED DEGREE
# =============================================================================

def primitive_drg_bound(array: IntersectionArray) -> Union[MotionCertificate, NotApplicable]:
    """
    Each pair is distinguished by at least 2 min(alpha, beta)(n - 1)/d^2
    vertices, where b_j = alpha k and c_{j+1} = beta k for the j maximizing
    min(alpha, beta) (j >= 1 when d >= 2).
    """
    if not array.is_primitive():
        return NotApplicable("primitive-drg", "array is primitive", False, True)
    k, d, n = array.k, array.d, array.n
    choices = range(1, d) if d >= 2 else range(0, 1)
    best_j, best = None, Fraction(-1)
    for j in choices:
        alpha = Fraction(array.b_(j), k)
        beta = Fraction(array.c_(j + 1), k)
        if min(alpha, beta) > best:
            best_j, best = j, min(alpha, beta)
    alpha = Fraction(array.b_(best_j), k)
    beta = Fraction(array.c_(best_j + 1), k)
    bound = _ceil(2 * best * (n - 1) / (d * d))
    logger.info(f"Primitive DRG bound: j={best_j}, alpha={alpha}, beta={beta} -> {bound}")
    return MotionCertificate(n, bound, "primitive-drg",
                             {"array": str(array), "j": best_j, "alpha": alpha, "beta": beta, "d": d})


def _exact_fraction(value) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return Fraction(value).limit_denominator(10 ** 9)


def bounded_degree_bound(sc: StructureConstants, delta) -> Union[MotionCertificate, NotApplicable]:
    """
    Primitive coherent configuration with every k_i <= delta n:
    bound = ceil(min(delta, 1 - delta) n / (6(r - 1))).
    """
    delta = _exact_fraction(delta)
    if not sc.is_homogeneous:
        return NotApplicable("bounded-degree", "homogeneous", len(sc.diagonal_colors), 1)
    if not 0 < delta < 1:
        return NotApplicable("bounded-degree", "0 < delta < 1", delta, None)
    for i in sc.off_diagonal_colors:
        if max_color_distance(sc, i) is None:
            return NotApplicable("bounded-degree", f"primitive (constituent {i} connected)", None, i)
    n, r = sc.n, sc.p.shape[0]
    for i in sc.off_diagonal_colors:
        if sc.k(i) > delta * n:
            return NotApplicable("bounded-degree", f"k_{i} <= delta n", sc.k(i), delta * n)
    if r < 2:
        return NotApplicable("bounded-degree", "rank >= 2", r, 2)
    bound = _ceil(min(delta, 1 - delta) * n / (6 * (r - 1)))
    return MotionCertificate(n, bound, "bounded-degree", {"delta": delta, "rank": r})


# =============================================================================
# ORDER AND THICKNESS
# =============================================================================

def order_and_thickness_bounds(n: int, d_min: int, alpha: float) -> Dict[str, Any]:
    """
    ln|Aut| <= (1 + 2n ln(n)/D_min) ln(n), and thickness
    <= 3 (1 - alpha)^(-1/3) ln(n) / ln(1/(1 - alpha)).

    Raises:
        ParameterError: D_min < 1 or alpha outside (0, 1).
    """
    if d_min < 1:
        raise ParameterError(f"D_min must be >= 1, got {d_min}")
    if not 0 < alpha < 1:
        raise ParameterError(f"alpha must lie in (0, 1), got {alpha}")
    ln_n = math.log(n) if n > 1 else 0.0
    log_order = (1 + 2 * n * ln_n / d_min) * ln_n

    thickness: Union[float, str]
    gap = 1 - alpha
    try:
        thickness = 3 * gap ** (-1 / 3) / math.log(1 / gap) * ln_n
    except (ZeroDivisionError, OverflowError, ValueError):
        thickness = "unbounded"
    if isinstance(thickness, float) and (math.isinf(thickness) or math.isnan(thickness)):
        thickness = "unbounded"
    return {
        "log_order": log_order,
        "log10_order": log_order / math.log(10),
        "thickness": thickness,
    }
