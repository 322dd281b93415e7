"""
analysis.py
-----------
Rank-4 association schemes: the constituent eigenvalue cubic, approximate
zero-weight spectral radius bounds, the diameter-2 distinguishing bound and
the parameter / triangle inequalities.

Every operation first relabels the scheme so the diagonal color is 0 and
the other colors are ordered by degree (ties by color id); the permutation
used is kept on the result.

Notation: p(s, i, j) below is p_{i,j}^s = sc.p[i, j, s].

Usage:
    from rank4.analysis import constituent_cubic, diam2_distinguishing_bound
    coeffs = constituent_cubic(sc, 1)

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from scipy.linalg import eigvalsh

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from core.coherence import StructureConstants, max_color_distance
from core.configuration import Configuration
from core.results import Inequality, NotApplicable, jsonable
from drg.bounds import ParameterError
from geometry.recognition import seidel_recognize, strongly_regular_parameters

logger = logging.getLogger(__name__)

SLACK_FACTOR = 25


def _exact(value: float) -> Fraction:
    return Fraction(str(value)) if isinstance(value, float) else Fraction(value)


# =============================================================================
# RELABELING
# =============================================================================

def degree_order(sc: StructureConstants, first: Optional[int] = None) -> np.ndarray:
    """
    perm[old color] = new color: diagonal -> 0, then off-diagonal colors by
    (degree, id). With `first` given, that color becomes 1 and the rest follow.
    """
    if sc.rank != 4:
        raise ParameterError(f"rank-4 analysis needs rank 4, got {sc.rank}")
    if not sc.is_homogeneous:
        raise ParameterError("rank-4 analysis needs a homogeneous scheme")
    others = sorted(sc.off_diagonal_colors, key=lambda i: (sc.k(i), i))
    if first is not None:
        if first not in others:
            raise ParameterError(f"color {first} is not an off-diagonal color")
        others.remove(first)
        others.insert(0, first)
    perm = np.zeros(sc.rank, dtype=np.int64)
    perm[sc.diagonal_colors[0]] = 0
    for new, old in enumerate(others, start=1):
        perm[old] = new
    return perm


def ordered(sc: StructureConstants, first: Optional[int] = None,
            symmetric: bool = True) -> Tuple[StructureConstants, np.ndarray]:
    perm = degree_order(sc, first)
    if symmetric and not sc.is_association_scheme:
        raise ParameterError("rank-4 analysis needs an association scheme (symmetric colors)")
    return sc.relabel(perm), perm


def _p(sc: StructureConstants):
    def p(s: int, i: int, j: int) -> int:
        return int(sc.p[i, j, s])
    return p


# =============================================================================
# CUBIC
# =============================================================================

def constituent_cubic(sc: StructureConstants, i: int = 1) -> Tuple[int, int, int, int]:
    """
    Monic cubic whose roots include every nontrivial eigenvalue of A_i
    (color i playing the role of color 1):

        eta^3 - (p111 + p212 - p311 - p312) eta^2
              + ((p212 - p312)(p111 - p311) - (p211 - p311)(p112 - p312) - (k1 - p311)) eta
              + (p212 - p312)(k1 - p311) + (p211 - p311) p312

    with pSij = p_{i,j}^S.

    Raises:
        ParameterError: rank != 4 or not an association scheme.
    """
    rel, _ = ordered(sc, first=i)
    p = _p(rel)
    k1 = rel.k(1)
    a2 = -(p(1, 1, 1) + p(2, 1, 2) - p(3, 1, 1) - p(3, 1, 2))
    a1 = ((p(2, 1, 2) - p(3, 1, 2)) * (p(1, 1, 1) - p(3, 1, 1))
          - (p(2, 1, 1) - p(3, 1, 1)) * (p(1, 1, 2) - p(3, 1, 2))
          - (k1 - p(3, 1, 1)))
    a0 = (p(2, 1, 2) - p(3, 1, 2)) * (k1 - p(3, 1, 1)) + (p(2, 1, 1) - p(3, 1, 1)) * p(3, 1, 2)
    return 1, a2, a1, a0


def nontrivial_eigenvalues(cfg: Configuration, colors: Sequence[int]) -> List[float]:
    """Eigenvalues of the constituent of `colors`, one copy of the degree removed."""
    matrix = cfg.constituent(colors).astype(float)
    values = sorted(eigvalsh(matrix).tolist(), reverse=True)
    return values[1:]


def zero_weight_radius(cfg: Configuration, colors: Sequence[int]) -> float:
    rest = nontrivial_eigenvalues(cfg, colors)
    return max(abs(v) for v in rest) if rest else 0.0


def cubic_residuals(cfg: Configuration, sc: StructureConstants, i: int) -> Dict:
    """Evaluate the cubic at every nontrivial eigenvalue of A_i."""
    coeffs = constituent_cubic(sc, i)
    values = nontrivial_eigenvalues(cfg, [i])
    residuals = [abs(float(np.polyval(coeffs, eta))) for eta in values]
    tolerance = config.CUBIC_RESIDUAL_TOL * max(1, sc.k(i)) ** 3
    worst = max(residuals) if residuals else 0.0
    return {
        "color": i,
        "coefficients": list(coeffs),
        "eigenvalues": [round(v, 12) for v in values],
        "max_residual": worst,
        "tolerance": tolerance,
        "ok": worst <= tolerance,
    }


# =============================================================================
# SPECTRAL RADIUS BOUNDS
# =============================================================================

class SpectralRadiusBound:
    """Upper bound on a zero-weight spectral radius: core + slack, clamped to [0, degree]."""

    def __init__(self, name: str, core: float, slack: float, degree: int,
                 epsilon: float, perm: np.ndarray):
        self.name = name
        self.core = core
        self.slack = slack
        self.raw = core + slack
        self.bound = min(max(self.raw, 0.0), float(degree))
        self.degree = degree
        self.epsilon = epsilon
        self.perm = [int(x) for x in perm]

    def to_dict(self) -> Dict:
        return {
            "name": self.name, "bound": self.bound, "raw": self.raw, "core": self.core,
            "slack": self.slack, "degree": self.degree, "epsilon": self.epsilon,
            "relabeling": self.perm,
        }


def constituent_core(p111: int, p212: int, p211: int, p112: int) -> float:
    return (p111 + p212 + math.sqrt((p111 - p212) ** 2 + 4 * p211 * p112)) / 2


def merged_core(p111: int, p212: int, p222: int, p122: int) -> float:
    return (p111 + p212 + p222 + math.sqrt((p222 + p212 - p111) ** 2 + 4 * p212 * p122)) / 2


def _first_failure(rule: str, checks: List[Tuple[str, Fraction, Fraction]]) -> Optional[NotApplicable]:
    for condition, lhs, rhs in checks:
        if lhs > rhs:
            return NotApplicable(rule, condition, lhs, rhs)
    return None


def constituent_spectral_bound(sc: StructureConstants, epsilon: float) -> Union[SpectralRadiusBound, NotApplicable]:
    """
    xi(X_1) <= (p111 + p212 + sqrt((p111 - p212)^2 + 4 p211 p112)) / 2 + 25 eps^(1/3) k1
    when 1/eps <= k1 and p3_{1,i} <= eps k1 for i = 1, 2.
    """
    rel, perm = ordered(sc)
    p = _p(rel)
    k1 = rel.k(1)
    eps = _exact(epsilon)
    failure = _first_failure("constituent-spectral", [
        ("1/eps <= k1", 1 / eps, Fraction(k1)),
        ("p_{1,1}^3 <= eps k1", Fraction(p(3, 1, 1)), eps * k1),
        ("p_{1,2}^3 <= eps k1", Fraction(p(3, 1, 2)), eps * k1),
    ])
    if failure is not None:
        return failure
    core = constituent_core(p(1, 1, 1), p(2, 1, 2), p(2, 1, 1), p(1, 1, 2))
    slack = SLACK_FACTOR * epsilon ** (1.0 / 3) * k1
    return SpectralRadiusBound("xi(X_1)", core, slack, k1, epsilon, perm)


def merged_spectral_bound(sc: StructureConstants, epsilon: float) -> Union[SpectralRadiusBound, NotApplicable]:
    """
    xi(X_{1,2}) <= (p111 + p212 + p222 + sqrt((p222 + p212 - p111)^2 + 4 p212 p122)) / 2
                   + 25 eps^(1/3) (k1 + k2)
    when 1/eps <= k1, p2_{1,1} <= eps k1 and p3_{i,j} <= eps min(k_i, k_j) for {i,j} = {1,2}.
    """
    rel, perm = ordered(sc)
    p = _p(rel)
    k1, k2 = rel.k(1), rel.k(2)
    eps = _exact(epsilon)
    failure = _first_failure("merged-spectral", [
        ("1/eps <= k1", 1 / eps, Fraction(k1)),
        ("p_{1,1}^2 <= eps k1", Fraction(p(2, 1, 1)), eps * k1),
        ("p_{1,2}^3 <= eps min(k1,k2)", Fraction(p(3, 1, 2)), eps * min(k1, k2)),
        ("p_{2,1}^3 <= eps min(k1,k2)", Fraction(p(3, 2, 1)), eps * min(k1, k2)),
    ])
    if failure is not None:
        return failure
    core = merged_core(p(1, 1, 1), p(2, 1, 2), p(2, 2, 2), p(1, 2, 2))
    slack = SLACK_FACTOR * epsilon ** (1.0 / 3) * (k1 + k2)
    return SpectralRadiusBound("xi(X_{1,2})", core, slack, k1 + k2, epsilon, perm)


# =============================================================================
# DIAMETER 2
# =============================================================================

def scheme_diameter(sc: StructureConstants) -> Optional[int]:
    """max_i max_j dist_i(j); None when some constituent is disconnected."""
    worst = 0
    for i in sc.off_diagonal_colors:
        reach = max_color_distance(sc, i)
        if reach is None:
            return None
        worst = max(worst, reach)
    return worst


class Diam2Bound:
    def __init__(self, bound: int, gamma: Fraction, n: int, degrees: List[int], perm: np.ndarray):
        self.bound = bound
        self.gamma = gamma
        self.n = n
        self.degrees = degrees
        self.perm = [int(x) for x in perm]

    def to_dict(self) -> Dict:
        return {
            "bound": self.bound, "gamma": jsonable(self.gamma), "gamma_float": float(self.gamma),
            "n": self.n, "degrees": self.degrees, "relabeling": self.perm,
        }


def diam2_distinguishing_bound(sc: StructureConstants) -> Union[Diam2Bound, NotApplicable]:
    """
    Every pair is distinguished by at least gamma (n-1)/6 vertices, with
    gamma = min(1, k2/k3) for constituents ordered by degree.
    """
    if sc.rank != 4:
        return NotApplicable("rank4-diam2", "rank = 4", sc.rank, 4)
    if not sc.is_association_scheme:
        return NotApplicable("rank4-diam2", "association scheme", False, True)
    rel, perm = ordered(sc)
    diameter = scheme_diameter(rel)
    if diameter != 2:
        return NotApplicable("rank4-diam2", "scheme diameter = 2", diameter, 2)
    k2, k3 = rel.k(2), rel.k(3)
    gamma = min(Fraction(1), Fraction(k2, k3))
    bound = math.ceil(gamma * (rel.n - 1) / 6)
    logger.info(f"Rank-4 diameter-2 bound: gamma = {gamma}, bound {bound}")
    return Diam2Bound(bound, gamma, rel.n, [rel.k(i) for i in range(4)], perm)


# =============================================================================
# PARAMETER INEQUALITIES
# =============================================================================

class ParamInequalityReport:
    """
    Precondition max(k1,k2) <= (eps/2) k3, the inequalities it implies, and
    the triangle inequalities that hold for every association scheme.
    """

    def __init__(self, epsilon: float, perm: np.ndarray):
        self.epsilon = epsilon
        self.perm = [int(x) for x in perm]
        self.precondition: Optional[Inequality] = None
        self.asserted = False
        self.implied: List[Inequality] = []
        self.triangle: List[Inequality] = []

    @property
    def violations(self) -> List[Inequality]:
        found = [q for q in self.triangle if not q.holds]
        if self.asserted:
            found += [q for q in self.implied if not q.holds]
        return found

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict:
        return {
            "epsilon": self.epsilon,
            "relabeling": self.perm,
            "precondition": self.precondition.to_dict() if self.precondition else None,
            "asserted": self.asserted,
            "consistent": self.consistent,
            "implied": [q.to_dict() for q in self.implied],
            "triangle_checked": len(self.triangle),
            "violations": [q.to_dict() for q in self.violations],
        }


def triangle_inequalities(sc: StructureConstants) -> List[Inequality]:
    """
    For every triangle with sides (s, r, t) (p_{s,r}^t > 0) and all i, j, l:
    p_{i,j}^s + p_{j,l}^r <= k_j + p_{i,l}^t.
    """
    rows = []
    colors = range(sc.rank)
    for s in sc.off_diagonal_colors:
        for r in sc.off_diagonal_colors:
            for t in sc.off_diagonal_colors:
                if sc.p[s, r, t] == 0:
                    continue
                for i in colors:
                    for j in colors:
                        for l in colors:
                            lhs = int(sc.p[i, j, s] + sc.p[j, l, r])
                            rhs = sc.k(j) + int(sc.p[i, l, t])
                            rows.append(Inequality(f"triangle(s={s},r={r},t={t};i={i},j={j},l={l})",
                                                   lhs, rhs, lhs <= rhs))
    return rows


def param_inequalities(sc: StructureConstants, epsilon: float) -> Union[ParamInequalityReport, NotApplicable]:
    """
    Evaluate max(k1,k2) <= (eps/2) k3; when it holds, every implied inequality
    is asserted:

    - p3_{1,2} <= eps k1, p3_{1,1} <= eps k1, p3_{2,2} <= eps k2,
      p1_{3,3} >= (1-eps) k3, p2_{3,3} >= (1-2 eps) k3
    - cor1: p^s_{i,j} <= p^t_{i,3} + eps k_j for triangles (s, 3, t), i, j in {1,2}
    - cor2: p^s_{i,j} <= p^s_{i,3} + eps k_j for i, j, s in {1,2}
    - cor3: 2 p^s_{i,j} <= k_j + eps k_i for i, j, s in {1,2}; 2 p2_{1,2} <= (1+eps) k1

    Triangle inequalities are always checked. A failure of either kind makes
    the report inconsistent. The corollaries only hold at scheme diameter 2;
    other diameters are NotApplicable.
    """
    rel, perm = ordered(sc)
    diameter = scheme_diameter(rel)
    if diameter != 2:
        return NotApplicable("param-inequalities", "scheme diameter = 2", diameter, 2)
    p = _p(rel)
    k = [rel.k(i) for i in range(4)]
    eps = _exact(epsilon)
    report = ParamInequalityReport(epsilon, perm)

    lhs, rhs = Fraction(max(k[1], k[2])), eps / 2 * k[3]
    report.precondition = Inequality("max(k1,k2) <= (eps/2) k3", lhs, rhs, lhs <= rhs)
    report.asserted = report.precondition.holds

    def le(name: str, a, b):
        a, b = Fraction(a), Fraction(b)
        report.implied.append(Inequality(name, a, b, a <= b))

    le("p_{1,2}^3 <= eps k1", p(3, 1, 2), eps * k[1])
    le("p_{1,1}^3 <= eps k1", p(3, 1, 1), eps * k[1])
    le("p_{2,2}^3 <= eps k2", p(3, 2, 2), eps * k[2])
    le("(1-eps) k3 <= p_{3,3}^1", (1 - eps) * k[3], p(1, 3, 3))
    le("(1-2eps) k3 <= p_{3,3}^2", (1 - 2 * eps) * k[3], p(2, 3, 3))
    for s in (1, 2, 3):
        for t in (1, 2, 3):
            if rel.p[s, 3, t] == 0:
                continue
            for i in (1, 2):
                for j in (1, 2):
                    le(f"cor1(s={s},t={t},i={i},j={j})", p(s, i, j), p(t, i, 3) + eps * k[j])
    for s in (1, 2):
        for i in (1, 2):
            for j in (1, 2):
                le(f"cor2(s={s},i={i},j={j})", p(s, i, j), p(s, i, 3) + eps * k[j])
                le(f"cor3(s={s},i={i},j={j})", 2 * p(s, i, j), k[j] + eps * k[i])
    if k[1] <= k[2]:
        le("cor3: 2 p_{1,2}^2 <= (1+eps) k1", 2 * p(2, 1, 2), (1 + eps) * k[1])

    report.triangle = triangle_inequalities(rel)
    if not report.consistent:
        logger.warning(f"Rank-4 parameters inconsistent: {len(report.violations)} violated inequalities")
    else:
        logger.info(f"Rank-4 parameter inequalities: precondition {'holds' if report.asserted else 'fails'}, "
                    f"{len(report.triangle)} triangle checks passed")
    return report


# =============================================================================
# ORIENTED RANK 4
# =============================================================================

def route_oriented(cfg: Configuration) -> Union[Dict, NotApplicable]:
    """
    Homogeneous rank 4 with colors {0, i, i*, j}, i oriented and j symmetric:
    check X_j strongly regular and hand X_j (then its complement X_{i,i*})
    to the Seidel recognizer.
    """
    if cfg.rank != 4 or not cfg.is_homogeneous:
        return NotApplicable("rank4-oriented", "homogeneous rank 4", cfg.rank, 4)
    oriented = cfg.oriented_colors()
    if len(oriented) != 2:
        return NotApplicable("rank4-oriented", "exactly two oriented colors", len(oriented), 2)
    symmetric = [c for c in cfg.off_diagonal_colors if c not in oriented][0]
    graph = cfg.constituent_graph([symmetric])
    parameters = strongly_regular_parameters(graph)
    if parameters is None:
        return NotApplicable("rank4-oriented", f"X_{symmetric} strongly regular", False, True)

    routed: Dict = {
        "symmetric_color": symmetric,
        "oriented_colors": oriented,
        "parameters": list(parameters),
    }
    for key, target in (("symmetric", graph), ("oriented_union", cfg.constituent_graph(oriented))):
        if not nx.is_connected(target):
            routed[key] = NotApplicable("seidel", "connected", False, True).to_dict()
            continue
        result = seidel_recognize(target)
        routed[key] = result.to_dict()
    logger.info(f"Oriented rank 4: X_{symmetric} strongly regular {parameters}")
    return routed
