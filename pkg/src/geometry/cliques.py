"""
cliques.py
----------
Clique geometries: maximal clique enumeration, Metsch line detection,
geometry verification with a PSD witness, and the Delsarte clique bound.

A clique geometry ("lines") is a set of maximal cliques covering every edge
exactly once. With N the vertex-line incidence matrix and D the diagonal of
line counts, N N^T = A + D, so A + mI = N N^T + (mI - D) is PSD whenever no
vertex is on more than m lines.

Usage:
    from geometry.cliques import metsch_lines, verify_clique_geometry
    geometry = metsch_lines(graph, m=2)

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import networkx as nx
import numpy as np
from scipy.linalg import eigvalsh

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from core.results import NotApplicable, jsonable
from drg.bounds import ParameterError

logger = logging.getLogger(__name__)


class CoverError(Exception):
    """Raised when lines do not cover every edge exactly once."""

    def __init__(self, edge: Tuple[int, int], count: int):
        self.edge = edge
        self.count = count
        super().__init__(f"edge {edge} lies on {count} line(s), expected exactly 1")


# =============================================================================
# GRAPH HELPERS
# =============================================================================

def adjacency_matrix(graph: nx.Graph) -> np.ndarray:
    return nx.to_numpy_array(graph, nodelist=sorted(graph.nodes()), dtype=np.int64)


def common_neighbor_range(graph: nx.Graph) -> Dict[str, Optional[int]]:
    """
    min / max common neighbors over adjacent pairs (lambda1, lambda2) and
    max over distinct non-adjacent pairs (mu).
    """
    A = adjacency_matrix(graph)
    common = A @ A
    n = A.shape[0]
    off = ~np.eye(n, dtype=bool)
    adjacent = (A == 1) & off
    apart = (A == 0) & off
    return {
        "lambda1": int(common[adjacent].min()) if adjacent.any() else None,
        "lambda2": int(common[adjacent].max()) if adjacent.any() else None,
        "mu": int(common[apart].max()) if apart.any() else 0,
    }


# =============================================================================
# BRON-KERBOSCH
# =============================================================================

def maximal_cliques(graph: nx.Graph, min_size: int = 1) -> List[Tuple[int, ...]]:
    """
    All maximal cliques with at least min_size vertices.

    Bron-Kerbosch with a pivot maximising |P & N(u)| and the size bound
    |R| + |P| >= min_size; vertices are visited by (degree, id).
    """
    neighbors = {v: set(graph.neighbors(v)) - {v} for v in graph.nodes()}
    position = {v: idx for idx, v in enumerate(sorted(graph.nodes(), key=lambda v: (len(neighbors[v]), v)))}
    found: List[Tuple[int, ...]] = []

    def expand(R: List[int], P: Set[int], X: Set[int]):
        if len(R) + len(P) < min_size:
            return
        if not P and not X:
            found.append(tuple(sorted(R)))
            return
        pivot = max(P | X, key=lambda u: (len(P & neighbors[u]), -position[u]))
        for v in sorted(P - neighbors[pivot], key=position.get):
            expand(R + [v], P & neighbors[v], X & neighbors[v])
            P = P - {v}
            X = X | {v}

    expand([], set(graph.nodes()), set())
    return sorted(found)


# =============================================================================
# GEOMETRY
# =============================================================================

class CliqueGeometry:
    """Lines with per-vertex incidence counts; m is the largest count."""

    def __init__(self, lines: Sequence[Sequence[int]], n: int):
        self.lines = sorted(tuple(sorted(line)) for line in lines)
        self.n = n
        counts = np.zeros(n, dtype=np.int64)
        for line in self.lines:
            counts[list(line)] += 1
        self.incidence = counts

    @property
    def m(self) -> int:
        return int(self.incidence.max()) if self.n else 0

    def incidence_matrix(self) -> np.ndarray:
        N = np.zeros((self.n, len(self.lines)), dtype=np.int64)
        for idx, line in enumerate(self.lines):
            N[list(line), idx] = 1
        return N

    def to_dict(self) -> Dict:
        return {"m": self.m, "lines": [list(line) for line in self.lines]}

    def __repr__(self) -> str:
        return f"CliqueGeometry({len(self.lines)} lines, m={self.m})"


def edge_cover_check(graph: nx.Graph, lines: Sequence[Sequence[int]]):
    """
    Raises:
        CoverError: an edge on 0 or >= 2 lines, or a line pair that is not an edge.
    """
    covered: Dict[Tuple[int, int], int] = {}
    for line in lines:
        line = sorted(line)
        for a_idx, a in enumerate(line):
            for b in line[a_idx + 1:]:
                if not graph.has_edge(a, b):
                    raise CoverError((a, b), 0)
                covered[(a, b)] = covered.get((a, b), 0) + 1
    for u, v in sorted(tuple(sorted(e)) for e in graph.edges()):
        count = covered.get((u, v), 0)
        if count != 1:
            raise CoverError((u, v), count)


def metsch_lines(graph: nx.Graph, lam1: Optional[int] = None, lam2: Optional[int] = None,
                 mu: Optional[int] = None, m: int = 2) -> Union[CliqueGeometry, NotApplicable]:
    """
    Lines of a graph meeting the four conditions for parameters (lam1, lam2, mu, m):

    (1) adjacent pairs have between lam1 and lam2 common neighbors
    (2) non-adjacent pairs have at most mu common neighbors
    (3) 2 lam1 - lam2 > (2m - 1)(mu - 1) - 1
    (4) every degree < (m + 1)(lam1 + 1) - m(m + 1)(mu - 1)/2

    A line is a maximal clique of size >= lam1 + 2 - (m - 1)(mu - 1).
    Omitted parameters are read off the graph (mu at least 1).

    Raises:
        ParameterError: supplied parameters contradict (1) or (2), or the graph is disconnected.
        CoverError: the lines found do not cover every edge exactly once.
    """
    if graph.number_of_nodes() == 0 or not nx.is_connected(graph):
        raise ParameterError("metsch_lines needs a connected graph")
    actual = common_neighbor_range(graph)
    lam1 = actual["lambda1"] if lam1 is None else lam1
    lam2 = actual["lambda2"] if lam2 is None else lam2
    mu = max(1, actual["mu"]) if mu is None else mu
    if actual["lambda1"] is not None and lam1 > actual["lambda1"]:
        raise ParameterError(f"lambda1 = {lam1} exceeds the smallest adjacent common-neighbor count {actual['lambda1']}")
    if actual["lambda2"] is not None and lam2 < actual["lambda2"]:
        raise ParameterError(f"lambda2 = {lam2} is below the largest adjacent common-neighbor count {actual['lambda2']}")
    if mu < actual["mu"] or mu < 1:
        raise ParameterError(f"mu = {mu} is below the largest non-adjacent common-neighbor count {actual['mu']} (or < 1)")

    lhs3, rhs3 = 2 * lam1 - lam2, (2 * m - 1) * (mu - 1) - 1
    if not lhs3 > rhs3:
        return NotApplicable("metsch", "condition (3): 2 lam1 - lam2 > (2m-1)(mu-1) - 1", lhs3, rhs3)
    max_degree = max(d for _, d in graph.degree())
    rhs4 = Fraction((m + 1) * (lam1 + 1)) - Fraction(m * (m + 1) * (mu - 1), 2)
    if not max_degree < rhs4:
        return NotApplicable("metsch", "condition (4): degree < (m+1)(lam1+1) - m(m+1)(mu-1)/2", max_degree, rhs4)

    threshold = lam1 + 2 - (m - 1) * (mu - 1)
    lines = maximal_cliques(graph, min_size=max(2, threshold))
    geometry = CliqueGeometry(lines, graph.number_of_nodes())
    edge_cover_check(graph, geometry.lines)
    if geometry.m > m:
        logger.warning(f"Metsch lines: a vertex is on {geometry.m} > {m} lines")
    logger.info(f"Metsch lines (m={m}): {len(lines)} lines of size >= {threshold}")
    return geometry


class GeometryCheck:
    def __init__(self):
        self.m = 0
        self.uniform = False
        self.line_count = 0
        self.mu = 0
        self.mu_bound = 0
        self.mu_bound_ok = False
        self.mu_bound_d3: Optional[int] = None
        self.mu_bound_d3_ok: Optional[bool] = None
        self.psd_min_eigenvalue = 0.0
        self.psd_witness = False
        self.theta_min = 0.0
        self.geometric = False

    def to_dict(self) -> Dict:
        return {
            "m": self.m,
            "uniform": self.uniform,
            "line_count": self.line_count,
            "mu": self.mu,
            "mu_bound": self.mu_bound,
            "mu_bound_ok": self.mu_bound_ok,
            "mu_bound_d3": self.mu_bound_d3,
            "mu_bound_d3_ok": self.mu_bound_d3_ok,
            "psd_min_eigenvalue": self.psd_min_eigenvalue,
            "psd_witness": self.psd_witness,
            "theta_min": self.theta_min,
            "geometric": self.geometric,
        }


def verify_clique_geometry(graph: nx.Graph, lines: Sequence[Sequence[int]],
                           diameter: Optional[int] = None) -> GeometryCheck:
    """
    Check a clique geometry.

    Reports m, mu <= m^2 (and mu <= (m-1)^2 when `diameter` >= 3 is given for
    a distance-regular graph), and the PSD witness min eig(N N^T + mI - D) >= -PSD_TOL.
    `geometric` means every vertex is on exactly m lines and there are fewer
    lines than vertices.

    Raises:
        CoverError: an edge covered 0 or >= 2 times.
    """
    edge_cover_check(graph, lines)
    n = graph.number_of_nodes()
    geometry = CliqueGeometry(lines, n)
    check = GeometryCheck()
    check.m = geometry.m
    check.uniform = bool((geometry.incidence == geometry.m).all())
    check.line_count = len(geometry.lines)
    check.mu = common_neighbor_range(graph)["mu"]
    check.mu_bound = check.m ** 2
    check.mu_bound_ok = check.mu <= check.mu_bound
    if diameter is not None and diameter >= 3:
        check.mu_bound_d3 = (check.m - 1) ** 2
        check.mu_bound_d3_ok = check.mu <= check.mu_bound_d3

    N = geometry.incidence_matrix().astype(float)
    witness = N @ N.T + np.diag(check.m - geometry.incidence.astype(float))
    check.psd_min_eigenvalue = float(eigvalsh(witness).min()) if n else 0.0
    check.psd_witness = check.psd_min_eigenvalue >= -config.PSD_TOL
    check.theta_min = float(eigvalsh(adjacency_matrix(graph).astype(float)).min()) if n else 0.0
    check.geometric = check.uniform and check.line_count < n
    logger.info(f"Clique geometry: {check.line_count} lines, m={check.m}, "
                f"PSD min eigenvalue {check.psd_min_eigenvalue:.3g}")
    return check


def _exact_eigenvalue(theta) -> Fraction:
    if isinstance(theta, (int, Fraction)):
        return Fraction(theta)
    nearest = round(theta)
    if abs(theta - nearest) <= config.EIGEN_ZERO_TOL:
        return Fraction(nearest)
    return Fraction(theta).limit_denominator(10 ** 6)


def delsarte_clique_bound(k: int, theta_min) -> Fraction:
    """
    1 - k / theta_min.

    Raises:
        ParameterError: theta_min >= 0.
    """
    theta = _exact_eigenvalue(theta_min)
    if theta >= 0:
        raise ParameterError(f"Delsarte bound needs theta_min < 0, got {theta_min}")
    return 1 - Fraction(k) / theta


def delsarte_cliques(graph: nx.Graph, k: int, theta_min) -> List[Tuple[int, ...]]:
    """Maximal cliques attaining the Delsarte bound (empty when it is not an integer)."""
    bound = delsarte_clique_bound(k, theta_min)
    if bound.denominator != 1:
        return []
    size = int(bound)
    return [c for c in maximal_cliques(graph, min_size=size) if len(c) == size]


def clique_number(graph: nx.Graph) -> int:
    return max((len(c) for c in maximal_cliques(graph)), default=0)
