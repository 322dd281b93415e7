"""
coherence.py
------------
Structure constants p_{i,j}^t, coherence violations, classification
(homogeneous / association scheme / primitive / diameter) and color
distances dist_i(j).

All counting is done in exact integers; there is no floating point here.

Usage:
    from core.coherence import structure_constants, classify
    sc = structure_constants(cfg)
    report = classify(cfg, sc)

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import sys
from collections import deque
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.configuration import Configuration

logger = logging.getLogger(__name__)


class ConsistencyError(Exception):
    """Raised when data claimed to be coherent fails an internal identity."""
    pass


class StructureConstants:
    """
    Intersection numbers of a coherent configuration.

    p[i, j, t] = number of w with c(u,w)=i and c(w,v)=j, for any (u,v) of color t.
    """

    def __init__(self, p: np.ndarray, n: int,
                 diagonal_colors: Sequence[int] = (0,),
                 pairing: Optional[Sequence[int]] = None):
        self.p = np.asarray(p, dtype=np.int64)
        self.p.setflags(write=False)
        self.n = int(n)
        self.rank = self.p.shape[0]
        self.diagonal_colors = tuple(int(d) for d in diagonal_colors)
        self.pairing = tuple(int(x) for x in pairing) if pairing is not None else tuple(range(self.rank))
        self.source_fiber = self._fibers(source=True)
        self.target_fiber = self._fibers(source=False)
        self.out_degrees = np.array(
            [self.p[i, self.pairing[i], self.source_fiber[i]] for i in range(self.rank)], dtype=np.int64)
        self.in_degrees = np.array(
            [self.out_degrees[self.pairing[i]] for i in range(self.rank)], dtype=np.int64)

    def _fibers(self, source: bool) -> List[int]:
        # c(u,u) is the unique diagonal d with p_{d,i}^i = 1 (w = u); symmetric for targets
        fibers = []
        for i in range(self.rank):
            found = self.diagonal_colors[0] if self.diagonal_colors else 0
            for d in self.diagonal_colors:
                value = self.p[d, i, i] if source else self.p[i, d, i]
                if value == 1:
                    found = d
                    break
            fibers.append(found)
        return fibers

    @property
    def degrees(self) -> np.ndarray:
        """k_i (out-degree); equals the in-degree of i* ."""
        return self.out_degrees

    def k(self, i: int) -> int:
        return int(self.out_degrees[i])

    @property
    def off_diagonal_colors(self) -> Tuple[int, ...]:
        diag = set(self.diagonal_colors)
        return tuple(i for i in range(self.rank) if i not in diag)

    @property
    def is_homogeneous(self) -> bool:
        return len(self.diagonal_colors) == 1

    @property
    def is_association_scheme(self) -> bool:
        return self.is_homogeneous and all(self.pairing[i] == i for i in range(self.rank))

    def relabel(self, perm: Sequence[int]) -> "StructureConstants":
        """Rename color i to perm[i]."""
        perm = np.asarray(perm, dtype=np.int64)
        inverse = np.argsort(perm)
        p = self.p[np.ix_(inverse, inverse, inverse)]
        pairing = [int(perm[self.pairing[int(inverse[c])]]) for c in range(self.rank)]
        diagonal = sorted(int(perm[d]) for d in self.diagonal_colors)
        return StructureConstants(p, self.n, diagonal, pairing)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "diagonal_colors": list(self.diagonal_colors),
            "pairing": list(self.pairing),
            "degrees": self.out_degrees.tolist(),
            "p": self.p.tolist(),
        }

    def __repr__(self) -> str:
        return f"StructureConstants(n={self.n}, rank={self.rank}, degrees={self.out_degrees.tolist()})"


class CoherenceViolation:
    """Two pairs of color t whose (i, j) counts differ."""

    def __init__(self, i: int, j: int, t: int,
                 pair_a: Tuple[int, int], count_a: int,
                 pair_b: Tuple[int, int], count_b: int):
        self.i = i
        self.j = j
        self.t = t
        self.pair_a = pair_a
        self.count_a = count_a
        self.pair_b = pair_b
        self.count_b = count_b

    def to_dict(self) -> Dict:
        return {
            "i": self.i, "j": self.j, "t": self.t,
            "pairs": [list(self.pair_a), list(self.pair_b)],
            "counts": [self.count_a, self.count_b],
        }

    def __repr__(self) -> str:
        return (f"CoherenceViolation(i={self.i}, j={self.j}, t={self.t}: "
                f"{self.pair_a}->{self.count_a} vs {self.pair_b}->{self.count_b})")


def pair_counts(colors: np.ndarray, rank: int, u: int) -> np.ndarray:
    """counts[v, i, j] = #{w : c(u,w)=i, c(w,v)=j} for all v at once."""
    n = colors.shape[0]
    row = colors[u].astype(np.int64)
    codes = row[:, None] * rank + colors.astype(np.int64)          # (w, v)
    flat = (np.arange(n, dtype=np.int64)[None, :] * rank * rank + codes).ravel()
    return np.bincount(flat, minlength=n * rank * rank).reshape(n, rank, rank)


def structure_constants(cfg: Configuration) -> Union[StructureConstants, CoherenceViolation]:
    """
    Compute p_{i,j}^t or report the first violation.

    Order: (i, j) row-major over non-diagonal target colors first, then
    diagonal targets; the representative pair of color t is its first pair
    in row-major order and the witness is the first pair that disagrees.
    """
    colors = cfg.colors.astype(np.int64)
    n, rank = cfg.n, cfg.rank
    reference: Dict[int, np.ndarray] = {}
    reference_pair: Dict[int, Tuple[int, int]] = {}
    mismatches: Dict[Tuple[int, int, int], Tuple[Tuple[int, int], int]] = {}

    for u in range(n):
        counts = pair_counts(colors, rank, u)
        for v in range(n):
            t = int(colors[u, v])
            if t not in reference:
                reference[t] = counts[v]
                reference_pair[t] = (u, v)
                continue
            diff = counts[v] != reference[t]
            if diff.any():
                for i, j in np.argwhere(diff):
                    key = (int(i), int(j), t)
                    if key not in mismatches:
                        mismatches[key] = ((u, v), int(counts[v][i, j]))

    if mismatches:
        diagonal = set(cfg.diagonal_colors)
        i, j, t = min(mismatches, key=lambda key: (key[2] in diagonal, key[0], key[1], key[2]))
        pair_b, count_b = mismatches[(i, j, t)]
        violation = CoherenceViolation(i, j, t, reference_pair[t], int(reference[t][i, j]), pair_b, count_b)
        logger.info(f"Configuration is not coherent: {violation}")
        return violation

    p = np.zeros((rank, rank, rank), dtype=np.int64)
    for t, matrix in reference.items():
        p[:, :, t] = matrix
    return StructureConstants(p, n, cfg.diagonal_colors, cfg.pairing)


def check_identities(sc: StructureConstants) -> List[str]:
    """
    Exact checks for homogeneous coherent data:
    sum_j p_{i,j}^t = k_i and p_{i,j}^s k_s = p_{s,j*}^i k_i.
    """
    problems: List[str] = []
    if not sc.is_homogeneous:
        return problems
    rank = sc.rank
    k = sc.out_degrees
    row_sums = sc.p.sum(axis=1)                     # (i, t)
    for i in range(rank):
        for t in range(rank):
            if row_sums[i, t] != k[i]:
                problems.append(f"sum_j p_({i},j)^{t} = {row_sums[i, t]} != k_{i} = {k[i]}")
    for i in range(rank):
        for j in range(rank):
            js = sc.pairing[j]
            for s in range(rank):
                if sc.p[i, j, s] * k[s] != sc.p[s, js, i] * k[i]:
                    problems.append(f"p_({i},{j})^{s} k_{s} != p_({s},{js})^{i} k_{i}")
    return problems


def check_algebra_identity(cfg: Configuration, sc: StructureConstants) -> bool:
    """Verify A_i A_j = sum_t p_{i,j}^t A_t entrywise (exact integers)."""
    rank = cfg.rank
    colors = cfg.colors.astype(np.int64)
    adjacency = [(colors == i).astype(np.int64) for i in range(rank)]
    for i in range(rank):
        for j in range(rank):
            product = adjacency[i] @ adjacency[j]
            expected = sc.p[i, j][colors]
            if not np.array_equal(product, expected):
                return False
    return True


def color_distance(sc: StructureConstants, i: int, j: int) -> Optional[int]:
    """
    dist_i(j): length of the shortest color-i walk joining a color-j pair.

    Walks over colors e = c(u_t, v) with an edge s -> e when p_{i,e}^s > 0;
    the walk ends at a diagonal color. None means unreachable.
    """
    diagonal = set(sc.diagonal_colors)
    if j in diagonal:
        return 0
    seen = {j: 0}
    queue = deque([j])
    while queue:
        s = queue.popleft()
        for e in np.flatnonzero(sc.p[i, :, s]):
            e = int(e)
            if e in seen:
                continue
            if e in diagonal:
                return seen[s] + 1
            seen[e] = seen[s] + 1
            queue.append(e)
    return None


def max_color_distance(sc: StructureConstants, i: int) -> Optional[int]:
    """max_j dist_i(j) over non-diagonal j; None if some j is unreachable."""
    distances = [color_distance(sc, i, j) for j in sc.off_diagonal_colors]
    if any(d is None for d in distances):
        return None
    return max(distances) if distances else 0


class ClassificationReport:
    """Homogeneity, scheme, primitivity and diameter flags of a configuration."""

    def __init__(self):
        self.homogeneous = False
        self.association_scheme = False
        self.primitive = False
        self.constituent_diameters: Dict[int, Optional[int]] = {}
        self.scheme_diameter: Optional[int] = None
        self.oriented_colors: List[int] = []
        self.connectivity_mismatches: List[int] = []

    def to_dict(self) -> Dict:
        return {
            "homogeneous": self.homogeneous,
            "association_scheme": self.association_scheme,
            "primitive": self.primitive,
            "constituent_diameters": {str(k): v for k, v in self.constituent_diameters.items()},
            "scheme_diameter": self.scheme_diameter,
            "oriented_colors": self.oriented_colors,
        }


def classify(cfg: Configuration, sc: Optional[StructureConstants] = None) -> ClassificationReport:
    """
    Classify a verified configuration.

    Connectivity is computed per constituent digraph, strong and weak; for
    homogeneous coherent input the two must agree, and when sc is given the
    strong result is cross-checked against color_distance.
    """
    report = ClassificationReport()
    report.homogeneous = cfg.is_homogeneous
    report.oriented_colors = cfg.oriented_colors()
    report.association_scheme = report.homogeneous and not report.oriented_colors

    all_strong = True
    for i in cfg.off_diagonal_colors:
        graph = cfg.constituent_graph([i])
        if graph.is_directed():
            strong = nx.is_strongly_connected(graph)
            weak = nx.is_weakly_connected(graph)
        else:
            strong = weak = nx.is_connected(graph)
        if strong != weak and report.homogeneous:
            report.connectivity_mismatches.append(i)
            logger.warning(f"Constituent {i} weakly but not strongly connected")
        if sc is not None and report.homogeneous:
            via_tensor = max_color_distance(sc, i) is not None
            if via_tensor != strong:
                report.connectivity_mismatches.append(i)
                logger.warning(f"Constituent {i}: graph connectivity {strong} vs tensor {via_tensor}")
        report.constituent_diameters[i] = nx.diameter(graph) if strong else None
        all_strong = all_strong and strong

    report.primitive = report.homogeneous and all_strong and cfg.n > 1
    diameters = list(report.constituent_diameters.values())
    if diameters and all(d is not None for d in diameters):
        report.scheme_diameter = max(diameters)
    return report


def is_primitive(cfg: Configuration) -> bool:
    return classify(cfg).primitive
