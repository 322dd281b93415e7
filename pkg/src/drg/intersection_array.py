"""
intersection_array.py
---------------------
Distance-regular graph parameters.

Contains:
- IntersectionArray {b_0..b_{d-1}; c_1..c_d} with derived a_i, k_i, n
- parse_array for the "{b0,b1,...;c1,...,cd}" text form
- extract_intersection_array (BFS counts, NotDRG witness)
- validate_array diagnostics
- intersection_numbers via Q_{i+1} = (Q_1 Q_i - a_i Q_i - b_{i-1} Q_{i-1}) / c_{i+1}
- diam3_closed_forms
- as_distance_regular: find a DRG whose distance configuration is a given scheme

Exact rational arithmetic throughout (fractions.Fraction).

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import re
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.coherence import StructureConstants, max_color_distance
from core.configuration import Configuration, build_distance_configuration
from core.results import DiagnosticsReport

logger = logging.getLogger(__name__)

ARRAY_PATTERN = re.compile(r"^\s*\{([^;{}]*);([^;{}]*)\}\s*$")


class InvalidArrayError(ValueError):
    """Intersection array violates a feasibility condition."""
    pass


class IntersectionArray:
    """
    Parameters {b_0, ..., b_{d-1}; c_1, ..., c_d} of a distance-regular graph.

    a_i = k - b_i - c_i (b_d = c_0 = 0); k_0 = 1, k_{i+1} = k_i b_i / c_{i+1}.
    The k_i are kept as Fractions so validate_array can report non-integral ones.
    """

    def __init__(self, b: Sequence[int], c: Sequence[int]):
        if len(b) != len(c) or not b:
            raise InvalidArrayError(f"need d >= 1 and len(b) == len(c), got {len(b)} and {len(c)}")
        self.b = tuple(int(x) for x in b)
        self.c = tuple(int(x) for x in c)
        self.d = len(self.b)
        self.k = self.b[0]
        if any(x == 0 for x in self.c):
            raise InvalidArrayError("c_i must be positive")
        self.a = tuple(self.k - self.b_(i) - self.c_(i) for i in range(self.d + 1))
        sizes = [Fraction(1)]
        for i in range(self.d):
            sizes.append(sizes[-1] * self.b[i] / self.c[i])
        self.sizes = tuple(sizes)
        self.n_exact = sum(sizes)

    def b_(self, i: int) -> int:
        """b_i with b_d = 0."""
        return self.b[i] if 0 <= i < self.d else 0

    def c_(self, i: int) -> int:
        """c_i with c_0 = 0 (1-based as in the array)."""
        return self.c[i - 1] if 1 <= i <= self.d else 0

    @property
    def lam(self) -> int:
        return self.a[1]

    @property
    def mu(self) -> Optional[int]:
        return self.c_(2) if self.d >= 2 else None

    @property
    def k_i(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in self.sizes)

    @property
    def n(self) -> int:
        return int(self.n_exact)

    @property
    def is_bipartite(self) -> bool:
        return all(x == 0 for x in self.a)

    def is_primitive(self) -> bool:
        """Every distance-i graph connected, read off the exact intersection numbers."""
        sc = intersection_numbers(self)
        return all(max_color_distance(sc, i) is not None for i in range(1, self.d + 1))

    def to_dict(self) -> Dict:
        return {
            "array": str(self),
            "d": self.d,
            "b": list(self.b),
            "c": list(self.c),
            "a": list(self.a),
            "k_i": [str(x) if x.denominator != 1 else int(x) for x in self.sizes],
            "n": str(self.n_exact) if self.n_exact.denominator != 1 else int(self.n_exact),
        }

    def __eq__(self, other) -> bool:
        return isinstance(other, IntersectionArray) and (self.b, self.c) == (other.b, other.c)

    def __hash__(self) -> int:
        return hash((self.b, self.c))

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"

    def __repr__(self) -> str:
        return f"IntersectionArray({self})"


def parse_array(text: str) -> IntersectionArray:
    """Parse "{b0,b1,...;c1,...,cd}"."""
    match = ARRAY_PATTERN.match(text)
    if not match:
        raise InvalidArrayError(f"expected '{{b0,...;c1,...}}', got {text!r}")
    try:
        b = [int(x) for x in match.group(1).split(",") if x.strip()]
        c = [int(x) for x in match.group(2).split(",") if x.strip()]
    except ValueError as e:
        raise InvalidArrayError(f"non-integer entry in {text!r}: {e}")
    return IntersectionArray(b, c)


class NotDRG:
    """Witness that a graph is not distance-regular: vertex v, w in N_i(v), parameter mismatch."""

    def __init__(self, v: int, w: int, i: int, parameter: str, expected: int, found: int):
        self.v = v
        self.w = w
        self.i = i
        self.parameter = parameter
        self.expected = expected
        self.found = found

    def to_dict(self) -> Dict:
        return {
            "not_drg": True,
            "witness": {"v": self.v, "w": self.w, "i": self.i},
            "parameter": self.parameter,
            "expected": self.expected,
            "found": self.found,
        }

    def __repr__(self) -> str:
        return (f"NotDRG(v={self.v}, w={self.w}, i={self.i}: "
                f"{self.parameter} expected {self.expected}, found {self.found})")


def extract_intersection_array(graph: nx.Graph) -> Union[IntersectionArray, NotDRG]:
    """
    Read a_i, b_i, c_i off every BFS layer; the first vertex fixes the constants.

    Raises:
        DisconnectedGraphError: graph not connected.
    """
    cfg = build_distance_configuration(graph)
    dist = cfg.colors.astype(np.int64)
    n = cfg.n
    d = int(dist.max()) if n else 0
    adjacency = (dist == 1).astype(np.int64)
    expected: Dict[Tuple[str, int], int] = {}

    for v in range(n):
        layers = np.zeros((n, d + 2), dtype=np.int64)
        layers[np.arange(n), dist[v]] = 1
        counts = adjacency @ layers                   # counts[w, j] = |N(w) ∩ N_j(v)|
        for w in range(n):
            i = int(dist[v, w])
            found = {
                "c": int(counts[w, i - 1]) if i > 0 else 0,
                "a": int(counts[w, i]),
                "b": int(counts[w, i + 1]),
            }
            for name in ("c", "a", "b"):
                key = (name, i)
                if key not in expected:
                    expected[key] = found[name]
                elif expected[key] != found[name]:
                    return NotDRG(v, w, i, f"{name}_{i}", expected[key], found[name])

    b = [expected[("b", i)] for i in range(d)]
    c = [expected[("c", i)] for i in range(1, d + 1)]
    return IntersectionArray(b, c)


def validate_array(array: IntersectionArray) -> DiagnosticsReport:
    """Check a_i >= 0, monotonicity, c_1 = 1 and integral k_i; report n and k_i."""
    report = DiagnosticsReport("INTERSECTION ARRAY")
    if array.k <= 0:
        report.add_error("k_positive", f"k = b_0 = {array.k} must be positive")
    if array.c[0] != 1:
        report.add_error("c1", f"c_1 = {array.c[0]} must be 1")
    for i, a in enumerate(array.a):
        if a < 0:
            report.add_error("a_nonnegative", f"a_{i} = {a} < 0", i)
    for i in range(array.d - 1):
        if array.b[i + 1] > array.b[i]:
            report.add_error("b_nonincreasing", f"b_{i + 1} = {array.b[i + 1]} > b_{i} = {array.b[i]}", i + 1)
        if array.c[i + 1] < array.c[i]:
            report.add_error("c_nondecreasing", f"c_{i + 2} = {array.c[i + 1]} < c_{i + 1} = {array.c[i]}", i + 2)
    for i, b in enumerate(array.b):
        if b <= 0:
            report.add_error("b_positive", f"b_{i} = {b} must be positive", i)
    for i, size in enumerate(array.sizes):
        if size.denominator != 1:
            report.add_error("k_integral", f"k_{i} = {size} is not an integer", i)
    if report.is_valid():
        report.stats = {"n": array.n, "k_i": list(array.k_i)}
    return report


def _q1(array: IntersectionArray) -> List[List[Fraction]]:
    """Q_1[t][j] = p_{1,j}^t."""
    size = array.d + 1
    q = [[Fraction(0)] * size for _ in range(size)]
    for t in range(size):
        if t > 0:
            q[t][t - 1] = Fraction(array.c_(t))
        q[t][t] = Fraction(array.a[t])
        if t < array.d:
            q[t][t + 1] = Fraction(array.b_(t))
    return q


def _matmul(x: List[List[Fraction]], y: List[List[Fraction]]) -> List[List[Fraction]]:
    size = len(x)
    return [[sum(x[r][m] * y[m][c] for m in range(size)) for c in range(size)] for r in range(size)]


def intersection_numbers(array: IntersectionArray) -> StructureConstants:
    """
    Full tensor p_{i,j}^t of the distance scheme, exact.

    Raises:
        InvalidArrayError: an intermediate value is negative or non-integral.
    """
    size = array.d + 1
    identity = [[Fraction(int(r == c)) for c in range(size)] for r in range(size)]
    q1 = _q1(array)
    qs = [identity, q1]
    for i in range(1, array.d):
        prev, cur = qs[i - 1], qs[i]
        prod = _matmul(q1, cur)
        nxt = [[(prod[r][c] - array.a[i] * cur[r][c] - array.b_(i - 1) * prev[r][c]) / array.c_(i + 1)
                for c in range(size)] for r in range(size)]
        qs.append(nxt)

    p = np.zeros((size, size, size), dtype=np.int64)
    for i in range(size):
        for t in range(size):
            for j in range(size):
                value = qs[i][t][j]
                if value.denominator != 1 or value < 0:
                    raise InvalidArrayError(f"p_({i},{j})^{t} = {value} is not a non-negative integer")
                p[i, j, t] = int(value)
    return StructureConstants(p, array.n, (0,), list(range(size)))


def diam3_closed_forms(k: int, lam: int, mu: int, b2: int, c3: int) -> np.ndarray:
    """
    All p_{i,j}^s of a diameter-3 DRG from the closed forms in (k, lambda, mu, a=b_2, b=c_3).

    Entries not given by a closed form are filled from row sums
    sum_j p_{i,j}^s = k_i. Returns a 4x4x4 integer array indexed [i, j, s].

    Raises:
        InvalidArrayError: mu = 0 or a value is not an integer.
    """
    if mu == 0:
        raise InvalidArrayError("mu = 0: a diameter-3 DRG needs mu >= 1")
    k, lam, mu, a, b = (Fraction(x) for x in (k, lam, mu, b2, c3))
    k2 = k * (k - lam - 1) / mu
    k3 = k2 * a / b
    sizes = [Fraction(1), k, k2, k3]
    p = [[[Fraction(0)] * 4 for _ in range(4)] for _ in range(4)]

    def put(i, j, s, value):
        p[i][j][s] = value
        p[j][i][s] = value

    for s in range(4):
        put(0, s, s, Fraction(1))
    for i in range(4):
        p[i][i][0] = sizes[i]

    put(1, 1, 1, lam)
    put(1, 2, 1, k - lam - 1)
    put(2, 2, 1, (k - lam - 1) * (k - a - mu) / mu)
    put(2, 3, 1, a * (k - lam - 1) / mu)
    put(3, 3, 1, (k - b) * (k - lam - 1) * a / (b * mu))

    put(1, 1, 2, mu)
    put(1, 2, 2, k - a - mu)
    put(1, 3, 2, a)
    put(2, 2, 2, (k - lam - 1) + (b * a - k + (k - a - mu) * (k - a - mu - lam)) / mu)
    put(2, 3, 2, ((k - b) + (k - a - lam) - mu) * a / mu)
    put(3, 3, 2, ((k - b) ** 2 - lam * (k - b) - k + a * b) / mu * a / b)

    put(1, 2, 3, b)
    put(1, 3, 3, k - b)
    put(2, 2, 3, ((k - b) + (k - a - lam) - mu) * b / mu)
    put(2, 3, 3, ((k - b) ** 2 - (k - b) * lam - k + a * b) / mu)
    put(3, 3, 3, k3 - 1 - (k - b) - p[3][2][3])

    tensor = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(4):
        for j in range(4):
            for s in range(4):
                value = p[i][j][s]
                if value.denominator != 1:
                    raise InvalidArrayError(f"closed form p_({i},{j})^{s} = {value} is not an integer")
                tensor[i, j, s] = int(value)
    return tensor


def diam3_closed_forms_for(array: IntersectionArray) -> np.ndarray:
    if array.d != 3:
        raise InvalidArrayError(f"closed forms need d = 3, got d = {array.d}")
    return diam3_closed_forms(array.k, array.lam, array.mu, array.b[2], array.c[2])


def as_distance_regular(cfg: Configuration) -> Optional[Tuple[nx.Graph, IntersectionArray]]:
    """
    Find a symmetric color whose constituent is a DRG with cfg as its distance scheme.

    Returns:
        (graph, array) for the first such color (smallest degree first), else None.
    """
    if not cfg.is_homogeneous or cfg.oriented_colors():
        return None
    colors = cfg.colors
    candidates = sorted(cfg.off_diagonal_colors, key=lambda i: (int((colors[0] == i).sum()), i))
    for i in candidates:
        graph = cfg.constituent_graph([i])
        if not nx.is_connected(graph):
            continue
        dist = build_distance_configuration(graph).colors
        if int(dist.max()) + 1 != cfg.rank:
            continue
        pairs = set(zip(colors.ravel().tolist(), dist.ravel().tolist()))
        if len(pairs) != cfg.rank:
            continue
        array = extract_intersection_array(graph)
        if isinstance(array, IntersectionArray):
            return graph, array
    return None
