"""
configuration.py
----------------
Configuration data model: an n x n color map with a diagonal color set
and a color pairing i -> i*.

Contains:
- Configuration (immutable, colors stored as a read-only uint16 array)
- build_distance_configuration / build_adjacency_configuration
- verify_configuration (axiom diagnostics with witnesses)
- permute, constituent helpers

Usage:
    from core.configuration import build_distance_configuration
    cfg = build_distance_configuration(nx.petersen_graph())

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from core.results import DiagnosticsReport

logger = logging.getLogger(__name__)


class ConfigurationError(Exception):
    """Raised when a color matrix cannot be turned into a Configuration."""
    pass


class DisconnectedGraphError(Exception):
    """Raised when a distance configuration is requested for a disconnected graph."""

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"graph is disconnected: no path between {u} and {v}")


class Configuration:
    """
    Edge-coloring of the complete directed graph on n vertices (loops included).

    colors[u][v] is the color of the ordered pair (u, v); colors are ids in
    [0, rank). pairing[i] is the color i* of the reversed pairs.
    """

    def __init__(self, colors, pairing: Optional[Sequence[int]] = None):
        matrix = np.asarray(colors)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ConfigurationError(f"color map must be square, got shape {matrix.shape}")
        if matrix.size and int(matrix.min()) < 0:
            raise ConfigurationError("color ids must be non-negative")
        rank = int(matrix.max()) + 1 if matrix.size else 0
        if rank > config.RANK_CAP:
            raise ConfigurationError(f"rank {rank} exceeds cap {config.RANK_CAP}")
        self._colors = matrix.astype(np.uint16)
        self._colors.setflags(write=False)
        self._rank = rank
        if pairing is None:
            pairing = derive_pairing(self._colors, rank)
        self._pairing = tuple(int(p) for p in pairing)
        if len(self._pairing) != rank:
            raise ConfigurationError(f"pairing has {len(self._pairing)} entries for rank {rank}")

    @property
    def colors(self) -> np.ndarray:
        return self._colors

    @property
    def n(self) -> int:
        return self._colors.shape[0]

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def pairing(self) -> Tuple[int, ...]:
        return self._pairing

    @property
    def diagonal_colors(self) -> Tuple[int, ...]:
        return tuple(sorted(set(int(c) for c in np.diag(self._colors))))

    @property
    def off_diagonal_colors(self) -> Tuple[int, ...]:
        diag = set(self.diagonal_colors)
        return tuple(i for i in range(self._rank) if i not in diag)

    @property
    def is_homogeneous(self) -> bool:
        return len(self.diagonal_colors) == 1

    def oriented_colors(self) -> List[int]:
        return [i for i in range(self._rank) if self._pairing[i] != i]

    def vertex_classes(self) -> List[List[int]]:
        """Vertices grouped by diagonal color, in color order."""
        diag = np.diag(self._colors)
        return [np.flatnonzero(diag == c).tolist() for c in self.diagonal_colors]

    def constituent(self, color_set: Iterable[int]) -> np.ndarray:
        """0/1 int64 matrix of the pairs whose color is in color_set."""
        mask = np.isin(self._colors, list(color_set))
        return mask.astype(np.int64)

    def constituent_graph(self, color_set: Iterable[int]) -> nx.Graph:
        """Constituent as a networkx graph (DiGraph when the color set is not pairing-closed)."""
        colors = set(color_set)
        closed = all(self._pairing[i] in colors for i in colors)
        graph = nx.Graph() if closed else nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        us, vs = np.nonzero(self.constituent(colors))
        graph.add_edges_from((int(u), int(v)) for u, v in zip(us, vs) if u != v)
        return graph

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self._pairing == other._pairing and np.array_equal(self._colors, other._colors)

    def __hash__(self) -> int:
        return hash((self._colors.tobytes(), self._pairing))

    def __repr__(self) -> str:
        return f"Configuration(n={self.n}, rank={self.rank}, diagonal={list(self.diagonal_colors)})"


def derive_pairing(colors: np.ndarray, rank: int) -> List[int]:
    """i* = color of the reverse of the first (row-major) pair of color i."""
    pairing = list(range(rank))
    flat = colors.ravel()
    n = colors.shape[0]
    firsts = {}
    for idx in range(flat.size):
        c = int(flat[idx])
        if c not in firsts:
            firsts[c] = idx
            if len(firsts) == rank:
                break
    for c, idx in firsts.items():
        u, v = divmod(idx, n)
        pairing[c] = int(colors[v, u])
    return pairing


def compact_colors(colors: np.ndarray) -> np.ndarray:
    """Renumber colors to 0..r-1 by first appearance (diagonal first, then row-major)."""
    colors = np.asarray(colors, dtype=np.int64)
    if colors.size == 0:
        return colors
    order = dict.fromkeys(np.diag(colors).tolist())
    for c in colors.ravel().tolist():
        order.setdefault(c)
    lookup = np.zeros(int(colors.max()) + 1, dtype=np.int64)
    lookup[list(order)] = np.arange(len(order))
    return lookup[colors]


def _integer_graph(graph: nx.Graph) -> nx.Graph:
    if sorted(graph.nodes()) == list(range(graph.number_of_nodes())):
        return graph
    return nx.convert_node_labels_to_integers(graph, ordering="sorted")


def build_distance_configuration(graph: nx.Graph) -> Configuration:
    """
    Color (u, v) by the graph distance dist(u, v).

    Raises:
        DisconnectedGraphError: naming a vertex pair with no path between them.
    """
    graph = _integer_graph(graph)
    n = graph.number_of_nodes()
    dist = np.full((n, n), -1, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(graph):
        for target, length in lengths.items():
            dist[source, target] = length
    if n and (dist < 0).any():
        u, v = np.argwhere(dist < 0)[0]
        raise DisconnectedGraphError(int(u), int(v))
    return Configuration(dist, pairing=list(range(int(dist.max()) + 1 if n else 0)))


def build_adjacency_configuration(graph: nx.Graph) -> Configuration:
    """
    Rank <= 3 coloring: 0 on the diagonal, 1 on edges, 2 on non-edges.

    Ids are fixed (not renumbered by appearance) so two graphs on the same
    vertex count are comparable color for color; an edgeless graph gets
    rank 2 with its non-edges as color 1.
    """
    graph = _integer_graph(graph)
    n = graph.number_of_nodes()
    colors = np.full((n, n), 2, dtype=np.int64)
    for u, v in graph.edges():
        colors[u, v] = colors[v, u] = 1
    np.fill_diagonal(colors, 0)
    if graph.number_of_edges() == 0:
        colors[colors == 2] = 1
    return Configuration(colors, pairing=list(range(int(colors.max()) + 1 if n else 0)))


def build_digraph_configuration(n: int, arcs: Iterable[Tuple[int, int]]) -> Configuration:
    """0 diagonal, 1 arcs, 2 reversed arcs, 3 elsewhere (dropped when empty)."""
    colors = np.full((n, n), 3, dtype=np.int64)
    for u, v in arcs:
        colors[u, v] = 1
        colors[v, u] = 2
    np.fill_diagonal(colors, 0)
    return Configuration(compact_colors(colors))


def permute(cfg: Configuration, perm: Sequence[int]) -> Configuration:
    """Return pi.cfg where vertex u is renamed perm[u]."""
    perm = np.asarray(perm, dtype=np.int64)
    inverse = np.argsort(perm)
    return Configuration(cfg.colors[np.ix_(inverse, inverse)], pairing=cfg.pairing)


def verify_configuration(cfg: Configuration) -> DiagnosticsReport:
    """
    Check the configuration axioms.

    (i)  diagonal colors never appear off the diagonal
    (ii) colors[u][v] = i implies colors[v][u] = i*
    plus: pairing maps [0, r) into itself and is an involution, and every
    color in [0, r) occurs.

    Violations are reported with witnesses; nothing is raised.
    """
    report = DiagnosticsReport("CONFIGURATION AXIOMS")
    colors = cfg.colors.astype(np.int64)
    n, rank = cfg.n, cfg.rank
    report.stats = {"n": n, "rank": rank}

    diag = np.diag(colors)
    diag_set = set(diag.tolist())
    off = ~np.eye(n, dtype=bool)
    clash = np.isin(colors, list(diag_set)) & off
    if clash.any():
        u, w = (int(x) for x in np.argwhere(clash)[0])
        v = int(np.flatnonzero(diag == colors[u, w])[0])
        report.add_error("axiom_i", f"diagonal color {colors[u, w]} used on pair ({u},{w})", (v, u, w))

    pairing = np.asarray(cfg.pairing, dtype=np.int64)
    out_of_range = [i for i in range(rank) if not 0 <= pairing[i] < rank]
    if out_of_range:
        i = out_of_range[0]
        report.add_error("pairing_range", f"pairing[{i}] = {pairing[i]} is not a color in [0, {rank})",
                         (i, int(pairing[i])))
    elif rank:
        mismatch = pairing[colors] != colors.T
        if mismatch.any():
            u, v = (int(x) for x in np.argwhere(mismatch)[0])
            report.add_error(
                "axiom_ii",
                f"c({u},{v})={colors[u, v]} but c({v},{u})={colors[v, u]} != {pairing[colors[u, v]]}",
                (u, v),
            )
        not_involution = [i for i in range(rank) if pairing[pairing[i]] != i]
        if not_involution:
            report.add_error("pairing_involution", "pairing is not an involution", not_involution[:5])

    present = set(np.unique(colors).tolist())
    missing = [i for i in range(rank) if i not in present]
    if missing:
        report.add_error("colors_used", f"{len(missing)} color(s) never occur", missing[:10])

    return report
