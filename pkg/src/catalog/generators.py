"""
generators.py
-------------
Graph and configuration generators for the catalog families and the
small test fixtures.

Graph generators return networkx graphs on vertices 0..n-1 with
graph.graph["name"] set. Scheme generators return Configurations.

Families:
- johnson(m, t): t-subsets of [m], adjacent when they share t-1 elements
- hamming(s, m): words of length s over [m], adjacent when they differ in one position
- triangular(s) = johnson(s, 2), lattice(s) = hamming(2, s)
- cocktail(m): crown graph K_{m,m} minus a perfect matching
- cycle(n)
- cyclotomic(p, e): orbital scheme of x -> x+1 and x -> g^e x on Z_p

Usage:
    from catalog.generators import johnson, orbital_configuration
    graph = johnson(7, 3)

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import itertools
import logging
import sys
from pathlib import Path
from typing import Sequence

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

sys.path.insert(0, str(Path(__file__).parent.parent))

from core.configuration import Configuration, compact_colors
from drg.bounds import ParameterError

logger = logging.getLogger(__name__)

GF8_MODULUS = 0b1011        # x^3 + x + 1


def _named(graph: nx.Graph, name: str) -> nx.Graph:
    graph = nx.convert_node_labels_to_integers(graph, ordering="default")
    graph.graph["name"] = name
    return graph


# =============================================================================
# CATALOG FAMILIES
# =============================================================================

def johnson(m: int, t: int) -> nx.Graph:
    """J(m, t); vertex order is itertools.combinations order."""
    if t < 1 or m < 2 * t + 1:
        raise ParameterError(f"johnson needs t >= 1 and m >= 2t+1, got m={m}, t={t}")
    subsets = [frozenset(s) for s in itertools.combinations(range(m), t)]
    graph = nx.Graph()
    graph.add_nodes_from(range(len(subsets)))
    for (x, a), (y, b) in itertools.combinations(enumerate(subsets), 2):
        if len(a & b) == t - 1:
            graph.add_edge(x, y)
    graph.graph["name"] = f"johnson({m},{t})"
    graph.graph["labels"] = [tuple(sorted(s)) for s in subsets]
    return graph


def hamming(s: int, m: int) -> nx.Graph:
    """H(s, m); vertex order is itertools.product order."""
    if s < 1 or m < 2:
        raise ParameterError(f"hamming needs s >= 1 and m >= 2, got s={s}, m={m}")
    words = list(itertools.product(range(m), repeat=s))
    index = {w: x for x, w in enumerate(words)}
    graph = nx.Graph()
    graph.add_nodes_from(range(len(words)))
    for x, word in enumerate(words):
        for pos in range(s):
            for symbol in range(word[pos] + 1, m):
                other = word[:pos] + (symbol,) + word[pos + 1:]
                graph.add_edge(x, index[other])
    graph.graph["name"] = f"hamming({s},{m})"
    graph.graph["labels"] = words
    return graph


def triangular(s: int) -> nx.Graph:
    if s < 5:
        raise ParameterError(f"triangular needs s >= 5, got {s}")
    graph = johnson(s, 2)
    graph.graph["name"] = f"triangular({s})"
    return graph


def lattice(s: int) -> nx.Graph:
    if s < 2:
        raise ParameterError(f"lattice needs s >= 2, got {s}")
    graph = hamming(2, s)
    graph.graph["name"] = f"lattice({s})"
    return graph


def cocktail(m: int) -> nx.Graph:
    """Crown graph: K_{m,m} with the matching i -- m+i removed."""
    if m < 2:
        raise ParameterError(f"cocktail needs m >= 2, got {m}")
    graph = nx.complete_bipartite_graph(m, m)
    graph.remove_edges_from((i, m + i) for i in range(m))
    graph.graph["name"] = f"cocktail({m})"
    return graph


def cycle(n: int) -> nx.Graph:
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    return _named(nx.cycle_graph(n), f"cycle({n})")


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group of Z_p."""
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def cyclotomic(p: int, e: int) -> Configuration:
    """
    Cyclotomic scheme on Z_p with e classes: x, y share class j when y - x
    lies in the j-th coset of the subgroup of e-th powers.

    Raises:
        ParameterError: p not prime, e not dividing p-1, or (p-1)/e odd
            (the classes would not be symmetric).
    """
    if not is_prime(p):
        raise ParameterError(f"cyclotomic needs p prime, got {p}")
    if e < 1 or (p - 1) % e:
        raise ParameterError(f"cyclotomic needs e | p-1, got p={p}, e={e}")
    if ((p - 1) // e) % 2:
        raise ParameterError(f"cyclotomic(p={p}, e={e}) is not symmetric: (p-1)/e is odd")
    g = primitive_root(p)
    shift = [(x + 1) % p for x in range(p)]
    multiply = [(x * pow(g, e, p)) % p for x in range(p)]
    return orbital_configuration(p, [shift, multiply])


# =============================================================================
# SCHURIAN CONFIGURATIONS
# =============================================================================

def orbital_configuration(n: int, generators: Sequence[Sequence[int]]) -> Configuration:
    """
    Orbital configuration of the group generated by `generators` on n points.

    Colors are orbits on ordered pairs, found as connected components of the
    pair graph (u, v) -- (g(u), g(v)), then renumbered diagonal first.
    """
    pair_ids = np.arange(n * n).reshape(n, n)
    rows, cols = [], []
    for gen in generators:
        g = np.asarray(gen, dtype=np.int64)
        if sorted(g.tolist()) != list(range(n)):
            raise ParameterError(f"generator is not a permutation of {n} points")
        rows.append(pair_ids.ravel())
        cols.append(pair_ids[np.ix_(g, g)].ravel())
    if rows:
        rows, cols = np.concatenate(rows), np.concatenate(cols)
    else:
        rows = cols = np.zeros(0, dtype=np.int64)
    adjacency = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(n * n, n * n))
    _, labels = connected_components(adjacency, directed=True, connection="weak")
    cfg = Configuration(compact_colors(labels.reshape(n, n)))
    logger.info(f"Orbital configuration on {n} points: rank {cfg.rank}")
    return cfg


def gf8_multiply(x: int, y: int) -> int:
    product = 0
    while y:
        if y & 1:
            product ^= x
        y >>= 1
        x <<= 1
        if x & 0b1000:
            x ^= GF8_MODULUS
    return product


def semilinear_pair_configuration() -> Configuration:
    """
    Orbital configuration of AGammaL(1, 8) on the 28 two-element subsets of GF(8).

    The stabilizer of a 2-subset is cyclic of order 6; pairs of subsets
    meeting in one point fall into two mutually paired oriented colors whose
    union is the triangular graph T(8).
    """
    field = list(range(8))
    maps = [[x ^ a for x in field] for a in (1, 2, 4)]
    maps.append([gf8_multiply(x, 2) for x in field])
    maps.append([gf8_multiply(x, x) for x in field])
    subsets = list(itertools.combinations(field, 2))
    index = {s: x for x, s in enumerate(subsets)}
    generators = []
    for f in maps:
        generators.append([index[tuple(sorted((f[a], f[b])))] for a, b in subsets])
    return orbital_configuration(len(subsets), generators)


# =============================================================================
# SCHEMES
# =============================================================================

def johnson_scheme(m: int, t: int) -> Configuration:
    """Color (A, B) by |A \\ B|."""
    if t < 1 or m < t:
        raise ParameterError(f"johnson_scheme needs 1 <= t <= m, got m={m}, t={t}")
    incidence = np.zeros((len(list(itertools.combinations(range(m), t))), m), dtype=np.int64)
    for x, subset in enumerate(itertools.combinations(range(m), t)):
        incidence[x, list(subset)] = 1
    return Configuration(t - incidence @ incidence.T, pairing=list(range(min(t, m - t) + 1)))


def hamming_scheme(s: int, m: int) -> Configuration:
    """Color (x, y) by the number of positions where the words differ."""
    if s < 1 or m < 2:
        raise ParameterError(f"hamming_scheme needs s >= 1 and m >= 2, got s={s}, m={m}")
    words = np.array(list(itertools.product(range(m), repeat=s)), dtype=np.int64)
    distances = (words[:, None, :] != words[None, :, :]).sum(axis=2)
    return Configuration(distances, pairing=list(range(s + 1)))


# =============================================================================
# FIXTURES
# =============================================================================

def petersen() -> nx.Graph:
    return _named(nx.petersen_graph(), "petersen")


def heawood() -> nx.Graph:
    return _named(nx.heawood_graph(), "heawood")


def kneser(m: int, t: int) -> nx.Graph:
    """t-subsets of [m], adjacent when disjoint."""
    if t < 1 or m < 2 * t:
        raise ParameterError(f"kneser needs m >= 2t, got m={m}, t={t}")
    subsets = [frozenset(s) for s in itertools.combinations(range(m), t)]
    graph = nx.Graph()
    graph.add_nodes_from(range(len(subsets)))
    graph.add_edges_from((x, y) for (x, a), (y, b) in itertools.combinations(enumerate(subsets), 2)
                         if not a & b)
    graph.graph["name"] = f"kneser({m},{t})"
    return graph


def complete(n: int) -> nx.Graph:
    return _named(nx.complete_graph(n), f"complete({n})")


def path(n: int) -> nx.Graph:
    return _named(nx.path_graph(n), f"path({n})")


def hypercube(s: int) -> nx.Graph:
    return _named(nx.hypercube_graph(s), f"hypercube({s})")


def asymmetric_tree() -> nx.Graph:
    """Smallest asymmetric tree: legs of length 1, 2 and 3 at one centre."""
    graph = nx.Graph([(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)])
    graph.graph["name"] = "asymmetric_tree"
    return graph


def line_graph(graph: nx.Graph) -> nx.Graph:
    name = graph.graph.get("name", "graph")
    line = nx.convert_node_labels_to_integers(nx.line_graph(graph), ordering="sorted",
                                              label_attribute="edge")
    line.graph["name"] = f"line({name})"
    return line


def complement(graph: nx.Graph) -> nx.Graph:
    name = graph.graph.get("name", "graph")
    result = nx.complement(graph)
    result.graph["name"] = f"complement({name})"
    return result


def random_graph(n: int, p: float, seed: int) -> nx.Graph:
    return _named(nx.gnp_random_graph(n, p, seed=seed), f"gnp({n},{p},{seed})")
