"""
test_oracle.py
--------------
Tests for the brute-force oracle: automorphism groups, exact motion and
isomorphism on small instances.

Run with: python3 -m src.validation.test_oracle

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import sys
from pathlib import Path

import networkx as nx
import numpy as np

# Add src/ to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from catalog import generators
from core.configuration import build_adjacency_configuration, build_distance_configuration
from oracle.search import (AutomorphismGroup, OracleLimitError, automorphisms, exact_motion,
                           find_isomorphism, isomorphic)


def distance_cfg(graph):
    return build_distance_configuration(graph)


# ---------------------------------------------------------------------------
# Automorphism groups
# ---------------------------------------------------------------------------

def test_group_orders():
    group = automorphisms(distance_cfg(generators.petersen()))
    assert isinstance(group, AutomorphismGroup)
    assert group.order == 120
    assert automorphisms(distance_cfg(nx.cycle_graph(5))).order == 10
    assert automorphisms(distance_cfg(generators.asymmetric_tree())).order == 1


def test_pruned_matches_unpruned():
    for graph in (generators.petersen(), nx.cycle_graph(6), nx.path_graph(5)):
        cfg = distance_cfg(graph)
        assert automorphisms(cfg, prune=True).order == automorphisms(cfg, prune=False).order


def test_elements_are_automorphisms():
    cfg = distance_cfg(generators.petersen())
    group = automorphisms(cfg)
    elements = group.elements()
    assert elements.shape == (120, 10)
    assert len({tuple(row) for row in elements.tolist()}) == 120
    for sigma in elements:
        assert np.array_equal(cfg.colors[np.ix_(sigma, sigma)], cfg.colors)
    assert group.to_dict()["order"] == 120


def test_limit():
    try:
        automorphisms(distance_cfg(generators.petersen()), limit_n=5)
    except OracleLimitError:
        return
    raise AssertionError("n above limit accepted")


# ---------------------------------------------------------------------------
# Motion
# ---------------------------------------------------------------------------

def test_exact_motion():
    assert exact_motion(distance_cfg(nx.cycle_graph(6))) == 4
    assert exact_motion(distance_cfg(generators.petersen())) == 6
    assert exact_motion(distance_cfg(nx.complete_graph(4))) == 2
    assert exact_motion(distance_cfg(generators.asymmetric_tree())) is None


def test_branch_and_bound_agrees():
    for graph in (generators.petersen(), nx.cycle_graph(7), generators.lattice(3)):
        cfg = distance_cfg(graph)
        group = automorphisms(cfg)
        assert exact_motion(cfg, group=group, enumeration_limit=0) == exact_motion(cfg, group=group)


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

def test_isomorphic_pairs():
    assert isomorphic(distance_cfg(generators.hypercube(3)), distance_cfg(generators.cocktail(4)))
    assert isomorphic(distance_cfg(generators.petersen()), distance_cfg(generators.kneser(5, 2)))
    assert not isomorphic(build_adjacency_configuration(nx.complete_bipartite_graph(3, 3)),
                          build_adjacency_configuration(nx.cycle_graph(6)))
    assert not isomorphic(distance_cfg(nx.cycle_graph(6)), distance_cfg(nx.path_graph(6)))


def test_find_isomorphism():
    first = distance_cfg(generators.hypercube(3))
    second = distance_cfg(generators.cocktail(4))
    sigma = find_isomorphism(first, second)
    assert sigma is not None
    assert np.array_equal(second.colors[np.ix_(sigma, sigma)], first.colors)
    assert find_isomorphism(first, distance_cfg(nx.cycle_graph(8))) is None


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

TESTS = [
    ("group orders", test_group_orders),
    ("pruned matches unpruned", test_pruned_matches_unpruned),
    ("elements are automorphisms", test_elements_are_automorphisms),
    ("oracle size limit", test_limit),
    ("exact motion", test_exact_motion),
    ("branch and bound agrees", test_branch_and_bound_agrees),
    ("isomorphic pairs", test_isomorphic_pairs),
    ("find isomorphism", test_find_isomorphism),
]


def main():
    print("=" * 60)
    print("oracle tests")
    print("=" * 60)

    failures = 0
    for name, fn in TESTS:
        try:
            fn()
            print(f"  ✓ {name}")
        except Exception as e:
            failures += 1
            print(f"  ✗ {name}")
            print(f"      → {type(e).__name__}: {e}")

    print()
    print(f"Results: {len(TESTS) - failures}/{len(TESTS)} passed",
          "— ALL GOOD" if failures == 0 else f"— {failures} FAILED")
    sys.exit(0 if failures == 0 else 1)


if __name__ == "__main__":
    main()
