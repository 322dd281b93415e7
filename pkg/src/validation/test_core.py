"""
test_core.py
------------
Tests for the configuration model, coherence, classification, WL
refinement and the edge-list / JSON formats.

Run with: python3 -m src.validation.test_core

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import json
import math
import sys
import tempfile
import tracemalloc
from pathlib import Path

import networkx as nx
import numpy as np

# Add src/ to path
sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from catalog import generators
from core.coherence import (CoherenceViolation, StructureConstants, check_algebra_identity,
                            check_identities, classify, color_distance, structure_constants)
from core.configuration import (Configuration, DisconnectedGraphError,
                                build_adjacency_configuration, build_digraph_configuration,
                                build_distance_configuration, permute, verify_configuration)
from core.formats import (InputFormatError, parse_edge_list, format_edge_list,
                          read_configuration, write_configuration)
from core.refinement import (greedy_distinguishing_set, individualize_and_refine,
                             is_distinguishing, wl_round, wl_stabilize)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def distance_cfg(graph):
    return build_distance_configuration(graph)


def same_partition(a: np.ndarray, b: np.ndarray) -> bool:
    """True when two color maps induce the same partition of the pairs."""
    forward, backward = {}, {}
    for x, y in zip(a.ravel().tolist(), b.ravel().tolist()):
        if forward.setdefault(x, y) != y or backward.setdefault(y, x) != x:
            return False
    return True


# ---------------------------------------------------------------------------
# Configuration and axioms
# ---------------------------------------------------------------------------

def test_distance_configuration_ranks():
    assert distance_cfg(nx.cycle_graph(5)).rank == 3
    assert distance_cfg(generators.petersen()).rank == 3
    p4 = distance_cfg(nx.path_graph(4))
    assert p4.rank == 4
    assert p4.diagonal_colors == (0,)


def test_disconnected_graph_names_vertices():
    graph = nx.Graph([(0, 1), (2, 3)])
    try:
        distance_cfg(graph)
    except DisconnectedGraphError as e:
        assert {e.u, e.v} & {0, 1} and {e.u, e.v} & {2, 3}, f"witness {e.u},{e.v}"
        return
    raise AssertionError("disconnected graph accepted")


def test_axioms_pass_on_distance_configuration():
    report = verify_configuration(distance_cfg(generators.heawood()))
    assert report.is_valid(), report.summary()


def test_axiom_i_violation_witness():
    colors = np.array([[0, 1, 1], [1, 0, 0], [1, 0, 0]])
    report = verify_configuration(Configuration(colors, pairing=[0, 1]))
    checks = [e["check"] for e in report.errors]
    assert "axiom_i" in checks, checks
    witness = report.errors[checks.index("axiom_i")]["witness"]
    assert witness == [0, 1, 2], witness


def test_pairing_out_of_range_reported():
    colors = np.array([[0, 1], [1, 0]])
    report = verify_configuration(Configuration(colors, pairing=[0, 5]))
    checks = [e["check"] for e in report.errors]
    assert checks == ["pairing_range"], checks
    assert report.errors[0]["witness"] == [1, 5], report.errors[0]["witness"]


def test_directed_triangle_passes():
    cfg = build_digraph_configuration(3, [(0, 1), (1, 2), (2, 0)])
    assert cfg.rank == 3
    assert cfg.pairing == (0, 2, 1)
    assert verify_configuration(cfg).is_valid()


def test_adjacency_configuration_fixed_ids():
    cfg = build_adjacency_configuration(nx.cycle_graph(4))
    assert cfg.colors[0, 1] == 1 and cfg.colors[0, 2] == 2
    empty = build_adjacency_configuration(nx.empty_graph(3))
    assert empty.rank == 2


# ---------------------------------------------------------------------------
# Coherence
# ---------------------------------------------------------------------------

def test_johnson_lambda():
    sc = structure_constants(distance_cfg(generators.johnson(7, 3)))
    assert isinstance(sc, StructureConstants)
    assert sc.p[1, 1, 1] == 5
    assert sc.k(1) == 12


def test_petersen_mu():
    sc = structure_constants(distance_cfg(generators.petersen()))
    assert sc.p[1, 1, 2] == 1
    assert sc.p[1, 1, 1] == 0


def test_path_is_not_coherent():
    result = structure_constants(distance_cfg(nx.path_graph(4)))
    assert isinstance(result, CoherenceViolation), result
    assert (result.i, result.j, result.t) == (1, 2, 1), result
    assert result.count_a != result.count_b


def test_identities_exact():
    for graph in (generators.petersen(), generators.heawood(), generators.hamming(3, 3)):
        sc = structure_constants(distance_cfg(graph))
        assert check_identities(sc) == [], graph.graph.get("name")


def test_algebra_identity_small():
    for graph in (generators.petersen(), generators.heawood(), nx.cycle_graph(7)):
        cfg = distance_cfg(graph)
        assert check_algebra_identity(cfg, structure_constants(cfg))


def test_classification():
    cfg = distance_cfg(generators.petersen())
    report = classify(cfg, structure_constants(cfg))
    assert report.homogeneous and report.association_scheme and report.primitive
    assert report.scheme_diameter == 2
    assert classify(distance_cfg(generators.hamming(3, 3))).primitive
    assert not classify(distance_cfg(nx.cycle_graph(6))).primitive


def test_color_distance():
    c6 = structure_constants(distance_cfg(nx.cycle_graph(6)))
    assert color_distance(c6, 1, 3) == 3
    assert color_distance(c6, 3, 1) is None
    petersen = structure_constants(distance_cfg(generators.petersen()))
    assert color_distance(petersen, 2, 1) == 2


# ---------------------------------------------------------------------------
# Refinement
# ---------------------------------------------------------------------------

def test_drg_is_stable():
    cfg = distance_cfg(generators.petersen())
    stable = wl_stabilize(cfg)
    assert stable.rank == cfg.rank
    assert same_partition(stable.colors, cfg.colors)


def test_path_refines():
    cfg = distance_cfg(nx.path_graph(4))
    stable = wl_stabilize(cfg)
    assert stable.rank > cfg.rank
    classes = sorted(sorted(c) for c in stable.vertex_classes())
    assert classes == [[0, 3], [1, 2]], classes
    assert isinstance(structure_constants(stable), StructureConstants)


def test_random_graphs_reach_coherence():
    rng = np.random.default_rng(config.DEFAULT_SEED)
    count = config.VALIDATION_THRESHOLDS["random_wl_graphs"]
    max_n = config.VALIDATION_THRESHOLDS["random_wl_max_n"]
    for index in range(count):
        n = int(rng.integers(2, max_n + 1))
        cfg = build_adjacency_configuration(generators.random_graph(n, 0.5, index))
        stable = wl_stabilize(cfg)
        assert stable.rank >= cfg.rank
        assert isinstance(structure_constants(stable), StructureConstants), f"graph {index}"
        again = wl_stabilize(stable)
        assert same_partition(again.colors, stable.colors), f"graph {index} not a fixed point"


def test_refinement_is_equivariant():
    rng = np.random.default_rng(1)
    cfg = build_adjacency_configuration(generators.random_graph(12, 0.4, 3))
    perm = rng.permutation(cfg.n)
    left = wl_stabilize(permute(cfg, perm))
    right = permute(wl_stabilize(cfg), perm)
    assert same_partition(left.colors, right.colors)


def test_individualization():
    c5 = distance_cfg(nx.cycle_graph(5))
    assert individualize_and_refine(c5, [0])[1] is False
    assert individualize_and_refine(c5, [0, 1])[1] is True
    assert individualize_and_refine(Configuration([[0]]), [])[1] is True


def test_greedy_distinguishing_set():
    c5 = distance_cfg(nx.cycle_graph(5))
    assert greedy_distinguishing_set(c5) == [0, 1]
    petersen = distance_cfg(generators.petersen())
    chosen = greedy_distinguishing_set(petersen)
    assert is_distinguishing(petersen, chosen)
    assert len(chosen) <= 2 * 10 * math.log(10) / 6 + 1
    k2 = distance_cfg(nx.complete_graph(2))
    assert len(greedy_distinguishing_set(k2)) == 1


def test_wl_round_matches_code_multisets():
    for index, graph in enumerate((nx.path_graph(5), generators.random_graph(9, 0.4, 2),
                                   generators.petersen())):
        colors = build_adjacency_configuration(graph).colors.astype(np.int64)
        rank = int(colors.max()) + 1
        n = colors.shape[0]
        signatures = {}
        for x in range(n):
            for y in range(n):
                codes = sorted(int(colors[x, z] * rank + colors[z, y]) for z in range(n))
                signatures[x, y] = (int(colors[x, y]), tuple(codes))
        names = {sig: i for i, sig in enumerate(sorted(set(signatures.values())))}
        expected = np.array([[names[signatures[x, y]] for y in range(n)] for x in range(n)])
        refined, new_rank = wl_round(colors, rank)
        assert new_rank == len(names), f"graph {index}"
        assert same_partition(refined, expected), f"graph {index}"


def test_wl_round_memory_at_300_vertices():
    colors = build_adjacency_configuration(generators.random_graph(300, 0.5, 7)).colors
    tracemalloc.start()
    try:
        refined, new_rank = wl_round(colors, 3)
        _, peak = tracemalloc.get_traced_memory()
    finally:
        tracemalloc.stop()
    # a dense n x n x (n+1) signature array alone would need over 200 MB here
    assert peak < 96 * 2 ** 20, f"peak {peak / 2 ** 20:.1f} MB"
    assert refined.shape == (300, 300) and new_rank >= 3
    old_of_new = {}
    for old, new in zip(colors.ravel().tolist(), refined.ravel().tolist()):
        assert old_of_new.setdefault(new, old) == old, "round merged two old colors"
    assert sorted(np.unique(refined).tolist()) == list(range(new_rank))


def test_wl_round_is_equivariant_at_200_vertices():
    colors = build_adjacency_configuration(generators.random_graph(200, 0.3, 11)).colors
    perm = np.random.default_rng(5).permutation(200)
    refined, rank = wl_round(colors, 3)
    moved, moved_rank = wl_round(colors[np.ix_(perm, perm)], 3)
    assert moved_rank == rank
    assert np.array_equal(moved, refined[np.ix_(perm, perm)])


def test_greedy_on_many_colors():
    # rank above the matmul threshold exercises the row-by-row gains
    graph = generators.random_graph(40, 0.5, 4)
    stable = wl_stabilize(build_adjacency_configuration(graph))
    assert stable.rank > config.GREEDY_MATMUL_COLORS
    chosen = greedy_distinguishing_set(stable)
    assert is_distinguishing(stable, chosen)
    assert not is_distinguishing(stable, [])


# ---------------------------------------------------------------------------
# Formats
# ---------------------------------------------------------------------------

def test_edge_list_comments_and_errors():
    graph = parse_edge_list("# C3\n3 3\n\n0 1\n1 2  # last two\n2 0\n")
    assert graph.number_of_nodes() == 3 and graph.number_of_edges() == 3
    try:
        parse_edge_list("3 1\n0 x\n")
    except InputFormatError as e:
        assert (e.line, e.column) == (2, 3), (e.line, e.column)
    else:
        raise AssertionError("malformed token accepted")
    assert format_edge_list(nx.path_graph(3)) == "3 2\n0 1\n1 2\n"


def test_configuration_json_file():
    cfg = build_digraph_configuration(3, [(0, 1), (1, 2), (2, 0)])
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "cfg.json"
        write_configuration(cfg, path)
        loaded = read_configuration(path)
    assert loaded == cfg
    assert loaded.diagonal_colors == (0,)


def test_configuration_json_rejects_bad_values():
    bad = [
        {"n": 2, "rank": 2, "colors": "abc"},
        {"n": 2, "rank": 2, "colors": [[0, "x"], [1, 0]]},
        {"n": 2, "rank": 2, "colors": [[0, 1], 7]},
        {"n": 2, "rank": 2, "colors": [[0, 1], [1, 0]], "pairing": ["a", 1]},
        {"n": 2, "rank": 2, "colors": [[0, 1], [1, 0]], "pairing": 3},
        [[0, 1], [1, 0]],
    ]
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "cfg.json"
        for index, data in enumerate(bad):
            path.write_text(json.dumps(data), encoding="utf-8")
            try:
                read_configuration(path)
            except InputFormatError:
                continue
            raise AssertionError(f"case {index} accepted")


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

TESTS = [
    ("distance configuration ranks", test_distance_configuration_ranks),
    ("disconnected graph names vertices", test_disconnected_graph_names_vertices),
    ("axioms pass on distance configuration", test_axioms_pass_on_distance_configuration),
    ("axiom (i) violation witness", test_axiom_i_violation_witness),
    ("pairing out of range reported", test_pairing_out_of_range_reported),
    ("directed triangle passes", test_directed_triangle_passes),
    ("adjacency configuration fixed ids", test_adjacency_configuration_fixed_ids),
    ("J(7,3) lambda = 5", test_johnson_lambda),
    ("Petersen mu = 1", test_petersen_mu),
    ("P4 not coherent at (1,2)", test_path_is_not_coherent),
    ("row sum and degree identities", test_identities_exact),
    ("A_i A_j expansion", test_algebra_identity_small),
    ("classification flags", test_classification),
    ("color distances", test_color_distance),
    ("DRG scheme is WL-stable", test_drg_is_stable),
    ("P4 refines to {0,3},{1,2}", test_path_refines),
    ("random graphs reach coherence", test_random_graphs_reach_coherence),
    ("refinement is equivariant", test_refinement_is_equivariant),
    ("individualize and refine", test_individualization),
    ("greedy distinguishing set", test_greedy_distinguishing_set),
    ("WL round matches code multisets", test_wl_round_matches_code_multisets),
    ("WL round memory at 300 vertices", test_wl_round_memory_at_300_vertices),
    ("WL round equivariant at 200 vertices", test_wl_round_is_equivariant_at_200_vertices),
    ("greedy on many colors", test_greedy_on_many_colors),
    ("edge list comments and errors", test_edge_list_comments_and_errors),
    ("configuration JSON file", test_configuration_json_file),
    ("configuration JSON rejects bad values", test_configuration_json_rejects_bad_values),
]


def main():
    print("=" * 60)
    print("core tests")
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
