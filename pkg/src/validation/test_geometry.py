"""
test_geometry.py
----------------
Tests for clique geometries (Metsch lines, Delsarte cliques, the PSD
witness), Seidel recognition, line-graph roots, the Sun-Wilmes rule and
the diameter-3 parameter check.

Run with: python3 -m src.validation.test_geometry

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import sys
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import networkx as nx

# Add src/ to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from catalog import generators
from core.results import NotApplicable
from drg.bounds import ParameterError
from drg.intersection_array import parse_array
from geometry.cliques import (CliqueGeometry, CoverError, delsarte_clique_bound, delsarte_cliques,
                              metsch_lines, verify_clique_geometry)
from geometry.recognition import (BangCheck, SeidelRecognition, bang_parameter_check,
                                  line_graph_reconstruct, seidel_recognize)
from geometry.sun_wilmes import best_sun_wilmes_bound, sun_wilmes_bound
from motion.certificates import MotionCertificate
from oracle.search import exact_motion


# ---------------------------------------------------------------------------
# Clique geometry
# ---------------------------------------------------------------------------

def test_metsch_triangular():
    geometry = metsch_lines(generators.triangular(11))
    assert isinstance(geometry, CliqueGeometry), geometry
    assert len(geometry.lines) == 11
    assert {len(line) for line in geometry.lines} == {10}
    assert geometry.m == 2


def test_metsch_lattice():
    geometry = metsch_lines(generators.lattice(6))
    assert isinstance(geometry, CliqueGeometry), geometry
    assert len(geometry.lines) == 12
    assert {len(line) for line in geometry.lines} == {6}


def test_metsch_petersen_not_applicable():
    result = metsch_lines(generators.petersen())
    assert isinstance(result, NotApplicable)
    assert result.condition.startswith("condition (4)")
    try:
        metsch_lines(generators.petersen(), lam1=1)
    except ParameterError:
        return
    raise AssertionError("lambda1 above the graph's value accepted")


def test_verify_triangular_geometry():
    graph = generators.triangular(11)
    check = verify_clique_geometry(graph, metsch_lines(graph).lines)
    assert check.m == 2 and check.uniform and check.geometric
    assert check.mu == 4 and check.mu_bound_ok
    assert check.psd_witness


def test_verify_johnson_delsarte_geometry():
    graph = generators.johnson(7, 3)
    lines = delsarte_cliques(graph, 12, -3)
    assert len(lines) == 21
    check = verify_clique_geometry(graph, lines, diameter=3)
    assert check.m == 3 and check.line_count == 21
    assert check.mu_bound_d3 == 4 and check.mu_bound_d3_ok
    assert check.psd_witness
    assert abs(check.theta_min + 3) < 1e-9


def test_cover_error():
    try:
        verify_clique_geometry(nx.path_graph(3), [[0, 1]])
    except CoverError as e:
        assert e.edge == (1, 2) and e.count == 0
        return
    raise AssertionError("uncovered edge accepted")


def test_delsarte_bound():
    assert delsarte_clique_bound(6, -2) == 4
    assert delsarte_clique_bound(12, -3) == 5
    assert delsarte_clique_bound(3, -1.9999999999) == Fraction(5, 2)
    try:
        delsarte_clique_bound(3, 0)
    except ParameterError:
        return
    raise AssertionError("theta_min = 0 accepted")


# ---------------------------------------------------------------------------
# Line graphs and Seidel
# ---------------------------------------------------------------------------

def test_line_graph_roots():
    root = line_graph_reconstruct(generators.triangular(5))
    assert root is not None
    assert root.number_of_nodes() == 5 and root.number_of_edges() == 10
    line_of_petersen = nx.convert_node_labels_to_integers(nx.line_graph(generators.petersen()))
    root = line_graph_reconstruct(line_of_petersen)
    assert root is not None and nx.is_isomorphic(root, generators.petersen())
    assert line_graph_reconstruct(generators.petersen()) is None


def test_seidel_strongly_regular():
    triangular = seidel_recognize(generators.triangular(7))
    assert isinstance(triangular, SeidelRecognition)
    assert triangular.tag == "T(7)" and triangular.confirmed
    assert triangular.parameters == (21, 10, 5, 4)
    lattice = seidel_recognize(generators.lattice(5))
    assert lattice.tag == "L2(5)" and lattice.confirmed
    petersen = seidel_recognize(generators.petersen())
    assert petersen.tag == "sporadic-n<=28" and not petersen.confirmed


def test_seidel_timeout_is_unconfirmed():
    with patch("geometry.recognition.graphs_isomorphic", return_value=None):
        triangular = seidel_recognize(generators.triangular(7))
        lattice = seidel_recognize(generators.lattice(5))
        blocked = sun_wilmes_bound(generators.johnson_scheme(8, 2), [1])
    assert triangular.tag == "T(7)" and triangular.family == "triangular"
    assert not triangular.confirmed and triangular.method == "timeout"
    assert lattice.tag == "L2(5)" and not lattice.confirmed
    assert isinstance(blocked, NotApplicable)
    assert blocked.condition == "X_I confirmed isomorphic to T(s)" and blocked.lhs == "timeout"


def test_seidel_grid_and_rejections():
    rook = nx.convert_node_labels_to_integers(nx.line_graph(nx.complete_bipartite_graph(3, 4)))
    grid = seidel_recognize(rook)
    assert grid.tag == "grid(3,4)" and grid.family == "grid"
    assert isinstance(seidel_recognize(nx.complete_multipartite_graph(3, 3, 3)), NotApplicable)
    try:
        seidel_recognize(nx.Graph([(0, 1), (2, 3)]))
    except ParameterError:
        return
    raise AssertionError("disconnected graph accepted")


# ---------------------------------------------------------------------------
# Sun-Wilmes
# ---------------------------------------------------------------------------

def test_sun_wilmes_johnson_scheme():
    cfg = generators.johnson_scheme(8, 2)
    cert = sun_wilmes_bound(cfg, [1])
    assert isinstance(cert, MotionCertificate), cert
    assert cert.inputs["s"] == 8 and cert.inputs["alpha"] == Fraction(2, 7)
    assert cert.bound == 4
    assert isinstance(sun_wilmes_bound(cfg, [2]), NotApplicable)
    assert isinstance(sun_wilmes_bound(cfg, [0]), NotApplicable)


def test_sun_wilmes_semilinear():
    cfg = generators.semilinear_pair_configuration()
    assert cfg.n == 28 and len(cfg.oriented_colors()) == 2
    oriented = cfg.oriented_colors()
    assert isinstance(sun_wilmes_bound(cfg, oriented[:1]), NotApplicable)
    cert = best_sun_wilmes_bound(cfg)
    assert isinstance(cert, MotionCertificate), cert
    assert cert.inputs["s"] == 8
    motion = exact_motion(cfg)
    assert motion is not None and cert.bound <= motion


# ---------------------------------------------------------------------------
# Diameter-3 parameters
# ---------------------------------------------------------------------------

def test_bang_check():
    consistent = bang_parameter_check(parse_array("{30,24,8;1,1,9}"))
    assert isinstance(consistent, BangCheck)
    assert consistent.consistent and consistent.beta == 3
    broken = bang_parameter_check(parse_array("{30,24,8;1,1,10}"))
    assert not broken.consistent and "c3" in broken.failed
    assert isinstance(bang_parameter_check(parse_array("{3,2;1,1}")), NotApplicable)
    assert isinstance(bang_parameter_check(parse_array("{12,6,2;1,4,9}")), NotApplicable)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

TESTS = [
    ("Metsch lines of T(11)", test_metsch_triangular),
    ("Metsch lines of L2(6)", test_metsch_lattice),
    ("Metsch not applicable to Petersen", test_metsch_petersen_not_applicable),
    ("verify T(11) geometry", test_verify_triangular_geometry),
    ("verify J(7,3) Delsarte geometry", test_verify_johnson_delsarte_geometry),
    ("cover error", test_cover_error),
    ("Delsarte bound", test_delsarte_bound),
    ("line graph roots", test_line_graph_roots),
    ("Seidel strongly regular", test_seidel_strongly_regular),
    ("Seidel timeout stays unconfirmed", test_seidel_timeout_is_unconfirmed),
    ("Seidel grid and rejections", test_seidel_grid_and_rejections),
    ("Sun-Wilmes on J(8,2) scheme", test_sun_wilmes_johnson_scheme),
    ("Sun-Wilmes on semilinear pairs", test_sun_wilmes_semilinear),
    ("diameter-3 parameter check", test_bang_check),
]


def main():
    print("=" * 60)
    print("geometry tests")
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
