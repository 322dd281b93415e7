"""
test_motion.py
--------------
Tests for the motion certificates: distinguishing numbers, the spectral
and bipartite spectral rules, the primitive DRG and bounded-degree rules,
the order/thickness estimates and the combined certify() entry point.

Run with: python3 -m src.validation.test_motion

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import math
import sys
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import networkx as nx

# Add src/ to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from catalog import generators
from catalog.families import family_tag
from core.coherence import structure_constants
from core.configuration import build_distance_configuration
from core.refinement import greedy_distinguishing_set, is_distinguishing
from core.results import NotApplicable
from drg.bounds import ParameterError
from drg.intersection_array import extract_intersection_array
from motion.certificates import (MotionCertificate, NotBipartiteError, bipartite_spectral_bound,
                                 bound_from_distinguishing, bounded_degree_bound,
                                 color_propagation_bound, distinguishing_numbers,
                                 order_and_thickness_bounds, primitive_drg_bound, spectral_bound)
from motion.certify import all_not_applicable, certify
from oracle.search import SearchTimeout, exact_motion


def distance_cfg(graph):
    return build_distance_configuration(graph)


# ---------------------------------------------------------------------------
# Distinguishing numbers
# ---------------------------------------------------------------------------

def test_distinguishing_numbers():
    assert distinguishing_numbers(distance_cfg(nx.cycle_graph(5))).d_min == 4
    petersen = distinguishing_numbers(distance_cfg(generators.petersen()))
    assert petersen.d_min == 6
    assert petersen.per_color == {1: 6, 2: 6}
    assert distinguishing_numbers(distance_cfg(nx.complete_graph(2))).d_min == 2


def test_bound_from_distinguishing():
    cert = bound_from_distinguishing(distance_cfg(generators.petersen()))
    assert isinstance(cert, MotionCertificate)
    assert cert.bound == 6 and cert.rule == "distinguishing"
    c6 = distance_cfg(nx.cycle_graph(6))
    cert = bound_from_distinguishing(c6)
    assert cert.bound == 4
    assert cert.bound <= exact_motion(c6)
    for value in cert.inputs.get("propagated", {}).values():
        assert value <= cert.bound


def test_color_propagation():
    cfg = distance_cfg(generators.petersen())
    sc = structure_constants(cfg)
    cert = color_propagation_bound(sc, 2, 6, cfg.n)
    assert isinstance(cert, MotionCertificate)
    assert cert.inputs["max_dist"] == 2 and cert.bound == 3
    c6 = structure_constants(distance_cfg(nx.cycle_graph(6)))
    assert isinstance(color_propagation_bound(c6, 1, 6, 6), NotApplicable)


def test_greedy_set_size_on_catalog():
    for cfg in (distance_cfg(generators.petersen()), distance_cfg(generators.heawood()),
                distance_cfg(generators.johnson(7, 3)), distance_cfg(generators.hamming(3, 3)),
                distance_cfg(nx.cycle_graph(7)), generators.cyclotomic(13, 3)):
        d_min = distinguishing_numbers(cfg).d_min
        chosen = greedy_distinguishing_set(cfg)
        assert is_distinguishing(cfg, chosen)
        assert len(chosen) <= 2 * cfg.n * math.log(cfg.n) / d_min + 1, (cfg.n, len(chosen), d_min)


# ---------------------------------------------------------------------------
# Spectral rules
# ---------------------------------------------------------------------------

def test_spectral_bound():
    assert spectral_bound(generators.triangular(5)).bound == 0
    assert spectral_bound(generators.petersen()).bound == 0
    assert isinstance(spectral_bound(nx.empty_graph(3)), NotApplicable)


def test_bipartite_spectral_bound():
    cert = bipartite_spectral_bound(generators.hypercube(3))
    assert cert.inputs["k"] == 3 and cert.inputs["q"] == 2
    assert cert.bound == 0
    try:
        bipartite_spectral_bound(nx.cycle_graph(5))
    except NotBipartiteError:
        return
    raise AssertionError("odd cycle accepted")


# ---------------------------------------------------------------------------
# Distance-regular and bounded degree
# ---------------------------------------------------------------------------

def test_primitive_drg_bound():
    johnson = primitive_drg_bound(extract_intersection_array(generators.johnson(7, 3)))
    assert johnson.bound == 3 and johnson.inputs["j"] == 1
    assert johnson.inputs["alpha"] == Fraction(1, 2) and johnson.inputs["beta"] == Fraction(1, 3)
    assert primitive_drg_bound(extract_intersection_array(generators.petersen())).bound == 2
    assert isinstance(primitive_drg_bound(extract_intersection_array(nx.cycle_graph(6))), NotApplicable)


def test_bounded_degree_bound():
    sc = structure_constants(generators.cyclotomic(13, 3))
    cert = bounded_degree_bound(sc, Fraction(4, 13))
    assert isinstance(cert, MotionCertificate), cert
    assert cert.bound == 1 and cert.inputs["rank"] == 4
    assert isinstance(bounded_degree_bound(sc, Fraction(3, 13)), NotApplicable)
    assert isinstance(bounded_degree_bound(sc, 1), NotApplicable)
    c6 = structure_constants(distance_cfg(nx.cycle_graph(6)))
    assert isinstance(bounded_degree_bound(c6, Fraction(1, 2)), NotApplicable)


def test_order_and_thickness():
    result = order_and_thickness_bounds(10, 6, 0.5)
    assert result["log_order"] >= math.log(120)
    assert math.isclose(result["log10_order"], result["log_order"] / math.log(10))
    assert isinstance(result["thickness"], float) and result["thickness"] > 0
    for args in ((10, 0, 0.5), (10, 6, 1.0)):
        try:
            order_and_thickness_bounds(*args)
        except ParameterError:
            continue
        raise AssertionError(f"{args} accepted")


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------

def test_certify_petersen():
    cert = certify(distance_cfg(generators.petersen()))
    assert cert.bound == 6
    assert not all_not_applicable(cert)
    assert any(entry.get("not_applicable") for entry in cert.all_rules)


def test_certify_johnson():
    cert = certify(distance_cfg(generators.johnson(7, 3)))
    assert cert.family == family_tag("johnson", (7, 3))
    assert cert.bound == 20


def test_certify_crown():
    cfg = distance_cfg(generators.cocktail(4))
    cert = certify(cfg)
    assert cert.family == "cocktail(4)"
    assert cert.bound == 4 == exact_motion(cfg)


def test_unconfirmed_family_not_used():
    with patch("catalog.families.isomorphic", side_effect=SearchTimeout("budget")):
        cert = certify(distance_cfg(generators.johnson(7, 3)))
    assert cert.family == "johnson(7,3)"
    assert cert.rule != "exceptional-family"
    assert any(entry.get("rule") == "exceptional-family" and entry.get("not_applicable")
               for entry in cert.all_rules)


def test_certificates_are_sound():
    for graph in (nx.cycle_graph(6), nx.cycle_graph(7), generators.heawood(),
                  generators.lattice(3), generators.kneser(5, 2)):
        cfg = distance_cfg(graph)
        cert = certify(cfg)
        motion = exact_motion(cfg)
        assert motion is not None
        assert cert.bound <= motion, f"{graph.graph.get('name')}: {cert.bound} > {motion}"
    tree = distance_cfg(generators.asymmetric_tree())
    assert exact_motion(tree) is None
    assert certify(tree).bound <= tree.n


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

TESTS = [
    ("distinguishing numbers", test_distinguishing_numbers),
    ("bound from distinguishing", test_bound_from_distinguishing),
    ("color propagation", test_color_propagation),
    ("greedy set size on catalog", test_greedy_set_size_on_catalog),
    ("spectral bound", test_spectral_bound),
    ("bipartite spectral bound", test_bipartite_spectral_bound),
    ("primitive DRG bound", test_primitive_drg_bound),
    ("bounded degree bound", test_bounded_degree_bound),
    ("order and thickness", test_order_and_thickness),
    ("certify Petersen", test_certify_petersen),
    ("certify J(7,3)", test_certify_johnson),
    ("certify crown graph", test_certify_crown),
    ("unconfirmed family not used", test_unconfirmed_family_not_used),
    ("certificates are sound", test_certificates_are_sound),
]


def main():
    print("=" * 60)
    print("motion tests")
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
