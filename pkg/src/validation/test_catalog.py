"""
test_catalog.py
---------------
Tests for the family catalog: parsing, generators, closed-form spectra,
exceptional motions, automorphism group orders and recognition.

Run with: python3 -m src.validation.test_catalog

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import sys
from pathlib import Path
from unittest.mock import patch

import networkx as nx

# Add src/ to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from catalog import generators
from catalog.families import (Recognition, as_configuration, automorphism_group_order,
                              cameron_min_degree, candidates, closed_form_spectrum,
                              exceptional_motion, generate, parse_family, recognize)
from core.configuration import Configuration, build_distance_configuration
from drg.bounds import ParameterError
from drg.spectrum import adjacency_spectrum, spectra_match
from oracle.search import SearchTimeout, automorphisms, exact_motion


# ---------------------------------------------------------------------------
# Parsing and generation
# ---------------------------------------------------------------------------

def test_parse_family():
    assert parse_family("johnson:7,3") == ("johnson", (7, 3))
    assert parse_family(" Petersen ") == ("petersen", ())
    for text in ("moore:57", "johnson:7", "johnson:a,b"):
        try:
            parse_family(text)
        except ParameterError:
            continue
        raise AssertionError(f"{text!r} accepted")


def test_generate_sizes():
    assert generate("johnson", (7, 3)).number_of_nodes() == 35
    assert generate("hamming", (3, 3)).number_of_nodes() == 27
    assert generate("triangular", (7,)).number_of_edges() == 21 * 10 // 2
    crown = generate("cocktail", (4,))
    assert crown.number_of_edges() == 12 and nx.is_bipartite(crown)
    assert nx.is_isomorphic(generate("kneser", (5, 2)), generators.petersen())
    scheme = generate("cyclotomic", (13, 3))
    assert isinstance(scheme, Configuration) and scheme.rank == 4
    assert as_configuration(generators.petersen()).rank == 3
    assert as_configuration(nx.Graph([(0, 1), (2, 3)])).rank == 3


def test_generator_parameter_errors():
    for family, params in (("johnson", (5, 3)), ("cocktail", (1,)), ("cyclotomic", (12, 2))):
        try:
            generate(family, params)
        except ParameterError:
            continue
        raise AssertionError(f"{family}{params} accepted")


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def test_closed_form_spectra():
    for family, params, graph in (("johnson", (7, 3), generators.johnson(7, 3)),
                                  ("hamming", (3, 3), generators.hamming(3, 3)),
                                  ("triangular", (6,), generators.triangular(6)),
                                  ("lattice", (4,), generators.lattice(4))):
        assert spectra_match(closed_form_spectrum(family, params), adjacency_spectrum(graph)), family


def test_cameron_min_degree():
    assert cameron_min_degree(7, 3) == {"transposition": 20, "three_cycle": 30, "minimum": 20}
    assert cameron_min_degree(5, 2)["minimum"] == 6


def test_exceptional_motion():
    assert exceptional_motion("johnson", (7, 3)) == 20
    assert exceptional_motion("hamming", (3, 3)) == 18
    assert exceptional_motion("cocktail", (4,)) == 4
    assert exceptional_motion("triangular", (5,)) == 6
    assert exceptional_motion("lattice", (4,)) == 8
    try:
        exceptional_motion("cycle", (5,))
    except ParameterError:
        return
    raise AssertionError("cycle treated as exceptional")


def test_exceptional_motion_matches_oracle():
    for family, params in (("johnson", (7, 3)), ("hamming", (3, 3)), ("cocktail", (4,)),
                           ("triangular", (5,)), ("lattice", (4,))):
        cfg = as_configuration(generate(family, params))
        assert exact_motion(cfg) == exceptional_motion(family, params), f"{family}{params}"


def test_group_orders_match_oracle():
    for family, params, order in (("johnson", (7, 3), 5040), ("hamming", (3, 3), 1296),
                                  ("cocktail", (4,), 48), ("cycle", (6,), 12),
                                  ("triangular", (5,), 120)):
        assert automorphism_group_order(family, params) == order
        cfg = as_configuration(generate(family, params))
        assert automorphisms(cfg).order == order, f"{family}{params}"


# ---------------------------------------------------------------------------
# Recognition
# ---------------------------------------------------------------------------

def test_candidates():
    found = list(candidates(10))
    assert ("cocktail", (5,)) in found and ("triangular", (5,)) in found
    assert ("johnson", (7, 3)) in list(candidates(35))
    assert ("cyclotomic", (13, 3)) in list(candidates(13))


def test_recognize_families():
    triangular = recognize(build_distance_configuration(generators.triangular(7)))
    assert isinstance(triangular, Recognition)
    assert triangular.tag == "triangular(7)" and triangular.confirmed
    assert triangular.is_exceptional
    cyclotomic = recognize(generators.cyclotomic(13, 3))
    assert cyclotomic.tag == "cyclotomic(13,3)" and not cyclotomic.is_exceptional


def test_recognize_complement():
    result = recognize(build_distance_configuration(generators.petersen()))
    assert isinstance(result, Recognition)
    assert result.complement and result.tag == "triangular-complement(5)"


def test_recognize_misses():
    assert recognize(build_distance_configuration(generators.heawood())) is None
    assert recognize(build_distance_configuration(generators.asymmetric_tree())) is None
    assert recognize(build_distance_configuration(generators.triangular(7)), max_n=10) is None


def test_recognition_timeout_is_parameter_match():
    cfg = build_distance_configuration(generators.johnson(7, 3))
    with patch("catalog.families.isomorphic", side_effect=SearchTimeout("budget")):
        result = recognize(cfg)
    assert result.tag == "johnson(7,3)"
    assert not result.confirmed and result.method == "parameter-match"


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

TESTS = [
    ("parse family", test_parse_family),
    ("generate sizes", test_generate_sizes),
    ("generator parameter errors", test_generator_parameter_errors),
    ("closed-form spectra", test_closed_form_spectra),
    ("Cameron minimal degree", test_cameron_min_degree),
    ("exceptional motion", test_exceptional_motion),
    ("exceptional motion matches oracle", test_exceptional_motion_matches_oracle),
    ("group orders match oracle", test_group_orders_match_oracle),
    ("candidates", test_candidates),
    ("recognize families", test_recognize_families),
    ("recognize complement", test_recognize_complement),
    ("recognition misses", test_recognize_misses),
    ("recognition timeout is parameter match", test_recognition_timeout_is_parameter_match),
]


def main():
    print("=" * 60)
    print("catalog tests")
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
