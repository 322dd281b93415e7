"""
test_rank4.py
-------------
Tests for rank-4 scheme analysis: the eigenvalue cubic, the spectral
radius bounds, the diameter-2 distinguishing bound, the parameter and
triangle inequalities, and routing of oriented rank-4 configurations.

Run with: python3 -m src.validation.test_rank4

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import sys
from pathlib import Path

import numpy as np

# Add src/ to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from catalog import generators
from core.coherence import StructureConstants, structure_constants
from core.configuration import build_distance_configuration
from core.results import NotApplicable
from oracle.search import exact_motion
from rank4.analysis import (Diam2Bound, SpectralRadiusBound, constituent_core,
                            constituent_cubic, constituent_spectral_bound, cubic_residuals,
                            diam2_distinguishing_bound, merged_core, merged_spectral_bound,
                            param_inequalities, route_oriented, scheme_diameter,
                            zero_weight_radius)


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

def cyclotomic_13_3():
    cfg = generators.cyclotomic(13, 3)
    return cfg, structure_constants(cfg)


def distance_scheme(graph):
    cfg = build_distance_configuration(graph)
    return cfg, structure_constants(cfg)


def wreath_configuration():
    """Orbitals of Z_3 wr S_3 on 9 points; point (x, block) is 3x + block."""
    def point(x, block):
        return 3 * x + block

    shift = list(range(9))
    swap = [0] * 9
    rotate = [0] * 9
    for x in range(3):
        shift[point(x, 0)] = point((x + 1) % 3, 0)
        for block in range(3):
            swap[point(x, block)] = point(x, {0: 1, 1: 0, 2: 2}[block])
            rotate[point(x, block)] = point(x, (block + 1) % 3)
    return generators.orbital_configuration(9, [shift, swap, rotate])


# ---------------------------------------------------------------------------
# Cubic
# ---------------------------------------------------------------------------

def test_johnson_cubic_coefficients():
    _, sc = distance_scheme(generators.johnson(7, 3))
    assert constituent_cubic(sc, 1) == (1, -2, -15, 0)


def test_cubic_residuals():
    fixtures = [cyclotomic_13_3(), distance_scheme(generators.heawood()),
                distance_scheme(generators.johnson(7, 3))]
    for cfg, sc in fixtures:
        for i in sc.off_diagonal_colors:
            result = cubic_residuals(cfg, sc, i)
            assert result["ok"], result


def test_cubic_needs_rank_4():
    _, sc = distance_scheme(generators.petersen())
    try:
        constituent_cubic(sc, 1)
    except ValueError:
        return
    raise AssertionError("rank-3 scheme accepted")


# ---------------------------------------------------------------------------
# Spectral radius bounds
# ---------------------------------------------------------------------------

def test_core_terms():
    assert constituent_core(5, 3, 2, 4) == 7.0
    assert merged_core(3, 3, 3, 0) == 6.0


def test_small_degree_not_applicable():
    _, sc = cyclotomic_13_3()
    result = constituent_spectral_bound(sc, 0.01)
    assert isinstance(result, NotApplicable) and result.condition == "1/eps <= k1"
    assert isinstance(merged_spectral_bound(sc, 0.01), NotApplicable)


def test_constituent_bound_dominates_radius():
    cfg, sc = distance_scheme(generators.johnson(7, 3))
    for epsilon in (0.5, 1.0):
        result = constituent_spectral_bound(sc, epsilon)
        assert isinstance(result, SpectralRadiusBound), result
        first = int(np.flatnonzero(np.asarray(result.perm) == 1)[0])
        assert zero_weight_radius(cfg, [first]) <= result.bound + 1e-9
    assert constituent_spectral_bound(sc, 1.0).slack >= constituent_spectral_bound(sc, 0.5).slack


def test_merged_bound_dominates_radius():
    cfg, sc = distance_scheme(generators.johnson(7, 3))
    result = merged_spectral_bound(sc, 1.0)
    assert isinstance(result, SpectralRadiusBound), result
    perm = np.asarray(result.perm)
    merged = [int(np.flatnonzero(perm == 1)[0]), int(np.flatnonzero(perm == 2)[0])]
    assert zero_weight_radius(cfg, merged) <= result.bound + 1e-9


# ---------------------------------------------------------------------------
# Diameter 2
# ---------------------------------------------------------------------------

def test_scheme_diameters():
    assert scheme_diameter(cyclotomic_13_3()[1]) == 2
    assert scheme_diameter(distance_scheme(generators.johnson(7, 3))[1]) == 3


def test_cyclotomic_diam2_bound():
    cfg, sc = cyclotomic_13_3()
    result = diam2_distinguishing_bound(sc)
    assert isinstance(result, Diam2Bound), result
    assert result.gamma == 1 and result.bound == 2
    assert exact_motion(cfg) >= result.bound


def test_diam3_not_applicable():
    _, sc = distance_scheme(generators.heawood())
    assert isinstance(diam2_distinguishing_bound(sc), NotApplicable)


def test_param_inequalities_need_diameter_2():
    for graph in (generators.heawood(), generators.johnson(7, 3)):
        _, sc = distance_scheme(graph)
        assert sc.rank == 4
        result = param_inequalities(sc, 0.5)
        assert isinstance(result, NotApplicable), graph.graph.get("name")
        assert result.rule == "param-inequalities" and result.rhs == 2
        assert result.lhs == scheme_diameter(sc) and result.lhs != 2


# ---------------------------------------------------------------------------
# Inequalities
# ---------------------------------------------------------------------------

def test_param_precondition_fails():
    _, sc = cyclotomic_13_3()
    report = param_inequalities(sc, 0.5)
    assert report.precondition is not None and not report.precondition.holds
    assert not report.asserted
    assert report.consistent
    assert report.triangle


def test_artificial_tensor_flagged():
    _, sc = cyclotomic_13_3()
    p = np.array(sc.p)
    p[1, 1, 1] = 100
    broken = StructureConstants(p, sc.n, sc.diagonal_colors, sc.pairing)
    report = param_inequalities(broken, 0.5)
    assert not report.consistent
    assert any(q.name.startswith("triangle") for q in report.violations)


# ---------------------------------------------------------------------------
# Oriented rank 4
# ---------------------------------------------------------------------------

def test_oriented_routing():
    cfg = wreath_configuration()
    assert cfg.rank == 4 and len(cfg.oriented_colors()) == 2
    routed = route_oriented(cfg)
    assert isinstance(routed, dict), routed
    assert routed["parameters"] == [9, 6, 3, 6]
    assert routed["symmetric_color"] not in routed["oriented_colors"]
    assert routed["oriented_union"]["not_applicable"] == "connected"


def test_symmetric_scheme_not_routed():
    cfg, _ = distance_scheme(generators.johnson(7, 3))
    assert isinstance(route_oriented(cfg), NotApplicable)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

TESTS = [
    ("J(7,3) cubic coefficients", test_johnson_cubic_coefficients),
    ("cubic residuals", test_cubic_residuals),
    ("cubic needs rank 4", test_cubic_needs_rank_4),
    ("core terms", test_core_terms),
    ("small degree not applicable", test_small_degree_not_applicable),
    ("constituent bound dominates radius", test_constituent_bound_dominates_radius),
    ("merged bound dominates radius", test_merged_bound_dominates_radius),
    ("scheme diameters", test_scheme_diameters),
    ("cyclotomic(13,3) diameter-2 bound", test_cyclotomic_diam2_bound),
    ("diameter 3 not applicable", test_diam3_not_applicable),
    ("param inequalities need diameter 2", test_param_inequalities_need_diameter_2),
    ("parameter precondition fails", test_param_precondition_fails),
    ("artificial tensor flagged", test_artificial_tensor_flagged),
    ("oriented routing", test_oriented_routing),
    ("symmetric scheme not routed", test_symmetric_scheme_not_routed),
]


def main():
    print("=" * 60)
    print("rank-4 tests")
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
