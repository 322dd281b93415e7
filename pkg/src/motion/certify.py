"""
certify.py
----------
Run every applicable motion rule on a configuration and keep the best bound.

Rules run in a fixed order:
    1. distinguishing (D_min), then the rank-4 diameter-2 count
    2. color-propagation from the largest color
    3. spectral, per pairing-closed constituent
    4. bipartite-spectral, per bipartite constituent
    5. primitive-drg
    6. bounded-degree with delta = max k_i / n
    7. sun-wilmes
    8. exceptional-family (exact motion, only when the oracle confirmed the family)

The largest bound wins; ties keep the earlier rule. Every rule's outcome is
recorded in all_rules.

Usage:
    from motion.certify import certify
    cert = certify(build_distance_configuration(graph))
    print(cert.to_dict())

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Union

import networkx as nx

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from catalog.families import Recognition, exceptional_motion, recognize
from core.coherence import ConsistencyError, StructureConstants, structure_constants
from core.configuration import Configuration
from core.results import NotApplicable
from drg.intersection_array import as_distance_regular
from geometry.sun_wilmes import best_sun_wilmes_bound
from motion.certificates import (IrregularGraphError, MotionCertificate, NotBipartiteError,
                                 bipartite_spectral_bound, bound_from_distinguishing,
                                 bounded_degree_bound, color_propagation_bound,
                                 distinguishing_numbers, primitive_drg_bound, spectral_bound)
from rank4.analysis import diam2_distinguishing_bound

logger = logging.getLogger(__name__)

Outcome = Union[MotionCertificate, NotApplicable]


def _record(outcome: Outcome, label: Optional[str] = None) -> Dict:
    if isinstance(outcome, MotionCertificate):
        entry = {"rule": outcome.rule, "bound": outcome.bound, "inputs": outcome.inputs}
    else:
        entry = outcome.to_dict()
    if label:
        entry["label"] = label
    return entry


def _units(cfg: Configuration) -> List[List[int]]:
    """Off-diagonal colors grouped with their pair, in color order."""
    seen, units = set(), []
    for i in cfg.off_diagonal_colors:
        if i in seen:
            continue
        unit = sorted({i, cfg.pairing[i]})
        seen.update(unit)
        units.append(unit)
    return units


def _constituent_rules(cfg: Configuration) -> List[tuple]:
    results = []
    if not cfg.is_homogeneous:
        results.append((NotApplicable("spectral", "homogeneous", len(cfg.diagonal_colors), 1), None))
        return results
    for unit in _units(cfg):
        graph = cfg.constituent_graph(unit)
        label = f"X_{{{','.join(map(str, unit))}}}"
        try:
            results.append((spectral_bound(graph), label))
        except IrregularGraphError as e:
            results.append((NotApplicable("spectral", "regular constituent", str(e), None), label))
        if nx.is_connected(graph) and nx.is_bipartite(graph):
            try:
                results.append((bipartite_spectral_bound(graph), label))
            except (NotBipartiteError, IrregularGraphError) as e:
                results.append((NotApplicable("bipartite-spectral", "balanced regular bipartite",
                                              str(e), None), label))
    return results


def certify(cfg: Configuration, timeout: Optional[float] = None,
            use_recognition: bool = True) -> MotionCertificate:
    """
    Best motion lower bound over all rules, with every outcome recorded.

    Args:
        cfg: a configuration that passed verify_configuration
        timeout: seconds for the family-recognition isomorphism check
        use_recognition: run catalog recognition (exceptional-family rule)
    """
    timeout = config.ISOMORPHISM_BUDGET_SECONDS if timeout is None else timeout
    outcomes: List[tuple] = []
    result = structure_constants(cfg)
    sc = result if isinstance(result, StructureConstants) else None

    try:
        numbers = distinguishing_numbers(cfg, sc)
        outcomes.append((bound_from_distinguishing(cfg, numbers), None))
    except ConsistencyError as e:
        logger.error(f"Distinguishing numbers inconsistent: {e}")
        numbers = None
        outcomes.append((NotApplicable("distinguishing", "consistent distinguishing numbers", str(e), None), None))

    if sc is not None:
        diam2 = diam2_distinguishing_bound(sc)
        if isinstance(diam2, NotApplicable):
            outcomes.append((diam2, "rank4-diam2"))
        else:
            outcomes.append((MotionCertificate(cfg.n, diam2.bound, "distinguishing", diam2.to_dict()),
                             "rank4-diam2"))
        if numbers is not None and numbers.per_color:
            largest = max(numbers.per_color, key=lambda i: (sc.k(i), -i))
            outcomes.append((color_propagation_bound(sc, largest, numbers.per_color[largest], cfg.n), None))

    outcomes.extend(_constituent_rules(cfg))

    drg = as_distance_regular(cfg)
    if drg is not None:
        outcomes.append((primitive_drg_bound(drg[1]), None))
    else:
        outcomes.append((NotApplicable("primitive-drg", "distance scheme of a DRG", False, True), None))

    if sc is not None and cfg.n > 0:
        delta = Fraction(max(sc.k(i) for i in sc.off_diagonal_colors), cfg.n) if sc.off_diagonal_colors else Fraction(0)
        outcomes.append((bounded_degree_bound(sc, delta), None))

    outcomes.append((best_sun_wilmes_bound(cfg), None))

    family = None
    if use_recognition:
        recognition = recognize(cfg, timeout=timeout)
        if isinstance(recognition, Recognition):
            family = recognition.tag
            if recognition.is_exceptional and recognition.confirmed:
                exact = exceptional_motion(recognition.family, recognition.params)
                outcomes.append((MotionCertificate(cfg.n, exact, "exceptional-family", {
                    "exact_motion": exact,
                    "recognition": recognition.to_dict(),
                }), None))
            elif recognition.is_exceptional:
                logger.warning(f"{recognition.tag} matched by parameters only; exact motion not used")
                outcomes.append((NotApplicable("exceptional-family", "oracle-confirmed recognition",
                                               recognition.method, "oracle"), None))

    best: Optional[MotionCertificate] = None
    for outcome, _ in outcomes:
        if isinstance(outcome, MotionCertificate) and (best is None or outcome.bound > best.bound):
            best = outcome
    if best is None:
        best = MotionCertificate(cfg.n, 0, "distinguishing", {"d_min": None})

    certificate = MotionCertificate(cfg.n, best.bound, best.rule, best.inputs, family,
                                    [_record(outcome, label) for outcome, label in outcomes])
    logger.info(f"Certified motion >= {certificate.bound} by {certificate.rule}"
                f"{f' ({family})' if family else ''}")
    return certificate


def all_not_applicable(certificate: MotionCertificate) -> bool:
    """True when no rule produced a certificate."""
    return not any("bound" in entry for entry in certificate.all_rules)
