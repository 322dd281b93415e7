"""
sun_wilmes.py
-------------
Motion bound for homogeneous configurations with a triangular constituent.

If X_I (I a pairing-closed color set) is a triangular graph T(s), its
Delsarte cliques (the s stars of size s - 1) are lines. With alpha the
least fraction of a clique that distinguishes two of its own vertices,
motion >= alpha n / 2, and a set of about 4/alpha ln|C| + 2 vertices
splits every pair.

Usage:
    from geometry.sun_wilmes import sun_wilmes_bound
    cert = sun_wilmes_bound(cfg, [1])

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import itertools
import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from core.configuration import Configuration
from core.results import NotApplicable
from geometry.cliques import delsarte_cliques
from geometry.recognition import SeidelRecognition, triangular_order, seidel_recognize
from motion.certificates import MotionCertificate

logger = logging.getLogger(__name__)

RULE = "sun-wilmes"


def clique_alpha(cfg: Configuration, cliques: List[Tuple[int, ...]]) -> Fraction:
    """min over cliques C and x != y in C of |{z in C : c(z,x) != c(z,y)}| / |C|."""
    colors = cfg.colors.astype(np.int64)
    alpha: Optional[Fraction] = None
    for clique in cliques:
        sub = colors[np.ix_(clique, clique)]
        size = len(clique)
        for x, y in itertools.combinations(range(size), 2):
            count = int((sub[:, x] != sub[:, y]).sum())
            value = Fraction(count, size)
            if alpha is None or value < alpha:
                alpha = value
    return alpha if alpha is not None else Fraction(0)


def sun_wilmes_bound(cfg: Configuration, color_set: Iterable[int]) -> Union[MotionCertificate, NotApplicable]:
    colors = sorted(set(int(i) for i in color_set))
    if not cfg.is_homogeneous:
        return NotApplicable(RULE, "homogeneous", len(cfg.diagonal_colors), 1)
    if not colors or set(colors) & set(cfg.diagonal_colors):
        return NotApplicable(RULE, "I is a non-empty set of off-diagonal colors", colors, None)
    if any(cfg.pairing[i] not in colors for i in colors):
        return NotApplicable(RULE, "I is closed under pairing", colors, [cfg.pairing[i] for i in colors])

    graph = cfg.constituent_graph(colors)
    if not nx.is_connected(graph):
        return NotApplicable(RULE, "X_I connected", False, True)
    if len({d for _, d in graph.degree()}) != 1:
        return NotApplicable(RULE, "X_I regular", False, True)
    recognition = seidel_recognize(graph)
    if not isinstance(recognition, SeidelRecognition):
        return NotApplicable(RULE, "X_I is T(s)", recognition.lhs, recognition.rhs)
    if recognition.family != "triangular":
        return NotApplicable(RULE, "X_I is T(s)", recognition.tag, "T(s)")
    if not recognition.confirmed:
        return NotApplicable(RULE, "X_I confirmed isomorphic to T(s)", recognition.method, "oracle")

    s = recognition.params[0]
    cliques = delsarte_cliques(graph, 2 * (s - 2), -2)
    if len(cliques) != s:
        return NotApplicable(RULE, "Delsarte clique geometry with s lines", len(cliques), s)
    size = s - 1
    alpha = clique_alpha(cfg, cliques)
    if alpha <= 0:
        return NotApplicable(RULE, "alpha > 0", alpha, 0)
    # any alpha' < 1/2 is usable, so the limit n/4 is too
    effective = min(alpha, Fraction(1, 2))
    if not (1 - effective) * size > 1:
        return NotApplicable(RULE, "(1 - alpha)|C| > 1", (1 - effective) * size, 1)

    bound = math.ceil(effective * cfg.n / 2)
    split_set = 4 / float(alpha) * math.log(size) + 2
    logger.info(f"Sun-Wilmes: X_I = T({s}), alpha = {alpha}, bound {bound}, "
                f"splitting set size <= {split_set:.1f}")
    return MotionCertificate(cfg.n, bound, RULE, {
        "colors": colors,
        "s": s,
        "clique_size": size,
        "alpha": alpha,
        "split_set_bound": split_set,
        "recognition": recognition.method,
    })


def triangular_color_sets(cfg: Configuration) -> List[List[int]]:
    """
    Pairing-closed color sets whose constituent has the degree of T(s),
    n = s(s-1)/2; empty when there are more than SUN_WILMES_MAX_RANK
    pairing orbits to combine.
    """
    s = triangular_order(cfg.n)
    if s is None or s < 5 or not cfg.is_homogeneous:
        return []
    units = sorted({tuple(sorted({i, cfg.pairing[i]})) for i in cfg.off_diagonal_colors})
    if len(units) > config.SUN_WILMES_MAX_RANK:
        logger.info(f"Sun-Wilmes: {len(units)} color orbits exceeds {config.SUN_WILMES_MAX_RANK}; skipped")
        return []
    row = cfg.colors[0]
    degree = {unit: int(np.isin(row, unit).sum()) for unit in units}
    target = 2 * (s - 2)
    found = []
    for size in range(1, len(units)):
        for combo in itertools.combinations(units, size):
            if sum(degree[u] for u in combo) == target:
                found.append(sorted(i for unit in combo for i in unit))
    return found


def best_sun_wilmes_bound(cfg: Configuration) -> Union[MotionCertificate, NotApplicable]:
    """Largest sun_wilmes_bound over triangular_color_sets(cfg)."""
    best: Union[MotionCertificate, NotApplicable] = NotApplicable(
        RULE, "some pairing-closed color set has a T(s) constituent", None, None)
    for colors in triangular_color_sets(cfg):
        result = sun_wilmes_bound(cfg, colors)
        if isinstance(result, MotionCertificate) and \
                (not isinstance(best, MotionCertificate) or result.bound > best.bound):
            best = result
    return best
