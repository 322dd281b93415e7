"""
families.py
-----------
Family registry, closed-form spectra, exact motion of the exceptional
families and family recognition.

Recognition is a parameter fingerprint (n, rank, degrees, intersection
numbers under a degree-preserving color renaming) followed by an exact
isomorphism check with the oracle. When the check runs out of time the
match is kept but marked "parameter-match" instead of "oracle".

Family syntax: "johnson:7,3", "hamming:3,3", "cocktail:4", "cyclotomic:13,3".

Usage:
    from catalog.families import generate, recognize
    graph = generate("johnson", (7, 3))
    print(recognize(build_distance_configuration(graph)))

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import itertools
import logging
import math
import sys
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from catalog import generators
from core.coherence import StructureConstants, structure_constants
from core.configuration import (Configuration, build_adjacency_configuration,
                                build_distance_configuration)
from core.refinement import wl_stabilize
from drg.bounds import ParameterError
from drg.spectrum import Spectrum
from oracle.search import SearchTimeout, isomorphic

logger = logging.getLogger(__name__)

# name -> (builder, number of integer parameters)
FAMILIES: Dict[str, Tuple[Callable, int]] = {
    "johnson": (generators.johnson, 2),
    "hamming": (generators.hamming, 2),
    "triangular": (generators.triangular, 1),
    "lattice": (generators.lattice, 1),
    "cocktail": (generators.cocktail, 1),
    "cycle": (generators.cycle, 1),
    "cyclotomic": (generators.cyclotomic, 2),
    "petersen": (generators.petersen, 0),
    "heawood": (generators.heawood, 0),
    "kneser": (generators.kneser, 2),
    "complete": (generators.complete, 1),
    "path": (generators.path, 1),
    "hypercube": (generators.hypercube, 1),
    "asymmetric_tree": (generators.asymmetric_tree, 0),
    "johnson_scheme": (generators.johnson_scheme, 2),
    "hamming_scheme": (generators.hamming_scheme, 2),
    "semilinear_pairs": (generators.semilinear_pair_configuration, 0),
}

EXCEPTIONAL_FAMILIES = ("johnson", "hamming", "cocktail", "triangular", "lattice")

# first match wins, so aliases resolve to the earlier family
RECOGNITION_ORDER = ("cocktail", "triangular", "lattice", "johnson", "hamming", "cycle", "cyclotomic")


def parse_family(text: str) -> Tuple[str, Tuple[int, ...]]:
    """
    "johnson:7,3" -> ("johnson", (7, 3)); "petersen" -> ("petersen", ()).

    Raises:
        ParameterError: unknown family, wrong arity or non-integer parameters.
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    if name not in FAMILIES:
        raise ParameterError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    try:
        params = tuple(int(x) for x in rest.split(",") if x.strip()) if rest else ()
    except ValueError:
        raise ParameterError(f"family parameters must be integers, got {rest!r}")
    arity = FAMILIES[name][1]
    if len(params) != arity:
        raise ParameterError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return name, params


def generate(family: str, params: Tuple[int, ...] = ()) -> Union[nx.Graph, Configuration]:
    """Graph for graph families, Configuration for scheme families."""
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}")
    builder, arity = FAMILIES[family]
    if len(params) != arity:
        raise ParameterError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def as_configuration(obj: Union[nx.Graph, Configuration]) -> Configuration:
    """Distance configuration of a connected graph, adjacency configuration otherwise."""
    if isinstance(obj, Configuration):
        return obj
    if obj.number_of_nodes() and nx.is_connected(obj):
        return build_distance_configuration(obj)
    return build_adjacency_configuration(obj)


def family_tag(family: str, params: Tuple[int, ...]) -> str:
    return f"{family}({','.join(map(str, params))})" if params else family


# =============================================================================
# CLOSED FORMS
# =============================================================================

def _binom(m: int, t: int) -> int:
    return math.comb(m, t) if 0 <= t <= m else 0


def _canonical(family: str, params: Tuple[int, ...]) -> Tuple[str, Tuple[int, ...]]:
    if family == "triangular":
        return "johnson", (params[0], 2)
    if family == "lattice":
        return "hamming", (2, params[0])
    return family, tuple(params)


def closed_form_spectrum(family: str, params: Tuple[int, ...]) -> Spectrum:
    """
    Johnson J(m,t): theta_j = (t-j)(m-t-j) - j, multiplicity C(m,j) - C(m,j-1).
    Hamming H(s,m): theta_j = s(m-1) - jm, multiplicity C(s,j)(m-1)^j.
    """
    family, params = _canonical(family, params)
    if family == "johnson":
        m, t = params
        t = min(t, m - t)
        return Spectrum([((t - j) * (m - t - j) - j, _binom(m, j) - _binom(m, j - 1)) for j in range(t + 1)])
    if family == "hamming":
        s, m = params
        return Spectrum([(s * (m - 1) - j * m, _binom(s, j) * (m - 1) ** j) for j in range(s + 1)])
    raise ParameterError(f"no closed-form spectrum for {family!r}")


def cameron_min_degree(m: int, t: int, d: int = 1) -> Dict[str, int]:
    """
    Minimal degree candidates for groups between (A_m^(t))^d and S_m^(t) wr S_d
    acting on C(m,t)^d points.
    """
    if t < 1 or m < 2 * t or d < 1:
        raise ParameterError(f"need 1 <= t <= m/2 and d >= 1, got m={m}, t={t}, d={d}")
    points = _binom(m, t)
    scale = points ** (d - 1)
    transposition = (points - _binom(m - 2, t) - _binom(m - 2, t - 2)) * scale
    three_cycle = (points - _binom(m - 3, t) - _binom(m - 3, t - 3)) * scale
    return {"transposition": transposition, "three_cycle": three_cycle,
            "minimum": min(transposition, three_cycle)}


def exceptional_motion(family: str, params: Tuple[int, ...]) -> int:
    """Exact motion of J(m,t), H(s,m), crown graphs and their t=2 / s=2 cases."""
    family, params = _canonical(family, params)
    if family == "johnson":
        m, t = params
        return cameron_min_degree(m, t)["minimum"]
    if family == "hamming":
        s, m = params
        symbol_swap = 2 * m ** (s - 1)
        if s < 2:
            return symbol_swap
        return min(symbol_swap, m ** s - m ** (s - 1))
    if family == "cocktail":
        return 4 if params[0] >= 3 else 2
    raise ParameterError(f"{family!r} is not an exceptional family")


def automorphism_group_order(family: str, params: Tuple[int, ...]) -> int:
    """Order of the automorphism group of the family graph."""
    family, params = _canonical(family, params)
    if family == "johnson":
        m, t = params
        return math.factorial(m) * (2 if m == 2 * t else 1)
    if family == "hamming":
        s, m = params
        return math.factorial(m) ** s * math.factorial(s)
    if family == "cocktail":
        m = params[0]
        return 8 if m == 2 else 2 * math.factorial(m)
    if family == "cycle":
        return 2 * params[0]
    raise ParameterError(f"no automorphism group order for {family!r}")


# =============================================================================
# RECOGNITION
# =============================================================================

class Recognition:
    """A family match; confirmed is True only after an oracle isomorphism."""

    def __init__(self, family: str, params: Tuple[int, ...], complement: bool,
                 confirmed: bool, method: str):
        self.family = family
        self.params = tuple(params)
        self.complement = complement
        self.confirmed = confirmed
        self.method = method

    @property
    def tag(self) -> str:
        name = f"{self.family}-complement" if self.complement else self.family
        return family_tag(name, self.params)

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_FAMILIES

    def to_dict(self) -> Dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "tag": self.tag,
            "complement": self.complement,
            "confirmed": self.confirmed,
            "method": self.method,
        }

    def __repr__(self) -> str:
        return f"Recognition({self.tag}, {self.method})"


def candidates(n: int) -> Iterator[Tuple[str, Tuple[int, ...]]]:
    """Every (family, params) of a recognizable family with n vertices, in recognition order."""
    for family in RECOGNITION_ORDER:
        if family == "cocktail" and n % 2 == 0 and n >= 6:
            yield family, (n // 2,)
        elif family == "triangular":
            for s in range(5, n + 2):
                if s * (s - 1) // 2 == n:
                    yield family, (s,)
        elif family == "lattice":
            s = math.isqrt(n)
            if s >= 2 and s * s == n:
                yield family, (s,)
        elif family == "johnson":
            for t in range(3, n):
                for m in range(2 * t + 1, n + 1):
                    if _binom(m, t) == n:
                        yield family, (m, t)
                if _binom(2 * t + 1, t) > n:
                    break
        elif family == "hamming":
            for m in range(2, n + 1):
                for s in range(3, n.bit_length() + 1):
                    if m ** s == n:
                        yield family, (s, m)
        elif family == "cycle" and n >= 3:
            yield family, (n,)
        elif family == "cyclotomic" and generators.is_prime(n):
            for e in range(2, n):
                if (n - 1) % e == 0 and ((n - 1) // e) % 2 == 0:
                    yield family, (n, e)


def _color_bijections(source: StructureConstants, target: StructureConstants,
                      limit: int = 5040) -> Iterator[np.ndarray]:
    """Maps perm with perm[source color] = target color, preserving diagonal and degree."""
    def key(sc, i):
        return (i in sc.diagonal_colors, sc.k(i))
    groups_s: Dict[Tuple, List[int]] = {}
    groups_t: Dict[Tuple, List[int]] = {}
    for i in range(source.rank):
        groups_s.setdefault(key(source, i), []).append(i)
    for i in range(target.rank):
        groups_t.setdefault(key(target, i), []).append(i)
    if {k: len(v) for k, v in groups_s.items()} != {k: len(v) for k, v in groups_t.items()}:
        return
    keys = sorted(groups_s)
    total = math.prod(math.factorial(len(groups_s[k])) for k in keys)
    if total > limit:
        logger.warning(f"{total} color bijections to try; recognition skipped")
        return
    for choice in itertools.product(*[itertools.permutations(groups_t[k]) for k in keys]):
        perm = np.zeros(source.rank, dtype=np.int64)
        for k, images in zip(keys, choice):
            perm[groups_s[k]] = images
        yield perm


def recognize(cfg: Configuration, timeout: Optional[float] = None,
              max_n: Optional[int] = None) -> Optional[Recognition]:
    """
    Match cfg against the catalog families with the same number of vertices.

    The input is stabilized first, so any configuration with the same
    automorphisms as a family scheme is recognized. For rank-3 matches the
    result is flagged as a complement when the family graph lands on a
    color other than the input's color 1.

    Returns:
        Recognition, or None when nothing matches (or n > max_n).
    """
    max_n = config.RECOGNITION_MAX_N if max_n is None else max_n
    timeout = config.ISOMORPHISM_BUDGET_SECONDS if timeout is None else timeout
    if cfg.n > max_n or cfg.n < 3:
        return None
    stable = wl_stabilize(cfg)
    if not stable.is_homogeneous or stable.oriented_colors():
        return None
    sc = structure_constants(stable)
    if not isinstance(sc, StructureConstants):
        return None
    original_of = {int(s): int(o) for s, o in zip(stable.colors.ravel(), cfg.colors.ravel())}
    primary = min(cfg.off_diagonal_colors) if cfg.off_diagonal_colors else None

    for family, params in candidates(cfg.n):
        target = as_configuration(generate(family, params))
        if target.rank != stable.rank:
            continue
        target_sc = structure_constants(target)
        if not isinstance(target_sc, StructureConstants):
            continue
        if sorted(target_sc.degrees.tolist()) != sorted(sc.degrees.tolist()):
            continue
        for perm in _color_bijections(target_sc, sc):
            if not np.array_equal(target_sc.relabel(perm).p, sc.p):
                continue
            renamed = Configuration(perm[target.colors.astype(np.int64)])
            complement = (family != "cyclotomic" and stable.rank == 3
                          and original_of.get(int(perm[1])) != primary)
            try:
                same = isomorphic(stable, renamed, limit_n=max_n, timeout=timeout)
            except SearchTimeout:
                logger.warning(f"Isomorphism check for {family_tag(family, params)} timed out; "
                               f"recognition is parameter-match only")
                return Recognition(family, params, complement, False, "parameter-match")
            if same:
                result = Recognition(family, params, complement, True, "oracle")
                logger.info(f"Recognized {result.tag} (n={cfg.n})")
                return result
    return None
