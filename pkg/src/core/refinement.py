"""
refinement.py
-------------
Weisfeiler-Leman (pair) refinement, individualization, and the greedy
distinguishing-set construction.

Each WL round recolors (x, y) by (old color, sorted list of the codes
c(x,z)*r + c(z,y) over z). New colors are numbered by sorting the
signature keys (old color first, then a digest of the code list), so the
result is deterministic and permutation equivariant.

Usage:
    from core.refinement import wl_stabilize
    stable = wl_stabilize(cfg)

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import hashlib
import logging
import sys
from pathlib import Path
from typing import Dict, Iterable, List, Sequence, Tuple

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from core.configuration import Configuration, ConfigurationError

logger = logging.getLogger(__name__)


def _row_signatures(colors: np.ndarray, rank: int, x: int,
                    chunk: int) -> Iterable[Tuple[np.ndarray, np.ndarray]]:
    """
    Yield (ys, rows) for row x in blocks of `chunk` columns, where
    rows[t] = (c(x,y), sorted codes c(x,z) r + c(z,y) over z) for y = ys[t].
    """
    n = colors.shape[0]
    row = colors[x][:, None] * rank                     # (z, 1)
    for start in range(0, n, chunk):
        ys = np.arange(start, min(start + chunk, n))
        codes = np.sort(row + colors[:, ys], axis=0)    # codes[:, t] is the multiset for y_t
        yield ys, np.hstack([colors[x, ys][:, None], codes.T])


def wl_round(colors: np.ndarray, rank: int) -> Tuple[np.ndarray, int]:
    """
    One refinement round; returns (new colors, new rank).

    Works row by row in blocks of WL_CHUNK_CELLS codes, so memory stays
    O(n^2 + WL_CHUNK_CELLS) whatever the rank. Each distinct signature is
    keyed by (old color, blake2b digest of its sorted codes) and keys are
    numbered in sorted order once every row is done.
    """
    n = colors.shape[0]
    colors = colors.astype(np.int64)
    chunk = max(1, min(n, config.WL_CHUNK_CELLS // max(1, n)))
    provisional = np.empty((n, n), dtype=np.int64)
    ids: Dict[Tuple[int, bytes], int] = {}
    for x in range(n):
        for ys, rows in _row_signatures(colors, rank, x, chunk):
            unique, inverse = np.unique(rows, axis=0, return_inverse=True)
            local = np.empty(len(unique), dtype=np.int64)
            for idx, sig in enumerate(unique):
                digest = hashlib.blake2b(np.ascontiguousarray(sig[1:]).tobytes(), digest_size=16).digest()
                local[idx] = ids.setdefault((int(sig[0]), digest), len(ids))
            provisional[x, ys] = local[np.asarray(inverse).ravel()]
    renumber = np.empty(len(ids), dtype=np.int64)
    for new, key in enumerate(sorted(ids)):
        renumber[ids[key]] = new
    return renumber[provisional], len(ids)


def stabilize_colors(colors: np.ndarray, rank: int) -> Tuple[np.ndarray, int, int]:
    """
    Iterate wl_round to the fixed point.

    Returns:
        (stable colors, stable rank, rounds run)
    """
    colors = np.asarray(colors, dtype=np.int64)
    rounds = 0
    while True:
        refined, new_rank = wl_round(colors, rank)
        rounds += 1
        if new_rank > config.RANK_CAP:
            raise ConfigurationError(f"refinement exceeded rank cap {config.RANK_CAP}")
        if new_rank == rank:
            return refined, new_rank, rounds
        colors, rank = refined, new_rank


def wl_stabilize(cfg: Configuration) -> Configuration:
    """Refine until the number of colors stops growing."""
    colors, rank, rounds = stabilize_colors(cfg.colors, cfg.rank)
    logger.info(f"WL stabilized after {rounds} round(s): rank {cfg.rank} -> {rank}")
    return Configuration(colors)


def individualized_colors(colors: np.ndarray, vertices: Sequence[int]) -> Tuple[np.ndarray, int]:
    """
    Fresh color rank+j on (s_j, s_j), in the given order, then compact.

    Order matters: the j-th vertex always receives the j-th fresh color, so
    two sequences related by an isomorphism give matching colorings.
    """
    colors = np.array(colors, dtype=np.int64)
    rank = int(colors.max()) + 1 if colors.size else 0
    for offset, s in enumerate(vertices):
        colors[s, s] = rank + offset
    # a diagonal color may disappear once all its vertices are individualized
    present = np.unique(colors)
    if colors.size and len(present) != int(colors.max()) + 1:
        lookup = np.zeros(int(colors.max()) + 1, dtype=np.int64)
        lookup[present] = np.arange(len(present))
        colors = lookup[colors]
    return colors, len(present)


def individualize(cfg: Configuration, vertices: Iterable[int]) -> Configuration:
    """Give each (s, s) with s in `vertices` its own fresh color (sorted order)."""
    colors, _ = individualized_colors(cfg.colors, sorted(set(vertices)))
    return Configuration(colors)


def individualize_and_refine(cfg: Configuration, vertices: Iterable[int]) -> Tuple[Configuration, bool]:
    """
    Individualize `vertices` then stabilize.

    Returns:
        (refined configuration, True iff every vertex class is a singleton)
    """
    refined = wl_stabilize(individualize(cfg, vertices))
    splits = len(refined.diagonal_colors) == refined.n
    return refined, splits


def distinguishing_gains(colors: np.ndarray, remaining: np.ndarray) -> np.ndarray:
    """
    gains[x] = number of pairs u < v still marked in `remaining` with
    c(x,u) != c(x,v). `remaining` is symmetric with a zero diagonal.
    """
    weights = remaining.astype(float)
    total = weights.sum()
    n = colors.shape[0]
    present = np.unique(colors)
    same = np.zeros(n)
    if len(present) <= config.GREEDY_MATMUL_COLORS:
        for i in present:
            members = (colors == i).astype(float)       # members[x, u] = [c(x,u) = i]
            same += ((members @ weights) * members).sum(axis=1)
    else:
        for x in range(n):
            row = colors[x]
            same[x] = weights[row[:, None] == row[None, :]].sum()
    return np.rint((total - same) / 2).astype(np.int64)


def greedy_distinguishing_set(cfg: Configuration) -> List[int]:
    """
    Repeatedly add the vertex that distinguishes the most pairs not yet
    distinguished (lowest id on ties) until every pair is distinguished.
    """
    if cfg.n < 2:
        return []
    colors = cfg.colors.astype(np.int64)
    remaining = ~np.eye(cfg.n, dtype=bool)
    chosen: List[int] = []
    while remaining.any():
        gains = distinguishing_gains(colors, remaining)
        best = int(np.argmax(gains))
        if gains[best] == 0:
            # only reachable on inputs violating axiom (i)
            break
        chosen.append(best)
        row = colors[best]
        remaining &= row[:, None] == row[None, :]
    return sorted(chosen)


def is_distinguishing(cfg: Configuration, vertices: Iterable[int]) -> bool:
    """True when the columns of the chosen rows are pairwise distinct."""
    if cfg.n < 2:
        return True
    rows = sorted(set(vertices))
    if not rows:
        return False
    columns = cfg.colors[rows].astype(np.int64).T
    return len(np.unique(columns, axis=0)) == cfg.n
