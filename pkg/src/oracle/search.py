"""
search.py
---------
Brute-force ground truth for small configurations: color-preserving
automorphisms, exact motion and isomorphism.

Automorphisms are found by backtracking over the WL-refined partition:
individualize the mapped prefix on both sides, refine, and only try images
whose refined vertex color matches. A stabilizer chain (base + one
transversal element per orbit point) gives the exact group order.

Motion is the minimum support over non-identity elements: full enumeration
when the order is at most ENUMERATION_ORDER_LIMIT, otherwise a
support-size branch-and-bound search.

Usage:
    from oracle.search import automorphisms, exact_motion
    group = automorphisms(cfg)
    print(group.order, exact_motion(cfg))

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import itertools
import logging
import sys
import time
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from core.configuration import Configuration
from core.refinement import individualized_colors, stabilize_colors

logger = logging.getLogger(__name__)

BLOCK_SIZE = 1 << 16


class OracleLimitError(Exception):
    """Raised when an instance is larger than the brute-force limit."""
    pass


class SearchTimeout(Exception):
    """Raised when a search runs past its deadline."""
    pass


# =============================================================================
# BACKTRACKING
# =============================================================================

class _Matcher:
    """
    Finds color-preserving bijections left -> right extending a seed map.

    With prune=True candidate images are filtered by the WL refinement of
    both sides individualized along the mapped prefix; with prune=False only
    pairwise color consistency with already mapped vertices is checked.
    """

    def __init__(self, left: np.ndarray, right: np.ndarray, prune: bool = True,
                 deadline: Optional[float] = None):
        self.left = np.asarray(left, dtype=np.int64)
        self.right = np.asarray(right, dtype=np.int64)
        self.n = self.left.shape[0]
        self.prune = prune
        self.deadline = deadline
        self.nodes = 0
        self._cache: Dict[Tuple[int, Tuple[int, ...]], np.ndarray] = {}

    def _tick(self):
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SearchTimeout(f"search exceeded its deadline after {self.nodes} nodes")

    def refined(self, side: int, seq: Sequence[int]) -> np.ndarray:
        key = (side, tuple(seq))
        if key not in self._cache:
            base = self.left if side == 0 else self.right
            colors, rank = individualized_colors(base, seq)
            stable, _, _ = stabilize_colors(colors, rank)
            self._cache[key] = stable
        return self._cache[key]

    def verify(self, sigma: np.ndarray) -> bool:
        if len(set(sigma.tolist())) != self.n:
            return False
        return bool(np.array_equal(self.right[np.ix_(sigma, sigma)], self.left))

    def extend(self, left_seq: List[int], right_seq: List[int]) -> Optional[np.ndarray]:
        if self.prune:
            return self._extend_refined(list(left_seq), list(right_seq))
        mapping = dict(zip(left_seq, right_seq))
        for u, w in mapping.items():
            if self.left[u, u] != self.right[w, w]:
                return None
        for u, w in mapping.items():
            for x, y in mapping.items():
                if self.left[u, x] != self.right[w, y]:
                    return None
        return self._extend_plain(mapping, set(mapping.values()))

    def _extend_refined(self, left_seq: List[int], right_seq: List[int]) -> Optional[np.ndarray]:
        self._tick()
        rl = self.refined(0, left_seq)
        rr = self.refined(1, right_seq)
        if rl.max() != rr.max():
            return None
        if not np.array_equal(np.bincount(rl.ravel()), np.bincount(rr.ravel())):
            return None
        dl, dr = np.diag(rl), np.diag(rr)
        if len(np.unique(dl)) == self.n:
            position = {int(c): y for y, c in enumerate(dr.tolist())}
            if any(int(c) not in position for c in dl):
                return None
            sigma = np.array([position[int(c)] for c in dl], dtype=np.int64)
            return sigma if self.verify(sigma) else None
        cells = {}
        for x, c in enumerate(dl.tolist()):
            cells.setdefault(c, []).append(x)
        target = min((cell for cell in cells.values() if len(cell) > 1), key=lambda cell: (len(cell), cell[0]))
        v = target[0]
        images = [int(y) for y in np.flatnonzero(dr == dl[v])]
        if v in images:
            images.remove(v)
            images.insert(0, v)
        for w in images:
            sigma = self._extend_refined(left_seq + [v], right_seq + [w])
            if sigma is not None:
                return sigma
        return None

    def _extend_plain(self, mapping: Dict[int, int], used: set) -> Optional[np.ndarray]:
        self._tick()
        if len(mapping) == self.n:
            sigma = np.array([mapping[x] for x in range(self.n)], dtype=np.int64)
            return sigma if self.verify(sigma) else None
        x = next(v for v in range(self.n) if v not in mapping)
        for y in range(self.n):
            if y in used or self.left[x, x] != self.right[y, y]:
                continue
            if all(self.left[u, x] == self.right[w, y] and self.left[x, u] == self.right[y, w]
                   for u, w in mapping.items()):
                mapping[x] = y
                used.add(y)
                sigma = self._extend_plain(mapping, used)
                if sigma is not None:
                    return sigma
                del mapping[x]
                used.discard(y)
        return None


# =============================================================================
# GROUP
# =============================================================================

class AutomorphismGroup:
    """
    Stabilizer chain of Aut(cfg): base points b_1..b_L and, per level, one
    element of G_{i-1} mapping b_i to each point of its orbit.
    """

    def __init__(self, n: int, base: List[int], transversals: List[Dict[int, np.ndarray]]):
        self.n = n
        self.base = base
        self.transversals = transversals

    @property
    def order(self) -> int:
        order = 1
        for level in self.transversals:
            order *= len(level)
        return order

    @property
    def generators(self) -> List[np.ndarray]:
        identity = np.arange(self.n)
        return [g for level in self.transversals for g in level.values() if not np.array_equal(g, identity)]

    def element_blocks(self, block_size: int = BLOCK_SIZE) -> Iterator[np.ndarray]:
        """Yield arrays of shape (m, n), together covering every element exactly once."""
        levels = [np.stack(list(level.values())) for level in self.transversals]
        suffix = np.arange(self.n)[None, :]
        split = len(levels)
        while split > 0 and suffix.shape[0] * levels[split - 1].shape[0] <= block_size:
            t = levels[split - 1]
            suffix = t[:, suffix].reshape(-1, self.n)        # t o s
            split -= 1
        if split == 0:
            yield suffix
            return
        for combo in itertools.product(*[range(level.shape[0]) for level in levels[:split]]):
            prefix = np.arange(self.n)
            for level, index in zip(levels[:split], combo):
                prefix = prefix[level[index]]
            yield prefix[suffix]

    def elements(self) -> np.ndarray:
        return np.concatenate(list(self.element_blocks()), axis=0)

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "order": self.order,
            "base": self.base,
            "orbit_sizes": [len(level) for level in self.transversals],
        }


def _check_limit(cfg: Configuration, limit_n: Optional[int]):
    limit = config.ORACLE_LIMIT_N if limit_n is None else limit_n
    if cfg.n > limit:
        raise OracleLimitError(f"n = {cfg.n} exceeds oracle limit {limit}")


def automorphisms(cfg: Configuration, limit_n: Optional[int] = None, prune: bool = True,
                  deadline: Optional[float] = None) -> AutomorphismGroup:
    """
    Exact automorphism group as a stabilizer chain.

    The base point at each level is the first vertex of the smallest
    non-singleton class of the refined partition.

    Raises:
        OracleLimitError: n over limit_n.
    """
    _check_limit(cfg, limit_n)
    n = cfg.n
    colors = cfg.colors.astype(np.int64)
    if prune:
        colors, _, _ = stabilize_colors(colors, cfg.rank)
    matcher = _Matcher(colors, colors, prune=prune, deadline=deadline)
    identity = np.arange(n)
    base: List[int] = []
    transversals: List[Dict[int, np.ndarray]] = []

    while True:
        if prune:
            diag = np.diag(matcher.refined(0, base))
        else:
            diag = np.diag(colors).copy()
            for offset, b in enumerate(base):
                diag[b] = -1 - offset
        cells: Dict[int, List[int]] = {}
        for x, c in enumerate(diag.tolist()):
            cells.setdefault(c, []).append(x)
        open_cells = [cell for cell in cells.values() if len(cell) > 1]
        if not open_cells:
            break
        cell = min(open_cells, key=lambda c: (len(c), c[0]))
        point = cell[0]
        level: Dict[int, np.ndarray] = {point: identity.copy()}
        for image in cell[1:]:
            sigma = matcher.extend(base + [point], base + [image])
            if sigma is not None:
                level[image] = sigma
        base.append(point)
        transversals.append(level)
        if not prune and len(base) == n:
            break

    group = AutomorphismGroup(n, base, transversals)
    logger.info(f"Automorphism group: order {group.order}, base {base}, {matcher.nodes} search nodes")
    return group


# =============================================================================
# MOTION
# =============================================================================

def _support_sizes(block: np.ndarray) -> np.ndarray:
    return (block != np.arange(block.shape[1])[None, :]).sum(axis=1)


def _motion_by_enumeration(group: AutomorphismGroup) -> Optional[int]:
    best: Optional[int] = None
    for block in group.element_blocks():
        sizes = _support_sizes(block)
        sizes = sizes[sizes > 0]
        if sizes.size:
            low = int(sizes.min())
            best = low if best is None else min(best, low)
            if best == 2:
                break
    return best


def _motion_by_branch_and_bound(cfg_colors: np.ndarray, group: AutomorphismGroup) -> Optional[int]:
    """
    Search vertex images in order 0..n-1 preferring fixed points; prune when
    the vertices whose refined colors differ on the two sides (so they must
    move) already number at least the best support found.
    """
    n = group.n
    best = min((int(s) for s in _support_sizes(np.stack(group.generators))), default=None) \
        if group.generators else None
    if best is None:
        return None
    if best == 2:
        return 2
    matcher = _Matcher(cfg_colors, cfg_colors, prune=True)
    state = {"best": best}

    def recurse(left: List[int], right: List[int]):
        rl = matcher.refined(0, left)
        rr = matcher.refined(1, right)
        if rl.max() != rr.max() or not np.array_equal(np.bincount(rl.ravel()), np.bincount(rr.ravel())):
            return
        dl, dr = np.diag(rl), np.diag(rr)
        forced_moves = int((dl != dr).sum())
        if forced_moves >= state["best"]:
            return
        if len(np.unique(dl)) == n:
            position = {int(c): y for y, c in enumerate(dr.tolist())}
            if any(int(c) not in position for c in dl):
                return
            sigma = np.array([position[int(c)] for c in dl], dtype=np.int64)
            support = int((sigma != np.arange(n)).sum())
            if 0 < support < state["best"] and matcher.verify(sigma):
                state["best"] = support
            return
        v = next(x for x in range(n) if x not in left and int((dl == dl[x]).sum()) > 1)
        images = [int(y) for y in np.flatnonzero(dr == dl[v])]
        if v in images:
            images.remove(v)
            images.insert(0, v)
        for w in images:
            recurse(left + [v], right + [w])
            if state["best"] == 2:
                return

    recurse([], [])
    return state["best"]


def exact_motion(cfg: Configuration, limit_n: Optional[int] = None,
                 enumeration_limit: Optional[int] = None,
                 group: Optional[AutomorphismGroup] = None) -> Optional[int]:
    """
    Minimum number of points moved by a non-identity automorphism.

    Returns:
        the motion, or None when the group is trivial (rigid).

    Raises:
        OracleLimitError: n over limit_n.
    """
    _check_limit(cfg, limit_n)
    if group is None:
        group = automorphisms(cfg, limit_n=limit_n)
    if group.order == 1:
        return None
    limit = config.ENUMERATION_ORDER_LIMIT if enumeration_limit is None else enumeration_limit
    if group.order <= limit:
        return _motion_by_enumeration(group)
    stable, _, _ = stabilize_colors(cfg.colors.astype(np.int64), cfg.rank)
    return _motion_by_branch_and_bound(stable, group)


def isomorphic(first: Configuration, second: Configuration, limit_n: Optional[int] = None,
               timeout: Optional[float] = None, prune: bool = True) -> bool:
    """
    Exact color-preserving isomorphism test (color ids must agree).

    Sizes that differ give False. A timeout in seconds raises SearchTimeout.
    """
    if first.n != second.n or first.rank != second.rank:
        return False
    _check_limit(first, limit_n)
    left = first.colors.astype(np.int64)
    right = second.colors.astype(np.int64)
    if not np.array_equal(np.bincount(left.ravel(), minlength=first.rank),
                          np.bincount(right.ravel(), minlength=second.rank)):
        return False
    deadline = time.monotonic() + timeout if timeout is not None else None
    matcher = _Matcher(left, right, prune=prune, deadline=deadline)
    return matcher.extend([], []) is not None


def find_isomorphism(first: Configuration, second: Configuration,
                     timeout: Optional[float] = None) -> Optional[np.ndarray]:
    """sigma with second.colors[sigma[u], sigma[v]] == first.colors[u, v], or None."""
    if first.n != second.n or first.rank != second.rank:
        return None
    deadline = time.monotonic() + timeout if timeout is not None else None
    matcher = _Matcher(first.colors, second.colors, prune=True, deadline=deadline)
    return matcher.extend([], [])
