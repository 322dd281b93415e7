"""
spectrum.py
-----------
Spectra of distance-regular graphs and of dense symmetric matrices.

The intersection matrix T is similar to the symmetric tridiagonal matrix
with diagonal a_i and off-diagonal sqrt(b_i c_{i+1}); multiplicities come
from m(theta) = n / sum_i k_i u_i(theta)^2 with the standard sequence
u_0 = 1, u_1 = theta / k, c_i u_{i-1} + a_i u_i + b_i u_{i+1} = theta u_i.

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from scipy.linalg import eigh_tridiagonal, eigvalsh

sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from drg.intersection_array import IntersectionArray, InvalidArrayError

logger = logging.getLogger(__name__)


class Spectrum:
    """Distinct eigenvalues with multiplicities, in descending order."""

    def __init__(self, eigenvalues: Sequence[Tuple[float, int]]):
        pairs = sorted(((float(v), int(m)) for v, m in eigenvalues), key=lambda x: -x[0])
        self.eigenvalues: List[Tuple[float, int]] = pairs

    @property
    def n(self) -> int:
        return sum(m for _, m in self.eigenvalues)

    @property
    def values(self) -> List[float]:
        return [v for v, _ in self.eigenvalues]

    @property
    def multiplicities(self) -> List[int]:
        return [m for _, m in self.eigenvalues]

    @property
    def largest(self) -> float:
        return self.eigenvalues[0][0]

    @property
    def theta_min(self) -> float:
        return self.eigenvalues[-1][0]

    def nontrivial(self) -> List[Tuple[float, int]]:
        """Spectrum with one copy of the largest eigenvalue removed."""
        top, mult = self.eigenvalues[0]
        rest = list(self.eigenvalues[1:])
        if mult > 1:
            rest.insert(0, (top, mult - 1))
        return rest

    @property
    def xi(self) -> float:
        """Zero-weight spectral radius: max |theta| over the nontrivial eigenvalues."""
        rest = self.nontrivial()
        return max(abs(v) for v, _ in rest) if rest else 0.0

    @property
    def second_largest(self) -> Optional[float]:
        rest = self.nontrivial()
        return rest[0][0] if rest else None

    def to_dict(self) -> Dict:
        return {
            "eigenvalues": [[round(v, 12), m] for v, m in self.eigenvalues],
            "xi": round(self.xi, 12),
            "theta_min": round(self.theta_min, 12),
        }

    def __repr__(self) -> str:
        body = ", ".join(f"{v:.6g}^{m}" for v, m in self.eigenvalues)
        return f"Spectrum({body})"


def group_eigenvalues(values: Sequence[float], tol: float = config.EIGEN_ZERO_TOL) -> List[Tuple[float, int]]:
    """Cluster sorted eigenvalues that agree within tol * max(1, |value|)."""
    clusters: List[List[float]] = []
    for value in sorted(values, reverse=True):
        if clusters and abs(clusters[-1][0] - value) <= tol * max(1.0, abs(value)):
            clusters[-1].append(value)
        else:
            clusters.append([value])
    return [(float(np.mean(c)), len(c)) for c in clusters]


def standard_sequence(array: IntersectionArray, theta: float) -> List[float]:
    u = [1.0, theta / array.k]
    for i in range(1, array.d):
        nxt = ((theta - array.a[i]) * u[i] - array.c_(i) * u[i - 1]) / array.b_(i)
        u.append(nxt)
    return u[: array.d + 1]


def tridiagonal_spectrum(array: IntersectionArray) -> Spectrum:
    """
    Eigenvalues of the intersection matrix with multiplicities.

    Raises:
        InvalidArrayError: a multiplicity is off an integer by more than MULTIPLICITY_TOL * n.
    """
    diagonal = np.array(array.a, dtype=float)
    off = np.array([np.sqrt(array.b[i] * array.c[i]) for i in range(array.d)], dtype=float)
    thetas = eigh_tridiagonal(diagonal, off, eigvals_only=True)
    n = array.n
    pairs = []
    for theta in sorted(thetas, reverse=True):
        u = standard_sequence(array, float(theta))
        norm = sum(float(size) * x * x for size, x in zip(array.sizes, u))
        mult = n / norm
        rounded = int(round(mult))
        if abs(mult - rounded) > config.MULTIPLICITY_TOL * n or rounded <= 0:
            raise InvalidArrayError(f"multiplicity of {theta:.6g} is {mult:.6g}, not an integer")
        pairs.append((float(theta), rounded))
    return Spectrum(pairs)


def adjacency_spectrum(graph_or_matrix) -> Spectrum:
    """Dense symmetric eigensolver, eigenvalues clustered into multiplicities."""
    if isinstance(graph_or_matrix, nx.Graph):
        graph = nx.convert_node_labels_to_integers(graph_or_matrix, ordering="sorted")
        matrix = nx.to_numpy_array(graph, nodelist=range(graph.number_of_nodes()))
    else:
        matrix = np.asarray(graph_or_matrix, dtype=float)
    values = eigvalsh(matrix)
    return Spectrum(group_eigenvalues(values))


def spectra_match(first: Spectrum, second: Spectrum, rel_tol: float = config.SPECTRAL_TOL) -> bool:
    """Same multiplicities and values within rel_tol * max(1, |value|)."""
    if len(first.eigenvalues) != len(second.eigenvalues):
        return False
    for (x, mx), (y, my) in zip(first.eigenvalues, second.eigenvalues):
        if mx != my or abs(x - y) > rel_tol * max(1.0, abs(x)):
            return False
    return True
