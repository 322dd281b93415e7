"""
DRG module for the motion-certificate toolkit.
Distance-regular graph parameters, spectra and parameter inequalities.

Modules:
- intersection_array.py: IntersectionArray, extraction, validation, intersection numbers
- spectrum.py: Tridiagonal and dense spectra
- bounds.py: Bipartite diameter-3 fact, tradeoff inequality, spectral gap, perturbation
"""

__all__ = [
    "intersection_array",
    "spectrum",
    "bounds",
]
