"""
Rank4 module for the motion-certificate toolkit.
Rank-4 association scheme analysis.

Modules:
- analysis.py: Eigenvalue cubic, spectral-radius bounds, diameter-2 bound, parameter inequalities
"""

__all__ = [
    "analysis",
]
