"""
Core module for the motion-certificate toolkit.
Configuration data model, axiom checks, structure constants and WL refinement.

Modules:
- configuration.py: Configuration type, distance/adjacency builders, axiom checks
- coherence.py: Structure constants, classification, color distances
- refinement.py: WL stabilization, individualization, distinguishing sets
- formats.py: Edge list and Configuration JSON I/O
- results.py: NotApplicable, Inequality and diagnostics records
"""

__all__ = [
    "configuration",
    "coherence",
    "refinement",
    "formats",
    "results",
]
