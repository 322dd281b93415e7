"""
Validation module for the motion-certificate toolkit.
Soundness sweep against the brute-force oracle and per-package test runners.

Modules:
- validate_soundness.py: Certified bounds vs exact motion over the catalog
- test_core.py: Configurations, coherence, WL refinement, formats
- test_drg.py: Intersection arrays, spectra, DRG inequalities
- test_rank4.py: Rank-4 scheme analysis
- test_geometry.py: Clique geometries, Seidel, Sun-Wilmes
- test_motion.py: Motion certificates and certify()
- test_catalog.py: Family catalog and recognition
- test_oracle.py: Automorphism groups, exact motion, isomorphism
- test_cli.py: Command-line interface
"""

__all__ = [
    "validate_soundness",
    "test_core",
    "test_drg",
    "test_rank4",
    "test_geometry",
    "test_motion",
    "test_catalog",
    "test_oracle",
    "test_cli",
]
