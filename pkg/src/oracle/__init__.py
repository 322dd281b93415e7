"""
Oracle module for the motion-certificate toolkit.
Brute-force ground truth for small instances.

Modules:
- search.py: Automorphism group (stabilizer chain), exact motion, isomorphism
"""

__all__ = [
    "search",
]
