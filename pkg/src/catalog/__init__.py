"""
Catalog module for the motion-certificate toolkit.
Family generators, closed forms and recognition.

Modules:
- generators.py: Johnson, Hamming, crown, cycle, cyclotomic and orbital configurations, fixtures
- families.py: Family registry, closed-form spectra, exceptional motion, recognize
"""

__all__ = [
    "generators",
    "families",
]
