"""
Motion module for the motion-certificate toolkit.
Lower bounds on the minimal degree of the automorphism group.

Modules:
- certificates.py: MotionCertificate and the individual bound rules
- certify.py: Runs all rules, keeps the best bound and records the rest
"""

__all__ = [
    "certificates",
    "certify",
]
