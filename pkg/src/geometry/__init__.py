"""
Geometry module for the motion-certificate toolkit.
Clique geometries and the recognizers built on them.

Modules:
- cliques.py: Bron-Kerbosch, Metsch lines, geometry verification, Delsarte bound
- recognition.py: Seidel recognition, line-graph roots, Bang parameter check
- sun_wilmes.py: Motion bound from a triangular constituent
"""

__all__ = [
    "cliques",
    "recognition",
    "sun_wilmes",
]
