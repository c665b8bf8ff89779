"""Exact knot invariants of nonsingular Smale flows on the 3-sphere.

Laurent-polynomial algebra, subshift orbit combinatorics, Lorenz-template
linking numbers, Franks' determinant formulas, Fox calculus, and a
realizability check for Lorenz-Smale flow configurations.
"""

__version__ = "0.1.0"
