"""Exact-arithmetic abstract-algebra workbench.

Finite magmas and rings from Cayley tables, permutations of {1..n},
quadratic extensions Q(sqrt d) as pairs of rationals, and closed-form
solvers for equations of degree 1 to 4.
"""

from .errors import AlgebraError, TableParseError

__all__ = ["AlgebraError", "TableParseError"]
__version__ = "0.1.0"
