from enum import Enum


class PlaceKind(Enum):
    """
    Kinds of closed points of the projective line.

    Finite places are given by a monic irreducible polynomial, the infinite
    place by the valuation ``deg(den) - deg(num)``.
    """

    Finite = "finite"
    Infinity = "infinity"


INFINITY = float("inf")
"""Valuation of zero."""

KRONECKER_THRESHOLD = 32
"""Operand length from which prime-field products go through big integers."""
