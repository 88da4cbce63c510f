from enum import Enum


class RamificationCase(Enum):
    """
    Behaviour of a place of F_q(t) in a degree-p Artin-Schreier extension.

    Attributes
    ----------
    Split : str
        e = f = 1, g = p.
    Inert : str
        e = g = 1, f = p.
    TotallyRamified : str
        e = p, f = g = 1.
    Trivial : str
        The extension is not a field; every place splits.
    Unramified : str
        e = 1 with the split type above an interior place left open.
    """

    Split = "Split"
    Inert = "Inert"
    TotallyRamified = "TotallyRamified"
    Trivial = "Trivial"
    Unramified = "Unramified"


class LayerStrategy(Enum):
    """
    How a tower layer's defining function is chosen from the required s.

    Uniformizer layers use f = sum of pi_i^-s_i at the current level. Boundary
    layers keep every pole on the tracked places: f_1 is a polar divisor and
    f_k = x_(k-1) r_k with r_k a polar divisor of the base.
    """

    Uniformizer = "uniformizer"
    Boundary = "boundary"
