from ..errors import PNotCoprime
from .tower import ASTower, TowerElement, TrackedPlace, tower_valuation


def uniformizer(tower: ASTower, k: int, tracked: TrackedPlace) -> TowerElement:
    """Uniformizer x_k^a u^b of level k at a tracked place, re-validated."""
    if not 0 <= k <= tower.length:
        raise ValueError(f"Tower has no level {k}")
    pi = tracked.uniformizer(k)
    if tower_valuation(pi, tracked) != 1:
        raise RuntimeError(f"{pi} is not a uniformizer at {tracked.place}")
    return pi


def expansion_defect(m: int, tower: ASTower, k: int, tracked: TrackedPlace) -> int:
    """
    Valuation of u^-m - pi^-mp in a layer defined by f = u^-s.

    Here u is the uniformizer of level k-1 and pi that of level k. The value
    is (p-1)s - mp.
    """
    p = tower.field.p
    if m <= 0 or m % p == 0:
        raise PNotCoprime(f"Exponent {m} must be positive and prime to {p}")
    if not 1 <= k <= tower.length:
        raise ValueError(f"Tower has no layer {k}")
    layer = tower.layers[k - 1]
    s = tracked.layers[k - 1].s
    previous_inverse = tracked.inverse_uniformizer(k - 1)
    if TowerElement(layer.parent, layer.defining) != previous_inverse**s:
        raise ValueError(f"Layer {k} is not defined by a power of the uniformizer")
    g = previous_inverse**m - (tracked.inverse_uniformizer(k) ** m).frobenius()
    return tower_valuation(g, tracked)
