from logging import getLogger

from .definitions import PlaceKind
from .place import Place
from .polynomial import Polynomial
from .rational_function import RationalFunction

logger = getLogger("asdescent")


def wp_preimage(f: RationalFunction) -> RationalFunction | None:
    """
    Solve g^p - g = f in F_q(t).

    Poles are cleared place by place, each step subtracting wp of the p-th
    root of the leading polar term, then the polynomial part is solved from
    the top degree down and the constant by search in F_q.

    Returns
    -------
    RationalFunction or None
        The solution with the least constant term, or None if f is not in
        the image of T^p - T.
    """
    field = f.field
    p = field.p
    remaining = f
    g = RationalFunction.zero(field)

    for factor, _ in f.denominator.factor():
        place = Place(PlaceKind.Finite, field, factor)
        u = place.uniformizer()
        while True:
            v = place.valuation(remaining)
            if v >= 0:
                break
            if v % p:
                return None
            lead = place.residue(remaining * u ** (-v))
            step = RationalFunction(place.residue_pth_root(lead)) * u ** (v // p)
            g = g + step
            remaining = remaining - step.wp()

    if not remaining.is_polynomial():
        logger.error(f"Poles of {f} survived the polar reduction: {remaining}")
        raise RuntimeError("Polar reduction left a pole")

    polynomial = remaining.numerator
    while polynomial.degree > 0:
        degree = polynomial.degree
        if degree % p:
            return None
        step = Polynomial.monomial(field, degree // p, field.pth_root(polynomial.leading))
        g = g + RationalFunction(step)
        polynomial = polynomial - (step.frobenius() - step)

    constant = field.wp_root(polynomial[0])
    if constant is None:
        return None
    g = g + RationalFunction.constant(field, constant)

    if g.wp() != f:
        logger.error(f"Artin-Schreier preimage {g} of {f} failed verification")
        raise RuntimeError("Artin-Schreier preimage failed verification")
    return g
