from logging import getLogger
from typing import List, Sequence, Tuple

from .place import Place
from .polynomial import Polynomial, chinese_remainder, inverse_mod
from .rational_function import RationalFunction

logger = getLogger("asdescent")

Target = Tuple[Place, RationalFunction]


def _require_distinct(places: Sequence[Place]) -> None:
    if len(set(places)) != len(places):
        raise ValueError(f"Places {[str(p) for p in places]} are not distinct")


def _free_polynomial(places: Sequence[Place]) -> Polynomial:
    """Least monic irreducible polynomial of degree <= 2 not among the places."""
    field = places[0].field
    taken = {place.polynomial for place in places if not place.is_infinity}
    for c in field.elements():
        candidate = Polynomial(field, (field.neg(c), 1))
        if candidate not in taken:
            return candidate
    for b in field.elements():
        for a in field.elements():
            candidate = Polynomial(field, (a, b, 1))
            if candidate not in taken and candidate.is_irreducible():
                return candidate
    raise RuntimeError("No free place of degree at most 2")


def _residue_targets(
    targets: Sequence[Target], c: int, denominator: Polynomial
) -> Tuple[List[Polynomial], List[Polynomial]]:
    residues, moduli = [], []
    for place, a in targets:
        order = 0 if a.is_zero() else max(0, -place.valuation(a))
        exponent = c + 1 + order
        if exponent <= 0:
            continue
        modulus = place.polynomial**exponent
        scaled = a * RationalFunction(denominator)
        residues.append(
            (scaled.numerator * inverse_mod(scaled.denominator, modulus)) % modulus
        )
        moduli.append(modulus)
    return residues, moduli


def approximate(targets: Sequence[Target], c: int) -> RationalFunction:
    """
    Find f with v_P(f - a) > c for every target (P, a).

    The witness is G/D with D the product of the target pole denominators.
    Finite targets fix G modulo powers of their place polynomials and are
    solved by Chinese remaindering, which gives the least-degree G. A target
    at infinity fixes the top coefficients of G instead; D is then padded
    with a power of the least free place so that the two kinds of
    conditions do not overlap.

    Raises
    ------
    ValueError
        If two targets share a place.
    RuntimeError
        If the witness fails its final valuation check.
    """
    if not targets:
        raise ValueError("At least one approximation target is required")
    places = [place for place, _ in targets]
    _require_distinct(places)
    field = places[0].field

    finite = [(place, a) for place, a in targets if not place.is_infinity]
    at_infinity = [a for place, a in targets if place.is_infinity]

    denominator = Polynomial.one(field)
    for place, a in finite:
        order = 0 if a.is_zero() else max(0, -place.valuation(a))
        denominator = denominator * place.polynomial**order

    if not at_infinity:
        residues, moduli = _residue_targets(finite, c, denominator)
        numerator = (
            chinese_remainder(residues, moduli) if moduli else Polynomial.zero(field)
        )
    else:
        padding = _free_polynomial(places)
        crt_degree = sum(
            place.degree * max(0, c + 1 + (0 if a.is_zero() else max(0, -place.valuation(a))))
            for place, a in finite
        )
        power = 0
        while denominator.degree + power * padding.degree - c < max(1, crt_degree):
            power += 1
        denominator = denominator * padding**power
        threshold = denominator.degree - c

        target = at_infinity[0] * RationalFunction(denominator)
        quotient = target.numerator // target.denominator
        top = Polynomial(
            field,
            [0] * threshold + list(quotient.coefficients[threshold:]),
        )
        residues, moduli = _residue_targets(finite, c, denominator)
        if moduli:
            low = chinese_remainder(
                [(r - top) % m for r, m in zip(residues, moduli)], moduli
            )
        else:
            low = Polynomial.zero(field)
        numerator = top + low

    f = RationalFunction(numerator, denominator)
    for place, a in targets:
        if place.valuation(f - a) <= c:
            logger.error(f"Approximation {f} misses target {a} at {place}")
            raise RuntimeError("Approximation witness failed verification")
    return f


def _has_valuations(
    f: RationalFunction, places: Sequence[Place], s: Sequence[int]
) -> bool:
    return all(place.valuation(f) == v for place, v in zip(places, s))


def prescribe_valuations(places: Sequence[Place], s: Sequence[int]) -> RationalFunction:
    """
    Find f with v_P(f) = s_P exactly at every given rational place.

    The sum of u_P^{s_P} is tried first; otherwise ``approximate`` is run
    with targets u_P^{s_P} beyond max(s).
    """
    if len(places) != len(s):
        raise ValueError("One valuation per place is required")
    for place in places:
        place.require_rational()
    _require_distinct(places)

    candidate = RationalFunction.zero(places[0].field)
    for place, v in zip(places, s):
        candidate = candidate + place.uniformizer() ** v
    if _has_valuations(candidate, places, s):
        return candidate

    f = approximate(
        [(place, place.uniformizer() ** v) for place, v in zip(places, s)], max(s)
    )
    if not _has_valuations(f, places, s):
        logger.error(f"Prescribed valuations {list(s)} not met by {f}")
        raise RuntimeError("Prescribed-valuation witness failed verification")
    return f


def polar_divisor(points: Sequence[Place], n: Sequence[int]) -> RationalFunction:
    """
    Rational function whose divisor of poles is exactly sum n_i [P_i].

    On the projective line this is the partial-fraction sum of u_i^{-n_i};
    the result is checked by factoring its denominator.
    """
    if len(points) != len(n):
        raise ValueError("One pole order per point is required")
    if any(order < 1 for order in n):
        raise ValueError(f"Pole orders {list(n)} must be positive")
    for point in points:
        point.require_rational()
    _require_distinct(points)

    field = points[0].field
    f = RationalFunction.zero(field)
    for point, order in zip(points, n):
        f = f + point.uniformizer() ** (-order)

    expected = {
        point.polynomial: order
        for point, order in zip(points, n)
        if not point.is_infinity
    }
    found = dict(f.denominator.factor())
    at_infinity = f.denominator.degree - f.numerator.degree
    expected_infinity = next(
        (-order for point, order in zip(points, n) if point.is_infinity), None
    )
    if expected_infinity is None:
        infinity_ok = at_infinity >= 0
    else:
        infinity_ok = at_infinity == expected_infinity
    if found != expected or not infinity_ok:
        logger.error(f"Polar divisor of {f} does not match {list(n)}")
        raise RuntimeError("Polar-divisor witness failed verification")
    return f
