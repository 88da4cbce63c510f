from logging import getLogger
from typing import List, Sequence, Tuple

from ..errors import (
    FieldMismatch,
    NoResidueRoot,
    NotAUnit,
    PNotCoprime,
    PrecisionNotPositiveOverValuation,
)
from .definitions import INFINITY
from .finite_field import FiniteField
from .place import Place
from .polynomial import Polynomial, inverse_mod
from .rational_function import RationalFunction

logger = getLogger("asdescent")

PolarTerm = Tuple[int, int]


def to_local_coordinate(f: RationalFunction, place: Place) -> RationalFunction:
    """Rewrite f in the coordinate u centred at a rational place (u = 0)."""
    place.require_rational()
    if place.is_infinity:
        return f.invert_variable()
    return f.shift(place.root)


def from_local_coordinate(g: RationalFunction, place: Place) -> RationalFunction:
    place.require_rational()
    if place.is_infinity:
        return g.invert_variable()
    return g.shift(place.field.neg(place.root))


def _series_divide(
    field: FiniteField, numerator: Sequence[int], denominator: Sequence[int], n: int
) -> List[int]:
    add, mul, neg = field.add_table, field.mul_table, field.neg
    lead_inverse = field.inv(denominator[0])
    result: List[int] = []
    for i in range(n):
        acc = numerator[i] if i < len(numerator) else 0
        for j in range(1, min(i, len(denominator) - 1) + 1):
            acc = add[acc][neg(mul[denominator[j]][result[i - j]])]
        result.append(mul[acc][lead_inverse])
    return result


class LocalExpansion:
    """
    Truncated Laurent expansion sum c_i u^i at a rational place.

    The expansion is exact modulo terms of valuation >= ``precision``.
    Leading zero coefficients are stripped at construction, so ``start`` is
    the valuation unless the expansion is zero to this precision, in which
    case ``start == precision`` and there are no coefficients.
    """

    __slots__ = ("place", "start", "coefficients", "precision")

    def __init__(
        self, place: Place, start: int, coefficients: Sequence[int], precision: int
    ):
        coefficients = list(coefficients[: max(0, precision - start)])
        while coefficients and coefficients[0] == 0:
            coefficients.pop(0)
            start += 1
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        if not coefficients:
            start = precision
        self.place = place
        self.start = start
        self.coefficients = tuple(coefficients)
        self.precision = precision

    @property
    def field(self) -> FiniteField:
        return self.place.field

    @property
    def valuation(self) -> int | float:
        return self.start if self.coefficients else INFINITY

    def is_zero(self) -> bool:
        return not self.coefficients

    def coefficient(self, n: int) -> int:
        index = n - self.start
        if 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return 0

    @classmethod
    def constant(cls, place: Place, c: int, precision: int) -> "LocalExpansion":
        return cls(place, 0, [c], precision)

    def _check(self, other: "LocalExpansion") -> None:
        if self.place != other.place:
            raise FieldMismatch(f"Expansions at {self.place} and {other.place}")

    def __add__(self, other: "LocalExpansion") -> "LocalExpansion":
        self._check(other)
        precision = min(self.precision, other.precision)
        start = min(self.start, other.start)
        add = self.field.add_table
        coefficients = [
            add[self.coefficient(n)][other.coefficient(n)]
            for n in range(start, precision)
        ]
        return LocalExpansion(self.place, start, coefficients, precision)

    def __neg__(self) -> "LocalExpansion":
        neg = self.field.neg
        return LocalExpansion(
            self.place,
            self.start,
            [neg(c) for c in self.coefficients],
            self.precision,
        )

    def __sub__(self, other: "LocalExpansion") -> "LocalExpansion":
        return self + (-other)

    def __mul__(self, other: "LocalExpansion") -> "LocalExpansion":
        self._check(other)
        start = self.start + other.start
        precision = min(self.precision + other.start, other.precision + self.start)
        n = precision - start
        add, mul = self.field.add_table, self.field.mul_table
        product = [0] * max(0, n)
        for i, x in enumerate(self.coefficients[:n]):
            if x:
                row = mul[x]
                for j, y in enumerate(other.coefficients[: n - i]):
                    product[i + j] = add[product[i + j]][row[y]]
        return LocalExpansion(self.place, start, product, precision)

    def scale(self, c: int) -> "LocalExpansion":
        row = self.field.mul_table[c]
        return LocalExpansion(
            self.place, self.start, [row[x] for x in self.coefficients], self.precision
        )

    def __pow__(self, n: int) -> "LocalExpansion":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return LocalExpansion.constant(self.place, 1, self.precision - self.start)
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "LocalExpansion":
        if self.is_zero():
            raise NotAUnit("Expansion is zero to its precision")
        n = self.precision - self.start
        inverse = _series_divide(self.field, [1], self.coefficients, n)
        return LocalExpansion(self.place, -self.start, inverse, n - self.start)

    def with_precision(self, precision: int) -> "LocalExpansion":
        return LocalExpansion(
            self.place, self.start, self.coefficients, min(precision, self.precision)
        )

    def resum(self) -> RationalFunction:
        """The rational function sum c_i u^i (exact, no truncation)."""
        field = self.field
        if self.is_zero():
            return RationalFunction.zero(field)
        u = RationalFunction.t(field)
        body = RationalFunction(Polynomial(field, self.coefficients))
        local = body * u**self.start
        return from_local_coordinate(local, self.place)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalExpansion):
            return NotImplemented
        return (
            self.place == other.place
            and self.start == other.start
            and self.coefficients == other.coefficients
            and self.precision == other.precision
        )

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{self.field.format_element(c)}*u^{self.start + i}"
            for i, c in enumerate(self.coefficients)
            if c
        )
        return f"LocalExpansion({self.place}: {terms or '0'} + O(u^{self.precision}))"


def local_expand(f: RationalFunction, place: Place, precision: int) -> LocalExpansion:
    """
    Laurent expansion of f in the canonical uniformizer of a rational place,
    exact modulo valuation ``precision``.

    Raises
    ------
    UnsupportedPlaceDegree
        If the place is not rational.
    PrecisionNotPositiveOverValuation
        If ``precision`` is below the valuation of f.
    """
    place.require_rational()
    if f.is_zero():
        return LocalExpansion(place, precision, [], precision)
    v = place.valuation(f)
    if precision < v:
        raise PrecisionNotPositiveOverValuation(
            f"Precision {precision} is below the valuation {v} of {f} at {place}"
        )
    local = to_local_coordinate(f, place)
    numerator = local.numerator.coefficients
    denominator = local.denominator.coefficients
    a = next(i for i, c in enumerate(numerator) if c)
    b = next(i for i, c in enumerate(denominator) if c)
    coefficients = _series_divide(
        place.field, numerator[a:], denominator[b:], precision - v
    )
    return LocalExpansion(place, v, coefficients, precision)


def polar_part(f: RationalFunction, place: Place) -> List[PolarTerm]:
    """
    Principal part of f at a rational place, by partial fractions.

    Returns
    -------
    List[Tuple[int, int]]
        Pairs (n, c) with n < 0 and c != 0, in increasing n, such that
        f - sum c u^n is integral at the place.
    """
    place.require_rational()
    v = place.valuation(f)
    if v >= 0:
        return []
    if place.is_infinity:
        quotient = f.numerator // f.denominator
        return [(-j, quotient[j]) for j in range(quotient.degree, 0, -1) if quotient[j]]

    order = -v
    modulus = place.polynomial**order
    cofactor = f.denominator // modulus
    remainder = (f.numerator * inverse_mod(cofactor, modulus)) % modulus
    local = remainder.taylor_shift(place.root)
    return [(j - order, local[j]) for j in range(order) if local[j]]


def polar_sum(terms: Sequence[PolarTerm], place: Place) -> RationalFunction:
    """The rational function sum c u^n for (n, c) in ``terms``."""
    u = place.uniformizer()
    total = RationalFunction.zero(place.field)
    for n, c in terms:
        total = total + (u**n).scale(c)
    return total


def hensel_sth_root(u: LocalExpansion, s: int) -> LocalExpansion:
    """
    s-th root of a unit expansion by Newton iteration.

    The root of the leading coefficient is the least one in F_q; every
    Newton step is checked to strictly improve the residual.

    Raises
    ------
    PNotCoprime
        If p divides s.
    NotAUnit
        If u does not have valuation 0.
    NoResidueRoot
        If the leading coefficient has no s-th root in F_q.
    """
    field = u.field
    if s <= 0 or s % field.p == 0:
        raise PNotCoprime(f"Exponent {s} is not prime to p = {field.p}")
    if u.is_zero() or u.start != 0:
        raise NotAUnit(f"{u!r} is not a unit")
    residue_root = field.sth_root(u.coefficients[0], s)
    if residue_root is None:
        raise NoResidueRoot(
            f"{field.format_element(u.coefficients[0])} has no {s}-th root in "
            f"{field.label}"
        )

    s_element = field.from_int(s)
    root = LocalExpansion.constant(u.place, residue_root, u.precision)
    error = root**s - u
    while not error.is_zero():
        step = error * ((root ** (s - 1)).scale(s_element)).inverse()
        candidate = root - step
        new_error = candidate**s - u
        if not new_error.is_zero() and new_error.start <= error.start:
            logger.error(f"Newton step for the {s}-th root of {u!r} did not converge")
            raise RuntimeError("Hensel lifting failed to improve the residual")
        root, error = candidate, new_error
    return root


def wp_local_root(u: LocalExpansion) -> LocalExpansion | None:
    """
    Solve T^p - T = u in the local ring to the precision of u.

    Returns None when the residue equation has no root in F_q.
    """
    if not u.is_zero() and u.start < 0:
        raise NotAUnit(f"{u!r} is not integral")
    field = u.field
    residue_root = field.wp_root(u.coefficient(0))
    if residue_root is None:
        return None
    p = field.p
    root = LocalExpansion.constant(u.place, residue_root, u.precision)
    while True:
        candidate = root**p - u
        if candidate == root:
            break
        root = candidate
    if not (root**p - root - u).is_zero():
        logger.error(f"Local Artin-Schreier root of {u!r} failed verification")
        raise RuntimeError("Local Artin-Schreier root failed verification")
    return root
