from typing import Dict, List, Tuple

from ..errors import FieldMismatch, NotAUnit, UnsupportedPlaceDegree
from .definitions import INFINITY, PlaceKind
from .finite_field import FiniteField
from .polynomial import Polynomial, inverse_mod
from .rational_function import RationalFunction


class Place:
    """
    Closed point of the projective line over F_q with its normalized valuation.

    Finite places carry a monic irreducible polynomial ``polynomial``; the
    infinite place carries none. The canonical uniformizer is that polynomial,
    or ``1/t`` at infinity.

    Use the constructors ``Place.finite``, ``Place.rational`` and
    ``Place.infinity`` rather than calling ``Place`` directly.
    """

    __slots__ = ("kind", "field", "polynomial")

    def __init__(
        self, kind: PlaceKind, field: FiniteField, polynomial: Polynomial | None = None
    ):
        self.kind = kind
        self.field = field
        self.polynomial = polynomial

    @classmethod
    def finite(cls, polynomial: Polynomial) -> "Place":
        if not polynomial.is_monic() or polynomial.degree < 1:
            raise ValueError(f"Place polynomial {polynomial} must be monic")
        if polynomial.degree > 1 and not polynomial.is_irreducible():
            raise ValueError(f"Place polynomial {polynomial} is reducible")
        return cls(PlaceKind.Finite, polynomial.field, polynomial)

    @classmethod
    def rational(cls, field: FiniteField, c: int) -> "Place":
        """The place t - c."""
        return cls(PlaceKind.Finite, field, Polynomial(field, (field.neg(c), 1)))

    @classmethod
    def infinity(cls, field: FiniteField) -> "Place":
        return cls(PlaceKind.Infinity, field)

    @property
    def is_infinity(self) -> bool:
        return self.kind == PlaceKind.Infinity

    @property
    def degree(self) -> int:
        return 1 if self.polynomial is None else self.polynomial.degree

    @property
    def root(self) -> int:
        """The point c of a rational finite place t - c."""
        if self.is_infinity or self.degree != 1:
            raise UnsupportedPlaceDegree(f"{self} is not a rational finite place")
        return self.field.neg(self.polynomial.coefficients[0])

    @property
    def residue_modulus(self) -> Polynomial:
        if self.polynomial is None:
            return Polynomial.t(self.field)
        return self.polynomial

    @property
    def residue_field_order(self) -> int:
        return self.field.q**self.degree

    def require_rational(self) -> None:
        if self.degree != 1:
            raise UnsupportedPlaceDegree(
                f"Place {self} has degree {self.degree}; only rational places "
                "are supported here"
            )

    def uniformizer(self) -> RationalFunction:
        if self.polynomial is None:
            return RationalFunction(
                Polynomial.one(self.field), Polynomial.t(self.field)
            )
        return RationalFunction(self.polynomial)

    def order(self, polynomial: Polynomial) -> int:
        if self.polynomial is None:
            return -polynomial.degree
        return polynomial.order_at(self.polynomial)

    def valuation(self, f: RationalFunction) -> int | float:
        if f.field != self.field:
            raise FieldMismatch(f"{f} is not over the field of {self}")
        if f.is_zero():
            return INFINITY
        if self.polynomial is None:
            return f.denominator.degree - f.numerator.degree
        return self.order(f.numerator) - self.order(f.denominator)

    def residue(self, f: RationalFunction) -> Polynomial:
        """
        Residue class of an integral f, as a polynomial reduced modulo the
        residue modulus (a constant polynomial at infinity).

        Raises
        ------
        NotAUnit
            If f has a pole at this place.
        """
        v = self.valuation(f)
        if v < 0:
            raise NotAUnit(f"{f} has a pole of order {-v} at {self}")
        if v > 0:
            return Polynomial.zero(self.field)
        if self.polynomial is None:
            return Polynomial.constant(
                self.field,
                self.field.div(f.numerator.leading, f.denominator.leading),
            )
        modulus = self.polynomial
        return (f.numerator * inverse_mod(f.denominator, modulus)) % modulus

    def residue_constant(self, f: RationalFunction) -> int:
        self.require_rational()
        return self.residue(f)[0]

    def residue_pth_root(self, r: Polynomial) -> Polynomial:
        if self.degree == 1:
            return Polynomial.constant(self.field, self.field.pth_root(r[0]))
        return r.pow_mod(self.residue_field_order // self.field.p, self.polynomial)

    def residue_trace(self, r: Polynomial) -> int:
        """Absolute trace of a residue class to the prime field."""
        if self.degree == 1:
            return self.field.trace(r[0])
        modulus = self.polynomial
        total = r % modulus
        conjugate = total
        for _ in range(self.field.k * self.degree - 1):
            conjugate = conjugate.pow_mod(self.field.p, modulus)
            total = total + conjugate
        return (total % modulus)[0]

    def sort_key(self) -> Tuple:
        if self.polynomial is None:
            return (1, 0, ())
        return (0, self.degree, self.polynomial.coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Place):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.field == other.field
            and self.polynomial == other.polynomial
        )

    def __hash__(self) -> int:
        return hash((self.kind, self.field, self.polynomial))

    def __str__(self) -> str:
        if self.polynomial is None:
            return "inf"
        if self.degree == 1:
            c = self.root
            return "t" if c == 0 else f"t - {self.field.format_element(c)}"
        return f"irr:{self.polynomial}"

    def __repr__(self) -> str:
        return f"Place({self})"


def rational_places(field: FiniteField) -> List[Place]:
    return [Place.rational(field, c) for c in field.elements()] + [
        Place.infinity(field)
    ]


def principal_divisor(f: RationalFunction) -> Dict[Place, int]:
    """Zeros and poles of a nonzero f, including the infinite place."""
    if f.is_zero():
        raise ValueError("The zero function has no divisor")
    divisor: Dict[Place, int] = {}
    for polynomial, sign in ((f.numerator, 1), (f.denominator, -1)):
        for factor, multiplicity in polynomial.factor():
            place = Place(PlaceKind.Finite, f.field, factor)
            divisor[place] = divisor.get(place, 0) + sign * multiplicity
    at_infinity = f.denominator.degree - f.numerator.degree
    if at_infinity:
        divisor[Place.infinity(f.field)] = at_infinity
    return {place: v for place, v in divisor.items() if v}
