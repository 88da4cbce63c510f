from typing import TYPE_CHECKING

from ..errors import DivisionByZero, FieldMismatch
from .finite_field import FiniteField
from .polynomial import Polynomial, polynomial_gcd

if TYPE_CHECKING:
    from .place import Place


def _leading_zeros(polynomial: Polynomial) -> int:
    count = 0
    for c in polynomial.coefficients:
        if c:
            break
        count += 1
    return count


def _common_factor(a: Polynomial, b: Polynomial) -> Polynomial | None:
    """Monic gcd of a and b, or None when it is 1."""
    if a.degree < 1 or b.degree < 1:
        return None
    if a.is_monomial() or b.is_monomial():
        common = min(_leading_zeros(a), _leading_zeros(b))
        return Polynomial.monomial(a.field, common) if common else None
    common = polynomial_gcd(a, b)
    return None if common.is_one() else common


class RationalFunction:
    """
    Element of F_q(t) in canonical form.

    The denominator is monic, numerator and denominator are coprime and zero
    is stored as 0/1. Every operation returns a canonical element, so two
    rational functions are equal iff their numerators and denominators are.

    Parameters
    ----------
    numerator : Polynomial
    denominator : Polynomial or None
        Defaults to 1.

    Raises
    ------
    DivisionByZero
        If the denominator is zero.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial | None = None):
        field = numerator.field
        if denominator is None:
            self.numerator = numerator
            self.denominator = Polynomial.one(field)
            return
        if denominator.field != field:
            raise FieldMismatch("Numerator and denominator over different fields")
        if denominator.is_zero():
            raise DivisionByZero("Rational function with zero denominator")
        if numerator.is_zero():
            self.numerator = numerator
            self.denominator = Polynomial.one(field)
            return

        if denominator.is_monomial():
            common = min(_leading_zeros(numerator), denominator.degree)
            if common:
                numerator = Polynomial(field, numerator.coefficients[common:])
                denominator = Polynomial(field, denominator.coefficients[common:])
        elif not denominator.is_one():
            common = polynomial_gcd(numerator, denominator)
            if not common.is_one():
                numerator = numerator // common
                denominator = denominator // common

        if denominator.leading != 1:
            unit = field.inv(denominator.leading)
            numerator = numerator.scale(unit)
            denominator = denominator.scale(unit)
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def _reduced(cls, numerator: Polynomial, denominator: Polynomial) -> "RationalFunction":
        # Parts must already be coprime; only the leading unit is normalized.
        result = cls.__new__(cls)
        if numerator.is_zero():
            denominator = Polynomial.one(numerator.field)
        elif denominator.leading != 1:
            unit = numerator.field.inv(denominator.leading)
            numerator = numerator.scale(unit)
            denominator = denominator.scale(unit)
        result.numerator = numerator
        result.denominator = denominator
        return result

    @classmethod
    def zero(cls, field: FiniteField) -> "RationalFunction":
        return cls(Polynomial.zero(field))

    @classmethod
    def one(cls, field: FiniteField) -> "RationalFunction":
        return cls(Polynomial.one(field))

    @classmethod
    def constant(cls, field: FiniteField, c: int) -> "RationalFunction":
        return cls(Polynomial.constant(field, c))

    @classmethod
    def t(cls, field: FiniteField) -> "RationalFunction":
        return cls(Polynomial.t(field))

    @property
    def field(self) -> FiniteField:
        return self.numerator.field

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_one(self) -> bool:
        return self.numerator.is_one() and self.denominator.is_one()

    def is_polynomial(self) -> bool:
        return self.denominator.is_one()

    def is_constant(self) -> bool:
        return self.denominator.is_one() and self.numerator.is_constant()

    def _coerce(self, other: object) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise FieldMismatch(
                    f"Rational functions over {self.field.label} "
                    f"and {other.field.label}"
                )
            return other
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise FieldMismatch("Polynomial over a different field")
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction.constant(self.field, self.field.from_int(other))
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    def __add__(self, other: object) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.denominator, other.denominator
        common = _common_factor(d1, d2)
        if common is None:
            return RationalFunction._reduced(
                self.numerator * d2 + other.numerator * d1, d1 * d2
            )
        d1, d2 = d1 // common, d2 // common
        numerator = self.numerator * d2 + other.numerator * d1
        denominator = d1 * other.denominator
        # Only factors of the shared part of the denominators can cancel.
        cancel = _common_factor(numerator, common)
        if cancel is not None:
            numerator = numerator // cancel
            denominator = denominator // cancel
        return RationalFunction._reduced(numerator, denominator)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._reduced(-self.numerator, self.denominator)

    def __sub__(self, other: object) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n1, d1 = self.numerator, self.denominator
        n2, d2 = other.numerator, other.denominator
        common = _common_factor(n1, d2)
        if common is not None:
            n1, d2 = n1 // common, d2 // common
        common = _common_factor(n2, d1)
        if common is not None:
            n2, d1 = n2 // common, d1 // common
        return RationalFunction._reduced(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZero("Inverse of the zero rational function")
        return RationalFunction._reduced(self.denominator, self.numerator)

    def __truediv__(self, other: object) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "RationalFunction":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._reduced(self.numerator**n, self.denominator**n)

    def frobenius(self) -> "RationalFunction":
        return RationalFunction._reduced(
            self.numerator.frobenius(), self.denominator.frobenius()
        )

    def wp(self) -> "RationalFunction":
        """The Artin-Schreier operator T^p - T."""
        return self.frobenius() - self

    def scale(self, c: int) -> "RationalFunction":
        return RationalFunction._reduced(self.numerator.scale(c), self.denominator)

    def map_coefficients(self, image: "callable", field: FiniteField) -> "RationalFunction":
        """Apply a field homomorphism to all coefficients."""
        return RationalFunction(
            Polynomial(field, [image(c) for c in self.numerator.coefficients]),
            Polynomial(field, [image(c) for c in self.denominator.coefficients]),
        )

    def shift(self, c: int) -> "RationalFunction":
        """The function t -> self(t + c)."""
        return RationalFunction(
            self.numerator.taylor_shift(c), self.denominator.taylor_shift(c)
        )

    def invert_variable(self) -> "RationalFunction":
        """The function t -> self(1/t)."""
        dn, dd = self.numerator.degree, self.denominator.degree
        if self.is_zero():
            return self
        numerator = self.numerator.reverse(dn)
        denominator = self.denominator.reverse(dd)
        if dd >= dn:
            numerator = numerator.shift_degree(dd - dn)
        else:
            denominator = denominator.shift_degree(dn - dd)
        return RationalFunction(numerator, denominator)

    def valuation(self, place: "Place") -> int | float:
        return place.valuation(self)

    def __str__(self) -> str:
        numerator = str(self.numerator)
        if self.denominator.is_one():
            return numerator
        if self.numerator.term_count > 1:
            numerator = f"({numerator})"
        denominator = str(self.denominator)
        if self.denominator.term_count > 1:
            denominator = f"({denominator})"
        return f"{numerator} / {denominator}"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"
