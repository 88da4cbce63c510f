from functools import lru_cache
from logging import getLogger
from typing import List, NamedTuple, Sequence, Tuple

import galois
import numpy as np

from ..errors import (
    DivisionByZero,
    IrreduciblePolynomialNotFound,
    ReducibleModulus,
    UnsupportedFieldSize,
    ZeroInput,
)

SUPPORTED_CHARACTERISTICS = (2, 3, 5, 7)
MAX_FIELD_ORDER = 343

logger = getLogger("asdescent")


class FiniteField:
    """
    Exact arithmetic in F_q, q = p^k, with elements encoded as integers.

    An element is the integer ``c_0 + c_1 p + ... + c_{k-1} p^{k-1}`` where
    ``(c_0, ..., c_{k-1})`` is its coefficient vector in the basis
    ``1, g, ..., g^{k-1}`` of F_p[g]/(modulus). This is the same integer
    representation galois uses, so the addition, multiplication, inverse and
    Frobenius tables are computed once through galois and then looked up.

    Parameters
    ----------
    p : int
        Characteristic, one of 2, 3, 5, 7.
    modulus : Sequence[int]
        Monic irreducible polynomial over F_p, coefficients from the constant
        term up. Ignored (normalized to ``g``) when of degree 1.

    Raises
    ------
    UnsupportedFieldSize
        If p is not supported or q exceeds 343.
    ReducibleModulus
        If the modulus is not monic irreducible.
    """

    def __init__(self, p: int, modulus: Sequence[int]):
        if p not in SUPPORTED_CHARACTERISTICS:
            raise UnsupportedFieldSize(
                f"Characteristic {p} is not one of {SUPPORTED_CHARACTERISTICS}"
            )
        coefficients = tuple(int(c) % p for c in modulus)
        while coefficients and coefficients[-1] == 0:
            coefficients = coefficients[:-1]
        k = len(coefficients) - 1
        if k < 1 or coefficients[-1] != 1:
            raise ReducibleModulus(
                f"Modulus {list(modulus)} is not monic of positive degree"
            )
        if p**k > MAX_FIELD_ORDER:
            raise UnsupportedFieldSize(
                f"Field of order {p}^{k} exceeds the supported {MAX_FIELD_ORDER}"
            )

        prime_field = galois.GF(p)
        if k == 1:
            coefficients = (0, 1)
            self._galois = prime_field
        else:
            irreducible = galois.Poly(
                list(reversed(coefficients)), field=prime_field
            )
            if not irreducible.is_irreducible():
                raise ReducibleModulus(f"Modulus {list(modulus)} is reducible")
            self._galois = galois.GF(p**k, irreducible_poly=irreducible)

        self.p = p
        self.k = k
        self.q = p**k
        self.modulus: Tuple[int, ...] = coefficients
        self._build_tables()

    def _build_tables(self) -> None:
        elements = self._galois.elements
        column = elements.reshape(-1, 1)
        row = elements.reshape(1, -1)
        self._add: List[List[int]] = (column + row).view(np.ndarray).tolist()
        self._mul: List[List[int]] = (column * row).view(np.ndarray).tolist()
        self._neg: List[int] = (-elements).view(np.ndarray).tolist()
        self._inv: List[int] = [0] + np.reciprocal(elements[1:]).view(
            np.ndarray
        ).tolist()
        self._frobenius: List[int] = (elements**self.p).view(
            np.ndarray
        ).tolist()
        root = [0] * self.q
        for a, image in enumerate(self._frobenius):
            root[image] = a
        self._pth_root = root

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, modulus={list(self.modulus)})"

    @property
    def label(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})[{','.join(map(str, self.modulus))}]"

    @property
    def add_table(self) -> List[List[int]]:
        return self._add

    @property
    def mul_table(self) -> List[List[int]]:
        return self._mul

    def elements(self) -> range:
        return range(self.q)

    def element(self, value: int) -> int:
        if not 0 <= value < self.q:
            raise ValueError(f"{value} is not an element of {self.label}")
        return value

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_p -> F_q."""
        return n % self.p

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("Inverse of zero in a finite field")
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        result = 1
        while n:
            if n & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            n >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self._frobenius[a]

    def pth_root(self, a: int) -> int:
        """The unique r with r^p = a."""
        return self._pth_root[a]

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as an element of the prime field."""
        total = a
        conjugate = a
        for _ in range(self.k - 1):
            conjugate = self._frobenius[conjugate]
            total = self._add[total][conjugate]
        return total

    def has_sth_root(self, a: int, s: int) -> bool:
        if a == 0:
            raise ZeroInput("s-th root of zero requested")
        order = self.q - 1
        return self.pow(a, order // _gcd(s, order)) == 1

    def sth_root(self, a: int, s: int) -> int | None:
        """
        Least r (in the integer ordering of elements) with r^s = a.

        Returns
        -------
        int or None
            The root, or None if a is not an s-th power in F_q.

        Raises
        ------
        ZeroInput
            If a is zero.
        """
        if not self.has_sth_root(a, s):
            return None
        for r in range(1, self.q):
            if self.pow(r, s) == a:
                return r
        return None

    def wp_root(self, a: int) -> int | None:
        """Least y with y^p - y = a, or None."""
        for y in range(self.q):
            if self.sub(self._frobenius[y], y) == a:
                return y
        return None

    def to_vector(self, a: int) -> List[int]:
        digits = []
        for _ in range(self.k):
            a, digit = divmod(a, self.p)
            digits.append(digit)
        return digits

    def from_vector(self, vector: Sequence[int]) -> int:
        if len(vector) > self.k:
            raise ValueError(
                f"Vector {list(vector)} is longer than the degree {self.k}"
            )
        value = 0
        for digit in reversed(vector):
            value = value * self.p + int(digit) % self.p
        return value

    def format_element(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        return "[" + ",".join(map(str, self.to_vector(a))) + "]"

    def is_irreducible(self, coefficients: Sequence[int]) -> bool:
        if len(coefficients) < 2:
            return False
        return self._galois_poly(coefficients).is_irreducible()

    def factor(self, coefficients: Sequence[int]) -> List[Tuple[Tuple[int, ...], int]]:
        """
        Monic irreducible factors with multiplicities of a monic polynomial
        given by coefficients from the constant term up.
        """
        if len(coefficients) < 2:
            return []
        factors, multiplicities = self._galois_poly(coefficients).factors()
        result = []
        for factor, multiplicity in zip(factors, multiplicities):
            low_to_high = tuple(
                int(c) for c in factor.coeffs.view(np.ndarray).tolist()[::-1]
            )
            result.append((low_to_high, int(multiplicity)))
        return sorted(result)

    def _galois_poly(self, coefficients: Sequence[int]) -> galois.Poly:
        return galois.Poly(
            list(reversed([int(c) for c in coefficients])), field=self._galois
        )


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def default_modulus(p: int, k: int) -> Tuple[int, ...]:
    """Lexicographically least monic irreducible polynomial of degree k."""
    if k == 1:
        return (0, 1)
    try:
        poly = galois.irreducible_poly(p, k)
    except (ValueError, RuntimeError) as e:
        raise IrreduciblePolynomialNotFound(
            f"No irreducible polynomial of degree {k} over GF({p})"
        ) from e
    return tuple(int(c) for c in poly.coeffs.view(np.ndarray).tolist()[::-1])


@lru_cache(maxsize=None)
def _cached_field(p: int, modulus: Tuple[int, ...]) -> FiniteField:
    return FiniteField(p, modulus)


def finite_field(
    p: int, k: int = 1, modulus: Sequence[int] | None = None
) -> FiniteField:
    """
    Return the (cached) field F_{p^k}.

    Parameters
    ----------
    p : int
        Characteristic.
    k : int, default=1
        Extension degree.
    modulus : Sequence[int] or None
        Defining polynomial from the constant term up; the lexicographically
        least irreducible polynomial is used when omitted.
    """
    if p not in SUPPORTED_CHARACTERISTICS:
        raise UnsupportedFieldSize(
            f"Characteristic {p} is not one of {SUPPORTED_CHARACTERISTICS}"
        )
    if k < 1 or p**k > MAX_FIELD_ORDER:
        raise UnsupportedFieldSize(f"Field of order {p}^{k} is not supported")
    if modulus is None:
        modulus = default_modulus(p, k)
    elif len(modulus) != k + 1:
        raise ReducibleModulus(
            f"Modulus {list(modulus)} does not have degree {k}"
        )
    return _cached_field(p, tuple(int(c) % p for c in modulus))


class FieldEmbedding(NamedTuple):
    """Ring homomorphism F_q -> F_{q^e} given by the images of all elements."""

    source: FiniteField
    target: FiniteField
    images: Tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]


def extend_constants(
    field: FiniteField, e: int
) -> Tuple[FiniteField, FieldEmbedding]:
    """
    Build F_{q^e} together with an explicit embedding of F_q.

    The generator of F_q is sent to the least root (integer ordering) of the
    modulus of F_q inside the larger field.

    Raises
    ------
    UnsupportedFieldSize
        If q^e exceeds the supported field order.
    IrreduciblePolynomialNotFound
        If the modulus of F_q has no root in the larger field.
    """
    if e < 1:
        raise ValueError(f"Extension degree must be positive, got {e}")
    if e == 1:
        return field, FieldEmbedding(field, field, tuple(field.elements()))

    target = finite_field(field.p, field.k * e)
    generator = None
    for candidate in target.elements():
        value = 0
        for c in reversed(field.modulus):
            value = target.add(target.mul(value, candidate), c)
        if value == 0:
            generator = candidate
            break
    if generator is None:
        raise IrreduciblePolynomialNotFound(
            f"Modulus of {field.label} has no root in {target.label}"
        )

    powers = [1]
    for _ in range(field.k - 1):
        powers.append(target.mul(powers[-1], generator))
    images = []
    for a in field.elements():
        image = 0
        for digit, power in zip(field.to_vector(a), powers):
            image = target.add(image, target.mul(digit, power))
        images.append(image)

    logger.debug(
        f"Extended constants {field.label} -> {target.label}, "
        f"generator -> {target.format_element(generator)}"
    )
    return target, FieldEmbedding(field, target, tuple(images))
