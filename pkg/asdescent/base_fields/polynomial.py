from typing import Iterable, List, Sequence, Tuple

from ..errors import DivisionByZero, FieldMismatch
from .definitions import KRONECKER_THRESHOLD
from .finite_field import FiniteField


def _strip(coefficients: List[int]) -> List[int]:
    while coefficients and coefficients[-1] == 0:
        coefficients.pop()
    return coefficients


def _kronecker_multiply(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    # Pack both operands into big integers with slots wide enough that no
    # coefficient of the integer product carries into its neighbour.
    bound = (p - 1) ** 2 * min(len(a), len(b))
    width = max(1, (bound.bit_length() + 7) // 8)
    packed_a = int.from_bytes(
        b"".join(c.to_bytes(width, "little") for c in a), "little"
    )
    packed_b = int.from_bytes(
        b"".join(c.to_bytes(width, "little") for c in b), "little"
    )
    size = len(a) + len(b) - 1
    raw = (packed_a * packed_b).to_bytes(width * (size + 1), "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") % p
        for i in range(size)
    ]


def _multiply(field: FiniteField, a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    if field.k == 1:
        p = field.p
        if min(len(a), len(b)) >= KRONECKER_THRESHOLD:
            return _kronecker_multiply(a, b, p)
        product = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    product[i + j] += x * y
        return [c % p for c in product]

    add, mul = field.add_table, field.mul_table
    product = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            row = mul[x]
            for j, y in enumerate(b):
                if y:
                    product[i + j] = add[product[i + j]][row[y]]
    return product


def _divmod(
    field: FiniteField, a: Sequence[int], b: Sequence[int]
) -> Tuple[List[int], List[int]]:
    if not b:
        raise DivisionByZero("Polynomial division by zero")
    degree_b = len(b) - 1
    if len(a) <= degree_b:
        return [], list(a)
    remainder = list(a)
    quotient = [0] * (len(a) - degree_b)
    lead_inverse = field.inv(b[-1])

    if field.k == 1:
        p = field.p
        for i in range(len(a) - 1 - degree_b, -1, -1):
            c = remainder[i + degree_b]
            if c:
                c = c * lead_inverse % p
                quotient[i] = c
                for j, y in enumerate(b):
                    remainder[i + j] = (remainder[i + j] - c * y) % p
    else:
        add, mul, neg = field.add_table, field.mul_table, field.neg
        for i in range(len(a) - 1 - degree_b, -1, -1):
            c = remainder[i + degree_b]
            if c:
                c = mul[c][lead_inverse]
                quotient[i] = c
                row = mul[neg(c)]
                for j, y in enumerate(b):
                    remainder[i + j] = add[remainder[i + j]][row[y]]
    return _strip(quotient), _strip(remainder[:degree_b])


class Polynomial:
    """
    Polynomial in t over a finite field, coefficients from the constant term up.

    Instances are immutable; trailing zero coefficients are always stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("field", "coefficients")

    def __init__(self, field: FiniteField, coefficients: Iterable[int] = ()):
        self.field = field
        self.coefficients: Tuple[int, ...] = tuple(_strip(list(coefficients)))

    @classmethod
    def zero(cls, field: FiniteField) -> "Polynomial":
        return cls(field)

    @classmethod
    def one(cls, field: FiniteField) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def constant(cls, field: FiniteField, c: int) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def t(cls, field: FiniteField) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, c: int = 1) -> "Polynomial":
        return cls(field, [0] * degree + [c])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_one(self) -> bool:
        return self.coefficients == (1,)

    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_monomial(self) -> bool:
        return sum(1 for c in self.coefficients if c) == 1

    @property
    def term_count(self) -> int:
        return sum(1 for c in self.coefficients if c)

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise FieldMismatch(
                f"Polynomials over {self.field.label} and {other.field.label}"
            )

    def _coerce(self, other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.field, self.field.from_int(other))
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash((self.field, self.coefficients))

    def __add__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add_table
        return Polynomial(self.field, [add[x][b[i]] if i < len(b) else x for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.field.neg
        return Polynomial(self.field, [neg(c) for c in self.coefficients])

    def __sub__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial(
            self.field, _multiply(self.field, self.coefficients, other.coefficients)
        )

    __rmul__ = __mul__

    def scale(self, c: int) -> "Polynomial":
        row = self.field.mul_table[c]
        return Polynomial(self.field, [row[x] for x in self.coefficients])

    def shift_degree(self, n: int) -> "Polynomial":
        """Multiply by t^n."""
        if self.is_zero():
            return self
        return Polynomial(self.field, [0] * n + list(self.coefficients))

    def __divmod__(self, other: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        self._check(other)
        quotient, remainder = _divmod(
            self.field, self.coefficients, other.coefficients
        )
        return Polynomial(self.field, quotient), Polynomial(self.field, remainder)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("Negative power of a polynomial")
        result = Polynomial.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def pow_mod(self, n: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial.one(self.field) % modulus
        base = self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            n >>= 1
            if n:
                base = (base * base) % modulus
        return result

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.leading == 1:
            return self
        return self.scale(self.field.inv(self.leading))

    def evaluate(self, x: int) -> int:
        add, mul = self.field.add_table, self.field.mul_table
        value = 0
        for c in reversed(self.coefficients):
            value = add[mul[value][x]][c]
        return value

    def frobenius(self) -> "Polynomial":
        """Coefficient-wise Frobenius composed with t -> t^p, i.e. self^p."""
        p = self.field.p
        spread = [0] * (p * self.degree + 1) if self.coefficients else []
        for i, c in enumerate(self.coefficients):
            spread[i * p] = self.field.frobenius(c)
        return Polynomial(self.field, spread)

    def taylor_shift(self, c: int) -> "Polynomial":
        """The polynomial t -> self(t + c)."""
        if c == 0 or self.is_constant():
            return self
        add, mul = self.field.add_table, self.field.mul_table
        shifted = list(self.coefficients)
        n = len(shifted)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                shifted[j] = add[shifted[j]][mul[c][shifted[j + 1]]]
        return Polynomial(self.field, shifted)

    def reverse(self, n: int) -> "Polynomial":
        """The polynomial t^n * self(1/t); requires n >= degree."""
        if n < self.degree:
            raise ValueError(f"Cannot reverse degree {self.degree} into {n}")
        padded = list(self.coefficients) + [0] * (n + 1 - len(self.coefficients))
        return Polynomial(self.field, reversed(padded))

    def order_at(self, factor: "Polynomial") -> int:
        """Multiplicity of the irreducible ``factor`` in a nonzero polynomial."""
        if self.is_zero():
            raise ValueError("Order of the zero polynomial")
        order = 0
        current = self
        if factor.degree == 1 and factor.coefficients[0] == 0:
            for c in current.coefficients:
                if c:
                    break
                order += 1
            return order
        while True:
            quotient, remainder = divmod(current, factor)
            if not remainder.is_zero():
                return order
            order += 1
            current = quotient

    def is_irreducible(self) -> bool:
        return self.field.is_irreducible(self.monic().coefficients)

    def factor(self) -> List[Tuple["Polynomial", int]]:
        """Monic irreducible factors with multiplicities (leading unit dropped)."""
        return [
            (Polynomial(self.field, factor), multiplicity)
            for factor, multiplicity in self.field.factor(self.monic().coefficients)
        ]

    def __str__(self) -> str:
        terms = []
        for degree in range(self.degree, -1, -1):
            c = self.coefficients[degree]
            if c == 0:
                continue
            coefficient = self.field.format_element(c)
            if degree == 0:
                terms.append(coefficient)
                continue
            monomial = "t" if degree == 1 else f"t^{degree}"
            terms.append(monomial if c == 1 else f"{coefficient}*{monomial}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def polynomial_xgcd(
    a: Polynomial, b: Polynomial
) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """Return (g, s, r) with s*a + r*b = g = gcd(a, b) monic."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Polynomial.one(field), Polynomial.zero(field)
    t0, t1 = Polynomial.zero(field), Polynomial.one(field)
    while not r1.is_zero():
        quotient, remainder = divmod(r0, r1)
        r0, r1 = r1, remainder
        s0, s1 = s1, s0 - quotient * s1
        t0, t1 = t1, t0 - quotient * t1
    if r0.is_zero():
        return r0, s0, t0
    unit = field.inv(r0.leading)
    return r0.scale(unit), s0.scale(unit), t0.scale(unit)


def inverse_mod(a: Polynomial, modulus: Polynomial) -> Polynomial:
    g, s, _ = polynomial_xgcd(a % modulus, modulus)
    if not g.is_one():
        raise DivisionByZero(f"{a} is not invertible modulo {modulus}")
    return s % modulus


def chinese_remainder(
    residues: Sequence[Polynomial], moduli: Sequence[Polynomial]
) -> Polynomial:
    """Least-degree G with G = r_i mod m_i for pairwise coprime m_i."""
    if not moduli:
        raise ValueError("Chinese remaindering needs at least one modulus")
    product = Polynomial.one(moduli[0].field)
    for modulus in moduli:
        product = product * modulus
    result = Polynomial.zero(product.field)
    for residue, modulus in zip(residues, moduli):
        cofactor = product // modulus
        coefficient = (residue * inverse_mod(cofactor, modulus)) % modulus
        result = result + coefficient * cofactor
    return result % product
