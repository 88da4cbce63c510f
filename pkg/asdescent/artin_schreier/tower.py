from functools import lru_cache
from logging import getLogger
from typing import Any, List, NamedTuple, Sequence, Tuple

from ..base_fields import (
    INFINITY,
    FiniteField,
    Place,
    RationalFunction,
    wp_preimage,
)
from ..errors import (
    DivisionByZero,
    FieldMismatch,
    NotAUnit,
    NotNegativePrimeToP,
    TrivialLayer,
)

logger = getLogger("asdescent")

# A raw value is a RationalFunction at level 0 and a tuple of p raw values of
# the previous level above it.
Raw = Any


class BaseLevel:
    """Level 0 of every tower: the rational function field F_q(t)."""

    index = 0
    parent = None

    def __init__(self, field: FiniteField):
        self.field = field
        self.p = field.p
        self.zero = RationalFunction.zero(field)
        self.one = RationalFunction.one(field)

    def add(self, a: Raw, b: Raw) -> Raw:
        return a + b

    def sub(self, a: Raw, b: Raw) -> Raw:
        return a - b

    def neg(self, a: Raw) -> Raw:
        return -a

    def mul(self, a: Raw, b: Raw) -> Raw:
        return a * b

    def inverse(self, a: Raw) -> Raw:
        return a.inverse()

    def is_zero(self, a: Raw) -> bool:
        return a.is_zero()

    def frobenius(self, a: Raw) -> Raw:
        return a.frobenius()

    def lift(self, raw: Raw, source: "BaseLevel | ASLayer") -> Raw:
        return raw

    def format(self, raw: Raw) -> str:
        return str(raw)


@lru_cache(maxsize=None)
def base_level(field: FiniteField) -> BaseLevel:
    return BaseLevel(field)


class ASLayer:
    """
    Artin-Schreier layer L_k = L_{k-1}[x_k]/(x_k^p - x_k - f_k).

    Elements of the layer are tuples ``(c_0, ..., c_{p-1})`` of raw values of
    the previous level meaning sum c_i x_k^i. The defining relation
    x_k^p = x_k + f_k is the only reduction rule.
    """

    def __init__(self, parent: "BaseLevel | ASLayer", defining: Raw):
        self.parent = parent
        self.index = parent.index + 1
        self.field = parent.field
        self.p = parent.p
        self.defining = defining
        self.zero: Raw = (parent.zero,) * self.p
        self.one: Raw = (parent.one,) + (parent.zero,) * (self.p - 1)
        self.generator: Raw = (parent.zero, parent.one) + (parent.zero,) * (self.p - 2)
        self._frobenius_basis: List[Raw] | None = None
        self._generator_inverse: Raw | None = None

    @property
    def symbol(self) -> str:
        return f"x{self.index}"

    def constant(self, c: Raw) -> Raw:
        return (c,) + (self.parent.zero,) * (self.p - 1)

    def lift(self, raw: Raw, source: "BaseLevel | ASLayer") -> Raw:
        if source.index >= self.index:
            return raw
        return self.constant(self.parent.lift(raw, source))

    def add(self, a: Raw, b: Raw) -> Raw:
        add = self.parent.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a: Raw, b: Raw) -> Raw:
        sub = self.parent.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a: Raw) -> Raw:
        neg = self.parent.neg
        return tuple(neg(x) for x in a)

    def scale(self, a: Raw, c: Raw) -> Raw:
        """Multiply by an element of the previous level."""
        mul, is_zero = self.parent.mul, self.parent.is_zero
        return tuple(x if is_zero(x) else mul(x, c) for x in a)

    def is_zero(self, a: Raw) -> bool:
        is_zero = self.parent.is_zero
        return all(is_zero(x) for x in a)

    def mul(self, a: Raw, b: Raw) -> Raw:
        parent, p = self.parent, self.p
        if all(parent.is_zero(y) for y in b[1:]):
            return self.scale(a, b[0])
        if all(parent.is_zero(x) for x in a[1:]):
            return self.scale(b, a[0])
        product = [parent.zero] * (2 * p - 1)
        for i, x in enumerate(a):
            if parent.is_zero(x):
                continue
            for j, y in enumerate(b):
                if parent.is_zero(y):
                    continue
                product[i + j] = parent.add(product[i + j], parent.mul(x, y))
        # x^d = x^(d-p+1) + f x^(d-p) for d >= p
        for d in range(2 * p - 2, p - 1, -1):
            c = product[d]
            if parent.is_zero(c):
                continue
            product[d - p + 1] = parent.add(product[d - p + 1], c)
            product[d - p] = parent.add(product[d - p], parent.mul(c, self.defining))
        return tuple(product[:p])

    def frobenius(self, a: Raw) -> Raw:
        if self._frobenius_basis is None:
            shifted = (self.defining, self.parent.one) + (self.parent.zero,) * (
                self.p - 2
            )
            basis = [self.one]
            for _ in range(self.p - 1):
                basis.append(self.mul(basis[-1], shifted))
            self._frobenius_basis = basis
        result = self.zero
        for c, power in zip(a, self._frobenius_basis):
            if not self.parent.is_zero(c):
                result = self.add(result, self.scale(power, self.parent.frobenius(c)))
        return result

    def generator_inverse(self) -> Raw:
        """x^-1 = (x^(p-1) - 1) / f."""
        if self._generator_inverse is None:
            parent = self.parent
            f_inverse = parent.inverse(self.defining)
            coefficients = [parent.zero] * self.p
            coefficients[0] = parent.neg(f_inverse)
            coefficients[self.p - 1] = parent.add(coefficients[self.p - 1], f_inverse)
            self._generator_inverse = tuple(coefficients)
        return self._generator_inverse

    def _trim(self, polynomial: List[Raw]) -> List[Raw]:
        while polynomial and self.parent.is_zero(polynomial[-1]):
            polynomial.pop()
        return polynomial

    def _poly_sub(self, a: List[Raw], b: List[Raw]) -> List[Raw]:
        parent = self.parent
        size = max(len(a), len(b))
        a = a + [parent.zero] * (size - len(a))
        b = b + [parent.zero] * (size - len(b))
        return self._trim([parent.sub(x, y) for x, y in zip(a, b)])

    def _poly_mul(self, a: List[Raw], b: List[Raw]) -> List[Raw]:
        parent = self.parent
        if not a or not b:
            return []
        product = [parent.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                product[i + j] = parent.add(product[i + j], parent.mul(x, y))
        return self._trim(product)

    def _poly_divmod(
        self, a: List[Raw], b: List[Raw]
    ) -> Tuple[List[Raw], List[Raw]]:
        parent = self.parent
        remainder = list(a)
        if len(remainder) < len(b):
            return [], remainder
        quotient = [parent.zero] * (len(remainder) - len(b) + 1)
        lead_inverse = parent.inverse(b[-1])
        for i in range(len(remainder) - len(b), -1, -1):
            c = remainder[i + len(b) - 1]
            if parent.is_zero(c):
                continue
            c = parent.mul(c, lead_inverse)
            quotient[i] = c
            for j, y in enumerate(b):
                remainder[i + j] = parent.sub(remainder[i + j], parent.mul(c, y))
        return self._trim(quotient), self._trim(remainder[: len(b) - 1])

    def inverse(self, a: Raw) -> Raw:
        """Inverse by the extended Euclidean algorithm over the previous level."""
        parent, p = self.parent, self.p
        if self.is_zero(a):
            raise DivisionByZero(f"Inverse of zero in layer {self.index}")
        modulus = [parent.neg(self.defining), parent.neg(parent.one)]
        modulus += [parent.zero] * (p - 2) + [parent.one]
        r0, r1 = modulus, self._trim(list(a))
        s0, s1 = [], [parent.one]
        while len(r1) > 1:
            quotient, remainder = self._poly_divmod(r0, r1)
            r0, r1 = r1, remainder
            s0, s1 = s1, self._poly_sub(s0, self._poly_mul(quotient, s1))
        if not r1:
            raise DivisionByZero(f"Zero divisor in layer {self.index}")
        unit = parent.inverse(r1[0])
        coefficients = [parent.mul(c, unit) for c in s1]
        coefficients += [parent.zero] * (p - len(coefficients))
        return tuple(coefficients[:p])

    def format(self, raw: Raw) -> str:
        parent = self.parent
        terms = []
        for i in range(self.p - 1, -1, -1):
            c = raw[i]
            if parent.is_zero(c):
                continue
            text = parent.format(c)
            if i == 0:
                terms.append(text)
                continue
            monomial = self.symbol if i == 1 else f"{self.symbol}^{i}"
            if c == parent.one:
                terms.append(monomial)
            elif " " in text:
                terms.append(f"({text})*{monomial}")
            else:
                terms.append(f"{text}*{monomial}")
        return " + ".join(terms) if terms else "0"


Level = BaseLevel | ASLayer


def _descends(lower: Level, upper: Level) -> bool:
    node = upper
    while node.index > lower.index:
        node = node.parent
    if node is lower:
        return True
    return node.index == 0 and lower.index == 0 and node.field == lower.field


class TowerElement:
    """
    Element of some level of an Artin-Schreier tower.

    Elements of different levels of the same tower combine freely; the
    result lives at the higher level. Plain rational functions and integers
    are accepted as level-0 operands.
    """

    __slots__ = ("level", "raw")

    def __init__(self, level: Level, raw: Raw):
        self.level = level
        self.raw = raw

    @classmethod
    def of(cls, value: "TowerElement | RationalFunction") -> "TowerElement":
        if isinstance(value, TowerElement):
            return value
        return cls(base_level(value.field), value)

    @property
    def field(self) -> FiniteField:
        return self.level.field

    @property
    def index(self) -> int:
        return self.level.index

    def _coerce(self, other: object) -> "TowerElement | None":
        if isinstance(other, TowerElement):
            return other
        if isinstance(other, RationalFunction):
            return TowerElement(base_level(other.field), other)
        if isinstance(other, int):
            return TowerElement(
                base_level(self.field),
                RationalFunction.constant(self.field, self.field.from_int(other)),
            )
        return None

    def _align(self, other: "TowerElement") -> Tuple[Level, Raw, Raw]:
        a, b = self.level, other.level
        if a is b:
            return a, self.raw, other.raw
        if a.index >= b.index:
            if not _descends(b, a):
                raise FieldMismatch("Tower elements from unrelated towers")
            return a, self.raw, a.lift(other.raw, b)
        if not _descends(a, b):
            raise FieldMismatch("Tower elements from unrelated towers")
        return b, b.lift(self.raw, a), other.raw

    def lift_to(self, level: Level) -> "TowerElement":
        if self.level is level:
            return self
        if not _descends(self.level, level):
            raise FieldMismatch("Cannot lift into an unrelated tower level")
        return TowerElement(level, level.lift(self.raw, self.level))

    def _binary(self, other: object, operation: str) -> "TowerElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        level, a, b = self._align(other)
        return TowerElement(level, getattr(level, operation)(a, b))

    def __add__(self, other: object) -> "TowerElement":
        return self._binary(other, "add")

    def __radd__(self, other: object) -> "TowerElement":
        return self._binary(other, "add")

    def __sub__(self, other: object) -> "TowerElement":
        return self._binary(other, "sub")

    def __rsub__(self, other: object) -> "TowerElement":
        return -self._binary(other, "sub")

    def __mul__(self, other: object) -> "TowerElement":
        return self._binary(other, "mul")

    def __rmul__(self, other: object) -> "TowerElement":
        return self._binary(other, "mul")

    def __neg__(self) -> "TowerElement":
        return TowerElement(self.level, self.level.neg(self.raw))

    def inverse(self) -> "TowerElement":
        return TowerElement(self.level, self.level.inverse(self.raw))

    def __truediv__(self, other: object) -> "TowerElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: object) -> "TowerElement":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> "TowerElement":
        base = self.inverse() if n < 0 else self
        n = abs(n)
        level = self.level
        result = level.one
        raw = base.raw
        while n:
            if n & 1:
                result = level.mul(result, raw)
            n >>= 1
            if n:
                raw = level.mul(raw, raw)
        return TowerElement(level, result)

    def frobenius(self, times: int = 1) -> "TowerElement":
        raw = self.raw
        for _ in range(times):
            raw = self.level.frobenius(raw)
        return TowerElement(self.level, raw)

    def is_zero(self) -> bool:
        return self.level.is_zero(self.raw)

    @property
    def coefficients(self) -> Tuple["TowerElement", ...]:
        if self.level.index == 0:
            return (self,)
        return tuple(TowerElement(self.level.parent, c) for c in self.raw)

    def descend(self) -> "TowerElement":
        """The same element at the lowest level that contains it."""
        level, raw = self.level, self.raw
        while level.index > 0 and all(level.parent.is_zero(c) for c in raw[1:]):
            level, raw = level.parent, raw[0]
        return TowerElement(level, raw)

    @property
    def value(self) -> RationalFunction:
        """The rational function this element equals, if it lies in the base."""
        lowest = self.descend()
        if lowest.level.index != 0:
            raise ValueError(f"{self} does not lie in the base field")
        return lowest.raw

    def __eq__(self, other: object) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        try:
            level, a, b = self._align(other)
        except FieldMismatch:
            return False
        return a == b

    def __hash__(self) -> int:
        lowest = self.descend()
        return hash((lowest.level.index, lowest.raw))

    def __str__(self) -> str:
        return self.level.format(self.raw)

    def __repr__(self) -> str:
        return f"TowerElement(level={self.level.index}: {self})"


class LayerData(NamedTuple):
    """Per-layer data at a tracked place: -s a + p b = 1."""

    s: int
    a: int
    b: int


class TrackedPlace(NamedTuple):
    """
    A rational place of the base, totally ramified in every layer.

    ``uniformizers[k]`` is the uniformizer of level k (the canonical
    uniformizer of the place at level 0) and ``inverse_uniformizers[k]`` its
    inverse, both kept in closed form.
    """

    place: Place
    layers: Tuple[LayerData, ...]
    uniformizers: Tuple[TowerElement, ...]
    inverse_uniformizers: Tuple[TowerElement, ...]

    @property
    def depth(self) -> int:
        return len(self.layers)

    def uniformizer(self, k: int | None = None) -> TowerElement:
        return self.uniformizers[self.depth if k is None else k]

    def inverse_uniformizer(self, k: int | None = None) -> TowerElement:
        return self.inverse_uniformizers[self.depth if k is None else k]


def _valuation(level: Level, raw: Raw, tracked: TrackedPlace) -> int | float:
    if level.index == 0:
        return tracked.place.valuation(raw)
    s = tracked.layers[level.index - 1].s
    p = level.p
    best = INFINITY
    for i, c in enumerate(raw):
        if level.parent.is_zero(c):
            continue
        v = p * _valuation(level.parent, c, tracked) - s * i
        if v < best:
            best = v
    return best


def tower_valuation(element: TowerElement, tracked: TrackedPlace) -> int | float:
    """
    Normalized valuation at the unique place above a tracked place.

    Uses v_k(sum c_i x^i) = min_i (p v_{k-1}(c_i) - s_k i); the candidates
    are pairwise distinct modulo p because p does not divide s_k.
    """
    if element.index > tracked.depth:
        raise ValueError(
            f"Place {tracked.place} is tracked through {tracked.depth} layers, "
            f"element lives at level {element.index}"
        )
    return _valuation(element.level, element.raw, tracked)


def tower_residue(element: TowerElement, tracked: TrackedPlace) -> int:
    """Residue in F_q of an element of valuation 0 at a tracked place."""
    v = tower_valuation(element, tracked)
    if v != 0:
        raise NotAUnit(f"{element} has valuation {v} at {tracked.place}")
    level, raw = element.level, element.raw
    while level.index > 0:
        level, raw = level.parent, raw[0]
    return tracked.place.residue_constant(raw)


class ASTower:
    """
    Tower F_q(t) = L_0 < L_1 < ... < L_N of Artin-Schreier layers together
    with the rational places tracked through it.

    Towers are immutable; ``extend`` returns a new tower sharing the layers
    of the old one.

    Parameters
    ----------
    field : FiniteField
        Constant field of the base.
    layers : Sequence[ASLayer]
        Layers from the bottom up.
    tracked : Sequence[TrackedPlace]
        Places totally ramified in every layer.
    """

    def __init__(
        self,
        field: FiniteField,
        layers: Sequence[ASLayer] = (),
        tracked: Sequence[TrackedPlace] = (),
    ):
        self.field = field
        self.layers: Tuple[ASLayer, ...] = tuple(layers)
        self.tracked: Tuple[TrackedPlace, ...] = tuple(tracked)

    @classmethod
    def over(cls, field: FiniteField, places: Sequence[Place]) -> "ASTower":
        """The trivial tower over F_q(t) tracking the given rational places."""
        if len(set(places)) != len(places):
            raise ValueError("Tracked places must be distinct")
        tracked = []
        for place in places:
            place.require_rational()
            if place.field != field:
                raise FieldMismatch(f"{place} is not over {field.label}")
            u = place.uniformizer()
            tracked.append(
                TrackedPlace(
                    place,
                    (),
                    (TowerElement.of(u),),
                    (TowerElement.of(u.inverse()),),
                )
            )
        return cls(field, (), tracked)

    @property
    def base(self) -> BaseLevel:
        return base_level(self.field)

    @property
    def top(self) -> Level:
        return self.layers[-1] if self.layers else self.base

    @property
    def length(self) -> int:
        return len(self.layers)

    @property
    def degree(self) -> int:
        return self.field.p**self.length

    @property
    def places(self) -> List[Place]:
        return [tracked.place for tracked in self.tracked]

    def level(self, k: int) -> Level:
        return self.layers[k - 1] if k else self.base

    def tracked_place(self, place: Place) -> TrackedPlace:
        for tracked in self.tracked:
            if tracked.place == place:
                return tracked
        raise KeyError(f"{place} is not tracked by this tower")

    def element(self, value: "TowerElement | RationalFunction | int") -> TowerElement:
        """Coerce a value into the top level of the tower."""
        if isinstance(value, int):
            value = RationalFunction.constant(self.field, self.field.from_int(value))
        return TowerElement.of(value).lift_to(self.top)

    def generator(self, k: int) -> TowerElement:
        layer = self.layers[k - 1]
        return TowerElement(layer, layer.generator)

    def defining_elements(self) -> List[TowerElement]:
        return [TowerElement(layer.parent, layer.defining) for layer in self.layers]

    def extend(self, f: "TowerElement | RationalFunction") -> "ASTower":
        """
        Append the layer x^p - x = f.

        Raises
        ------
        NotNegativePrimeToP
            If f does not have negative valuation prime to p at some tracked
            place.
        TrivialLayer
            If f is a value of T^p - T over the base.
        """
        f = TowerElement.of(f).lift_to(self.top)
        p = self.field.p
        if not self.tracked:
            raise ValueError("A tower layer needs at least one tracked place")
        if not self.layers and wp_preimage(f.raw) is not None:
            raise TrivialLayer(f"{f} is in the image of T^p - T")

        data = []
        for tracked in self.tracked:
            v = tower_valuation(f, tracked)
            if v == INFINITY or v >= 0 or v % p == 0:
                raise NotNegativePrimeToP(
                    f"Valuation {v} of {f} at {tracked.place} is not negative "
                    f"and prime to {p}"
                )
            s = -v
            a = (-pow(s, -1, p)) % p
            data.append(LayerData(s, a, (1 + s * a) // p))

        layer = ASLayer(self.top, f.raw)
        x = TowerElement(layer, layer.generator)
        x_inverse = TowerElement(layer, layer.generator_inverse())
        tracked_places = []
        for tracked, layer_data in zip(self.tracked, data):
            pi = x**layer_data.a * tracked.uniformizer() ** layer_data.b
            pi_inverse = (
                x_inverse**layer_data.a * tracked.inverse_uniformizer() ** layer_data.b
            )
            extended = TrackedPlace(
                tracked.place,
                tracked.layers + (layer_data,),
                tracked.uniformizers + (pi,),
                tracked.inverse_uniformizers + (pi_inverse,),
            )
            if tower_valuation(pi, extended) != 1:
                logger.error(f"Uniformizer {pi} at {tracked.place} has wrong valuation")
                raise RuntimeError("Uniformizer failed its valuation check")
            tracked_places.append(extended)

        logger.info(
            f"Appended layer {layer.index}: {layer.symbol}^{p} - {layer.symbol} = {f}"
            f" with s = {[d.s for d in data]}"
        )
        return ASTower(self.field, self.layers + (layer,), tracked_places)

    def with_tracked(self, places: Sequence[Place]) -> "ASTower":
        """Same layers, re-deriving the tracked data for another place set."""
        tower = ASTower.over(self.field, places)
        for f in self.defining_elements():
            tower = tower.extend(TowerElement(tower.top, f.raw))
        return tower
