from logging import getLogger
from typing import Dict, List, NamedTuple, Tuple

from ..artin_schreier import ASTower, TowerElement, tower_residue, tower_valuation
from ..base_fields import Place, RationalFunction, polar_part, polar_sum

logger = getLogger("asdescent")

Term = Tuple[int, int]


def _constant(field, c: int) -> RationalFunction:
    return RationalFunction.constant(field, c)


class QClass(NamedTuple):
    """
    Class of a function in K / (O_P + K^(p^N)) at a rational place P.

    ``terms`` are pairs (n, c) meaning c u^n for the canonical uniformizer u
    of P, with n negative, not divisible by p^N and strictly decreasing. The
    empty class is the zero class.
    """

    place: Place
    exponent: int
    terms: Tuple[Term, ...]

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def pole_order(self) -> int:
        return max((-n for n, _ in self.terms), default=0)

    def value(self) -> RationalFunction:
        """The representative sum c u^n."""
        return polar_sum(self.terms, self.place)

    def scale(self, c: int) -> "QClass":
        field = self.place.field
        if c == 0:
            return QClass(self.place, self.exponent, ())
        return QClass(
            self.place,
            self.exponent,
            tuple((n, field.mul(c, b)) for n, b in self.terms),
        )

    def __add__(self, other: object) -> "QClass":
        if not isinstance(other, QClass):
            return NotImplemented
        if other.place != self.place or other.exponent != self.exponent:
            raise ValueError("Classes at different places or exponents")
        return normal_form(self.value() + other.value(), self.place, self.exponent).qclass

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        u = self.place.uniformizer()
        return " + ".join(
            f"{self.place.field.format_element(c)}*({u})^{n}" for n, c in self.terms
        )


class NormalForm(NamedTuple):
    """Witnessed decomposition a = integral + root^(p^N) + qclass."""

    qclass: QClass
    integral: RationalFunction
    root: RationalFunction


def normal_form(a: RationalFunction, place: Place, exponent: int = 1) -> NormalForm:
    """
    Normal form of ``a`` in K / (O_P + K^(p^N)) at a rational place.

    Polar terms c u^n with p^N | n are moved into the root, since
    c u^n = (c^(1/p^N) u^(n/p^N))^(p^N) exactly. The remaining polar terms
    form the class.

    Parameters
    ----------
    a : RationalFunction
    place : Place
        A rational place.
    exponent : int, default=1
        N in K^(p^N).

    Raises
    ------
    UnsupportedPlaceDegree
        If the place is not rational.
    """
    if exponent < 1:
        raise ValueError(f"Exponent must be positive, got {exponent}")
    place.require_rational()
    field = a.field
    modulus = field.p**exponent
    u = place.uniformizer()

    terms: List[Term] = []
    root = RationalFunction.zero(field)
    polar = polar_part(a, place)
    for n, c in polar:
        if n % modulus:
            terms.append((n, c))
            continue
        for _ in range(exponent):
            c = field.pth_root(c)
        root = root + (u ** (n // modulus)).scale(c)

    qclass = QClass(place, exponent, tuple(sorted(terms, reverse=True)))
    integral = a - polar_sum(polar, place)
    if integral + root**modulus + qclass.value() != a:
        logger.error(f"Normal form of {a} at {place} failed its identity check")
        raise RuntimeError("Normal form witness failed verification")
    return NormalForm(qclass, integral, root)


def is_extendable(a: RationalFunction, place: Place, exponent: int = 1) -> bool:
    """Whether the class of ``a`` in K / (O_P + K^(p^N)) vanishes."""
    return normal_form(a, place, exponent).qclass.is_zero()


def choose_s(m: int, p: int, minimum: int = 1) -> int:
    """The least s >= minimum with p not dividing s and (p-1)s > mp."""
    if m < 1:
        raise ValueError(f"Pole order must be positive, got {m}")
    s = max(minimum, m * p // (p - 1) + 1)
    while s % p == 0:
        s += 1
    return s


class TowerReduction(NamedTuple):
    """
    Decomposition z = root^p + residual + remainder at the top of a tower.

    ``residual`` collects the polar terms of valuation prime to p and
    ``orders`` holds its pole order at each tracked place (0 if none);
    ``remainder`` is integral at every tracked place.
    """

    root: TowerElement
    residual: TowerElement
    orders: Tuple[int, ...]
    remainder: TowerElement

    @property
    def is_clean(self) -> bool:
        return self.residual.is_zero()


class _Powers:
    """Memoized non-negative powers of one tower element."""

    def __init__(self, base: TowerElement):
        self.base = base
        self.cache: Dict[int, TowerElement] = {}

    def __getitem__(self, n: int) -> TowerElement:
        if n not in self.cache:
            self.cache[n] = self.base**n
        return self.cache[n]


def reduce_in_tower(z: "TowerElement | RationalFunction", tower: ASTower) -> TowerReduction:
    """
    Strip the polar part of z at every tracked place, leading term first.

    A leading term c pi^v with p | v goes into the root as c^(1/p) pi^(v/p);
    otherwise it goes into the residual. Terms added at one tracked place are
    integral at the others.
    """
    field = tower.field
    p = field.p
    z = tower.element(z)
    root = tower.element(0)
    residual = tower.element(0)
    remaining = z
    orders = []
    for tracked in tower.tracked:
        uniformizer = _Powers(tracked.uniformizer())
        inverse = _Powers(tracked.inverse_uniformizer())
        order = 0
        v = tower_valuation(remaining, tracked)
        while v < 0:
            c = tower_residue(remaining * uniformizer[-v], tracked)
            if v % p == 0:
                step = inverse[-v // p] * _constant(field, field.pth_root(c))
                root = root + step
                remaining = remaining - step.frobenius()
            else:
                term = inverse[-v] * _constant(field, c)
                residual = residual + term
                remaining = remaining - term
                order = max(order, -v)
            reduced = tower_valuation(remaining, tracked)
            if reduced <= v:
                logger.error(f"Stripping {z} at {tracked.place} stalled at {v}")
                raise RuntimeError("Polar stripping did not increase the valuation")
            v = reduced
        orders.append(order)
    logger.debug(f"Reduced {z}: residual orders {orders}")
    return TowerReduction(
        root.lift_to(tower.top),
        residual.lift_to(tower.top),
        tuple(orders),
        remaining.lift_to(tower.top),
    )
