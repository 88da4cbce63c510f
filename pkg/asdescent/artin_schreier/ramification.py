from logging import getLogger
from typing import NamedTuple

from ..base_fields import Place, RationalFunction, wp_preimage
from ..errors import UnreducedInput
from .definitions import RamificationCase

logger = getLogger("asdescent")


class RamificationReport(NamedTuple):
    """
    Ramification data of a place in a degree-p extension.

    ``residue_degree`` and ``splitting_number`` are None only for the
    Unramified case, where e = 1 is known but the split type is not.
    """

    case: RamificationCase
    ramification_index: int
    residue_degree: int | None
    splitting_number: int | None

    @property
    def e(self) -> int:
        return self.ramification_index

    @property
    def f(self) -> int | None:
        return self.residue_degree

    @property
    def g(self) -> int | None:
        return self.splitting_number

    @property
    def is_ramified(self) -> bool:
        return self.ramification_index > 1

    @classmethod
    def split(cls, p: int) -> "RamificationReport":
        return cls(RamificationCase.Split, 1, 1, p)

    @classmethod
    def inert(cls, p: int) -> "RamificationReport":
        return cls(RamificationCase.Inert, 1, p, 1)

    @classmethod
    def totally_ramified(cls, p: int) -> "RamificationReport":
        return cls(RamificationCase.TotallyRamified, p, 1, 1)

    @classmethod
    def trivial(cls, p: int) -> "RamificationReport":
        return cls(RamificationCase.Trivial, 1, 1, p)

    @classmethod
    def unramified(cls) -> "RamificationReport":
        return cls(RamificationCase.Unramified, 1, None, None)


class ASReduction(NamedTuple):
    """Result of ``as_reduce``: reduced = f + (g^p - g)."""

    reduced: RationalFunction
    g: RationalFunction
    rounds: int


def as_reduce(f: RationalFunction, place: Place) -> ASReduction:
    """
    Move f within its class modulo T^p - T until its valuation at a rational
    place is non-negative or negative and prime to p.

    Each round removes the leading polar term c u^(-mp) with wp(c^(1/p) u^-m)
    and strictly increases the valuation.
    """
    place.require_rational()
    field = f.field
    p = field.p
    u = place.uniformizer()
    remaining = f
    removed = RationalFunction.zero(field)
    rounds = 0
    v = place.valuation(remaining)
    while v < 0 and v % p == 0:
        lead = place.residue_constant(remaining * u ** (-v))
        step = (u ** (v // p)).scale(field.pth_root(lead))
        remaining = remaining - step.wp()
        removed = removed + step
        reduced_valuation = place.valuation(remaining)
        if reduced_valuation <= v:
            logger.error(f"Reduction of {f} at {place} stalled at valuation {v}")
            raise RuntimeError("Artin-Schreier reduction did not increase the valuation")
        logger.debug(
            f"Reduced {f} at {place}: valuation {v} -> {reduced_valuation}"
        )
        v = reduced_valuation
        rounds += 1
    return ASReduction(remaining, -removed, rounds)


def classify_ramification(f: RationalFunction, place: Place) -> RamificationReport:
    """
    Classify a place of F_q(t) in the extension x^p - x = f.

    A non-negative valuation leads to Split or Inert according to whether
    the residue of f lies in the image of T^p - T on the residue field,
    i.e. whether its absolute trace vanishes. This works at places of any
    degree.

    Raises
    ------
    UnreducedInput
        If v_P(f) is negative and divisible by p; run ``as_reduce`` first.
    """
    p = f.field.p
    if wp_preimage(f) is not None:
        return RamificationReport.trivial(p)
    v = place.valuation(f)
    if v < 0:
        if v % p == 0:
            raise UnreducedInput(
                f"Valuation {v} of {f} at {place} is divisible by {p}"
            )
        return RamificationReport.totally_ramified(p)
    if place.residue_trace(place.residue(f)) == 0:
        return RamificationReport.split(p)
    return RamificationReport.inert(p)
