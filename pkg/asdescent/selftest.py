"""
Seeded invariant suites behind ``asdescent selftest``.

Each suite draws ``samples`` random inputs from a ``random.Random`` seeded
with ``SelftestConfig.seed`` and reports one check.
"""

from logging import getLogger
from random import Random
from typing import Callable, List

from .artin_schreier import (
    ASTower,
    RamificationCase,
    as_reduce,
    classify_ramification,
    expansion_defect,
)
from .base_fields import (
    FiniteField,
    Place,
    Polynomial,
    RationalFunction,
    finite_field,
    polar_sum,
)
from .check_status import CheckStatus
from .config import SelftestConfig
from .cover import BoundarySpec, audit_cover, build_cover
from .descent import (
    TorsorData,
    UnipotentPresentation,
    kill_class,
    kill_higher,
    normal_form,
    verify_certificate,
)
from .descent.verifier import CheckResult, VerificationReport

logger = getLogger("asdescent")


def random_function(
    field: FiniteField,
    rng: Random,
    places: List[Place],
    max_pole: int,
    polynomial: bool = True,
) -> RationalFunction:
    """Random polar parts of order <= max_pole, plus a random quadratic."""
    f = RationalFunction.zero(field)
    for place in places:
        terms = [(-n, rng.randrange(field.q)) for n in range(1, max_pole + 1)]
        f = f + polar_sum([(n, c) for n, c in terms if c], place)
    t = RationalFunction.t(field)
    for degree in range(3 if polynomial else 0):
        f = f + (t**degree).scale(rng.randrange(field.q))
    return f


def _ramification_suite(rng: Random, samples: int) -> str | None:
    for _ in range(samples):
        field = finite_field(rng.choice((2, 3)))
        place = Place.rational(field, rng.randrange(field.q))
        f = random_function(field, rng, [place], 4)
        if f.is_zero():
            continue
        report = classify_ramification(as_reduce(f, place).reduced, place)
        if report.case == RamificationCase.Trivial:
            continue
        if report.e * report.f * report.g != field.p:
            return f"e f g != p for {f} at {place}"
    return None


def _defect_suite(rng: Random, samples: int) -> str | None:
    for _ in range(samples):
        p = rng.choice((2, 3, 5))
        field = finite_field(p)
        s = rng.choice([s for s in range(1, 12) if s % p])
        m = rng.choice([m for m in range(1, 8) if m % p])
        place = Place.rational(field, 0)
        tower = ASTower.over(field, [place])
        tower = tower.extend(place.uniformizer() ** (-s))
        defect = expansion_defect(m, tower, 1, tower.tracked[0])
        if defect != (p - 1) * s - m * p:
            return f"defect {defect} for p = {p}, s = {s}, m = {m}"
    return None


def _normal_form_suite(rng: Random, samples: int) -> str | None:
    for _ in range(samples):
        field = finite_field(rng.choice((2, 3)))
        place = Place.rational(field, rng.randrange(field.q))
        a = random_function(field, rng, [place], 6)
        exponent = rng.choice((1, 2))
        form = normal_form(a, place, exponent)
        rebuilt = form.integral + form.root ** (field.p**exponent) + form.qclass.value()
        if rebuilt != a:
            return f"normal form of {a} does not add up"
    return None


def _killing_suite(rng: Random, samples: int) -> str | None:
    for _ in range(samples):
        field = finite_field(rng.choice((2, 3)))
        place = Place.rational(field, rng.randrange(field.q))
        a = random_function(field, rng, [place], 4)
        exponent = rng.choice((1, 1, 2))
        if exponent == 1:
            certificate = kill_class(a, place)
        else:
            certificate = kill_higher(a, exponent, [place])
        if not verify_certificate(certificate).passed:
            return f"certificate for {a} at {place} failed"
        if certificate.tower.length > exponent:
            return f"tower of length {certificate.tower.length} for N = {exponent}"
    return None


def _cover_suite(rng: Random, samples: int) -> str | None:
    field = finite_field(2)
    candidates = [Place.rational(field, 0), Place.rational(field, 1), Place.infinity(field)]
    sample = Place.finite(Polynomial(field, (1, 1, 1)))
    for _ in range(samples):
        boundary = [place for place in candidates if rng.random() < 0.6] or candidates[:1]
        a = random_function(field, rng, boundary, 3, polynomial=False)
        exponent = rng.choice((1, 2))
        data = TorsorData.create(
            UnipotentPresentation.of([(1, exponent)]), [[a]], boundary
        )
        plan = build_cover(data, BoundarySpec.create(boundary, [sample]))
        if not audit_cover(plan).passed:
            return f"cover for {a} over {[str(p) for p in boundary]} failed its audit"
    return None


SUITES: List[tuple[str, Callable[[Random, int], str | None]]] = [
    ("ramification", _ramification_suite),
    ("expansion defect", _defect_suite),
    ("normal form", _normal_form_suite),
    ("killing", _killing_suite),
    ("cover", _cover_suite),
]


def run_selftest(config: SelftestConfig | None = None) -> VerificationReport:
    config = config or SelftestConfig()
    checks = []
    for name, suite in SUITES:
        rng = Random(f"{config.seed}:{name}")
        logger.info(f"Running the {name} suite with {config.samples} samples")
        failure = suite(rng, config.samples)
        if failure is None:
            checks.append(
                CheckResult(name, CheckStatus.Passed, f"{config.samples} samples")
            )
        else:
            checks.append(CheckResult(name, CheckStatus.Failed, failure))
    return VerificationReport(tuple(checks))
