from logging import getLogger
from typing import Any, Dict, List, NamedTuple, Tuple

from pydantic import ValidationError

from ..artin_schreier import ASTower, tower_valuation
from ..base_fields import INFINITY
from ..check_status import CheckStatus
from ..config import MAX_TOWER_DEGREE
from ..errors import AsDescentError
from ..text import parse_place
from .certificate import (
    CertificateDocument,
    CertificateEntry,
    ExtensionCertificate,
    build_tower,
    parse_entries,
    to_document,
)
from .presentation import TorsorData

logger = getLogger("asdescent")


class CheckResult(NamedTuple):
    name: str
    status: CheckStatus
    detail: str = ""


class VerificationReport(NamedTuple):
    """Outcome of every check; the report passes iff every check passed."""

    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(
            check.status == CheckStatus.Passed for check in self.checks
        )

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if check.status != CheckStatus.Passed]

    def __add__(self, other: object) -> "VerificationReport":
        if not isinstance(other, VerificationReport):
            return NotImplemented
        return VerificationReport(self.checks + other.checks)

    def table(self) -> str:
        """Aligned human-readable rendering, one check per line."""
        width = max((len(check.name) for check in self.checks), default=0)
        lines = [
            f"{check.name.ljust(width)}  {check.status.value.ljust(7)}  {check.detail}".rstrip()
            for check in self.checks
        ]
        lines.append(f"{'overall'.ljust(width)}  {'Passed' if self.passed else 'Failed'}")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": [
                {"name": check.name, "status": check.status.value, "detail": check.detail}
                for check in self.checks
            ],
        }


class _Checks:
    def __init__(self):
        self.results: List[CheckResult] = []

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        status = CheckStatus.Passed if ok else CheckStatus.Failed
        self.results.append(CheckResult(name, status, detail))
        return ok

    def skip(self, *names: str) -> None:
        for name in names:
            self.results.append(CheckResult(name, CheckStatus.Skipped, "earlier check failed"))

    def report(self) -> VerificationReport:
        return VerificationReport(tuple(self.results))


def _check_tracked(document: CertificateDocument, tower: ASTower, checks: _Checks) -> None:
    p = tower.field.p
    mismatches = []
    coprime = []
    for record, tracked in zip(document.tracked_places, tower.tracked):
        derived = [(data.s, data.a, data.b) for data in tracked.layers]
        recorded = [(layer.s, layer.a, layer.b) for layer in record.layers]
        if derived != recorded:
            mismatches.append(f"{record.place}: recorded {recorded}, derived {derived}")
        for k, data in enumerate(tracked.layers, start=1):
            if data.s <= 0 or data.s % p == 0 or -data.s * data.a + p * data.b != 1:
                coprime.append(f"{record.place} layer {k}: s = {data.s}")
    checks.add("tracked places", not mismatches, "; ".join(mismatches))
    checks.add("s prime to p", not coprime, "; ".join(coprime))


def _check_entry(
    index: int,
    entry: CertificateEntry,
    recorded: Dict[str, int | None] | None,
    tower: ASTower,
    checks: _Checks,
) -> None:
    p = tower.field.p
    if p**entry.exponent > MAX_TOWER_DEGREE:
        detail = f"p^N = {p}^{entry.exponent} exceeds {MAX_TOWER_DEGREE}"
        checks.add(f"identity [{index}]", False, detail)
        checks.add(f"integrality [{index}]", False, detail)
        return
    difference = tower.element(entry.a) - entry.h.frobenius(entry.exponent) - entry.g
    checks.add(
        f"identity [{index}]",
        difference.is_zero(),
        "" if difference.is_zero() else f"a - h^(p^N) - g = {difference}",
    )
    problems = []
    for tracked in tower.tracked:
        v = tower_valuation(tower.element(entry.g), tracked)
        if v < 0:
            problems.append(f"v(g) = {v} at {tracked.place}")
        if recorded is not None:
            claimed = recorded.get(str(tracked.place))
            actual = None if v == INFINITY else int(v)
            if claimed != actual:
                problems.append(
                    f"recorded v(g) = {claimed} at {tracked.place}, recomputed {actual}"
                )
    checks.add(f"integrality [{index}]", not problems, "; ".join(problems))


def _check_coverage(
    data: TorsorData, entries: List[CertificateEntry], tower: ASTower, checks: _Checks
) -> None:
    missing = [str(place) for place in data.places if place not in tower.places]
    certified = {(entry.a, entry.exponent) for entry in entries}
    for a, exponent in data.entries():
        if (a, exponent) not in certified:
            missing.append(f"cocycle {a} with N = {exponent}")
    checks.add("torsor coverage", not missing, "missing " + ", ".join(missing) if missing else "")


def verify_certificate(
    certificate: "ExtensionCertificate | CertificateDocument | Dict[str, Any] | str",
    data: TorsorData | None = None,
) -> VerificationReport:
    """
    Check a certificate without trusting its producer.

    The tower is rebuilt from its defining functions, tracked data is
    re-derived, a - h^(p^N) - g is recomputed exactly and v(g) is recomputed
    at every tracked place. Problems are reported, never raised.

    Parameters
    ----------
    certificate : ExtensionCertificate, CertificateDocument, dict or str
        In-memory certificates are serialized first, so every input goes
        through the same parser. A str is read as JSON.
    data : TorsorData or None
        When given, every cocycle and place of the torsor must be covered.
    """
    checks = _Checks()
    try:
        if isinstance(certificate, ExtensionCertificate):
            document = to_document(certificate)
        elif isinstance(certificate, CertificateDocument):
            document = certificate
        elif isinstance(certificate, str):
            document = CertificateDocument.model_validate_json(certificate)
        else:
            document = CertificateDocument.model_validate(certificate)
    except (ValidationError, AsDescentError, ValueError) as e:
        checks.add("document", False, str(e).splitlines()[0])
        return checks.report()
    checks.add("document", True)

    try:
        tower = build_tower(document)
        places = [parse_place(record.place, tower.field) for record in document.tracked_places]
    except (AsDescentError, ValueError, ArithmeticError) as e:
        checks.add("tower well-formed", False, str(e))
        checks.skip("tracked places", "s prime to p", "degree", "entries")
        return checks.report()
    checks.add(
        "tower well-formed",
        bool(places) and len(document.tower) == tower.length,
        f"{tower.length} layers over {tower.field.label}",
    )

    _check_tracked(document, tower, checks)
    expected = tower.field.p ** len(document.tower)
    checks.add(
        "degree",
        document.degree == expected == tower.degree,
        f"recorded {document.degree}, expected {expected}",
    )

    try:
        entries = parse_entries(document, tower)
    except (AsDescentError, ValueError, ArithmeticError) as e:
        checks.add("entries", False, str(e))
        return checks.report()
    checks.add("entries", True, f"{len(entries)} entries")
    for index, (entry, record) in enumerate(zip(entries, document.entries)):
        try:
            _check_entry(index, entry, record.valuations, tower, checks)
        except (AsDescentError, ArithmeticError) as e:
            checks.add(f"entry [{index}]", False, str(e))

    if data is not None:
        _check_coverage(data, entries, tower, checks)

    report = checks.report()
    if not report.passed:
        logger.warning(f"Certificate failed {len(report.failures)} checks")
    return report
