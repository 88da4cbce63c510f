from logging import getLogger
from typing import Any, Dict, Iterator, List, Literal, NamedTuple, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from ..artin_schreier import (
    ASTower,
    LayerStrategy,
    RamificationCase,
    RamificationReport,
    TowerElement,
    as_reduce,
    classify_ramification,
    tower_valuation,
)
from ..base_fields import Place, RationalFunction, principal_divisor
from ..check_status import CheckStatus
from ..config import DescentConfig
from ..descent import (
    CertificateDocument,
    CheckResult,
    ExtensionCertificate,
    TorsorData,
    TorsorDocument,
    VerificationReport,
    from_document,
    kill_presentation,
    to_document,
    verify_certificate,
)
from ..errors import AsDescentError, NotNegativePrimeToP
from ..text import parse_place

logger = getLogger("asdescent")

COVER_FORMAT = "asdescent-cover/1"


class BoundarySpec(NamedTuple):
    """
    Boundary x_1 .. x_r of P^1 and interior sample places.

    Build instances with ``BoundarySpec.create``.
    """

    boundary: Tuple[Place, ...]
    samples: Tuple[Place, ...]

    @classmethod
    def create(cls, boundary: Sequence[Place], samples: Sequence[Place] = ()) -> "BoundarySpec":
        """
        Raises
        ------
        ValueError
            If the boundary is empty, has repeated places or meets the
            samples.
        UnsupportedPlaceDegree
            If a boundary place is not rational.
        """
        if not boundary:
            raise ValueError("The boundary needs at least one place")
        if len(set(boundary)) != len(boundary) or len(set(samples)) != len(samples):
            raise ValueError("Boundary and sample places must be distinct")
        for place in boundary:
            place.require_rational()
        shared = set(boundary) & set(samples)
        if shared:
            raise ValueError(
                f"Sample places {sorted(str(p) for p in shared)} lie on the boundary"
            )
        return cls(tuple(boundary), tuple(samples))


class RamificationEntry(NamedTuple):
    layer: int
    place: Place
    report: RamificationReport
    on_boundary: bool


class CoverPlan(NamedTuple):
    """
    A tower over P^1 ramified only over the boundary, with the certificate
    that kills the torsor and the ramification of every layer at the
    boundary and sample places.
    """

    torsor: TorsorData
    spec: BoundarySpec
    tower: ASTower
    certificate: ExtensionCertificate
    table: Tuple[RamificationEntry, ...]


def _leaves(element: TowerElement) -> Iterator[RationalFunction]:
    """Rational functions at the bottom of the coefficient tree."""
    if element.index == 0:
        yield element.raw
        return
    for c in element.coefficients:
        yield from _leaves(c)


def _boundary_report(f: TowerElement, tower: ASTower, place: Place) -> RamificationReport | None:
    p = tower.field.p
    v = tower_valuation(f, tower.tracked_place(place))
    if v < 0 and v % p:
        return RamificationReport.totally_ramified(p)
    return None


def _sample_report(f: TowerElement, layer: int, place: Place) -> RamificationReport | None:
    if layer == 1:
        g = f.value
        if place.degree == 1:
            g = as_reduce(g, place).reduced
        return classify_ramification(g, place)
    # f integral over the local ring: x^p - x - f stays separable mod the
    # maximal ideal, so the place is unramified.
    if all(leaf.is_zero() or place.valuation(leaf) >= 0 for leaf in _leaves(f)):
        return RamificationReport.unramified()
    return None


def ramification_table(tower: ASTower, spec: BoundarySpec) -> List[RamificationEntry | None]:
    """
    Ramification of every layer at every boundary and sample place.

    Boundary reports come from the tower valuation of the layer function;
    samples are classified at the first layer and checked for integrality
    of the layer function above it. Entries that cannot be established are
    None.
    """
    table: List[RamificationEntry | None] = []
    for k, f in enumerate(tower.defining_elements(), start=1):
        for place in spec.boundary:
            report = _boundary_report(f, tower, place)
            table.append(None if report is None else RamificationEntry(k, place, report, True))
        for place in spec.samples:
            try:
                report = _sample_report(f, k, place)
            except AsDescentError as e:
                logger.debug(f"Layer {k} at {place} not classified: {e}")
                report = None
            table.append(None if report is None else RamificationEntry(k, place, report, False))
    return table


def build_cover(
    data: TorsorData, spec: BoundarySpec, config: DescentConfig | None = None
) -> CoverPlan:
    """
    Build a tower whose layer functions have poles exactly on the boundary
    and which kills every cocycle of the torsor there.

    Raises
    ------
    ValueError
        If a torsor place is not on the boundary.
    NoResidueRoot
        If a residue root is missing; extend the constants and retry.
    """
    outside = [str(place) for place in data.places if place not in spec.boundary]
    if outside:
        raise ValueError(f"Torsor places {outside} are not on the boundary")
    config = (config or DescentConfig()).model_copy(
        update={"layer_strategy": LayerStrategy.Boundary}
    )
    on_boundary = TorsorData.create(data.presentation, data.cocycles, spec.boundary)
    certificate = kill_presentation(on_boundary, config)
    tower = certificate.tower

    table = ramification_table(tower, spec)
    if any(entry is None for entry in table):
        logger.error("Cover layer ramified outside the boundary")
        raise RuntimeError("Cover plan violates its ramification invariants")
    logger.info(
        f"Built a cover plan of degree {tower.degree} ramified over "
        f"{[str(place) for place in spec.boundary]}"
    )
    return CoverPlan(data, spec, tower, certificate, tuple(table))


def _is_expected(entry: RamificationEntry) -> bool:
    if entry.on_boundary:
        return entry.report.case == RamificationCase.TotallyRamified
    return not entry.report.is_ramified


def _poles(f: TowerElement) -> set:
    poles = set()
    for leaf in _leaves(f):
        if not leaf.is_zero():
            poles.update(place for place, v in principal_divisor(leaf).items() if v < 0)
    return poles


def audit_cover(plan: CoverPlan) -> VerificationReport:
    """
    Re-verify a cover plan from scratch.

    Runs ``verify_certificate`` on the certificate with the torsor, checks
    that the tracked places are exactly the boundary, that every layer
    function has poles only on the boundary, and recomputes the
    ramification table. Problems are reported, never raised.
    """
    report = verify_certificate(plan.certificate, plan.torsor)
    checks: List[CheckResult] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        status = CheckStatus.Passed if ok else CheckStatus.Failed
        checks.append(CheckResult(name, status, detail))

    tower = plan.tower
    spec = plan.spec
    try:
        add(
            "boundary tracked",
            set(tower.places) == set(spec.boundary),
            f"tracked {[str(p) for p in tower.places]}",
        )
        add(
            "torsor on boundary",
            all(place in spec.boundary for place in plan.torsor.places),
        )
        same_tower = [str(f) for f in tower.defining_elements()] == [
            str(f) for f in plan.certificate.tower.defining_elements()
        ]
        add("tower matches certificate", same_tower)

        try:
            rederived = plan.certificate.tower.with_tracked(spec.boundary)
            recorded = {tracked.place: tracked.layers for tracked in tower.tracked}
            mismatched = [
                str(tracked.place)
                for tracked in rederived.tracked
                if recorded.get(tracked.place) != tracked.layers
            ]
            add(
                "boundary layers re-derived",
                not mismatched,
                f"layer data differs at {mismatched}" if mismatched else "",
            )
        except NotNegativePrimeToP as e:
            add("boundary layers re-derived", False, str(e))

        stray = []
        for k, f in enumerate(tower.defining_elements(), start=1):
            outside = [str(place) for place in _poles(f) if place not in spec.boundary]
            if outside:
                stray.append(f"layer {k} has poles at {outside}")
        add("boundary-only poles", not stray, "; ".join(stray))

        if set(tower.places) == set(spec.boundary):
            recomputed = ramification_table(tower, spec)
            problems = []
            if len(recomputed) != len(plan.table):
                problems.append(f"{len(plan.table)} rows, expected {len(recomputed)}")
            for row, entry in zip(plan.table, recomputed):
                if entry is None:
                    problems.append(f"layer {row.layer} at {row.place}: not established")
                elif row != entry:
                    problems.append(
                        f"layer {row.layer} at {row.place}: recorded "
                        f"{row.report.case.value}, recomputed {entry.report.case.value}"
                    )
                elif not _is_expected(entry):
                    problems.append(
                        f"layer {entry.layer} at {entry.place}: {entry.report.case.value}"
                    )
            add("ramification table", not problems, "; ".join(problems))
        else:
            checks.append(
                CheckResult("ramification table", CheckStatus.Skipped, "earlier check failed")
            )
    except (AsDescentError, ArithmeticError, ValueError, KeyError) as e:
        add("cover plan", False, str(e))

    return report + VerificationReport(tuple(checks))


class RamificationRow(BaseModel):
    layer: int
    place: str
    case: RamificationCase
    e: int
    f: int | None
    g: int | None


class CoverPlanDocument(BaseModel):
    """
    File form of a ``CoverPlan``.

    Attributes
    ----------
    format : str
        Always ``asdescent-cover/1``.
    torsor : TorsorDocument
    boundary : List[str]
    samples : List[str]
    certificate : CertificateDocument
    ramification_table : List[RamificationRow]
    """

    format: Literal["asdescent-cover/1"] = COVER_FORMAT
    torsor: TorsorDocument
    boundary: List[str]
    samples: List[str]
    certificate: CertificateDocument
    ramification_table: List[RamificationRow]


def plan_to_document(plan: CoverPlan) -> CoverPlanDocument:
    return CoverPlanDocument(
        torsor=plan.torsor.to_document(),
        boundary=[str(place) for place in plan.spec.boundary],
        samples=[str(place) for place in plan.spec.samples],
        certificate=to_document(plan.certificate),
        ramification_table=[
            RamificationRow(
                layer=entry.layer,
                place=str(entry.place),
                case=entry.report.case,
                e=entry.report.e,
                f=entry.report.f,
                g=entry.report.g,
            )
            for entry in plan.table
        ],
    )


def plan_from_document(document: CoverPlanDocument) -> CoverPlan:
    torsor = document.torsor.to_torsor_data()
    field = torsor.field
    boundary = [parse_place(text, field) for text in document.boundary]
    spec = BoundarySpec.create(boundary, [parse_place(text, field) for text in document.samples])
    certificate = from_document(document.certificate)
    table = tuple(
        RamificationEntry(
            row.layer,
            parse_place(row.place, field),
            RamificationReport(row.case, row.e, row.f, row.g),
            parse_place(row.place, field) in spec.boundary,
        )
        for row in document.ramification_table
    )
    return CoverPlan(torsor, spec, certificate.tower, certificate, table)


def audit_cover_document(
    document: "CoverPlanDocument | Dict[str, Any] | str",
) -> VerificationReport:
    """``audit_cover`` on a plan file; unreadable input fails the report."""
    try:
        if isinstance(document, str):
            document = CoverPlanDocument.model_validate_json(document)
        elif not isinstance(document, CoverPlanDocument):
            document = CoverPlanDocument.model_validate(document)
    except (ValidationError, ValueError) as e:
        return VerificationReport(
            (CheckResult("document", CheckStatus.Failed, str(e).splitlines()[0]),)
        )
    try:
        plan = plan_from_document(document)
    except (AsDescentError, ValueError, ArithmeticError) as e:
        # certificate checks still run on their own
        return VerificationReport(
            (CheckResult("cover plan", CheckStatus.Failed, str(e)),)
        ) + verify_certificate(document.certificate)
    return audit_cover(plan)
