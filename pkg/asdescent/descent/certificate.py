from typing import Dict, List, Literal, NamedTuple, Tuple

from pydantic import BaseModel, Field

from ..artin_schreier import ASTower, TowerElement, tower_valuation
from ..base_fields import INFINITY, RationalFunction
from ..config import MAX_TOWER_DEGREE, FieldConfig
from ..text import parse_element, parse_place, parse_tower_element

CERTIFICATE_FORMAT = "asdescent-cert/1"


class CertificateEntry(NamedTuple):
    """Witnesses a = h^(p^N) + g with g integral at every tracked place."""

    a: RationalFunction
    exponent: int
    h: TowerElement
    g: TowerElement


class ExtensionCertificate(NamedTuple):
    """A tower together with witnesses for every killed class."""

    tower: ASTower
    entries: Tuple[CertificateEntry, ...]

    @property
    def degree(self) -> int:
        return self.tower.degree


class LayerRecord(BaseModel):
    s: int
    a: int
    b: int


class TrackedPlaceRecord(BaseModel):
    place: str
    layers: List[LayerRecord]


class EntryRecord(BaseModel):
    """
    One certified class.

    ``valuations`` maps each tracked place to v(g) at the top of the tower
    (None for g = 0). They are advisory: the verifier recomputes them.
    """

    a: str
    N: int = Field(ge=1)
    h: str
    g: str
    valuations: Dict[str, int | None] | None = None


class CertificateDocument(BaseModel):
    """
    File form of an ``ExtensionCertificate``.

    Attributes
    ----------
    format : str
        Always ``asdescent-cert/1``.
    base_field : FieldConfig
        The constant field F_q of the base F_q(t).
    degree : int
        Degree p^N of the tower.
    tower : List[str]
        Defining functions f_1 .. f_N; f_k is written with the generators
        x1 .. x(k-1).
    tracked_places : List[TrackedPlaceRecord]
        Every tracked place with its (s, a, b) per layer.
    entries : List[EntryRecord]
        Certified classes; h and g are written at the top of the tower.
    """

    format: Literal["asdescent-cert/1"] = CERTIFICATE_FORMAT
    base_field: FieldConfig
    degree: int
    tower: List[str]
    tracked_places: List[TrackedPlaceRecord]
    entries: List[EntryRecord]


def _valuation_record(value: int | float) -> int | None:
    return None if value == INFINITY else int(value)


def to_document(certificate: ExtensionCertificate) -> CertificateDocument:
    tower = certificate.tower
    entries = []
    for entry in certificate.entries:
        g = tower.element(entry.g)
        entries.append(
            EntryRecord(
                a=str(entry.a),
                N=entry.exponent,
                h=str(tower.element(entry.h)),
                g=str(g),
                valuations={
                    str(tracked.place): _valuation_record(tower_valuation(g, tracked))
                    for tracked in tower.tracked
                },
            )
        )
    return CertificateDocument(
        base_field=FieldConfig.of(tower.field),
        degree=tower.degree,
        tower=[str(f) for f in tower.defining_elements()],
        tracked_places=[
            TrackedPlaceRecord(
                place=str(tracked.place),
                layers=[
                    LayerRecord(s=data.s, a=data.a, b=data.b) for data in tracked.layers
                ],
            )
            for tracked in tower.tracked
        ],
        entries=entries,
    )


def build_tower(document: CertificateDocument) -> ASTower:
    """
    Rebuild the tower of a certificate document from its defining functions.

    Tracked data is re-derived, not read from the document.
    """
    field = document.base_field.build()
    if field.p ** len(document.tower) > MAX_TOWER_DEGREE:
        raise ValueError(
            f"Tower of degree {field.p}^{len(document.tower)} exceeds {MAX_TOWER_DEGREE}"
        )
    places = [parse_place(record.place, field) for record in document.tracked_places]
    tower = ASTower.over(field, places)
    for text in document.tower:
        tower = tower.extend(parse_tower_element(text, tower))
    return tower


def parse_entries(
    document: CertificateDocument, tower: ASTower
) -> List[CertificateEntry]:
    return [
        CertificateEntry(
            parse_element(record.a, tower.field),
            record.N,
            parse_tower_element(record.h, tower),
            parse_tower_element(record.g, tower),
        )
        for record in document.entries
    ]


def from_document(document: CertificateDocument) -> ExtensionCertificate:
    tower = build_tower(document)
    return ExtensionCertificate(tower, tuple(parse_entries(document, tower)))
