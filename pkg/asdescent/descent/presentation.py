from typing import Iterator, List, Literal, NamedTuple, Sequence, Tuple

from pydantic import BaseModel, Field, model_validator

from ..base_fields import FiniteField, Place, RationalFunction
from ..config import FieldConfig
from ..errors import FieldMismatch
from ..text import parse_element, parse_place

TORSOR_FORMAT = "asdescent-torsor/1"


class Component(NamedTuple):
    """A factor (alpha_{p^N})^r of a commutative unipotent group."""

    r: int
    exponent: int


class UnipotentPresentation(NamedTuple):
    """
    Elementary presentation of a commutative unipotent group as a product of
    factors (alpha_{p^N})^r.

    Build instances with ``UnipotentPresentation.of``, which validates the
    components.
    """

    components: Tuple[Component, ...]

    @classmethod
    def of(cls, components: Sequence[Tuple[int, int]]) -> "UnipotentPresentation":
        if not components:
            raise ValueError("A presentation needs at least one component")
        checked = []
        for r, exponent in components:
            if r < 1 or exponent < 1:
                raise ValueError(f"Component ({r}, {exponent}) must be positive")
            checked.append(Component(r, exponent))
        return cls(tuple(checked))

    @property
    def n0(self) -> int:
        """Length of the characteristic series, the largest N."""
        return max(component.exponent for component in self.components)

    @property
    def rank(self) -> int:
        return sum(component.r for component in self.components)


class TorsorData(NamedTuple):
    """
    A torsor class under an elementary unipotent group over F_q(t).

    ``cocycles[i]`` holds the r_i functions of component i, a class in
    (K / K^(p^N_i))^(r_i); ``places`` are the places where the torsor has to
    extend.
    """

    presentation: UnipotentPresentation
    cocycles: Tuple[Tuple[RationalFunction, ...], ...]
    places: Tuple[Place, ...]

    @classmethod
    def create(
        cls,
        presentation: UnipotentPresentation,
        cocycles: Sequence[Sequence[RationalFunction]],
        places: Sequence[Place],
    ) -> "TorsorData":
        """
        Raises
        ------
        ValueError
            If the cocycle counts do not match the presentation or the places
            are not distinct rational places.
        FieldMismatch
            If the inputs live over different constant fields.
        """
        if len(cocycles) != len(presentation.components):
            raise ValueError(
                f"{len(presentation.components)} components but "
                f"{len(cocycles)} cocycle lists"
            )
        for component, values in zip(presentation.components, cocycles):
            if len(values) != component.r:
                raise ValueError(
                    f"Component of rank {component.r} has {len(values)} cocycles"
                )
        if not places:
            raise ValueError("At least one place is required")
        if len(set(places)) != len(places):
            raise ValueError("Places must be distinct")
        field = places[0].field
        for place in places:
            place.require_rational()
            if place.field != field:
                raise FieldMismatch(f"{place} is not over {field.label}")
        for values in cocycles:
            for a in values:
                if a.field != field:
                    raise FieldMismatch(f"{a} is not over {field.label}")
        return cls(
            presentation,
            tuple(tuple(values) for values in cocycles),
            tuple(places),
        )

    @property
    def field(self) -> FiniteField:
        return self.places[0].field

    def entries(self) -> Iterator[Tuple[RationalFunction, int]]:
        """Every cocycle together with the exponent N of its component."""
        for component, values in zip(self.presentation.components, self.cocycles):
            for a in values:
                yield a, component.exponent

    def to_document(self) -> "TorsorDocument":
        return TorsorDocument(
            base_field=FieldConfig.of(self.field),
            components=[
                ComponentRecord(
                    r=component.r,
                    N=component.exponent,
                    cocycles=[str(a) for a in values],
                )
                for component, values in zip(
                    self.presentation.components, self.cocycles
                )
            ],
            places=[str(place) for place in self.places],
        )


class ComponentRecord(BaseModel):
    r: int = Field(ge=1)
    N: int = Field(ge=1)
    cocycles: List[str]

    @model_validator(mode="after")
    def validate_rank(self) -> "ComponentRecord":
        if len(self.cocycles) != self.r:
            raise ValueError(f"Rank {self.r} needs {self.r} cocycles")
        return self


class TorsorDocument(BaseModel):
    """
    File form of ``TorsorData``.

    Attributes
    ----------
    format : str
        Always ``asdescent-torsor/1``.
    base_field : FieldConfig
    components : List[ComponentRecord]
        One record per factor (alpha_{p^N})^r with its r cocycles in the
        text syntax.
    places : List[str]
        Places where the torsor has to extend.
    """

    format: Literal["asdescent-torsor/1"] = TORSOR_FORMAT
    base_field: FieldConfig
    components: List[ComponentRecord]
    places: List[str]

    def to_torsor_data(self) -> TorsorData:
        field = self.base_field.build()
        presentation = UnipotentPresentation.of(
            [(record.r, record.N) for record in self.components]
        )
        cocycles = [
            [parse_element(text, field) for text in record.cocycles]
            for record in self.components
        ]
        places = [parse_place(text, field) for text in self.places]
        return TorsorData.create(presentation, cocycles, places)
