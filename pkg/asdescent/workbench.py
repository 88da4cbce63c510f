from typing import List, Mapping, Sequence, Tuple

from .artin_schreier import (
    ASReduction,
    RamificationReport,
    as_reduce,
    classify_ramification,
)
from .base_fields import (
    FieldEmbedding,
    FiniteField,
    Place,
    Polynomial,
    RationalFunction,
    extend_constants,
)
from .config import WorkbenchConfig
from .cover import BoundarySpec, CoverPlan, build_cover
from .descent import (
    ExtensionCertificate,
    NormalForm,
    TorsorData,
    kill_class,
    kill_class_multi,
    kill_higher,
    normal_form,
)
from .text import parse_element, parse_place


class Workbench:
    """
    Facade over the descent pipeline for one constant field.

    Inputs are parsed over the configured field F_q and, when
    ``extend_constants`` is greater than one, moved into F_{q^e} through an
    explicit embedding before any computation.

    Parameters
    ----------
    config : WorkbenchConfig
        Field, descent parameters and constant extension degree.

    Attributes
    ----------
    base_field : FiniteField
        The field inputs are written over.
    field : FiniteField
        The field computations run over.
    embedding : FieldEmbedding
        The embedding F_q -> F_{q^e}.
        Raises ValueError if constants are not extended.
    """

    def __init__(self, config: WorkbenchConfig):
        self._config = config
        self._base_field = config.field.build()
        self._embedding: FieldEmbedding | None = None
        self._field = self._base_field
        if config.extend_constants > 1:
            self._field, self._embedding = extend_constants(
                self._base_field, config.extend_constants
            )

    @property
    def config(self) -> WorkbenchConfig:
        return self._config

    @property
    def base_field(self) -> FiniteField:
        return self._base_field

    @property
    def field(self) -> FiniteField:
        return self._field

    @property
    def embedding(self) -> FieldEmbedding:
        if not self._embedding:
            raise ValueError("Constants are not extended")
        return self._embedding

    def lift(self, f: RationalFunction) -> RationalFunction:
        if self._embedding is None:
            return f
        return f.map_coefficients(self._embedding, self._field)

    def lift_place(self, place: Place) -> Place:
        """
        Raises
        ------
        ValueError
            If the place splits over the extended constants.
        """
        if self._embedding is None:
            return place
        if place.is_infinity:
            return Place.infinity(self._field)
        polynomial = Polynomial(
            self._field, [self._embedding(c) for c in place.polynomial.coefficients]
        )
        return Place.finite(polynomial)

    def element(self, text: str) -> RationalFunction:
        return self.lift(parse_element(text, self._base_field))

    def place(self, text: str) -> Place:
        return self.lift_place(parse_place(text, self._base_field))

    def places(self, texts: Sequence[str]) -> List[Place]:
        return [self.place(text) for text in texts]

    def lift_torsor(self, data: TorsorData) -> TorsorData:
        return TorsorData.create(
            data.presentation,
            [[self.lift(a) for a in values] for values in data.cocycles],
            [self.lift_place(place) for place in data.places],
        )

    def classify(
        self, f: RationalFunction, place: Place
    ) -> Tuple[ASReduction | None, RamificationReport]:
        """Reduce f at a rational place, then classify; no reduction otherwise."""
        if place.degree != 1:
            return None, classify_ramification(f, place)
        reduction = as_reduce(f, place)
        return reduction, classify_ramification(reduction.reduced, place)

    def normal_form(self, a: RationalFunction, place: Place, exponent: int = 1) -> NormalForm:
        return normal_form(a, place, exponent)

    def kill(
        self, a: RationalFunction, place: Place, exponent: int = 1
    ) -> ExtensionCertificate:
        if exponent == 1:
            return kill_class(a, place, self._config.descent)
        return kill_higher(a, exponent, [place], self._config.descent)

    def kill_multi(
        self, a: RationalFunction, places: Sequence[Place], exponent: int = 1
    ) -> ExtensionCertificate:
        if exponent == 1:
            return kill_class_multi(a, places, self._config.descent)
        return kill_higher(a, exponent, places, self._config.descent)

    def cover(self, data: TorsorData, spec: BoundarySpec) -> CoverPlan:
        return build_cover(data, spec, self._config.descent)


def build_workbench_map(
    config: List[WorkbenchConfig],
) -> Mapping[str, Workbench]:
    """
    Build a mapping from field labels to Workbench instances.

    Parameters
    ----------
    config : List[WorkbenchConfig]
        One configuration per working field.

    Returns
    -------
    Mapping[str, Workbench]
        Dictionary mapping the label of each working field to its Workbench.

    Raises
    ------
    ValueError
        If two configurations work over the same field.
    """
    workbenches = {}
    for cfg in config:
        workbench = Workbench(cfg)
        label = workbench.field.label
        if label in workbenches:
            raise ValueError(f"Duplicate working field: {label}")
        workbenches[label] = workbench
    return workbenches
