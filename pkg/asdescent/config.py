import os
from typing import List

from pydantic import BaseModel, Field, model_validator

from .artin_schreier import LayerStrategy
from .base_fields import FiniteField, finite_field
from .base_fields.finite_field import MAX_FIELD_ORDER, SUPPORTED_CHARACTERISTICS

MAX_TOWER_DEGREE = 125


class FieldConfig(BaseModel):
    """
    Constant field F_q, q = p^k, of the rational function field F_q(t).

    Attributes
    ----------
    p : int
        Characteristic, one of 2, 3, 5, 7.
    k : int, default=1
        Degree of F_q over F_p.
    modulus : List[int] or None, default=None
        Monic irreducible polynomial defining F_q, coefficients from the
        constant term up. The lexicographically least one is used when
        omitted.

    Raises
    ------
    ValueError
        If p is unsupported, q exceeds 343 or the modulus has the wrong
        degree or is not monic.
    """

    p: int
    k: int = 1
    modulus: List[int] | None = None

    @model_validator(mode="after")
    def validate_field(self) -> "FieldConfig":
        if self.p not in SUPPORTED_CHARACTERISTICS:
            raise ValueError(
                f"Characteristic {self.p} is not one of {SUPPORTED_CHARACTERISTICS}"
            )
        if self.k < 1 or self.p**self.k > MAX_FIELD_ORDER:
            raise ValueError(
                f"Field of order {self.p}^{self.k} exceeds {MAX_FIELD_ORDER}"
            )
        if self.modulus is not None:
            if len(self.modulus) != self.k + 1 or self.modulus[-1] % self.p != 1:
                raise ValueError(
                    f"Modulus {self.modulus} is not monic of degree {self.k}"
                )
        return self

    def build(self) -> FiniteField:
        return finite_field(self.p, self.k, self.modulus)

    @classmethod
    def of(cls, field: FiniteField) -> "FieldConfig":
        return cls(p=field.p, k=field.k, modulus=list(field.modulus))


class DescentConfig(BaseModel):
    """
    Parameters of the killing procedures.

    Attributes
    ----------
    max_retries : int, default=4
        How many times s is raised by p when a freshly built layer does not
        kill every class.
    min_s : int, default=1
        Lower bound on every pole order s_k of a layer function.
    layer_strategy : LayerStrategy, default=LayerStrategy.Uniformizer
        How layer functions are chosen (see ``LayerStrategy``).
    max_tower_degree : int, default=125
        Largest accepted tower degree p^N.
    """

    max_retries: int = Field(4, ge=0)
    min_s: int = Field(1, ge=1)
    layer_strategy: LayerStrategy = LayerStrategy.Uniformizer
    max_tower_degree: int = Field(MAX_TOWER_DEGREE, ge=1, le=MAX_TOWER_DEGREE)


def _seed_from_environment() -> int:
    return int(os.environ.get("ASDESCENT_SEED", "0"))


class SelftestConfig(BaseModel):
    """
    Sample sizes of the ``selftest`` command.

    Attributes
    ----------
    seed : int
        Seed of the random generator; read from ``ASDESCENT_SEED``.
    samples : int, default=20
        Random inputs per invariant.
    """

    seed: int = Field(default_factory=_seed_from_environment)
    samples: int = Field(20, ge=1)


class WorkbenchConfig(BaseModel):
    """
    Top-level configuration of a ``Workbench``.

    Attributes
    ----------
    field : FieldConfig
        The base constant field.
    descent : DescentConfig
        Killing parameters.
    extend_constants : int, default=1
        Degree e of the constant extension F_q -> F_{q^e} applied to every
        input before computing.
    """

    field: FieldConfig
    descent: DescentConfig = Field(default_factory=DescentConfig)
    extend_constants: int = Field(1, ge=1)

    @model_validator(mode="after")
    def validate_extension(self) -> "WorkbenchConfig":
        order = (self.field.p**self.field.k) ** self.extend_constants
        if order > MAX_FIELD_ORDER:
            raise ValueError(
                f"Extending constants to order {order} exceeds {MAX_FIELD_ORDER}"
            )
        return self
