from .approximation import approximate, polar_divisor, prescribe_valuations
from .definitions import INFINITY, PlaceKind
from .expansion import (
    LocalExpansion,
    hensel_sth_root,
    local_expand,
    polar_part,
    polar_sum,
    wp_local_root,
)
from .finite_field import FieldEmbedding, FiniteField, extend_constants, finite_field
from .place import Place, principal_divisor, rational_places
from .polynomial import (
    Polynomial,
    chinese_remainder,
    inverse_mod,
    polynomial_gcd,
    polynomial_xgcd,
)
from .preimage import wp_preimage
from .rational_function import RationalFunction

__all__ = [
    "approximate",
    "chinese_remainder",
    "extend_constants",
    "FieldEmbedding",
    "finite_field",
    "FiniteField",
    "hensel_sth_root",
    "INFINITY",
    "inverse_mod",
    "local_expand",
    "LocalExpansion",
    "Place",
    "PlaceKind",
    "polar_divisor",
    "polar_part",
    "polar_sum",
    "Polynomial",
    "polynomial_gcd",
    "polynomial_xgcd",
    "prescribe_valuations",
    "principal_divisor",
    "rational_places",
    "RationalFunction",
    "wp_local_root",
    "wp_preimage",
]
