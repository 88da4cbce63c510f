from .artin_schreier import (
    ASTower,
    RamificationCase,
    RamificationReport,
    TowerElement,
    as_reduce,
    classify_ramification,
)
from .base_fields import FiniteField, Place, RationalFunction, finite_field
from .check_status import CheckStatus
from .config import DescentConfig, FieldConfig, SelftestConfig, WorkbenchConfig
from .cover import BoundarySpec, CoverPlan, audit_cover, build_cover
from .descent import (
    ExtensionCertificate,
    QClass,
    TorsorData,
    UnipotentPresentation,
    VerificationReport,
    brute_force_membership,
    choose_s,
    is_extendable,
    kill_class,
    kill_class_multi,
    kill_higher,
    kill_presentation,
    normal_form,
    verify_certificate,
)
from .text import parse_element, parse_place, parse_tower_element
from .workbench import Workbench, build_workbench_map

__all__ = [
    "as_reduce",
    "ASTower",
    "audit_cover",
    "BoundarySpec",
    "brute_force_membership",
    "build_cover",
    "build_workbench_map",
    "CheckStatus",
    "choose_s",
    "classify_ramification",
    "CoverPlan",
    "DescentConfig",
    "ExtensionCertificate",
    "FieldConfig",
    "finite_field",
    "FiniteField",
    "is_extendable",
    "kill_class",
    "kill_class_multi",
    "kill_higher",
    "kill_presentation",
    "normal_form",
    "parse_element",
    "parse_place",
    "parse_tower_element",
    "Place",
    "QClass",
    "RamificationCase",
    "RamificationReport",
    "RationalFunction",
    "SelftestConfig",
    "TorsorData",
    "TowerElement",
    "UnipotentPresentation",
    "verify_certificate",
    "VerificationReport",
    "Workbench",
    "WorkbenchConfig",
]
