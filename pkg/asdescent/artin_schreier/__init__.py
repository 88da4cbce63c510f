from .definitions import LayerStrategy, RamificationCase
from .identities import expansion_defect, uniformizer
from .ramification import (
    ASReduction,
    RamificationReport,
    as_reduce,
    classify_ramification,
)
from .tower import (
    ASLayer,
    ASTower,
    LayerData,
    TowerElement,
    TrackedPlace,
    tower_residue,
    tower_valuation,
)

__all__ = [
    "as_reduce",
    "ASLayer",
    "ASReduction",
    "ASTower",
    "classify_ramification",
    "expansion_defect",
    "LayerData",
    "LayerStrategy",
    "RamificationCase",
    "RamificationReport",
    "tower_residue",
    "tower_valuation",
    "TowerElement",
    "TrackedPlace",
    "uniformizer",
]
