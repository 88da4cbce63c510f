from .plan import (
    COVER_FORMAT,
    BoundarySpec,
    CoverPlan,
    CoverPlanDocument,
    RamificationEntry,
    audit_cover,
    audit_cover_document,
    build_cover,
    plan_from_document,
    plan_to_document,
    ramification_table,
)

__all__ = [
    "audit_cover",
    "audit_cover_document",
    "BoundarySpec",
    "build_cover",
    "COVER_FORMAT",
    "CoverPlan",
    "CoverPlanDocument",
    "plan_from_document",
    "plan_to_document",
    "RamificationEntry",
    "ramification_table",
]
