from .certificate import (
    CERTIFICATE_FORMAT,
    CertificateDocument,
    CertificateEntry,
    ExtensionCertificate,
    from_document,
    to_document,
)
from .killing import (
    kill_class,
    kill_class_multi,
    kill_higher,
    kill_presentation,
    layer_function,
    matched_global_uniformizer,
    matched_uniformizer,
)
from .oracle import brute_force_membership
from .presentation import (
    Component,
    TorsorData,
    TorsorDocument,
    UnipotentPresentation,
)
from .qclass import (
    NormalForm,
    QClass,
    TowerReduction,
    choose_s,
    is_extendable,
    normal_form,
    reduce_in_tower,
)
from .verifier import CheckResult, VerificationReport, verify_certificate

__all__ = [
    "brute_force_membership",
    "CERTIFICATE_FORMAT",
    "CertificateDocument",
    "CertificateEntry",
    "CheckResult",
    "choose_s",
    "Component",
    "ExtensionCertificate",
    "from_document",
    "is_extendable",
    "kill_class",
    "kill_class_multi",
    "kill_higher",
    "kill_presentation",
    "layer_function",
    "matched_global_uniformizer",
    "matched_uniformizer",
    "normal_form",
    "NormalForm",
    "QClass",
    "reduce_in_tower",
    "to_document",
    "TorsorData",
    "TorsorDocument",
    "TowerReduction",
    "UnipotentPresentation",
    "VerificationReport",
    "verify_certificate",
]
