"""Typed value models, the schema layer shared by every module."""

from surface_bundles.models.braid import GarsideForm, LonneMatrix, LonneRelationReport  # noqa: F401
from surface_bundles.models.bundle import (  # noqa: F401
    CertificateReport,
    CheckResult,
    MonodromyFactorization,
    Provenance,
    SeparationReport,
    TailReadings,
    VerificationReport,
)
from surface_bundles.models.dissection import Curve, Dissection, LabelReadingRecord, SurfaceLoop  # noqa: F401
from surface_bundles.models.graph import LabeledGraph  # noqa: F401
from surface_bundles.models.maps import GroupMap  # noqa: F401
from surface_bundles.models.matrices import (  # noqa: F401
    AbelianGroupInvariants,
    IntMatrix,
    SpMatrix,
    chain_form,
)
from surface_bundles.models.penner import PennerData, PennerGrowth  # noqa: F401
from surface_bundles.models.words import (  # noqa: F401
    BraidWord,
    RaagWord,
    SurfaceWord,
    SymbolWord,
    TwistWord,
)
