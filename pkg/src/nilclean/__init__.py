"""Finite ring toolkit for clean, nil clean and weak nil clean elements and ideals."""

from .cleanness import (
    DecompositionCertificate,
    Flavor,
    IdealClassification,
    classify_ideal,
    classify_ring,
    decompose,
    unique_wnc_witness_count,
    verify_certificate,
)
from .constructions import (
    Bimodule,
    MoritaSpec,
    context_projections,
    corner_ring,
    direct_product,
    idealization,
    morita_ring,
    triangular_ring,
)
from .ideals import (
    Ideal,
    QuotientRing,
    all_ideals,
    ideal_generated_by,
    image_ideal,
    is_nil_ideal,
    lift_idempotent_mod_nil,
    quotient_ring,
)
from .kernels import BACKEND
from .ring import (
    Elem,
    ElementSets,
    FiniteRing,
    RingError,
    SizeLimitError,
    classify_element_sets,
    nilpotency_index,
)
from .specs import SpecSyntaxError, build_ring, parse_ring_spec

__version__ = "0.1.0"
