"""Verification library for the mirror correspondence of weighted
projective blowups: exact computation of both sides of the equivalence,
machine-checkable certificates, and the polytope-bisection machinery."""

from .weights import (
    ExteriorBasisElement,
    LatticePolytope,
    Monomial,
    Weights,
    exterior_basis,
    graded_dim,
    monomial_basis,
    normalized_volume,
    sheaf_cohomology_dim,
)
from .bside import (
    BigradedHom,
    DualElement,
    QuiverElement,
    cm_sequence,
    compose_dual,
    compose_quiver,
    dual_ext,
    ext_pushforward,
    generation_certificate,
    resolution_summands,
    verify_prop6_via_resolution,
)
from .verify import Certificate, hms_certificate, sweep

__version__ = "0.1.0"
