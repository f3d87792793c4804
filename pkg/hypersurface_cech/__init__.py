"""Top local cohomology of diagonal hypersurfaces x_n^d - g over F_p.

Explicit Cech bases, (twisted) Frobenius layer matrices, per-degree
nilpotence verdicts and the whole-ring classification.
"""

from .classify import (
    classify_ring,
    default_window_lo,
    nilsupport_from_verdicts,
    scan_window,
    smoothness_check,
)
from .frobenius import (
    FrobeniusLayer,
    apply_frobenius,
    degree0_matrix,
    frobenius_image,
    frobenius_layer,
    target_degree,
)
from .ring import (
    CechClass,
    HypersurfaceRing,
    Polynomial,
    a_invariant,
    basis_at_degree,
    expand_g_power,
    parse_terms,
    reduce_polynomial,
)
from .verdicts import (
    DEFAULT_MAX_E,
    DEFAULT_MAX_TERMS,
    DegreeVerdict,
    VerdictStatus,
    degree0_rank,
    degree_verdict,
    hsl_degree0,
)

__all__ = [
    "DEFAULT_MAX_E",
    "DEFAULT_MAX_TERMS",
    "CechClass",
    "DegreeVerdict",
    "FrobeniusLayer",
    "HypersurfaceRing",
    "Polynomial",
    "VerdictStatus",
    "a_invariant",
    "apply_frobenius",
    "basis_at_degree",
    "classify_ring",
    "default_window_lo",
    "degree0_matrix",
    "degree0_rank",
    "degree_verdict",
    "expand_g_power",
    "frobenius_image",
    "frobenius_layer",
    "hsl_degree0",
    "nilsupport_from_verdicts",
    "parse_terms",
    "reduce_polynomial",
    "scan_window",
    "smoothness_check",
    "target_degree",
]
