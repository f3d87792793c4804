"""Degree bookkeeping for graded F-modules.

Nilsupport descriptors, base-nilpotent indices, HSL combinators and an
explicit finite-module simulator that serves as a brute-force oracle.
"""

from .hsl import (
    HslKind,
    HslValue,
    exponent_escaping,
    hsl_direct_sum,
    hsl_max,
    hsl_min,
    hsl_ses_bound,
    hsl_window_bound,
)
from .nilsupport import (
    BValue,
    DegreeSupport,
    DescriptorKind,
    NilSupport,
    Tail,
    Trichotomy,
    b_invariant,
    classify_trichotomy,
    degsupp_intersect,
    generalized_nilpotent,
    is_nilpotent,
    nilsupp_intersect,
    nilsupp_union,
    nonnegative_part,
    veronese_degsupp,
    veronese_restrict,
)
from .simulator import (
    ExplicitGradedFModule,
    module_hsl,
    module_nilsupport,
    piece_is_nilpotent,
    random_module,
    simulate_segre,
    simulate_veronese,
)

__all__ = [
    "BValue",
    "DegreeSupport",
    "DescriptorKind",
    "ExplicitGradedFModule",
    "HslKind",
    "HslValue",
    "NilSupport",
    "Tail",
    "Trichotomy",
    "b_invariant",
    "classify_trichotomy",
    "degsupp_intersect",
    "exponent_escaping",
    "generalized_nilpotent",
    "hsl_direct_sum",
    "hsl_max",
    "hsl_min",
    "hsl_ses_bound",
    "hsl_window_bound",
    "is_nilpotent",
    "module_hsl",
    "module_nilsupport",
    "nilsupp_intersect",
    "nilsupp_union",
    "nonnegative_part",
    "piece_is_nilpotent",
    "random_module",
    "simulate_segre",
    "simulate_veronese",
    "veronese_degsupp",
    "veronese_restrict",
]
