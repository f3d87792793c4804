"""Profile-to-profile calculators for ring constructions.

Gluing, Segre products, Veronese subrings and diagonal subalgebras, plus
the Frobenius test exponent bounds they feed.
"""

from .depth import lower_bound_of, ses_fdepth_bounds
from .diagonal import (
    DiagonalSpec,
    diagonal_conditions_from_profiles,
    diagonal_fdepth,
    diagonal_hypersurface_bounds,
    diagonal_profile,
    diagonal_quotient_conditions,
)
from .fte import (
    binomial_sum,
    f_exp,
    least_exponent_reaching,
    maddox_e1,
    maddox_fte_bound,
    quy_fte_bound,
)
from .gluing import glue_fdepth, glue_hsl_fte, glue_wfn_check
from .profile import (
    FLAG_NAMES,
    INF,
    CohomologyRecord,
    NatInterval,
    ProfileFlags,
    RingProfile,
    Verdict,
    polynomial_ring_profile,
)
from .reports import BoundKind, BoundReport, KunnethSummand, KunnethSummandReport, jsonable
from .segre import (
    kunneth_summands,
    segre_fdepth_bounds,
    segre_fte_bound,
    segre_gfdepth,
    segre_gwfn_fte_bound,
    segre_hsl_bounds,
    segre_length_deg0,
    segre_profile,
)
from .veronese import veronese_fnilpotence_equivalence, veronese_fte_bound, veronese_profile

__all__ = [
    "FLAG_NAMES",
    "INF",
    "BoundKind",
    "BoundReport",
    "CohomologyRecord",
    "DiagonalSpec",
    "KunnethSummand",
    "KunnethSummandReport",
    "NatInterval",
    "ProfileFlags",
    "RingProfile",
    "Verdict",
    "binomial_sum",
    "diagonal_conditions_from_profiles",
    "diagonal_fdepth",
    "diagonal_hypersurface_bounds",
    "diagonal_profile",
    "diagonal_quotient_conditions",
    "f_exp",
    "glue_fdepth",
    "glue_hsl_fte",
    "glue_wfn_check",
    "jsonable",
    "kunneth_summands",
    "least_exponent_reaching",
    "lower_bound_of",
    "maddox_e1",
    "maddox_fte_bound",
    "polynomial_ring_profile",
    "quy_fte_bound",
    "segre_fdepth_bounds",
    "segre_fte_bound",
    "segre_gfdepth",
    "segre_gwfn_fte_bound",
    "segre_hsl_bounds",
    "segre_length_deg0",
    "segre_profile",
    "ses_fdepth_bounds",
    "veronese_fnilpotence_equivalence",
    "veronese_fte_bound",
    "veronese_profile",
]
