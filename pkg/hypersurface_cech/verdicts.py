"""Degree-by-degree nilpotence verdicts for H^n_m(R).

The orbit of a degree t under the (possibly twisted) action is
t -> p*t + m. A fixed point is a single endomorphism and is decided
exactly. An increasing orbit leaves the support above the a-invariant,
so it is decided exactly too. A decreasing orbit never leaves the support,
so the chain is followed for at most max_e steps. Propagation also stops
once the support of the composite images outgrows a term budget.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from ff_linalg import (
    KernelChain,
    endo_nilpotence_index,
    iterate_kernel_chain,
    rank_of_vectors,
    stable_kernel_exponent,
)
from hypersurface_cech.frobenius import (
    SparseVector,
    apply_frobenius,
    frobenius_layer,
    target_degree,
)
from hypersurface_cech.ring import (
    CechClass,
    HypersurfaceRing,
    Polynomial,
    basis_at_degree,
    reduce_polynomial,
)
from logging_config import get_logger

logger = get_logger(__name__)

DEFAULT_MAX_E: int = 10
DEFAULT_MAX_TERMS: int = 4096


class VerdictStatus(str, Enum):
    """Outcome of a per-degree nilpotence check."""

    NILPOTENT = "nilpotent"
    NOT_NILPOTENT = "not_nilpotent"
    NOT_NILPOTENT_UP_TO = "not_nilpotent_up_to"
    ZERO_SPACE = "zero_space"


@dataclass(frozen=True)
class DegreeVerdict:
    """Nilpotence verdict for one graded piece.

    Attributes:
        degree: Source degree t
        status: Outcome
        exponent: Annihilation exponent e for NILPOTENT, or the number of
            steps E examined for NOT_NILPOTENT_UP_TO
        kernel_chain: Nullities of the composites that were computed
        dimension: Dimension of the piece
    """

    degree: int
    status: VerdictStatus
    kernel_chain: KernelChain
    exponent: Optional[int] = None
    dimension: int = 0

    @property
    def decided(self) -> bool:
        return self.status != VerdictStatus.NOT_NILPOTENT_UP_TO

    @property
    def in_nilsupport(self) -> Optional[bool]:
        """True/False when decided; None when the chain did not fill."""
        if self.status == VerdictStatus.NOT_NILPOTENT:
            return True
        if self.status == VerdictStatus.NOT_NILPOTENT_UP_TO:
            return None
        return False

    def describe(self) -> str:
        if self.status == VerdictStatus.NILPOTENT:
            return f"nilpotent (e={self.exponent})"
        if self.status == VerdictStatus.NOT_NILPOTENT_UP_TO:
            return f"not nilpotent within {self.exponent} steps"
        return self.status.value.replace("_", " ")


def _zero_space(t: int) -> DegreeVerdict:
    chain = KernelChain(dims=(), ambient=0, stabilized=True, full_at=None)
    return DegreeVerdict(degree=t, status=VerdictStatus.ZERO_SPACE, kernel_chain=chain)


def _fixed_point_verdict(
    ring: HypersurfaceRing, t: int, multiplier: Optional[Polynomial], size: int
) -> DegreeVerdict:
    matrix = frobenius_layer(ring, t, multiplier).matrix
    index = endo_nilpotence_index(matrix)
    chain = iterate_kernel_chain([matrix] * size, size)
    if index is None:
        return DegreeVerdict(
            degree=t,
            status=VerdictStatus.NOT_NILPOTENT,
            kernel_chain=chain,
            dimension=size,
        )
    return DegreeVerdict(
        degree=t,
        status=VerdictStatus.NILPOTENT,
        kernel_chain=chain,
        exponent=index,
        dimension=size,
    )


def _escaping_verdict(
    ring: HypersurfaceRing, t: int, multiplier: Optional[Polynomial], size: int
) -> DegreeVerdict:
    layers = []
    current = t
    while basis_at_degree(ring, current):
        layer = frobenius_layer(ring, current, multiplier)
        layers.append(layer.matrix)
        current = layer.target_degree
    chain = iterate_kernel_chain(layers, len(layers))
    return DegreeVerdict(
        degree=t,
        status=VerdictStatus.NILPOTENT,
        kernel_chain=chain,
        exponent=chain.full_at,
        dimension=size,
    )


def _propagated_verdict(
    ring: HypersurfaceRing,
    t: int,
    multiplier: Optional[Polynomial],
    basis: List[CechClass],
    max_e: int,
    max_terms: int,
) -> DegreeVerdict:
    size = len(basis)
    vectors: List[SparseVector] = [{cls: 1} for cls in basis]
    dims: List[int] = []

    for e in range(1, max_e + 1):
        vectors = [apply_frobenius(ring, v, multiplier) for v in vectors]
        support = sorted({cls for v in vectors for cls in v})
        column_of: Dict[CechClass, int] = {cls: i for i, cls in enumerate(support)}
        rows = []
        for v in vectors:
            row = [0] * len(support)
            for cls, coef in v.items():
                row[column_of[cls]] = coef
            rows.append(row)
        nullity = size - rank_of_vectors(rows, len(support), ring.p)
        dims.append(nullity)

        if nullity == size:
            chain = KernelChain(dims=tuple(dims), ambient=size, stabilized=True, full_at=e)
            return DegreeVerdict(
                degree=t,
                status=VerdictStatus.NILPOTENT,
                kernel_chain=chain,
                exponent=e,
                dimension=size,
            )
        if len(support) > max_terms:
            logger.debug(
                f"[BUDGET] {ring.label} t={t}: support {len(support)} > {max_terms} "
                f"after {e} steps"
            )
            break

    chain = KernelChain(dims=tuple(dims), ambient=size, stabilized=False, full_at=None)
    return DegreeVerdict(
        degree=t,
        status=VerdictStatus.NOT_NILPOTENT_UP_TO,
        kernel_chain=chain,
        exponent=len(dims),
        dimension=size,
    )


def degree_verdict(
    ring: HypersurfaceRing,
    t: int,
    max_e: int = DEFAULT_MAX_E,
    multiplier: Optional[Polynomial] = None,
    max_terms: int = DEFAULT_MAX_TERMS,
) -> DegreeVerdict:
    """Decide whether the action is nilpotent on the degree-t piece.

    Args:
        ring: The hypersurface
        t: Degree of the piece
        max_e: Step budget for decreasing orbits
        multiplier: Optional twist u for the action u * F
        max_terms: Support budget for decreasing orbits

    Returns:
        DegreeVerdict; NOT_NILPOTENT_UP_TO only for decreasing orbits
    """
    if max_e < 1:
        raise ValueError("max_e must be at least 1")
    if multiplier is not None:
        multiplier = reduce_polynomial(ring, multiplier)

    basis = basis_at_degree(ring, t)
    if not basis:
        return _zero_space(t)

    following = target_degree(ring, t, multiplier)
    if following == t:
        verdict = _fixed_point_verdict(ring, t, multiplier, len(basis))
    elif following > t:
        verdict = _escaping_verdict(ring, t, multiplier, len(basis))
    else:
        verdict = _propagated_verdict(ring, t, multiplier, basis, max_e, max_terms)

    logger.debug(f"[VERDICT] {ring.label} t={t}: {verdict.describe()}")
    return verdict


def hsl_degree0(ring: HypersurfaceRing) -> int:
    """HSL number of the degree-0 piece [H^n_m(R)]_0.

    Least e such that the e-th power of the degree-0 matrix kills every
    vector some power kills; 0 when the action is injective.
    """
    if not basis_at_degree(ring, 0):
        return 0
    return stable_kernel_exponent(frobenius_layer(ring, 0).matrix)


def degree0_rank(ring: HypersurfaceRing) -> int:
    """Dimension of the degree-0 non-nilpotent quotient: rank of M^D."""
    size = len(basis_at_degree(ring, 0))
    if size == 0:
        return 0
    return frobenius_layer(ring, 0).matrix.power(size).rank()
