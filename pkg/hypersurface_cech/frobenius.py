"""Frobenius images of Cech classes and layer matrices between graded pieces.

F sends [x_n^j / x^c] to [x_n^{jp} / x^{pc}]. Writing jp = q*d + r and
replacing x_n^{dq} by g^q leaves x_n^r times a sum of monomials over
x^{pc}; a monomial whose exponent reaches the denominator exponent in some
variable is zero in local cohomology, so the expansion of g^q is pruned
as it is built.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from ff_linalg import PrimeFieldMatrix, multinomial_mod_p
from hypersurface_cech.ring import (
    CechClass,
    HypersurfaceRing,
    Monomial,
    Polynomial,
    basis_at_degree,
    reduce_polynomial,
)
from logging_config import get_logger

logger = get_logger(__name__)

SparseVector = Dict[CechClass, int]


def _surviving_g_power(
    ring: HypersurfaceRing, q: int, limits: Tuple[int, ...]
) -> Dict[Monomial, int]:
    """Terms of g^q whose exponents stay strictly below limits.

    Branches are cut as soon as any exponent reaches its limit, which is
    where the matching Cech class vanishes.
    """
    terms = ring.g_terms
    if q == 0:
        return {(0,) * ring.n: 1}
    if not terms:
        return {}
    p = ring.p
    out: Dict[Monomial, int] = {}
    last = len(terms) - 1

    def walk(index: int, remaining: int, counts: List[int], exps: List[int]) -> None:
        mono, _ = terms[index]
        choices = [remaining] if index == last else range(remaining + 1)
        for k in choices:
            new_exps = [e + k * m for e, m in zip(exps, mono)]
            if any(e >= lim for e, lim in zip(new_exps, limits)):
                # exponents only grow with k for this term
                if index != last:
                    break
                continue
            if index == last:
                ks = counts + [k]
                coef = int(multinomial_mod_p(ks, p))
                if not coef:
                    continue
                for kk, (_, c) in zip(ks, terms):
                    coef = coef * pow(c, kk, p) % p
                key = tuple(new_exps)
                out[key] = (out.get(key, 0) + coef) % p
            else:
                walk(index + 1, remaining - k, counts + [k], new_exps)

    walk(0, q, [], [0] * ring.n)
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=200_000)
def _image_items(
    ring: HypersurfaceRing, cls: CechClass, multiplier: Optional[Polynomial]
) -> Tuple[Tuple[CechClass, int], ...]:
    p, d = ring.p, ring.deg_f
    if multiplier is None:
        factors = (((0,) * (ring.n + 1), 1),)
    else:
        factors = multiplier.terms

    image: Dict[CechClass, int] = {}
    for mono, u_coef in factors:
        alpha, beta = mono[:-1], mono[-1]
        limits = tuple(p * c - a for c, a in zip(cls.denom, alpha))
        if any(lim <= 0 for lim in limits):
            continue
        q, r = divmod(cls.xn_exp * p + beta, d)
        for exps, coef in _surviving_g_power(ring, q, limits).items():
            denom = tuple(lim - e for lim, e in zip(limits, exps))
            target = CechClass.of(r, denom)
            image[target] = (image.get(target, 0) + coef * u_coef) % p
    return tuple(sorted((k, v) for k, v in image.items() if v))


def frobenius_image(
    ring: HypersurfaceRing,
    cls: CechClass,
    multiplier: Optional[Polynomial] = None,
) -> SparseVector:
    """Image of one basis class under F (or u * F for a multiplier u).

    Args:
        ring: The hypersurface
        cls: Source basis class
        multiplier: Optional twist u, reduced modulo the defining equation

    Returns:
        Mapping target class -> nonzero coefficient mod p
    """
    if multiplier is not None:
        multiplier = reduce_polynomial(ring, multiplier)
    return dict(_image_items(ring, cls, multiplier))


def apply_frobenius(
    ring: HypersurfaceRing,
    vector: SparseVector,
    multiplier: Optional[Polynomial] = None,
) -> SparseVector:
    """Image of a sparse combination of classes; the action is F_p-linear."""
    if multiplier is not None:
        multiplier = reduce_polynomial(ring, multiplier)
    out: SparseVector = {}
    for cls, coef in vector.items():
        for target, c in _image_items(ring, cls, multiplier):
            out[target] = (out.get(target, 0) + coef * c) % ring.p
    return {k: v for k, v in out.items() if v}


def target_degree(ring: HypersurfaceRing, t: int, multiplier: Optional[Polynomial] = None) -> int:
    """Degree reached from t in one step: p*t plus the multiplier degree."""
    shift = 0 if multiplier is None else multiplier.degree
    return ring.p * t + shift


@dataclass(frozen=True)
class FrobeniusLayer:
    """Matrix of F (or u*F) from the degree-t piece to the next piece.

    Columns follow basis_at_degree(source_degree), rows follow
    basis_at_degree(target_degree).
    """

    source_degree: int
    target_degree: int
    twist_multiplier: Optional[Polynomial]
    matrix: PrimeFieldMatrix
    source_basis: Tuple[CechClass, ...]
    target_basis: Tuple[CechClass, ...]


def frobenius_layer(
    ring: HypersurfaceRing,
    t: int,
    multiplier: Optional[Polynomial] = None,
) -> FrobeniusLayer:
    """Build the layer matrix out of degree t.

    Args:
        ring: The hypersurface
        t: Source degree
        multiplier: Optional homogeneous twist u

    Returns:
        FrobeniusLayer with a |target basis| x |source basis| matrix
    """
    if multiplier is not None:
        multiplier = reduce_polynomial(ring, multiplier)
    target = target_degree(ring, t, multiplier)
    source_basis = basis_at_degree(ring, t)
    target_basis = basis_at_degree(ring, target)
    row_of = {cls: i for i, cls in enumerate(target_basis)}

    rows = [[0] * len(source_basis) for _ in target_basis]
    for col, cls in enumerate(source_basis):
        for image_cls, coef in _image_items(ring, cls, multiplier):
            rows[row_of[image_cls]][col] = coef

    matrix = PrimeFieldMatrix.from_rows(rows, ring.p, cols=len(source_basis))
    logger.debug(
        f"[LAYER] {ring.label} t={t} -> {target}: {matrix.rows}x{matrix.cols}"
    )
    return FrobeniusLayer(
        source_degree=t,
        target_degree=target,
        twist_multiplier=multiplier,
        matrix=matrix,
        source_basis=tuple(source_basis),
        target_basis=tuple(target_basis),
    )


def degree0_matrix(ring: HypersurfaceRing) -> FrobeniusLayer:
    """The degree-0 endomorphism layer, as dumped by --dump-matrix."""
    return frobenius_layer(ring, 0)
