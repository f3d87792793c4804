"""Kernel chains of composite Frobenius layers.

A chain records, for e = 1, 2, ..., how much of the source piece is killed
by the e-fold composite. This is the per-degree picture of the orbit
closure of zero.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from errors import DimensionError
from ff_linalg.matrix import PrimeFieldMatrix
from logging_config import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class KernelChain:
    """Nullities of successive composites of a chain of layers.

    Attributes:
        dims: dims[i] is the nullity of the composite of the first i + 1
            maps (so the e-step nullity sits at dims[e - 1])
        ambient: Dimension of the source piece
        stabilized: True once the kernel filled, or when a repeated
            endomorphism showed two equal consecutive nullities
        full_at: Least e where the composite is zero on the source
    """

    dims: Tuple[int, ...]
    ambient: int
    stabilized: bool
    full_at: Optional[int] = None

    def nullity_at(self, e: int) -> int:
        """Nullity after e steps (e = 0 gives 0)."""
        if e <= 0:
            return 0
        if e > len(self.dims):
            raise IndexError(f"chain only has {len(self.dims)} steps")
        return self.dims[e - 1]

    @property
    def filled(self) -> bool:
        return self.full_at is not None


def iterate_kernel_chain(
    maps: Sequence[PrimeFieldMatrix], max_e: int
) -> KernelChain:
    """Compute nullities of maps[e-1] o ... o maps[0] for e up to max_e.

    Args:
        maps: Composable layers; maps[i].rows must equal maps[i+1].cols
        max_e: Maximum number of steps to take

    Returns:
        KernelChain over min(max_e, len(maps)) steps, stopping early once
        the kernel fills

    Raises:
        DimensionError: If consecutive maps are not composable
    """
    if max_e < 1:
        raise ValueError("max_e must be at least 1")
    if not maps:
        return KernelChain(dims=(), ambient=0, stabilized=True, full_at=None)

    for i in range(len(maps) - 1):
        if maps[i].rows != maps[i + 1].cols:
            raise DimensionError(
                f"layer {i} has {maps[i].rows} rows but layer {i + 1} has "
                f"{maps[i + 1].cols} columns"
            )

    ambient = maps[0].cols
    repeated_endo = maps[0].is_square() and all(m == maps[0] for m in maps[1:])

    dims = []
    composite: Optional[PrimeFieldMatrix] = None
    full_at = None
    stabilized = False
    for e, layer in enumerate(maps[:max_e], start=1):
        composite = layer if composite is None else layer @ composite
        nullity = composite.nullity()
        if repeated_endo and dims and dims[-1] == nullity:
            stabilized = True
        dims.append(nullity)
        if nullity == ambient:
            full_at = e
            stabilized = True
            break
        if stabilized:
            break

    logger.debug(f"[CHAIN] ambient={ambient} dims={dims} full_at={full_at}")
    return KernelChain(
        dims=tuple(dims), ambient=ambient, stabilized=stabilized, full_at=full_at
    )


def endo_nilpotence_index(m: PrimeFieldMatrix) -> Optional[int]:
    """Least e with M^e = 0, or None if M is not nilpotent.

    By Fitting, a D x D matrix is nilpotent iff M^D = 0, so at most D
    powers are examined.

    Raises:
        DimensionError: If M is not square
    """
    if not m.is_square():
        raise DimensionError(f"endomorphism must be square, got {m.shape}")
    size = m.rows
    if size == 0:
        return 0
    power = m
    for e in range(1, size + 1):
        if power.is_zero():
            return e
        power = power @ m
    return None


def stable_kernel_exponent(m: PrimeFieldMatrix) -> int:
    """Least e with ker M^e = ker M^D, D the dimension.

    This is the HSL number of a single finite-dimensional piece: the number
    of steps after which every eventually-killed vector is already dead.

    Raises:
        DimensionError: If M is not square
    """
    if not m.is_square():
        raise DimensionError(f"endomorphism must be square, got {m.shape}")
    size = m.rows
    if size == 0:
        return 0
    target = m.power(size).nullity()
    if target == 0:
        return 0
    power = m
    for e in range(1, size + 1):
        if power.nullity() == target:
            return e
        power = power @ m
    return size
