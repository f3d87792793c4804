"""Explicit finite graded F-modules, used as a brute-force oracle.

A module is declared zero outside its window. Every Frobenius orbit of a
nonzero degree leaves the window, so nilpotence of every piece is decided
exactly by kernel chains.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from errors import DimensionError, FieldError
from ff_linalg import (
    PrimeFieldMatrix,
    endo_nilpotence_index,
    iterate_kernel_chain,
    require_prime,
    stable_kernel_exponent,
)
from fmodule_calculus.nilsupport import DegreeSupport, NilSupport


@dataclass(frozen=True, eq=False)
class ExplicitGradedFModule:
    """Finite-window graded module with a degree-multiplying action.

    Attributes:
        p: Characteristic
        window: (lo, hi); pieces outside are zero
        pieces: degree -> dimension (zero dimensions may be omitted)
        layers: degree t -> matrix from piece t to piece t*p
    """

    p: int
    window: Tuple[int, int]
    pieces: Dict[int, int] = field(default_factory=dict)
    layers: Dict[int, PrimeFieldMatrix] = field(default_factory=dict)

    def __post_init__(self) -> None:
        require_prime(self.p)
        lo, hi = self.window
        pieces = {t: d for t, d in self.pieces.items() if d}
        for t, d in pieces.items():
            if not lo <= t <= hi:
                raise DimensionError(f"piece at degree {t} lies outside window {self.window}")
            if d < 0:
                raise DimensionError(f"negative dimension at degree {t}")
        layers = {}
        for t, d in pieces.items():
            target = self.p * t
            rows = pieces.get(target, 0) if lo <= target <= hi else 0
            matrix = self.layers.get(t)
            if matrix is None:
                matrix = PrimeFieldMatrix.zeros(rows, d, self.p)
            if matrix.p != self.p:
                raise FieldError(f"layer at {t} is over F_{matrix.p}, module over F_{self.p}")
            if matrix.shape != (rows, d):
                raise DimensionError(
                    f"layer at {t} has shape {matrix.shape}, expected {(rows, d)}"
                )
            layers[t] = matrix
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "layers", layers)

    @classmethod
    def zero(cls, p: int, window: Tuple[int, int] = (0, 0)) -> "ExplicitGradedFModule":
        return cls(p=p, window=window)

    def dim(self, t: int) -> int:
        return self.pieces.get(t, 0)

    def layer(self, t: int) -> PrimeFieldMatrix:
        if t in self.layers:
            return self.layers[t]
        return PrimeFieldMatrix.zeros(self.dim(self.p * t), self.dim(t), self.p)

    @property
    def is_zero(self) -> bool:
        return not self.pieces

    def degsupp(self) -> DegreeSupport:
        if not self.pieces:
            return DegreeSupport.nothing()
        return DegreeSupport(lo=min(self.pieces), hi=max(self.pieces))

    def orbit_layers(self, t: int) -> List[PrimeFieldMatrix]:
        """Layers along t, tp, tp^2, ... until the orbit leaves the support."""
        if t == 0:
            return [self.layer(0)]
        layers = []
        current = t
        while self.dim(current):
            layers.append(self.layer(current))
            current *= self.p
        return layers


def piece_is_nilpotent(m: ExplicitGradedFModule, t: int) -> bool:
    """Whether the action is nilpotent on the degree-t piece."""
    if not m.dim(t):
        return True
    if t == 0:
        return endo_nilpotence_index(m.layer(0)) is not None
    chain = iterate_kernel_chain(m.orbit_layers(t), max_e=len(m.orbit_layers(t)))
    return chain.filled


def module_nilsupport(m: ExplicitGradedFModule) -> NilSupport:
    """Exact nilsupport of a window-complete module."""
    lo, hi = m.window
    members = [t for t in sorted(m.pieces) if not piece_is_nilpotent(m, t)]
    return NilSupport.explicit(lo=lo, hi=hi, members=members, tail_known=True, p=m.p)


def piece_hsl(m: ExplicitGradedFModule, t: int) -> int:
    """Steps needed to kill the nilpotent part of the degree-t piece."""
    if not m.dim(t):
        return 0
    if t == 0:
        return stable_kernel_exponent(m.layer(0))
    layers = m.orbit_layers(t)
    chain = iterate_kernel_chain(layers, max_e=len(layers))
    return chain.full_at or 0


def module_hsl(m: ExplicitGradedFModule) -> int:
    """Exact HSL number of a window-complete module."""
    return max((piece_hsl(m, t) for t in m.pieces), default=0)


def simulate_segre(
    m1: ExplicitGradedFModule, m2: ExplicitGradedFModule
) -> ExplicitGradedFModule:
    """M # N with the diagonal action: pieces are tensor products.

    Raises:
        FieldError: If the modules live over different primes
    """
    if m1.p != m2.p:
        raise FieldError(f"cannot form M # N over F_{m1.p} and F_{m2.p}")
    lo = max(m1.window[0], m2.window[0])
    hi = min(m1.window[1], m2.window[1])
    if lo > hi:
        return ExplicitGradedFModule.zero(m1.p)
    pieces = {}
    for t in range(lo, hi + 1):
        size = m1.dim(t) * m2.dim(t)
        if size:
            pieces[t] = size
    layers = {t: m1.layer(t).kron(m2.layer(t)) for t in pieces}
    return ExplicitGradedFModule(p=m1.p, window=(lo, hi), pieces=pieces, layers=layers)


def simulate_veronese(m: ExplicitGradedFModule, v: int) -> ExplicitGradedFModule:
    """M^(v): pieces at degrees divisible by v, regraded by t -> t/v."""
    if v < 1:
        raise ValueError(f"Veronese index must be positive, got {v}")
    if v == 1:
        return m
    lo = -((-m.window[0]) // v)
    hi = m.window[1] // v
    if lo > hi:
        return ExplicitGradedFModule.zero(m.p)
    pieces = {t // v: d for t, d in m.pieces.items() if t % v == 0}
    layers = {s: m.layer(s * v) for s in pieces}
    return ExplicitGradedFModule(p=m.p, window=(lo, hi), pieces=pieces, layers=layers)


def random_module(
    rng,
    p: int,
    window: Tuple[int, int],
    max_dim: int = 3,
    density: float = 0.6,
    nilpotent_bias: Optional[float] = None,
) -> ExplicitGradedFModule:
    """Random window-complete module for property suites.

    Args:
        rng: numpy Generator
        p: Characteristic
        window: (lo, hi)
        max_dim: Largest piece dimension
        density: Probability that a degree carries a nonzero piece
        nilpotent_bias: Probability of a strictly upper triangular degree-0
            layer; None leaves the degree-0 layer fully random
    """
    lo, hi = window
    pieces = {
        t: int(rng.integers(1, max_dim + 1))
        for t in range(lo, hi + 1)
        if rng.random() < density
    }
    layers = {}
    for t, d in pieces.items():
        target = p * t
        rows = pieces.get(target, 0) if lo <= target <= hi else 0
        data = rng.integers(0, p, size=(rows, d))
        if t == 0 and nilpotent_bias is not None and rng.random() < nilpotent_bias:
            data = np.triu(data, k=1)
        layers[t] = PrimeFieldMatrix(data, p)
    return ExplicitGradedFModule(p=p, window=window, pieces=pieces, layers=layers)
