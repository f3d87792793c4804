"""Exact linear algebra over F_p for frobnil."""

from .chains import (
    KernelChain,
    endo_nilpotence_index,
    iterate_kernel_chain,
    stable_kernel_exponent,
)
from .field import (
    PrimeField,
    PrimeFieldElement,
    binomial_mod_p,
    multinomial_mod_p,
    require_prime,
)
from .matrix import PrimeFieldMatrix, rank_of_vectors, rref_mod


def kernel(m: PrimeFieldMatrix):
    """Reduced-echelon kernel basis of m (see PrimeFieldMatrix.kernel)."""
    return m.kernel()


__all__ = [
    "KernelChain",
    "PrimeField",
    "PrimeFieldElement",
    "PrimeFieldMatrix",
    "binomial_mod_p",
    "endo_nilpotence_index",
    "iterate_kernel_chain",
    "kernel",
    "multinomial_mod_p",
    "rank_of_vectors",
    "require_prime",
    "rref_mod",
    "stable_kernel_exponent",
]
