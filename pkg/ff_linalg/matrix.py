"""Dense matrices over F_p backed by numpy arrays.

Every Frobenius layer is one of these. Entries are kept reduced to [0, p)
and the backing array is read-only, so matrices can be shared freely
between workers. Entries are int64 while every dot product fits in 64 bits;
larger primes switch the arithmetic to Python integers (object arrays).
"""

from typing import Iterable, List, Sequence, Tuple

import numpy as np

from errors import DimensionError, FieldError
from ff_linalg.field import PrimeFieldElement, require_prime

Vector = Tuple[int, ...]

INT64_MAX = np.iinfo(np.int64).max


def storage_dtype(p: int):
    """dtype that holds every residue mod p."""
    return np.int64 if p - 1 <= INT64_MAX else object


def widened(a: np.ndarray, p: int, terms: int) -> np.ndarray:
    """a itself, or an object copy when a sum of `terms` products mod p can overflow int64."""
    if a.dtype == object or (p - 1) ** 2 * max(terms, 1) + p <= INT64_MAX:
        return a
    return a.astype(object)


def mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Reduce an integer array to canonical representatives mod p."""
    dtype = storage_dtype(p)
    if dtype is object:
        a = np.asarray(a, dtype=object)
    return np.asarray(np.mod(a, p)).astype(dtype)


def rref_mod(a: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_p.

    Args:
        a: Integer matrix
        p: Prime modulus

    Returns:
        Tuple of (RREF matrix, pivot column indices)
    """
    r_mat = widened(mod_p(np.array(a, copy=True), p), p, 2)
    rows, cols = r_mat.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nonzero = np.nonzero(r_mat[r:, c])[0]
        if nonzero.size == 0:
            continue
        piv = r + int(nonzero[0])
        if piv != r:
            r_mat[[r, piv]] = r_mat[[piv, r]]
        inv = pow(int(r_mat[r, c]), p - 2, p)
        r_mat[r, :] = np.mod(r_mat[r, :] * inv, p)
        factors = r_mat[:, c].copy()
        factors[r] = 0
        if np.any(factors):
            r_mat = np.mod(r_mat - np.outer(factors, r_mat[r, :]), p)
        pivots.append(c)
        r += 1
    return mod_p(r_mat, p), pivots


class PrimeFieldMatrix:
    """Immutable rows x cols matrix over F_p.

    Example:
        m = PrimeFieldMatrix.from_rows([[1, 1], [2, 2]], p=3)
        m.kernel()  # [(1, 2)]
    """

    __slots__ = ("_data", "_p")

    def __init__(self, data: np.ndarray, p: int):
        require_prime(p)
        array = np.asarray(data, dtype=object if storage_dtype(p) is object else None)
        if array.ndim != 2:
            raise DimensionError(f"matrix data must be 2-dimensional, got ndim={array.ndim}")
        array = mod_p(array, p)
        array.setflags(write=False)
        self._data = array
        self._p = p

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[int]], p: int, cols: int = 0
    ) -> "PrimeFieldMatrix":
        """Build a matrix from nested integer rows.

        Args:
            rows: Row lists; may be empty
            p: Prime modulus
            cols: Column count, only needed when rows is empty
        """
        if len(rows) == 0:
            return cls(np.zeros((0, cols), dtype=storage_dtype(p)), p)
        return cls(np.array([list(r) for r in rows], dtype=storage_dtype(p)), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "PrimeFieldMatrix":
        return cls(np.zeros((rows, cols), dtype=storage_dtype(p)), p)

    @classmethod
    def identity(cls, size: int, p: int) -> "PrimeFieldMatrix":
        return cls(np.eye(size, dtype=np.int64).astype(storage_dtype(p)), p)

    @property
    def p(self) -> int:
        return self._p

    @property
    def rows(self) -> int:
        return int(self._data.shape[0])

    @property
    def cols(self) -> int:
        return int(self._data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the entries."""
        return self._data

    def entry(self, i: int, j: int) -> PrimeFieldElement:
        return PrimeFieldElement(int(self._data[i, j]), self._p)

    def to_rows(self) -> List[List[int]]:
        """Entries as plain Python ints, row-major."""
        return [[int(x) for x in row] for row in self._data]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not bool(np.any(self._data))

    def _check_field(self, other: "PrimeFieldMatrix") -> None:
        if other._p != self._p:
            raise FieldError(f"matrices over F_{self._p} and F_{other._p} cannot be combined")

    def __matmul__(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        terms = self.cols
        return PrimeFieldMatrix(
            widened(self._data, self._p, terms) @ widened(other._data, self._p, terms), self._p
        )

    def power(self, exponent: int) -> "PrimeFieldMatrix":
        """Matrix power by repeated squaring.

        Raises:
            DimensionError: If the matrix is not square
        """
        if not self.is_square():
            raise DimensionError(f"power needs a square matrix, got {self.shape}")
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        result = PrimeFieldMatrix.identity(self.rows, self._p)
        base = self
        while exponent:
            if exponent & 1:
                result = result @ base
            base = base @ base
            exponent >>= 1
        return result

    def kron(self, other: "PrimeFieldMatrix") -> "PrimeFieldMatrix":
        """Kronecker product; the matrix of A (x) B on tensor products."""
        self._check_field(other)
        product = np.kron(widened(self._data, self._p, 1), widened(other._data, self._p, 1))
        return PrimeFieldMatrix(product, self._p)

    def apply(self, vector: Sequence[int]) -> Vector:
        """Multiply a column vector."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        v = widened(mod_p(np.asarray(vector, dtype=object), self._p), self._p, self.cols)
        return tuple(int(x) for x in mod_p(widened(self._data, self._p, self.cols) @ v, self._p))

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        _, pivots = rref_mod(self._data, self._p)
        return len(pivots)

    def nullity(self) -> int:
        return self.cols - self.rank()

    def kernel(self) -> List[Vector]:
        """Reduced-echelon basis of {v : Mv = 0}.

        The basis vectors, stacked as rows, form a matrix in reduced row
        echelon form, so identical inputs always give identical output.
        """
        if self.cols == 0:
            return []
        if self.rows == 0:
            return [tuple(int(x) for x in row) for row in np.eye(self.cols, dtype=np.int64)]

        r_mat, pivots = rref_mod(self._data, self._p)
        free = [c for c in range(self.cols) if c not in set(pivots)]
        if not free:
            return []

        basis = np.zeros((len(free), self.cols), dtype=storage_dtype(self._p))
        for k, f in enumerate(free):
            basis[k, f] = 1
            for row_idx, pc in enumerate(pivots):
                basis[k, pc] = -r_mat[row_idx, f]
        echelon, echelon_pivots = rref_mod(basis, self._p)
        return [tuple(int(x) for x in echelon[i]) for i in range(len(echelon_pivots))]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PrimeFieldMatrix):
            return NotImplemented
        return (
            self._p == other._p
            and self.shape == other.shape
            and bool(np.array_equal(self._data, other._data))
        )

    def __hash__(self) -> int:
        if self._data.dtype == object:
            return hash((self._p, self.shape, tuple(int(x) for x in self._data.flat)))
        return hash((self._p, self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"PrimeFieldMatrix(p={self._p}, rows={self.to_rows()})"


def rank_of_vectors(vectors: Iterable[Sequence[int]], width: int, p: int) -> int:
    """Rank of a family of length-width vectors over F_p."""
    rows = [list(v) for v in vectors]
    return PrimeFieldMatrix.from_rows(rows, p, cols=width).rank()
