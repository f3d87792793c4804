"""Hypersurface descriptors and the Cech basis of top local cohomology.

R = F_p[x_0..x_n] / (x_n^d - g(x_0..x_{n-1})) is free over
A = F_p[x_0..x_{n-1}] with basis 1, x_n, ..., x_n^{d-1}, so H^n_m(R) has the
F_p-basis x_n^j / (x_0^{c_0} ... x_{n-1}^{c_{n-1}}) with 0 <= j < d and
every c_i >= 1.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from errors import RingSpecError
from ff_linalg import multinomial_mod_p, require_prime

Monomial = Tuple[int, ...]
Term = Tuple[Monomial, int]


def _normalize_terms(terms: Sequence[Term], p: int, width: int, what: str) -> Tuple[Term, ...]:
    combined: Dict[Monomial, int] = {}
    for raw in terms:
        try:
            exps, coef = raw
            exps = tuple(int(e) for e in exps)
            coef = int(coef)
        except (TypeError, ValueError):
            raise RingSpecError(f"{what}: term {raw!r} is not (exponents, coefficient)")
        if len(exps) != width:
            raise RingSpecError(
                f"{what}: exponent vector {exps} has length {len(exps)}, expected {width}"
            )
        if any(e < 0 for e in exps):
            raise RingSpecError(f"{what}: negative exponent in {exps}")
        combined[exps] = (combined.get(exps, 0) + coef) % p
    return tuple(sorted((m, c) for m, c in combined.items() if c))


@dataclass(frozen=True)
class HypersurfaceRing:
    """F_p[x_0..x_n] / (x_n^deg_f - g) with g homogeneous of degree deg_f.

    Attributes:
        p: Characteristic
        n: Number of variables of g; also the Krull dimension of R
        deg_f: Degree d of the defining form
        g_terms: ((exponent vector over x_0..x_{n-1}), coefficient) pairs
    """

    p: int
    n: int
    deg_f: int
    g_terms: Tuple[Term, ...]

    def __post_init__(self) -> None:
        require_prime(self.p)
        if self.n < 1:
            raise RingSpecError(f"need at least one variable besides x_n, got n={self.n}")
        if self.deg_f < 1:
            raise RingSpecError(f"defining degree must be positive, got {self.deg_f}")
        terms = _normalize_terms(self.g_terms, self.p, self.n, "g")
        for exps, _ in terms:
            if sum(exps) != self.deg_f:
                raise RingSpecError(
                    f"g must be homogeneous of degree {self.deg_f}; term {exps} "
                    f"has degree {sum(exps)}"
                )
        object.__setattr__(self, "g_terms", terms)

    @classmethod
    def fermat(cls, p: int, n: int, d: int) -> "HypersurfaceRing":
        """x_0^d + ... + x_{n-1}^d - x_n^d."""
        terms = []
        for i in range(n):
            exps = [0] * n
            exps[i] = d
            terms.append((tuple(exps), 1))
        return cls(p=p, n=n, deg_f=d, g_terms=tuple(terms))

    @property
    def is_fermat(self) -> bool:
        return self == HypersurfaceRing.fermat(self.p, self.n, self.deg_f)

    @property
    def dim(self) -> int:
        return self.n

    @property
    def label(self) -> str:
        if self.is_fermat:
            return f"fermat(d={self.deg_f},n={self.n},p={self.p})"
        return f"hypersurface(d={self.deg_f},n={self.n},p={self.p},terms={len(self.g_terms)})"

    def g_string(self) -> str:
        """g in the --g-terms syntax: "e0,e1:c;..."."""
        return ";".join(
            f"{','.join(str(e) for e in exps)}:{coef}" for exps, coef in self.g_terms
        )


@dataclass(frozen=True, order=True)
class CechClass:
    """Basis class x_n^xn_exp / x^denom of H^n_m(R).

    Ordering is lexicographic on (xn_exp, denom), the basis order used for
    every matrix.
    """

    xn_exp: int
    denom: Tuple[int, ...]
    degree: int = field(compare=False)

    def __post_init__(self) -> None:
        if self.xn_exp < 0:
            raise RingSpecError(f"x_n exponent must be nonnegative, got {self.xn_exp}")
        if any(c < 1 for c in self.denom):
            raise RingSpecError(f"denominator exponents must be >= 1, got {self.denom}")
        expected = self.xn_exp - sum(self.denom)
        if self.degree != expected:
            raise RingSpecError(
                f"class degree {self.degree} does not match exponents (expected {expected})"
            )

    @classmethod
    def of(cls, xn_exp: int, denom: Sequence[int]) -> "CechClass":
        denom = tuple(int(c) for c in denom)
        return cls(xn_exp=xn_exp, denom=denom, degree=xn_exp - sum(denom))

    def __str__(self) -> str:
        bottom = "*".join(f"x{i}^{c}" for i, c in enumerate(self.denom))
        return f"[x_n^{self.xn_exp}/({bottom})]"


def a_invariant(ring: HypersurfaceRing) -> int:
    """Top degree of H^n_m(R): (deg_f - 1) - n."""
    return ring.deg_f - 1 - ring.n


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Compositions of total into positive parts, lexicographic order."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=4096)
def _basis(n: int, deg_f: int, t: int) -> Tuple[CechClass, ...]:
    classes: List[CechClass] = []
    for j in range(deg_f):
        total = j - t
        if total < n:
            continue
        for denom in _compositions(total, n):
            classes.append(CechClass(xn_exp=j, denom=denom, degree=t))
    return tuple(classes)


def basis_at_degree(ring: HypersurfaceRing, t: int) -> List[CechClass]:
    """All basis classes of [H^n_m(R)]_t in lexicographic (xn_exp, denom) order.

    Empty exactly when the graded piece is zero, in particular for every
    t > a_invariant(ring).
    """
    return list(_basis(ring.n, ring.deg_f, t))


@dataclass(frozen=True)
class Polynomial:
    """Sparse polynomial over F_p in x_0..x_n (x_n last).

    Used for twist multipliers u in the action u * F.
    """

    p: int
    terms: Tuple[Term, ...]
    nvars: int

    def __post_init__(self) -> None:
        require_prime(self.p)
        object.__setattr__(
            self, "terms", _normalize_terms(self.terms, self.p, self.nvars, "multiplier")
        )

    @classmethod
    def constant(cls, value: int, p: int, nvars: int) -> "Polynomial":
        return cls(p=p, terms=(((0,) * nvars, value),), nvars=nvars)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; the polynomial must be homogeneous.

        Raises:
            RingSpecError: If the polynomial is zero or not homogeneous
        """
        degrees = {sum(m) for m, _ in self.terms}
        if len(degrees) != 1:
            raise RingSpecError(
                "multiplier must be a nonzero homogeneous polynomial, "
                f"found degrees {sorted(degrees)}"
            )
        return degrees.pop()


def expand_g_power(ring: HypersurfaceRing, q: int) -> Dict[Monomial, int]:
    """Full expansion of g^q as monomial -> coefficient mod p."""
    result: Dict[Monomial, int] = {}
    terms = ring.g_terms
    if q == 0:
        return {(0,) * ring.n: 1}
    if not terms:
        return {}

    def walk(index: int, remaining: int, counts: List[int]) -> None:
        if index == len(terms) - 1:
            ks = counts + [remaining]
            coef = int(multinomial_mod_p(ks, ring.p))
            if not coef:
                return
            exps = [0] * ring.n
            for k, (mono, c) in zip(ks, terms):
                coef = coef * pow(c, k, ring.p) % ring.p
                for i, e in enumerate(mono):
                    exps[i] += k * e
            key = tuple(exps)
            result[key] = (result.get(key, 0) + coef) % ring.p
            return
        for k in range(remaining + 1):
            walk(index + 1, remaining - k, counts + [k])

    walk(0, q, [])
    return {m: c for m, c in result.items() if c}


def reduce_polynomial(ring: HypersurfaceRing, u: Polynomial) -> Polynomial:
    """Rewrite u modulo x_n^d - g so every x_n exponent is below d.

    Raises:
        RingSpecError: If u lives in the wrong number of variables or over
            a different prime
    """
    if u.nvars != ring.n + 1:
        raise RingSpecError(
            f"multiplier must use {ring.n + 1} variables (x_0..x_n), got {u.nvars}"
        )
    if u.p != ring.p:
        raise RingSpecError(f"multiplier is over F_{u.p}, ring is over F_{ring.p}")

    reduced: Dict[Monomial, int] = {}
    for mono, coef in u.terms:
        q, r = divmod(mono[-1], ring.deg_f)
        for g_mono, g_coef in expand_g_power(ring, q).items():
            exps = tuple(a + b for a, b in zip(mono[:-1], g_mono)) + (r,)
            reduced[exps] = (reduced.get(exps, 0) + coef * g_coef) % ring.p
    return Polynomial(p=ring.p, terms=tuple(reduced.items()), nvars=u.nvars)


def parse_terms(spec: str, width: int) -> Tuple[Term, ...]:
    """Parse "e0,e1,...:coef;..." into terms.

    A missing ":coef" means coefficient 1.

    Raises:
        RingSpecError: If the text is malformed
    """
    terms: List[Term] = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        exps_text, _, coef_text = chunk.partition(":")
        try:
            exps = tuple(int(x) for x in exps_text.split(","))
            coef = int(coef_text) if coef_text.strip() else 1
        except ValueError:
            raise RingSpecError(f"malformed term '{chunk}', expected e0,e1,...:coef")
        if len(exps) != width:
            raise RingSpecError(f"term '{chunk}' has {len(exps)} exponents, expected {width}")
        terms.append((exps, coef))
    if not terms:
        raise RingSpecError("no terms given")
    return tuple(terms)
