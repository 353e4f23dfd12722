"""Dense multivector arithmetic for real Clifford algebras Cl(p,q).

Basis blades are indexed by bitmasks: bit (a-1) of the mask is set exactly
when generator e_a appears in the blade, so mask 0 is the identity element
and ``popcount(mask)`` is the grade.  A multivector is a dense length-2^n
float64 vector of blade coefficients over a fixed :class:`Signature`.

The geometric product is driven by a per-signature Cayley sign table
(cached): ``e_A e_B = sign(A, B) e_{A xor B}`` where the sign combines the
transposition count needed to interleave the two index sets with the metric
factors of the contracted generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DimensionCapError,
    GradeRangeError,
    SignatureMismatchError,
)

DIMENSION_CAP = 12

# Full (2^n x 2^n) xor/sign layout matrices are materialised only up to this
# many generators; beyond it products fall back to a row-at-a-time loop.
_DENSE_TABLE_MAX_N = 10


@dataclass(frozen=True)
class Signature:
    """Algebra signature: p generators square to +1, the next q to -1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("generator counts must be nonnegative")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    def metric(self, a: int) -> int:
        """Square of generator e_a (generators are 1-indexed)."""
        if not 1 <= a <= self.n:
            raise GradeRangeError(f"generator index {a} out of range for {self}")
        return 1 if a <= self.p else -1

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


def make_algebra(p: int, q: int, cap: int | None = None) -> Signature:
    """Construct a signature, enforcing the dimension cap (default 12)."""
    limit = DIMENSION_CAP if cap is None else cap
    if p < 0 or q < 0:
        raise ValueError("generator counts must be nonnegative")
    if p + q > limit:
        raise DimensionCapError(
            f"n = {p + q} exceeds the dimension cap {limit}"
        )
    return Signature(p, q)


def _popcounts(dim: int) -> np.ndarray:
    return np.array([v.bit_count() for v in range(dim)], dtype=np.int64)


class _Tables:
    """Cached per-signature product structure.

    ``sign[a, b]`` is the Cayley sign of ``e_a e_b``; the product mask is
    always ``a ^ b``.  ``lsign``/``xoridx`` give the left-multiplication
    layout ``L(u)[c, b] = u[c ^ b] * sign[c ^ b, b]`` used to turn repeated
    products by a fixed element into matrix-vector products.
    """

    __slots__ = ("sig", "n", "dim", "idx", "grades", "sign", "_xoridx", "_lsign")

    def __init__(self, sig: Signature):
        self.sig = sig
        self.n = sig.n
        self.dim = sig.dim
        self.idx = np.arange(self.dim, dtype=np.int64)
        pop = _popcounts(self.dim)
        self.grades = pop.astype(np.int64)

        a = self.idx[:, None]
        b = self.idx[None, :]
        # transpositions: pairs (i in a, j in b) with i > j
        par = np.zeros((self.dim, self.dim), dtype=np.int64)
        for k in range(1, self.n):
            par += pop[(a >> k) & b]
        # contracted generators with negative square
        qmask = ((self.dim - 1) >> sig.p) << sig.p
        par += pop[(a & b) & qmask]
        self.sign = np.where((par & 1).astype(bool), -1, 1).astype(np.int8)
        self._xoridx = None
        self._lsign = None

    def left_layout(self):
        if self._xoridx is None:
            xi = (self.idx[:, None] ^ self.idx[None, :]).astype(np.int32)
            self._xoridx = xi
            self._lsign = self.sign[xi, self.idx[None, :]]
        return self._xoridx, self._lsign


@lru_cache(maxsize=None)
def _tables(p: int, q: int) -> _Tables:
    return _Tables(Signature(p, q))


def blade_mul(a: int, b: int, sig: Signature) -> tuple[int, float]:
    """Product of two basis blades: returns ``(mask, sign)`` with mask a^b."""
    dim = sig.dim
    if not (0 <= a < dim and 0 <= b < dim):
        raise GradeRangeError(f"blade mask out of range for {sig}")
    swaps = 0
    aa = a >> 1
    while aa:
        swaps += (aa & b).bit_count()
        aa >>= 1
    qmask = ((dim - 1) >> sig.p) << sig.p
    swaps += ((a & b) & qmask).bit_count()
    return a ^ b, -1.0 if swaps & 1 else 1.0


class Multivector:
    """Immutable element of Cl(p,q): a dense blade-coefficient vector."""

    __slots__ = ("sig", "_c")

    def __init__(self, sig: Signature, coeffs, *, _share: bool = False):
        arr = np.asarray(coeffs, dtype=np.float64)
        if arr.shape != (sig.dim,):
            raise ValueError(
                f"expected {sig.dim} coefficients for {sig}, got shape {arr.shape}"
            )
        if not _share:
            arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "_c", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient vector, indexed by blade mask."""
        return self._c

    def scalar(self) -> float:
        return float(self._c[0])

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Multivector") -> "Multivector":
        return add(self, other)

    def __sub__(self, other: "Multivector") -> "Multivector":
        _check_same(self, other)
        return Multivector(self.sig, self._c - other._c, _share=True)

    def __neg__(self) -> "Multivector":
        return Multivector(self.sig, -self._c, _share=True)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return scale(float(other), self)

    def __rmul__(self, other):
        return scale(float(other), self)

    def __truediv__(self, other):
        return scale(1.0 / float(other), self)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Multivector)
            and self.sig == other.sig
            and bool(np.array_equal(self._c, other._c))
        )

    def __hash__(self):
        return hash((self.sig, self._c.tobytes()))

    def __repr__(self) -> str:
        return f"Multivector({self.sig}, {self!s})"

    def __str__(self) -> str:
        from .parsing import format_multivector

        return format_multivector(self)


def _check_same(u: Multivector, v: Multivector) -> None:
    if u.sig != v.sig:
        raise SignatureMismatchError(
            f"operands from different algebras: {u.sig} vs {v.sig}"
        )


# -- constructors ----------------------------------------------------------


def zero(sig: Signature) -> Multivector:
    return Multivector(sig, np.zeros(sig.dim), _share=True)


def scalar(sig: Signature, value: float) -> Multivector:
    c = np.zeros(sig.dim)
    c[0] = value
    return Multivector(sig, c, _share=True)


def basis_blade(sig: Signature, mask: int, coeff: float = 1.0) -> Multivector:
    if not 0 <= mask < sig.dim:
        raise GradeRangeError(f"blade mask {mask} out of range for {sig}")
    c = np.zeros(sig.dim)
    c[mask] = coeff
    return Multivector(sig, c, _share=True)


def blade(sig: Signature, *indices: int) -> Multivector:
    """Product of generators e_{i1}...e_{ik}; indices in any order, repeats
    contract through the metric (``blade(sig, 2, 1)`` is -e_12)."""
    mask, sgn = 0, 1.0
    for a in indices:
        sig.metric(a)  # validates the index
        mask, s = blade_mul(mask, 1 << (a - 1), sig)
        sgn *= s
    return basis_blade(sig, mask, sgn)


def from_coeffs(sig: Signature, coeffs) -> Multivector:
    return Multivector(sig, coeffs)


def random_multivector(
    sig: Signature, rng: np.random.Generator, integer: bool = False
) -> Multivector:
    """Random element: i.i.d. uniform on [-1, 1], or integers in {-2..2}."""
    if integer:
        c = rng.integers(-2, 3, size=sig.dim).astype(np.float64)
    else:
        c = rng.uniform(-1.0, 1.0, size=sig.dim)
    return Multivector(sig, c, _share=True)


# -- products --------------------------------------------------------------


def geometric_product(u: Multivector, v: Multivector) -> Multivector:
    """Bilinear extension of the blade product; skips zero rows of ``u``."""
    _check_same(u, v)
    t = _tables(u.sig.p, u.sig.q)
    uc, vc = u.coeffs, v.coeffs
    out = np.zeros(t.dim)
    for a in np.flatnonzero(uc):
        out[np.bitwise_xor(int(a), t.idx)] += uc[a] * (t.sign[a] * vc)
    return Multivector(u.sig, out, _share=True)


class LeftMul:
    """Left multiplication by a fixed element as a reusable linear operator.

    Building the dense operator costs one pass over the Cayley table, after
    which each product is a matrix-vector multiply; recursions that multiply
    by the same element many times (Faddeev-LeVerrier, power traces) use
    this instead of re-running the blade loop.
    """

    __slots__ = ("sig", "_mat", "_u", "_t")

    def __init__(self, u: Multivector):
        self.sig = u.sig
        self._t = _tables(u.sig.p, u.sig.q)
        if u.sig.n <= _DENSE_TABLE_MAX_N:
            xoridx, lsign = self._t.left_layout()
            self._mat = u.coeffs[xoridx] * lsign
            self._u = None
        else:
            self._mat = None
            self._u = u

    def on_coeffs(self, v: np.ndarray) -> np.ndarray:
        if self._mat is not None:
            return self._mat @ v
        t = self._t
        out = np.zeros(t.dim)
        uc = self._u.coeffs
        for a in np.flatnonzero(uc):
            out[np.bitwise_xor(int(a), t.idx)] += uc[a] * (t.sign[a] * v)
        return out

    def __call__(self, v: Multivector) -> Multivector:
        if v.sig != self.sig:
            raise SignatureMismatchError(
                f"operands from different algebras: {self.sig} vs {v.sig}"
            )
        return Multivector(self.sig, self.on_coeffs(v.coeffs), _share=True)


def add(u: Multivector, v: Multivector) -> Multivector:
    _check_same(u, v)
    return Multivector(u.sig, u.coeffs + v.coeffs, _share=True)


def scale(lam: float, u: Multivector) -> Multivector:
    return Multivector(u.sig, lam * u.coeffs, _share=True)


# -- grade structure --------------------------------------------------------


def grade_project(u: Multivector, k: int) -> Multivector:
    """Keep only the grade-k coefficients."""
    if not 0 <= k <= u.sig.n:
        raise GradeRangeError(f"grade {k} out of range for {u.sig}")
    t = _tables(u.sig.p, u.sig.q)
    out = np.where(t.grades == k, u.coeffs, 0.0)
    return Multivector(u.sig, out, _share=True)


def scalar_part(u: Multivector) -> float:
    """Grade-0 coefficient; invariant under cyclic permutation of factors."""
    return u.scalar()


def apply_grade_signs(u: Multivector, signs) -> Multivector:
    """Multiply every grade-k coefficient by signs[k]."""
    signs = np.asarray(signs, dtype=np.float64)
    if signs.shape != (u.sig.n + 1,):
        raise ValueError("need one sign per grade 0..n")
    t = _tables(u.sig.p, u.sig.q)
    return Multivector(u.sig, u.coeffs * signs[t.grades], _share=True)


def _grade_sign_vector(n: int, rule) -> np.ndarray:
    return np.array([rule(k) for k in range(n + 1)], dtype=np.float64)


def grade_involution(u: Multivector) -> Multivector:
    """Sign (-1)^k per grade; an automorphism."""
    return apply_grade_signs(
        u, _grade_sign_vector(u.sig.n, lambda k: -1.0 if k & 1 else 1.0)
    )


def reversion(u: Multivector) -> Multivector:
    """Sign (-1)^(k(k-1)/2) per grade; an anti-automorphism."""
    return apply_grade_signs(
        u,
        _grade_sign_vector(u.sig.n, lambda k: -1.0 if (k * (k - 1) // 2) & 1 else 1.0),
    )


def clifford_conjugation(u: Multivector) -> Multivector:
    """Composition of grade involution and reversion: (-1)^(k(k+1)/2)."""
    return apply_grade_signs(
        u,
        _grade_sign_vector(u.sig.n, lambda k: -1.0 if (k * (k + 1) // 2) & 1 else 1.0),
    )


def quaternion_type_project(u: Multivector, r: int) -> Multivector:
    """Sum of the grade projections with k = r (mod 4)."""
    if r not in (0, 1, 2, 3):
        raise GradeRangeError(f"quaternion type {r} not in 0..3")
    t = _tables(u.sig.p, u.sig.q)
    out = np.where(t.grades % 4 == r, u.coeffs, 0.0)
    return Multivector(u.sig, out, _share=True)


def center_project(u: Multivector) -> Multivector:
    """Projection onto the center: grade 0, plus grade n when n is odd."""
    n = u.sig.n
    if n % 2 == 0:
        return grade_project(u, 0)
    t = _tables(u.sig.p, u.sig.q)
    keep = (t.grades == 0) | (t.grades == n)
    return Multivector(u.sig, np.where(keep, u.coeffs, 0.0), _share=True)


def norm_inf(u: Multivector) -> float:
    return float(np.max(np.abs(u.coeffs)))
