"""Characteristic polynomial, determinant, adjugate, and inverse of a
multivector, computed entirely inside the algebra.

The production path is the Faddeev-LeVerrier recursion

    U_(1) = U,   C_(k) = (N/k) <U_(k)>_0,   U_(k+1) = U (U_(k) - C_(k)),

with N = 2^floor((n+1)/2), which yields every coefficient of

    det(lambda e - U) = lambda^N - C_(1) lambda^(N-1) - ... - C_(N),

the determinant -C_(N), and the adjugate C_(N-1) e - U_(N-1) in N products.
Alternative routes (power traces through complete Bell polynomials, the
closed conjugation-product forms for n <= 6, the bar-conjugation forms for
n <= 5, and the fully explicit coefficients for n <= 4) are exposed as
cross-checks and follow identical conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .algebra import (
    LeftMul,
    Multivector,
    Signature,
    clifford_conjugation,
    geometric_product,
    grade_involution,
    norm_inf,
    reversion,
    scalar,
    scale,
)
from .bell import bell_complete_sequence
from .conjugations import ConjugationSpec, bar_conj
from .errors import (
    InternalCheckError,
    NotInvertibleError,
    UnsupportedDimensionError,
)

# |non-scalar part| <= SCALAR_PURITY_TOL * scale for products that must be
# scalar; violations indicate a broken formula, not roundoff.
SCALAR_PURITY_TOL = 1e-9
_FL_PURITY_TOL = 1e-6

# inverse() refuses when |det| <= INVERTIBILITY_RTOL * max(1, |U|_inf)^N
INVERTIBILITY_RTOL = 1e-10


def rep_dimension(sig: Signature) -> int:
    """Dimension N = 2^floor((n+1)/2) of the matrix representation; also the
    degree of the characteristic polynomial."""
    return 1 << ((sig.n + 1) // 2)


@dataclass(frozen=True)
class CharPoly:
    """Coefficients C_(1)..C_(N) plus determinant and adjugate."""

    sig: Signature
    N: int
    C: np.ndarray
    det: float
    adj: Multivector


@dataclass(frozen=True)
class PowerTraces:
    """S_(k) = (-1)^(k-1) N (k-1)! <U^k>_0 for k = 1..N."""

    sig: Signature
    N: int
    S: np.ndarray


def _scalar_of(c: np.ndarray, what: str, tol: float = SCALAR_PURITY_TOL) -> float:
    scale_ = max(1.0, float(np.max(np.abs(c))))
    residue = float(np.max(np.abs(c[1:]))) if c.shape[0] > 1 else 0.0
    if residue > tol * scale_:
        raise InternalCheckError(
            f"{what} should be scalar; non-scalar residue {residue:.3e} "
            f"exceeds {tol:.1e} x scale {scale_:.3e}"
        )
    return float(c[0])


def faddeev_leverrier(u: Multivector) -> CharPoly:
    """All characteristic coefficients, det, and adjugate in N products."""
    sig = u.sig
    N = rep_dimension(sig)
    if N == 1:
        u0 = u.scalar()
        return CharPoly(sig, 1, np.array([u0]), u0, scalar(sig, 1.0))
    lmul = LeftMul(u)
    C = np.zeros(N)
    uk = u.coeffs.copy()
    adj_coeffs = None
    peak = 1.0
    for k in range(1, N):
        C[k - 1] = (N / k) * uk[0]
        if k == N - 1:
            adj_coeffs = -uk
            adj_coeffs[0] += C[k - 1]
        uk = uk.copy()
        uk[0] -= C[k - 1]
        uk = lmul.on_coeffs(uk)
        peak = max(peak, float(np.max(np.abs(uk))))
    C[N - 1] = uk[0]
    _scalar_of(uk / peak, "final Faddeev-LeVerrier iterate", _FL_PURITY_TOL)
    adj = Multivector(sig, adj_coeffs, _share=True)
    return CharPoly(sig, N, C, -C[N - 1] + 0.0, adj)


def _power_scalar_parts(u: Multivector, N: int) -> np.ndarray:
    lmul = LeftMul(u)
    t = np.zeros(N)
    c = u.coeffs
    t[0] = c[0]
    for k in range(2, N + 1):
        c = lmul.on_coeffs(c)
        t[k - 1] = c[0]
    return t


def power_traces(u: Multivector) -> PowerTraces:
    N = rep_dimension(u.sig)
    t = _power_scalar_parts(u, N)
    S = np.array(
        [(-1.0) ** (k - 1) * N * factorial(k - 1) * t[k - 1] for k in range(1, N + 1)]
    )
    return PowerTraces(u.sig, N, S)


def charpoly_via_bell(u: Multivector) -> CharPoly:
    """Explicit coefficients C_(k) = (-1)^(k+1) B_k(S_(1)..S_(k)) / k!.

    Internally the Bell recurrence is run on the scaled values b_k = B_k/k!,
    in which the factorials inside S_(k) cancel exactly; this keeps the path
    stable out to N = 16 without forming any large factorial.
    """
    sig = u.sig
    N = rep_dimension(sig)
    if N == 1:
        u0 = u.scalar()
        return CharPoly(sig, 1, np.array([u0]), u0, scalar(sig, 1.0))
    t = _power_scalar_parts(u, N)
    y = np.array([(-1.0) ** (j - 1) * N * t[j - 1] for j in range(1, N + 1)])
    b = np.zeros(N + 1)
    b[0] = 1.0
    for k in range(1, N + 1):
        b[k] = sum(y[j - 1] * b[k - j] for j in range(1, k + 1)) / k
    C = np.array([(-1.0) ** (k + 1) * b[k] for k in range(1, N + 1)])
    det = b[N]
    # adjugate: sum_k (-1)^(k+1) b_k U^(N-1-k), accumulated Horner-style
    lmul = LeftMul(u)
    res = np.zeros(sig.dim)
    res[0] = -b[0]
    for k in range(1, N):
        res = lmul.on_coeffs(res)
        res[0] += (-1.0) ** (k + 1) * b[k]
    adj = Multivector(sig, res, _share=True)
    return CharPoly(sig, N, C, det, adj)


# -- closed conjugation-product forms ---------------------------------------


def _tri(u: Multivector) -> Multivector:
    """Negate grades 4..7 (mod 8); identity when no such grade exists."""
    if u.sig.n < 4:
        return u
    return ConjugationSpec.delta(u.sig.n, 3).apply(u)


def det_closed_form(u: Multivector, n6_form: str = "delta") -> float:
    """Determinant as a single conjugation-product expression (n <= 6).

    For n = 6 two equivalent expressions exist: ``delta`` combines three
    conjugations, ``bar`` uses the bar conjugation only; they agree
    numerically and either may be requested.
    """
    sig = u.sig
    n = sig.n
    if n > 6:
        raise UnsupportedDimensionError(
            f"closed determinant forms cover n <= 6, got n={n}"
        )
    if n == 0:
        return u.scalar()
    if n == 1:
        return _scalar_of(
            geometric_product(u, grade_involution(u)).coeffs, "n=1 determinant form"
        )
    if n == 2:
        return _scalar_of(
            geometric_product(u, clifford_conjugation(u)).coeffs,
            "n=2 determinant form",
        )
    h = geometric_product(u, reversion(u))
    hh = grade_involution(h)
    if n == 3:
        return _scalar_of(geometric_product(h, hh).coeffs, "n=3 determinant form")
    if n == 4:
        return _scalar_of(
            geometric_product(h, _tri(hh)).coeffs, "n=4 determinant form"
        )
    if n == 5:
        y = geometric_product(h, _tri(hh))
        return _scalar_of(
            geometric_product(y, _tri(y)).coeffs, "n=5 determinant form"
        )
    if n6_form == "delta":
        a = geometric_product(geometric_product(h, hh), _tri(geometric_product(hh, h)))
        ht, hht = _tri(h), _tri(hh)
        b = geometric_product(
            h, _tri(geometric_product(hht, _tri(geometric_product(hht, ht))))
        )
        value = add_scaled(a, b)
    elif n6_form == "bar":
        h2 = geometric_product(h, h)
        c = geometric_product(h2, bar_conj(h2))
        hb = bar_conj(h)
        d = geometric_product(
            h, bar_conj(geometric_product(hb, bar_conj(geometric_product(hb, hb))))
        )
        value = add_scaled(c, d)
    else:
        raise ValueError(f"unknown n=6 form {n6_form!r} (expected 'delta' or 'bar')")
    return _scalar_of(value.coeffs, f"n=6 determinant form ({n6_form})")


def add_scaled(first: Multivector, second: Multivector) -> Multivector:
    """(first + 2 second) / 3 -- the weighting both n=6 forms share."""
    return scale(1.0 / 3.0, first + scale(2.0, second))


# the sixteen equal orderings of {U, hat U, tilde U, hat-tilde U} at n = 3,
# written as index sequences into (U, hat, tilde, cliff)
_N3_ORDERINGS: tuple[tuple[int, int, int, int], ...] = (
    (0, 2, 1, 3), (0, 3, 1, 2), (0, 1, 2, 3), (0, 3, 2, 1),
    (1, 2, 0, 3), (1, 2, 3, 0), (1, 0, 3, 2), (1, 3, 0, 2),
    (2, 1, 0, 3), (2, 1, 3, 0), (2, 0, 3, 1), (2, 3, 0, 1),
    (3, 0, 1, 2), (3, 0, 2, 1), (3, 1, 2, 0), (3, 2, 1, 0),
)

# the remaining eight orderings, which are not scalar on their own
_N3_NONSCALAR_ORDERINGS: tuple[tuple[int, int, int, int], ...] = (
    (0, 2, 3, 1), (2, 0, 1, 3), (0, 1, 3, 2), (1, 0, 2, 3),
    (3, 2, 0, 1), (2, 3, 1, 0), (1, 3, 2, 0), (3, 1, 0, 2),
)


def _n3_factors(u: Multivector) -> tuple[Multivector, ...]:
    return (u, grade_involution(u), reversion(u), clifford_conjugation(u))


def _ordered_product(factors, order) -> Multivector:
    acc = factors[order[0]]
    for i in order[1:]:
        acc = geometric_product(acc, factors[i])
    return acc


def det_closed_form_variants_n3(u: Multivector) -> np.ndarray:
    """All sixteen equal scalar orderings of the n=3 determinant product."""
    if u.sig.n != 3:
        raise UnsupportedDimensionError("the sixteen-ordering family is n=3 only")
    factors = _n3_factors(u)
    return np.array(
        [
            _scalar_of(_ordered_product(factors, order).coeffs, f"n=3 ordering {order}")
            for order in _N3_ORDERINGS
        ]
    )


def bar_form_det(u: Multivector) -> float:
    """Determinant through the bar conjugation (n <= 5):
    J for n <= 2; J bar(J) for n = 3, 4; K bar(K) with K = J hat(J) for
    n = 5, where J = U times its Clifford conjugate."""
    n = u.sig.n
    if n > 5:
        raise UnsupportedDimensionError(f"bar determinant forms cover n <= 5, got n={n}")
    if n == 0:
        return u.scalar()
    j = geometric_product(u, clifford_conjugation(u))
    if n <= 2:
        return _scalar_of(j.coeffs, f"n={n} bar determinant form")
    if n <= 4:
        return _scalar_of(
            geometric_product(j, bar_conj(j)).coeffs, f"n={n} bar determinant form"
        )
    k = geometric_product(j, grade_involution(j))
    return _scalar_of(
        geometric_product(k, bar_conj(k)).coeffs, "n=5 bar determinant form"
    )


def _adjugate_closed(u: Multivector) -> Multivector:
    sig = u.sig
    n = sig.n
    if n > 6:
        raise UnsupportedDimensionError(f"closed adjugate forms cover n <= 6, got n={n}")
    if n == 0:
        return scalar(sig, 1.0)
    if n == 1:
        return grade_involution(u)
    if n == 2:
        return clifford_conjugation(u)
    rev = reversion(u)
    h = geometric_product(u, rev)
    hh = grade_involution(h)
    if n == 3:
        return geometric_product(rev, hh)
    if n == 4:
        return geometric_product(rev, _tri(hh))
    if n == 5:
        return geometric_product(
            geometric_product(rev, _tri(hh)), _tri(geometric_product(h, _tri(hh)))
        )
    fa = geometric_product(rev, geometric_product(hh, _tri(geometric_product(hh, h))))
    ht, hht = _tri(h), _tri(hh)
    fb = geometric_product(
        rev, _tri(geometric_product(hht, _tri(geometric_product(hht, ht))))
    )
    return add_scaled(fa, fb)


def adjugate(u: Multivector, method: str = "fl") -> Multivector:
    """Adjugate with U adj(U) = adj(U) U = Det(U) e."""
    if method == "fl":
        return faddeev_leverrier(u).adj
    if method == "bell":
        return charpoly_via_bell(u).adj
    if method == "closed":
        return _adjugate_closed(u)
    raise ValueError(f"unknown adjugate method {method!r}")


def determinant(u: Multivector, method: str = "fl", n6_form: str = "delta") -> float:
    if method == "fl":
        return faddeev_leverrier(u).det
    if method == "bell":
        return charpoly_via_bell(u).det
    if method == "closed":
        return det_closed_form(u, n6_form)
    if method == "bar":
        return bar_form_det(u)
    raise ValueError(f"unknown determinant method {method!r}")


def inverse(
    u: Multivector,
    method: str = "fl",
    rel_tol: float = INVERTIBILITY_RTOL,
) -> Multivector:
    """U^(-1) = Adj(U)/Det(U); refuses scale-aware near-zero determinants."""
    N = rep_dimension(u.sig)
    if method == "fl":
        cp = faddeev_leverrier(u)
        det, adj = cp.det, cp.adj
    elif method == "bell":
        cp = charpoly_via_bell(u)
        det, adj = cp.det, cp.adj
    elif method == "closed":
        det, adj = det_closed_form(u), _adjugate_closed(u)
    else:
        raise ValueError(f"unknown inverse method {method!r}")
    threshold = rel_tol * max(1.0, norm_inf(u)) ** N
    if abs(det) <= threshold:
        raise NotInvertibleError(
            f"element is not invertible: det = {det:.6e} "
            f"(threshold {threshold:.1e})",
            det,
        )
    return scale(1.0 / det, adj)


def charpoly_eval(cp: CharPoly, lam: float) -> float:
    """phi_U(lambda) = lambda^N - sum C_(k) lambda^(N-k)."""
    acc = 1.0
    for k in range(cp.N):
        acc = acc * lam - cp.C[k]
    return float(acc)


def cayley_hamilton_residual(u: Multivector) -> Multivector:
    """phi_U(U), which vanishes up to roundoff."""
    cp = faddeev_leverrier(u)
    if cp.N == 1:
        return Multivector(u.sig, u.coeffs - cp.C[0] * _unit(u.sig), _share=True)
    lmul = LeftMul(u)
    res = u.coeffs.copy()
    res[0] -= cp.C[0]
    for k in range(2, cp.N + 1):
        res = lmul.on_coeffs(res)
        res[0] -= cp.C[k - 1]
    return Multivector(u.sig, res, _share=True)


def _unit(sig: Signature) -> np.ndarray:
    c = np.zeros(sig.dim)
    c[0] = 1.0
    return c


def explicit_coeffs_low_dim(u: Multivector) -> CharPoly:
    """Fully explicit coefficients for n <= 4, written with at most the
    grade involution, the reversion, their composition, and one extra
    conjugation; agrees with the recursion coefficient by coefficient."""
    sig = u.sig
    n = sig.n
    if n > 4:
        raise UnsupportedDimensionError(
            f"explicit coefficient formulas cover n <= 4, got n={n}"
        )
    if n == 0:
        u0 = u.scalar()
        return CharPoly(sig, 1, np.array([u0]), u0, scalar(sig, 1.0))
    gi = grade_involution(u)
    cc = clifford_conjugation(u)
    if n <= 2:
        conj = gi if n == 1 else cc
        c1 = _scalar_of((u + conj).coeffs, "n<=2 C1")
        det = _scalar_of(geometric_product(u, conj).coeffs, "n<=2 det")
        C = np.array([c1, -det])
        return CharPoly(sig, 2, C, det, conj)
    rev = reversion(u)
    if n == 3:
        c1 = _scalar_of((u + gi + rev + cc).coeffs, "n=3 C1")
        pairs = (
            geometric_product(u, rev)
            + geometric_product(u, gi)
            + geometric_product(u, cc)
            + geometric_product(gi, cc)
            + geometric_product(rev, cc)
            + geometric_product(gi, rev)
        )
        c2 = -_scalar_of(pairs.coeffs, "n=3 C2")
        triples = (
            geometric_product(geometric_product(u, gi), cc)
            + geometric_product(geometric_product(u, rev), cc)
            + geometric_product(geometric_product(u, gi), rev)
            + geometric_product(geometric_product(gi, rev), cc)
        )
        c3 = _scalar_of(triples.coeffs, "n=3 C3")
        adj = geometric_product(geometric_product(gi, rev), cc)
        det = _scalar_of(geometric_product(u, adj).coeffs, "n=3 det")
        C = np.array([c1, c2, c3, -det])
        return CharPoly(sig, 4, C, det, adj)
    git = _tri(gi)
    revt = _tri(rev)
    girev_t = _tri(geometric_product(gi, rev))
    c1 = _scalar_of((u + cc + git + revt).coeffs, "n=4 C1")
    pairs = (
        geometric_product(u, cc)
        + geometric_product(u, git)
        + geometric_product(u, revt)
        + geometric_product(cc, git)
        + geometric_product(cc, revt)
        + girev_t
    )
    c2 = -_scalar_of(pairs.coeffs, "n=4 C2")
    triples = (
        geometric_product(geometric_product(u, cc), git)
        + geometric_product(geometric_product(u, cc), revt)
        + geometric_product(u, girev_t)
        + geometric_product(cc, girev_t)
    )
    c3 = _scalar_of(triples.coeffs, "n=4 C3")
    adj = geometric_product(cc, girev_t)
    det = _scalar_of(geometric_product(u, adj).coeffs, "n=4 det")
    C = np.array([c1, c2, c3, -det])
    return CharPoly(sig, 4, C, det, adj)
