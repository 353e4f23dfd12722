"""Complex matrix representation of Cl(p,q) used as ground truth.

The representation is built recursively for the all-positive signature and
then the generators with negative square are multiplied by i.  Dimension is
N = 2^floor((n+1)/2); for odd n the image is block-diagonal (the direct sum
of the two half-size representations embedded in one matrix).  Each
construction step re-validates the anticommutation relations, since a wrong
sign or power of i anywhere would silently corrupt every downstream number.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import Multivector, Signature
from .errors import InternalCheckError, SignatureMismatchError

_IMAGE_CACHE_MAX_N = 10


def rep_dimension_of(n: int) -> int:
    return 1 << ((n + 1) // 2)


@dataclass
class GeneratorRep:
    """The n generator images for one signature, plus cached blade images."""

    sig: Signature
    gens: list[np.ndarray]
    _images: np.ndarray | None = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return rep_dimension_of(self.sig.n)

    def blade_image(self, mask: int) -> np.ndarray:
        """Matrix of the basis blade with this mask (ascending generator
        order)."""
        if self._images is not None:
            return self._images[mask]
        m = np.eye(self.dim, dtype=complex)
        rest = mask
        while rest:
            low = rest & -rest
            m = m @ self.gens[low.bit_length() - 1]
            rest ^= low
        return m

    def images(self) -> np.ndarray:
        """(2^n, N, N) tensor of all blade images (cached for small n)."""
        if self._images is None:
            n, N = self.sig.n, self.dim
            imgs = np.empty((1 << n, N, N), dtype=complex)
            imgs[0] = np.eye(N)
            for mask in range(1, 1 << n):
                low = mask & -mask
                imgs[mask] = self.gens[low.bit_length() - 1] @ imgs[mask ^ low]
            if n <= _IMAGE_CACHE_MAX_N:
                self._images = imgs
            return imgs
        return self._images


def _validate_anticommutation(gens, metric, tol: float = 1e-14) -> None:
    N = gens[0].shape[0] if gens else 1
    eye2 = 2.0 * np.eye(N)
    for a, ga in enumerate(gens):
        for b in range(a, len(gens)):
            gb = gens[b]
            anti = ga @ gb + gb @ ga
            want = metric[a] * eye2 if a == b else 0.0
            if np.max(np.abs(anti - want)) > tol:
                raise InternalCheckError(
                    f"generator relations violated for pair ({a + 1},{b + 1})"
                )


def build_generators(sig: Signature) -> GeneratorRep:
    """Recursive construction: start from diag(1,-1); an even step appends
    the off-diagonal identity block, an odd step doubles every generator as
    diag(g, -g) and appends diag(cP, -cP) with P the product of the previous
    generators and c the power of i that makes the new generator square to
    +1 (validated below rather than trusted)."""
    n = sig.n
    if n == 0:
        return GeneratorRep(sig, [])
    gens = [np.diag([1.0 + 0.0j, -1.0 + 0.0j])]
    built = 1
    while built < n:
        if built % 2 == 1:
            half = gens[0].shape[0] // 2
            z = np.zeros((half, half), dtype=complex)
            eye = np.eye(half, dtype=complex)
            gens.append(np.block([[z, eye], [eye, z]]))
        else:
            prod = gens[0].copy()
            for g in gens[1:]:
                prod = prod @ g
            top = (1j ** (built // 2)) * prod
            doubled = []
            for g in gens:
                N = g.shape[0]
                d = np.zeros((2 * N, 2 * N), dtype=complex)
                d[:N, :N] = g
                d[N:, N:] = -g
                doubled.append(d)
            last = np.zeros_like(doubled[0])
            N = top.shape[0]
            last[:N, :N] = top
            last[N:, N:] = -top
            doubled.append(last)
            gens = doubled
            _validate_anticommutation(gens, [1] * len(gens))
        built += 1
    for a in range(sig.p, n):
        gens[a] = 1j * gens[a]
    metric = [1] * sig.p + [-1] * sig.q
    _validate_anticommutation(gens, metric)
    return GeneratorRep(sig, gens)


def represent(u: Multivector, rep: GeneratorRep) -> np.ndarray:
    """Linear, multiplicative image of a multivector: sum of coefficient
    times blade image."""
    if u.sig != rep.sig:
        raise SignatureMismatchError(
            f"representation built for {rep.sig}, element is in {u.sig}"
        )
    if u.sig.n <= _IMAGE_CACHE_MAX_N:
        return np.tensordot(u.coeffs, rep.images(), axes=1)
    N = rep.dim
    out = np.zeros((N, N), dtype=complex)
    for mask in np.flatnonzero(u.coeffs):
        out += u.coeffs[mask] * rep.blade_image(int(mask))
    return out


def mat_trace(m: np.ndarray) -> complex:
    return complex(np.trace(m))


def mat_det(m: np.ndarray) -> complex:
    """LU-with-partial-pivoting determinant (LAPACK via numpy)."""
    return complex(np.linalg.det(m))


def mat_charpoly(m: np.ndarray) -> np.ndarray:
    """Coefficients c_(1)..c_(N) with det(lambda I - M) =
    lambda^N - c_(1) lambda^(N-1) - ... - c_(N), via the matrix
    Faddeev-LeVerrier recursion."""
    N = m.shape[0]
    if m.shape != (N, N):
        raise ValueError("matrix must be square")
    c = np.zeros(N, dtype=complex)
    eye = np.eye(N, dtype=complex)
    mk = np.array(m, dtype=complex)
    for k in range(1, N + 1):
        ck = np.trace(mk) / k
        c[k - 1] = ck
        if k < N:
            mk = m @ (mk - ck * eye)
    return c


def mat_adjugate(m: np.ndarray) -> np.ndarray:
    """adj(M) with M adj(M) = det(M) I, from the penultimate
    Faddeev-LeVerrier term."""
    N = m.shape[0]
    if m.shape != (N, N):
        raise ValueError("matrix must be square")
    if N == 1:
        return np.ones((1, 1), dtype=complex)
    eye = np.eye(N, dtype=complex)
    mk = np.array(m, dtype=complex)
    for k in range(1, N):
        ck = np.trace(mk) / k
        if k == N - 1:
            return ck * eye - mk
        mk = m @ (mk - ck * eye)
    raise AssertionError("unreachable")
