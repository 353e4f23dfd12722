"""Shared helpers: an independent blade-product oracle and tolerance utils.

The oracle multiplies blades as index lists brought to canonical order by
bubble sort, contracting equal adjacent indices through the metric.  It
shares no code with the library's swap-count/Cayley-table path, so the two
can legitimately check each other.
"""

from __future__ import annotations

import numpy as np
import pytest

from cliffpoly import Multivector, Signature, norm_inf


def all_signatures(max_n: int, min_n: int = 0):
    for n in range(min_n, max_n + 1):
        for p in range(n + 1):
            yield Signature(p, n - p)


def oracle_blade_mul(a_mask: int, b_mask: int, sig: Signature):
    """(mask, sign) of e_A e_B via bubble-sort canonicalization."""
    seq = [i + 1 for i in range(sig.n) if a_mask >> i & 1]
    seq += [i + 1 for i in range(sig.n) if b_mask >> i & 1]
    sign = 1
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(seq) - 1:
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                changed = True
                i += 1
            elif seq[i] == seq[i + 1]:
                sign *= 1 if seq[i] <= sig.p else -1
                del seq[i : i + 2]
                changed = True
                i = max(i - 1, 0)
            else:
                i += 1
    mask = 0
    for a in seq:
        mask |= 1 << (a - 1)
    return mask, float(sign)


def oracle_product(u: Multivector, v: Multivector) -> Multivector:
    """Brute-force double loop over all blade pairs."""
    sig = u.sig
    out = np.zeros(sig.dim)
    uc, vc = u.coeffs, v.coeffs
    for a in range(sig.dim):
        if uc[a] == 0.0:
            continue
        for b in range(sig.dim):
            if vc[b] == 0.0:
                continue
            mask, sign = oracle_blade_mul(a, b, sig)
            out[mask] += uc[a] * sign * vc[b]
    return Multivector(sig, out)


def rel_err(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def mv_rel_err(a: Multivector, b: Multivector) -> float:
    diff = float(np.max(np.abs(a.coeffs - b.coeffs)))
    return diff / max(1.0, norm_inf(a), norm_inf(b))


def assert_close(a: float, b: float, tol: float, what: str = ""):
    err = rel_err(a, b)
    assert err <= tol, f"{what}: {a} vs {b} (rel err {err:.3e} > {tol:.1e})"


def assert_mv_close(a: Multivector, b: Multivector, tol: float, what: str = ""):
    err = mv_rel_err(a, b)
    assert err <= tol, f"{what}: rel err {err:.3e} > {tol:.1e}"


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
