"""Complete Bell polynomials B_k(x_1, ..., x_k).

Three independent routes are provided: the binomial recurrence (production
path), the sum over integer partitions, and the k x k determinant with -1 on
the subdiagonal.  The latter two exist so the recurrence can be checked
against definitions that share no code with it.
"""

from __future__ import annotations

from math import comb, factorial

import numpy as np


def bell_complete_sequence(xs) -> list[float]:
    """[B_0, B_1, ..., B_k] for xs = (x_1, ..., x_k), via the recurrence
    B_{k+1} = sum_i C(k, i) B_{k-i} x_{i+1}."""
    xs = [float(x) for x in xs]
    b = [1.0]
    for k in range(len(xs)):
        b.append(sum(comb(k, i) * b[k - i] * xs[i] for i in range(k + 1)))
    return b


def bell_complete(xs) -> float:
    """B_k(x_1, ..., x_k); B_0 = 1 for the empty argument list."""
    return bell_complete_sequence(xs)[-1]


def _partitions(k: int, max_part: int | None = None):
    """Yield partitions of k as {part_size: multiplicity} dicts."""
    if max_part is None:
        max_part = k
    if k == 0:
        yield {}
        return
    for part in range(min(k, max_part), 0, -1):
        for rest in _partitions(k - part, part):
            out = dict(rest)
            out[part] = out.get(part, 0) + 1
            yield out


def bell_complete_partition_sum(xs) -> float:
    """B_k as the sum over partitions of k of
    k! / prod(m_t! (t!)^m_t) * prod(x_t^m_t)."""
    xs = [float(x) for x in xs]
    k = len(xs)
    if k == 0:
        return 1.0
    total = 0.0
    for part in _partitions(k):
        coeff = factorial(k)
        term = 1.0
        for t, mult in part.items():
            coeff //= factorial(mult) * factorial(t) ** mult
            term *= xs[t - 1] ** mult
        total += coeff * term
    return total


def bell_complete_determinant(xs) -> float:
    """B_k as the determinant of the k x k matrix with rows
    (0, ..., 0, -1, x_1, C(k-1-i, 1) x_2, C(k-1-i, 2) x_3, ...)."""
    xs = [float(x) for x in xs]
    k = len(xs)
    if k == 0:
        return 1.0
    m = np.zeros((k, k))
    for i in range(k):
        if i > 0:
            m[i, i - 1] = -1.0
        for j in range(i, k):
            m[i, j] = comb(k - 1 - i, j - i) * xs[j - i]
    return float(np.linalg.det(m))
