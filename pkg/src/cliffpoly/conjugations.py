"""Grade-sign conjugations and scalar-part recovery schemes.

Every conjugation here multiplies each grade-k slice by a fixed sign, so an
operation is fully described by its length-(n+1) sign vector and all of them
commute.  The special family delta_1, ..., delta_m (m = floor(log2 n) + 1)
negates grade k exactly when bit (j-1) of k is set; delta_1 is the grade
involution and delta_2 the reversion.  Averaging an element over the 2^m
superpositions of this family recovers its scalar part, and several shorter
averages do the same in low dimensions -- those are the named schemes below.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import (
    Multivector,
    apply_grade_signs,
    scale,
    zero,
)
from .errors import GradeRangeError, UnsupportedDimensionError


def num_special_conjugations(n: int) -> int:
    """m = floor(log2 n) + 1 for n >= 1; the n = 0 algebra needs none."""
    return n.bit_length()


@dataclass(frozen=True)
class ConjugationSpec:
    """A per-grade sign vector; composition is the componentwise product."""

    signs: tuple[float, ...]

    def __post_init__(self):
        if any(s not in (1.0, -1.0) for s in self.signs):
            raise ValueError("conjugation signs must be +1 or -1")

    @property
    def n(self) -> int:
        return len(self.signs) - 1

    def apply(self, u: Multivector) -> Multivector:
        if u.sig.n != self.n:
            raise GradeRangeError(
                f"spec built for n={self.n}, element has n={u.sig.n}"
            )
        return apply_grade_signs(u, self.signs)

    def compose(self, other: "ConjugationSpec") -> "ConjugationSpec":
        if self.n != other.n:
            raise GradeRangeError("cannot compose specs for different n")
        return ConjugationSpec(
            tuple(a * b for a, b in zip(self.signs, other.signs))
        )

    __mul__ = compose

    @classmethod
    def identity(cls, n: int) -> "ConjugationSpec":
        return cls((1.0,) * (n + 1))

    @classmethod
    def from_rule(cls, n: int, negate) -> "ConjugationSpec":
        return cls(tuple(-1.0 if negate(k) else 1.0 for k in range(n + 1)))

    @classmethod
    def grade_involution(cls, n: int) -> "ConjugationSpec":
        return cls.from_rule(n, lambda k: k & 1)

    @classmethod
    def reversion(cls, n: int) -> "ConjugationSpec":
        return cls.from_rule(n, lambda k: (k * (k - 1) // 2) & 1)

    @classmethod
    def clifford_conjugation(cls, n: int) -> "ConjugationSpec":
        return cls.from_rule(n, lambda k: (k * (k + 1) // 2) & 1)

    @classmethod
    def delta(cls, n: int, j: int) -> "ConjugationSpec":
        m = num_special_conjugations(n)
        if not 1 <= j <= m:
            raise GradeRangeError(
                f"delta index {j} out of range 1..{m} for n={n}"
            )
        return cls.from_rule(n, lambda k: (k >> (j - 1)) & 1)

    @classmethod
    def delta_set(cls, n: int, js) -> "ConjugationSpec":
        """Superposition of delta_j over a set of indices (order irrelevant)."""
        mask = 0
        for j in js:
            m = num_special_conjugations(n)
            if not 1 <= j <= m:
                raise GradeRangeError(
                    f"delta index {j} out of range 1..{m} for n={n}"
                )
            mask |= 1 << (j - 1)
        return cls.from_rule(n, lambda k: (k & mask).bit_count() & 1)

    @classmethod
    def bar(cls, n: int) -> "ConjugationSpec":
        return cls.from_rule(n, lambda k: k >= 1)

    @classmethod
    def grade_negation(cls, n: int, ks) -> "ConjugationSpec":
        ks = set(ks)
        for k in ks:
            if not 0 <= k <= n:
                raise GradeRangeError(f"grade {k} out of range for n={n}")
        return cls.from_rule(n, lambda k: k in ks)


def delta_conj(u: Multivector, j: int) -> Multivector:
    """delta_j: negate grades whose bit (j-1) is set."""
    return ConjugationSpec.delta(u.sig.n, j).apply(u)


def delta_superpose(u: Multivector, js) -> Multivector:
    """Apply each delta_j in ``js`` once; the empty set is the identity."""
    return ConjugationSpec.delta_set(u.sig.n, js).apply(u)


def bar_conj(u: Multivector) -> Multivector:
    """Negate every grade >= 1 (generalised complex/quaternion conjugation)."""
    return ConjugationSpec.bar(u.sig.n).apply(u)


def grade_negate(u: Multivector, ks) -> Multivector:
    """U - 2<U>_k for every listed grade k."""
    return ConjugationSpec.grade_negation(u.sig.n, ks).apply(u)


def bar_via_delta(u: Multivector) -> Multivector:
    """Bar conjugation assembled from the delta family only.

    ((1 - 2^(m-1)) U + sum over nonempty subsets of U^{delta_J}) / 2^(m-1);
    kept as a checkable realization, the direct sign flip is the fast path.
    """
    n = u.sig.n
    if n < 1:
        raise UnsupportedDimensionError("bar_via_delta needs n >= 1")
    m = num_special_conjugations(n)
    acc = scale(float(1 - (1 << (m - 1))), u)
    for size in range(1, m + 1):
        for js in combinations(range(1, m + 1), size):
            acc = acc + delta_superpose(u, js)
    return scale(1.0 / (1 << (m - 1)), acc)


# -- scalar-part and center schemes -----------------------------------------
#
# Each variant is a list of (weight, delta-index-subset) pairs: every term of
# every scheme is a superposition of delta operations (the identity is the
# empty subset, hat is {1}, tilde {2}, the Clifford conjugation {1,2}, and
# {3} applies the grade-bit-2 negation written as a trailing triangle).

_SCHEMES: dict[str, tuple[frozenset, tuple[tuple[tuple[float, frozenset], ...], ...]]] = {
    "r1": (
        frozenset({1}),
        (
            ((0.5, frozenset()), (0.5, frozenset({1}))),
        ),
    ),
    "r2": (
        frozenset({2}),
        (
            ((0.5, frozenset()), (0.5, frozenset({1, 2}))),
            ((0.5, frozenset({1})), (0.5, frozenset({2}))),
        ),
    ),
    "r3": (
        frozenset({2, 3}),
        (
            (
                (0.25, frozenset()),
                (0.25, frozenset({1})),
                (0.25, frozenset({2})),
                (0.25, frozenset({1, 2})),
            ),
        ),
    ),
    "t1": (
        frozenset({4, 5, 6}),
        (
            (
                (0.25, frozenset()),
                (0.25, frozenset({1, 2})),
                (0.25, frozenset({1, 3})),
                (0.25, frozenset({2, 3})),
            ),
            (
                (0.25, frozenset({1})),
                (0.25, frozenset({2})),
                (0.25, frozenset({3})),
                (0.25, frozenset({1, 2, 3})),
            ),
        ),
    ),
    "s45": (
        frozenset({4, 5}),
        (
            (
                (0.25, frozenset()),
                (0.25, frozenset({1})),
                (0.25, frozenset({2, 3})),
                (0.25, frozenset({1, 2, 3})),
            ),
            (
                (0.25, frozenset({2})),
                (0.25, frozenset({1, 2})),
                (0.25, frozenset({3})),
                (0.25, frozenset({1, 3})),
            ),
        ),
    ),
    "t2": (
        frozenset({4}),
        (
            (
                (0.25, frozenset()),
                (0.25, frozenset({2})),
                (0.25, frozenset({1, 3})),
                (0.25, frozenset({1, 2, 3})),
            ),
            (
                (0.25, frozenset({1})),
                (0.25, frozenset({1, 2})),
                (0.25, frozenset({3})),
                (0.25, frozenset({2, 3})),
            ),
        ),
    ),
}

SCALAR_SCHEMES: tuple[str, ...] = ("general", "r1", "r2", "r3", "t1", "s45", "t2")

# One averaging scheme per odd dimension where the center is reachable this
# way.  (Mirroring each line with hat/tilde swapped onto the identity slot,
# as the scalar schemes do, flips the sign of the grade-n part instead of
# keeping it, so only these combinations project onto the center.)
_CENTER_SCHEMES: dict[int, tuple[tuple[tuple[float, frozenset], ...], ...]] = {
    3: (
        ((0.5, frozenset()), (0.5, frozenset({1, 2}))),
    ),
    5: (
        (
            (0.25, frozenset()),
            (0.25, frozenset({2})),
            (0.25, frozenset({1, 3})),
            (0.25, frozenset({1, 2, 3})),
        ),
    ),
    7: (
        (
            (0.25, frozenset()),
            (0.25, frozenset({1, 2})),
            (0.25, frozenset({1, 3})),
            (0.25, frozenset({2, 3})),
        ),
    ),
}


def scheme_validity(scheme: str) -> str:
    """Human-readable validity range of a named scalar scheme."""
    if scheme == "general":
        return "any n"
    dims, _ = _SCHEMES[scheme]
    return "n in {" + ",".join(str(d) for d in sorted(dims)) + "}"


def _eval_terms(u: Multivector, terms) -> Multivector:
    n = u.sig.n
    acc = zero(u.sig)
    for w, js in terms:
        acc = acc + scale(w, ConjugationSpec.delta_set(n, js).apply(u))
    return acc


def scheme_variants(scheme: str, n: int):
    """All (weight, delta-subset) term lists of a scheme at dimension n."""
    scheme = scheme.lower()
    if scheme == "general":
        if n == 0:
            return (((1.0, frozenset()),),)
        m = num_special_conjugations(n)
        w = 1.0 / (1 << m)
        terms = tuple(
            (w, frozenset(js))
            for size in range(m + 1)
            for js in combinations(range(1, m + 1), size)
        )
        return (terms,)
    if scheme not in _SCHEMES:
        raise ValueError(f"unknown scalar scheme {scheme!r}")
    dims, variants = _SCHEMES[scheme]
    if n not in dims:
        raise UnsupportedDimensionError(
            f"scheme {scheme!r} is valid for {scheme_validity(scheme)}, not n={n}"
        )
    return variants


def scalar_part_via_conj(u: Multivector, scheme: str = "general") -> float:
    """Recover <U>_0 through the scheme's conjugation average."""
    variants = scheme_variants(scheme, u.sig.n)
    return _eval_terms(u, variants[0]).scalar()


def center_part_via_conj(u: Multivector, variant: int = 0) -> Multivector:
    """Projection onto the center via conjugations; defined for n in {3,5,7}."""
    n = u.sig.n
    if n not in _CENTER_SCHEMES:
        raise UnsupportedDimensionError(
            f"center conjugation scheme defined for n in {{3,5,7}}, not n={n}"
        )
    return _eval_terms(u, _CENTER_SCHEMES[n][variant])


def center_scheme_variants(n: int):
    if n not in _CENTER_SCHEMES:
        raise UnsupportedDimensionError(
            f"center conjugation scheme defined for n in {{3,5,7}}, not n={n}"
        )
    return _CENTER_SCHEMES[n]


__all__ = [
    "ConjugationSpec",
    "num_special_conjugations",
    "delta_conj",
    "delta_superpose",
    "bar_conj",
    "bar_via_delta",
    "grade_negate",
    "scalar_part_via_conj",
    "center_part_via_conj",
    "scheme_variants",
    "center_scheme_variants",
    "scheme_validity",
    "SCALAR_SCHEMES",
]
