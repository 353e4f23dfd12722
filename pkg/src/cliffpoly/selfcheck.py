"""Randomized self-check suites over one signature.

Each property is fuzzed with seeded random elements; the report carries the
maximum observed error per property and, on failure, the offending element
so a run can be reproduced from the seed alone.  The quaternion types form
a Z2 x Z2 group under XOR, with commutators landing in type (k ^ l ^ 2) and
anticommutators in type (k ^ l); that is what the grading check asserts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import charpoly as cp
from .algebra import (
    Multivector,
    Signature,
    center_project,
    clifford_conjugation,
    geometric_product,
    grade_involution,
    norm_inf,
    quaternion_type_project,
    random_multivector,
    reversion,
    scalar,
    scalar_part,
)
from .conjugations import (
    ConjugationSpec,
    bar_conj,
    bar_via_delta,
    center_part_via_conj,
    center_scheme_variants,
    scheme_variants,
    SCALAR_SCHEMES,
)
from .errors import NotInvertibleError, UnsupportedDimensionError
from .matrix_rep import build_generators, mat_det, mat_trace, represent

SUITES = ("all", "oracle", "identities", "paths")


@dataclass
class CheckResult:
    name: str
    tol: float
    max_error: float = 0.0
    passed: bool = True
    worst: str | None = None

    def record(self, err: float, element: Multivector | None) -> None:
        if err > self.max_error:
            self.max_error = err
            if err > self.tol:
                self.passed = False
                self.worst = str(element) if element is not None else None

    def as_dict(self) -> dict:
        out = {
            "name": self.name,
            "max_error": self.max_error,
            "tol": self.tol,
            "pass": self.passed,
        }
        if self.worst is not None:
            out["offending_element"] = self.worst
        return out


def _rel(a: float, b: float) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))


def _mv_rel(a: Multivector, b: Multivector) -> float:
    diff = float(np.max(np.abs(a.coeffs - b.coeffs)))
    return diff / max(1.0, norm_inf(a), norm_inf(b))


def _tri(u: Multivector) -> Multivector:
    if u.sig.n < 4:
        return u
    return ConjugationSpec.delta(u.sig.n, 3).apply(u)


def _oracle_checks(sig, draws, results):
    n = sig.n
    rep = build_generators(sig)
    anti = CheckResult("generator_anticommutation", 1e-14)
    eye2 = 2.0 * np.eye(rep.dim)
    worst = 0.0
    for a in range(n):
        for b in range(a, n):
            ga, gb = rep.gens[a], rep.gens[b]
            want = (sig.metric(a + 1) * eye2) if a == b else 0.0
            worst = max(worst, float(np.max(np.abs(ga @ gb + gb @ ga - want))))
    anti.record(worst, None)
    results.append(anti)

    trace = CheckResult("trace_matches_scalar_part", 1e-12)
    mult = CheckResult("represent_multiplicative", 1e-10)
    det = CheckResult(
        "determinant_matches_matrix_oracle", 1e-8 if n <= 6 else 1e-6
    )
    for u, v in draws:
        mu = represent(u, rep)
        tr = mat_trace(mu) / rep.dim
        trace.record(max(abs(tr.imag), abs(tr.real - scalar_part(u))), u)
        mv = represent(v, rep)
        muv = represent(geometric_product(u, v), rep)
        scale_ = max(1.0, float(np.max(np.abs(muv))))
        mult.record(float(np.max(np.abs(muv - mu @ mv))) / scale_, u)
        md = mat_det(mu)
        fl = cp.faddeev_leverrier(u).det
        det.record(max(_rel(fl, md.real), abs(md.imag) / max(1.0, abs(md))), u)
    results.extend([trace, mult, det])


def _identity_checks(sig, draws, results):
    n = sig.n
    squares = CheckResult("involution_squares", 0.0)
    antiauto = CheckResult("product_anti_automorphism", 1e-12)
    barprod = CheckResult("bar_product_identity", 1e-10)
    hj = CheckResult("quaternion_membership_hj", 1e-10)
    grading = CheckResult("z2z2_grading", 1e-10)
    schemes = CheckResult("scalar_schemes", 1e-12)
    t5 = CheckResult("triangle_identities_t5", 1e-10)
    t6 = CheckResult("triangle_identities_t6", 1e-10)
    bardelta = CheckResult("bar_via_delta_matches", 1e-12)
    center = CheckResult("center_schemes", 1e-12)

    rng_types = np.random.default_rng(abs(hash((sig.p, sig.q))) % (2**32))
    for u, v in draws:
        for op in (grade_involution, reversion, clifford_conjugation):
            squares.record(_mv_rel(op(op(u)), u), u)
        uv = geometric_product(u, v)
        antiauto.record(
            _mv_rel(reversion(uv), geometric_product(reversion(v), reversion(u))), u
        )
        antiauto.record(
            _mv_rel(
                grade_involution(uv),
                geometric_product(grade_involution(u), grade_involution(v)),
            ),
            u,
        )
        barprod.record(
            _mv_rel(
                geometric_product(bar_conj(uv), u),
                geometric_product(u, bar_conj(geometric_product(v, u))),
            ),
            u,
        )
        if n >= 1:
            bardelta.record(_mv_rel(bar_via_delta(u), bar_conj(u)), u)

        h = geometric_product(u, reversion(u))
        j = geometric_product(u, clifford_conjugation(u))
        hscale = max(1.0, norm_inf(h), norm_inf(j))
        err = 0.0
        for r in (2, 3):
            err = max(err, norm_inf(quaternion_type_project(h, r)))
        for r in (1, 2):
            err = max(err, norm_inf(quaternion_type_project(j, r)))
        hj.record(err / hscale, u)

        k, l = int(rng_types.integers(0, 4)), int(rng_types.integers(0, 4))
        a = quaternion_type_project(u, k)
        b = quaternion_type_project(v, l)
        ab, ba = geometric_product(a, b), geometric_product(b, a)
        comm, anti = ab - ba, ab + ba
        scale_ = max(1.0, norm_inf(comm), norm_inf(anti))
        err = 0.0
        for r in range(4):
            if r != (k ^ l ^ 2):
                err = max(err, norm_inf(quaternion_type_project(comm, r)))
            if r != (k ^ l):
                err = max(err, norm_inf(quaternion_type_project(anti, r)))
        grading.record(err / scale_, u)

        for scheme in SCALAR_SCHEMES:
            try:
                variants = scheme_variants(scheme, n)
            except UnsupportedDimensionError:
                continue
            for terms in variants:
                schemes.record(_rel(_eval_scheme(u, terms), scalar_part(u)), u)
        if n in (3, 5, 7):
            for idx in range(len(center_scheme_variants(n))):
                center.record(
                    _mv_rel(center_part_via_conj(u, idx), center_project(u)), u
                )

        gi, rv, cc = grade_involution(u), reversion(u), clifford_conjugation(u)
        if n <= 7:
            pairs5 = (
                (u, geometric_product(rv, gi), geometric_product(gi, rv), u),
                (gi, geometric_product(cc, u), geometric_product(u, cc), gi),
                (rv, geometric_product(u, cc), geometric_product(cc, u), rv),
                (cc, geometric_product(gi, rv), geometric_product(rv, gi), cc),
            )
            for left, inner_l, inner_r, right in pairs5:
                lhs = geometric_product(left, _tri(inner_l))
                rhs = geometric_product(_tri(inner_r), right)
                t5.record(_mv_rel(lhs, rhs), u)
        if n <= 5:
            pairs6 = (
                (u, geometric_product(cc, gi), geometric_product(gi, cc), u),
                (gi, geometric_product(rv, u), geometric_product(u, rv), gi),
                (rv, geometric_product(gi, cc), geometric_product(cc, gi), rv),
                (cc, geometric_product(u, rv), geometric_product(rv, u), cc),
            )
            for left, inner_l, inner_r, right in pairs6:
                lhs = geometric_product(left, _tri(inner_l))
                rhs = geometric_product(_tri(inner_r), right)
                t6.record(_mv_rel(lhs, rhs), u)

    results.append(squares)
    results.append(antiauto)
    results.append(barprod)
    if n >= 1:
        results.append(bardelta)
    results.extend([hj, grading, schemes])
    if n in (3, 5, 7):
        results.append(center)
    if n <= 7:
        results.append(t5)
    if n <= 5:
        results.append(t6)


def _eval_scheme(u: Multivector, terms) -> float:
    total = 0.0
    for w, js in terms:
        total += w * ConjugationSpec.delta_set(u.sig.n, js).apply(u).scalar()
    return total


def _path_checks(sig, draws, results):
    n = sig.n
    N = cp.rep_dimension(sig)
    flbell = CheckResult("fl_vs_bell_coefficients", 1e-8)
    ch = CheckResult("cayley_hamilton_residual", 1e-7)
    adj = CheckResult("adjugate_law", 1e-8)
    inv = CheckResult("inverse_roundtrip", 1e-8)
    closed = CheckResult("closed_form_vs_fl", 1e-8)
    barf = CheckResult("bar_form_vs_fl", 1e-8)
    expl = CheckResult("explicit_coeffs_vs_fl", 1e-10)
    nu6 = CheckResult("n6_delta_vs_bar_form", 1e-8)
    n3o = CheckResult("n3_orderings_agree", 1e-10)

    unit = scalar(sig, 1.0)
    for u, _ in draws:
        fl = cp.faddeev_leverrier(u)
        bell = cp.charpoly_via_bell(u)
        err = max(_rel(a, b) for a, b in zip(fl.C, bell.C))
        flbell.record(max(err, _mv_rel(fl.adj, bell.adj)), u)

        if n <= 6:
            resid = cp.cayley_hamilton_residual(u)
            ch.record(norm_inf(resid) / max(1.0, norm_inf(u)) ** N, u)

        prod = geometric_product(u, fl.adj)
        adj.record(
            _mv_rel(prod, scalar(sig, fl.det)), u
        )
        try:
            ui = cp.inverse(u)
            inv.record(norm_inf(geometric_product(u, ui) - unit), u)
        except NotInvertibleError:
            pass

        if 1 <= n <= 6:
            closed.record(_rel(cp.det_closed_form(u), fl.det), u)
        if n <= 5:
            barf.record(_rel(cp.bar_form_det(u), fl.det), u)
        if n <= 4:
            ex = cp.explicit_coeffs_low_dim(u)
            expl.record(max(_rel(a, b) for a, b in zip(fl.C, ex.C)), u)
        if n == 6:
            nu6.record(
                _rel(cp.det_closed_form(u, "delta"), cp.det_closed_form(u, "bar")), u
            )
        if n == 3:
            vals = cp.det_closed_form_variants_n3(u)
            n3o.record(
                (vals.max() - vals.min()) / max(1.0, float(np.max(np.abs(vals)))), u
            )

    results.append(flbell)
    if n <= 6:
        results.append(ch)
    results.extend([adj, inv])
    if 1 <= n <= 6:
        results.append(closed)
    if n <= 5:
        results.append(barf)
    if n <= 4:
        results.append(expl)
    if n == 6:
        results.append(nu6)
    if n == 3:
        results.append(n3o)


def run_selfcheck(
    sig: Signature,
    trials: int = 100,
    seed: int = 0,
    suite: str = "all",
    integer: bool = False,
) -> dict:
    """Run the requested suite; returns a JSON-ready report."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; expected one of {SUITES}")
    rng = np.random.default_rng(seed)
    draws = [
        (
            random_multivector(sig, rng, integer),
            random_multivector(sig, rng, integer),
        )
        for _ in range(trials)
    ]
    results: list[CheckResult] = []
    if suite in ("all", "oracle"):
        _oracle_checks(sig, draws, results)
    if suite in ("all", "identities"):
        _identity_checks(sig, draws, results)
    if suite in ("all", "paths"):
        _path_checks(sig, draws, results)
    return {
        "signature": [sig.p, sig.q],
        "n": sig.n,
        "N": cp.rep_dimension(sig),
        "suite": suite,
        "trials": trials,
        "seed": seed,
        "checks": [r.as_dict() for r in results],
        "passed": all(r.passed for r in results),
    }
