"""Characteristic polynomial paths, determinants, adjugates, inverses."""

import math

import numpy as np
import pytest

from cliffpoly import (
    NotInvertibleError,
    UnsupportedDimensionError,
    adjugate,
    bar_conj,
    bar_form_det,
    blade,
    cayley_hamilton_residual,
    charpoly_eval,
    charpoly_via_bell,
    clifford_conjugation,
    delta_conj,
    det_closed_form,
    det_closed_form_variants_n3,
    determinant,
    explicit_coeffs_low_dim,
    faddeev_leverrier,
    geometric_product,
    grade_involution,
    grade_project,
    inverse,
    make_algebra,
    norm_inf,
    power_traces,
    random_multivector,
    rep_dimension,
    reversion,
    scalar,
    scalar_part,
    scale,
)
from conftest import all_signatures, assert_close, assert_mv_close, rel_err


def test_rep_dimension():
    values = {0: 1, 1: 2, 2: 2, 3: 4, 4: 4, 5: 8, 6: 8, 7: 16, 8: 16}
    for n, want in values.items():
        assert rep_dimension(make_algebra(n, 0)) == want


def test_identity_element_charpoly():
    for sig in (make_algebra(1, 1), make_algebra(2, 1), make_algebra(3, 3)):
        e = scalar(sig, 1.0)
        cp = faddeev_leverrier(e)
        assert cp.C[0] == cp.N
        assert cp.det == 1.0
        assert cp.adj == e
        # phi(lambda) = (lambda - 1)^N
        for lam in (-1.0, 0.5, 2.0):
            assert_close(charpoly_eval(cp, lam), (lam - 1.0) ** cp.N, 1e-12)
        assert norm_inf(cayley_hamilton_residual(e)) <= 1e-12


def test_worked_example_cl11(rng):
    sig = make_algebra(1, 1)
    for _ in range(50):
        u, u1, u2, u12 = rng.uniform(-1, 1, size=4)
        mv = (
            scalar(sig, u)
            + scale(u1, blade(sig, 1))
            + scale(u2, blade(sig, 2))
            + scale(u12, blade(sig, 1, 2))
        )
        want = u * u - u1 * u1 + u2 * u2 - u12 * u12
        assert abs(faddeev_leverrier(mv).det - want) <= 1e-12


def test_cl01_determinant_is_squared_modulus(rng):
    sig = make_algebra(0, 1)
    for _ in range(20):
        a, b = rng.uniform(-2, 2, size=2)
        mv = scalar(sig, a) + scale(b, blade(sig, 1))
        assert abs(faddeev_leverrier(mv).det - (a * a + b * b)) <= 1e-12


def test_power_traces_examples():
    sig = make_algebra(1, 1)
    e = scalar(sig, 1.0)
    pt = power_traces(e)
    for k in range(1, pt.N + 1):
        assert pt.S[k - 1] == (-1.0) ** (k - 1) * pt.N * math.factorial(k - 1)
    sig10 = make_algebra(1, 0)
    pt2 = power_traces(blade(sig10, 1))
    assert list(pt2.S) == [0.0, -2.0]


def test_s1_equals_c1(rng):
    for sig in all_signatures(5):
        u = random_multivector(sig, rng)
        assert_close(
            power_traces(u).S[0], faddeev_leverrier(u).C[0], 1e-12, str(sig)
        )


def test_fl_invariants(rng):
    for sig in all_signatures(6, min_n=1):
        u = random_multivector(sig, rng)
        cp = faddeev_leverrier(u)
        assert cp.det == -cp.C[cp.N - 1]
        assert_close(cp.C[0], cp.N * scalar_part(u), 1e-12)
        assert_close(charpoly_eval(cp, 0.0), cp.det, 1e-12)


def test_bell_path_agrees_with_fl(rng):
    for sig in all_signatures(8):
        u = random_multivector(sig, rng)
        fl = faddeev_leverrier(u)
        bl = charpoly_via_bell(u)
        for a, b in zip(fl.C, bl.C):
            assert rel_err(a, b) <= 1e-8, str(sig)
        assert_mv_close(fl.adj, bl.adj, 1e-8, str(sig))


def test_bell_n2_determinant_formula(rng):
    # n <= 2: Det(U) = 2<U>_0^2 - 2<U^2>_0
    for sig in (make_algebra(2, 0), make_algebra(1, 1), make_algebra(0, 2)):
        u = random_multivector(sig, rng)
        t1 = scalar_part(u)
        t2 = scalar_part(geometric_product(u, u))
        assert_close(faddeev_leverrier(u).det, 2 * t1 * t1 - 2 * t2, 1e-12)


def test_bell_n4_determinant_formula(rng):
    for sig in (make_algebra(2, 1), make_algebra(2, 2)):
        u = random_multivector(sig, rng)
        t = [scalar_part(u)]
        acc = u
        for _ in range(3):
            acc = geometric_product(acc, u)
            t.append(scalar_part(acc))
        want = (
            32 * t[0] ** 4
            - 48 * t[0] ** 2 * t[1]
            + 16 * t[0] * t[2]
            + 6 * t[1] ** 2
            - 3 * t[3]
        ) / 3.0
        assert_close(faddeev_leverrier(u).det, want, 1e-10, str(sig))


def test_closed_forms_match_fl(rng):
    for sig in all_signatures(6, min_n=1):
        u = random_multivector(sig, rng)
        fl = faddeev_leverrier(u).det
        assert_close(det_closed_form(u), fl, 1e-8, f"{sig} closed")
        if sig.n == 6:
            assert_close(det_closed_form(u, "bar"), fl, 1e-8, f"{sig} nu62")
    with pytest.raises(UnsupportedDimensionError):
        det_closed_form(random_multivector(make_algebra(4, 3), rng))


def test_nu6_equals_nu62(rng):
    for p in range(7):
        sig = make_algebra(p, 6 - p)
        u = random_multivector(sig, rng)
        assert_close(
            det_closed_form(u, "delta"), det_closed_form(u, "bar"), 1e-8, str(sig)
        )


def test_n3_ordering_family(rng):
    sig = make_algebra(2, 1)
    u = random_multivector(sig, rng)
    vals = det_closed_form_variants_n3(u)
    assert vals.shape == (16,)
    spread = (vals.max() - vals.min()) / max(1.0, float(np.max(np.abs(vals))))
    assert spread <= 1e-10
    e = scalar(sig, 1.0)
    assert np.allclose(det_closed_form_variants_n3(e), 1.0)
    lam = 1.7
    want = lam ** 4
    assert np.allclose(det_closed_form_variants_n3(scale(lam, e)), want)
    with pytest.raises(UnsupportedDimensionError):
        det_closed_form_variants_n3(random_multivector(make_algebra(2, 2), rng))


def test_n3_lem24_sums_scalar_but_terms_are_not(rng):
    sig = make_algebra(3, 0)
    u = random_multivector(sig, rng)
    f = (u, grade_involution(u), reversion(u), clifford_conjugation(u))

    def prod(order):
        acc = f[order[0]]
        for i in order[1:]:
            acc = geometric_product(acc, f[i])
        return acc

    pairs = (
        ((0, 2, 3, 1), (2, 0, 1, 3)),
        ((0, 1, 3, 2), (1, 0, 2, 3)),
        ((3, 2, 0, 1), (2, 3, 1, 0)),
        ((1, 3, 2, 0), (3, 1, 0, 2)),
    )
    sums = []
    for left, right in pairs:
        single = prod(left)
        # each single product is NOT scalar for a generic element
        nonscalar = single - grade_project(single, 0)
        assert norm_inf(nonscalar) > 1e-6 * max(1.0, norm_inf(single))
        total = single + prod(right)
        rest = total - grade_project(total, 0)
        assert norm_inf(rest) <= 1e-10 * max(1.0, norm_inf(total))
        sums.append(scalar_part(total))
    assert max(sums) - min(sums) <= 1e-10 * max(1.0, *map(abs, sums))


def test_bar_forms(rng):
    for sig in all_signatures(5, min_n=1):
        u = random_multivector(sig, rng)
        fl = faddeev_leverrier(u).det
        assert_close(bar_form_det(u), fl, 1e-8, str(sig))
        if sig.n in (3, 4):
            j = geometric_product(u, clifford_conjugation(u))
            h = geometric_product(u, reversion(u))
            jbj = scalar_part(geometric_product(j, bar_conj(j)))
            hbh = scalar_part(geometric_product(h, bar_conj(h)))
            assert_close(jbj, hbh, 1e-10, "J bar(J) = H bar(H)")
    with pytest.raises(UnsupportedDimensionError):
        bar_form_det(random_multivector(make_algebra(3, 3), rng))


def test_adjugate_examples(rng):
    sig2 = make_algebra(1, 1)
    u2 = random_multivector(sig2, rng)
    assert adjugate(u2, "closed") == clifford_conjugation(u2)
    sig4 = make_algebra(2, 2)
    u4 = random_multivector(sig4, rng)
    want = geometric_product(
        reversion(u4),
        delta_conj(
            geometric_product(grade_involution(u4), clifford_conjugation(u4)), 3
        ),
    )
    assert_mv_close(adjugate(u4, "closed"), want, 1e-13, "n=4 closed adjugate")
    e = scalar(sig4, 1.0)
    assert adjugate(e) == e


def test_adjugate_law_all_methods(rng):
    for sig in all_signatures(6, min_n=1):
        u = random_multivector(sig, rng)
        det = faddeev_leverrier(u).det
        for method in ("fl", "bell", "closed"):
            adj = adjugate(u, method)
            for prod in (geometric_product(u, adj), geometric_product(adj, u)):
                assert_mv_close(
                    prod, scalar(sig, det), 1e-8, f"{sig} adjugate {method}"
                )


def test_inverse_examples():
    sig = make_algebra(1, 0)
    e1 = blade(sig, 1)
    assert_mv_close(inverse(e1), e1, 1e-14, "e1 self-inverse")
    with pytest.raises(NotInvertibleError) as err:
        inverse(scalar(sig, 1.0) + e1)
    assert err.value.det == 0.0
    two = scalar(sig, 2.0)
    assert inverse(two) == scalar(sig, 0.5)


def test_inverse_roundtrip(rng):
    for sig in all_signatures(6, min_n=1):
        u = random_multivector(sig, rng)
        try:
            ui = inverse(u)
        except NotInvertibleError:
            continue
        e = scalar(sig, 1.0)
        assert norm_inf(geometric_product(u, ui) - e) <= 1e-8
        assert norm_inf(geometric_product(ui, u) - e) <= 1e-8


def test_cayley_hamilton(rng):
    for sig in all_signatures(6, min_n=1):
        u = random_multivector(sig, rng)
        res = cayley_hamilton_residual(u)
        bound = 1e-8 * max(1.0, norm_inf(u)) ** rep_dimension(sig)
        assert norm_inf(res) <= bound, str(sig)


def test_explicit_low_dim_coeffs(rng):
    for sig in all_signatures(4):
        u = random_multivector(sig, rng)
        fl = faddeev_leverrier(u)
        ex = explicit_coeffs_low_dim(u)
        for a, b in zip(fl.C, ex.C):
            assert rel_err(a, b) <= 1e-10, str(sig)
        assert_close(ex.det, fl.det, 1e-10, str(sig))
        assert_mv_close(ex.adj, fl.adj, 1e-8, str(sig))
    with pytest.raises(UnsupportedDimensionError):
        explicit_coeffs_low_dim(random_multivector(make_algebra(3, 2), rng))


def test_explicit_n1_formulas(rng):
    sig = make_algebra(1, 0)
    u = random_multivector(sig, rng)
    ex = explicit_coeffs_low_dim(u)
    assert_close(ex.C[0], scalar_part(u + grade_involution(u)), 1e-14)
    assert_close(
        ex.det,
        scalar_part(geometric_product(u, grade_involution(u))),
        1e-14,
    )


def test_determinant_laws(rng):
    for sig in all_signatures(5, min_n=1):
        u = random_multivector(sig, rng)
        v = random_multivector(sig, rng)
        N = rep_dimension(sig)
        du, dv = faddeev_leverrier(u).det, faddeev_leverrier(v).det
        duv = faddeev_leverrier(geometric_product(u, v)).det
        assert rel_err(duv, du * dv) <= 1e-9, f"{sig} multiplicativity"
        assert_close(faddeev_leverrier(grade_involution(u)).det, du, 1e-10)
        assert_close(faddeev_leverrier(reversion(u)).det, du, 1e-10)
        lam = 1.3
        assert_close(
            faddeev_leverrier(scale(lam, u)).det, lam ** N * du, 1e-9
        )


def test_coefficient_conjugation_invariance(rng):
    for sig in (make_algebra(2, 1), make_algebra(2, 2)):
        u = random_multivector(sig, rng)
        base = faddeev_leverrier(u).C
        for op in (grade_involution, reversion):
            other = faddeev_leverrier(op(u)).C
            for a, b in zip(base, other):
                assert rel_err(a, b) <= 1e-10, str(sig)


def test_similarity_invariance(rng):
    for sig in (make_algebra(1, 1), make_algebra(2, 1), make_algebra(2, 2)):
        u = random_multivector(sig, rng)
        N = rep_dimension(sig)
        while True:
            t = random_multivector(sig, rng)
            # keep the transform well-conditioned, not just invertible
            if abs(faddeev_leverrier(t).det) >= 1e-3 * max(1.0, norm_inf(t)) ** N:
                break
        ti = inverse(t)
        conj = geometric_product(geometric_product(ti, u), t)
        assert rel_err(
            faddeev_leverrier(conj).det, faddeev_leverrier(u).det
        ) <= 1e-8, str(sig)


def test_scalar_algebra_degenerate():
    sig = make_algebra(0, 0)
    u = scalar(sig, -2.5)
    cp = faddeev_leverrier(u)
    assert cp.N == 1
    assert cp.det == -2.5
    assert cp.adj == scalar(sig, 1.0)
    assert charpoly_via_bell(u).det == -2.5
    assert det_closed_form(u) == -2.5
    assert bar_form_det(u) == -2.5
    assert inverse(u) == scalar(sig, -0.4)
    assert norm_inf(cayley_hamilton_residual(u)) == 0.0


def test_determinant_method_dispatch(rng):
    u = random_multivector(make_algebra(2, 1), rng)
    fl = determinant(u)
    for method in ("bell", "closed", "bar"):
        assert_close(determinant(u, method), fl, 1e-9, method)
    with pytest.raises(ValueError):
        determinant(u, "nonesuch")
