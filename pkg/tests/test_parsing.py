"""Expression grammar, canonicalization, and exact round-tripping."""

import numpy as np
import pytest

from cliffpoly import (
    ExprSyntaxError,
    GradeRangeError,
    basis_blade,
    blade,
    format_multivector,
    make_algebra,
    parse,
    random_multivector,
    scalar,
    scale,
    zero,
)


def test_spec_example():
    sig = make_algebra(2, 0)
    u = parse("3.5 + 2e1 - e12", sig)
    want = (
        scalar(sig, 3.5)
        + scale(2.0, blade(sig, 1))
        - blade(sig, 1, 2)
    )
    assert u == want


def test_reordered_blade_normalizes():
    sig = make_algebra(2, 0)
    assert parse("e2*e1", sig) == -blade(sig, 1, 2)
    assert parse("e21", sig) == -blade(sig, 1, 2)
    assert parse("e11", sig) == scalar(sig, 1.0)
    assert parse("e11", make_algebra(0, 1)) == scalar(make_algebra(0, 1), -1.0)


def test_index_out_of_range():
    with pytest.raises(GradeRangeError):
        parse("e3", make_algebra(2, 0))


def test_syntax_errors_carry_position():
    sig = make_algebra(2, 0)
    with pytest.raises(ExprSyntaxError) as err:
        parse("1 + ", sig)
    assert err.value.pos == 4
    with pytest.raises(ExprSyntaxError):
        parse("(1 + e1", sig)
    with pytest.raises(ExprSyntaxError):
        parse("1 ? 2", sig)
    with pytest.raises(ExprSyntaxError):
        parse("e{1,", sig)
    with pytest.raises(ExprSyntaxError):
        parse("1 2", sig)


def test_parentheses_and_products():
    sig = make_algebra(1, 0)
    assert parse("(1 + e1) * (1 - e1)", sig) == zero(sig)
    assert parse("-(2 + e1)", sig) == scalar(sig, -2.0) - blade(sig, 1)
    assert parse("2 * 3", sig) == scalar(sig, 6.0)


def test_braced_blades_for_wide_algebras():
    sig = make_algebra(10, 0)
    u = parse("e{1,10}", sig)
    assert u == basis_blade(sig, (1 << 0) | (1 << 9))
    assert format_multivector(u) == "e{1,10}"
    # digit-string tokens always mean single-digit indices
    assert parse("e12", sig) == basis_blade(sig, 0b11)


def test_format_examples():
    sig = make_algebra(2, 0)
    assert format_multivector(zero(sig)) == "0"
    assert format_multivector(scalar(sig, 1.0)) == "1.0"
    u = scalar(sig, 3.5) + scale(2.0, blade(sig, 1)) - blade(sig, 1, 2)
    assert format_multivector(u) == "3.5 + 2.0*e1 - e12"
    assert format_multivector(-blade(sig, 2)) == "-e2"


def test_roundtrip_exact(rng):
    for sig in (make_algebra(2, 1), make_algebra(3, 2), make_algebra(10, 1)):
        for _ in range(5):
            u = random_multivector(sig, rng)
            assert parse(format_multivector(u), sig) == u


def test_roundtrip_tiny_and_huge_coefficients():
    sig = make_algebra(1, 1)
    u = (
        scale(1.25e-7, blade(sig, 1))
        + scale(3.0e12, blade(sig, 2))
        + scalar(sig, 1e-30)
    )
    assert parse(format_multivector(u), sig) == u


def test_unary_plus_and_whitespace():
    sig = make_algebra(1, 0)
    assert parse("+e1", sig) == blade(sig, 1)
    assert parse("  1.5+ e1 ", sig) == scalar(sig, 1.5) + blade(sig, 1)
