import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from itereq import (
    Interval,
    IterativeEquation,
    Polynomial,
    divide,
    dual,
    find_roots,
    from_roots,
)
from itereq.roots import RootSet

from oracles import power_eval


def test_evaluate_root_of_factored_quadratic():
    p = Polynomial((2, -3, 1))
    assert p.evaluate(1) == 0


def test_evaluate_cubic_at_i_matches_direct_powers():
    p = Polynomial((-1, 0, 0, 1))
    expected = power_eval(p.coeffs, 1j)
    assert expected == -1 - 1j
    assert p.evaluate(1j) == expected


def test_evaluate_zero_polynomial():
    assert Polynomial().evaluate(5) == 0


def test_trailing_zeros_are_trimmed():
    assert Polynomial((1, 2, 0.0, 0)).coeffs == (1, 2)
    assert Polynomial((0, 0)).is_zero


def test_degree_of_zero_polynomial_is_undefined():
    with pytest.raises(ValueError):
        Polynomial().degree


def test_divide_perfect_square_factor():
    q, r = divide(Polynomial((2, -3, 0, 1)), Polynomial((1, -2, 1)))
    assert q.coeffs == (2, 1)
    assert r.is_zero


def test_divide_with_remainder_remultiplies():
    p = Polynomial((1, 0, 1))
    d = Polynomial((-1, 1))
    q, r = divide(p, d)
    assert q.coeffs == (1, 1)
    assert r.coeffs == (2,)
    assert (d * q + r).coeffs == p.coeffs


def test_divide_self():
    p = Polynomial((3.5, -2, 1))
    q, r = divide(p, p)
    assert q.coeffs == (1.0,)
    assert r.is_zero


def test_divide_by_zero_polynomial():
    with pytest.raises(ZeroDivisionError):
        divide(Polynomial((1, 1)), Polynomial())


def test_divide_zero_by_anything():
    q, r = divide(Polynomial(), Polynomial((1, 1)))
    assert q.is_zero and r.is_zero


def test_divide_remultiplication_property():
    rng = np.random.default_rng(20240811)
    for _ in range(300):
        dp = rng.integers(0, 9)
        dd = rng.integers(0, 9)
        pc = rng.normal(size=dp + 1)
        dc = rng.normal(size=dd + 1)
        pc[-1] = rng.choice([-1, 1]) * rng.uniform(0.5, 2.0)
        dc[-1] = rng.choice([-1, 1]) * rng.uniform(0.5, 2.0)
        p, d = Polynomial(pc), Polynomial(dc)
        q, r = divide(p, d)
        recon = d * q + r
        scale = max(1.0, max(abs(c) for c in p.coeffs))
        recon_coeffs = list(recon.coeffs) + [0.0] * (len(p.coeffs) - len(recon.coeffs))
        assert all(
            abs(a - b) <= 1e-12 * scale for a, b in zip(recon_coeffs, p.coeffs)
        )


def test_from_roots_double_one_and_minus_two():
    p = from_roots(RootSet([(1, 2), (-2, 1)]))
    assert p.coeffs == (2, -3, 0, 1)


def test_from_roots_conjugate_pair():
    p = from_roots(RootSet([(1j, 1), (-1j, 1)]))
    assert p.coeffs == (1, 0, 1)


def test_from_roots_single_linear_factor():
    p = from_roots(RootSet([(0.5, 1)]))
    assert p.coeffs == (-0.5, 1)


def test_from_roots_rejects_unpaired_complex_root():
    with pytest.raises(ValueError):
        from_roots(RootSet([(1 + 1j, 1), (2.0, 1)]))


def test_dual_reverses_coefficients():
    eq = IterativeEquation(Polynomial((-6, 1, 1)))
    d = dual(eq)
    assert d.poly.coeffs == (1, 1, -6)


def test_dual_palindromic_fixed_point():
    eq = IterativeEquation(Polynomial((1, -3, 1)))
    assert dual(eq) == eq


def test_dual_is_an_involution():
    eq = IterativeEquation(Polynomial((2.5, -1, 0.5, 3)))
    assert dual(dual(eq)) == eq


def test_dual_roots_are_reciprocal():
    eq = IterativeEquation(Polynomial((-6, 1, 1)))
    orig = find_roots(eq.poly)
    rev = find_roots(dual(eq).poly)
    orig_roots = sorted(r.real for r, _ in orig.entries)
    rev_roots = sorted(1.0 / r.real for r, _ in rev.entries)
    assert all(abs(a - b) <= 1e-10 for a, b in zip(orig_roots, rev_roots))


def test_dual_root_reciprocity_property(random_equations):
    for eq in random_equations(40, seed=7):
        orig = find_roots(eq.poly)
        rev = find_roots(dual(eq).poly)
        recip = sorted(
            (1.0 / r for r, m in orig.entries for _ in range(m)),
            key=lambda z: (z.real, z.imag),
        )
        got = sorted(
            (r for r, m in rev.entries for _ in range(m)),
            key=lambda z: (z.real, z.imag),
        )
        scale = max(1.0, max(abs(z) for z in recip))
        assert all(abs(a - b) <= 1e-10 * scale for a, b in zip(recip, got))


def test_iterative_equation_requires_nonzero_a0():
    with pytest.raises(ValueError):
        IterativeEquation(Polynomial((0, 1, 1)))


def test_iterative_equation_requires_degree():
    with pytest.raises(ValueError):
        IterativeEquation(Polynomial((3,)))


def test_interval_parse_and_str_round_trip():
    for text in ["(0, inf)", "(0, 1]", "[2, 5)", "(-inf, 3]", "(-inf, inf)"]:
        iv = Interval.parse(text)
        assert Interval.parse(str(iv)) == iv


def test_interval_membership_respects_closure():
    iv = Interval.parse("(0,1]")
    assert 1.0 in iv
    assert 0.0 not in iv
    assert 0.5 in iv


def test_interval_rejects_degenerate_and_closed_infinite():
    with pytest.raises(ValueError):
        Interval(2, 2)
    with pytest.raises(ValueError):
        Interval(0, math.inf, upper_closed=True)
    with pytest.raises(ValueError):
        Interval.parse("(5, 1)")


def test_interval_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Interval.parse("0,1")
    with pytest.raises(ValueError):
        Interval.parse("(a, b)")


def test_monic_normalization():
    p = Polynomial((2, -6, 4))
    assert p.monic().coeffs == (0.5, -1.5, 1.0)
