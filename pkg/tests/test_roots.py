import cmath
import math

import numpy as np
import pytest

from itereq import (
    IllConditionedError,
    Polynomial,
    RootSet,
    ToleranceConfig,
    classify,
    find_roots,
    from_roots,
    modulus_gap,
)
from itereq.roots import GapVerdict, RootClassification

from oracles import bisect, deflate_linear, power_eval, quadratic_roots


def entries_match(rs, expected, tol=1e-8):
    if len(rs.entries) != len(expected):
        return False
    for (root, mult), (eroot, emult) in zip(rs.entries, sorted(expected, key=lambda e: (complex(e[0]).real, complex(e[0]).imag))):
        if mult != emult or abs(root - eroot) > tol:
            return False
    return True


def test_perfect_square():
    rs = find_roots(Polynomial((1, -2, 1)))
    assert entries_match(rs, [(1.0, 2)])


def test_cubic_with_double_root():
    rs = find_roots(Polynomial((2, -3, 0, 1)))
    assert entries_match(rs, [(1.0, 2), (-2.0, 1)])


def test_quintic_structure_against_bisection_oracle():
    # r^5 - 5r + 4 = (r-1)^2 (r^3 + 2r^2 + 3r + 4); the cubic cofactor has
    # one real root r0 and a conjugate pair obtained by deflation.
    cofactor = [4.0, 3.0, 2.0, 1.0]
    r0 = bisect(lambda x: power_eval(cofactor, x), -5.0, -1.0)
    quad, rem = deflate_linear(cofactor, r0)
    assert abs(rem) < 1e-12
    z1, z2 = quadratic_roots(*quad)
    z = z1 if z1.imag > 0 else z2
    assert abs(r0 - -1.6506291914393882) < 1e-12

    rs = find_roots(Polynomial((4, -5, 0, 0, 0, 1)))
    assert entries_match(rs, [(1.0, 2), (r0, 1), (z, 1), (z.conjugate(), 1)])
    assert 1.0 < abs(z) < -r0


def test_rejects_zero_and_constant():
    with pytest.raises(ValueError):
        find_roots(Polynomial())
    with pytest.raises(ValueError):
        find_roots(Polynomial((3,)))


def test_reconstruction_guard_reports_ill_conditioning():
    cfg = ToleranceConfig(recon_tol=1e-18)
    with pytest.raises(IllConditionedError):
        find_roots(Polynomial((4, -5, 0, 0, 0, 1)), cfg)


def test_classify_all_real():
    cls = classify(RootSet([(1.0, 2), (-2.0, 1)]))
    assert cls.real_roots == ((-2.0, 1), (1.0, 2))
    assert cls.conjugate_pairs == ()


def test_classify_conjugate_pair_principal_argument():
    cls = classify(RootSet([(1 + 1j, 1), (1 - 1j, 1)]))
    assert cls.real_roots == ()
    ((rho, phi, mult),) = cls.conjugate_pairs
    assert abs(rho - math.sqrt(2)) < 1e-15
    assert abs(phi - math.pi / 4) < 1e-15
    assert mult == 1


def test_classify_quintic_reuses_oracle():
    rs = find_roots(Polynomial((4, -5, 0, 0, 0, 1)))
    cls = classify(rs)
    reals = {round(v, 6): m for v, m in cls.real_roots}
    assert reals == {1.0: 2, -1.650629: 1}
    ((rho, phi, mult),) = cls.conjugate_pairs
    assert 1.0 < rho < 1.6506291914393882
    assert 0 < phi < math.pi
    assert mult == 1


def test_classify_rejects_unmatched_nonreal():
    with pytest.raises(ValueError):
        classify(RootSet([(1j, 1), (2.0, 1)]))


def test_modulus_gap_strict_below():
    # (r - 0.5)(r^2 - 2r + 2) has real root 0.5 and pair of modulus sqrt(2);
    # the pair roots recomputed independently by the quadratic formula.
    z1, z2 = quadratic_roots(2.0, -2.0, 1.0)
    assert abs(abs(z1) - math.sqrt(2)) < 1e-15
    cls = classify(find_roots(Polynomial((-1, 3, -2.5, 1))))
    gap = modulus_gap(cls)
    assert gap.condition_a is GapVerdict.STRICT
    assert gap.condition_b is GapVerdict.VIOLATED


def test_modulus_gap_equal_moduli_is_indeterminate():
    cls = RootClassification(
        real_roots=((1.0, 2),), conjugate_pairs=((1.0, math.pi / 3, 1),)
    )
    gap = modulus_gap(cls)
    assert gap.condition_a is GapVerdict.INDETERMINATE
    assert gap.condition_b is GapVerdict.INDETERMINATE


def test_modulus_gap_vacuous_without_pairs():
    cls = classify(RootSet([(1.0, 1), (2.0, 1)]))
    gap = modulus_gap(cls)
    assert gap.condition_a is GapVerdict.STRICT
    assert gap.condition_b is GapVerdict.STRICT
    assert gap.pair_modulus_range is None


def test_round_trip_random_rootsets(random_rootsets):
    # moduli in [0.2, 5], multiplicities up to 3: root error <= 1e-8 and
    # exact multiplicities after a from_roots / find_roots cycle.
    for rs in random_rootsets(60, seed=11, moduli=(0.2, 5.0), max_mult=3, max_order=8):
        p = from_roots(rs)
        out = find_roots(p)
        assert [m for _, m in out.entries] == [m for _, m in rs.entries]
        assert all(
            abs(a - b) <= 1e-8 * max(1.0, abs(b))
            for (a, _), (b, _) in zip(out.entries, rs.entries)
        )


def test_multiplicity_conservation_and_conjugate_closure(random_rootsets):
    for rs in random_rootsets(40, seed=12, max_order=7, max_mult=3):
        p = from_roots(rs)
        out = find_roots(p)
        assert out.total_multiplicity == p.degree
        table = {}
        for root, mult in out.entries:
            table[root] = mult
        for root, mult in out.entries:
            if root.imag != 0:
                assert table.get(root.conjugate()) == mult


def test_boros_family_real_root_structure():
    # r^n - nr + n - 1 always carries (1, 2); beyond it, even n has no real
    # root and odd n exactly one simple real root.
    for n in range(2, 21):
        coeffs = [n - 1, -n] + [0] * (n - 2) + [1]
        cls = classify(find_roots(Polynomial(coeffs)))
        ones = [(v, m) for v, m in cls.real_roots if abs(v - 1) < 1e-6]
        others = [(v, m) for v, m in cls.real_roots if abs(v - 1) >= 1e-6]
        assert ones and ones[0][1] == 2
        if n % 2 == 0:
            assert not others
        else:
            assert len(others) == 1 and others[0][1] == 1


def test_find_roots_is_deterministic():
    p = Polynomial((4, -5, 0, 0, 0, 1))
    assert find_roots(p) == find_roots(p)
