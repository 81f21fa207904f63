"""Independent brute-force oracles used to compute expected test values.

These deliberately avoid the library's code paths: direct power sums
instead of Horner, plain bisection instead of eigenvalues, explicit loops
instead of closed forms.
"""

import cmath


def power_eval(coeffs, z):
    """sum c_k z^k computed through explicit powers."""
    return sum(c * z**k for k, c in enumerate(coeffs))


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def hand_iterate(coeffs, init, m_max):
    """Direct recurrence loop a_N x_{m+N} = -(a_{N-1} x_{m+N-1} + ... + a_0 x_m)."""
    n = len(coeffs) - 1
    xs = list(init)
    while len(xs) <= m_max:
        m = len(xs) - n
        xs.append(-sum(coeffs[k] * xs[m + k] for k in range(n)) / coeffs[-1])
    return xs[: m_max + 1]


def bisect(f, lo, hi, tol=1e-15):
    flo, fhi = f(lo), f(hi)
    assert flo * fhi < 0, "oracle bracket must straddle a sign change"
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0:
            return mid
        if flo * fm < 0:
            hi = mid
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def deflate_linear(coeffs, r):
    """Synthetic division of the ascending coefficient list by (x - r)."""
    desc = list(reversed(coeffs))
    out = []
    acc = 0.0
    for c in desc:
        acc = acc * r + c
        out.append(acc)
    remainder = out.pop()
    return list(reversed(out)), remainder


def quadratic_roots(c0, c1, c2):
    """Roots of c2 x^2 + c1 x + c0 by the quadratic formula."""
    disc = cmath.sqrt(complex(c1 * c1 - 4 * c2 * c0))
    return (-c1 + disc) / (2 * c2), (-c1 - disc) / (2 * c2)
