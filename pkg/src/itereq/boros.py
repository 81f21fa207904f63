"""The characteristic family r^n = nr - n + 1 behind f^n(x) = f(x)^n / x^(n-1).

r^n - nr + n - 1 factors as (r-1)^2 * sum_{k=1}^{n-1} k r^(n-1-k), checked
here with exact integer arithmetic. For odd n the cofactor has a unique
real root r0 < -1; every non-real root z satisfies 1 < |z| < -r0. The
classifier enumerates the continuous solution families of the equation on a
positive interval J, keyed on whether J is bounded and whether 0 touches
its closure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .polynomial import Interval, Polynomial
from .roots import DEFAULT_TOLERANCES, RootSet, ToleranceConfig, classify, find_roots
from .verify import PowerMap

# Root-1 multiplicity in the family is exactly 2 for every n >= 2.
ROOT_ONE_MULTIPLICITY = 2


@dataclass(frozen=True)
class BorosAnalysis:
    """Characteristic data for one n: polynomials, roots, r0, bound checks.

    boros_characteristic fills the exact part; analyze_boros adds the
    numeric part (roots, r0, bound_ok, vieta_residual).
    """

    n: int
    char_poly: Polynomial
    cofactor: Polynomial
    roots: RootSet | None = None
    r0: float | None = None
    bound_ok: bool | None = None
    vieta_residual: float | None = None


def characteristic_coeffs(n: int) -> list[int]:
    """Ascending integer coefficients of r^n - nr + n - 1."""
    if n < 2:
        raise ValueError("the equation family needs n >= 2")
    return [n - 1, -n] + [0] * (n - 2) + [1]


def cofactor_coeffs(n: int) -> list[int]:
    """Ascending integer coefficients of sum_{k=1}^{n-1} k r^(n-1-k)."""
    if n < 2:
        raise ValueError("the equation family needs n >= 2")
    return [n - 1 - j for j in range(n - 1)]


def boros_characteristic(n: int) -> BorosAnalysis:
    """Exact characteristic polynomial and cofactor, factorization verified."""
    char_poly = Polynomial(characteristic_coeffs(n))
    cofactor = Polynomial(cofactor_coeffs(n))
    product = Polynomial((1, -2, 1)) * cofactor
    if product.coeffs != char_poly.coeffs:
        raise ArithmeticError(
            f"factorization identity failed for n={n}: {product} != {char_poly}"
        )
    return BorosAnalysis(n=n, char_poly=char_poly, cofactor=cofactor)


def find_r0(n: int, tol: float = 1e-14) -> float:
    """The unique real root below -1 of the cofactor, for odd n >= 3.

    Bisection on [-n, -1] (guaranteed bracket: the cofactor is positive at
    -1 and negative at -n for odd n) followed by one Newton polish.
    """
    if n % 2 == 0:
        raise ValueError("even n has no real root besides 1")
    if n < 3:
        raise ValueError("need odd n >= 3")
    cof = Polynomial(cofactor_coeffs(n))
    lo, hi = -float(n), -1.0
    flo = cof.evaluate(lo)
    fhi = cof.evaluate(hi)
    if not flo < 0 < fhi:
        raise ArithmeticError(
            f"bracket [-{n}, -1] does not straddle a sign change; "
            f"got f(lo)={flo}, f(hi)={fhi}"
        )
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = cof.evaluate(mid)
        if fm == 0.0:
            return mid
        if fm < 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    slope = cof.derivative().evaluate(x)
    if slope != 0:
        x -= cof.evaluate(x) / slope
    return x


def check_root_bounds(ba: BorosAnalysis, tol: float = 1e-9) -> tuple[bool, float]:
    """Bounds on non-real roots: 1 + tol < |z|, and for odd n |z| < -r0 - tol.

    Also returns the relative Vieta residual |r0 * prod |z_j|^2 + (n-1)| /
    (n-1) for odd n >= 5; the check is vacuous (residual 0) otherwise.
    """
    if ba.roots is None:
        raise ValueError("analysis has no roots; run analyze_boros first")
    pairs = classify(ba.roots).conjugate_pairs
    bound_ok = all(rho > 1.0 + tol for rho, _, _ in pairs)
    if ba.n % 2 == 1:
        if ba.r0 is None:
            raise ValueError("odd-n analysis is missing r0")
        bound_ok = bound_ok and all(rho < -ba.r0 - tol for rho, _, _ in pairs)
    vieta_residual = 0.0
    if ba.n % 2 == 1 and ba.n >= 5:
        prod = 1.0
        for rho, _, mult in pairs:
            prod *= rho ** (2 * mult)
        vieta_residual = abs(ba.r0 * prod + (ba.n - 1)) / (ba.n - 1)
    return bound_ok, vieta_residual


def analyze_boros(
    n: int, cfg: ToleranceConfig = DEFAULT_TOLERANCES, bound_tol: float = 1e-9
) -> BorosAnalysis:
    """Full numeric analysis: roots, r0 for odd n, bound and Vieta checks."""
    ba = boros_characteristic(n)
    roots = find_roots(ba.char_poly, cfg)
    r0 = find_r0(n) if n % 2 == 1 and n >= 3 else None
    ba = replace(ba, roots=roots, r0=r0)
    bound_ok, vieta_residual = check_root_bounds(ba, bound_tol)
    return replace(ba, bound_ok=bound_ok, vieta_residual=vieta_residual)


def sine_inequality(n: int, phi: float) -> tuple[float, float, bool]:
    """|sin(n phi)| versus n |sin(phi)|; strict inequality whenever sin(phi) != 0."""
    if n < 2:
        raise ValueError("need n >= 2")
    if abs(math.sin(phi)) <= 1e-12:
        raise ValueError("sin(phi) is too close to zero for the inequality to apply")
    lhs = abs(math.sin(n * phi))
    rhs = n * abs(math.sin(phi))
    return lhs, rhs, lhs < rhs


@dataclass(frozen=True)
class SolutionFamily:
    """One parametric family f(x) = c * x^exponent with a constraint on c.

    The admissible c range is [c_low, c_high] with the stated endpoint
    closures; c_low == c_high pins c to a single value (the identity family
    has exponent 1 and c fixed at 1). exponent_residual records
    |char_poly(exponent)| when the exponent was computed numerically.
    """

    exponent: float
    c_low: float
    c_high: float
    c_low_closed: bool
    c_high_closed: bool
    exponent_residual: float = 0.0

    def contains_c(self, c: float) -> bool:
        if c < self.c_low or (c == self.c_low and not self.c_low_closed):
            return False
        if c > self.c_high or (c == self.c_high and not self.c_high_closed):
            return False
        return True

    def candidate(self, c: float, domain: Interval) -> PowerMap:
        return PowerMap(c, self.exponent, domain)

    @property
    def description(self) -> str:
        if self.exponent == 1.0:
            shape = "f(x) = c x"
        else:
            shape = f"f(x) = c x^{self.exponent:.12g}"
        if self.c_low == self.c_high:
            if self.c_low == 1.0 and self.exponent == 1.0:
                return "f(x) = x"
            return f"{shape} with c = {self.c_low:g}"
        left = "[" if self.c_low_closed else "("
        right = "]" if self.c_high_closed else ")"
        hi = "inf" if math.isinf(self.c_high) else f"{self.c_high:g}"
        return f"{shape} with c in {left}{self.c_low:g}, {hi}{right}"


@dataclass(frozen=True)
class BorosClassification:
    """Solution families for one (n, J) pair, labelled by the case split.

    case: 'i' bounded away from 0, 'ii' bounded touching 0, 'iii' unbounded
    away from 0, 'iv' the full half-line with even n, 'v' the full
    half-line with odd n.
    """

    case: str
    families: tuple
    n: int
    interval: Interval
    r0: float | None = None


def classify_boros(n: int, interval: Interval) -> BorosClassification:
    """Solution families of the equation on J per the final classification.

    J must be a non-degenerate subinterval of (0, inf). Case (v) embeds the
    numerically computed negative root r0 together with its characteristic
    residual so downstream verification is self-contained.
    """
    if n < 2:
        raise ValueError("the equation family needs n >= 2")
    if interval.lower < 0 or (interval.lower == 0 and interval.lower_closed):
        raise ValueError(f"interval {interval} is not contained in (0, inf)")
    bounded = math.isfinite(interval.upper)
    touches_zero = interval.lower == 0
    linear = lambda lo, hi, lc, hc: SolutionFamily(1.0, lo, hi, lc, hc)  # noqa: E731
    if bounded and not touches_zero:
        return BorosClassification("i", (linear(1.0, 1.0, True, True),), n, interval)
    if bounded and touches_zero:
        return BorosClassification("ii", (linear(0.0, 1.0, False, True),), n, interval)
    if not bounded and not touches_zero:
        return BorosClassification(
            "iii", (linear(1.0, math.inf, True, False),), n, interval
        )
    # J = (0, inf)
    full_range = linear(0.0, math.inf, False, False)
    if n % 2 == 0:
        return BorosClassification("iv", (full_range,), n, interval)
    r0 = find_r0(n)
    char = Polynomial(characteristic_coeffs(n))
    power = SolutionFamily(
        r0, 0.0, math.inf, False, False, exponent_residual=abs(char.evaluate(r0))
    )
    return BorosClassification("v", (full_range, power), n, interval, r0=r0)
