"""Linear recurrences tied to iterative equations: iteration, closed forms,
and the monotone / anti-monotone sequence classifiers.

The closed form of an order-N recurrence with root set
{(lambda_k, l_k)} u {(mu_j, mu_j-bar, k_j)} is

    x_m = sum_k A_k(m) lambda_k^m
        + sum_j (B_j(m) cos(m phi_j) + C_j(m) sin(m phi_j)) rho_j^m

with deg A_k <= l_k - 1 and deg B_j, C_j <= k_j - 1, phi_j the principal
argument of mu_j and rho_j its modulus. Coefficients are recovered from the
first N sequence values by a dense linear solve; the condition number of
that system is kept on the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import IllConditionedError
from .polynomial import IterativeEquation, Polynomial
from .roots import DEFAULT_TOLERANCES, RootSet, classify


@dataclass(frozen=True)
class ClosedFormSolution:
    """Per-root polynomial coefficient data for a recurrence solution.

    real_terms: tuple of (root, multiplicity, A) with A a Polynomial of
        degree <= multiplicity - 1.
    pair_terms: tuple of (modulus, argument, multiplicity, B, C), one entry
        per conjugate pair, arguments in (0, pi).
    condition_number: condition of the interpolation system that produced
        the coefficients.
    """

    real_terms: tuple
    pair_terms: tuple
    condition_number: float = 0.0

    @property
    def order(self) -> int:
        return sum(m for _, m, _ in self.real_terms) + 2 * sum(
            m for _, _, m, _, _ in self.pair_terms
        )


class MonotonicityClass(Enum):
    """Sign behaviour of consecutive differences.

    MONOTONE: all differences share one sign; the orbit signature of an
    increasing map. ANTI_MONOTONE: (-1)^m (x_m - x_{m-1}) keeps one sign;
    the signature of a decreasing map. BOTH: constant sequences. NEITHER:
    anything else, in particular sequences with a surviving oscillatory
    component.
    """

    MONOTONE = "monotone"
    ANTI_MONOTONE = "anti-monotone"
    BOTH = "both"
    NEITHER = "neither"


def iterate_recurrence(
    eq: IterativeEquation, init: Sequence[float], m_max: int
) -> list[float]:
    """x_0 .. x_{m_max} with a_N x_{m+N} = -(a_{N-1} x_{m+N-1} + ... + a_0 x_m)."""
    n = eq.order
    if len(init) != n:
        raise ValueError(f"need exactly {n} initial values, got {len(init)}")
    if m_max < 0:
        raise ValueError("m_max must be non-negative")
    coeffs = eq.poly.coeffs
    lead = coeffs[-1]
    xs = [float(v) for v in init]
    for m in range(m_max + 1 - n):
        nxt = -sum(coeffs[k] * xs[m + k] for k in range(n)) / lead
        xs.append(nxt)
    return xs[: m_max + 1]


def closed_form(rs: RootSet, init: Sequence[float]) -> ClosedFormSolution:
    """Solve for the closed-form coefficients matching x_0 .. x_{N-1} = init.

    The root set must be conjugate-closed with multiplicities summing to
    len(init). A singular interpolation system (possible only if upstream
    clustering merged distinct roots) raises IllConditionedError carrying
    the condition number.
    """
    n = rs.total_multiplicity
    if len(init) != n:
        raise ValueError(
            f"root multiplicities sum to {n} but {len(init)} initial values given"
        )
    cls = classify(rs)
    columns = []
    for lam, mult in cls.real_roots:
        for t in range(mult):
            columns.append([(m ** t) * (lam ** m) for m in range(n)])
    for rho, phi, mult in cls.conjugate_pairs:
        for t in range(mult):
            columns.append(
                [(m ** t) * (rho ** m) * math.cos(m * phi) for m in range(n)]
            )
        for t in range(mult):
            columns.append(
                [(m ** t) * (rho ** m) * math.sin(m * phi) for m in range(n)]
            )
    matrix = np.array(columns, dtype=float).T
    cond = float(np.linalg.cond(matrix)) if n else 0.0
    try:
        sol = np.linalg.solve(matrix, np.asarray(init, dtype=float))
    except np.linalg.LinAlgError as exc:
        raise IllConditionedError(
            f"closed-form system is singular (condition number {cond:.3e}); "
            f"distinct roots may have been clustered together"
        ) from exc
    coeffs_out = [float(v) for v in sol]
    pos = 0
    real_terms = []
    for lam, mult in cls.real_roots:
        real_terms.append((lam, mult, Polynomial(coeffs_out[pos : pos + mult])))
        pos += mult
    pair_terms = []
    for rho, phi, mult in cls.conjugate_pairs:
        b = Polynomial(coeffs_out[pos : pos + mult])
        pos += mult
        c = Polynomial(coeffs_out[pos : pos + mult])
        pos += mult
        pair_terms.append((rho, phi, mult, b, c))
    return ClosedFormSolution(tuple(real_terms), tuple(pair_terms), cond)


def evaluate_closed(cf: ClosedFormSolution, m: int) -> float:
    """Value of the closed-form solution at index m >= 0."""
    if m < 0:
        raise ValueError("m must be non-negative")
    total = 0.0
    for lam, _, a in cf.real_terms:
        total += a.evaluate(m) * lam ** m
    for rho, phi, _, b, c in cf.pair_terms:
        total += (
            b.evaluate(m) * math.cos(m * phi) + c.evaluate(m) * math.sin(m * phi)
        ) * rho ** m
    return total


def classify_monotonicity(
    xs: Sequence[float], slack: float | None = None
) -> MonotonicityClass:
    """Classify a sequence as monotone, anti-monotone, both, or neither.

    The default slack 1e-12 * max|x_m| absorbs floating noise only; the
    underlying notions are exact sign conditions.
    """
    if len(xs) < 3:
        raise ValueError("need at least 3 values to classify")
    if slack is None:
        slack = 1e-12 * max(abs(v) for v in xs)
    diffs = [xs[m] - xs[m - 1] for m in range(1, len(xs))]
    signed = [(-1) ** m * d for m, d in enumerate(diffs, start=1)]

    def shares_sign(values: list[float]) -> bool:
        return all(v >= -slack for v in values) or all(v <= slack for v in values)

    mono = shares_sign(diffs)
    anti = shares_sign(signed)
    if mono and anti:
        return MonotonicityClass.BOTH
    if mono:
        return MonotonicityClass.MONOTONE
    if anti:
        return MonotonicityClass.ANTI_MONOTONE
    return MonotonicityClass.NEITHER
