"""Real-coefficient polynomials, intervals, and iterative-equation values.

Coefficients are stored in ascending order (constant term first), matching
the indexing a_0, a_1, ..., a_N used everywhere else in the package.
Integer coefficients pass through sums, products, and monic division
unchanged, so identities that hold over the integers can be checked exactly.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, typing only
    from .roots import RootSet

# Imaginary parts up to IMAG_RESIDUE_TOL * (1 + |coeff|) count as conjugate
# rounding noise in from_roots; anything larger means the input root set was
# not closed under conjugation.
IMAG_RESIDUE_TOL = 1e-10


def _trimmed(coeffs: Iterable) -> tuple:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class Polynomial:
    """c_0 + c_1 r + ... + c_K r^K; the zero polynomial has an empty tuple.

    Trailing zero coefficients are stripped on construction, so the leading
    coefficient of a non-zero polynomial is never zero.
    """

    coeffs: tuple

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trimmed(coeffs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of a non-zero polynomial; the zero polynomial has none."""
        if self.is_zero:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if self.is_zero:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def evaluate(self, z):
        """Horner evaluation; accepts real or complex z. The zero polynomial maps to 0."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> "Polynomial":
        lead = self.leading
        if lead == 1:
            return self
        return Polynomial(c / lead for c in self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if self.is_zero or other.is_zero:
                return Polynomial()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Polynomial(out)
        return Polynomial(c * other for c in self.coeffs)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = f"{abs(c):g}"
            if k == 0:
                term = mag
            else:
                var = "r" if k == 1 else f"r^{k}"
                term = var if abs(c) == 1 else f"{mag} {var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)


def divide(p: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Synthetic long division: p = d * quotient + remainder, deg rem < deg d.

    Division by a monic divisor keeps integer coefficients exact. Dividing
    the zero polynomial yields (0, 0).
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return Polynomial(), Polynomial()
    dp, dd = p.degree, d.degree
    if dp < dd:
        return Polynomial(), p
    rem = list(p.coeffs)
    lead = d.coeffs[-1]
    quot = [0] * (dp - dd + 1)
    for k in range(dp - dd, -1, -1):
        c = rem[k + dd]
        if lead != 1:
            c = c / lead
        quot[k] = c
        if c:
            for j, dc in enumerate(d.coeffs):
                rem[k + j] -= c * dc
    # positions >= dd are eliminated by construction; keep only the true remainder
    return Polynomial(quot), Polynomial(rem[:dd])


def from_roots(rs: "RootSet") -> Polynomial:
    """Monic real polynomial with the given roots and multiplicities.

    The root set must be closed under conjugation; residual imaginary parts
    above IMAG_RESIDUE_TOL * (1 + |coeff|) raise ValueError.
    """
    acc = [complex(1.0)]
    for root, mult in rs.entries:
        for _ in range(mult):
            nxt = [complex(0.0)] * (len(acc) + 1)
            for i, c in enumerate(acc):
                nxt[i] += c * (-root)
                nxt[i + 1] += c
            acc = nxt
    coeffs = []
    for c in acc:
        if abs(c.imag) > IMAG_RESIDUE_TOL * (1.0 + abs(c)):
            raise ValueError(
                f"root set is not closed under conjugation "
                f"(coefficient {c!r} has a non-negligible imaginary part)"
            )
        coeffs.append(c.real)
    return Polynomial(coeffs)


@dataclass(frozen=True)
class Interval:
    """Non-degenerate real interval; infinite endpoints are always open."""

    lower: float = -math.inf
    upper: float = math.inf
    lower_closed: bool = False
    upper_closed: bool = False

    def __post_init__(self):
        if math.isnan(self.lower) or math.isnan(self.upper):
            raise ValueError("interval endpoints must not be NaN")
        if not self.lower < self.upper:
            raise ValueError(f"degenerate interval: lower={self.lower}, upper={self.upper}")
        if math.isinf(self.lower) and self.lower_closed:
            raise ValueError("an infinite lower endpoint cannot be closed")
        if math.isinf(self.upper) and self.upper_closed:
            raise ValueError("an infinite upper endpoint cannot be closed")

    def contains(self, x: float) -> bool:
        if x < self.lower or (x == self.lower and not self.lower_closed):
            return False
        if x > self.upper or (x == self.upper and not self.upper_closed):
            return False
        return True

    __contains__ = contains

    def contains_interval(self, other: "Interval") -> bool:
        lower_ok = self.lower < other.lower or (
            self.lower == other.lower and (self.lower_closed or not other.lower_closed)
        )
        upper_ok = other.upper < self.upper or (
            other.upper == self.upper and (self.upper_closed or not other.upper_closed)
        )
        return lower_ok and upper_ok

    @property
    def is_all_reals(self) -> bool:
        return math.isinf(self.lower) and math.isinf(self.upper)

    @property
    def is_bounded(self) -> bool:
        return math.isfinite(self.lower) and math.isfinite(self.upper)

    @classmethod
    def parse(cls, text: str) -> "Interval":
        """Parse '(0,inf)', '[2, 5)', '(-inf, 3]' and the like."""
        m = re.fullmatch(r"\s*([\[\(])([^,]+),([^\]\)]+)([\]\)])\s*", text)
        if m is None:
            raise ValueError(f"malformed interval: {text!r}")
        try:
            lower = float(m.group(2))
            upper = float(m.group(3))
        except ValueError:
            raise ValueError(f"malformed interval endpoint in {text!r}") from None
        return cls(lower, upper, m.group(1) == "[", m.group(4) == "]")

    def __str__(self) -> str:
        def fmt(x: float) -> str:
            if math.isinf(x):
                return "inf" if x > 0 else "-inf"
            return f"{x:g}"

        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{fmt(self.lower)}, {fmt(self.upper)}{right}"


ALL_REALS = Interval()


@dataclass(frozen=True)
class IterativeEquation:
    """a_N g^N(x) + ... + a_1 g(x) + a_0 x = 0 on a domain interval.

    The coefficient list is poly.coeffs with a_0 first; a_0 != 0 and
    a_N != 0 are enforced (the latter by coefficient trimming).
    """

    poly: Polynomial
    domain: Interval = ALL_REALS

    def __post_init__(self):
        if self.poly.is_zero or self.poly.degree < 1:
            raise ValueError("an iterative equation needs degree >= 1")
        if self.poly.coeffs[0] == 0:
            raise ValueError("coefficient a_0 must be non-zero")

    @property
    def order(self) -> int:
        return self.poly.degree


def dual(eq: IterativeEquation) -> IterativeEquation:
    """Equation satisfied by the inverse map: coefficients reversed.

    The characteristic roots of the dual are the reciprocals of the
    original's; dual(dual(eq)) == eq.
    """
    return IterativeEquation(Polynomial(reversed(eq.poly.coeffs)), eq.domain)
