"""Root extraction with multiplicities, conjugate pairing, and modulus-gap tests.

The extraction pipeline is: eigenvalues of the companion matrix of the
monic-normalized polynomial (LAPACK balances it), one guarded step of
simultaneous Newton (Aberth-Ehrlich) polishing, agglomerative clustering to
recover multiplicities, and conjugate symmetrization. A reconstruction
check multiplies the clustered root set back out and compares coefficients;
failure means the polynomial is too ill-conditioned to analyze honestly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .errors import IllConditionedError
from .polynomial import Polynomial, from_roots


@dataclass(frozen=True)
class ToleranceConfig:
    """Knobs that make analyzer verdicts reproducible.

    cluster_radius: relative radius for multiplicity clustering, scaled by
        max(1, largest root modulus). Eigenvalues of a k-fold root split by
        roughly eps**(1/k); the default covers k <= 3 across moduli up to 5
        with an order of magnitude to spare. Roots of the input that are
        genuinely closer than this are merged by construction; see module
        docs.
    recon_tol: maximum relative coefficient error when the extracted root
        set is multiplied back out.
    gap_tol: relative margin below which a strict modulus inequality is
        reported indeterminate rather than holding.
    imag_tol: relative imaginary-part threshold separating real roots from
        conjugate pairs.
    """

    cluster_radius: float = 1e-4
    recon_tol: float = 1e-6
    gap_tol: float = 1e-9
    imag_tol: float = 1e-10


DEFAULT_TOLERANCES = ToleranceConfig()


def _entry_key(entry):
    root, _ = entry
    return (root.real, root.imag)


@dataclass(frozen=True)
class RootSet:
    """Pairwise-distinct complex roots with multiplicities, canonically sorted."""

    entries: tuple

    def __init__(self, entries: Iterable = ()):
        normalized = tuple(
            sorted(((complex(r), int(m)) for r, m in entries), key=_entry_key)
        )
        object.__setattr__(self, "entries", normalized)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class RootClassification:
    """Real roots and conjugate pairs, each pair reported once.

    real_roots: tuple of (value, multiplicity), sorted by value.
    conjugate_pairs: tuple of (modulus, argument, multiplicity) with the
        argument strictly inside (0, pi), sorted by (modulus, argument).
    """

    real_roots: tuple
    conjugate_pairs: tuple


class GapVerdict(str, Enum):
    STRICT = "strict"
    VIOLATED = "violated"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class GapReport:
    """Three-valued comparison of real-root moduli against pair moduli.

    condition_a: every real modulus strictly below every pair modulus.
    condition_b: every real modulus strictly above every pair modulus.
    Empty categories make both conditions vacuously strict; the ranges are
    then None.
    """

    condition_a: GapVerdict
    condition_b: GapVerdict
    real_modulus_range: tuple | None
    pair_modulus_range: tuple | None


def _companion_eigenvalues(monic: Polynomial) -> list[complex]:
    n = monic.degree
    a = np.zeros((n, n))
    idx = np.arange(n - 1)
    a[idx + 1, idx] = 1.0
    a[:, -1] = [-float(c) for c in monic.coeffs[:-1]]
    return list(np.linalg.eigvals(a))


def _aberth_step(p: Polynomial, dp: Polynomial, z: complex, others: list[complex]) -> complex:
    # One simultaneous-Newton (Aberth-Ehrlich) step, accepted only if the
    # residual |p| actually drops.
    pz = p.evaluate(z)
    if pz == 0:
        return z
    dpz = dp.evaluate(z)
    if dpz == 0:
        return z
    newton = pz / dpz
    repulsion = sum(1.0 / (z - w) for w in others if w != z)
    denom = 1.0 - newton * repulsion
    if denom == 0:
        return z
    cand = z - newton / denom
    return cand if abs(p.evaluate(cand)) < abs(pz) else z


def _cluster(points: list[complex], radius: float) -> list[list[complex]]:
    # Single-linkage union-find; n <= degree, so quadratic cost is fine.
    n = len(points)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(points[i] - points[j]) <= radius:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[complex]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(points[i])
    return list(groups.values())


def _symmetrize(clusters: list[list[complex]], p: Polynomial, imag_tol: float, radius: float):
    # Polish singleton clusters with one Aberth step; a multiple root is
    # best estimated by the raw cluster centroid, whose eigenvalue splitting
    # cancels symmetrically, while |p| is noise-dominated there and would
    # mislead any residual-guided refinement.
    dp = p.derivative()
    all_points = [z for group in clusters for z in group]
    entries = []
    positive = []
    negative = []
    for group in clusters:
        centroid = sum(group) / len(group)
        mult = len(group)
        if mult == 1:
            centroid = _aberth_step(p, dp, centroid, all_points)
        if abs(centroid.imag) <= imag_tol * (1.0 + abs(centroid)):
            entries.append((complex(centroid.real), mult))
        elif centroid.imag > 0:
            positive.append((centroid, mult))
        else:
            negative.append((centroid, mult))
    if len(positive) != len(negative):
        raise IllConditionedError(
            "conjugate pairing failed: unequal numbers of upper and lower roots"
        )
    remaining = list(negative)
    for z, mult in positive:
        target = z.conjugate()
        best = min(range(len(remaining)), key=lambda k: abs(remaining[k][0] - target))
        w, wm = remaining[best]
        if abs(w - target) > max(radius, 1e-8 * (1.0 + abs(z))):
            raise IllConditionedError(
                f"conjugate pairing failed: no mirror root for {z!r}"
            )
        if wm != mult:
            raise IllConditionedError(
                f"conjugate pairing failed: multiplicity mismatch at {z!r}"
            )
        del remaining[best]
        mu = (z + w.conjugate()) / 2.0
        entries.append((mu, mult))
        entries.append((mu.conjugate(), mult))
    return entries


def find_roots(p: Polynomial, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> RootSet:
    """All complex roots of p with multiplicities.

    Raises ValueError for the zero polynomial or degree 0, and
    IllConditionedError when the result cannot reproduce p within
    cfg.recon_tol.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("root extraction needs a polynomial of degree >= 1")
    monic = p.monic()
    if monic.degree == 1:
        raw = [complex(-monic.coeffs[0])]
    else:
        raw = _companion_eigenvalues(monic)
    scale = max(1.0, max(abs(z) for z in raw))
    radius = cfg.cluster_radius * scale
    clusters = _cluster(raw, radius)
    entries = _symmetrize(clusters, monic, cfg.imag_tol, radius)
    rs = RootSet(entries)
    recon = from_roots(rs)
    coeff_scale = max(1.0, max(abs(c) for c in monic.coeffs))
    residual = max(
        abs(a - b) for a, b in zip(recon.coeffs, monic.coeffs)
    ) / coeff_scale
    if residual > cfg.recon_tol:
        raise IllConditionedError(
            f"extracted roots reproduce the polynomial only to relative "
            f"error {residual:.3e} (limit {cfg.recon_tol:.3e}); "
            f"the input is too ill-conditioned"
        )
    return rs


def classify(rs: RootSet, tol: float = DEFAULT_TOLERANCES.imag_tol) -> RootClassification:
    """Split a conjugate-closed root set into real roots and conjugate pairs."""
    reals = []
    positive = []
    negative = []
    for root, mult in rs.entries:
        if abs(root.imag) <= tol * (1.0 + abs(root)):
            reals.append((root.real, mult))
        elif root.imag > 0:
            positive.append((root, mult))
        else:
            negative.append((root, mult))
    pairs = []
    remaining = list(negative)
    for z, mult in positive:
        target = z.conjugate()
        match = None
        for k, (w, wm) in enumerate(remaining):
            if abs(w - target) <= max(tol, 1e-9) * (1.0 + abs(z)) and wm == mult:
                match = k
                break
        if match is None:
            raise ValueError(f"unmatched non-real root {z!r} in root set")
        del remaining[match]
        pairs.append((abs(z), cmath.phase(z), mult))
    if remaining:
        raise ValueError(f"unmatched non-real root {remaining[0][0]!r} in root set")
    return RootClassification(
        real_roots=tuple(sorted(reals)),
        conjugate_pairs=tuple(sorted(pairs)),
    )


def modulus_gap(cls: RootClassification, gap_tol: float = DEFAULT_TOLERANCES.gap_tol) -> GapReport:
    """Compare real-root moduli against conjugate-pair moduli, three-valued.

    Strict inequalities hold only when the margin exceeds gap_tol relative
    to the larger modulus involved; ties inside the margin come back
    indeterminate so callers never fabricate a theorem hypothesis.
    """
    real_mods = [abs(v) for v, _ in cls.real_roots]
    pair_mods = [rho for rho, _, _ in cls.conjugate_pairs]
    if not real_mods or not pair_mods:
        return GapReport(
            GapVerdict.STRICT,
            GapVerdict.STRICT,
            (min(real_mods), max(real_mods)) if real_mods else None,
            (min(pair_mods), max(pair_mods)) if pair_mods else None,
        )

    def verdict(margin: float, scale: float) -> GapVerdict:
        if margin > gap_tol * scale:
            return GapVerdict.STRICT
        if margin < -gap_tol * scale:
            return GapVerdict.VIOLATED
        return GapVerdict.INDETERMINATE

    margin_a = min(pair_mods) - max(real_mods)
    margin_b = min(real_mods) - max(pair_mods)
    scale = max(1.0, max(real_mods), max(pair_mods))
    return GapReport(
        verdict(margin_a, scale),
        verdict(margin_b, scale),
        (min(real_mods), max(real_mods)),
        (min(pair_mods), max(pair_mods)),
    )
