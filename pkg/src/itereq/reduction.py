"""Order-reduction rules: which roots of the characteristic equation can be
eliminated, under what hypotheses on the unknown solution.

The analyzer reports every rule whose hypotheses hold strictly; callers
filter by what they know about the solution (the rules are conditional on
its monotonicity and sometimes surjectivity, which a static analyzer cannot
decide). Rules:

R1  all real moduli strictly below all pair moduli: drop every conjugate
    pair; no extra hypotheses.
R2  all real moduli strictly above all pair moduli: drop the pairs via the
    dual equation; needs a surjective solution (automatic on all of R).
R3  like R1 when a simple root 1 is present; the root 1 is retained and its
    modulus is exempt from the gap condition.
R4  like R2 with a simple root 1 retained.
R5  extreme-modulus roots real and of opposite sign, everything else
    strictly between: an increasing solution lets the negative extreme go.
R6  same root geometry for decreasing solutions: drop the positive extreme
    (branch i), or cut the root 1 down to multiplicity one when the
    positive extreme is 1 (branch ii).
R7  a simple root 1 on top of the R5/R6 geometry (computed over the other
    roots); the root 1 is retained and the eliminated extreme is keyed on
    the supplied direction. The source theorem states the decreasing
    hypothesis but concludes for both directions; both are reported here,
    one result per direction.

For R2 and R4-R7 the dual equation enters only when the root to eliminate
sits at the *small* end of the modulus range; surjectivity is required
exactly then (for R2/R4 the dual is always used).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boros import boros_characteristic, find_r0
from .polynomial import IterativeEquation, Polynomial, from_roots
from .roots import (
    DEFAULT_TOLERANCES,
    GapVerdict,
    RootSet,
    ToleranceConfig,
    classify,
    find_roots,
    modulus_gap,
)

# Absolute tolerance for recognizing the root 1 in rules R3/R4/R6/R7.
ROOT_ONE_TOL = 1e-9


@dataclass(frozen=True)
class ReductionResult:
    """One applicable elimination with its preconditions.

    rule is "R1".."R7" from analyze; the staged reduction of the r^n = nr-n+1
    family emits composite labels such as "R5+R1". reduced and eliminated
    partition the original root set (except that branch (ii) of R6 keeps a
    single copy of the root 1 and moves the surplus multiplicity to
    eliminated). reduced_poly is the monic polynomial built from reduced.
    """

    rule: str
    requires_monotonicity: str
    requires_surjectivity: bool
    used_dual: bool
    eliminated: RootSet
    reduced: RootSet
    reduced_poly: Polynomial


@dataclass(frozen=True)
class AnalysisVerdict:
    """All applicable reductions plus the two global flags.

    no_solution: every characteristic root is non-real, so no continuous
    solution exists; results is then empty. open_case: a real root and a
    conjugate pair tie at the maximal modulus, the configuration whose
    reducibility is an open problem; nothing is eliminated at such a tie.
    """

    results: tuple
    no_solution: bool
    open_case: bool


def _is_real(root: complex, imag_tol: float) -> bool:
    return abs(root.imag) <= imag_tol * (1.0 + abs(root))


def _make_result(rule, direction, surjective, dual_used, kept, removed) -> ReductionResult:
    reduced = RootSet(kept)
    return ReductionResult(
        rule=rule,
        requires_monotonicity=direction,
        requires_surjectivity=surjective,
        used_dual=dual_used,
        eliminated=RootSet(removed),
        reduced=reduced,
        reduced_poly=from_roots(reduced),
    )


def _opposite_extremes(entries, imag_tol: float, gap_tol: float):
    """Indices of the unique smallest- and largest-modulus entries, provided
    both are real, of opposite sign, and strictly separated from the rest."""
    if len(entries) < 2:
        return None
    order = sorted(range(len(entries)), key=lambda i: abs(entries[i][0]))
    mods = [abs(entries[i][0]) for i in order]
    scale = max(1.0, mods[-1])
    if mods[1] - mods[0] <= gap_tol * scale:
        return None
    if mods[-1] - mods[-2] <= gap_tol * scale:
        return None
    small, big = entries[order[0]], entries[order[-1]]
    if not (_is_real(small[0], imag_tol) and _is_real(big[0], imag_tol)):
        return None
    if not small[0].real * big[0].real < 0:
        return None
    return order[0], order[-1]


def _simple_one_index(entries, imag_tol: float):
    for i, (root, mult) in enumerate(entries):
        if _is_real(root, imag_tol) and abs(root.real - 1.0) <= ROOT_ONE_TOL:
            return i if mult == 1 else None
    return None


def analyze(eq: IterativeEquation, cfg: ToleranceConfig = DEFAULT_TOLERANCES) -> AnalysisVerdict:
    """Apply every elimination rule whose hypotheses hold strictly.

    Strictness is judged against cfg.gap_tol: a modulus tie inside the
    margin makes the rule inapplicable rather than guessed. Each rule is
    applied to the original equation (no chaining); callers may re-analyze
    a reduced equation to iterate.
    """
    rs = find_roots(eq.poly, cfg)
    entries = rs.entries
    real_idx = [i for i, (root, _) in enumerate(entries) if _is_real(root, cfg.imag_tol)]
    pair_idx = [i for i in range(len(entries)) if i not in real_idx]

    all_mods = [abs(root) for root, _ in entries]
    rho_max = max(all_mods)
    tie_scale = max(1.0, rho_max)
    real_at_max = any(rho_max - all_mods[i] <= cfg.gap_tol * tie_scale for i in real_idx)
    pair_at_max = any(rho_max - all_mods[i] <= cfg.gap_tol * tie_scale for i in pair_idx)
    open_case = bool(real_idx) and bool(pair_idx) and real_at_max and pair_at_max

    if not real_idx:
        return AnalysisVerdict(results=(), no_solution=True, open_case=False)

    results = []
    gap = modulus_gap(classify(rs, cfg.imag_tol), cfg.gap_tol)
    reals = [entries[i] for i in real_idx]
    pairs = [entries[i] for i in pair_idx]

    if pairs and gap.condition_a is GapVerdict.STRICT:
        results.append(_make_result("R1", "any", False, False, reals, pairs))
    if pairs and gap.condition_b is GapVerdict.STRICT:
        results.append(_make_result("R2", "any", True, True, reals, pairs))

    one_local = _simple_one_index(reals, cfg.imag_tol)
    if one_local is not None and pairs:
        others = [e for k, e in enumerate(reals) if k != one_local]
        min_pair = min(abs(root) for root, _ in pairs)
        max_pair = max(abs(root) for root, _ in pairs)
        scale = max(1.0, max(all_mods))
        if not others or max(abs(r) for r, _ in others) < min_pair - cfg.gap_tol * scale:
            results.append(_make_result("R3", "any", False, False, reals, pairs))
        if not others or min(abs(r) for r, _ in others) > max_pair + cfg.gap_tol * scale:
            results.append(_make_result("R4", "any", True, True, reals, pairs))

    ext = _opposite_extremes(entries, cfg.imag_tol, cfg.gap_tol)
    if ext is not None:
        si, bi = ext
        pos_i, neg_i = (si, bi) if entries[si][0].real > 0 else (bi, si)
        middles = [e for k, e in enumerate(entries) if k not in (si, bi)]
        pos_root, pos_mult = entries[pos_i]
        neg_entry = entries[neg_i]

        # The source proofs position the root to eliminate at the large end,
        # dualizing first when it is not; surjectivity is needed exactly then.
        dual5 = neg_i == si
        results.append(
            _make_result(
                "R5", "increasing", dual5, dual5,
                [entries[pos_i], *middles], [neg_entry],
            )
        )
        dual6 = pos_i == si
        if abs(pos_root.real - 1.0) <= ROOT_ONE_TOL:
            if pos_mult > 1:
                results.append(
                    _make_result(
                        "R6", "decreasing", dual6, dual6,
                        [(pos_root, 1), neg_entry, *middles],
                        [(pos_root, pos_mult - 1)],
                    )
                )
        else:
            results.append(
                _make_result(
                    "R6", "decreasing", dual6, dual6,
                    [neg_entry, *middles], [entries[pos_i]],
                )
            )

    one_global = _simple_one_index(entries, cfg.imag_tol)
    if one_global is not None:
        one_entry = entries[one_global]
        sub = [e for k, e in enumerate(entries) if k != one_global]
        ext7 = _opposite_extremes(sub, cfg.imag_tol, cfg.gap_tol)
        if ext7 is not None:
            si, bi = ext7
            pos_i, neg_i = (si, bi) if sub[si][0].real > 0 else (bi, si)
            mids = [e for k, e in enumerate(sub) if k not in (si, bi)]
            for direction, removed_i, kept_i in (
                ("increasing", neg_i, pos_i),
                ("decreasing", pos_i, neg_i),
            ):
                dual7 = removed_i == si
                results.append(
                    _make_result(
                        "R7", direction, dual7, dual7,
                        [one_entry, sub[kept_i], *mids], [sub[removed_i]],
                    )
                )

    return AnalysisVerdict(results=tuple(results), no_solution=False, open_case=open_case)


def reduce_boros_equation(
    n: int, direction: str, cfg: ToleranceConfig = DEFAULT_TOLERANCES
) -> ReductionResult:
    """Staged reduction of r^n = nr - n + 1 down to a quadratic.

    Increasing solutions satisfy g^2(x) - 2 g(x) + x = 0, i.e. (r-1)^2.
    Decreasing solutions exist only for odd n and satisfy
    g^2(x) - (r0+1) g(x) + r0 x = 0 with r0 the negative characteristic
    root; requesting decreasing with even n is an error since the equation
    forces g to be increasing. The rule label records the chain of
    single-rule eliminations actually used ("none" for n = 2, where the
    equation is already second order).
    """
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be increasing or decreasing, got {direction!r}")
    ba = boros_characteristic(n)
    rs = find_roots(ba.char_poly, cfg)
    entries = rs.entries
    one_i = min(range(len(entries)), key=lambda i: abs(entries[i][0] - 1.0))
    if abs(entries[one_i][0] - 1.0) > 1e-6 or entries[one_i][1] != 2:
        raise ArithmeticError(f"root 1 of multiplicity 2 not found for n={n}")
    pairs = [
        e
        for i, e in enumerate(entries)
        if i != one_i and not _is_real(e[0], cfg.imag_tol)
    ]

    if direction == "increasing":
        removed = [e for i, e in enumerate(entries) if i != one_i]
        parts = (["R5"] if n % 2 == 1 else []) + (["R1"] if pairs else [])
        kept = RootSet([(1.0, 2)])
        return ReductionResult(
            rule="+".join(parts) or "none",
            requires_monotonicity="increasing",
            requires_surjectivity=False,
            used_dual=False,
            eliminated=RootSet(removed),
            reduced=kept,
            reduced_poly=from_roots(kept),
        )

    if n % 2 == 0:
        raise ValueError(
            f"n={n} admits no decreasing solution: the equation forces g to be increasing"
        )
    r0 = find_r0(n)
    kept = RootSet([(1.0, 1), (r0, 1)])
    removed = RootSet([(1.0, 1), *pairs])
    return ReductionResult(
        rule="+".join(["R6"] + (["R3"] if pairs else [])),
        requires_monotonicity="decreasing",
        requires_surjectivity=True,
        used_dual=True,
        eliminated=removed,
        reduced=kept,
        reduced_poly=from_roots(kept),
    )
