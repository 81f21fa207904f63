"""Report values emitted by the CLI, with JSON encoding that round-trips.

JSON schema conventions: every top-level report object carries a "kind"
discriminator; complex numbers are two-element arrays [re, im]; infinite
endpoints are the strings "inf" / "-inf"; polynomials are ascending
coefficient arrays.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boros import BorosAnalysis, BorosClassification, SolutionFamily
from .polynomial import Interval, Polynomial
from .recurrence import ClosedFormSolution
from .reduction import AnalysisVerdict, ReductionResult
from .roots import GapReport, GapVerdict, RootClassification, RootSet
from .verify import AffineMap, PowerMap, VerificationReport


@dataclass(frozen=True)
class RootsReport:
    poly: Polynomial
    roots: RootSet
    classification: RootClassification
    gap: GapReport


@dataclass(frozen=True)
class ReduceReport:
    poly: Polynomial
    verdict: AnalysisVerdict


@dataclass(frozen=True)
class RecurrenceReport:
    poly: Polynomial
    init: tuple
    iterated: tuple
    closed_values: tuple
    max_abs_diff: float
    closed: ClosedFormSolution


@dataclass(frozen=True)
class VerifyReport:
    poly: Polynomial
    candidate: object
    report: VerificationReport


@dataclass(frozen=True)
class BorosReport:
    analysis: BorosAnalysis
    classification: BorosClassification
    checks: tuple  # of (family description, c, VerificationReport)


# --- encoding helpers -------------------------------------------------------


def _enc_real(x):
    if x is None or not math.isinf(x):
        return x
    return "inf" if x > 0 else "-inf"


def _dec_real(v):
    if isinstance(v, str):
        return float(v)
    return v


def _enc_complex(z: complex) -> list:
    return [z.real, z.imag]


def _enc_poly(p: Polynomial) -> list:
    return list(p.coeffs)


def _dec_poly(v) -> Polynomial:
    return Polynomial(v)


def _enc_rootset(rs: RootSet) -> list:
    return [[_enc_complex(root), mult] for root, mult in rs.entries]


def _dec_rootset(v) -> RootSet:
    return RootSet((complex(re, im), mult) for (re, im), mult in v)


def _enc_classification(cls: RootClassification) -> dict:
    return {
        "real": [list(e) for e in cls.real_roots],
        "pairs": [list(e) for e in cls.conjugate_pairs],
    }


def _dec_classification(v) -> RootClassification:
    return RootClassification(
        real_roots=tuple(tuple(e) for e in v["real"]),
        conjugate_pairs=tuple(tuple(e) for e in v["pairs"]),
    )


def _enc_gap(gap: GapReport) -> dict:
    return {
        "condition_a": gap.condition_a.value,
        "condition_b": gap.condition_b.value,
        "real_modulus_range": list(gap.real_modulus_range)
        if gap.real_modulus_range
        else None,
        "pair_modulus_range": list(gap.pair_modulus_range)
        if gap.pair_modulus_range
        else None,
    }


def _dec_gap(v) -> GapReport:
    return GapReport(
        condition_a=GapVerdict(v["condition_a"]),
        condition_b=GapVerdict(v["condition_b"]),
        real_modulus_range=tuple(v["real_modulus_range"])
        if v["real_modulus_range"]
        else None,
        pair_modulus_range=tuple(v["pair_modulus_range"])
        if v["pair_modulus_range"]
        else None,
    )


def _enc_interval(iv: Interval) -> dict:
    return {
        "lower": _enc_real(iv.lower),
        "upper": _enc_real(iv.upper),
        "lower_closed": iv.lower_closed,
        "upper_closed": iv.upper_closed,
    }


def _dec_interval(v) -> Interval:
    return Interval(
        _dec_real(v["lower"]), _dec_real(v["upper"]), v["lower_closed"], v["upper_closed"]
    )


def _enc_candidate(g) -> dict:
    if isinstance(g, AffineMap):
        return {
            "family": "affine",
            "slope": g.slope,
            "intercept": g.intercept,
            "domain": _enc_interval(g.domain),
        }
    if isinstance(g, PowerMap):
        return {
            "family": "power",
            "coefficient": g.coefficient,
            "exponent": g.exponent,
            "domain": _enc_interval(g.domain),
        }
    raise TypeError(f"not a candidate function: {g!r}")


def _dec_candidate(v):
    domain = _dec_interval(v["domain"])
    if v["family"] == "affine":
        return AffineMap(v["slope"], v["intercept"], domain)
    if v["family"] == "power":
        return PowerMap(v["coefficient"], v["exponent"], domain)
    raise ValueError(f"unknown candidate family {v['family']!r}")


def _enc_verification(rep: VerificationReport) -> dict:
    return {
        "max_residual": _enc_real(rep.max_residual),
        "residual_scale": rep.residual_scale,
        "samples": rep.samples,
        "injective_on_grid": rep.injective_on_grid,
        "direction": rep.direction,
        "verdict": rep.verdict,
    }


def _dec_verification(v) -> VerificationReport:
    return VerificationReport(
        max_residual=_dec_real(v["max_residual"]),
        residual_scale=v["residual_scale"],
        samples=v["samples"],
        injective_on_grid=v["injective_on_grid"],
        direction=v["direction"],
        verdict=v["verdict"],
    )


def _enc_reduction(res: ReductionResult) -> dict:
    return {
        "rule": res.rule,
        "requires_monotonicity": res.requires_monotonicity,
        "requires_surjectivity": res.requires_surjectivity,
        "used_dual": res.used_dual,
        "eliminated": _enc_rootset(res.eliminated),
        "reduced": _enc_rootset(res.reduced),
        "reduced_poly": _enc_poly(res.reduced_poly),
    }


def _dec_reduction(v) -> ReductionResult:
    return ReductionResult(
        rule=v["rule"],
        requires_monotonicity=v["requires_monotonicity"],
        requires_surjectivity=v["requires_surjectivity"],
        used_dual=v["used_dual"],
        eliminated=_dec_rootset(v["eliminated"]),
        reduced=_dec_rootset(v["reduced"]),
        reduced_poly=_dec_poly(v["reduced_poly"]),
    )


def _enc_analysis_verdict(v: AnalysisVerdict) -> dict:
    return {
        "results": [_enc_reduction(r) for r in v.results],
        "no_solution": v.no_solution,
        "open_case": v.open_case,
    }


def _dec_analysis_verdict(v) -> AnalysisVerdict:
    return AnalysisVerdict(
        results=tuple(_dec_reduction(r) for r in v["results"]),
        no_solution=v["no_solution"],
        open_case=v["open_case"],
    )


def _enc_closed_form(cf: ClosedFormSolution) -> dict:
    return {
        "real_terms": [[lam, mult, _enc_poly(a)] for lam, mult, a in cf.real_terms],
        "pair_terms": [
            [rho, phi, mult, _enc_poly(b), _enc_poly(c)]
            for rho, phi, mult, b, c in cf.pair_terms
        ],
        "condition_number": cf.condition_number,
    }


def _dec_closed_form(v) -> ClosedFormSolution:
    return ClosedFormSolution(
        real_terms=tuple(
            (lam, mult, _dec_poly(a)) for lam, mult, a in v["real_terms"]
        ),
        pair_terms=tuple(
            (rho, phi, mult, _dec_poly(b), _dec_poly(c))
            for rho, phi, mult, b, c in v["pair_terms"]
        ),
        condition_number=v["condition_number"],
    )


def _enc_boros_analysis(ba: BorosAnalysis) -> dict:
    return {
        "n": ba.n,
        "char_poly": _enc_poly(ba.char_poly),
        "cofactor": _enc_poly(ba.cofactor),
        "roots": _enc_rootset(ba.roots) if ba.roots is not None else None,
        "r0": ba.r0,
        "bound_ok": ba.bound_ok,
        "vieta_residual": ba.vieta_residual,
    }


def _dec_boros_analysis(v) -> BorosAnalysis:
    return BorosAnalysis(
        n=v["n"],
        char_poly=_dec_poly(v["char_poly"]),
        cofactor=_dec_poly(v["cofactor"]),
        roots=_dec_rootset(v["roots"]) if v["roots"] is not None else None,
        r0=v["r0"],
        bound_ok=v["bound_ok"],
        vieta_residual=v["vieta_residual"],
    )


def _enc_family(fam: SolutionFamily) -> dict:
    return {
        "exponent": fam.exponent,
        "c_low": fam.c_low,
        "c_high": _enc_real(fam.c_high),
        "c_low_closed": fam.c_low_closed,
        "c_high_closed": fam.c_high_closed,
        "exponent_residual": fam.exponent_residual,
        "description": fam.description,
    }


def _dec_family(v) -> SolutionFamily:
    return SolutionFamily(
        exponent=v["exponent"],
        c_low=v["c_low"],
        c_high=_dec_real(v["c_high"]),
        c_low_closed=v["c_low_closed"],
        c_high_closed=v["c_high_closed"],
        exponent_residual=v["exponent_residual"],
    )


def _enc_boros_classification(bc: BorosClassification) -> dict:
    return {
        "case": bc.case,
        "families": [_enc_family(f) for f in bc.families],
        "n": bc.n,
        "interval": _enc_interval(bc.interval),
        "r0": bc.r0,
    }


def _dec_boros_classification(v) -> BorosClassification:
    return BorosClassification(
        case=v["case"],
        families=tuple(_dec_family(f) for f in v["families"]),
        n=v["n"],
        interval=_dec_interval(v["interval"]),
        r0=v["r0"],
    )


# --- top-level dispatch -----------------------------------------------------


def to_jsonable(report) -> dict:
    """Encode any CLI report as a JSON-ready dict with a kind discriminator."""
    if isinstance(report, RootsReport):
        return {
            "kind": "roots_report",
            "poly": _enc_poly(report.poly),
            "roots": _enc_rootset(report.roots),
            "classification": _enc_classification(report.classification),
            "gap": _enc_gap(report.gap),
        }
    if isinstance(report, ReduceReport):
        return {
            "kind": "reduce_report",
            "poly": _enc_poly(report.poly),
            "verdict": _enc_analysis_verdict(report.verdict),
        }
    if isinstance(report, RecurrenceReport):
        return {
            "kind": "recurrence_report",
            "poly": _enc_poly(report.poly),
            "init": list(report.init),
            "iterated": list(report.iterated),
            "closed_values": list(report.closed_values),
            "max_abs_diff": report.max_abs_diff,
            "closed": _enc_closed_form(report.closed),
        }
    if isinstance(report, VerifyReport):
        return {
            "kind": "verify_report",
            "poly": _enc_poly(report.poly),
            "candidate": _enc_candidate(report.candidate),
            "report": _enc_verification(report.report),
        }
    if isinstance(report, BorosReport):
        return {
            "kind": "boros_report",
            "analysis": _enc_boros_analysis(report.analysis),
            "classification": _enc_boros_classification(report.classification),
            "checks": [
                [desc, c, _enc_verification(rep)] for desc, c, rep in report.checks
            ],
        }
    raise TypeError(f"not a report: {report!r}")


def from_jsonable(data: dict):
    """Decode a dict produced by to_jsonable back into the report value."""
    kind = data.get("kind")
    if kind == "roots_report":
        return RootsReport(
            poly=_dec_poly(data["poly"]),
            roots=_dec_rootset(data["roots"]),
            classification=_dec_classification(data["classification"]),
            gap=_dec_gap(data["gap"]),
        )
    if kind == "reduce_report":
        return ReduceReport(
            poly=_dec_poly(data["poly"]),
            verdict=_dec_analysis_verdict(data["verdict"]),
        )
    if kind == "recurrence_report":
        return RecurrenceReport(
            poly=_dec_poly(data["poly"]),
            init=tuple(data["init"]),
            iterated=tuple(data["iterated"]),
            closed_values=tuple(data["closed_values"]),
            max_abs_diff=data["max_abs_diff"],
            closed=_dec_closed_form(data["closed"]),
        )
    if kind == "verify_report":
        return VerifyReport(
            poly=_dec_poly(data["poly"]),
            candidate=_dec_candidate(data["candidate"]),
            report=_dec_verification(data["report"]),
        )
    if kind == "boros_report":
        return BorosReport(
            analysis=_dec_boros_analysis(data["analysis"]),
            classification=_dec_boros_classification(data["classification"]),
            checks=tuple(
                (desc, c, _dec_verification(rep)) for desc, c, rep in data["checks"]
            ),
        )
    raise ValueError(f"unknown report kind {kind!r}")


# --- text rendering ---------------------------------------------------------


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.12g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.12g} {sign} {abs(z.imag):.12g}i"


def _render_rootset(rs: RootSet, indent: str = "  ") -> list[str]:
    return [f"{indent}{_fmt_complex(r)} (multiplicity {m})" for r, m in rs.entries]


def _render_reduction(res: ReductionResult) -> list[str]:
    need = res.requires_monotonicity
    lines = [
        f"rule {res.rule}: reduced characteristic {res.reduced_poly}",
        f"  monotonicity required: {need}",
        f"  surjectivity required: {'yes' if res.requires_surjectivity else 'no'}"
        + (" (automatic when the domain is all reals)" if res.requires_surjectivity else ""),
        f"  dual equation used: {'yes' if res.used_dual else 'no'}",
        "  eliminated roots:",
        *_render_rootset(res.eliminated, "    "),
        "  retained roots:",
        *_render_rootset(res.reduced, "    "),
    ]
    return lines


def render_text(report) -> str:
    """Human-readable rendering of any CLI report."""
    if isinstance(report, RootsReport):
        lines = [f"polynomial: {report.poly}", "roots:"]
        lines += _render_rootset(report.roots)
        lines.append("real roots:")
        lines += [
            f"  {v:.12g} (multiplicity {m})" for v, m in report.classification.real_roots
        ] or ["  none"]
        lines.append("conjugate pairs:")
        lines += [
            f"  modulus {rho:.12g}, argument {phi:.12g} (multiplicity {m})"
            for rho, phi, m in report.classification.conjugate_pairs
        ] or ["  none"]
        lines.append(
            f"modulus gap: reals below pairs: {report.gap.condition_a.value}; "
            f"reals above pairs: {report.gap.condition_b.value}"
        )
        return "\n".join(lines)
    if isinstance(report, ReduceReport):
        lines = [f"polynomial: {report.poly}"]
        if report.verdict.no_solution:
            lines.append(
                "no continuous solution: every characteristic root is non-real"
            )
        if report.verdict.open_case:
            lines.append(
                "open case: a real root and a conjugate pair tie at the maximal "
                "modulus; no known reduction applies there"
            )
        if not report.verdict.results and not report.verdict.no_solution:
            lines.append("no reduction rule applies")
        for res in report.verdict.results:
            lines += _render_reduction(res)
        return "\n".join(lines)
    if isinstance(report, RecurrenceReport):
        lines = [
            f"polynomial: {report.poly}",
            f"initial values: {', '.join(f'{v:.12g}' for v in report.init)}",
            f"closed form (condition number {report.closed.condition_number:.3e}):",
        ]
        for lam, mult, a in report.closed.real_terms:
            lines.append(f"  ({a}) * ({lam:.12g})^m   [multiplicity {mult}]")
        for rho, phi, mult, b, c in report.closed.pair_terms:
            lines.append(
                f"  (({b}) cos({phi:.12g} m) + ({c}) sin({phi:.12g} m)) * "
                f"{rho:.12g}^m   [multiplicity {mult}]"
            )
        lines.append("  m : iterated , closed")
        for m, (it, cl) in enumerate(zip(report.iterated, report.closed_values)):
            lines.append(f"  {m} : {it:.12g} , {cl:.12g}")
        lines.append(f"max |iterated - closed| = {report.max_abs_diff:.3e}")
        return "\n".join(lines)
    if isinstance(report, VerifyReport):
        rep = report.report
        lines = [
            f"polynomial: {report.poly}",
            f"candidate: {_describe_candidate(report.candidate)}",
            f"verdict: {rep.verdict}",
            f"max residual {rep.max_residual:.3e} against scale {rep.residual_scale:.3e} "
            f"over {rep.samples} samples",
            f"injective on grid: {'yes' if rep.injective_on_grid else 'no'}; "
            f"direction: {rep.direction or 'none'}",
            "note: surjectivity is assumed from the family structure, not sampled",
        ]
        return "\n".join(lines)
    if isinstance(report, BorosReport):
        ba = report.analysis
        bc = report.classification
        lines = [
            f"n = {ba.n}: characteristic {ba.char_poly}",
            f"cofactor {ba.cofactor} (times (r-1)^2, checked exactly)",
        ]
        if ba.roots is not None:
            lines.append("roots:")
            lines += _render_rootset(ba.roots)
        if ba.r0 is not None:
            lines.append(f"negative real root r0 = {ba.r0:.15g}")
        if ba.bound_ok is not None:
            lines.append(
                f"non-real modulus bounds hold: {'yes' if ba.bound_ok else 'no'}; "
                f"Vieta residual {ba.vieta_residual:.3e}"
            )
        lines.append(f"interval {bc.interval}: case ({bc.case})")
        for fam in bc.families:
            lines.append(f"  family: {fam.description}")
            if fam.exponent_residual:
                lines.append(
                    f"    exponent residual |char(r0)| = {fam.exponent_residual:.3e}"
                )
        for desc, c, rep in report.checks:
            lines.append(
                f"  check {desc} at c={c:g}: {rep.verdict} "
                f"(relative residual {rep.relative_residual:.3e})"
            )
        if report.checks:
            lines.append(
                "note: surjectivity is assumed from the family structure, not sampled"
            )
        return "\n".join(lines)
    raise TypeError(f"not a report: {report!r}")


def _describe_candidate(g) -> str:
    if isinstance(g, AffineMap):
        return f"g(x) = {g.slope:g} x + {g.intercept:g} on {g.domain}"
    if isinstance(g, PowerMap):
        return f"f(x) = {g.coefficient:g} x^{g.exponent:g} on {g.domain}"
    return repr(g)
