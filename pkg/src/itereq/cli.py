"""Batch command-line front end.

Subcommands: roots, reduce, recurrence, verify, boros. Coefficients are
comma-separated ascending reals (a_0 first). roots and reduce read one
coefficient list per line from stdin when --coeffs is omitted. Exit codes:
0 success, 2 usage error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .boros import analyze_boros, classify_boros
from .errors import IllConditionedError
from .polynomial import ALL_REALS, Interval, IterativeEquation, Polynomial
from .recurrence import closed_form, evaluate_closed, iterate_recurrence
from .reduction import analyze
from .reports import (
    BorosReport,
    RecurrenceReport,
    ReduceReport,
    RootsReport,
    VerifyReport,
    render_text,
    to_jsonable,
)
from .roots import DEFAULT_TOLERANCES, ToleranceConfig, classify, find_roots, modulus_gap
from .verify import (
    DEFAULT_GRID_SIZE,
    DEFAULT_VERIFY_TOL,
    AffineMap,
    PowerMap,
    verify_boros,
    verify_iterative,
)

# Candidate c values per family check; every family of the classification
# contains at least one of these.
FAMILY_SAMPLE_CS = (0.5, 1.0, 3.0)


@dataclass(frozen=True)
class RunConfig:
    """Parsed global options shared by all subcommands."""

    tolerances: ToleranceConfig = DEFAULT_TOLERANCES
    output_format: str = "text"
    grid_size: int = DEFAULT_GRID_SIZE
    residual_tol: float = DEFAULT_VERIFY_TOL
    monic: bool = False

    def __post_init__(self):
        if self.grid_size < 3:
            raise ValueError("--grid must be at least 3")
        if self.residual_tol <= 0:
            raise ValueError("--tol must be positive")


def _parse_coeffs(text: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"malformed coefficient list: {text!r}") from None
    if len(values) < 2:
        raise ValueError("need at least 2 coefficients (a_0 and a_N)")
    if values[0] == 0:
        raise ValueError("a_0 must be non-zero")
    if values[-1] == 0:
        raise ValueError("a_N must be non-zero")
    return values


def _poly_from(text: str, cfg: RunConfig) -> Polynomial:
    p = Polynomial(_parse_coeffs(text))
    return p.monic() if cfg.monic else p


def _parse_floats(text: str, expected: int, what: str) -> list[float]:
    try:
        values = [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"malformed {what}: {text!r}") from None
    if len(values) != expected:
        raise ValueError(f"{what} needs exactly {expected} comma-separated numbers")
    return values


def _coeff_inputs(args) -> list[str]:
    if args.coeffs is not None:
        return [args.coeffs]
    lines = [ln.strip() for ln in sys.stdin]
    specs = [ln for ln in lines if ln and not ln.startswith("#")]
    if not specs:
        raise ValueError("no coefficient lists given (use --coeffs or stdin)")
    return specs


def _cmd_roots(args, cfg: RunConfig) -> list:
    out = []
    for spec in _coeff_inputs(args):
        poly = _poly_from(spec, cfg)
        rs = find_roots(poly, cfg.tolerances)
        cls = classify(rs, cfg.tolerances.imag_tol)
        gap = modulus_gap(cls, cfg.tolerances.gap_tol)
        out.append(RootsReport(poly, rs, cls, gap))
    return out


def _cmd_reduce(args, cfg: RunConfig) -> list:
    out = []
    for spec in _coeff_inputs(args):
        poly = _poly_from(spec, cfg)
        eq = IterativeEquation(poly)
        out.append(ReduceReport(poly, analyze(eq, cfg.tolerances)))
    return out


def _cmd_recurrence(args, cfg: RunConfig) -> list:
    poly = _poly_from(args.coeffs, cfg)
    eq = IterativeEquation(poly)
    init = _parse_floats(args.init, eq.order, "initial values")
    if args.steps < eq.order:
        raise ValueError(f"--steps must be at least the order {eq.order}")
    rs = find_roots(poly, cfg.tolerances)
    cf = closed_form(rs, init)
    iterated = iterate_recurrence(eq, init, args.steps)
    closed_values = [evaluate_closed(cf, m) for m in range(args.steps + 1)]
    max_abs_diff = max(abs(a - b) for a, b in zip(iterated, closed_values))
    return [
        RecurrenceReport(
            poly, tuple(init), tuple(iterated), tuple(closed_values), max_abs_diff, cf
        )
    ]


def _cmd_verify(args, cfg: RunConfig) -> list:
    poly = _poly_from(args.coeffs, cfg)
    if (args.affine is None) == (args.power is None):
        raise ValueError("give exactly one of --affine or --power")
    if args.affine is not None:
        slope, intercept = _parse_floats(args.affine, 2, "affine parameters")
        domain = Interval.parse(args.domain) if args.domain else ALL_REALS
        candidate = AffineMap(slope, intercept, domain)
    else:
        coeff, exponent = _parse_floats(args.power, 2, "power parameters")
        domain = Interval.parse(args.domain) if args.domain else Interval(0.0, float("inf"))
        candidate = PowerMap(coeff, exponent, domain)
    eq = IterativeEquation(poly, ALL_REALS)
    report = verify_iterative(eq, candidate, cfg.grid_size, cfg.residual_tol)
    return [VerifyReport(poly, candidate, report)]


def _cmd_boros(args, cfg: RunConfig) -> list:
    interval = Interval.parse(args.interval)
    ba = analyze_boros(args.n, cfg.tolerances)
    bc = classify_boros(args.n, interval)
    checks = []
    for fam in bc.families:
        cs = [c for c in FAMILY_SAMPLE_CS if fam.contains_c(c)]
        for c in cs:
            rep = verify_boros(
                args.n, fam.candidate(c, interval), cfg.grid_size, cfg.residual_tol
            )
            checks.append((fam.description, c, rep))
    return [BorosReport(ba, bc, tuple(checks))]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="itereq",
        description="Analyze, reduce, and verify polynomial-like iterative equations.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON, one object per report")
    parser.add_argument(
        "--tol",
        type=float,
        default=DEFAULT_VERIFY_TOL,
        help="relative residual tolerance for verification verdicts",
    )
    parser.add_argument(
        "--grid", type=int, default=DEFAULT_GRID_SIZE, help="grid size for verification"
    )
    parser.add_argument(
        "--monic", action="store_true", help="normalize input coefficients to monic"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="roots and classification of a characteristic polynomial")
    p_roots.add_argument("--coeffs", help="ascending coefficients, e.g. 2,-3,1 (stdin lines if omitted)")
    p_roots.set_defaults(handler=_cmd_roots)

    p_reduce = sub.add_parser("reduce", help="applicable order reductions for an equation")
    p_reduce.add_argument("--coeffs", help="ascending coefficients (stdin lines if omitted)")
    p_reduce.set_defaults(handler=_cmd_reduce)

    p_rec = sub.add_parser("recurrence", help="closed form of the recurrence, compared with iteration")
    p_rec.add_argument("--coeffs", required=True, help="ascending coefficients")
    p_rec.add_argument("--init", required=True, help="N initial values, comma-separated")
    p_rec.add_argument("--steps", type=int, default=20, help="last index to tabulate")
    p_rec.set_defaults(handler=_cmd_recurrence)

    p_ver = sub.add_parser("verify", help="check an explicit candidate against an equation")
    p_ver.add_argument("--coeffs", required=True, help="ascending coefficients")
    p_ver.add_argument("--affine", help="slope,intercept for g(x) = slope*x + intercept")
    p_ver.add_argument("--power", help="coefficient,exponent for f(x) = c*x^e")
    p_ver.add_argument("--domain", help="candidate domain, e.g. \"(0,inf)\"")
    p_ver.set_defaults(handler=_cmd_verify)

    p_bor = sub.add_parser("boros", help="analyze and classify f^n(x) = f(x)^n / x^(n-1)")
    p_bor.add_argument("--n", type=int, required=True, help="iteration count n >= 2")
    p_bor.add_argument("--interval", required=True, help="interval J inside (0,inf), e.g. \"(0,inf)\"")
    p_bor.set_defaults(handler=_cmd_boros)
    return parser


def _preprocess_argv(argv: list[str]) -> list[str]:
    # Join value-taking options with values that start with a minus sign
    # (negative coefficients), which argparse would otherwise read as flags.
    value_opts = {"--coeffs", "--init", "--affine", "--power", "--domain", "--interval", "--tol"}
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (
            tok in value_opts
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
            and not argv[i + 1].startswith("--")
            and any(ch.isdigit() for ch in argv[i + 1])
        ):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(_preprocess_argv(sys.argv[1:] if argv is None else list(argv)))
    try:
        cfg = RunConfig(
            output_format="json" if args.json else "text",
            grid_size=args.grid,
            residual_tol=args.tol,
            monic=args.monic,
        )
        reports = args.handler(args, cfg)
    except IllConditionedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for i, report in enumerate(reports):
        if cfg.output_format == "json":
            print(json.dumps(to_jsonable(report)))
        else:
            if i:
                print()
            print(render_text(report))
    return 0


if __name__ == "__main__":
    sys.exit(main())
