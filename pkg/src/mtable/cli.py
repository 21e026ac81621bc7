"""Command-line front end.

Subcommands map onto the library: count and census for distinct
products, multiplicity for single table entries, bounds for the explicit
d/sigma bounds at one argument, series for the square identity, and
verify for the sweep suites.  Exit status: 0 clean, 1 when any violation
was reported, 2 for usage or domain errors.

json and csv output format every float with exactly 10 fractional
digits, so a command line produces identical bytes on every run apart
from elapsed-time fields.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds as bnd
from . import products, series
from .divisors import divisor_count, divisor_sum
from .multiplicity import multiplicity_direct, multiplicity_formula, table_sum_checks

_IDENTITY_EXPONENTS = (0, -1, 2, 3, 2 + 3j)
_SUITE_DEFAULT_MAX = {
    "identities": 25,
    "divisor-bound": 10**6,
    "sigma-bound": 10**6,
    "theorem": 500,
    "bracket": 10**4,
    "monotonicity": 10**6,
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    format: str
    segment_bits: int
    parallel: bool
    cache_path: str | None

    def __post_init__(self):
        if self.segment_bits < products.SEGMENT_BITS_MIN:
            raise ValueError(
                f"--segment-bits must be >= {products.SEGMENT_BITS_MIN}, "
                f"got {self.segment_bits}"
            )


def _ffmt(x: float) -> str:
    return f"{x:.10f}"


def _to_json(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _ffmt(value)
    if isinstance(value, str):
        return json.dumps(value)
    if value is None:
        return "null"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_to_json(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(
            f"{json.dumps(str(k))}: {_to_json(v)}" for k, v in value.items()
        ) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _report_dict(r: bnd.BoundReport) -> dict:
    bound = list(r.bound) if isinstance(r.bound, tuple) else r.bound
    return {
        "argument": r.argument,
        "quantity": r.quantity,
        "value": r.value,
        "bound": bound,
        "margin": r.margin,
        "violated": r.violated,
        "borderline": r.borderline,
    }


def _report_line(r: bnd.BoundReport) -> str:
    label = "VIOLATION" if r.violated else "BORDERLINE"
    if isinstance(r.bound, tuple):
        bound = f"({_ffmt(r.bound[0])}, {_ffmt(r.bound[1])})"
    else:
        bound = _ffmt(r.bound)
    return (
        f"{label} {r.quantity} at n={r.argument}: value {r.value:g} "
        f"vs bound {bound} (margin {_ffmt(r.margin)})"
    )


def _emit_reports(cfg: RunConfig, header: dict, reports: list[bnd.BoundReport]) -> int:
    violated = sum(1 for r in reports if r.violated)
    borderline = sum(1 for r in reports if r.borderline)
    if cfg.format == "json":
        payload = dict(header)
        payload["violations"] = [_report_dict(r) for r in reports]
        payload["violated_count"] = violated
        payload["borderline_count"] = borderline
        print(_to_json(payload))
    else:
        bits = ", ".join(f"{k} {v}" for k, v in header.items())
        print(bits)
        for r in reports:
            print(_report_line(r))
        print(f"{violated} violation(s), {borderline} borderline")
    return 1 if violated else 0


def _census_rows(points: list[products.TableCensus]) -> list[dict]:
    return [
        {
            "n": p.n,
            "m": p.distinct_count,
            "density": p.density,
            "mean_multiplicity": p.mean_multiplicity,
            "algorithm": p.algorithm,
            "elapsed": p.elapsed,
        }
        for p in points
    ]


def _print_census_csv(points: list[products.TableCensus]):
    print("n,m,density,mean_multiplicity")
    for p in points:
        print(
            f"{p.n},{p.distinct_count},{_ffmt(p.density)},"
            f"{_ffmt(p.mean_multiplicity)}"
        )


def _print_census_text(points: list[products.TableCensus]):
    print(
        f"{'n':>8} {'m':>14} {'density':>14} {'mean_mult':>14} "
        f"{'erdos_ref':>12} {'ford_ref':>12}  algorithm"
    )
    for p in points:
        if p.n >= 3:
            ref = bnd.reference_densities(p.n)
            erdos = _ffmt(ref["erdos_density"])[:12]
            ford = _ffmt(ref["ford_density"])[:12]
        else:
            erdos = ford = "-"
        print(
            f"{p.n:>8} {p.distinct_count:>14} {_ffmt(p.density):>14} "
            f"{_ffmt(p.mean_multiplicity):>14} {erdos:>12} {ford:>12}  "
            f"{p.algorithm} ({p.elapsed:.3f}s)"
        )
    print(
        f"# reference curves use exponent {bnd.ERDOS_EXPONENT:.4f}; the "
        f"commonly quoted exponent is {bnd.ERDOS_EXPONENT_COMMON:.4f}"
    )


def _cmd_count(args, cfg: RunConfig) -> int:
    forced = args.parallel or args.segment_bits is not None
    algorithm = (
        "segmented" if forced or args.n > products.DENSE_AUTO_MAX else "dense"
    )
    point = products.census(
        [args.n],
        None,
        algorithm=algorithm,
        segment_bits=cfg.segment_bits,
        parallel=args.parallel,
    )[0]
    if cfg.format == "json":
        print(_to_json(_census_rows([point])[0]))
    elif cfg.format == "csv":
        _print_census_csv([point])
    else:
        print(
            f"M({point.n}) = {point.distinct_count}  density {_ffmt(point.density)}  "
            f"mean multiplicity {_ffmt(point.mean_multiplicity)}  "
            f"[{point.algorithm}, {point.elapsed:.3f}s]"
        )
    return 0


def _cmd_census(args, cfg: RunConfig) -> int:
    n_values = [int(part) for part in args.n_list.split(",") if part.strip()]
    if not n_values:
        raise ValueError("--n-list must contain at least one integer")
    forced = args.parallel or args.segment_bits is not None
    points = products.census(
        n_values,
        cfg.cache_path,
        algorithm="segmented" if forced else "auto",
        segment_bits=cfg.segment_bits,
        parallel=args.parallel,
    )
    if cfg.format == "json":
        print(_to_json({"rows": _census_rows(points)}))
    elif cfg.format == "csv":
        _print_census_csv(points)
    else:
        _print_census_text(points)
    return 0


def _cmd_multiplicity(args, cfg: RunConfig) -> int:
    if args.method in ("direct", "formula"):
        fn = multiplicity_direct if args.method == "direct" else multiplicity_formula
        count = fn(args.n, args.k)
        if cfg.format == "json":
            print(_to_json(
                {"n": args.n, "k": args.k, "method": args.method, "count": count}
            ))
        else:
            print(
                f"multiplicity of {args.k} in the {args.n}-table: {count} "
                f"({args.method})"
            )
        return 0
    direct = multiplicity_direct(args.n, args.k)
    formula = multiplicity_formula(args.n, args.k)
    agree = direct == formula
    if cfg.format == "json":
        print(_to_json(
            {
                "n": args.n,
                "k": args.k,
                "direct": direct,
                "formula": formula,
                "agree": agree,
            }
        ))
    else:
        status = "agree" if agree else "DISAGREE"
        print(
            f"multiplicity of {args.k} in the {args.n}-table: "
            f"direct {direct}, formula {formula}, {status}"
        )
    return 0 if agree else 1


def _cmd_bounds(args, cfg: RunConfig) -> int:
    k = args.k
    robin_c = args.robin_c
    d = divisor_count(k)
    sigma = divisor_sum(k)
    nb = bnd.nicolas_bound(k)
    rb = bnd.robin_bound(k, robin_c)
    bracket = bnd.verify_integral_bracket(k, robin_c=robin_c)
    reports = []
    for value, bound, quantity, constants in (
        (d, nb, "divisor_count", bnd._default_constants()),
        (sigma, rb, "divisor_sum", dict(bnd._default_constants(), robin_c=robin_c)),
    ):
        margin = bound - value
        violated, borderline = bnd._classify_upper(margin, bound)
        reports.append(
            bnd.BoundReport(
                argument=k,
                quantity=quantity,
                value=value,
                bound=bound,
                margin=margin,
                violated=violated,
                borderline=borderline,
                constants_used=constants,
            )
        )
    reports.append(bracket)
    flagged = [r for r in reports if r.violated or r.borderline]
    if cfg.format == "json":
        payload = {
            "k": k,
            "d": d,
            "sigma": sigma,
            "nicolas_bound": nb,
            "robin_bound": rb,
            "divisor_margin": nb - d,
            "sigma_margin": rb - sigma,
            "integral": int(bracket.value),
            "bracket_lower": bracket.bound[0],
            "bracket_upper": bracket.bound[1],
            "bracket_margin": bracket.margin,
            "robin_c": str(robin_c),
            "violations": [_report_dict(r) for r in flagged],
        }
        print(_to_json(payload))
    else:
        print(f"k = {k}")
        print(f"d(k) = {d}  nicolas bound = {_ffmt(nb)}  margin = {_ffmt(nb - d)}")
        print(
            f"sigma(k) = {sigma}  robin bound = {_ffmt(rb)}  "
            f"margin = {_ffmt(rb - sigma)} (c = {robin_c})"
        )
        print(
            f"k*d(k) - sigma(k) = {int(bracket.value)} in "
            f"({_ffmt(bracket.bound[0])}, {_ffmt(bracket.bound[1])})  "
            f"margin = {_ffmt(bracket.margin)}"
        )
        for r in flagged:
            print(_report_line(r))
    return 1 if any(r.violated for r in reports) else 0


def _parse_s(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise ValueError(f"--s expects RE or RE,IM, got {text!r}")


def _identity_tolerance(cmp: series.SeriesComparison) -> float:
    if cmp.s in (0, -1):
        return 0.0
    return 1e-9 * abs(cmp.zeta_partial_squared)


def _cmd_series(args, cfg: RunConfig) -> int:
    s = _parse_s(args.s)
    cmp = series.verify_square_identity(s, args.n)
    tol = _identity_tolerance(cmp)
    ok = cmp.max_abs_deviation <= tol
    if cfg.format == "json":
        print(_to_json(
            {
                "s_re": s.real,
                "s_im": s.imag,
                "n": cmp.n,
                "grid_re": cmp.grid_sum.real,
                "grid_im": cmp.grid_sum.imag,
                "zeta_squared_re": cmp.zeta_partial_squared.real,
                "zeta_squared_im": cmp.zeta_partial_squared.imag,
                "multiplicity_re": cmp.multiplicity_sum.real,
                "multiplicity_im": cmp.multiplicity_sum.imag,
                "max_abs_deviation": cmp.max_abs_deviation,
                "tolerance": tol,
                "ok": ok,
            }
        ))
    else:
        print(f"s = {s}, n = {cmp.n}")
        print(f"grid sum            = {cmp.grid_sum}")
        print(f"zeta partial squared = {cmp.zeta_partial_squared}")
        print(f"multiplicity sum    = {cmp.multiplicity_sum}")
        print(
            f"max deviation {cmp.max_abs_deviation:.3e} "
            f"(tolerance {tol:.3e}) -> {'ok' if ok else 'FAIL'}"
        )
    return 0 if ok else 1


def _identity_reports(n_max: int) -> list[bnd.BoundReport]:
    reports = []
    for n in range(1, n_max + 1):
        weighted, plain = table_sum_checks(n)
        for quantity, got, expected in (
            ("table_sum", plain, n * n),
            ("table_sum_weighted", weighted, (n * (n + 1) // 2) ** 2),
        ):
            if got != expected:
                reports.append(
                    bnd.BoundReport(
                        argument=n,
                        quantity=quantity,
                        value=float(got),
                        bound=float(expected),
                        margin=float(expected - got),
                        violated=True,
                        borderline=False,
                    )
                )
        for s in _IDENTITY_EXPONENTS:
            cmp = series.verify_square_identity(s, n)
            tol = _identity_tolerance(cmp)
            if cmp.max_abs_deviation > tol:
                reports.append(
                    bnd.BoundReport(
                        argument=n,
                        quantity=f"square_identity_s_{s}",
                        value=cmp.max_abs_deviation,
                        bound=tol,
                        margin=tol - cmp.max_abs_deviation,
                        violated=True,
                        borderline=False,
                    )
                )
    return reports


def _theorem_reports(n_max: int) -> list[bnd.BoundReport]:
    reports = []
    for n in range(2, n_max + 1):
        if n <= products.DENSE_AUTO_MAX:
            m = products.count_distinct_dense(n)
        else:
            m = products.count_distinct_segmented(n)
        for check in (bnd.verify_theorem_lower_bound, bnd.verify_mean_bound):
            r = check(n, m)
            if r.violated or r.borderline:
                reports.append(r)
    return reports


def _cmd_verify(args, cfg: RunConfig) -> int:
    suite = args.suite
    hi = args.max if args.max is not None else _SUITE_DEFAULT_MAX[suite]
    header: dict = {"suite": suite}
    if suite == "identities":
        hi = args.n if args.n is not None else hi
        header["max_n"] = hi
        reports = _identity_reports(hi)
    elif suite == "divisor-bound":
        header.update(lo=3, hi=hi, nicolas_c=str(bnd.NICOLAS_C))
        reports = bnd.verify_divisor_bound(3, hi)
    elif suite == "sigma-bound":
        header.update(lo=3, hi=hi, robin_c=str(args.robin_c))
        reports = bnd.verify_sigma_bound(3, hi, args.robin_c)
    elif suite == "theorem":
        header.update(lo=2, hi=hi)
        reports = _theorem_reports(hi)
    elif suite == "bracket":
        header.update(lo=3, hi=hi)
        reports = [
            r
            for r in (
                bnd.verify_integral_bracket(k, robin_c=args.robin_c)
                for k in range(3, hi + 1)
            )
            if r.violated or r.borderline
        ]
    else:  # monotonicity
        increasing = bnd.nicolas_monotonicity_check(114, hi)
        above_floor = bnd.nicolas_floor_check(3, hi)
        ok = increasing and above_floor
        if cfg.format == "json":
            print(_to_json(
                {
                    "suite": suite,
                    "lo": 3,
                    "hi": hi,
                    "increasing_from_114": increasing,
                    "floor": 114.1,
                    "floor_holds": above_floor,
                    "violated_count": (not increasing) + (not above_floor),
                }
            ))
        else:
            print(f"suite monotonicity, lo 3, hi {hi}")
            print(f"nicolas bound strictly increasing on [114, {hi}]: "
                  f"{'yes' if increasing else 'NO'}")
            print(f"nicolas bound > 114.1 on [3, {hi}]: "
                  f"{'yes' if above_floor else 'NO'}")
        return 0 if ok else 1
    return _emit_reports(cfg, header, reports)


def _add_format_flag(p: argparse.ArgumentParser, root: bool = False):
    # accepted on either side of the subcommand; SUPPRESS keeps the
    # subparser from clobbering a value parsed at the root
    p.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text" if root else argparse.SUPPRESS,
        help="output format (csv only for count and census)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mtable",
        description="Multiplication-table censuses, multiplicities, and bound checks.",
    )
    _add_format_flag(parser, root=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count distinct products of one table")
    _add_format_flag(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--segment-bits", type=int, default=None,
        help=f"window length in values (default {products.SEGMENT_BITS_DEFAULT})",
    )
    p.add_argument("--parallel", action="store_true")

    p = sub.add_parser("multiplicity", help="multiplicity of one product")
    _add_format_flag(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("direct", "formula", "both"), default="both")

    p = sub.add_parser("census", help="distinct-product census over several n")
    _add_format_flag(p)
    p.add_argument("--n-list", required=True, help="comma-separated n values")
    p.add_argument("--cache", default=None, help="CSV cache path (columns n,m)")
    p.add_argument(
        "--segment-bits", type=int, default=None,
        help=f"window length in values (default {products.SEGMENT_BITS_DEFAULT})",
    )
    p.add_argument("--parallel", action="store_true")

    p = sub.add_parser("verify", help="run one verification suite")
    _add_format_flag(p)
    p.add_argument(
        "--suite",
        required=True,
        choices=(
            "identities",
            "divisor-bound",
            "sigma-bound",
            "theorem",
            "bracket",
            "monotonicity",
        ),
    )
    p.add_argument("--max", type=int, default=None, help="upper end of the sweep")
    p.add_argument("--n", type=int, default=None, help="identities: highest table size")
    p.add_argument("--robin-c", type=Fraction, default=bnd.ROBIN_C)

    p = sub.add_parser("bounds", help="bounds and bracket at one argument")
    _add_format_flag(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--robin-c", type=Fraction, default=bnd.ROBIN_C)

    p = sub.add_parser("series", help="square identity at one (s, n)")
    _add_format_flag(p)
    p.add_argument("--s", required=True, help="exponent, RE or RE,IM")
    p.add_argument("--n", type=int, required=True)

    return parser


_HANDLERS = {
    "count": _cmd_count,
    "census": _cmd_census,
    "multiplicity": _cmd_multiplicity,
    "verify": _cmd_verify,
    "bounds": _cmd_bounds,
    "series": _cmd_series,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format == "csv" and args.command not in ("count", "census"):
        print("error: csv output is only available for count and census", file=sys.stderr)
        return 2
    try:
        given_bits = getattr(args, "segment_bits", None)
        cfg = RunConfig(
            command=args.command,
            format=args.format,
            segment_bits=(
                given_bits if given_bits is not None else products.SEGMENT_BITS_DEFAULT
            ),
            parallel=getattr(args, "parallel", False),
            cache_path=getattr(args, "cache", None),
        )
        return _HANDLERS[args.command](args, cfg)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
