"""Command-line front end.

Subcommands:

  tables        emit the three regime candidate tables
  classify      run the full pipeline and emit case reports, survivor table
                and the degree-bound summary
  wps           invariants of a weighted projective 3-space, optionally
                checked against a candidate basket
  reid-tai      classify one cyclic quotient point
  curve-search  enumerate singular-curve configurations under a budget
  diff          compare a run against golden CSV tables

Exit codes: 0 success, 1 mismatch (golden diff or basket inconsistency),
2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .arith import format_rational, parse_rational
from .baskets import Basket
from .curves import curve_config_search
from .report import (
    RunConfig,
    TableArtifact,
    all_artifacts,  # noqa: F401  (re-exported for API users)
    classify_artifacts,
    diff_against_golden,
    golden_dir,
    tables_artifacts,
)
from .wps import (
    QuotientPoint,
    SingularityClass,
    UnsupportedStratumError,
    WeightedP3,
    anticanonical_degree,
    basket_consistency,
    h0_monomials,
    reid_tai,
    singular_strata,
    weil_index,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fanosieve",
        description="Exact-rational sieve for non-Gorenstein canonical Fano "
                    "threefold degrees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_run_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("md", "csv", "json"), default="md")
        p.add_argument("--window", nargs=2, metavar=("LO", "HI"),
                       default=("66", "72"),
                       help="strict degree window, rationals like 66 or 200/3")
        p.add_argument("--out", type=Path, default=None,
                       help="write one file per table into this directory")

    p_tables = sub.add_parser("tables", help="regime candidate tables")
    add_run_options(p_tables)

    p_classify = sub.add_parser("classify", help="full classification run")
    add_run_options(p_classify)
    p_classify.add_argument("--emit-excluded", action="store_true",
                            help="include excluded candidates in case reports")

    p_wps = sub.add_parser("wps", help="weighted projective space invariants")
    p_wps.add_argument("weights", nargs=4, type=int, metavar="A")
    p_wps.add_argument("--basket", default=None,
                       help='candidate basket, e.g. "(3,1)" or "(2,1),(5,2)"')

    p_rt = sub.add_parser("reid-tai", help="classify a cyclic quotient point")
    p_rt.add_argument("r", type=int)
    p_rt.add_argument("w", nargs=3, type=int, metavar="W")

    p_cs = sub.add_parser("curve-search",
                          help="singular-curve configurations under a budget")
    p_cs.add_argument("bound", help="rational budget, e.g. 211/21")
    p_cs.add_argument("--lcm-divisor", type=int, default=None,
                      help="keep configurations whose j-lcm this divides")
    p_cs.add_argument("--nonempty", action="store_true",
                      help="drop the empty configuration")

    p_diff = sub.add_parser("diff", help="compare against golden tables")
    p_diff.add_argument("--golden", type=Path, default=None,
                        help="golden directory (default: shipped goldens)")
    return parser


def _parse_basket(text: str) -> Basket:
    body = text.strip().strip("{}").replace(" ", "")
    if not body:
        return Basket.of()
    pairs = []
    for chunk in body.replace("),(", ");(").split(";"):
        chunk = chunk.strip("()")
        r_text, b_text = chunk.split(",")
        pairs.append((int(r_text), int(b_text)))
    return Basket.of(*pairs)


def _emit(artifacts: list[TableArtifact], fmt: str, out: Path | None) -> None:
    extension = {"md": "md", "csv": "csv", "json": "json"}[fmt]
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        for artifact in artifacts:
            path = out / f"{artifact.name}.{extension}"
            path.write_text(artifact.render(fmt), encoding="utf-8")
        return
    for artifact in artifacts:
        print(f"## {artifact.name}")
        print(artifact.render(fmt), end="" if fmt != "csv" else "")
        print()


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    lower = parse_rational(args.window[0])
    upper = parse_rational(args.window[1])
    return RunConfig(window_lower=lower, window_upper=upper,
                     output_format=args.format,
                     emit_excluded=getattr(args, "emit_excluded", False))


def _cmd_tables(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    _emit(tables_artifacts(config), config.output_format, args.out)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    config = _config_from_args(args)
    artifacts, report = classify_artifacts(config)
    _emit(tables_artifacts(config) + artifacts, config.output_format, args.out)
    if report.max_degree is not None:
        qs = ",".join(str(q) for q in report.max_degree_q_values)
        print(f"maximum surviving degree: {format_rational(report.max_degree)} "
              f"at q in {{{qs}}}", file=sys.stderr)
    return 0


def _cmd_wps(args: argparse.Namespace) -> int:
    space = WeightedP3(tuple(args.weights))
    degree = anticanonical_degree(space)
    index = weil_index(space)
    print(f"weights: ({','.join(str(a) for a in space.weights)})")
    print(f"degree (-K)^3: {format_rational(degree)}")
    print(f"weil index: {index}")
    strata = singular_strata(space)
    if not strata:
        print("strata: none (smooth)")
    else:
        print("strata:")
        for stratum in strata:
            if isinstance(stratum, QuotientPoint):
                try:
                    label = reid_tai(stratum).value
                except UnsupportedStratumError:
                    label = "NOT-SUPPORTED (non-isolated)"
                print(f"  point {stratum}: {label}")
            else:
                print(f"  {stratum}: NOT-SUPPORTED (one-dimensional stratum)")
    print(f"h0(-K): {h0_monomials(space, index)}")
    if args.basket is not None:
        basket = _parse_basket(args.basket)
        consistent = basket_consistency(space, basket)
        print(f"basket {basket}: {'consistent' if consistent else 'inconsistent'}")
        return 0 if consistent else 1
    return 0


def _cmd_reid_tai(args: argparse.Namespace) -> int:
    point = QuotientPoint(args.r, tuple(args.w))
    label = reid_tai(point)
    print(f"{point}: {label.value}")
    return 0


def _cmd_curve_search(args: argparse.Namespace) -> int:
    bound = parse_rational(args.bound)
    configs = curve_config_search(bound, lcm_divisor=args.lcm_divisor,
                                  require_nonempty=args.nonempty)
    for config in configs:
        weight = config.total_weight
        print(f"{config}  weight={format_rational(weight)}  j_lcm={config.j_lcm}")
    print(f"{len(configs)} configuration(s)")
    return 0


def _cmd_diff(args: argparse.Namespace) -> int:
    golden = args.golden if args.golden is not None else golden_dir()
    results = diff_against_golden(golden)
    failed = False
    for result in results:
        if result.passed:
            print(f"PASS {result.name}")
        else:
            failed = True
            print(f"FAIL {result.name}: {result.detail}")
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "tables": _cmd_tables,
        "classify": _cmd_classify,
        "wps": _cmd_wps,
        "reid-tai": _cmd_reid_tai,
        "curve-search": _cmd_curve_search,
        "diff": _cmd_diff,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
