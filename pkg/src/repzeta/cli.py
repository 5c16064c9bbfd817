"""Command-line surface: run experiments, emit CSV/JSON reports.

Every report carries the tool version, a config echo, the seed, and the
wall time.  Reports are deterministic for a fixed config and seed up to
the wall-time field (float summation orders are fixed); golden-file
comparisons strip wall time.  Exit status: 0 success, 2 precondition
failure, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from typing import Any, Sequence

from . import __version__
from .census import DegreeCensus
from .errors import BudgetExceededError
from .euler_global import DivergenceScan, divergence_scan, euler_partial_product, sandwich_check
from .euler_global import EulerProductSpec
from .finite_oracle import character_degrees, conjugacy_classes, sl2_group
from .isotropic_census import block_structure_ok, build_census_family, distinct_class_count
from .local_sl2 import (
    evaluate_local,
    factor_bounds_check,
    irrep_count,
    level_census,
    sl2_local_factor,
    sl2_quotient_order,
)
from .orbit_method import centralizer_index_oracle, make_orbit_datum, orbit_dimension
from .rootsys import build_root_datum
from .symmetric import ak_zeta, an_degrees
from .witten import abscissa_estimate, enumerate_dimensions


def _round12(value: Any) -> Any:
    if isinstance(value, float):
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {k: _round12(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round12(v) for v in value]
    return value


def _fmt_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _census_rows(census: DegreeCensus) -> list[dict[str, Any]]:
    rows = []
    running = 0
    for deg, mult in census.entries:
        running += mult
        rows.append({"degree": deg, "multiplicity": mult, "R_n": running})
    return rows


def cmd_witten(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], list[dict]]:
    datum = build_root_datum(args.series, args.rank)
    census = enumerate_dimensions(datum, args.bound)
    result: dict[str, Any] = {
        "series": args.series,
        "rank": args.rank,
        "bound": args.bound,
        "kappa": datum.kappa,
        "coxeter_number": datum.coxeter_number,
        "r_over_kappa": [datum.rank, datum.kappa],
        "distinct_degrees": len(census.entries),
        "total_count": census.total_count,
    }
    if len(census.entries) >= 8:
        est = abscissa_estimate(census)
        result["abscissa"] = {
            "slope": est.slope,
            "standard_error": est.standard_error,
            "window": est.window,
            "target": datum.rank / datum.kappa,
        }
    else:
        result["abscissa"] = None
    rows = _census_rows(census)
    result["table"] = rows
    return result, ["degree", "multiplicity", "R_n"], rows


def cmd_local_sl2(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], list[dict]]:
    factor = sl2_local_factor(args.q)
    lc = level_census(args.q, args.level)
    expected_order = sl2_quotient_order(args.q, args.level)
    result: dict[str, Any] = {
        "q": args.q,
        "level": args.level,
        "head_terms": [list(tm) for tm in factor.head_terms],
        "tail_terms": [list(tm) for tm in factor.tail_terms],
        "irrep_count": irrep_count(args.q, args.level),
        "mass": lc.census.mass,
        "group_order": expected_order,
        "mass_matches_order": lc.census.mass == expected_order,
        "values": {f"{s:.12g}": evaluate_local(factor, s) for s in args.s_grid},
        "bounds": {
            f"{s:.12g}": list(factor_bounds_check(args.q, s))
            for s in args.s_grid
            if 2.0 <= s <= 3.0
        },
    }
    rows = _census_rows(lc.census)
    result["table"] = rows
    return result, ["degree", "multiplicity", "R_n"], rows


def cmd_oracle(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], list[dict]]:
    if args.group != "sl2":
        raise ValueError(f"unknown group family {args.group!r}; only 'sl2' is available")
    group = sl2_group(args.modulus)
    classes = conjugacy_classes(group)
    census = character_degrees(group)
    result: dict[str, Any] = {
        "group": f"SL2(Z/{args.modulus})",
        "order": group.order,
        "class_count": classes.count,
        "degree_mass": census.mass,
    }
    # cross-link with the closed formula when the modulus is an odd prime power
    base, exp = _prime_power(args.modulus)
    if base is not None and base % 2 == 1:
        formula = level_census(base, exp)
        result["formula_census_matches"] = formula.census.entries == census.entries
        result["formula_irrep_count"] = irrep_count(base, exp)
    rows = _census_rows(census)
    result["table"] = rows
    return result, ["degree", "multiplicity", "R_n"], rows


def _prime_power(m: int) -> tuple[int | None, int]:
    for p in range(2, m + 1):
        if m % p == 0:
            k = 0
            n = m
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else (None, 0)
    return (None, 0)


def cmd_orbit(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], list[dict]]:
    rng = random.Random(args.seed)
    rows = []
    all_match = True
    for _ in range(args.samples):
        d = rng.choice((2, 3))
        p = rng.choice((3, 5, 7))
        k = rng.randint(1, 3)
        mod = p ** (k + 2)
        eigs = [rng.randrange(mod) for _ in range(d - 1)]
        eigs.append((-sum(eigs)) % mod)
        datum = make_orbit_datum(d, p, k, eigs)
        dim = orbit_dimension(datum)
        index = centralizer_index_oracle(datum)
        match = dim * dim == index
        all_match = all_match and match
        rows.append(
            {
                "d": d,
                "p": p,
                "k": k,
                "eigenvalues": ";".join(str(e) for e in datum.eigenvalues),
                "dimension": dim,
                "centralizer_index": index,
                "match": match,
            }
        )
    result = {"samples": args.samples, "all_match": all_match, "table": rows}
    return result, ["d", "p", "k", "eigenvalues", "dimension", "centralizer_index", "match"], rows


def cmd_census8(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], list[dict]]:
    family = build_census_family(args.m, args.q, args.k, args.t)
    sample = None if args.sample is None else list(range(min(args.sample, len(family.y_reps))))
    report = distinct_class_count(family, sample=sample)
    structure_ok = all(block_structure_ok(w, family) for _, _, w in report.witnesses)
    result = {
        "m": args.m,
        "q": args.q,
        "k": args.k,
        "t": args.t,
        "modulus_exp": family.modulus_exp,
        "representatives": len(family.y_reps),
        "sampled": len(report.assignments),
        "classes_found": report.classes_found,
        "bound": report.bound,
        "certified": report.certified,
        "exhaustive": report.exhaustive,
        "unknown_pairs": report.unknown_pairs,
        "conjugator_blocks_ok": structure_ok,
    }
    rows = [
        {"member": i, "class_id": cid}
        for i, cid in enumerate(report.assignments)
    ]
    result["table"] = rows
    return result, ["member", "class_id"], rows


def cmd_alt(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], list[dict]]:
    rows = []
    import math as _math

    for k in range(5, args.kmax + 1):
        census = an_degrees(k)
        rows.append(
            {
                "k": k,
                "zeta": ak_zeta(k, args.s),
                "irreducibles": census.total_count,
                "mass_ok": 2 * census.mass == _math.factorial(k),
            }
        )
    result = {"s": args.s, "kmax": args.kmax, "table": rows}
    return result, ["k", "zeta", "irreducibles", "mass_ok"], rows


def cmd_euler(args: argparse.Namespace) -> tuple[dict[str, Any], list[str], list[dict]]:
    rows = []
    for s in args.s_grid:
        value = euler_partial_product(
            EulerProductSpec(prime_bound=args.prime_bound), s, scan=s <= 2.0
        )
        entry: dict[str, Any] = {"s": s, "partial_product": value}
        entry["sandwich_ok"] = sandwich_check(args.prime_bound, s) if 2.0 < s <= 3.0 else None
        rows.append(entry)
    result: dict[str, Any] = {"prime_bound": args.prime_bound, "table": rows}
    if args.scan_grid:
        scan: DivergenceScan = divergence_scan(args.scan_grid)
        result["divergence_scan"] = {
            "prime_bounds": list(scan.prime_bounds),
            "products": list(scan.products),
            "strictly_increasing": scan.strictly_increasing,
            "growth_ratio": scan.growth_ratio,
            "threshold": scan.threshold,
            "diverging": scan.diverging,
        }
    return result, ["s", "partial_product", "sandwich_ok"], rows


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repzeta", description="representation zeta experiments with exact cross-checks"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed recorded in every report")
    common.add_argument("--out", type=str, default=None, help="output path (default: stdout)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    p = add_parser("witten", "degree census and abscissa fit for a complex simple group")
    p.add_argument("--series", required=True, choices=list("ABCDEFG"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--bound", required=True, type=int)
    p.set_defaults(func=cmd_witten)

    p = add_parser("local-sl2", "explicit SL2 local factor, level census, bounds")
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--level", required=True, type=int)
    p.add_argument("--s-grid", type=_float_list, default=[2.0, 2.5, 3.0])
    p.set_defaults(func=cmd_local_sl2)

    p = add_parser("oracle", "brute-force group census (order, classes, degrees)")
    p.add_argument("--group", default="sl2")
    p.add_argument("--modulus", required=True, type=int)
    p.set_defaults(func=cmd_oracle)

    p = add_parser("orbit", "orbit-dimension formula vs Smith-form centralizer oracle")
    p.add_argument("--samples", type=int, default=20)
    p.set_defaults(func=cmd_orbit)

    p = add_parser("census8", "block-unipotent family conjugacy certificate")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--q", required=True, type=int)
    p.add_argument("--k", required=True, type=int)
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--sample", type=int, default=None, help="test only the first N members")
    p.set_defaults(func=cmd_census8)

    p = add_parser("alt", "alternating-group zeta table")
    p.add_argument("--kmax", required=True, type=int)
    p.add_argument("--s", type=float, default=1.0)
    p.set_defaults(func=cmd_alt)

    p = add_parser("euler", "partial Euler products, sandwich, divergence scan")
    p.add_argument("--prime-bound", required=True, type=int)
    p.add_argument("--s-grid", type=_float_list, default=[2.5])
    p.add_argument("--scan-grid", type=_int_list, default=None)
    p.set_defaults(func=cmd_euler)
    return parser


def _emit(report: dict[str, Any], columns: list[str], rows: list[dict], args: argparse.Namespace) -> None:
    if args.format == "json":
        text = json.dumps(_round12(report), sort_keys=True, indent=2) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return
    # csv: table to --out (or stdout), metadata (sans table) to stdout as JSON
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_fmt_cell(row[c]) for c in columns])
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
        meta = {k: v for k, v in report.items() if k != "result"}
        meta["result"] = {k: v for k, v in report["result"].items() if k != "table"}
        sys.stdout.write(json.dumps(_round12(meta), sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(buf.getvalue())


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        result, columns, rows = args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    report = {
        "tool": "repzeta",
        "version": __version__,
        "command": args.command,
        "config": {
            k: v
            for k, v in sorted(vars(args).items())
            if k not in ("func", "out", "format") and not callable(v)
        },
        "seed": args.seed,
        "wall_time_s": round(time.perf_counter() - started, 6),
        "result": result,
    }
    _emit(report, columns, rows, args)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
