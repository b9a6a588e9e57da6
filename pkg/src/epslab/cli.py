"""Command-line front end.

    epslab info      INSTANCE [--require-hypothesis]
    epslab epsilon   INSTANCE [--nmax N]
    epslab amao      INSTANCE [--mmax M --kmax K]
    epslab vm-check  INSTANCE [--nmax N --mmax M --kmax K --tolerance T]
    epslab swanson   INSTANCE [--nmax N --bmax B]
    epslab decompose INSTANCE [--nmax N]
    epslab verify    [INSTANCE] [--seed S]

Exit codes: 0 success, 1 usage or parse error, 2 computation error,
3 hypothesis violation, 4 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import asymptotics as asy
from .errors import EpslabError, HypothesisViolation, ParseError, UnitIdealError
from .instance import JobParams, parse_instance
from .ring import nilradical
from .verify import check_volume_multiplicity, run_instance_checks, run_property_suite

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_HYPOTHESIS, EXIT_VERIFY = 0, 1, 2, 3, 4

CSV_HEADER = ["family", "n", "m", "k", "length", "naive", "finite_diff", "richardson"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def rational(x):
    if x is None:
        return ""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _decimal(x):
    return "" if x is None else f"{float(x):.6f}"


def _cell(v):
    return "" if v is None else str(v)


# -- table assembly ---------------------------------------------------------

def sequence_rows(records, d):
    """Rows of the CSV schema; estimates use the prefix of each inner sequence."""
    rows = []
    groups = {}
    for r in records:
        groups.setdefault((r.family, r.m), []).append(r)
    for (_, _), recs in groups.items():
        for r, (naive, fd, rich) in zip(recs, asy.prefix_estimates(recs, d)):
            rows.append({
                "family": r.family.value, "n": r.n, "m": r.m, "k": r.k,
                "length": r.length, "naive": naive, "finite_diff": fd, "richardson": rich,
            })
    return rows


def _estimate_json(est):
    if est is None:
        return None
    dg = est.diagnostics
    return {
        "d": est.d,
        "naive_last": rational(est.naive_last),
        "finite_diff": rational(est.finite_diff),
        "richardson": rational(est.richardson),
        "raw_limit": rational(est.raw),
        "diagnostics": {
            "finite_diff_prev": rational(dg.finite_diff_prev),
            "tail_spread": rational(dg.tail_spread),
            "naive_nonincreasing": dg.naive_nonincreasing,
            "naive_nondecreasing": dg.naive_nondecreasing,
            "converged": dg.converged,
        },
    }


def ring_info(ring, ideal=None):
    N = nilradical(ring)
    info = {
        "ring": ring.format(),
        "r": ring.arity,
        "dim_R": ring.dim_ring,
        "N": N.format(),
        "dim_N": ring.dim_nilradical,
        "hypothesis_dim_N_lt_dim_R": ring.hypothesis_holds,
        "analytically_unramified": ring.is_reduced,
    }
    if ideal is not None:
        info["ideal"] = ideal.format()
    return info


# -- rendering --------------------------------------------------------------

def render_table(rows, fmt, summary=None, title=""):
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for row in rows:
            w.writerow([
                row["family"], _cell(row["n"]), _cell(row["m"]), _cell(row["k"]), row["length"],
                rational(row["naive"]), rational(row["finite_diff"]), rational(row["richardson"]),
            ])
        return buf.getvalue()
    if fmt == "json":
        payload = {
            "rows": [{
                "family": row["family"], "n": row["n"], "m": row["m"], "k": row["k"],
                "length": row["length"], "naive": rational(row["naive"]),
                "finite_diff": rational(row["finite_diff"]) if row["finite_diff"] is not None else None,
                "richardson": rational(row["richardson"]) if row["richardson"] is not None else None,
            } for row in rows],
            "summary": summary or {},
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    lines = []
    if title:
        lines += [f"## {title}", ""]
    lines.append("| " + " | ".join(CSV_HEADER + ["naive (approx)"]) + " |")
    lines.append("|" + "---|" * (len(CSV_HEADER) + 1))
    for row in rows:
        cells = [row["family"], _cell(row["n"]), _cell(row["m"]), _cell(row["k"]),
                 str(row["length"]), rational(row["naive"]), rational(row["finite_diff"]),
                 rational(row["richardson"]), _decimal(row["naive"])]
        lines.append("| " + " | ".join(cells) + " |")
    if summary:
        lines += ["", "```json", json.dumps(summary, indent=2, sort_keys=True), "```"]
    return "\n".join(lines) + "\n"


def render_mapping(data, fmt, title=""):
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for key in data:
            value = data[key]
            w.writerow([key, json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value])
        return buf.getvalue()
    lines = [f"## {title}", ""] if title else []
    lines += ["| key | value |", "|---|---|"]
    for key in data:
        lines.append(f"| {key} | {data[key]} |")
    return "\n".join(lines) + "\n"


def render_reports(reports, fmt):
    if fmt == "json":
        payload = [{
            "check": r.name, "instance": r.instance, "passed": r.passed, "skipped": r.skipped,
            "witness": r.witness,
        } for r in reports]
        return json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check", "instance", "status"])
        for r in reports:
            w.writerow([r.name, r.instance, r.line().split(" ", 1)[0]])
        return buf.getvalue()
    lines = ["| check | instance | status |", "|---|---|---|"]
    lines += [f"| {r.name} | {r.instance} | {r.line().split(' ', 1)[0]} |" for r in reports]
    failed = sum(1 for r in reports if not r.passed)
    lines += ["", f"{len(reports)} checks, {failed} failed"]
    return "\n".join(lines) + "\n"


# -- commands ---------------------------------------------------------------

def cmd_info(ring, ideal, params, fmt):
    return render_mapping(ring_info(ring, ideal), fmt, "ring"), EXIT_OK


def cmd_epsilon(ring, ideal, params, fmt):
    d = ring.dim_ring
    recs = asy.epsilon_sequence(ring, ideal, params.nmax)
    summary = {"d": d}
    if len(recs) >= d + 2:
        summary["epsilon"] = _estimate_json(asy.estimate_limit(recs, d, params.tolerance))
    return render_table(sequence_rows(recs, d), fmt, summary, "epsilon"), EXIT_OK


def _amao_summary(grid):
    return {
        "d": grid.d,
        "amao": {str(m): _estimate_json(est) for m, est in sorted(grid.estimates.items())},
        "amao_over_m_d": [[m, rational(a), rational(ratio)] for m, a, ratio in grid.outer()],
    }


def cmd_amao(ring, ideal, params, fmt):
    grid = asy.amao_grid(ring, ideal, params.mmax, params.kmax, tolerance=params.tolerance)
    return render_table(sequence_rows(grid.records, grid.d), fmt, _amao_summary(grid), "amao"), EXIT_OK


def cmd_vm_check(ring, ideal, params, fmt):
    report = check_volume_multiplicity(ring, ideal, params.mmax, params.nmax, kmax=params.kmax,
                              tolerance=params.tolerance)
    eps = report.details["epsilon"]
    summary = {
        "passed": report.passed,
        "epsilon": _estimate_json(eps),
        "amao_over_m_d": [[m, rational(a), rational(ratio)] for m, a, ratio in report.details["outer"]],
        "relative_gap": rational(report.details["gap"]),
        "tolerance": rational(params.tolerance),
    }
    d = ring.dim_ring
    recs = asy.epsilon_sequence(ring, ideal, params.nmax)
    grid = asy.amao_grid(ring, ideal, params.mmax, params.kmax, tolerance=params.tolerance)
    rows = sequence_rows(recs, d) + sequence_rows(grid.records, d)
    return render_table(rows, fmt, summary, "vm-check"), (EXIT_OK if report.passed else EXIT_VERIFY)


def cmd_swanson(ring, ideal, params, fmt):
    b = asy.swanson_search(ring, ideal, params.nmax, params.bmax)
    c = asy.swanson_c_search(ring, ideal, params.nmax, params.bmax)
    data = {
        "b": b.constant, "b_found": b.found, "b_verified_range": b.verified_range,
        "b_top_degrees": list(b.top_degrees),
        "c": c.constant, "c_found": c.found, "c_verified_range": c.verified_range,
        "c_top_degrees": list(c.top_degrees),
    }
    return render_mapping(data, fmt, "swanson"), EXIT_OK


def cmd_decompose(ring, ideal, params, fmt):
    table = asy.decomposition_sequences(ring, ideal, params.nmax)
    recs = [r for f in asy.DECOMPOSITION_FAMILIES for r in table.sequences[f]]
    summary = {
        "nilpart_identity": table.nilpart_identity(),
        "correction_identity": table.correction_identity(),
    }
    ok = all(summary["nilpart_identity"]) and all(summary["correction_identity"])
    return (render_table(sequence_rows(recs, ring.dim_ring), fmt, summary, "decompose"),
            EXIT_OK if ok else EXIT_VERIFY)


def cmd_verify(ring, ideal, params, fmt):
    reports = run_property_suite(params.seed)
    if ring is not None:
        reports += run_instance_checks(ring, ideal, nmax=params.nmax, mmax=params.mmax,
                                       kmax=params.kmax, tolerance=params.tolerance)
    code = EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY
    return render_reports(reports, fmt), code


COMMANDS = {
    "info": cmd_info,
    "epsilon": cmd_epsilon,
    "amao": cmd_amao,
    "vm-check": cmd_vm_check,
    "swanson": cmd_swanson,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
}


def build_parser():
    parser = _Parser(prog="epslab", description="Epsilon and Amao multiplicities of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("instance", nargs="?" if name == "verify" else None)
        for flag in ("nmax", "mmax", "kmax", "bmax", "seed"):
            p.add_argument(f"--{flag}", type=int)
        p.add_argument("--tolerance")
        p.add_argument("--output", choices=("csv", "md", "json"), default="csv")
        p.add_argument("--out")
        p.add_argument("--require-hypothesis", action="store_true")
    return parser


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.instance:
            ring, ideal, params = parse_instance(args.instance)
        else:
            ring, ideal, params = None, None, JobParams()
        params.override(nmax=args.nmax, mmax=args.mmax, kmax=args.kmax, bmax=args.bmax,
                        seed=args.seed, tolerance=args.tolerance)
        for name in ("nmax", "mmax", "kmax", "bmax"):
            if getattr(params, name) < 1:
                raise UsageError(f"--{name} must be >= 1")
    except (UsageError, ParseError, UnitIdealError, ValueError) as exc:
        print(f"epslab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.require_hypothesis and ring is not None and not ring.hypothesis_holds:
        _emit(render_mapping(ring_info(ring, ideal), args.output, "ring"), args.out)
        print(f"epslab: hypothesis violated: dim N = {ring.dim_nilradical} is not less than "
              f"dim R = {ring.dim_ring}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    try:
        text, code = COMMANDS[args.command](ring, ideal, params, args.output)
    except HypothesisViolation as exc:
        print(f"epslab: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (EpslabError, ArithmeticError, ValueError) as exc:
        print(f"epslab: computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    _emit(text, args.out)
    return code
