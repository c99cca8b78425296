"""Command-line driver.

Subcommands: roots, table1, table2, table3, classify, check.
Exit codes: 0 success (golden diffs clean), 2 classification/golden
mismatch, 64 usage error.  CRLIE_MAX_RANK overrides the default scan bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from importlib import resources

from . import classify
from .contact import contact_datum
from .crstruct import HolomorphicSubspace, SU2Line, TwistedPair
from .painted import GraphError, PaintedGraph, flag_pair, is_good
from .report import Report
from .rootsys import RootSystemError, RootVector, build, format_vector, parse_type
from .scalars import Poly

USAGE_ERROR = 64
MISMATCH = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(USAGE_ERROR)


def _max_rank(args) -> int:
    if getattr(args, "max_rank", None):
        return args.max_rank
    env = os.environ.get("CRLIE_MAX_RANK")
    return int(env) if env else classify.DEFAULT_MAX_RANK


def load_fixture(name: str) -> Report:
    text = resources.files("crlie.data").joinpath(name).read_text()
    return Report.from_json(text)


def _diff_against(report: Report, fixture_name: str, keys: list[str],
                  row_filter=None) -> tuple[bool, list[str]]:
    golden = load_fixture(fixture_name)
    grows = [r for r in golden.rows if row_filter is None or row_filter(r)]

    def project(rows):
        return sorted(
            tuple((k, str(r.get(k, ""))) for k in keys) for r in rows
        )

    got, want = project(report.rows), project(grows)
    if got == want:
        return True, []
    msgs = []
    for row in want:
        if row not in got:
            msgs.append(f"missing: {dict(row)}")
    for row in got:
        if row not in want:
            msgs.append(f"extra: {dict(row)}")
    return False, msgs


def _emit(report: Report, args) -> None:
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_roots(args) -> int:
    try:
        system = (
            parse_type(args.type)
            if args.rank is None
            else build(args.type, args.rank)
        )
    except RootSystemError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE_ERROR
    rows = []
    for i, r in enumerate(system.roots):
        rows.append(
            {
                "what": "root",
                "value": format_vector(r),
                "coords": classify.canon_str(r),
                "positive": "yes" if system.positive[i] else "no",
                "norm2": str(system.norm2(i)),
            }
        )
    for k, a in enumerate(system.simple_roots):
        rows.append({"what": "simple_root", "index": str(k + 1), "value": format_vector(a)})
    if system.is_simple:
        rows.append({"what": "highest_root", "value": format_vector(system.highest_root())})
    for k, row in enumerate(system.cartan_matrix()):
        rows.append(
            {"what": "cartan_row", "index": str(k + 1), "value": ",".join(map(str, row))}
        )
    _emit(Report("roots", tuple(rows)), args)
    return 0


def cmd_table(args, which: int) -> int:
    max_rank = _max_rank(args)
    if which == 1:
        lo, hi = (args.rank_range.split("-") + ["8"])[:2] if args.rank_range else ("3", "8")
        report = Report("table1", tuple(classify.table1_rows(range(int(lo), int(hi) + 1))),
                        (f"fixtures/table1.json",))
        keys = ["type", "rank", "mu_canon", "Ro", "R1", "g1_summands"]
        ok, msgs = _diff_against(
            report, "table1.json", keys,
            row_filter=lambda r: int(lo) <= int(r["rank"]) <= int(hi) or r["type"] in "EFG",
        )
    elif which == 2:
        report = classify.report_table2(max_rank)
        keys = ["type", "rank", "theta_canon", "l_type", "groups"]
        ok, msgs = _diff_against(
            report, "table2.json", keys,
            row_filter=lambda r: int(r["rank"]) <= max_rank,
        )
    else:
        report = classify.report_table3(max_rank)
        keys = ["type", "rank", "theta_canon", "l_type", "groups"]
        ok, msgs = _diff_against(
            report, "table3.json", keys,
            row_filter=lambda r: int(r["rank"]) <= max_rank,
        )
    _emit(report.sorted(), args)
    if not ok:
        for m in msgs:
            sys.stderr.write(f"golden mismatch: {m}\n")
        return MISMATCH
    return 0


def cmd_classify(args) -> int:
    max_rank = _max_rank(args)
    if max_rank < 2:
        sys.stderr.write("error: --max-rank must be at least 2\n")
        return USAGE_ERROR
    report = classify.report_classify(args.what, max_rank)
    _emit(report, args)
    if args.what == "primitive":
        ok, msgs = _diff_against(
            report, "primitive.json",
            ["type", "rank", "family", "theta_canon"],
            row_filter=lambda r: int(r["rank"]) <= max_rank,
        )
        if not ok:
            for m in msgs:
                sys.stderr.write(f"golden mismatch: {m}\n")
            return MISMATCH
    if args.what in ("crgraphs", "nonprimitive"):
        ok, msgs = _diff_against(
            report, "nonprimitive.json",
            ["type", "rank", "graph", "cr_type", "theta_canon", "fiber"],
            row_filter=lambda r: int(r["rank"]) <= max_rank,
        )
        if not ok:
            for m in msgs:
                sys.stderr.write(f"golden mismatch: {m}\n")
            return MISMATCH
    return 0


def _parse_coeff(s: str) -> Poly:
    out = Poly.const(1)
    for factor in s.split("*"):
        factor = factor.strip()
        if not factor:
            continue
        if "^" in factor:
            v, e = factor.split("^")
            out = out * Poly.var(v.strip(), int(e))
        elif factor.lstrip("-").isdigit():
            out = out.scale(int(factor))
        else:
            out = out * Poly.var(factor)
    return out


def _parse_vector(system, s: str) -> RootVector:
    coords = [Fraction(x) for x in s.split(",")]
    return system.vector(coords)


def build_subspace(system, theta: RootVector, spec: dict) -> HolomorphicSubspace:
    datum = contact_datum(system, theta)
    pairs = []
    for hw, partner, coeff in spec.get("pairs", []):
        hwv = _parse_vector(system, hw)
        pv = _parse_vector(system, partner)
        pairs.append(
            TwistedPair(system.root_index(hwv), system.root_index(pv), _parse_coeff(coeff))
        )
    plains = tuple(
        system.root_index(_parse_vector(system, p)) for p in spec.get("plains", [])
    )
    rj: frozenset[int] = frozenset()
    rj_spec = spec.get("rj_plus")
    if rj_spec == "positive":
        from .modules import dual_pairs

        cd = dual_pairs(datum)
        unpaired = frozenset(datum.Rprime) - cd.paired_roots
        rj = frozenset(i for i in unpaired if system.positive[i])
    elif isinstance(rj_spec, list):
        rj = frozenset(system.root_index(_parse_vector(system, p)) for p in rj_spec)
    su2 = None
    if "su2" in spec:
        mu, coeff = spec["su2"]
        su2 = SU2Line(system.root_index(_parse_vector(system, mu)), _parse_coeff(coeff))
    return HolomorphicSubspace(datum, tuple(pairs), plains, rj, su2)


def cmd_check(args) -> int:
    rows = []
    if args.graph:
        try:
            g = PaintedGraph.parse(args.graph)
        except (GraphError, RootSystemError) as e:
            sys.stderr.write(f"error: {e}\n")
            return USAGE_ERROR
        v = is_good(g)
        row = {
            "graph": g.serialize(),
            "admissible": "yes" if v.admissible else "no",
            "reason": v.reason,
        }
        if v.admissible:
            row["theta"] = format_vector(v.theta)
            row["good"] = "yes" if v.good else "no"
            if v.good:
                row["cr_type"] = v.cr_type or ""
                k, q = flag_pair(g)
                row["K_type"] = k.type_str() if len(k) else "0"
                row["Q_type"] = q.type_str() if len(q) else "0"
            elif v.witness is not None:
                row["witness"] = format_vector(v.witness)
        rows.append(row)
        _emit(Report("check", tuple(rows)), args)
        return 0
    if args.theta and (args.m10 or args.family):
        try:
            system = parse_type(args.type)
            theta = _parse_vector(system, args.theta)
        except (RootSystemError, ValueError) as e:
            sys.stderr.write(f"error: {e}\n")
            return USAGE_ERROR
        if args.family:
            datum = contact_datum(system, theta)
            rows = classify.structure_rows_for_datum(datum)
            _emit(Report("structures", tuple(rows)), args)
            return 0
        try:
            spec = json.loads(args.m10)
            h = build_subspace(system, theta, spec)
        except (ValueError, KeyError, TypeError) as e:
            sys.stderr.write(f"error: invalid --m10 spec: {e}\n")
            return USAGE_ERROR
        rows.append(classify._structure_row(h, "user subspace"))
        _emit(Report("structures", tuple(rows)), args)
        return 0
    sys.stderr.write("error: check needs --graph or --type/--theta with --m10 or --family\n")
    return USAGE_ERROR


def main(argv=None) -> int:
    p = _Parser(prog="crlie", description="invariant contact and CR structure classification")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("roots", parents=[], help="root system data")
    sp.add_argument("--type", required=True)
    sp.add_argument("--rank", type=int, default=None)
    common(sp)

    for n in (1, 2, 3):
        sp = sub.add_parser(f"table{n}", help=f"reconstruct classification table {n}")
        if n == 1:
            sp.add_argument("--rank-range", default=None, help="e.g. 3-8")
        sp.add_argument("--max-rank", type=int, default=None)
        common(sp)

    sp = sub.add_parser("classify", help="run a classification scan")
    sp.add_argument("--what", required=True,
                    choices=("special", "primitive", "crgraphs", "nonprimitive"))
    sp.add_argument("--max-rank", type=int, default=None)
    common(sp)

    sp = sub.add_parser("check", help="verdicts for a painted graph or subspace")
    sp.add_argument("--graph", default=None)
    sp.add_argument("--type", default=None)
    sp.add_argument("--theta", default=None)
    sp.add_argument("--m10", default=None)
    sp.add_argument("--family", action="store_true",
                    help="classify all structures for the given contact form")
    common(sp)

    args = p.parse_args(argv)
    if args.command == "roots":
        return cmd_roots(args)
    if args.command == "table1":
        return cmd_table(args, 1)
    if args.command == "table2":
        return cmd_table(args, 2)
    if args.command == "table3":
        return cmd_table(args, 3)
    if args.command == "classify":
        return cmd_classify(args)
    if args.command == "check":
        return cmd_check(args)
    return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
