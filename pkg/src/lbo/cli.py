"""Command-line front end.

Exit codes: 0 success / match, 1 verification or diff failure,
2 usage / parse error.  Resource caps can be overridden with the
LBO_MAX_COLUMNS and LBO_MAX_STRANDS environment variables; a table
argument of '-' reads from stdin.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import golden, jones, realization
from .chains import (Theory, boundary_matrix, export_matrix_triplets,
                     theory_from_label, verify_boundary_squared,
                     verify_presimplicial, verify_very_weak_simplicial)
from .errors import (IneligibleTable, LboError, NotClosed, ParseError,
                     RangeError)
from .magma import FAMILIES, MulTable, classify, enumerate_tables, find_zeros, parse_table
from .snf import homology_range

THEORY_LABELS = tuple(th.value for th in Theory)


@dataclass
class RunConfig:
    max_columns: int = 4096
    max_strands: int = 10
    json_output: bool = False
    force: bool = False

    @classmethod
    def from_env(cls) -> "RunConfig":
        cfg = cls()
        if "LBO_MAX_COLUMNS" in os.environ:
            cfg.max_columns = int(os.environ["LBO_MAX_COLUMNS"])
        if "LBO_MAX_STRANDS" in os.environ:
            cfg.max_strands = int(os.environ["LBO_MAX_STRANDS"])
        if cfg.max_columns <= 0 or cfg.max_strands <= 0:
            raise ParseError("resource caps must be positive")
        return cfg


def _read_table(arg: str) -> MulTable:
    if arg == "-":
        arg = sys.stdin.read()
    return parse_table(arg)


def _group_doc(degree, g):
    return {"degree": degree, "betti": g.betti,
            "torsion": list(g.torsion), "text": str(g)}


def _cmd_check(args, cfg, out):
    t = _read_table(args.table)
    report = classify(t)
    if cfg.json_output:
        doc = {
            "table": t.brace(),
            "order": t.order,
            "flags": report.flags(),
            "units": list(report.units),
            "zeros": list(report.zeros),
            "left_zeros": list(report.left_zeros),
            "right_zeros": list(report.right_zeros),
        }
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    out.write("table %s (order %d)\n" % (t.brace(), t.order))
    for name, value in report.flags().items():
        out.write("  %-24s %s\n" % (name + ":", "yes" if value else "no"))
    for name, elems in (("units", report.units), ("zeros", report.zeros),
                        ("left zeros", report.left_zeros),
                        ("right zeros", report.right_zeros)):
        out.write("  %-24s %s\n"
                  % (name + ":", " ".join(map(str, elems)) if elems else "none"))
    return 0


def _cmd_homology(args, cfg, out):
    t = _read_table(args.table)
    theory = theory_from_label(args.theory)
    if cfg.force and not theory.eligible(t):
        # a forced run must still be a chain complex to mean anything
        rep = verify_boundary_squared(theory, t, args.max_dim,
                                      cfg.max_columns, force=True)
        if not rep.ok:
            sys.stderr.write(
                "forced run aborted: boundary does not square to zero\n")
            sys.stderr.write(rep.render() + "\n")
            return 1
    groups = homology_range(theory, t, args.max_dim, cfg.max_columns,
                            force=cfg.force)
    if cfg.json_output:
        doc = {"table": t.brace(), "theory": theory.label,
               "groups": [_group_doc(n, g) for n, g in enumerate(groups)]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for n, g in enumerate(groups):
            out.write("H_%d = %s\n" % (n, g))
    return 0


def _cmd_verify(args, cfg, out):
    t = _read_table(args.table)
    reports = []
    for theory in (Theory.LBO, Theory.LBO_NC):
        reports.append(verify_presimplicial(theory, t, args.max_dim, force=True))
    for theory in Theory:
        if theory.eligible(t):
            reports.append(verify_boundary_squared(theory, t, args.max_dim,
                                                   cfg.max_columns))
    zeros = find_zeros(t)
    if zeros and Theory.LBO.eligible(t):
        reports.append(verify_very_weak_simplicial(t, zeros[0], args.max_dim))
    ok = all(r.ok for r in reports)
    if cfg.json_output:
        doc = {"table": t.brace(), "ok": ok,
               "reports": [{"title": r.title, "ok": r.ok, "checked": r.checked,
                            "violations": [str(v) for v in r.violations],
                            "notes": list(r.notes)} for r in reports]}
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in reports:
            out.write(r.render() + "\n")
    return 0 if ok else 1


def _cmd_enumerate(args, cfg, out):
    tables = enumerate_tables(args.order, args.family, args.up_to_iso)
    for t in tables:
        line = t.brace()
        if args.with_homology:
            groups = homology_range(Theory.LBO, t, 3, cfg.max_columns)
            line += " | " + " | ".join(str(g) for g in groups)
        out.write(line + "\n")
    return 0


def _cmd_jones(args, cfg, out):
    if args.jones_cmd == "count":
        out.write("%d\n" % len(jones.enumerate_diagrams(args.n, cfg.max_strands)))
        return 0
    if args.jones_cmd == "census":
        out.write("%d\n" % jones.count_idempotents(args.n, cfg.max_strands))
        return 0
    if args.jones_cmd == "compose":
        d1 = jones.parse_diagram(args.d1)
        d2 = jones.parse_diagram(args.d2)
        prod_, loops = jones.compose(d1, d2)
        if cfg.json_output:
            out.write(json.dumps({"diagram": prod_.text(), "loops": loops}) + "\n")
        else:
            out.write("%s\nloops: %d\n" % (prod_.text(), loops))
        return 0
    # jsmp
    parts = jones.parse_partition(args.partition)
    members = jones.jsmp(args.n, parts, cfg.max_strands)
    table = jones.to_mul_table(members)
    if cfg.json_output:
        doc = {"n": args.n, "partition": list(parts),
               "elements": [d.text() for d in members],
               "table": table.brace()}
        if args.homology:
            groups = homology_range(Theory.LBO, table, 3, cfg.max_columns)
            doc["groups"] = [_group_doc(n, g) for n, g in enumerate(groups)]
        out.write(json.dumps(doc, indent=2) + "\n")
        return 0
    out.write("elements (%d):\n" % len(members))
    for d in members:
        out.write("  %s\n" % d.text())
    out.write("table: %s\n" % table.brace())
    if args.homology:
        for n, g in enumerate(homology_range(Theory.LBO, table, 3, cfg.max_columns)):
            out.write("H_%d = %s\n" % (n, g))
    return 0


def _cmd_tables(args, cfg, out):
    which = args.which
    if which == 4:
        fresh = golden.regenerate_table4()
        out.write(golden.render_table4(fresh))
    else:
        fresh = golden.regenerate_rows(which)
        out.write(golden.render_rows(fresh, with_marker=which in (5, 6)))
    if not args.diff:
        return 0
    diff = golden.diff_table(which)
    out.write(diff.render() + "\n")
    return 0 if diff.ok else 1


def _cmd_skeleton(args, cfg, out):
    t = _read_table(args.table)
    out.write(realization.export_skeleton(t, args.format))
    return 0


def _cmd_matrix(args, cfg, out):
    t = _read_table(args.table)
    theory = theory_from_label(args.theory)
    mat = boundary_matrix(theory, t, args.degree, cfg.max_columns,
                          force=cfg.force)
    out.write(export_matrix_triplets(mat))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lbo",
        description="Homology of finite semigroups satisfying "
                    "self-distributivity, idempotency, or a*b*b*c = a*b*c, "
                    "with the Jones-monoid diagram algebra.",
    )
    parser.add_argument("--json", action="store_true", help="JSON output")
    parser.add_argument("--force", action="store_true",
                        help="skip eligibility gating (results are checked "
                             "for chain-complex soundness instead)")
    parser.add_argument("--max-columns", type=int, default=None,
                        help="cap on boundary-matrix columns (default 4096)")
    parser.add_argument("--max-strands", type=int, default=None,
                        help="cap on diagram strands (default 10)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="classify a multiplication table")
    p.add_argument("table", help="brace notation, JSON rows, or - for stdin")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("homology", help="homology groups H_0..H_max")
    p.add_argument("table")
    p.add_argument("--theory", choices=THEORY_LABELS, default=Theory.LBO.value)
    p.add_argument("--max-dim", type=int, default=3)
    p.set_defaults(fn=_cmd_homology)

    p = sub.add_parser("verify", help="machine-check the simplicial identities")
    p.add_argument("table")
    p.add_argument("--max-dim", type=int, default=4)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("enumerate", help="stream all tables of a family")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--with-homology", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("jones", help="Jones monoid operations")
    jsub = p.add_subparsers(dest="jones_cmd", required=True)
    q = jsub.add_parser("count", help="number of diagrams (Catalan)")
    q.add_argument("n", type=int)
    q = jsub.add_parser("census", help="number of idempotent diagrams")
    q.add_argument("n", type=int)
    q = jsub.add_parser("jsmp", help="sub-monoid of a partition")
    q.add_argument("n", type=int)
    q.add_argument("partition", help="e.g. '2+1+3'")
    q.add_argument("--homology", action="store_true")
    q = jsub.add_parser("compose", help="stack two diagrams")
    q.add_argument("d1", help="e.g. '2; t1-t2, b1-b2'")
    q.add_argument("d2")
    p.set_defaults(fn=_cmd_jones)

    p = sub.add_parser("tables", help="regenerate a bundled reference table")
    p.add_argument("--which", type=int, choices=golden.TABLE_IDS, required=True)
    p.add_argument("--diff", action="store_true",
                   help="compare with the bundled transcription")
    p.set_defaults(fn=_cmd_tables)

    p = sub.add_parser("skeleton", help="export the realization's skeleton")
    p.add_argument("table")
    p.add_argument("--format", choices=("graph", "cells"), default="graph")
    p.set_defaults(fn=_cmd_skeleton)

    p = sub.add_parser("matrix", help="boundary matrix as a triplet stream")
    p.add_argument("table")
    p.add_argument("--theory", choices=THEORY_LABELS, default=Theory.LBO.value)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(fn=_cmd_matrix)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig.from_env()
        if args.max_columns is not None:
            cfg.max_columns = args.max_columns
        if args.max_strands is not None:
            cfg.max_strands = args.max_strands
        if cfg.max_columns <= 0 or cfg.max_strands <= 0:
            raise ParseError("resource caps must be positive")
        cfg.json_output = args.json
        cfg.force = args.force
        return args.fn(args, cfg, sys.stdout)
    except (ParseError, RangeError, ValueError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except (IneligibleTable, NotClosed) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1
    except LboError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 1


if __name__ == "__main__":
    sys.exit(main())
