"""Command-line verifier.

Every report ends with a block of ``KEY=VALUE`` lines after a ``[machine]``
marker.  Exit codes: 0 pass, 1 fail, 2 invalid input, 3 disagreement
between independent checkers (a bug, never expected).
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path
from typing import Sequence, TextIO

from . import __version__
from .artin import (
    GraphError,
    MisdirectedCycleWarning,
    UndirectedTriangleError,
    check_four_cycles_not_misdirected,
    check_three_cycles_directed,
    dual_table,
    dual_weights,
    grading_check,
    load_graph,
)
from .conditions import WITNESS_FIELDS, check_conditions_via_orders, check_systolic_conditions
from .corpus import ARTIN_GRAPHS, artin_graph, corpus_table, graph_names, table_names
from .garside import (
    ClassificationError,
    MeetError,
    check_gcd_condition,
    classify_garside,
    format_spec,
    garside_table,
    parse_spec,
)
from .link import build_link, check_six_large, classify_diagonal_free_4cycle, format_dot, format_link
from .table import InvalidTableError, ProductTable, TableError, format_table, load_table
from .words import (
    RELATORS,
    counterexample_realization,
    counterexample_table,
    format_word,
    verify_restricted_triangular_free,
)

EXIT_PASS, EXIT_FAIL, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2, 3

CORPUS_PREFIX = "corpus:"


class InputError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


class Report:
    def __init__(self) -> None:
        self.lines: list[str] = []
        self.machine: dict[str, str] = {}

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def key(self, name: str, value: object) -> None:
        self.machine[name] = str(value)

    def write(self, out: TextIO) -> None:
        for line in self.lines:
            out.write(line + "\n")
        out.write("[machine]\n")
        for name, value in self.machine.items():
            out.write(f"{name}={value}\n")


# ---------------------------------------------------------------------------
# inputs

def _read_table(source: str) -> ProductTable:
    if source.startswith(CORPUS_PREFIX):
        try:
            return corpus_table(source[len(CORPUS_PREFIX):])
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    try:
        return load_table(source)
    except OSError as exc:
        raise InputError(f"{source}: {exc.strerror}") from None
    except TableError as exc:
        raise InputError(f"{source}: {exc}") from None


def _read_graph(source: str):
    if source.startswith(CORPUS_PREFIX):
        name = source[len(CORPUS_PREFIX):]
        if name not in ARTIN_GRAPHS:
            raise InputError(f"no corpus graph named {name!r}")
        return artin_graph(name)
    try:
        return load_graph(source)
    except OSError as exc:
        raise InputError(f"{source}: {exc.strerror}") from None
    except GraphError as exc:
        raise InputError(f"{source}: {exc}") from None


def _emit(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


# ---------------------------------------------------------------------------
# shared pipeline

def _run_table_checks(
    report: Report,
    table: ProductTable,
    *,
    witnesses: bool,
    link_oracle: bool,
    order_checker: bool,
    emit_link: str | None = None,
    emit_dot: str | None = None,
) -> int:
    report.say(f"generators: {len(table.generators)}")
    report.say(f"products: {len(table.products)}")
    report.key("GENERATORS", len(table.generators))
    report.key("PRODUCTS", len(table.products))

    validation = table.validation
    if not validation.ok:
        report.say("validation: FAIL")
        for v in validation.violations:
            report.say(f"  {v}")
        report.key("VALID", "no")
        report.key("VERDICT", "INVALID")
        return EXIT_INVALID
    report.say("validation: ok")
    report.key("VALID", "yes")

    conds = check_systolic_conditions(table)
    for res in conds.results:
        suffix = f" ({res.count} witnesses)" if not res.passed else ""
        report.say(f"condition {res.number}: {_verdict(res.passed)}{suffix}")
        report.key(f"CONDITION_{res.number}", _verdict(res.passed))
        if witnesses and not res.passed:
            names = WITNESS_FIELDS[res.number]
            for w in res.witnesses:
                report.say("  " + " ".join(f"{k}={v}" for k, v in zip(names, w)))
            if res.truncated:
                report.say(f"  ... {res.count - len(res.witnesses)} more")
    report.key("FAILED", ",".join(map(str, conds.failed)) or "none")

    code = EXIT_PASS if conds.overall else EXIT_FAIL

    link = None
    if link_oracle or emit_link or emit_dot:
        link = build_link(table)
    if emit_link:
        _emit(emit_link, format_link(link))
    if emit_dot:
        _emit(emit_dot, format_dot(link))

    if link_oracle:
        six = check_six_large(link)
        report.say(f"link: {len(link.vertices)} vertices, {len(link.edges)} edges, "
                   f"{six.cycles4} embedded 4-cycles, {six.cycles5} embedded 5-cycles, "
                   f"{six.diagonal_free_count} without diagonal")
        if witnesses:
            for cyc in six.diagonal_free:
                kind = f"type {classify_diagonal_free_4cycle(link, cyc)}" if len(cyc) == 4 else "5-cycle"
                report.say(f"  {cyc} {kind}")
        agree = six.passed == conds.overall
        report.say(f"link oracle: 6-large {'yes' if six.passed else 'no'}, "
                   f"{'agrees' if agree else 'DISAGREES'}")
        report.key("LINK_VERTICES", len(link.vertices))
        report.key("LINK_EDGES", len(link.edges))
        report.key("LINK_CYCLES4", six.cycles4)
        report.key("LINK_CYCLES5", six.cycles5)
        report.key("LINK_DIAGONAL_FREE", six.diagonal_free_count)
        report.key("LINK_AGREES", "yes" if agree else "no")
        if not agree:
            code = EXIT_MISMATCH

    if order_checker:
        orders = check_conditions_via_orders(table)
        agree = orders.verdicts == conds.verdicts
        report.say(f"order checker: failed {','.join(map(str, orders.failed)) or 'none'}, "
                   f"{'agrees' if agree else 'DISAGREES'}")
        for diag in orders.diagnostics:
            report.say(f"  {diag}")
        report.key("ORDER_AGREES", "yes" if agree else "no")
        if not agree:
            code = EXIT_MISMATCH

    report.say(f"verdict: {_verdict(conds.overall)}")
    report.key("VERDICT", _verdict(conds.overall))
    return code


# ---------------------------------------------------------------------------
# subcommands

def cmd_check(args: argparse.Namespace, report: Report) -> int:
    table = _read_table(args.file)
    report.say(f"table: {args.file}")
    return _run_table_checks(
        report, table,
        witnesses=args.witnesses,
        link_oracle=args.link_oracle,
        order_checker=args.order_checker,
        emit_link=args.emit_link,
        emit_dot=args.emit_dot,
    )


def cmd_garside(args: argparse.Namespace, report: Report) -> int:
    try:
        spec = parse_spec(args.spec)
    except (ValueError, TypeError) as exc:
        raise InputError(f"spec {args.spec!r}: {exc}") from None
    table = garside_table(spec)
    report.say(f"garside: {format_spec(spec)}")
    report.key("SPEC", format_spec(spec))
    if args.emit:
        _emit(args.emit, format_table(table, header=f"garside {format_spec(spec)}"))
    code = EXIT_PASS
    if args.check:
        code = _run_table_checks(report, table, witnesses=args.witnesses, link_oracle=True, order_checker=True)
        gcd = check_gcd_condition(table)
        report.say(f"gcd condition: {_verdict(gcd.passed)}")
        for side, s, t, meet in gcd.witnesses:
            report.say(f"  {side}: {s} ^ {t} = {meet}")
        report.key("GCD", _verdict(gcd.passed))
        if gcd.passed != check_systolic_conditions(table).overall:
            code = EXIT_MISMATCH
    else:
        report.say(f"generators: {len(table.generators)}")
        report.say(f"products: {len(table.products)}")
        report.key("GENERATORS", len(table.generators))
        report.key("PRODUCTS", len(table.products))
    if args.classify_roundtrip:
        back = classify_garside(table)
        ok = back == spec.canonical()
        report.say(f"classification: {format_spec(back)} ({'matches' if ok else 'DIFFERS FROM'} "
                   f"{format_spec(spec.canonical())})")
        report.key("ROUNDTRIP", "yes" if ok else "no")
        if not ok:
            code = EXIT_MISMATCH
    return code


def cmd_artin(args: argparse.Namespace, report: Report) -> int:
    graph = _read_graph(args.file)
    report.say(f"graph: {args.file}")
    report.say(f"vertices: {len(graph.vertices)}")
    report.say(f"edges: {len(graph.edges)}")
    tri = check_three_cycles_directed(graph)
    four = check_four_cycles_not_misdirected(graph)
    report.say(f"3-cycles directed: {'yes' if tri else 'no'}")
    for w in tri.witnesses:
        report.say(f"  undirected: {' '.join(w)}")
    report.say(f"4-cycles misdirected: {'no' if four else 'yes'}")
    for w in four.witnesses:
        report.say(f"  misdirected: {' '.join(w)}")
    report.key("THREE_CYCLES_DIRECTED", "yes" if tri else "no")
    report.key("MISDIRECTED_FOUR_CYCLES", len(four.witnesses))
    if not tri:
        raise InputError(str(UndirectedTriangleError(tri.witnesses)))
    if not four:
        report.say("warning: misdirected 4-cycle, systolicity is not guaranteed")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", MisdirectedCycleWarning)
        table = dual_table(graph)
    graded = grading_check(table, dual_weights(table))
    report.say(f"dual grading: {'ok' if graded else 'BROKEN'}")
    report.key("GRADED", "yes" if graded else "no")
    if args.emit_dual:
        _emit(args.emit_dual, format_table(table, header=f"dual presentation of {args.file}"))
    if not args.check:
        report.say(f"dual generators: {len(table.generators)}")
        report.say(f"dual products: {len(table.products)}")
        report.key("GENERATORS", len(table.generators))
        report.key("PRODUCTS", len(table.products))
        return EXIT_PASS
    return _run_table_checks(report, table, witnesses=args.witnesses, link_oracle=True, order_checker=True)


def cmd_classify(args: argparse.Namespace, report: Report) -> int:
    table = _read_table(args.file)
    report.say(f"table: {args.file}")
    try:
        spec = classify_garside(table)
    except InvalidTableError as exc:
        raise InputError(str(exc)) from None
    except (ClassificationError, MeetError) as exc:
        report.say(f"classification: FAIL ({exc})")
        report.key("VERDICT", "FAIL")
        return EXIT_FAIL
    report.say(f"classification: {format_spec(spec)}")
    report.key("SPEC", format_spec(spec))
    report.key("VERDICT", "PASS")
    return EXIT_PASS


def cmd_counterexamples(args: argparse.Namespace, report: Report) -> int:
    indices = [args.index] if args.index else sorted(RELATORS)
    all_ok = True
    for i in indices:
        ce = counterexample_realization(i)
        rel = ", ".join(f"{p}{q}={r}" for p, q, r in ce.triples)
        report.say(f"R{i}: {rel}")
        basis = " ".join(ce.realization.basis)
        images = ", ".join(f"{s}={format_word(w)}" for s, w in sorted(ce.realization.images.items())
                           if s not in ce.realization.basis)
        report.say(f"  free basis {basis}; {images}")
        if not args.verify:
            continue
        free = verify_restricted_triangular_free(ce.symbols, ce.triples, ce.realization)
        failed = check_systolic_conditions(counterexample_table(i)).failed
        ok = free.passed and failed == (i,)
        all_ok &= ok
        detail = f"{free.checked} triples" if free.passed else f"{free.triple}: {free.reason}"
        report.say(f"  restricted triangular: {_verdict(free.passed)} ({detail})")
        report.say(f"  failing conditions: {','.join(map(str, failed)) or 'none'}")
        report.say(f"  R{i}: {_verdict(ok)}")
        report.key(f"R{i}", _verdict(ok))
        report.key(f"R{i}_FAILED", ",".join(map(str, failed)) or "none")
    if args.verify:
        report.key("VERDICT", _verdict(all_ok))
    return EXIT_PASS if all_ok else EXIT_FAIL


def cmd_corpus(args: argparse.Namespace, report: Report) -> int:
    if args.action == "list":
        for name in table_names():
            report.say(f"table {name}")
        for name in graph_names():
            report.say(f"graph {name}")
        report.key("TABLES", len(table_names()))
        report.key("GRAPHS", len(graph_names()))
        return EXIT_PASS
    if not args.name:
        raise InputError("corpus show needs a NAME")
    if args.name in ARTIN_GRAPHS:
        sys.stdout.write(ARTIN_GRAPHS[args.name])
    else:
        try:
            sys.stdout.write(format_table(corpus_table(args.name), header=args.name))
        except KeyError as exc:
            raise InputError(exc.args[0]) from None
    return EXIT_PASS


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="syspres", description="Decide systolicity of restricted triangular presentations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the five conditions on a table file")
    p.add_argument("file", help="table file, or corpus:NAME")
    p.add_argument("--witnesses", action="store_true", help="list witnesses of failing conditions")
    p.add_argument("--link-oracle", action="store_true", help="cross-check against the link of the identity")
    p.add_argument("--order-checker", action="store_true", help="cross-check with the prefix-order formulation")
    p.add_argument("--emit-link", metavar="FILE", help="write the link as text")
    p.add_argument("--emit-dot", metavar="FILE", help="write the link as a DOT digraph")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("garside", help="generate the Garside table of an amalgam such as 1x2;1x3")
    p.add_argument("spec")
    p.add_argument("--emit", metavar="FILE", help="write the table file")
    p.add_argument("--check", action="store_true", help="run every checker including the gcd criterion")
    p.add_argument("--classify-roundtrip", action="store_true", help="classify the table back into a spec")
    p.add_argument("--witnesses", action="store_true")
    p.set_defaults(run=cmd_garside)

    p = sub.add_parser("artin", help="build the dual presentation of an oriented Artin graph")
    p.add_argument("file", help="graph file, or corpus:NAME")
    p.add_argument("--emit-dual", metavar="FILE", help="write the dual table file")
    p.add_argument("--check", action="store_true", help="check the dual table")
    p.add_argument("--witnesses", action="store_true")
    p.set_defaults(run=cmd_artin)

    p = sub.add_parser("classify", help="recover the amalgam presented by a Garside table")
    p.add_argument("file", help="table file, or corpus:NAME")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("counterexamples", help="the five single-condition counterexamples")
    p.add_argument("--verify", action="store_true", help="replay the free-group verification")
    p.add_argument("--index", type=int, choices=range(1, 6), metavar="{1..5}")
    p.set_defaults(run=cmd_counterexamples)

    p = sub.add_parser("corpus", help="built-in tables and graphs")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("name", nargs="?")
    p.set_defaults(run=cmd_corpus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors exit with 2 already
        return int(exc.code or 0)
    report = Report()
    try:
        code = args.run(args, report)
    except InputError as exc:
        sys.stdout.flush()
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:  # environment misconfiguration, e.g. witness cap
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.command != "corpus" or args.action == "list":
        report.write(sys.stdout)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
