"""Command line front end.

    scg analyze FILE                 report on one graph file
    scg verify-corpus [ID ...]       check corpus entries against expectations
    scg enumerate GROUP RANK         search string group representations
    scg dump-corpus [ID ...]         print or write corpus graphs

Exit status: 0 pass, 1 verification mismatch, 2 usage or parse error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .corpus import UnknownEntry, all_ids, load
from .fracture import analyze as fracture_analyze
from .perm import DEFAULT_CAP, BudgetExceeded, PermGroup, parity, parse_cycles
from .prgraph import GraphFormatError, PRGraph, from_generators, to_generators
from .search import (
    DEFAULT_SEARCH_BUDGET,
    SearchSpec,
    enumerate_tuples,
    graph_classes_up_to_duality,
    named_group,
)
from .sggi import SggiError, check_ip_recursive, schlafli_type, validate_sggi
from .verify import REPORT_VERSION, identify_group, verify_corpus

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _emit(report: dict, fmt: str, text_lines: list[str], out: Path | None = None) -> None:
    if fmt == "json":
        payload = json.dumps(report, indent=2, sort_keys=False, ensure_ascii=False) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n"
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        (out / ("report.json" if fmt == "json" else "report.txt")).write_text(payload, encoding="utf-8")
    sys.stdout.write(payload)


# -- analyze -----------------------------------------------------------------


def analyze_graph(g: PRGraph, cap: int = DEFAULT_CAP, name: str = "") -> dict:
    rho = to_generators(g)
    s = validate_sggi(rho, g.n)
    ip = check_ip_recursive(s, cap)
    frac = fracture_analyze(s, g)
    return {
        "id": name,
        "degree": g.n,
        "rank": g.rank,
        "generators": [str(r) for r in rho],
        "parity": [parity(r) for r in rho],
        "transitive": s.is_transitive,
        "order": s.order,
        "group": identify_group(s.order),
        "identification": "order",
        "valid": True,
        "ip": ip.to_json(),
        "type": list(schlafli_type(s)),
        "fracture": frac.to_json(),
        "pass": True,
    }


def _analyze_text(r: dict) -> list[str]:
    lines = [f"{r['id']}: degree {r['degree']}, rank {r['rank']}"]
    for i, (g, p) in enumerate(zip(r["generators"], r["parity"])):
        lines.append(f"  rho{i} = {g} ({p})")
    name = f" ({r['group']} by order)" if r["group"] else ""
    lines.append(f"  order {r['order']}{name}, {'transitive' if r['transitive'] else 'intransitive'}")
    lines.append(f"  type {{{','.join(map(str, r['type']))}}}")
    ip = r["ip"]
    lines.append(f"  intersection property {ip['status']} [{ip['method']}]")
    if ip["witness"]:
        w = ip["witness"]
        lines.append(f"    witness {w['element']} in J={w['J']} and K={w['K']}")
    f = r["fracture"]
    splits = ", ".join(f"{s['label']}:{tuple(s['edge'])}" for s in f["splits"]) or "none"
    lines.append(f"  fracture graph {'yes' if f['has_fracture'] else 'no'}, splits {splits}, "
                 f"2-fracture {'yes' if f['two_fracture'] else 'no'}")
    return lines


def cmd_analyze(args) -> int:
    path = Path(args.file)
    try:
        g = PRGraph.read(path)
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    if not g.edges:
        raise UsageError(f"{path}: graph has no edges (intransitive, degenerate generators)")
    try:
        record = analyze_graph(g, args.cap, path.stem)
    except SggiError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    report = {"version": REPORT_VERSION, "command": "analyze", "entries": [record], "summary": {"pass": True}}
    _emit(report, args.format, _analyze_text(record), args.out)
    return EXIT_OK


# -- verify-corpus -------------------------------------------------------------


def cmd_verify(args) -> int:
    ids = args.ids or all_ids()
    try:
        report = verify_corpus(ids, cap=args.cap, jobs=args.jobs)
    except UnknownEntry as exc:
        raise UsageError(f"unknown corpus entry {exc}") from exc
    except GraphFormatError as exc:
        raise UsageError(str(exc)) from exc
    lines = []
    for e in report["entries"]:
        mark = "PASS" if e["pass"] else "FAIL"
        ip = e.get("ip", {})
        lines.append(f"{mark} {e['id']}: order {e['order']}, IP {ip.get('status')} [{ip.get('method')}]")
        for reason in e.get("reasons", []):
            lines.append(f"     {reason}")
    s = report["summary"]
    lines.append(f"{s['passed']}/{s['total']} entries pass")
    _emit(report, args.format, lines, args.out)
    if any(e.get("ip", {}).get("method") == "budget_exceeded" for e in report["entries"]):
        return EXIT_BUDGET
    return EXIT_OK if s["pass"] else EXIT_MISMATCH


# -- enumerate -------------------------------------------------------------------


def _load_group(name: str) -> PermGroup:
    path = Path(name)
    if path.is_file():
        degree = None
        cycles = []
        for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("degree"):
                degree = int(line.split()[1])
            else:
                cycles.append((lineno, line))
        if degree is None:
            raise UsageError(f"{path}: missing 'degree <n>' line")
        gens = []
        for lineno, c in cycles:
            try:
                gens.append(parse_cycles(c, degree))
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: {exc}") from exc
        return PermGroup(gens, degree=degree)
    try:
        return named_group(name)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc


def cmd_enumerate(args) -> int:
    G = _load_group(args.group)
    quotient = "iso_and_duality" if args.up_to_duality else "iso"
    spec = SearchSpec(
        G,
        args.rank,
        require_ip=args.ip,
        quotient=quotient,
        budget=args.budget,
        jobs=args.jobs,
        conjugacy_reduction=args.conjugacy_reduction,
    )
    result = enumerate_tuples(spec)
    entries = []
    for k, (t, size) in enumerate(zip(result.representatives, result.class_sizes), 1):
        rec = {"id": f"class{k}", "generators": [str(p) for p in t], "tuples": size}
        if len(t) > 1:
            rec["type"] = [(t[i - 1] * t[i]).order() for i in range(1, len(t))]
        entries.append(rec)
        if args.out is not None:
            args.out.mkdir(parents=True, exist_ok=True)
            from_generators(t).write(args.out / f"class{k}.graph")
    summary = {
        "group": args.group,
        "group_order": G.order,
        "rank": args.rank,
        "require_ip": args.ip,
        "quotient": quotient,
        "conjugacy_reduction": args.conjugacy_reduction,
        "candidates": result.candidates,
        "tuples": len(result.tuples),
        "classes": len(result.representatives),
        "graph_classes_up_to_duality": graph_classes_up_to_duality(result.tuples),
    }
    report = {"version": REPORT_VERSION, "command": "enumerate", "entries": entries, "summary": summary}
    lines = [f"{e['id']}: {' '.join(e['generators'])}  ({e['tuples']} tuples)" for e in entries]
    lines.append(
        f"{summary['classes']} classes ({quotient}), {summary['tuples']} tuples, "
        f"{summary['graph_classes_up_to_duality']} graphs up to duality"
    )
    _emit(report, args.format, lines, args.out)
    return EXIT_OK


# -- dump-corpus -------------------------------------------------------------------


def cmd_dump(args) -> int:
    ids = args.ids or all_ids()
    chunks = []
    try:
        for i in ids:
            entry = load(i)
            if args.out is not None:
                args.out.mkdir(parents=True, exist_ok=True)
                entry.graph.write(args.out / f"{i}.graph", comment=i)
            else:
                chunks.append(entry.graph.to_text(comment=i))
    except UnknownEntry as exc:
        raise UsageError(f"unknown corpus entry {exc}") from exc
    if chunks:
        sys.stdout.write("\n".join(chunks))
    return EXIT_OK


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="element budget for intersections")
    common.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    common.add_argument("--out", type=Path, default=None, help="output directory")

    parser = argparse.ArgumentParser(prog="scg", description="string groups generated by involutions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="analyze a graph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify-corpus", parents=[common], help="verify corpus entries")
    p.add_argument("ids", nargs="*")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate representations of a group")
    p.add_argument("group", help="psl2_11, m11, s4 or a generator file")
    p.add_argument("rank", type=_positive)
    p.add_argument("--ip", action="store_true", help="require the intersection property")
    p.add_argument("--up-to-duality", action="store_true", help="identify a tuple with its reverse")
    p.add_argument("--budget", type=_positive, default=DEFAULT_SEARCH_BUDGET, help="candidate tuple budget")
    p.add_argument(
        "--conjugacy-reduction",
        action="store_true",
        help="search one first generator per conjugacy class and expand the hits by conjugation",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dump-corpus", parents=[common], help="print or write corpus graphs")
    p.add_argument("ids", nargs="*")
    p.set_defaults(func=cmd_dump)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
