"""Command-line front end: ``chromatica <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import config as _config
from .acceptance import run_all
from .analysis import (e_positivity, generalized_spiders, independence_polynomial,
                       net_closed_form, uniqueness_scan)
from .chromatic import csf_colorings, csf_subsets, qcsf_colorings
from .errors import ChromaticaError
from .graph import (Graph, IntervalSeq, claw, complete, cycle, edgeless, generalized_net,
                    generalized_spider, interval_seq_of, is_claw_free, is_horseshoe_crab_seq,
                    is_p4_sparse, nuig, path, spider)
from .partition import Partition
from .symfunc import Basis, SymFunc, convert
from .tableaux import (allowed_shapes, enumerate_tableaux, inv_weight, qcsf_tableaux,
                       verify_injection, weight_counts)

FAMILIES = ("net", "gspider", "hcrab", "nuig", "tail", "complete", "spider", "path",
            "cycle", "claw", "edgeless")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------

def _int_list(text: str) -> tuple[int, ...]:
    """``2,4,8^3`` -> ``(2, 4, 8, 8, 8)``; order is kept as given."""
    out: list[int] = []
    try:
        for token in text.replace(" ", "").strip("()[]").split(","):
            if not token:
                continue
            value, _, count = token.partition("^")
            out.extend([int(value)] * int(count or 1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse integer list {text!r}") from None
    return tuple(out)


def _legs(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph source")
    g.add_argument("--graph", metavar="FILE", help="edge-list JSON file, or - for stdin")
    g.add_argument("--family", choices=FAMILIES)
    g.add_argument("--n", type=int, help="body size, vertex count, or interval order size")
    g.add_argument("--legs", type=_legs, help="leg lengths, e.g. 2,1,0")
    g.add_argument("--m", type=_int_list, help="interval sequence m_1,...,m_{n-1}")
    g.add_argument("--m1", type=int, help="tail family: first entry")
    g.add_argument("--m2", type=int, help="tail family: second entry")
    g.add_argument("--repeat", type=int, default=1, help="tail family: copies of n-1")


def _add_format(p: argparse.ArgumentParser, report_flag: bool = False) -> None:
    p.add_argument("--format", choices=("text", "json"), default=None)
    if report_flag:
        p.add_argument("--report", choices=("text", "json"), default=None,
                       help="alias of --format")


def _tail_seq(m1: int, m2: int, n: int, repeat: int) -> IntervalSeq:
    """``(m1, m2, n-1 (repeat times), n, ..., n)`` padded to length ``n-1``."""
    body = [m1, m2] + [n - 1] * repeat
    if len(body) > n - 1:
        raise UsageError(f"tail sequence {body} is longer than n-1 = {n - 1}")
    return IntervalSeq(tuple(body + [n] * (n - 1 - len(body))))


def _need(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {', '.join(missing)}")


def build_graph(args) -> tuple[Graph, IntervalSeq | None, dict]:
    """Resolve the graph-source options into a graph, its interval sequence if known, and an echo."""
    if args.graph is not None:
        if args.graph == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.graph, encoding="utf-8") as fh:
                data = json.load(fh)
        g = Graph.from_json(data)
        return g, interval_seq_of(g), {"graph": g.to_json()}
    fam = args.family
    if fam is None:
        if args.m is not None:
            fam = "nuig"
        else:
            raise UsageError("give --graph FILE, --family NAME, or --m SEQ")
    echo: dict = {"family": fam}
    seq = None
    if fam == "net":
        _need(args, "n")
        g = generalized_net(args.n)
        echo["n"] = args.n
    elif fam == "gspider":
        _need(args, "n")
        legs = args.legs or ()
        g = generalized_spider(args.n, legs)
        echo.update(n=args.n, legs=list(legs))
    elif fam in ("hcrab", "nuig"):
        _need(args, "m")
        seq = IntervalSeq(args.m)
        if fam == "hcrab" and not is_horseshoe_crab_seq(seq):
            raise UsageError(f"{args.m} is not of the form (2, m2, m3, n, ..., n)")
        g = nuig(seq)
        echo["m"] = list(seq.m)
    elif fam == "tail":
        _need(args, "m1", "m2", "n")
        seq = _tail_seq(args.m1, args.m2, args.n, args.repeat)
        g = nuig(seq)
        echo["m"] = list(seq.m)
    elif fam == "complete":
        _need(args, "n")
        g = complete(args.n)
        echo["n"] = args.n
    elif fam == "spider":
        _need(args, "legs")
        g = spider(args.legs)
        echo["legs"] = list(args.legs)
    elif fam == "path":
        _need(args, "n")
        g = path(args.n)
        echo["n"] = args.n
    elif fam == "cycle":
        _need(args, "n")
        g = cycle(args.n)
        echo["n"] = args.n
    elif fam == "edgeless":
        _need(args, "n")
        g = edgeless(args.n)
        echo["n"] = args.n
    else:
        g = claw()
    if seq is None:
        seq = interval_seq_of(g)
    return g, seq, echo


def _seq_only(args) -> IntervalSeq:
    g, seq, _ = build_graph(args)
    if seq is None:
        raise UsageError("this command needs a natural unit interval graph (use --m)")
    return seq


# ---------------------------------------------------------------------------
# Commands; each returns (input echo, result, text lines, exit code)
# ---------------------------------------------------------------------------

def _sym_json(f: SymFunc) -> dict:
    out = f.to_json()
    out["text"] = str(f)
    return out


def cmd_graph(args):
    g, seq, echo = build_graph(args)
    result = {
        **g.to_json(),
        "connected": g.is_connected(),
        "claw_free": is_claw_free(g),
        "p4_sparse": is_p4_sparse(g),
        "interval_sequence": list(seq.m) if seq else None,
    }
    lines = [f"vertices: {g.n}", f"edges: {g.m} {[list(e) for e in g.edges]}",
             f"connected: {result['connected']}", f"claw-free: {result['claw_free']}",
             f"P4-sparse: {result['p4_sparse']}"]
    if seq:
        lines.append(f"interval sequence: {seq}")
    return echo, result, lines, 0


def cmd_csf(args):
    g, _, echo = build_graph(args)
    f = csf_colorings(g) if args.method == "colorings" else csf_subsets(g)
    f = convert(f, args.basis)
    echo.update(method=args.method, basis=args.basis)
    return echo, _sym_json(f), [str(f)], 0


def cmd_qcsf(args):
    seq = _seq_only(args)
    f = qcsf_tableaux(seq) if args.method == "tableaux" else qcsf_colorings(seq)
    f = convert(f, args.basis)
    echo = {"m": list(seq.m), "method": args.method, "basis": args.basis}
    return echo, _sym_json(f), [str(f)], 0


def cmd_tableaux(args):
    seq = _seq_only(args)
    shapes = [args.shape] if args.shape else allowed_shapes(seq)
    result, lines = [], []
    for lam in shapes:
        tabs = enumerate_tableaux(seq, lam)
        counts = weight_counts(seq, lam)
        entry = {"shape": list(lam), "count": len(tabs),
                 "weights": {str(w): c for w, c in sorted(counts.items())}}
        lines.append(f"shape {lam}: {len(tabs)} tableaux, by weight "
                     + ", ".join(f"{w}:{c}" for w, c in sorted(counts.items())))
        if args.shape or args.weights:
            entry["tableaux"] = [{"rows": [list(r) for r in t.rows], "inv": inv_weight(t)} for t in tabs]
            if args.weights or args.shape:
                lines += [f"  {t}  inv={inv_weight(t)}" for t in tabs]
        result.append(entry)
    echo = {"m": list(seq.m), "shape": list(args.shape) if args.shape else None,
            "weights": bool(args.weights)}
    return echo, result, lines, 0


def cmd_injections(args):
    seq = _seq_only(args)
    kwargs = {"variant": args.variant} if args.map == "xi" else {}
    report = verify_injection(seq, args.map, **kwargs)
    data = report.to_json()
    lines = [f"map {args.map} on {seq}: {report.source_count} sources -> {report.target} "
             f"({report.target_count} targets), shift {report.shift}",
             f"map checks: {'ok' if report.map_ok else 'FAILED'}; "
             f"counting: {'ok' if report.counting_ok else 'FAILED'}"]
    for key in ("errors", "invalid_targets", "wrong_shape", "weight_errors", "collisions",
                "counting_failures"):
        for item in data[key]:
            lines.append(f"  {key}: {item}")
    echo = {"m": list(seq.m), "map": args.map}
    if args.map == "xi":
        echo["variant"] = args.variant
    return echo, data, lines, 0 if report.ok else 1


def cmd_check(args):
    g, seq, echo = build_graph(args)
    if args.quasi:
        if seq is None:
            raise UsageError("--quasi needs a natural unit interval graph")
        f = qcsf_colorings(seq)
    else:
        f = csf_colorings(g)
    report = e_positivity(f)
    echo.update(property=args.property, quasi=args.quasi)
    lines = [f"verdict: {report.verdict}"]
    lines += [f"  witness e_{lam}: {c}" for lam, c in report.negative.items()]
    return echo, report.to_json(), lines, 0 if report.positive else 1


def cmd_net_formula(args):
    f = net_closed_form(args.n)
    result = {"closed_form": _sym_json(f)}
    lines = [str(f)]
    code = 0
    if args.verify:
        computed = convert(csf_colorings(generalized_net(args.n)), Basis.E)
        result["verified"] = computed == f
        if not result["verified"]:
            result["computed"] = _sym_json(computed)
            code = 1
        lines.append(f"verified against coloring enumeration: {result['verified']}")
    return {"n": args.n, "verify": bool(args.verify)}, result, lines, code


def cmd_uniqueness(args):
    if args.family != "gspider":
        raise UsageError("uniqueness scans support --family gspider")
    graphs = generalized_spiders(args.max_vertices)
    report = uniqueness_scan(graphs)
    data = report.to_json()
    if args.list:
        data["fingerprints"] = {name: independence_polynomial(g, g.n).to_json() for name, g in graphs}
    lines = [f"{report.count} generalized spiders with at most {args.max_vertices} vertices",
             f"independence polynomials pairwise distinct: {report.fingerprints_distinct}",
             f"CSF collisions: {len(report.csf_collisions)}"]
    return {"family": "gspider", "max_vertices": args.max_vertices}, data, lines, 0 if report.ok else 1


def cmd_selftest(args):
    numbers = sorted(set(args.only)) if args.only else None
    results = run_all(numbers)
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    data = [r.to_json() for r in results]
    return {"only": numbers}, data, lines, 0 if passed == len(results) else 1


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chromatica", description=__doc__)
    parser.add_argument("--max-n", type=int, help="vertex cap for enumerations (default 10)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build a graph and report structural properties")
    _add_graph_source(p)
    _add_format(p)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("csf", help="chromatic symmetric function")
    _add_graph_source(p)
    p.add_argument("--method", choices=("colorings", "subsets"), default="colorings")
    p.add_argument("--basis", choices=("m", "e", "p", "s"), default="m")
    _add_format(p)
    p.set_defaults(func=cmd_csf)

    p = sub.add_parser("qcsf", help="ascent-refined chromatic quasisymmetric function")
    _add_graph_source(p)
    p.add_argument("--method", choices=("colorings", "tableaux"), default="colorings")
    p.add_argument("--basis", choices=("m", "e", "p", "s"), default="e")
    _add_format(p)
    p.set_defaults(func=cmd_qcsf)

    p = sub.add_parser("tableaux", help="enumerate P-tableaux and their weights")
    _add_graph_source(p)
    p.add_argument("--shape", type=_partition)
    p.add_argument("--weights", action="store_true", help="list every tableau with its weight")
    _add_format(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("injections", help="verify an injection between tableau sets")
    _add_graph_source(p)
    p.add_argument("--map", choices=("eta", "psi", "xi", "counting"), required=True)
    p.add_argument("--variant", choices=("repaired", "literal"), default="repaired",
                   help="xi only: repaired cell moves, or the original ones")
    _add_format(p, report_flag=True)
    p.set_defaults(func=cmd_injections)

    p = sub.add_parser("check", help="positivity checks")
    p.add_argument("property", choices=("e-positive",))
    _add_graph_source(p)
    p.add_argument("--quasi", action="store_true", help="check the t-refined function instead")
    _add_format(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("net-formula", help="closed-form elementary expansion for generalized nets")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_net_formula)

    p = sub.add_parser("uniqueness", help="scan a family for graphs sharing a CSF")
    p.add_argument("--family", choices=("gspider",), default="gspider")
    p.add_argument("--max-vertices", type=int, default=9)
    p.add_argument("--list", action="store_true", help="include every fingerprint in the output")
    _add_format(p, report_flag=True)
    p.set_defaults(func=cmd_uniqueness)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", type=_legs, help="comma-separated criterion numbers")
    _add_format(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt = getattr(args, "report", None) or args.format or _config.current().output_format
    previous = _config.current()
    if args.max_n is not None:
        if args.max_n < 1:
            print("chromatica: --max-n must be positive", file=sys.stderr)
            return 2
        _config.set_current(previous.with_(max_vertices=args.max_n))
    try:
        echo, result, lines, code = args.func(args)
    except (UsageError, ChromaticaError, ValueError, OSError) as exc:
        print(f"chromatica {args.command}: {exc}", file=sys.stderr)
        return 2
    finally:
        _config.set_current(previous)
    if fmt == "json":
        print(json.dumps({"command": args.command, "input": echo, "result": result}, indent=2))
    else:
        print("\n".join(lines))
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
