"""Command-line interface.

Exit codes: 0 when the property holds or an order was produced, 1 when a
property is violated (the witness is printed), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import convexity as cx
from . import pipelines as pl
from . import searches as se
from . import verifiers as vf
from .corpus import FILTERS, generate_corpus
from .errors import (
    AtkitError, BadClawPresent, ConvexChoiceUnavailable, NotAdmissible, NotClawFree,
    NotDominatingPair,
)
from .io import NAMED_FIXTURES, digest, named_fixture, parse_graph, serialise_graph, to_dot
from .report import RunReport

ALGORITHMS = (
    "bfs", "bfsplus", "lbfs", "lbfsplus", "bfsconv", "bfsconv-minhull",
    "bfsconv-augmented", "clawfree", "badclawfree",
)
PROPERTIES = ("atfree", "bilateral", "mdp", "bfs", "lbfs", "spine", "dompair")
QUERIES = ("atfree-order", "atfree-bfs-order", "bilateral", "spine-hereditary",
           "transitive", "anti-exchange")

# a failed hypothesis is a verdict, not a usage error
PROPERTY_ERRORS = (
    NotClawFree, BadClawPresent, NotAdmissible, ConvexChoiceUnavailable, NotDominatingPair,
    pl.AsteroidalTriplePresent,
)


class UsageError(Exception):
    pass


def _load(args):
    text = Path(args.graph).read_text()
    return parse_graph(text), digest(text)


def _names(text: str) -> list:
    return text.split()


def _join(seq) -> str:
    return " ".join(map(str, seq))


def cmd_recognize(args, report, out):
    g, report.input_digest = _load(args)
    o = cx.build_oracle(g)
    triple = cx.find_asteroidal_triple(g, o)
    claw = pl.find_claw(g)
    bad = pl.find_bad_claw(g, o)
    out.append("AT-free: " + ("yes" if triple is None else f"no (triple {_join(triple)})"))
    out.append("claw-free: " + ("yes" if claw is None else f"no ({claw})"))
    out.append("bad-claw-free: " + ("yes" if bad is None else f"no ({bad})"))
    report.add("at-free", triple is None, triple or ())
    report.add("claw-free", claw is None, (claw.base, *claw.prongs) if claw else ())
    report.add("bad-claw-free", bad is None, (bad.base, *bad.prongs) if bad else ())
    return 0 if triple is None else 1


def _prior(args, g):
    if not args.prior:
        raise UsageError(f"--alg {args.alg} needs --prior FILE")
    return se.as_ordering(g, _names(Path(args.prior).read_text()))


def cmd_order(args, report, out):
    g, report.input_digest = _load(args)
    start = args.start if args.start is not None else (g.names[0] if g.n else None)
    alg = args.alg
    code = 0
    first = None
    trace = None
    if alg == "bfs":
        tau = se.bfs(g, start)
    elif alg == "lbfs":
        tau = se.lbfs(g, start)
    elif alg == "bfsplus":
        tau = se.bfs_plus(g, _prior(args, g))
    elif alg == "lbfsplus":
        tau = se.lbfs_plus(g, _prior(args, g))
    elif alg == "bfsconv":
        tau, trace = se.bfs_conv(g, start, strict=False)
        if trace.flagged:
            report.add("convex-choice", False, trace.failure.queue, str(trace.failure))
            code = 1
    elif alg == "bfsconv-minhull":
        tau, trace = se.bfs_conv_minhull(g, start)
    elif alg == "bfsconv-augmented":
        run = se.augmented_run(g, start)
        tau, trace = run.ordering, run.trace
        report.results["augmented-run"] = list(run.run.sequence)
    elif alg == "clawfree":
        sweep = pl.clawfree_atfree_order(g, certify=args.certify)
        first, tau = sweep.first, sweep.ordering
    else:
        sweep = pl.badclawfree_atfree_order(g, certify=args.certify)
        first, tau = sweep.first, sweep.ordering
    if first is not None:
        report.results["sweep1"] = list(first.sequence)
    report.results["order"] = list(tau.sequence)
    out.append(_join(tau.sequence))
    if args.trace:
        if first is not None:
            out.append("sweep1: " + _join(first.sequence))
        if "augmented-run" in report.results:
            out.append("augmented-run: " + _join(report.results["augmented-run"]))
        for step in (trace.steps if trace else ()):
            line = f"step {step.step}: {step.chosen} eligible {_join(step.eligible)}"
            if step.rejected:
                line += " rejected " + ", ".join(f"{v} ({z} in I({u},{v}))" for v, u, z in step.rejected)
            if step.hull_sizes:
                line += " hulls " + _join(step.hull_sizes)
            out.append(line)
    if code:
        out.append(f"warning: {trace.failure}; finished as plain BFS")
    return code


def _order_arg(args, g):
    if args.order is None:
        raise UsageError(f"--property {args.property} needs --order")
    return se.as_ordering(g, _names(args.order))


def cmd_verify(args, report, out):
    g, report.input_digest = _load(args)
    prop = args.property
    if prop == "dompair":
        if args.pair is None or len(_names(args.pair)) != 2:
            raise UsageError("--property dompair needs --pair 'S T'")
        s, t = _names(args.pair)
        found = vf.dominating_pair_witness(g, s, t)
        if found is None:
            out.append("dompair: holds")
            report.add("dompair", True)
            return 0
        w, path = found
        out.append("dompair: violated")
        if w is None:
            out.append("witness: none (vertices are disconnected)")
            report.add("dompair", False, (), "disconnected")
        else:
            out.append(f"witness: {w} avoids path {_join(path)}")
            report.add("dompair", False, (w, *path), "path avoids vertex")
        return 1
    if prop == "spine":
        violation = vf.spine_violation(g)
    else:
        tau = _order_arg(args, g)
        if prop in ("atfree", "bilateral"):
            o = cx.build_oracle(g)
            fn = vf.atfree_order_violation if prop == "atfree" else vf.bilateral_violation
            violation = fn(o, tau)
        elif prop == "mdp":
            violation = vf.monotone_dp_violation(g, tau)
        elif prop == "bfs":
            violation = vf.bfs_violation(g, tau)
        else:
            violation = vf.lbfs_violation(g, tau)
    if violation is None:
        out.append(f"{prop}: holds")
        report.add(prop, True)
        return 0
    out.append(f"{prop}: violated")
    out.append(f"witness: {_join(violation.witness)}")
    if violation.position is not None:
        out.append(f"position: {violation.position}")
    out.append(f"detail: {violation.detail}")
    report.add(prop, False, violation.witness, violation.detail)
    return 1


def cmd_analyze(args, report, out):
    g, report.input_digest = _load(args)
    o = cx.build_oracle(g)
    adm = [v for v in g.names if v in cx.admissible_vertices(o)]
    out.append("admissible: " + _join(adm))
    report.results["admissible"] = adm
    pairs = vf.dominating_pairs(g)
    out.append("dominating-pairs: " + ", ".join(f"{s}-{t}" for s, t in pairs))
    report.results["dominating-pairs"] = [f"{s}-{t}" for s, t in pairs]
    if args.interval:
        requests = [_names(r) for r in args.interval]
        for r in requests:
            if len(r) != 2:
                raise UsageError("--interval takes two vertex names")
    else:
        requests = [(g.names[x], g.names[z]) for x in range(g.n) for z in range(x + 1, g.n)
                    if o.interval_mask[x][z]]
    for x, z in requests:
        members = [v for v in g.names if v in o.interval(x, z)]
        out.append(f"interval {x} {z}: {_join(members)}")
        report.results[f"interval {x} {z}"] = members
    for h in args.hull or ():
        hull = cx.convex_hull(o, _names(h))
        members = [v for v in g.names if v in hull.members]
        out.append(f"hull {h}: {_join(members)}")
        report.results[f"hull {h}"] = members
    return 0


def cmd_oracle(args, report, out):
    g, report.input_digest = _load(args)
    o = cx.build_oracle(g)
    q = args.query
    if q in ("atfree-order", "atfree-bfs-order", "bilateral"):
        fn = {
            "atfree-order": vf.exists_atfree_order_bruteforce,
            "atfree-bfs-order": vf.exists_atfree_bfs_order_bruteforce,
            "bilateral": vf.exists_bilateral_order_bruteforce,
        }[q]
        found = fn(g, o)
        out.append(f"{q}: " + ("none" if found is None else _join(found.sequence)))
        report.add(q, found is not None, found.sequence if found else ())
        return 0 if found is not None else 1
    if q == "spine-hereditary":
        violation = vf.hereditary_spine_violation(g)
        witness, detail = (violation.witness, violation.detail) if violation else ((), "")
    elif q == "transitive":
        witness, detail = cx.transitivity_violation(o) or (), ""
    else:
        found = cx.anti_exchange_violation(o)
        witness, detail = (), ""
        if found is not None:
            X, p, q2 = found
            witness = (p, q2)
            detail = "X = {" + _join(v for v in g.names if v in X) + "}"
    holds = not witness and not detail
    out.append(f"{q}: " + ("holds" if holds else "violated"))
    if not holds:
        out.append(f"witness: {_join(witness)}" + (f" ({detail})" if detail else ""))
    report.add(q, holds, witness, detail)
    return 0 if holds else 1


def cmd_fixtures(args, report, out):
    names = args.name or list(NAMED_FIXTURES)
    dest = Path(args.out)
    dest.mkdir(parents=True, exist_ok=True)
    for name in names:
        try:
            g = named_fixture(name)
        except KeyError:
            raise UsageError(f"unknown fixture {name!r}") from None
        path = dest / f"{name}.graph"
        path.write_text(serialise_graph(g))
        out.append(str(path))
        if args.dot:
            dot = dest / f"{name}.dot"
            dot.write_text(to_dot(g, name))
            out.append(str(dot))
    report.results["written"] = list(out)
    return 0


def _n_range(text: str) -> tuple:
    lo, _, hi = text.partition("..")
    try:
        return int(lo), int(hi or lo)
    except ValueError:
        raise argparse.ArgumentTypeError("expected N or LO..HI") from None


def cmd_corpus(args, report, out):
    graphs = generate_corpus(args.seed, args.n, args.count, args.filter, cap=vf.brute_cap())
    if args.out:
        dest = Path(args.out)
        dest.mkdir(parents=True, exist_ok=True)
        width = len(str(len(graphs)))
        for k, g in enumerate(graphs, start=1):
            path = dest / f"graph-{k:0{width}d}.graph"
            path.write_text(serialise_graph(g))
            out.append(str(path))
    else:
        out.append("\n".join(serialise_graph(g) for g in graphs).rstrip("\n"))
    report.results["count"] = len(graphs)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="atkit", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="print the run report as JSON")
    parser.add_argument("--report", metavar="PATH", help="also write the full run report here")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="asteroidal triple, claw and bad-claw certificates")
    p.add_argument("graph")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("order", help="compute a vertex ordering")
    p.add_argument("graph")
    p.add_argument("--alg", choices=ALGORITHMS, required=True)
    p.add_argument("--start", help="start vertex (default: first vertex of the file)")
    p.add_argument("--prior", metavar="FILE", help="prior ordering for bfsplus/lbfsplus")
    p.add_argument("--certify", action="store_true",
                   help="run the polynomial certificates before the two-sweep pipelines")
    p.add_argument("--trace", action="store_true", help="print per-step search decisions")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("verify", help="check a property of an ordering or the graph")
    p.add_argument("graph")
    p.add_argument("--property", choices=PROPERTIES, required=True)
    p.add_argument("--order", help="whitespace-separated vertex names")
    p.add_argument("--pair", help="two vertex names, for --property dompair")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="admissible vertices, dominating pairs, intervals, hulls")
    p.add_argument("graph")
    p.add_argument("--interval", action="append", metavar="'X Z'")
    p.add_argument("--hull", action="append", metavar="'V ...'")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("oracle", help="brute-force existence and characterisation checks")
    p.add_argument("graph")
    p.add_argument("--query", choices=QUERIES, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("fixtures", help="write the figure graphs as files")
    p.add_argument("--out", default=".")
    p.add_argument("--name", action="append", help="fixture name (fig1, fig3, P5, C6, ...)")
    p.add_argument("--dot", action="store_true", help="also write Graphviz files")
    p.set_defaults(func=cmd_fixtures)

    p = sub.add_parser("corpus", help="seeded random connected graphs")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n", type=_n_range, default=(5, 9), metavar="LO..HI")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--filter", choices=FILTERS, default="any")
    p.add_argument("--out", help="directory for graph-NNN.graph files (default: stdout)")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    argv = sys.argv[1:] if argv is None else list(argv)
    report = RunReport(command=["atkit", *argv])
    out: list = []
    began = time.perf_counter()
    try:
        code = args.func(args, report, out)
    except PROPERTY_ERRORS as exc:
        report.add("precondition", False, (), str(exc))
        out.append(f"violated: {exc}")
        code = 1
    except (AtkitError, UsageError, OSError) as exc:
        print(f"atkit: error: {exc}", file=sys.stderr)
        return 2
    report.elapsed_s = time.perf_counter() - began
    if args.json:
        sys.stdout.write(report.to_json())
    elif out:
        print("\n".join(out))
    if args.report:
        text = report.to_json() if args.report.endswith(".json") else report.to_text()
        Path(args.report).write_text(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
