"""Command-line frontend.

Exit codes: 0 ok, 1 usage, 2 domain/input, 3 verification failure, 4 resource.
Errors go to stderr as ``error:<code>:<message>``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ar as ar_mod
from .errors import AntiRamseyError
from .extremal import METHODS, candidate_sequences, ellq
from .greedy import algorithm_a, min_boundary_edges
from .multipartite import parse_parts
from .oracle import (
    DEFAULT_MAX_EDGES,
    DEFAULT_MAX_N,
    find_rainbow_tree,
    oracle_ar,
    oracle_ellq,
    oracle_min_boundary,
)
from .scan import scan

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY, EXIT_RESOURCE = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def _base(g, q=None) -> dict:
    out = {"parts": list(g.parts), "n": g.n}
    if q is not None:
        out["q"] = q
    return out


def cmd_ar(args) -> int:
    g = parse_parts(args.parts)
    want_witness = args.witness is not None or args.command == "witness"
    res = ar_mod.anti_ramsey(g, args.q, args.method, witness=want_witness, node_budget=args.node_budget)
    path = args.witness
    if res.witness is not None and path is not None:
        ar_mod.write_witness(path, res.witness, args.q)
    if args.json:
        cert = res.extremal.certificate
        out = _base(g, args.q) | {
            "value": res.value,
            "ellq": res.ellq_value,
            "method": res.method,
            "certificate": cert.rows() if cert else None,
            "witness_path": path,
        }
        _emit(out)
    else:
        print(f"ar = {res.value} (method: {res.method})")
        if args.command == "witness" and path is None:
            sys.stdout.write(ar_mod.format_witness(res.witness, args.q))
        elif path is not None:
            print(f"witness written to {path} (t = {res.witness.t})")
    return EXIT_OK


def cmd_ellq(args) -> int:
    g = parse_parts(args.parts)
    res = ellq(g, args.q, args.method, args.node_budget)
    cert = res.certificate
    if args.json:
        _emit(_base(g, args.q) | {
            "value": res.value,
            "ellq": res.value,
            "method": res.method,
            "certificate": cert.rows() if cert else None,
        })
    else:
        print(f"ellq = {res.value} (method: {res.method})")
        if cert is not None:
            print("blocks: " + " ".join(
                "(" + ",".join(str(cert.assignment[i][j]) for i in range(g.k)) + ")"
                for j in range(len(cert.block_sizes))
            ))
    return EXIT_OK


def cmd_min_boundary(args) -> int:
    g = parse_parts(args.parts)
    trace = algorithm_a(g, args.r)
    value = min_boundary_edges(g, args.r)
    if args.json:
        _emit(_base(g) | {
            "r": args.r,
            "value": value,
            "selection": list(trace.selection.counts),
            "trace": {"pick_order": list(trace.pick_order), "degrees": list(trace.degrees_at_pick)},
        })
    else:
        print(f"min |E_G(S)| = {value} over {args.r}-subsets")
        print("selection counts: " + ",".join(map(str, trace.selection.counts)))
        print("picked parts: " + " ".join(map(str, trace.pick_order)))
        print("degrees at pick: " + " ".join(map(str, trace.degrees_at_pick)))
    return EXIT_OK


def cmd_sequences(args) -> int:
    seqs = candidate_sequences(args.n, args.q)
    if args.json:
        _emit({"n": args.n, "q": args.q, "sequences": [list(s) for s in seqs]})
    else:
        for s in seqs:
            print(",".join(map(str, s)))
    return EXIT_OK


def cmd_check_coloring(args) -> int:
    try:
        coloring, header_q = ar_mod.read_witness(args.file)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    q = header_q if args.q is None else args.q
    tree = find_rainbow_tree(coloring, q)
    if tree is None:
        print("no-rainbow")
        return EXIT_OK
    for (u, v), c in zip(tree.edges, tree.colors):
        print(f"{u[0]} {u[1]} {v[0]} {v[1]} {c}")
    return EXIT_VERIFY


def cmd_oracle(args) -> int:
    g = parse_parts(args.parts)
    out = _base(g)
    if args.which == "ellq":
        _need(args, "q")
        value, cert = oracle_ellq(g, args.q, max_n=args.max_n)
        out |= {"q": args.q, "value": value, "ellq": value, "method": "oracle", "certificate": cert.rows()}
        line = f"ellq = {value} (method: oracle)"
    elif args.which == "ar":
        _need(args, "q")
        value, _ = oracle_ar(g, args.q, max_edges=args.max_edges)
        out |= {"q": args.q, "value": value, "method": "oracle"}
        line = f"ar = {value} (method: oracle)"
    else:
        _need(args, "r")
        value = oracle_min_boundary(g, args.r, max_n=args.max_n)
        out |= {"r": args.r, "value": value, "method": "oracle"}
        line = f"min |E_G(S)| = {value} (method: oracle)"
    if args.json:
        _emit(out)
    else:
        print(line)
    return EXIT_OK


def _need(args, name: str) -> None:
    if getattr(args, name) is None:
        raise UsageError(f"oracle {args.which} needs --{name}")


def cmd_scan(args) -> int:
    report = scan(args.max_n, args.max_edges, args.conjecture, args.jobs, args.node_budget)
    if args.json:
        _emit(report.to_dict())
    else:
        print(report.to_text())
    if report.error:
        print(f"error:{EXIT_RESOURCE}:{report.error}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK if report.ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="antiramsey", description=__doc__.splitlines()[0])
    p.add_argument("--node-budget", type=int, default=None,
                   help="branch-and-bound node cap (default: $ANTIRAMSEY_NODE_BUDGET or 10^7)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, q=True):
        sp.add_argument("--parts", required=True, help="partite sizes, e.g. 4,3,1")
        if q:
            sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--json", action="store_true")

    for name in ("ar", "witness"):
        sp = sub.add_parser(name, help="ar(G, T_q)" if name == "ar" else "ar with a witness coloring")
        common(sp)
        sp.add_argument("--method", choices=METHODS, default="auto")
        sp.add_argument("--witness", metavar="PATH", default=None, help="write the witness coloring here")
        sp.set_defaults(func=cmd_ar)

    sp = sub.add_parser("ellq", help="extremal subgraph size l_q(G)")
    common(sp)
    sp.add_argument("--method", choices=METHODS, default="auto")
    sp.set_defaults(func=cmd_ellq)

    sp = sub.add_parser("min-boundary", help="fewest edges touching an r-subset, via greedy selection")
    common(sp, q=False)
    sp.add_argument("--r", type=int, required=True)
    sp.set_defaults(func=cmd_min_boundary)

    sp = sub.add_parser("sequences", help="candidate block-size sequences")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_sequences)

    sp = sub.add_parser("check-coloring", help="look for a rainbow q-edge tree in a witness file")
    sp.add_argument("--file", required=True)
    sp.add_argument("--q", type=int, default=None, help="defaults to the file's q")
    sp.set_defaults(func=cmd_check_coloring)

    sp = sub.add_parser("oracle", help="brute-force ground truth")
    sp.add_argument("which", choices=("ellq", "ar", "min-boundary"))
    common(sp, q=False)
    sp.add_argument("--q", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    sp.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("scan", help="cross-check formulas against oracles on all small graphs")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--conjecture", action="store_true",
                    help="also count agreement with the boundary formula for 3q >= 2n+1 (exploratory)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_scan)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "scan" and args.max_n < 2:
            raise UsageError("--max-n must be at least 2")
        return args.func(args)
    except UsageError as exc:
        print(f"error:{EXIT_USAGE}:{exc}", file=sys.stderr)
        return EXIT_USAGE
    except AntiRamseyError as exc:
        print(f"error:{exc.exit_code}:{exc}", file=sys.stderr)
        return exc.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
