"""Command-line interface: ``minorham <command> ...``.

Graphs are read as graph6 or sparse6 lines from a file or stdin and written
as graph6.  ``--json`` switches every command to machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterator, Sequence

from .certificates import hamilton_certificate, minor_certificate
from .enumerate import FILTERS, count_k25_free, filtered_3c_planar, generate_triangulations
from .families import FAMILY_NAMES, FamilySpec, named_graph
from .g6 import Graph6Error, parse_graph, to_graph6
from .graph import Graph, GraphError, connected_components
from .hamilton import Cycle, hamilton_search, longest_cycle
from .minors import enumerate_k2t_models, find_rooted_k22, search_k2t
from .reductions import ReductionError, ReductionTrace, normalize_claim3
from .topology import is_outerplanar, is_planar, vertex_connectivity
from .verify import verify_paper


class CliError(Exception):
    pass


def _read_input(path: str) -> Iterator[Graph]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc.strerror}") from None
    start = 0
    for lineno, line in enumerate(data.split(b"\n"), 1):
        stripped = line.strip()
        if stripped:
            try:
                yield parse_graph(stripped)
            except Graph6Error as exc:
                lead = len(line) - len(line.lstrip())
                where = start + lead + exc.offset
                raise CliError(f"parse error on line {lineno} at byte offset {where}: {exc.message}") from None
        start += len(line) + 1


def _emit(args, record: dict, text: str) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _g6(g: Graph) -> str:
    return to_graph6(g).decode()


def cmd_props(args) -> int:
    for g in _read_input(args.graph):
        connected = g.n > 0 and len(connected_components(g)) == 1
        cycle = hamilton_search(g)[0] if g.n >= 3 else None
        rec = {
            "schema": 1,
            "graph6": _g6(g),
            "n": g.n,
            "m": g.m,
            "planar": is_planar(g),
            "outerplanar": is_outerplanar(g) if connected else None,
            "connectivity": vertex_connectivity(g),
            "hamiltonian": cycle is not None,
            "k25_minor": search_k2t(g, 5).model is not None,
        }
        text = " ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in rec.items() if k != "schema")
        _emit(args, rec, text)
    return 0


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"expected two comma-separated vertex ids, got {text!r}") from None
    return a, b


def cmd_minor(args) -> int:
    for g in _read_input(args.graph):
        if args.roots:
            x, y = _parse_pair(args.roots)
            if args.t != 2:
                raise CliError("rooted search is only defined for t = 2")
            model = find_rooted_k22(g, x, y)
            rec = {"schema": 1, "graph6": _g6(g), "t": 2, "roots": [x, y],
                   "present": model is not None, "model": model.to_json() if model else None}
        elif args.all:
            models = enumerate_k2t_models(g, args.t)
            rec = {"schema": 1, "graph6": _g6(g), "t": args.t, "present": bool(models),
                   "models": [m.to_json() for m in models]}
        else:
            rec = minor_certificate(g, args.t)
            rec["present"] = rec["kind"] == "MinorModel"
        status = "present" if rec["present"] else "absent"
        text = f"K2,{args.t}: {status}"
        if rec.get("model"):
            m = rec["model"]
            text += f" R1={m['R1']} R2={m['R2']} S={m['S']}"
        if "models" in rec:
            text += f" ({len(rec['models'])} models)"
        _emit(args, rec, text)
    return 0


def cmd_ham(args) -> int:
    for g in _read_input(args.graph):
        cert = hamilton_certificate(g, args.max_cut)
        rec = {"schema": 1, "graph6": _g6(g), "hamiltonian": cert["kind"] == "HamiltonCycle"}
        if args.certificate:
            rec["certificate"] = cert
        if args.longest:
            lc = longest_cycle(g)
            rec["longest_cycle"] = list(lc.vertices) if lc else None
        if rec["hamiltonian"]:
            text = "hamiltonian"
            if args.certificate:
                text += " cycle=" + ",".join(map(str, cert["cycle"]))
        elif cert["kind"] == "ToughnessCut":
            text = f"non-hamiltonian tough-cut={','.join(map(str, cert['cut']))} components={cert['components']}"
        else:
            text = f"non-hamiltonian exhaustion nodes={cert['nodes']} transcript={cert['transcript']}"
        if args.longest:
            text += f" longest={len(rec['longest_cycle'] or [])}"
        _emit(args, rec, text)
    return 0


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(f"expected comma-separated vertex ids, got {text!r}") from None


def cmd_reduce(args) -> int:
    if args.verify:
        with open(args.verify) as fh:
            data = json.load(fh)
        try:
            trace = ReductionTrace.from_json(data)
        except (ReductionError, KeyError) as exc:
            _emit(args, {"schema": 1, "valid": False, "error": str(exc)}, f"invalid trace: {exc}")
            return 1
        _emit(args, {"schema": 1, "valid": True, "steps": len(trace.steps)}, f"valid trace with {len(trace.steps)} steps")
        return 0
    if not args.cycle:
        raise CliError("reduce needs --cycle (or --verify)")
    cycle = Cycle(tuple(_parse_ids(args.cycle)))
    for g in _read_input(args.graph):
        comps = connected_components(g, cycle.vertices)
        if args.component:
            d_comp = frozenset(_parse_ids(args.component))
        elif comps:
            d_comp = comps[0]
        else:
            raise CliError("the cycle is Hamiltonian; nothing to reduce")
        trace = normalize_claim3(g, cycle, d_comp)
        rec = trace.to_json()
        text = (f"{len(trace.steps)} steps: " + " ".join(f"{s.kind}{list(s.data)}" for s in trace.steps)
                + f" -> {_g6(trace.result)} d={trace.marked}")
        _emit(args, rec, text)
    return 0


def cmd_family(args) -> int:
    params = {k: v for k, v in (("k", args.k), ("m", args.m), ("mask", args.mask), ("n", args.n),
                                ("s", args.s), ("t", args.t)) if v is not None}
    g = named_graph(FamilySpec(args.name, params))
    if args.json:
        cert = hamilton_certificate(g, 5)
        rec = {
            "schema": 1,
            "kind": "FamilyReport",
            "family": args.name,
            "params": params,
            "graph6": _g6(g),
            "n": g.n,
            "m": g.m,
            "labels": list(g.labels) if g.labels else None,
            "planar": is_planar(g),
            "connectivity": vertex_connectivity(g),
            "hamiltonian": cert["kind"] == "HamiltonCycle",
            "hamilton_certificate": cert,
            "k25_minor": search_k2t(g, 5).model is not None,
            "k26_minor": search_k2t(g, 6).model is not None,
        }
        print(json.dumps(rec, sort_keys=True))
    else:
        print(_g6(g))
    return 0


def cmd_enumerate(args) -> int:
    ckpt = os.environ.get("MINORHAM_CHECKPOINT_DIR") or args.checkpoint_dir
    if ckpt:
        os.makedirs(ckpt, exist_ok=True)
    if args.triangulations:
        codes = [_g6(g) for g in generate_triangulations(args.n)]
        if args.count_only:
            _emit(args, {"schema": 1, "kind": "TriangulationCount", "n": args.n, "count": len(codes)}, str(len(codes)))
        else:
            sys.stdout.write("".join(c + "\n" for c in codes))
        return 0
    if args.count_only and args.filter == "k25-free":
        report = count_k25_free(args.n, args.workers, ckpt)
        rec = report.to_json(timing=args.timing)
        _emit(args, rec, f"n={report.n} total={report.total_3c_planar} k25_free={report.k25_free} "
                         f"k25_free_hamiltonian={report.k25_free_hamiltonian}")
        return 0
    stream = filtered_3c_planar(args.n, args.filter, args.workers, ckpt)
    if args.count_only:
        count = sum(1 for _ in stream)
        _emit(args, {"schema": 1, "kind": "EnumerationCount", "n": args.n, "filter": args.filter, "count": count},
              str(count))
        return 0
    out = sys.stdout.buffer
    for code in stream:
        out.write(code + b"\n")
    out.flush()
    return 0


def cmd_verify_paper(args) -> int:
    matrix = verify_paper(args.level)
    if args.json:
        print(json.dumps(matrix.to_json(args.timing), sort_keys=True, indent=2))
    else:
        print(matrix.to_text())
        if args.timing:
            for item in matrix.items:
                print(f"{item.claim:<4} {item.seconds:.2f}s")
    return 0 if matrix.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="minorham", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_arg(sp):
        sp.add_argument("graph", nargs="?", default="-", help="graph6/sparse6 file, '-' for stdin")

    sp = sub.add_parser("props", parents=[common], help="planarity, connectivity, Hamiltonicity and K2,5 summary")
    graph_arg(sp)
    sp.set_defaults(func=cmd_props)

    sp = sub.add_parser("minor", parents=[common], help="K2,t minor search")
    graph_arg(sp)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--roots", help="x,y: rooted K2,2 search with x in R1 and y in R2")
    sp.add_argument("--all", action="store_true", help="enumerate every standard model")
    sp.set_defaults(func=cmd_minor)

    sp = sub.add_parser("ham", parents=[common], help="Hamilton cycle search")
    graph_arg(sp)
    sp.add_argument("--certificate", action="store_true", help="include a checkable certificate")
    sp.add_argument("--max-cut", type=int, default=5, help="largest toughness cut tried on failure")
    sp.add_argument("--longest", action="store_true", help="also report a longest cycle")
    sp.set_defaults(func=cmd_ham)

    sp = sub.add_parser("reduce", parents=[common], help="normalise a cycle's outside to a single degree-3 vertex")
    graph_arg(sp)
    sp.add_argument("--cycle", help="comma-separated cycle vertices")
    sp.add_argument("--component", help="component of g - V(C) to keep as d (default: the first)")
    sp.add_argument("--verify", metavar="TRACE", help="replay and check a stored trace JSON")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("family", parents=[common], help="emit a named graph")
    sp.add_argument("name", choices=FAMILY_NAMES)
    for flag in ("k", "m", "n", "s", "t"):
        sp.add_argument(f"--{flag}", type=int)
    sp.add_argument("--mask", type=int)
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("enumerate", parents=[common], help="3-connected planar graphs on n vertices")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--filter", choices=FILTERS, default="none")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--triangulations", action="store_true", help="enumerate triangulations instead")
    sp.add_argument("--checkpoint-dir", help="resume/save level checkpoints (env MINORHAM_CHECKPOINT_DIR wins)")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--timing", action="store_true", help="include elapsed seconds in reports")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify-paper", parents=[common], help="replay every checkable claim")
    sp.add_argument("--level", choices=("quick", "full"), default="quick")
    sp.add_argument("--timing", action="store_true")
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"minorham: error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"minorham: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
