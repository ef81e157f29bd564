"""Command-line surface for recognition, search, construction, and rendering.

Exit codes: 0 = decision true / success, 1 = decision false (or a failed
check), 2 = usage, parse, or cap error.  Human-readable text goes to
stdout; --json switches every verb to a stable machine-readable object.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import graphs as G
from . import circular as C
from . import constructive as K
from . import chromatic as X
from . import families as F
from . import reduction as R
from .patterns import linearize, lin_avoids, make_linear, ForbiddenFamily
from .render import render_dot, render_svg
from .search import find_free_circular_ordering, find_free_linear_ordering

__all__ = ["main", "run"]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def read_graph(path: str, fmt: str = "auto") -> G.Graph:
    text = _read_text(path)
    if fmt == "g6":
        return G.from_graph6(text)
    if fmt == "edges":
        return G.from_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    try:
        int(lines[0])
    except (ValueError, IndexError):
        return G.from_graph6(text)
    return G.from_edge_list(text)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _family_for_linear(name: str) -> ForbiddenFamily:
    fam = F.builtin_family(name)
    if fam.kind == "linear":
        return fam
    members = linearize(fam)
    return ForbiddenFamily(f"linearized-{name}", members, "induced", "linear")


# ---------------------------------------------------------------------------
# verbs

def _cmd_search(args) -> int:
    graph = read_graph(args.infile, args.format)
    fam = F.builtin_family(args.family)
    if fam.kind != "circular":
        raise ValueError(f"family {fam.name!r} is linear; use search-linear")
    outcome = find_free_circular_ordering(
        graph, fam, deterministic=not args.heuristic, max_n=args.max_n
    )
    payload = {
        "command": "search",
        "family": fam.name,
        "found": outcome.found,
        "nodes_explored": outcome.nodes_explored,
        "exhaustive": outcome.exhaustive,
        "witness": list(outcome.witness.seq) if outcome.found else None,
    }
    if outcome.found:
        cog = C.CircularOrderedGraph(graph, outcome.witness)
        if args.witness_out:
            _write_text(args.witness_out, C.to_ordering_text(cog))
        _emit(args, payload, "found: " + " ".join(map(str, outcome.witness.seq)))
        return 0
    _emit(args, payload, f"no {fam.name}-free circular ordering (exhaustive)")
    return 1


def _linear_witness_text(lg) -> str:
    lines = [str(lg.n), " ".join(map(str, lg.order))]
    lines += [f"{u} {v}" for u, v in lg.graph.sorted_edges()]
    return "\n".join(lines) + "\n"


def _read_linear_witness(text: str):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("ordering file needs a vertex count and a sequence line")
    n = int(lines[0])
    order = tuple(map(int, lines[1].split()))
    if len(order) != n:
        raise ValueError("sequence length does not match vertex count")
    edges = frozenset(tuple(map(int, ln.split())) for ln in lines[2:])
    return make_linear(G.Graph(n, edges), order)


def _cmd_search_linear(args) -> int:
    graph = read_graph(args.infile, args.format)
    fam = _family_for_linear(args.family)
    outcome = find_free_linear_ordering(
        graph,
        fam,
        args.semantics or fam.semantics,
        deterministic=not args.heuristic,
        max_n=args.max_n,
    )
    payload = {
        "command": "search-linear",
        "family": fam.name,
        "semantics": args.semantics or fam.semantics,
        "found": outcome.found,
        "nodes_explored": outcome.nodes_explored,
        "exhaustive": outcome.exhaustive,
        "witness": list(outcome.witness.order) if outcome.found else None,
    }
    if outcome.found:
        if args.witness_out:
            _write_text(args.witness_out, _linear_witness_text(outcome.witness))
        _emit(args, payload, "found: " + " ".join(map(str, outcome.witness.order)))
        return 0
    _emit(args, payload, f"no {fam.name}-free linear ordering (exhaustive)")
    return 1


_CLASS_FAMILIES = {
    "circular-arc": "circular-arc",
    "outerplanar": "crossing",
    "forest": "forest",
    "linear-forest": "linear-forest",
    "caterpillar-forest": "caterpillar-forest",
}


def _recognize(graph: G.Graph, cls: str, max_n: int):
    """Decision plus optional certificate ordering for a graph class."""
    if cls == "forest":
        if not G.is_forest(graph):
            return False, None
        return True, K.order_forest(graph)
    if cls == "linear-forest":
        if not G.is_linear_forest(graph):
            return False, None
        return True, K.order_linear_forest(graph)
    if cls == "caterpillar-forest":
        if not G.is_caterpillar_forest(graph):
            return False, None
        return True, K.order_caterpillar(graph)
    if cls == "outerplanar":
        if graph.n > K.MAX_OUTERPLANAR_ORDER:
            raise ValueError(
                f"outerplanar recognition capped at n <= {K.MAX_OUTERPLANAR_ORDER}"
            )
        try:
            return True, K.order_outerplanar(graph)
        except ValueError:
            return False, None
    if cls == "circular-arc":
        outcome = find_free_circular_ordering(
            graph, F.circular_arc_family(), max_n=max_n
        )
        if outcome.found:
            return True, C.CircularOrderedGraph(graph, outcome.witness)
        return False, None
    raise ValueError(f"unknown class {cls!r}")


def _cmd_recognize(args) -> int:
    graph = read_graph(args.infile, args.format)
    member, certificate = _recognize(graph, args.cls, args.max_n)
    payload = {
        "command": "recognize",
        "class": args.cls,
        "member": member,
        "certificate": list(certificate.order.seq) if certificate else None,
    }
    if certificate is not None and args.certificate_out:
        _write_text(args.certificate_out, C.to_ordering_text(certificate))
    _emit(args, payload, f"{args.cls}: {'yes' if member else 'no'}")
    return 0 if member else 1


def _cmd_construct(args) -> int:
    if args.alg == "zigzag":
        if args.k is None:
            raise ValueError("construct --alg zigzag needs --k")
        cog = K.zigzag(args.k)
    else:
        if not args.infile:
            raise ValueError("construct needs --in for this algorithm")
        graph = read_graph(args.infile, args.format)
        if args.alg == "tree":
            cog = K.order_tree(graph, args.root)
        elif args.alg == "caterpillar":
            cog = K.order_caterpillar(graph)
        elif args.alg == "outerplanar":
            cog = K.order_outerplanar(graph)
        else:
            raise ValueError(f"unknown algorithm {args.alg!r}")
    text = C.to_ordering_text(cog)
    if args.json:
        print(json.dumps({"command": "construct", "alg": args.alg, "seq": list(cog.order.seq)}, sort_keys=True))
        if args.out:
            _write_text(args.out, text)
    else:
        _write_text(args.out, text)
    return 0


def _cmd_chi_c(args) -> int:
    graph = read_graph(args.infile, args.format)
    values: dict[str, Fraction] = {}
    if args.method in ("hom", "both"):
        values["hom"] = X.circular_chromatic_number(graph, max_n=args.max_n or X.MAX_CHI_C)
    if args.method in ("orientation", "both"):
        values["orientation"] = X.circular_chromatic_number_via_orientations(
            graph, max_n=args.max_n or X.MAX_ORIENTATION
        )
    agree = len(set(values.values())) == 1
    payload = {
        "command": "chi-c",
        "method": args.method,
        "values": {k: str(v) for k, v in values.items()},
        "agree": agree,
    }
    human = "\n".join(f"{k}: {v}" for k, v in values.items())
    if args.method == "both":
        human += f"\nagree: {'yes' if agree else 'no'}"
    _emit(args, payload, human)
    return 0 if agree else 1


def _cmd_catalog(args) -> int:
    reps = C.catalog(args.n)
    if args.count:
        _emit(args, {"command": "catalog", "n": args.n, "count": len(reps)}, str(len(reps)))
        return 0
    if args.json:
        print(
            json.dumps(
                {
                    "command": "catalog",
                    "n": args.n,
                    "count": len(reps),
                    "classes": [sorted(map(list, r.graph.sorted_edges())) for r in reps],
                },
                sort_keys=True,
            )
        )
        return 0
    for rep in reps:
        sys.stdout.write(C.to_ordering_text(rep) + "\n")
    return 0


_GENERATING_PATTERNS = {
    "circular-arc": F.circular_arc_pattern,
}


def _crossing_pattern():
    from .patterns import OrderedPattern

    seed = F.crossed_two_edges()
    return OrderedPattern(seed.n, frozenset(seed.graph.edges), frozenset())


_GENERATING_PATTERNS["crossing"] = _crossing_pattern


def _cmd_families(args) -> int:
    if args.action == "list":
        names = list(F.BUILTIN_FAMILY_NAMES)
        _emit(args, {"command": "families", "names": names}, "\n".join(names))
        return 0
    if args.pattern:
        if args.name not in _GENERATING_PATTERNS:
            raise ValueError(
                f"family {args.name!r} is not generated by a single pattern"
            )
        from .patterns import to_pattern_text

        sys.stdout.write(to_pattern_text(_GENERATING_PATTERNS[args.name]()))
        return 0
    fam = F.builtin_family(args.name)
    if args.json:
        payload = {
            "command": "families",
            "name": fam.name,
            "kind": fam.kind,
            "semantics": fam.semantics,
            "size": len(fam.members),
        }
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"# family {fam.name}: {len(fam.members)} members, {fam.kind}, {fam.semantics}")
    for mem in fam.members:
        if fam.kind == "circular":
            sys.stdout.write("\n" + C.to_ordering_text(mem))
        else:
            lines = [str(mem.n), " ".join(map(str, mem.order))]
            lines += [f"{u} {v}" for u, v in mem.graph.sorted_edges()]
            sys.stdout.write("\n" + "\n".join(lines) + "\n")
    return 0


def _cmd_reduce(args) -> int:
    instance = R.from_instance_text(_read_text(args.infile))
    red = R.build_reduction(instance)
    g6 = G.to_graph6(red.graph)
    roles = {
        "elements": red.element_ids,
        "gadgets": [
            {"triple": list(instance.triples[t]), "ids": list(red.gadget_ids[t])}
            for t in range(len(instance.triples))
        ],
        "vertex_count": red.graph.n,
        "edge_count": red.graph.edge_count,
    }
    if args.g6_out:
        _write_text(args.g6_out, g6 + "\n")
    if args.roles_out:
        _write_text(args.roles_out, json.dumps(roles, indent=2, sort_keys=True) + "\n")
    payload = {"command": "reduce", "graph6": g6, **roles}
    _emit(
        args,
        payload,
        f"graph6: {g6}\nvertices: {red.graph.n}\nedges: {red.graph.edge_count}",
    )
    return 0


def _cmd_solve_cyclic(args) -> int:
    instance = R.from_instance_text(_read_text(args.infile))
    order = R.solve_cyclic_ordering(instance)
    payload = {
        "command": "solve-cyclic",
        "satisfiable": order is not None,
        "order": list(order) if order else None,
    }
    if order is None:
        _emit(args, payload, "unsatisfiable (exhaustive)")
        return 1
    _emit(args, payload, "order: " + " ".join(order))
    return 0


def _cmd_render(args) -> int:
    cog = C.from_ordering_text(_read_text(args.infile))
    text = render_svg(cog) if args.render_format == "svg" else render_dot(cog)
    _write_text(args.out, text)
    return 0


def _cmd_verify(args) -> int:
    text = _read_text(args.infile)
    fam = F.builtin_family(args.family)
    if fam.kind == "circular":
        ok = C.avoids(C.from_ordering_text(text), fam)
    else:
        # the sequence line is the linear order itself; parse it verbatim
        # (the circular reader would forget the cut by rotating)
        ok = lin_avoids(_read_linear_witness(text), fam)
    payload = {"command": "verify", "family": fam.name, "avoids": ok}
    _emit(args, payload, f"avoids {fam.name}: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def _cmd_selfcheck(args) -> int:
    checks: list[tuple[str, bool]] = []

    def check(name: str, ok: bool) -> None:
        checks.append((name, ok))
        print(f"[{'PASS' if ok else 'FAIL'}] {name}")

    cap = 4 if args.quick else 5
    reps = [g for n in range(1, cap + 1) for g in G.enumerate_graphs(n, up_to_iso=True)]

    check("catalog counts (n=2,3,4)", [len(C.catalog(n)) for n in (2, 3, 4)] == [2, 4, 22])
    h4 = F.monotone_walk_family(4)
    expect = {F.simple_cycle(3).canonical_key, F.simple_cycle(4).canonical_key, F.simple_path(4).canonical_key}
    check("walk-4 family reproduction", {m.canonical_key for m in h4.members} == expect)
    check(
        f"forest equivalence (n<={cap})",
        all(
            find_free_circular_ordering(g, F.forest_family()).found == G.is_forest(g)
            for g in reps
        ),
    )
    check(
        f"linear-forest equivalence (n<={cap})",
        all(
            find_free_circular_ordering(g, F.linear_forest_family()).found == G.is_linear_forest(g)
            for g in reps
        ),
    )
    check(
        f"caterpillar equivalence (n<={cap})",
        all(
            find_free_circular_ordering(g, F.caterpillar_family()).found
            == G.is_caterpillar_forest(g)
            for g in reps
        ),
    )
    check(
        f"circular-arc equivalence (n<={cap})",
        all(
            find_free_circular_ordering(g, F.circular_arc_family()).found
            == C.has_consecutive_ordering(g)
            for g in reps
        ),
    )
    check(
        f"outerplanar equivalence (n<={cap})",
        all(
            find_free_circular_ordering(g, F.crossing_family()).found
            == G.is_outerplanar_oracle(g)
            for g in reps
        ),
    )
    check(
        f"chromatic cross-method (n<={cap})",
        all(
            X.circular_chromatic_number(g) == X.circular_chromatic_number_via_orientations(g)
            for g in reps
        ),
    )
    check(
        f"threshold triple (n<={cap}, k=3)",
        all(len(set(X.chi_c_threshold_checks(g, 3))) == 1 for g in reps),
    )
    sample = [
        R.CyclicOrderingInstance(("a", "b", "c"), (("a", "b", "c"),)),
        R.CyclicOrderingInstance(("a", "b", "c"), (("a", "b", "c"), ("a", "c", "b"))),
        R.CyclicOrderingInstance(("a", "b", "c", "d"), (("a", "b", "c"), ("b", "c", "d"))),
    ]
    ok = True
    for inst in sample:
        red = R.build_reduction(inst)
        sat = R.solve_cyclic_ordering(inst) is not None
        found = find_free_circular_ordering(
            red.graph, F.gadget_family(), deterministic=False, max_n=red.graph.n
        ).found
        ok = ok and (sat == found)
    check("reduction equivalence (samples)", ok)

    failed = [name for name, good in checks if not good]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 0 if not failed else 1


# ---------------------------------------------------------------------------
# argument parsing

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="circorder",
        description="Forbidden-pattern circular orderings of graphs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, infile=True, graph=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--threads",
            type=int,
            default=1,
            help="accepted for interface compatibility; the engine is sequential "
            "and answers never depend on it",
        )
        if infile:
            p.add_argument("--in", dest="infile", required=True, help="input file (- for stdin)")
            if graph:
                p.add_argument(
                    "--format",
                    choices=("auto", "g6", "edges"),
                    default="auto",
                    help="graph input format",
                )

    p = sub.add_parser("search", help="find a family-free circular ordering")
    common(p)
    p.add_argument("--family", required=True)
    p.add_argument("--witness-out")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--heuristic", action="store_true", help="adjacency-guided branch order")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("search-linear", help="find a family-free linear ordering")
    common(p)
    p.add_argument("--family", required=True, help="linear family, or circular family to linearize")
    p.add_argument("--semantics", choices=("induced", "subgraph"))
    p.add_argument("--witness-out")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--heuristic", action="store_true")
    p.set_defaults(func=_cmd_search_linear)

    p = sub.add_parser("recognize", help="decide membership in a named graph class")
    common(p)
    p.add_argument("--class", dest="cls", required=True, choices=sorted(_CLASS_FAMILIES))
    p.add_argument("--certificate-out")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("construct", help="build an avoiding ordering directly")
    common(p, infile=False)
    p.add_argument("--alg", required=True, choices=("tree", "zigzag", "caterpillar", "outerplanar"))
    p.add_argument("--in", dest="infile", help="input graph file")
    p.add_argument("--format", choices=("auto", "g6", "edges"), default="auto")
    p.add_argument("--root", type=int, default=0, help="root vertex for the tree algorithm")
    p.add_argument("--k", type=int, help="path length for the zigzag algorithm")
    p.add_argument("--out", help="ordering output file (default stdout)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("chi-c", help="circular chromatic number")
    common(p)
    p.add_argument("--method", choices=("hom", "orientation", "both"), default="both")
    p.add_argument("--max-n", type=int, help="override the per-method vertex caps")
    p.set_defaults(func=_cmd_chi_c)

    p = sub.add_parser("catalog", help="ordered-graph classes on n vertices")
    common(p, infile=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("families", help="list or dump the built-in families")
    common(p, infile=False)
    p.add_argument("action", choices=("list", "dump"))
    p.add_argument("name", nargs="?", help="family name for dump")
    p.add_argument(
        "--pattern",
        action="store_true",
        help="emit the generating pattern (families expanded from one pattern)",
    )
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("reduce", help="build the ordering-search graph of an instance")
    common(p, graph=False)
    p.add_argument("--g6-out", help="write the graph in graph6")
    p.add_argument("--roles-out", help="write the role map sidecar (JSON)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("solve-cyclic", help="solve a cyclic ordering instance directly")
    common(p, graph=False)
    p.set_defaults(func=_cmd_solve_cyclic)

    p = sub.add_parser("render", help="render an ordering file")
    common(p, graph=False)
    p.add_argument("--format", dest="render_format", choices=("svg", "dot"), default="svg")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="re-verify an ordering file against a family")
    common(p, graph=False)
    p.add_argument("--family", required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("selfcheck", help="run the equivalence suite at reduced caps")
    common(p, infile=False)
    p.add_argument("--quick", action="store_true", help="smaller caps")
    p.set_defaults(func=_cmd_selfcheck)

    return top


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be at least 1")
    if args.command == "families" and args.action == "dump" and not args.name:
        parser.error("families dump needs a family name")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
