"""Command-line entry point: ``msetdim {dim,verify,kinggrid,reduce,classify}``.

Exit codes: 0 success, 1 input error, 2 guard breach, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from msetdim import codes, io, products, reduction, solver
from msetdim.errors import FormulaError, GraphError, GuardExceededError, MsetDimError
from msetdim.graph import Graph, all_pairs_distances

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(MsetDimError):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors (exit 1); argparse's own default of 2 means guard breach here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("MSETDIM_THREADS", "1")))
    except ValueError:
        return 1


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _add_guards(p):
    p.add_argument("--max-n", type=_positive, default=solver.DEFAULT_MAX_N, help="exhaustive-search vertex guard")
    p.add_argument("--max-subsets", type=_positive, default=None, help="cap on candidate subsets examined")
    p.add_argument("--budget-s", type=_positive, default=None, help="wall-clock budget in seconds")
    p.add_argument(
        "--threads", type=_positive, default=_default_threads(), help="worker threads"
    )
    p.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    p.add_argument("--output", choices=("text", "kv"), default="kv", help="human text or key = value block")


def _add_graph_source(p):
    p.add_argument("input", nargs="?", help="graph file ('-' for stdin)")
    p.add_argument("--format", choices=("edgelist", "g6", "dimacs"), default=None)
    p.add_argument("--g6", metavar="STRING", help="inline graph6 string")
    for family in ("path", "complete", "kinggrid", "spider", "star"):
        p.add_argument(f"--{family}", type=_positive, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="msetdim", description="Exact multiset dimension toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dim", help="multiset dimension of a graph")
    _add_graph_source(p)
    _add_guards(p)
    p.add_argument("--metric", action="store_true", help="also report the metric dimension")
    p.add_argument("--diameter-shortcut", action="store_true", help="treat non-path diameter<=2 graphs as infinite")

    p = sub.add_parser("verify", help="check a landmark set against all three predicates")
    _add_graph_source(p)
    _add_guards(p)
    p.add_argument("--set", dest="landmarks", nargs="+", required=True, metavar="V",
                   help="vertex indices, or i,j grid coordinates with --kinggrid")

    p = sub.add_parser("kinggrid", help="king grid witness and code grid")
    p.add_argument("n", type=_positive)
    _add_guards(p)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--codes", action="store_true", help="print the per-vertex sorted code grid")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("reduce", help="build the 3-SAT reduction graph")
    p.add_argument("input", help="DIMACS CNF file ('-' for stdin)")
    _add_guards(p)
    p.add_argument("--emit", choices=("g6", "edgelist"), default=None)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("classify", help="classify G x K_n by finiteness of its multiset dimension")
    _add_graph_source(p)
    _add_guards(p)
    p.add_argument("--with-k", type=int, required=True, metavar="N")
    return parser


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(args) -> tuple[Graph, products.GridMap | None]:
    sources = [s for s in ("input", "g6", "path", "complete", "kinggrid", "spider", "star") if getattr(args, s, None)]
    if len(sources) != 1:
        raise InputError("give exactly one graph source (file, --g6 or a built-in family)")
    src = sources[0]
    if src == "path":
        return products.path_graph(args.path), None
    if src == "complete":
        return products.complete_graph(args.complete), None
    if src == "star":
        return products.star(args.star), None
    if src == "spider":
        return products.spider(args.spider), None
    if src == "kinggrid":
        return products.king_grid(args.kinggrid)
    if src == "g6":
        return io.from_graph6(args.g6), None
    text = _read_text(args.input)
    fmt = args.format or ("g6" if args.input.endswith(".g6") else "dimacs" if args.input.endswith(".cnf") else "edgelist")
    if fmt == "g6":
        return io.from_graph6(text.splitlines()[0] if text.strip() else ""), None
    if fmt == "dimacs":
        return reduction.build_reduction(reduction.parse_dimacs(text)).graph, None
    return io.read_edge_list(text), None


def _parse_landmarks(tokens, g: Graph, gm) -> list[int]:
    out = []
    for tok in tokens:
        try:
            if "," in tok:
                if gm is None:
                    raise InputError(f"coordinate {tok!r} needs --kinggrid")
                i, j = (int(x) for x in tok.strip("()").split(","))
                out.append(gm.index((i, j)))
            else:
                out.append(int(tok))
        except (ValueError, IndexError):
            raise InputError(f"bad vertex {tok!r}") from None
    if len(set(out)) != len(out):
        raise InputError("landmark set repeats a vertex")
    for v in out:
        if not 0 <= v < g.n:
            raise InputError(f"vertex {v} out of range 0..{g.n - 1}")
    return out


def _kv(pairs) -> str:
    return "".join(f"{k} = {v}\n" for k, v in pairs)


def _b(x) -> str:
    return str(bool(x)).lower()


def cmd_dim(args) -> str:
    g, gm = load_graph(args)
    res = solver.multiset_dimension(
        g, max_n=args.max_n, max_subsets=args.max_subsets, time_budget=args.budget_s,
        workers=args.threads, diameter_shortcut=args.diameter_shortcut,
    )
    labels = [f"({i},{j})" for i, j in map(gm.coord, range(g.n))] if gm else None
    if args.output == "text":
        if res.infinite:
            return f"multiset dimension: infinite ({res.reason})\n"
        shown = res.witness if labels is None else [labels[v] for v in res.witness]
        return f"multiset dimension: {res.value}, witness {' '.join(map(str, shown))}\n"
    out = res.to_text(labels)
    if args.metric:
        k, basis = solver.metric_dimension(g, max_n=args.max_n, max_subsets=args.max_subsets,
                                           time_budget=args.budget_s, workers=args.threads)
        out += _kv([("metric_dimension", k), ("metric_basis", ",".join(map(str, basis)))])
    return out


def cmd_verify(args) -> str:
    g, gm = load_graph(args)
    S = _parse_landmarks(args.landmarks, g, gm)
    dm = all_pairs_distances(g)
    ms = codes.is_multiset_resolving(dm, S)
    idc = codes.is_id_coloring(dm, S)
    if ms != idc:
        raise AssertionError("multiset resolving and ID-coloring verdicts disagree")
    return _kv([
        ("set", ",".join(map(str, S))),
        ("multiset_resolving", _b(ms)),
        ("id_coloring", _b(idc)),
        ("resolving", _b(codes.is_resolving(dm, S))),
        ("agree", _b(ms == idc)),
    ])


def cmd_kinggrid(args) -> str:
    n = args.n
    w = products.king_grid_witness(n)
    out = []
    if args.witness or args.verify or not args.codes:
        out.append(("witness", "infinite" if w is None else products.coords_text(w)))
    if args.verify and w is not None:
        g, gm = products.king_grid(n)
        out.append(("verified", _b(codes.is_multiset_resolving(all_pairs_distances(g), gm.indices(w)))))
    text = _kv(out)
    if args.codes:
        text += "infinite\n" if w is None else products.code_grid(n, w)
    return text


def cmd_reduce(args) -> str:
    text = _read_text(args.input)
    f = reduction.parse_dimacs(text)
    rg = reduction.build_reduction(f)
    out = [("variables", f.n), ("clauses", f.m), ("vertices", rg.graph.n), ("edges", rg.graph.m),
           ("target_k", reduction.target_k(f))]
    if args.emit:
        prefix = args.out if args.out else Path(args.input if args.input != "-" else "reduction").with_suffix("")
        prefix = Path(prefix)
        gpath = prefix.with_suffix(".g6" if args.emit == "g6" else ".edges")
        body = io.to_graph6(rg.graph) + "\n" if args.emit == "g6" else io.write_edge_list(rg.graph)
        gpath.write_text(body)
        rpath = prefix.with_suffix(".roles")
        rpath.write_text(rg.role_map_text())
        out += [("graph_file", gpath), ("role_file", rpath)]
    result = _kv(out)
    if args.verify:
        rep = reduction.verify_reduction(f, workers=args.threads, rg=rg,
                                         max_candidates=args.max_subsets if args.max_subsets else 1 << 24)
        if rep.exists_witness and not rep.roundtrip_ok:
            raise AssertionError("extracted assignment does not satisfy the formula")
        result += rep.to_text()
    return result


def cmd_classify(args) -> str:
    g, _ = load_graph(args)
    if args.with_k < 2:
        raise InputError("--with-k must be at least 2")
    c = products.classify_strong_with_complete(g, args.with_k)
    return c.to_text() + _kv([("mdi", _b(products.is_multiset_distance_irregular(g)))])


COMMANDS = {"dim": cmd_dim, "verify": cmd_verify, "kinggrid": cmd_kinggrid, "reduce": cmd_reduce,
            "classify": cmd_classify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        text = COMMANDS[args.command](args)
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InputError, GraphError, FormulaError, MsetDimError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.out is not None and args.command != "reduce":
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
