"""Command-line front end.

Subcommands cover the library surface: moves (lc, elc), equivalence
testing with optional pivot sequences (equiv), class counting (count),
the invariant report (invariants), the interlace polynomial (interlace),
inversion by pivoting (invert), orbit closure (orbit), the local-Hadamard
check (gs-check), and named generators (gen).

Exit codes: 0 success, 1 usage error, 2 parse or domain error, 3 negative
decision (not equivalent, or singular input to invert).  Graphs print as
adjacency text by default; --json switches every subcommand to JSON.  The
environment variable ELC_SUBSET_CAP overrides the subset-enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .equivalence import decompose_h, invert_via_elc, recognize_elc
from .gf2 import SingularMatrixError, VertexSet
from .graph import Graph, edge_local_complement, generate, local_complement
from .graphstate import amplitudes, apply_local_hadamard, verify_theorem4
from .interlace import evaluate, format_poly, interlace_poly
from .invariants import (
    TooLargeError,
    class_size,
    delta_count,
    invariant_report,
    sigma_space,
)
from .io import ParseError, detect_format, parse, serialize_adjtext, serialize_graph6
from .lft import NotInDomainError, in_domain, make_h
from .orbit import DEFAULT_ORBIT_CAP, CapExceededError, elc_orbit, lc_orbit

__all__ = ["run", "main"]

USAGE_ERROR = 1
DATA_ERROR = 2
NEGATIVE = 3


class _Parser(argparse.ArgumentParser):
    """argparse variant that exits with status 1 on usage errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _build_parser() -> _Parser:
    p = _Parser(prog="elckit", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.add_argument(
        "--input-format",
        choices=("adjtext", "graph6"),
        help="force the input format (default: by extension, .g6 = graph6)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("lc", help="local complementation at a vertex")
    sp.add_argument("graph")
    sp.add_argument("-v", "--vertex", type=int, required=True)

    sp = sub.add_parser("elc", help="edge-local complementation (pivot) at an edge")
    sp.add_argument("graph")
    sp.add_argument("-e", "--edge", required=True, metavar="I,J")

    sp = sub.add_parser("equiv", help="decide pivot-equivalence of two graphs")
    sp.add_argument("graph1")
    sp.add_argument("graph2")
    sp.add_argument("--sequence", action="store_true", help="also print a pivot sequence")

    sp = sub.add_parser("count", help="equivalence-class size by the counting formula")
    sp.add_argument("graph")

    sp = sub.add_parser("invariants", help="pivot-invariant report")
    sp.add_argument("graph")

    sp = sub.add_parser("interlace", help="interlace polynomial")
    sp.add_argument("graph")
    sp.add_argument("--at", type=int, help="also evaluate at this integer")

    sp = sub.add_parser("invert", help="invert the adjacency matrix by pivoting")
    sp.add_argument("graph")

    sp = sub.add_parser("orbit", help="orbit closure under moves")
    sp.add_argument("graph")
    sp.add_argument("--mode", choices=("elc", "lc"), default="elc")
    sp.add_argument("--cap", type=int, default=DEFAULT_ORBIT_CAP)
    sp.add_argument("--list", action="store_true", help="also list members as graph6")

    sp = sub.add_parser("gs-check", help="local-Hadamard correspondence check")
    sp.add_argument("graph")
    sp.add_argument(
        "--omega", default="", metavar="I,J,...", help="vertex set (default empty)"
    )

    sp = sub.add_parser("gen", help="generate a named graph")
    sp.add_argument("kind", choices=("path", "cycle", "complete", "empty", "petersen", "clebsch"))
    sp.add_argument("size", type=int, nargs="?")

    return p


def _read_graph(path: str, forced: str | None) -> Graph:
    fmt = forced if forced else detect_format(path)
    if path == "-":
        return parse(sys.stdin.read(), fmt)
    with open(path, "r", encoding="ascii") as fh:
        return parse(fh.read(), fmt)


def _subset_cap() -> int | None:
    raw = os.environ.get("ELC_SUBSET_CAP")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"ELC_SUBSET_CAP must be an integer, got {raw!r}") from None


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "adjacency": g.adj.to_strings()}


def _print_graph(g: Graph, as_json: bool) -> None:
    if as_json:
        _emit_json(_graph_json(g))
    else:
        sys.stdout.write(serialize_adjtext(g))


def _parse_vertex_list(raw: str, n: int) -> VertexSet:
    raw = raw.strip()
    if not raw:
        return VertexSet.empty(n)
    try:
        verts = [int(tok) for tok in raw.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated vertex list, got {raw!r}") from None
    return VertexSet.from_vertices(n, verts)


def _format_set(s: VertexSet) -> str:
    return str(s)


def _format_sequence(edges) -> str:
    return " ".join(f"{i},{j}" for i, j in edges)


def _cmd_lc(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    _print_graph(local_complement(g, args.vertex), args.json)
    return 0


def _cmd_elc(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    try:
        i, j = (int(tok) for tok in args.edge.split(","))
    except ValueError:
        raise ValueError(f"expected an edge as I,J; got {args.edge!r}") from None
    _print_graph(edge_local_complement(g, (i, j)), args.json)
    return 0


def _cmd_equiv(args) -> int:
    g1 = _read_graph(args.graph1, args.input_format)
    g2 = _read_graph(args.graph2, args.input_format)
    a_set = recognize_elc(g1, g2)
    if a_set is None:
        if args.json:
            _emit_json({"equivalent": False})
        else:
            print("not equivalent")
        return NEGATIVE
    payload: dict = {"equivalent": True, "a": list(a_set.members())}
    lines = ["equivalent", f"A = {_format_set(a_set)}"]
    if args.sequence:
        seq = decompose_h(g1, a_set)
        payload["sequence"] = [list(e) for e in seq.edges]
        lines.append(f"sequence = {_format_sequence(seq.edges)}")
    if args.json:
        _emit_json(payload)
    else:
        print("\n".join(lines))
    return 0


def _cmd_count(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    cap = _subset_cap()
    d = delta_count(g, cap)
    s = sigma_space(g).dim
    c = class_size(g, cap)
    if args.json:
        _emit_json({"delta": d, "sigma_dim": s, "class_size": c})
    else:
        print(f"delta={d} sigma_dim={s} class_size={c}")
    return 0


def _cmd_invariants(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    rep = invariant_report(g, _subset_cap())
    twins_fmt = " ".join(f"{i},{j}" for i, j in rep.twin_pairs)
    if args.json:
        _emit_json(
            {
                "n": rep.n,
                "rank_gamma_plus_i": rep.rank_gamma_plus_i,
                "kernel_dim": rep.kernel.ncols,
                "sigma_dim": rep.sigma_dim,
                "twins": [list(t) for t in rep.twin_pairs],
                "orthogonal": rep.orthogonal,
                "delta": rep.delta_count,
                "class_size": rep.class_size,
            }
        )
    else:
        print(f"n = {rep.n}")
        print(f"rank_gamma_plus_i = {rep.rank_gamma_plus_i}")
        print(f"kernel_dim = {rep.kernel.ncols}")
        print(f"sigma_dim = {rep.sigma_dim}")
        print(f"twins = {twins_fmt if twins_fmt else '(none)'}")
        print(f"orthogonal = {'true' if rep.orthogonal else 'false'}")
        print(f"delta = {rep.delta_count if rep.delta_count is not None else 'n/a'}")
        print(f"class_size = {rep.class_size if rep.class_size is not None else 'n/a'}")
    return 0


def _cmd_interlace(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    p = interlace_poly(g, _subset_cap())
    if args.json:
        payload: dict = {"basis": "monomial", "coeffs": list(p.a)}
        if args.at is not None:
            payload["at"] = args.at
            payload["value"] = evaluate(p, args.at)
        _emit_json(payload)
    else:
        print(f"q = {format_poly(p)}")
        if args.at is not None:
            print(f"q({args.at}) = {evaluate(p, args.at)}")
    return 0


def _cmd_invert(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    try:
        seq, inv = invert_via_elc(g)
    except SingularMatrixError:
        if args.json:
            _emit_json({"singular": True})
        else:
            print("singular", file=sys.stderr)
        return NEGATIVE
    if args.json:
        _emit_json(
            {
                "sequence": [list(e) for e in seq.edges],
                "graph": _graph_json(inv),
            }
        )
    else:
        print(f"sequence = {_format_sequence(seq.edges)}")
        sys.stdout.write(serialize_adjtext(inv))
    return 0


def _cmd_orbit(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    orb = elc_orbit(g, args.cap) if args.mode == "elc" else lc_orbit(g, args.cap)
    if args.json:
        payload: dict = {"mode": args.mode, "size": orb.size}
        if args.list:
            payload["members"] = [serialize_graph6(h).strip() for h in orb.graphs()]
        _emit_json(payload)
    else:
        print(f"size={orb.size}")
        if args.list:
            for h in orb.graphs():
                sys.stdout.write(serialize_graph6(h))
    return 0


def _cmd_gs_check(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    omega = _parse_vertex_list(args.omega, g.n)
    dom = in_domain(make_h(omega), g)
    verdict = verify_theorem4(g, omega)
    if args.json:
        _emit_json({"in_domain": dom, "verdict": verdict})
    else:
        print(f"in_domain = {'true' if dom else 'false'}")
        print(f"verdict = {'true' if verdict else 'false'}")
    return 0


def _cmd_gen(args) -> int:
    g = generate(args.kind, args.size)
    _print_graph(g, args.json)
    return 0


_HANDLERS = {
    "lc": _cmd_lc,
    "elc": _cmd_elc,
    "equiv": _cmd_equiv,
    "count": _cmd_count,
    "invariants": _cmd_invariants,
    "interlace": _cmd_interlace,
    "invert": _cmd_invert,
    "orbit": _cmd_orbit,
    "gs-check": _cmd_gs_check,
    "gen": _cmd_gen,
}

_DATA_ERRORS = (
    ParseError,
    NotInDomainError,
    TooLargeError,
    CapExceededError,
    SingularMatrixError,
    ValueError,
    OSError,
)


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
