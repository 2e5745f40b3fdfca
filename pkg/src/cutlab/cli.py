"""Command-line front end: ``cutlab <command> ...``.

Graphs are given either as an edge-list file or as a small expression
language of clique-sums::

    expr  := atom | expr '#' k glue? atom | expr '#H' glue atom
    atom  := K<n> | C<n> | P<n> | K<m>x<n> | file:<path>
    glue  := '[' u=v (',' u=v)* ']'

``#k`` glues a ``(k+1)``-clique of the left operand onto one of the right
operand (``u`` is a left label, ``v`` a right label).  ``#0`` without a glue
identifies the highest left vertex with vertex 0 on the right.  ``#H`` glues
along any common induced subgraph listed by the map, e.g. two paths.

Exit codes: 0 success, 1 mathematical rejection, 2 parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from .geometry import K5MinorError, LatticePoint, enumerate_cut_vectors, facet_system, in_cone, in_group
from .graphs import (
    CliqueSumSpec,
    Graph,
    GraphError,
    clique_sum,
    glue_graphs,
    read_edge_list,
    standard_graph,
    structural_predicates,
)
from .monoid import (
    NotCoveredError,
    NotNormalError,
    SeminormalityWitness,
    canonical_generators,
    decompose,
    is_gorenstein_normal,
    k5_witness,
    normality_probe,
    verify_seminormality_witness,
)
from .regularity import classify_small, regularity

EXIT_OK, EXIT_REJECT, EXIT_USAGE = 0, 1, 2


class ParseError(GraphError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at position {position}")


# -- expression parser ------------------------------------------------------

_ATOM = re.compile(r"K(\d+)x(\d+)|K(\d+)|C(\d+)|P(\d+)|file:(\S+?)(?=\s|#|$)")
_OP = re.compile(r"#\s*(H|\d+)")
_PAIR = re.compile(r"\s*(\d+)\s*=\s*(\d+)\s*")


@dataclass
class _Cursor:
    text: str
    pos: int = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""


def _atom(cur: _Cursor) -> Graph:
    cur.skip()
    start = cur.pos
    m = _ATOM.match(cur.text, cur.pos)
    if not m:
        raise ParseError("expected a graph atom (K<n>, C<n>, P<n>, K<m>x<n>, file:<path>)", start)
    cur.pos = m.end()
    a, b, kn, cn, pn, path = m.groups()
    try:
        if a is not None:
            return standard_graph("complete_bipartite", int(a), int(b))
        if kn is not None:
            return standard_graph("complete", int(kn))
        if cn is not None:
            return standard_graph("cycle", int(cn))
        if pn is not None:
            return standard_graph("path", int(pn))
        return read_edge_list(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}", start) from None
    except GraphError as exc:
        raise ParseError(str(exc), start) from None


def _glue(cur: _Cursor) -> list[tuple[int, int]]:
    start = cur.pos
    cur.pos += 1  # '['
    close = cur.text.find("]", cur.pos)
    if close < 0:
        raise ParseError("unterminated glue map", start)
    pairs = []
    offset = cur.pos
    for item in cur.text[cur.pos:close].split(","):
        m = _PAIR.fullmatch(item)
        if not m:
            raise ParseError(f"malformed glue pair {item.strip()!r}", offset)
        pairs.append((int(m.group(1)), int(m.group(2))))
        offset += len(item) + 1
    cur.pos = close + 1
    return pairs


def parse_graph_expression(text: str) -> Graph:
    """Evaluate a clique-sum expression left to right."""
    cur = _Cursor(text)
    G = _atom(cur)
    while not cur.at_end():
        op_pos = cur.pos
        m = _OP.match(cur.text, cur.pos)
        if not m:
            raise ParseError("expected '#k' or end of expression", op_pos)
        cur.pos = m.end()
        kind = m.group(1)
        glue = _glue(cur) if cur.peek() == "[" else None
        H = _atom(cur)
        try:
            if kind == "H":
                if not glue:
                    raise ParseError("'#H' requires a glue map", op_pos)
                G = glue_graphs(G, H, glue).graph
                continue
            k = int(kind)
            if k > 3:
                raise ParseError("clique-sum order must be 0, 1, 2 or 3", op_pos)
            if glue is None:
                if k != 0:
                    raise ParseError(f"'#{k}' requires an explicit glue map", op_pos)
                glue = [(G.n_vertices - 1, 0)]
            G = clique_sum(G, H, CliqueSumSpec.of(k, glue))
        except ParseError:
            raise
        except GraphError as exc:
            raise ParseError(str(exc), op_pos) from None
    return G


def load_graph(arg: str) -> Graph:
    """An existing file path is read as an edge list; anything else is parsed."""
    if os.path.isfile(arg):
        return read_edge_list(arg)
    return parse_graph_expression(arg)


# -- output helpers ---------------------------------------------------------

def _emit(obj, pretty: bool = False, table: str | None = None):
    if pretty and table is not None:
        print(table)
    else:
        print(json.dumps(obj, indent=2 if pretty else None, sort_keys=False))


def _labels(G: Graph) -> dict:
    return {"n_vertices": G.n_vertices,
            "edges": [{"index": i, "u": u, "v": v} for i, (u, v) in enumerate(G.edges)]}


# -- commands ---------------------------------------------------------------

def _default_deg_bound() -> int:
    raw = os.environ.get("CUTLAB_DEG_BOUND")
    return int(raw) if raw else 4


def cmd_analyze(args) -> int:
    G = load_graph(args.graph)
    rep = regularity(G, args.probe_bound)
    gens = canonical_generators(G, args.deg_bound)
    out = rep.to_json()
    out["predicates"] = structural_predicates(G).to_json()
    out["gorenstein"] = is_gorenstein_normal(G).to_json()
    out["canonical_generators"] = gens.to_json()
    if args.show_labels:
        out["labels"] = _labels(G)
    table = "\n".join([
        f"graph        {G.n_vertices} vertices, {G.n_edges} edges",
        f"normality    {rep.normality.status} (bound {rep.normality.bound})",
        f"min interior {rep.min_interior_degree}",
        f"regularity   {rep.regularity}",
        f"expected     {out['expected']}",
        f"gorenstein   {out['gorenstein']['gorenstein']} ({out['gorenstein']['criterion']})",
        f"generators   {len(gens.generators)} up to degree {gens.degree_bound}"
        + (" (complete)" if gens.complete else ""),
    ] + [f"  {g}" for g in gens.generators])
    _emit(out, args.pretty, table)
    return EXIT_OK


def cmd_facets(args) -> int:
    G = load_graph(args.graph)
    fs = facet_system(G)
    out = fs.to_json()
    if args.show_labels:
        out["labels"] = _labels(G)
    table = f"{len(fs.box_rows)} box rows, {len(fs.cycle_rows)} cycle rows, fingerprint {fs.graph_fingerprint}"
    _emit(out, args.pretty, table)
    return EXIT_OK


def cmd_member(args) -> int:
    G = load_graph(args.graph)
    try:
        p = LatticePoint.parse(args.point)
    except ValueError:
        raise GraphError(f"cannot parse point {args.point!r}") from None
    if len(p.x) != G.n_edges:
        raise GraphError(f"point has {len(p.x)} edge coordinates, graph has {G.n_edges} edges")
    out = {"point": list(p.as_tuple()), "in_group": in_group(G, p), "in_cone": in_cone(G, p)}
    if args.strict:
        out["interior"] = in_cone(G, p, strict=True)
    if args.decompose:
        d = decompose(G, p)
        if d is None:
            out["decomposition"] = None
        else:
            cuts = enumerate_cut_vectors(G)
            out["decomposition"] = {"size": len(d.parts), "cut_indices": list(d.parts),
                                    "subsets": [sorted(cuts[i].subset) for i in d.parts]}
    table = "\n".join(f"{k:14} {v}" for k, v in out.items())
    _emit(out, args.pretty, table)
    return EXIT_OK


def cmd_witness(args) -> int:
    w = k5_witness()
    text = w.dumps()
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def cmd_verify_witness(args) -> int:
    try:
        data = json.loads(Path(args.file).read_text(encoding="utf-8"))
        w = SeminormalityWitness.from_json(data)
    except OSError as exc:
        raise GraphError(f"cannot read {args.file}: {exc.strerror}") from None
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphError(f"malformed witness file: {exc}") from None
    check = verify_seminormality_witness(w.graph, w)
    table = "\n".join(f"{leg:12} {'ok' if ok else 'FAIL  ' + check.reasons.get(leg, '')}"
                      for leg, ok in check.legs.items())
    _emit(check.to_json(), args.pretty, table)
    return EXIT_OK if check.ok else EXIT_REJECT


def cmd_classify(args) -> int:
    result = classify_small(args.max_edges, dedup=args.dedup, probe_bound=args.probe_bound, jobs=args.jobs)
    if args.pretty:
        for r, recs in sorted(result.by_regularity().items(), key=lambda kv: (kv[0] is None, kv[0] or 0)):
            print(f"r = {r}: {len(recs)} graphs")
            for rec in recs:
                flag = "" if rec.class_match and rec.agreement else "   MISMATCH"
                print(f"    |E|={rec.n_edges} {[list(e) for e in rec.canonical_edges]}{flag}")
        print(json.dumps(result.summary()))
    else:
        for rec in result.records:
            print(json.dumps(rec.to_json()))
        print(json.dumps({"summary": result.summary()}))
    return EXIT_OK if result.ok else EXIT_REJECT


def cmd_normality(args) -> int:
    G = load_graph(args.graph)
    verdict = normality_probe(G, args.bound)
    table = f"{verdict.status} (bound {verdict.bound})"
    if verdict.gap_witness is not None:
        table += f", gap at {verdict.gap_witness}"
    _emit(verdict.to_json(), args.pretty, table)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutlab", description="Cut polytopes, cut monoids and their regularity.")
    parser.add_argument("--pretty", action="store_true", help="human-readable tables instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="edge-list file or clique-sum expression")
        p.add_argument("--show-labels", action="store_true", help="include the vertex and edge labeling")
        p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = graph_command("analyze", cmd_analyze, "regularity, predicates, Gorenstein status, canonical generators")
    p.add_argument("--deg-bound", type=int, default=_default_deg_bound())
    p.add_argument("--probe-bound", type=int, default=None, help="normality probe degree bound (default |E|)")

    graph_command("facets", cmd_facets, "facet system of the cut polytope")

    p = graph_command("member", cmd_member, "group, cone and monoid membership of a point")
    p.add_argument("--point", required=True, help="x1,...,xm,alpha")
    p.add_argument("--strict", action="store_true", help="also test the interior")
    p.add_argument("--decompose", action="store_true", help="search for a decomposition into cut vectors")

    p = sub.add_parser("witness", help="emit a non-seminormality certificate")
    p.add_argument("which", choices=["k5"])
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify-witness", help="check a certificate file")
    p.add_argument("file")
    p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_witness)

    p = sub.add_parser("classify", help="regularity scan over small connected graphs")
    p.add_argument("--max-edges", type=int, default=7)
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--probe-bound", type=int, default=None)
    p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_classify)

    p = graph_command("normality", cmd_normality, "bounded normality probe")
    p.add_argument("--bound", type=int, default=None, help="degree bound (default |E|)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (K5MinorError, NotNormalError, NotCoveredError) as exc:
        out = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, K5MinorError):
            out["branch_sets"] = exc.branch_sets
        print(json.dumps(out), file=sys.stderr)
        return EXIT_REJECT
    except GraphError as exc:
        print(json.dumps({"error": "ParseError", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(json.dumps({"error": "IOError", "message": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
