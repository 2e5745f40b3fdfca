"""Simple undirected graphs: construction, cycles, minors and clique-sums.

Vertices are ``0..n_vertices-1``.  Edges are stored as pairs ``(u, v)`` with
``u < v`` in lexicographic order; the position of an edge in that list is its
coordinate index for every vector indexed by ``E``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input (loops, bad vertices, bad glue maps)."""


@dataclass(frozen=True)
class Graph:
    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n_vertices < 1:
            raise GraphError("a graph needs at least one vertex")
        seen = set()
        for u, v in self.edges:
            if not (0 <= u < v < self.n_vertices):
                raise GraphError(f"edge {(u, v)} is not normalized or out of range")
            seen.add((u, v))
        if len(seen) != len(self.edges) or list(self.edges) != sorted(self.edges):
            raise GraphError("edges must be distinct and sorted; use build_graph")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj = [set() for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def index_of(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_json(self) -> dict:
        return {"n_vertices": self.n_vertices, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return build_graph(data["n_vertices"], [tuple(e) for e in data["edges"]])

    def __repr__(self):
        return f"Graph(n={self.n_vertices}, edges={list(self.edges)})"


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]
    edge_indices: frozenset[int]
    induced: bool

    def __len__(self):
        return len(self.vertices)


def build_graph(n_vertices: int, edge_pairs: Iterable[Sequence[int]]) -> Graph:
    """Normalize, deduplicate and sort ``edge_pairs`` into a :class:`Graph`."""
    norm = set()
    for pair in edge_pairs:
        u, v = (int(t) for t in pair)
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n_vertices and 0 <= v < n_vertices):
            raise GraphError(f"edge {(u, v)} references a vertex outside [0, {n_vertices})")
        norm.add((min(u, v), max(u, v)))
    return Graph(n_vertices, tuple(sorted(norm)))


def standard_graph(family: str, *params: int) -> Graph:
    """``complete n``, ``cycle n``, ``path n`` (n edges) or ``complete_bipartite m n``."""
    if family == "complete":
        (n,) = params
        return build_graph(n, itertools.combinations(range(n), 2))
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise GraphError("a cycle needs length at least 3")
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "path":
        (n,) = params
        if n < 0:
            raise GraphError("path length must be nonnegative")
        return build_graph(n + 1, [(i, i + 1) for i in range(n)])
    if family == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise GraphError("complete bipartite parts must be nonempty")
        return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    raise GraphError(f"unknown graph family {family!r}")


def read_edge_list(path: str | Path) -> Graph:
    """Parse a ``u v`` per line edge-list file; ``#`` comments and blank lines skipped."""
    pairs = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"{path}:{lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"{path}:{lineno}: vertex labels must be integers") from None
        if u < 0 or v < 0:
            raise GraphError(f"{path}:{lineno}: vertex labels must be nonnegative")
        pairs.append((u, v))
    if not pairs:
        raise GraphError(f"{path}: no edges")
    n = max(max(p) for p in pairs) + 1
    return build_graph(n, pairs)


def write_edge_list(G: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in G.edges)


# -- connectivity -----------------------------------------------------------

def components(G: Graph, vertices: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components of the subgraph induced on ``vertices`` (default: all)."""
    allowed = set(range(G.n_vertices)) if vertices is None else set(vertices)
    comps = []
    seen = set()
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected_set(G: Graph, vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    return bool(vs) and len(components(G, vs)) == 1


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabeled to ``0..k-1``; also returns the old labels."""
    old = sorted(set(vertices))
    new = {v: i for i, v in enumerate(old)}
    pairs = [(new[u], new[v]) for u, v in G.edges if u in new and v in new]
    return build_graph(len(old), pairs), old


# -- cycles -----------------------------------------------------------------

def _cycle_record(G: Graph, verts: Sequence[int], induced: bool) -> Cycle:
    k = len(verts)
    idx = frozenset(G.index_of(verts[i], verts[(i + 1) % k]) for i in range(k))
    return Cycle(tuple(verts), idx, induced)


def enumerate_induced_cycles(G: Graph) -> list[Cycle]:
    """All chordless cycles, each once, smallest vertex first then its smaller neighbor."""
    return list(_induced_cycles(G))


@lru_cache(maxsize=4096)
def _induced_cycles(G: Graph) -> tuple[Cycle, ...]:
    adj = G.adjacency
    found = []

    def extend(path: list[int], on_path: set[int]):
        s, last = path[0], path[-1]
        for v in sorted(adj[last]):
            if v <= s or v in on_path:
                continue
            # v may only touch the path at `last` (and at `s` when it closes).
            if any(v in adj[p] for p in path[1:-1]):
                continue
            if s in adj[v]:
                if len(path) >= 2 and path[1] < v:
                    found.append(_cycle_record(G, path + [v], True))
                continue
            path.append(v)
            on_path.add(v)
            extend(path, on_path)
            path.pop()
            on_path.discard(v)

    for s in range(G.n_vertices):
        for p1 in sorted(adj[s]):
            if p1 > s:
                extend([s, p1], {s, p1})
    found.sort(key=lambda c: (len(c), c.vertices))
    return tuple(found)


def spanning_forest(G: Graph, order: Sequence[int] | None = None) -> dict[int, int | None]:
    """BFS parent map; roots (one per component) map to ``None``.

    ``order`` fixes the order in which vertices are tried as roots and
    neighbors are scanned; different orders give different forests.
    """
    order = list(range(G.n_vertices)) if order is None else list(order)
    rank = {v: i for i, v in enumerate(order)}
    parent: dict[int, int | None] = {}
    for root in order:
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(G.adjacency[u], key=rank.__getitem__):
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
    return parent


def cycle_space_basis(G: Graph, order: Sequence[int] | None = None) -> list[Cycle]:
    """Fundamental cycles of a BFS spanning forest (one per non-tree edge)."""
    parent = spanning_forest(G, order)
    tree = {(min(u, p), max(u, p)) for u, p in parent.items() if p is not None}

    def root_path(v):
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path

    basis = []
    for u, v in G.edges:
        if (u, v) in tree:
            continue
        pu, pv = root_path(u), root_path(v)
        common = set(pu) & set(pv)
        lca = next(x for x in pu if x in common)
        verts = pu[: pu.index(lca) + 1] + list(reversed(pv[: pv.index(lca)]))
        k = len(verts)
        chord = any(
            G.has_edge(verts[i], verts[j])
            for i in range(k) for j in range(i + 2, k)
            if not (i == 0 and j == k - 1)
        )
        basis.append(_cycle_record(G, verts, not chord))
    return basis


def edge_in_triangle(G: Graph, e: int) -> bool:
    u, v = G.edges[e]
    return bool(G.adjacency[u] & G.adjacency[v])


def has_triangle(G: Graph) -> bool:
    return any(edge_in_triangle(G, e) for e in range(G.n_edges))


# -- minors -----------------------------------------------------------------

MINOR_PATTERNS = ("K4", "K5", "K5_minus_e", "K33")


def _pattern_ok(pattern: str, adjacent: list[list[bool]]) -> bool:
    h = len(adjacent)
    missing = [(i, j) for i in range(h) for j in range(i + 1, h) if not adjacent[i][j]]
    if pattern in ("K4", "K5"):
        return not missing
    if pattern == "K5_minus_e":
        return len(missing) <= 1
    # K33: split the six branch sets 3+3 with all cross pairs adjacent.
    for side in itertools.combinations(range(1, 6), 2):
        left = (0,) + side
        right = [i for i in range(6) if i not in left]
        if all(adjacent[i][j] for i in left for j in right):
            return True
    return False


def _set_partitions(items: list[int], k: int) -> Iterator[list[list[int]]]:
    """Partitions of ``items`` into exactly ``k`` nonempty blocks."""
    n = len(items)
    if k > n:
        return
    blocks: list[list[int]] = []

    def rec(i):
        if n - i < k - len(blocks):
            return
        if i == n:
            if len(blocks) == k:
                yield [list(b) for b in blocks]
            return
        x = items[i]
        for b in blocks:
            b.append(x)
            yield from rec(i + 1)
            b.pop()
        if len(blocks) < k:
            blocks.append([x])
            yield from rec(i + 1)
            blocks.pop()

    yield from rec(0)


def find_minor(G: Graph, pattern: str) -> list[list[int]] | None:
    """Branch sets realizing ``pattern`` as a minor of ``G``, or ``None``.

    Every pattern is connected, so a model lives inside one component, and
    any unused vertex of that component can be merged into an adjacent
    branch set without losing connectivity or adjacencies.  It therefore
    suffices to search partitions of each component into connected parts.
    """
    if pattern not in MINOR_PATTERNS:
        raise GraphError(f"unsupported minor pattern {pattern!r}")
    h = {"K4": 4, "K5": 5, "K5_minus_e": 5, "K33": 6}[pattern]
    need_edges = {"K4": 6, "K5": 10, "K5_minus_e": 9, "K33": 9}[pattern]
    for comp in components(G):
        comp_set = set(comp)
        m = sum(1 for u, v in G.edges if u in comp_set)
        if len(comp) < h or m < need_edges:
            continue
        for parts in _set_partitions(comp, h):
            if not all(is_connected_set(G, p) for p in parts):
                continue
            owner = {v: i for i, p in enumerate(parts) for v in p}
            adjacent = [[False] * h for _ in range(h)]
            for u, v in G.edges:
                if u in owner:
                    a, b = owner[u], owner[v]
                    if a != b:
                        adjacent[a][b] = adjacent[b][a] = True
            if _pattern_ok(pattern, adjacent):
                return [sorted(p) for p in parts]
    return None


@lru_cache(maxsize=4096)
def has_minor(G: Graph, pattern: str) -> bool:
    return find_minor(G, pattern) is not None


# -- structure --------------------------------------------------------------

def two_coloring(G: Graph) -> list[int] | None:
    color = [-1] * G.n_vertices
    for s in range(G.n_vertices):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def is_bipartite(G: Graph) -> bool:
    return two_coloring(G) is not None


def bridges(G: Graph) -> list[int]:
    """Indices of edges lying on no cycle."""
    out = []
    for i, (u, v) in enumerate(G.edges):
        H = Graph(G.n_vertices, G.edges[:i] + G.edges[i + 1:])
        if not any(u in c and v in c for c in map(set, components(H))):
            out.append(i)
    return out


def is_connected(G: Graph) -> bool:
    return len(components(G)) == 1


def non_isolated_vertices(G: Graph) -> list[int]:
    return [v for v in range(G.n_vertices) if G.adjacency[v]]


def blocks(G: Graph) -> list[frozenset[tuple[int, int]]]:
    """Edge sets of the blocks of ``G`` (biconnected components and bridges)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    out: list[frozenset[tuple[int, int]]] = []

    def visit(u: int, parent: int | None):
        disc[u] = low[u] = len(disc)
        for w in sorted(G.adjacency[u]):
            if w == parent:
                continue
            if w not in disc:
                stack.append((min(u, w), max(u, w)))
                visit(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.add(e)
                        if e == (min(u, w), max(u, w)):
                            break
                    out.append(frozenset(block))
            elif disc[w] < disc[u]:
                stack.append((min(u, w), max(u, w)))
                low[u] = min(low[u], disc[w])

    for s in range(G.n_vertices):
        if s not in disc:
            visit(s, None)
    return out


def _is_cycle_block(edges: frozenset[tuple[int, int]]) -> bool:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return len(edges) >= 3 and all(d == 2 for d in deg.values()) and len(deg) == len(edges)


def _edge_glued_splits(edges: frozenset[tuple[int, int]]):
    """All ways of writing a 2-connected block as a 1-sum along one of its edges."""
    verts = sorted({x for e in edges for x in e})
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    for u, v in sorted(edges):
        rest = [x for x in verts if x not in (u, v)]
        comps, seen = [], set()
        for s in rest:
            if s in seen:
                continue
            comp, queue = {s}, [s]
            seen.add(s)
            while queue:
                a = queue.pop()
                for b in adj[a]:
                    if b not in seen and b not in (u, v):
                        seen.add(b)
                        comp.add(b)
                        queue.append(b)
            comps.append(comp)
        if len(comps) < 2:
            continue
        for r in range(1, len(comps)):
            for group in itertools.combinations(range(len(comps)), r):
                if 0 not in group:  # each split once: component 0 stays left
                    continue
                side = set().union(*(comps[i] for i in group)) | {u, v}
                left = frozenset(e for e in edges if e[0] in side and e[1] in side)
                right = frozenset(e for e in edges if not (e[0] in side - {u, v} or e[1] in side - {u, v}))
                yield left, right


@lru_cache(maxsize=None)
def _ring_block(edges: frozenset[tuple[int, int]]) -> bool:
    if len(edges) <= 1 or _is_cycle_block(edges):
        return True
    return any(_ring_block(a) and _ring_block(b) for a, b in _edge_glued_splits(edges))


def is_ring_graph(G: Graph) -> bool:
    return all(_ring_block(b) for b in blocks(G))


@dataclass(frozen=True)
class StructuralPredicates:
    bipartite: bool
    chordal: bool
    bridgeless: bool
    ring_graph: bool
    connected: bool
    max_induced_cycle_length: int

    def to_json(self) -> dict:
        return dict(self.__dict__)


def structural_predicates(G: Graph) -> StructuralPredicates:
    cycles = enumerate_induced_cycles(G)
    return StructuralPredicates(
        bipartite=is_bipartite(G),
        chordal=all(len(c) == 3 for c in cycles),
        bridgeless=not bridges(G),
        ring_graph=is_ring_graph(G),
        connected=is_connected(G),
        max_induced_cycle_length=max((len(c) for c in cycles), default=0),
    )


# -- clique sums ------------------------------------------------------------

@dataclass(frozen=True)
class CliqueSumSpec:
    k: int
    glue_map: tuple[tuple[int, int], ...]  # (vertex of G1, vertex of G2)

    @classmethod
    def of(cls, k: int, glue: dict[int, int] | Iterable[tuple[int, int]]) -> "CliqueSumSpec":
        pairs = glue.items() if isinstance(glue, dict) else glue
        return cls(k, tuple(sorted((int(a), int(b)) for a, b in pairs)))


@dataclass(frozen=True)
class GluedGraph:
    graph: Graph
    left_vertices: tuple[int, ...]   # label in the sum of each G1 vertex
    right_vertices: tuple[int, ...]  # label in the sum of each G2 vertex

    def left_edge_indices(self, G1: Graph) -> list[int]:
        lv = self.left_vertices
        return [self.graph.index_of(lv[u], lv[v]) for u, v in G1.edges]

    def right_edge_indices(self, G2: Graph) -> list[int]:
        rv = self.right_vertices
        return [self.graph.index_of(rv[u], rv[v]) for u, v in G2.edges]


def glue_graphs(G1: Graph, G2: Graph, glue: Iterable[tuple[int, int]]) -> GluedGraph:
    """Sum of ``G1`` and ``G2`` identifying ``a`` in ``G1`` with ``b`` in ``G2`` per pair.

    The two glued vertex sets must induce the same subgraph (under the
    identification).  ``G1`` keeps its labels; unglued ``G2`` vertices are
    appended in increasing order.
    """
    pairs = list(glue)
    left = [a for a, _ in pairs]
    right = [b for _, b in pairs]
    if len(set(left)) != len(pairs) or len(set(right)) != len(pairs):
        raise GraphError("glue map must be a bijection")
    for a, b in pairs:
        if not (0 <= a < G1.n_vertices and 0 <= b < G2.n_vertices):
            raise GraphError(f"glue pair {a}={b} references a missing vertex")
    to_left = {b: a for a, b in pairs}
    for (a1, b1), (a2, b2) in itertools.combinations(pairs, 2):
        if G1.has_edge(a1, a2) != G2.has_edge(b1, b2):
            raise GraphError("glued vertex sets induce different subgraphs")
    right_map = []
    nxt = G1.n_vertices
    for v in range(G2.n_vertices):
        if v in to_left:
            right_map.append(to_left[v])
        else:
            right_map.append(nxt)
            nxt += 1
    pairs_all = list(G1.edges) + [(right_map[u], right_map[v]) for u, v in G2.edges]
    G = build_graph(nxt, pairs_all)
    return GluedGraph(G, tuple(range(G1.n_vertices)), tuple(right_map))


def clique_sum_detail(G1: Graph, G2: Graph, spec: CliqueSumSpec) -> GluedGraph:
    if spec.k not in (0, 1, 2, 3):
        raise GraphError("clique-sum order must be 0, 1, 2 or 3")
    if len(spec.glue_map) != spec.k + 1:
        raise GraphError(f"a {spec.k}-sum glues exactly {spec.k + 1} vertex pairs")
    for which, graph, verts in (("left", G1, [a for a, _ in spec.glue_map]),
                                ("right", G2, [b for _, b in spec.glue_map])):
        if any(not (0 <= v < graph.n_vertices) for v in verts):
            raise GraphError(f"{which} glue vertex out of range")
        if not all(graph.has_edge(a, b) for a, b in itertools.combinations(verts, 2)):
            raise GraphError(f"{which} glue set {sorted(verts)} is not a clique")
    return glue_graphs(G1, G2, spec.glue_map)


def clique_sum(G1: Graph, G2: Graph, spec: CliqueSumSpec) -> Graph:
    return clique_sum_detail(G1, G2, spec).graph


# -- isomorphism and enumeration --------------------------------------------

def _vertex_invariant(G: Graph, v: int) -> tuple:
    return (G.degree(v), tuple(sorted(G.degree(w) for w in G.adjacency[v])))


def canonical_form(G: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Minimum sorted edge list over relabelings respecting a vertex invariant.

    Vertices are grouped by (degree, neighbor degrees); classes are laid out
    in invariant order and permuted internally.  Since the grouping is
    isomorphism-invariant, the minimum is a complete invariant.
    """
    by_class: dict[tuple, list[int]] = {}
    for v in range(G.n_vertices):
        by_class.setdefault(_vertex_invariant(G, v), []).append(v)
    classes = [by_class[key] for key in sorted(by_class)]
    best = None
    for perms in itertools.product(*(itertools.permutations(c) for c in classes)):
        label = {}
        for v in itertools.chain.from_iterable(perms):
            label[v] = len(label)
        cand = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in G.edges))
        if best is None or cand < best:
            best = cand
    return G.n_vertices, best


def canonical_graph(G: Graph) -> Graph:
    n, edges = canonical_form(G)
    return Graph(n, edges)


def is_isomorphic(G: Graph, H: Graph) -> bool:
    return (G.n_vertices, G.n_edges) == (H.n_vertices, H.n_edges) and canonical_form(G) == canonical_form(H)


def enumerate_connected_graphs(max_edges: int, dedup: bool = True) -> Iterator[Graph]:
    """Connected graphs without isolated vertices and with ``1..max_edges`` edges.

    Graphs are grown one edge at a time (a chord between existing vertices
    or a pendant edge to a new vertex) from one representative per
    isomorphism class.  With ``dedup`` each class is yielded once in
    canonical labeling; otherwise every generated labeled candidate is
    yielded, repeats included.
    """
    level = [canonical_graph(standard_graph("path", 1))] if max_edges >= 1 else []
    m = 1
    while level and m <= max_edges:
        yield from level if dedup else ()
        if m == max_edges:
            break
        nxt: dict[tuple, Graph] = {}
        for G in level:
            n = G.n_vertices
            cands = [build_graph(n, G.edges + ((u, v),))
                     for u, v in itertools.combinations(range(n), 2) if not G.has_edge(u, v)]
            cands += [build_graph(n + 1, G.edges + ((u, n),)) for u in range(n)]
            for H in cands:
                if not dedup:
                    yield H
                key = canonical_form(H)
                if key not in nxt:
                    nxt[key] = Graph(*key)
        level = [nxt[k] for k in sorted(nxt)]
        m += 1
    if not dedup and max_edges >= 1:
        yield standard_graph("path", 1)
