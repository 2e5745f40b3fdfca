"""Castelnuovo-Mumford regularity of cut algebras of normal cut polytopes.

For a normal (hence Cohen-Macaulay) cut algebra of dimension ``|E| + 1``
the regularity is ``|E| + 1`` minus the least degree of an interior monoid
element.  This module computes it, compares it with the closed forms known
for bipartite graphs, ring graphs and graphs with a triangle, and scans
all small connected graphs.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .geometry import facet_system
from .graphs import (
    Graph,
    CliqueSumSpec,
    canonical_form,
    clique_sum,
    enumerate_connected_graphs,
    enumerate_induced_cycles,
    has_minor,
    has_triangle,
    is_connected,
    standard_graph,
    structural_predicates,
)
from .monoid import NormalityVerdict, NotNormalError, is_gorenstein_normal, min_interior_degree, normality_probe

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Expectation:
    case: str
    value: int
    kind: str = "equal"  # or "upper_bound"

    def holds(self, r: int) -> bool:
        return r == self.value if self.kind == "equal" else r <= self.value

    def to_json(self) -> dict:
        return {"case": self.case, "value": self.value, "kind": self.kind}


@dataclass(frozen=True)
class RegularityReport:
    graph: Graph
    normality: NormalityVerdict
    min_interior_degree: int
    regularity: int
    theorem_expectation: Expectation | None
    agreement: bool

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "normality": self.normality.to_json(),
            "min_interior_degree": self.min_interior_degree,
            "regularity": self.regularity,
            "expected": None if self.theorem_expectation is None else self.theorem_expectation.to_json(),
            "agreement": self.agreement,
        }


def known_normal(G: Graph) -> bool:
    """Normality that follows from the graph's structure alone."""
    return not has_minor(G, "K5_minus_e") or is_gorenstein_normal(G).gorenstein


def _has_odd_induced_cycle(G: Graph) -> bool:
    return any(len(c) % 2 for c in enumerate_induced_cycles(G))


def expected_regularity(G: Graph) -> Expectation | None:
    """Closed-form regularity (or upper bound) predicted from the graph's shape."""
    if G.n_edges == 0 or not known_normal(G):
        return None
    m = G.n_edges
    if has_triangle(G):
        return Expectation("triangle", m - 3)
    sp = structural_predicates(G)
    if sp.bipartite:
        return Expectation("bipartite", m - 1)
    if _has_odd_induced_cycle(G):
        if sp.ring_graph:
            return Expectation("ring_odd_cycle", m - 2)
        return Expectation("odd_cycle_no_triangle", m - 2, "upper_bound")
    return None


def regularity(G: Graph, probe_bound: int | None = None) -> RegularityReport:
    """Regularity from the least interior degree, under a verified normality probe.

    ``probe_bound`` defaults to ``|E|``.  Raises :class:`K5MinorError` or
    :class:`NotNormalError` when the preconditions fail.
    """
    facet_system(G)
    bound = G.n_edges if probe_bound is None else probe_bound
    verdict = normality_probe(G, bound)
    if not verdict.verified:
        raise NotNormalError(f"normality gap at {verdict.gap_witness}")
    alpha = min_interior_degree(G, probe_bound=bound)
    if alpha is None:
        raise NotNormalError("no interior point found within |E| + 1")
    r = G.n_edges + 1 - alpha
    exp = expected_regularity(G)
    return RegularityReport(G, verdict, alpha, r, exp, True if exp is None else exp.holds(r))


@dataclass(frozen=True)
class BoundRecord:
    name: str
    relation: str
    value: int
    satisfied: bool

    def to_json(self) -> dict:
        return dict(self.__dict__)


def bounds_check(G: Graph, r: int) -> list[BoundRecord]:
    """The general lower bound plus whichever shape-specific bounds apply."""
    m = G.n_edges
    out = [BoundRecord("lower_all", ">=", m - 3, r >= m - 3)]
    if has_triangle(G):
        out.append(BoundRecord("triangle", "==", m - 3, r == m - 3))
    elif structural_predicates(G).bipartite:
        # Interior points need degree at least 2, so r <= |E| - 1 and the bound is tight.
        out.append(BoundRecord("bipartite", "==", m - 1, r == m - 1))
    elif _has_odd_induced_cycle(G):
        out.append(BoundRecord("odd_cycle_no_triangle", "<=", m - 2, r <= m - 2))
    return out


# -- small graph classification ---------------------------------------------

@lru_cache(maxsize=None)
def _named_forms() -> dict[str, tuple]:
    C3, C4, C5 = (standard_graph("cycle", n) for n in (3, 4, 5))
    P1, P2 = standard_graph("path", 1), standard_graph("path", 2)
    forms = {
        "C3": C3, "C4": C4, "C5": C5, "P1": P1, "P2": P2,
        "C3#0P1": clique_sum(C3, P1, CliqueSumSpec.of(0, {2: 0})),
        "C5#0P1": clique_sum(C5, P1, CliqueSumSpec.of(0, {4: 0})),
    }
    return {name: canonical_form(G) for name, G in forms.items()}


def _is(G: Graph, name: str) -> bool:
    return canonical_form(G) == _named_forms()[name]


def predicted_small_class(G: Graph) -> int | None:
    """Regularity in ``{0,...,4}`` predicted by the small-regularity
    classification of connected graphs; ``None`` means "at least 5"."""
    m = G.n_edges
    tri = has_triangle(G)
    tree = is_connected(G) and m == G.n_vertices - 1
    if _is(G, "C3") or _is(G, "P1"):
        return 0
    if _is(G, "C3#0P1") or _is(G, "P2"):
        return 1
    if tree and m == 3 or tri and m == 5:
        return 2
    if tree and m == 4 or _is(G, "C4") or _is(G, "C5") or tri and m == 6:
        return 3
    if structural_predicates(G).bipartite and m == 5 or _is(G, "C5#0P1") or tri and m == 7:
        return 4
    return None


@dataclass(frozen=True)
class ScanRecord:
    canonical_edges: tuple[tuple[int, int], ...]
    n_vertices: int
    n_edges: int
    predicates: dict
    normal_verified: bool
    min_interior_degree: int | None
    regularity: int | None
    expected: Expectation | None
    agreement: bool
    predicted_class: int | None
    bounds: tuple[BoundRecord, ...]

    @property
    def class_match(self) -> bool:
        r = self.regularity
        if r is None:
            return False
        return self.predicted_class == r if r <= 4 else self.predicted_class is None

    def to_json(self) -> dict:
        return {
            "canonical_edges": [list(e) for e in self.canonical_edges],
            "n_vertices": self.n_vertices,
            "|E|": self.n_edges,
            "predicates": self.predicates,
            "normal_verified": self.normal_verified,
            "min_interior_degree": self.min_interior_degree,
            "regularity": self.regularity,
            "expected": None if self.expected is None else self.expected.to_json(),
            "agreement": self.agreement,
            "predicted_class": self.predicted_class,
            "class_match": self.class_match,
            "bounds": [b.to_json() for b in self.bounds],
        }


def scan_graph(G: Graph, probe_bound: int | None = None) -> ScanRecord:
    preds = structural_predicates(G).to_json()
    preds["triangle"] = has_triangle(G)
    try:
        rep = regularity(G, probe_bound)
    except NotNormalError:
        return ScanRecord(G.edges, G.n_vertices, G.n_edges, preds, False, None, None,
                          expected_regularity(G), False, predicted_small_class(G), ())
    return ScanRecord(
        G.edges, G.n_vertices, G.n_edges, preds, True, rep.min_interior_degree, rep.regularity,
        rep.theorem_expectation, rep.agreement, predicted_small_class(G),
        tuple(bounds_check(G, rep.regularity)),
    )


@dataclass
class Classification:
    records: list[ScanRecord]

    @property
    def mismatches(self) -> list[ScanRecord]:
        return [r for r in self.records if not r.class_match]

    @property
    def disagreements(self) -> list[ScanRecord]:
        return [r for r in self.records if not r.agreement]

    @property
    def bound_violations(self) -> list[ScanRecord]:
        return [r for r in self.records if not all(b.satisfied for b in r.bounds)]

    @property
    def unverified_small(self) -> list[ScanRecord]:
        """Graphs with regularity at most 4 whose normality probe did not pass."""
        return [r for r in self.records if r.regularity is not None and r.regularity <= 4 and not r.normal_verified]

    @property
    def ok(self) -> bool:
        return not (self.mismatches or self.disagreements or self.bound_violations or self.unverified_small)

    def by_regularity(self) -> dict[int | None, list[ScanRecord]]:
        out: dict[int | None, list[ScanRecord]] = {}
        for r in self.records:
            out.setdefault(r.regularity, []).append(r)
        return out

    def summary(self) -> dict:
        return {
            "graphs": len(self.records),
            "by_regularity": {str(k): len(v) for k, v in sorted(self.by_regularity().items(), key=lambda kv: (kv[0] is None, kv[0] or 0))},
            "mismatches": len(self.mismatches),
            "disagreements": len(self.disagreements),
            "bound_violations": len(self.bound_violations),
            "unverified_small": len(self.unverified_small),
            "ok": self.ok,
        }


def classify_small(max_edges: int = 7, dedup: bool = True, probe_bound: int | None = None,
                   jobs: int = 1) -> Classification:
    """Compute the regularity of every connected graph with at most
    ``max_edges`` edges and compare with the classification predicates."""
    graphs = list(enumerate_connected_graphs(max_edges, dedup=dedup))
    graphs = [G for G in graphs if not has_minor(G, "K5_minus_e")]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            records = list(pool.map(scan_graph, graphs, [probe_bound] * len(graphs), chunksize=4))
    else:
        records = []
        for i, G in enumerate(graphs):
            records.append(scan_graph(G, probe_bound))
            log.debug("scanned %d/%d %s", i + 1, len(graphs), G)
    records.sort(key=lambda r: (r.n_edges, r.n_vertices, r.canonical_edges))
    return Classification(records)
