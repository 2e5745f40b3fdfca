"""The cut monoid: decompositions into cut vectors, bounded normality probes,
the non-seminormality witness protocol and generators of the interior ideal.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .geometry import (
    LatticePoint,
    _check_dim,
    _cut_vectors,
    enumerate_cut_vectors,
    generator_matrix,
    in_cone,
    in_group,
    lattice_point_chunks,
    lattice_points_at_degree,
    row_arrays,
    verify_positive_combination,
    work_dtype,
)
from .graphs import (
    Graph,
    GluedGraph,
    CliqueSumSpec,
    clique_sum_detail,
    has_minor,
    standard_graph,
    structural_predicates,
)


class NotNormalError(ValueError):
    """A computation needs normality, but the probe found a gap (or was not run)."""


class NotCoveredError(ValueError):
    """No generator-transfer rule applies to this pair of graphs."""


# -- decompositions ---------------------------------------------------------

@dataclass(frozen=True)
class Decomposition:
    parts: tuple[int, ...]  # cut-vector indices, nondecreasing

    def total(self, G: Graph) -> LatticePoint:
        cuts = _cut_vectors(G)
        x = [0] * G.n_edges
        for i in self.parts:
            for e, bit in enumerate(cuts[i].coords):
                x[e] += bit
        return LatticePoint(tuple(x), len(self.parts))


def is_valid_decomposition(G: Graph, p: LatticePoint, parts) -> bool:
    n = len(_cut_vectors(G))
    try:
        parts = tuple(sorted(int(i) for i in parts))
    except (TypeError, ValueError):
        return False
    if any(not (0 <= i < n) for i in parts):
        return False
    return Decomposition(parts).total(G) == p


def decompose(G: Graph, p: LatticePoint) -> Decomposition | None:
    """Lexicographically first multiset of ``alpha`` cut vectors summing to ``p``.

    The search is exhaustive, so ``None`` proves ``p`` is not in the monoid.
    """
    _check_dim(G, p)
    if p.alpha < 0 or any(v < 0 or v > p.alpha for v in p.x):
        return None
    gens = [c.coords for c in _cut_vectors(G)]
    k = len(gens)
    dead: set[tuple] = set()
    chosen: list[int] = []

    def search(residual: tuple[int, ...], degree: int, start: int) -> bool:
        if degree == 0:
            return not any(residual)
        key = (residual, degree, start)
        if key in dead:
            return False
        for j in range(start, k):
            nxt = tuple(r - g for r, g in zip(residual, gens[j]))
            if any(v < 0 or v > degree - 1 for v in nxt):
                continue
            chosen.append(j)
            if search(nxt, degree - 1, j):
                return True
            chosen.pop()
        dead.add(key)
        return False

    if search(p.x, p.alpha, 0):
        return Decomposition(tuple(chosen))
    return None


def _reducible_mask(G: Graph, pts: np.ndarray, alpha: int, interior: bool) -> np.ndarray:
    """For each edge part ``x`` at degree ``alpha``: can some cut vector ``g`` be
    subtracted with ``(x - g, alpha - 1)`` still in the cone (interior if asked)?"""
    dt = work_dtype(G, alpha)
    A, c = (arr.astype(dt) for arr in row_arrays(G))
    gens = generator_matrix(G).astype(dt)
    slack = -1 if interior else 0
    lhs = pts.astype(dt) @ A.T - (c * (alpha - 1) + slack)[None, :]
    gen_rows = gens @ A.T
    out = np.zeros(len(pts), dtype=bool)
    if A.shape[0] == 0:
        out[:] = alpha - 1 > 0 if interior else alpha - 1 >= 0
        return out
    # Try cut vectors one at a time on the points still unresolved; most
    # points are settled by the first few, so this beats the full product.
    open_idx = np.arange(len(pts))
    for g in gen_rows:
        if len(open_idx) == 0:
            break
        hit = np.all(lhs[open_idx] <= g[None, :], axis=1)
        out[open_idx[hit]] = True
        open_idx = open_idx[~hit]
    return out


# -- normality --------------------------------------------------------------

@dataclass(frozen=True)
class NormalityVerdict:
    status: str  # "verified_up_to_bound" | "gap_found"
    bound: int
    gap_witness: LatticePoint | None = None
    evidence: dict = field(default_factory=dict, compare=False)

    @property
    def verified(self) -> bool:
        return self.status == "verified_up_to_bound"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "bound": self.bound,
            "gap_witness": None if self.gap_witness is None else list(self.gap_witness.as_tuple()),
            "evidence": self.evidence,
        }


@lru_cache(maxsize=1024)
def normality_probe(G: Graph, degree_bound: int | None = None) -> NormalityVerdict:
    """Check that every group point of the cone at degree ``<= degree_bound`` is
    a sum of cut vectors.

    Degrees are processed upward.  Once all points of degree ``alpha - 1``
    are known to decompose, a point of degree ``alpha`` decomposes iff
    subtracting a single cut vector lands back in the cone; that test is
    vectorized over all points.  A failing point is re-checked with the
    exhaustive :func:`decompose` before being reported.
    """
    bound = G.n_edges if degree_bound is None else degree_bound
    for alpha in range(1, bound + 1):
        for chunk in lattice_point_chunks(G, alpha):
            ok = _reducible_mask(G, chunk, alpha, interior=False)
            if ok.all():
                continue
            p = LatticePoint(tuple(chunk[int(np.argmin(ok))].tolist()), alpha)
            assert decompose(G, p) is None
            evidence = {"in_group": in_group(G, p), "in_cone": in_cone(G, p), "decomposition": None}
            return NormalityVerdict("gap_found", bound, p, evidence)
    return NormalityVerdict("verified_up_to_bound", bound)


def require_normal(G: Graph, bound: int) -> NormalityVerdict:
    verdict = normality_probe(G, bound)
    if not verdict.verified:
        raise NotNormalError(f"normality gap at {verdict.gap_witness}")
    return verdict


# -- seminormality witness --------------------------------------------------

@dataclass
class SeminormalityWitness:
    graph: Graph
    point: LatticePoint
    multiple_k: int
    multiple_decomposition: list[int]
    interior_certificate: list[Fraction]
    group_evidence: list[int]

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "point": list(self.point.as_tuple()),
            "multiple_k": self.multiple_k,
            "multiple_decomposition": list(self.multiple_decomposition),
            "interior_certificate": [str(Fraction(c)) for c in self.interior_certificate],
            "group_evidence": list(self.group_evidence),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def from_json(cls, data: dict) -> "SeminormalityWitness":
        return cls(
            graph=Graph.from_json(data["graph"]),
            point=LatticePoint.of(data["point"]),
            multiple_k=data["multiple_k"],
            multiple_decomposition=list(data["multiple_decomposition"]),
            interior_certificate=[Fraction(c) for c in data["interior_certificate"]],
            group_evidence=list(data["group_evidence"]),
        )


WITNESS_LEGS = ("group", "interior", "multiple", "irreducible")


@dataclass
class WitnessCheck:
    legs: dict[str, bool]
    reasons: dict[str, str]

    @property
    def ok(self) -> bool:
        return all(self.legs.values())

    @property
    def failed_leg(self) -> str | None:
        return next((leg for leg in WITNESS_LEGS if not self.legs.get(leg, False)), None)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "failed_leg": self.failed_leg, "legs": self.legs, "reasons": self.reasons}


def k5_witness() -> SeminormalityWitness:
    """The all-twos point of K5 with its four certificates.

    The point is the sum of the five singleton cuts minus the empty cut,
    and four times it is the sum of all sixteen cuts.
    """
    G = standard_graph("complete", 5)
    cuts = enumerate_cut_vectors(G)
    point = LatticePoint((2,) * G.n_edges, 4)
    group = [0] * len(cuts)
    group[0] = -1
    for i in range(1, 6):
        group[i] = 1
    return SeminormalityWitness(
        graph=G,
        point=point,
        multiple_k=4,
        multiple_decomposition=list(range(len(cuts))),
        interior_certificate=[Fraction(1)] * len(cuts),
        group_evidence=group,
    )


def verify_seminormality_witness(G: Graph, w: SeminormalityWitness) -> WitnessCheck:
    """Check all four legs; a pass shows the interior monoid is not normal,
    so the monoid is neither seminormal nor normal."""
    cuts = _cut_vectors(G)
    legs: dict[str, bool] = {}
    reasons: dict[str, str] = {}
    p = w.point

    def fail(leg, why):
        legs[leg] = False
        reasons[leg] = why

    if len(p.x) != G.n_edges:
        for leg in WITNESS_LEGS:
            fail(leg, "point dimension does not match the graph")
        return WitnessCheck(legs, reasons)

    coeffs = w.group_evidence
    if len(coeffs) != len(cuts) or any(not isinstance(c, int) or isinstance(c, bool) for c in coeffs):
        fail("group", f"need {len(cuts)} integer coefficients")
    else:
        x = tuple(sum(c * cut.coords[e] for c, cut in zip(coeffs, cuts)) for e in range(G.n_edges))
        legs["group"] = LatticePoint(x, sum(coeffs)) == p
        if not legs["group"]:
            reasons["group"] = "integer combination does not reproduce the point"

    k = w.multiple_k
    if not isinstance(k, int) or k < 2:
        fail("interior", "multiple must be an integer >= 2")
        fail("multiple", "multiple must be an integer >= 2")
    else:
        kp = p.scale(k)
        try:
            legs["interior"] = verify_positive_combination(G, kp, w.interior_certificate)
            if not legs["interior"]:
                reasons["interior"] = "coefficients are not strictly positive or do not sum to k*point"
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            fail("interior", str(exc))
        legs["multiple"] = len(w.multiple_decomposition) == kp.alpha and is_valid_decomposition(
            G, kp, w.multiple_decomposition)
        if not legs["multiple"]:
            reasons["multiple"] = "not a decomposition of k*point into cut vectors"

    legs["irreducible"] = decompose(G, p) is None
    if not legs["irreducible"]:
        reasons["irreducible"] = "the point itself decomposes"
    return WitnessCheck(legs, reasons)


# -- interior ideal ---------------------------------------------------------

def min_interior_degree(G: Graph, search_bound: int | None = None,
                        probe_bound: int | None = None) -> int | None:
    """Smallest degree carrying an interior lattice point of the monoid."""
    require_normal(G, G.n_edges if probe_bound is None else probe_bound)
    top = G.n_edges + 1 if search_bound is None else search_bound
    for alpha in range(1, top + 1):
        if next(lattice_point_chunks(G, alpha, interior_only=True), None) is not None:
            return alpha
    return None


@dataclass(frozen=True)
class CanonicalGeneratorSet:
    degree_bound: int
    generators: tuple[LatticePoint, ...]
    complete: bool

    def to_json(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "complete": self.complete,
            "generators": [list(g.as_tuple()) for g in self.generators],
        }


def canonical_generators(G: Graph, degree_bound: int = 4) -> CanonicalGeneratorSet:
    """Interior points not reachable from a lower interior point by adding a cut.

    These are the minimal generators, up to ``degree_bound``, of the ideal
    spanned by the interior of the monoid.  ``complete`` is set when every
    interior point at ``degree_bound`` is reducible and the bound is at
    least 4.
    """
    require_normal(G, degree_bound)
    gens: list[LatticePoint] = []
    top_reducible = True
    for alpha in range(1, degree_bound + 1):
        for chunk in lattice_point_chunks(G, alpha, interior_only=True):
            red = _reducible_mask(G, chunk, alpha, interior=True)
            for row in chunk[~red].tolist():
                gens.append(LatticePoint(tuple(row), alpha))
            if alpha == degree_bound and not red.all():
                top_reducible = False
    gens.sort(key=lambda g: (g.alpha, g.x))
    return CanonicalGeneratorSet(degree_bound, tuple(gens), top_reducible and degree_bound >= 4)


@dataclass(frozen=True)
class GorensteinStatus:
    gorenstein: bool
    criterion: str  # "bipartite_no_long_cycle" | "bridgeless_chordal" | "none"

    def to_json(self) -> dict:
        return {"gorenstein": self.gorenstein, "criterion": self.criterion}


def is_gorenstein_normal(G: Graph) -> GorensteinStatus:
    """Normal-and-Gorenstein test from the graph alone (K5-minor-free plus one
    of two structural criteria)."""
    if G.n_edges == 0 or has_minor(G, "K5"):
        return GorensteinStatus(False, "none")
    sp = structural_predicates(G)
    if sp.bipartite and sp.max_induced_cycle_length < 6:
        return GorensteinStatus(True, "bipartite_no_long_cycle")
    if sp.bridgeless and sp.chordal:
        return GorensteinStatus(True, "bridgeless_chordal")
    return GorensteinStatus(False, "none")


# -- clique-sum transfer ----------------------------------------------------

@dataclass(frozen=True)
class GeneratorPrediction:
    glued: GluedGraph
    form: str
    points: frozenset[LatticePoint]

    @property
    def graph(self) -> Graph:
        return self.glued.graph


def _default_glue(G1: Graph, G2: Graph, k: int) -> CliqueSumSpec:
    def cliques(G):
        return [c for c in itertools.combinations(range(G.n_vertices), k + 1)
                if all(G.has_edge(a, b) for a, b in itertools.combinations(c, 2))]
    left, right = cliques(G1), cliques(G2)
    if not left or not right:
        raise NotCoveredError(f"no {k + 1}-clique to glue along")
    return CliqueSumSpec.of(k, zip(left[-1], right[0]))


def _interior_at(G: Graph, alpha: int) -> list[tuple[int, ...]]:
    return [p.x for p in lattice_points_at_degree(G, alpha, interior_only=True)]


def _embed(glued: GluedGraph, G1: Graph, G2: Graph, x1, x2, alpha) -> LatticePoint | None:
    x = [None] * glued.graph.n_edges
    for e, v in zip(glued.left_edge_indices(G1), x1):
        x[e] = v
    for e, v in zip(glued.right_edge_indices(G2), x2):
        if x[e] is not None and x[e] != v:
            return None
        x[e] = v
    return LatticePoint(tuple(x), alpha)


def cliquesum_generator_transfer(G1: Graph, G2: Graph, k: int,
                                 glue: CliqueSumSpec | None = None) -> GeneratorPrediction:
    """Predict a generating system of the interior ideal of a clique-sum from
    the Gorenstein generators of its two pieces.

    Supported: 0-sums of any two Gorenstein pieces (common degree is the
    larger generator degree), 1-sums of a bridgeless chordal piece with a
    bipartite one (shared edge fixed at 2), and sums of two pieces of the
    same Gorenstein type.
    """
    s1, s2 = is_gorenstein_normal(G1), is_gorenstein_normal(G2)
    if not (s1.gorenstein and s2.gorenstein):
        raise NotCoveredError("both pieces must be normal Gorenstein graphs")
    spec = glue if glue is not None else _default_glue(G1, G2, k)
    if spec.k != k:
        raise NotCoveredError("glue map order does not match k")
    glued = clique_sum_detail(G1, G2, spec)
    G = glued.graph
    degree = {"bipartite_no_long_cycle": 2, "bridgeless_chordal": 4}
    d1, d2 = degree[s1.criterion], degree[s2.criterion]

    if s1.criterion == s2.criterion and (k <= 1 or s1.criterion == "bridgeless_chordal"):
        fill = 1 if d1 == 2 else 2
        form = f"({', '.join([str(fill)] * 2)}, ..., {d1})"
        return GeneratorPrediction(glued, form, frozenset({LatticePoint((fill,) * G.n_edges, d1)}))

    if k == 0:
        beta = max(d1, d2)
        pts = set()
        for x1 in _interior_at(G1, beta):
            for x2 in _interior_at(G2, beta):
                pts.add(_embed(glued, G1, G2, x1, x2, beta))
        form = f"(x, y, {beta}) with (x, {beta}) and (y, {beta}) interior in the pieces"
        return GeneratorPrediction(glued, form, frozenset(pts))

    if k == 1:
        chordal_left = s1.criterion == "bridgeless_chordal"
        C, B = (G1, G2) if chordal_left else (G2, G1)
        pts = set()
        for xb in _interior_at(B, 4):
            xc = (2,) * C.n_edges
            pair = (xc, xb) if chordal_left else (xb, xc)
            q = _embed(glued, G1, G2, *pair, 4)
            if q is not None:
                pts.add(q)
        form = "(2, 2, ..., 2, y, 4) with the shared edge at 2 and (2, y, 4) interior in the bipartite piece"
        return GeneratorPrediction(glued, form, frozenset(pts))

    raise NotCoveredError("combination not covered by the 0-sum and 1-sum transfer rules")


def prediction_agrees(pred: GeneratorPrediction, computed: CanonicalGeneratorSet) -> bool:
    """Minimal generators lie in every generating system, and every predicted
    element must itself be an interior group point."""
    G = pred.graph
    if not set(computed.generators) <= pred.points:
        return False
    return all(in_group(G, p) and in_cone(G, p, strict=True) for p in pred.points)
