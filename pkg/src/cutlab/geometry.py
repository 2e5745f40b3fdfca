"""Cut vectors, the facet system of cut polytopes of K5-minor-free graphs, and
membership tests for the lattice group, the cone and its interior.

Points of the lifted monoid live in ``Z^E x Z``: an edge part ``x`` and a
degree ``alpha``.  The cone over the cut polytope is described by rows
``a . x <= c * alpha``.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .graphs import Graph, cycle_space_basis, edge_in_triangle, enumerate_induced_cycles, find_minor


class K5MinorError(ValueError):
    """The graph has a K5 minor, so no inequality description is available."""

    def __init__(self, branch_sets):
        self.branch_sets = branch_sets
        super().__init__(f"graph has a K5 minor with branch sets {branch_sets}")


@dataclass(frozen=True)
class CutVector:
    subset: frozenset[int]
    coords: tuple[int, ...]


@dataclass(frozen=True)
class LatticePoint:
    x: tuple[int, ...]
    alpha: int

    @classmethod
    def of(cls, values: Sequence[int]) -> "LatticePoint":
        """Build from a flat sequence whose last entry is the degree."""
        vals = [int(v) for v in values]
        if not vals:
            raise ValueError("a lattice point needs at least the degree coordinate")
        return cls(tuple(vals[:-1]), vals[-1])

    @classmethod
    def parse(cls, text: str) -> "LatticePoint":
        return cls.of(t for t in text.replace(" ", "").split(",") if t)

    def as_tuple(self) -> tuple[int, ...]:
        return self.x + (self.alpha,)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(tuple(a + b for a, b in zip(self.x, other.x)), self.alpha + other.alpha)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(tuple(a - b for a, b in zip(self.x, other.x)), self.alpha - other.alpha)

    def scale(self, k: int) -> "LatticePoint":
        return LatticePoint(tuple(k * a for a in self.x), k * self.alpha)

    def __str__(self):
        return "(" + ", ".join(map(str, self.as_tuple())) + ")"


def _check_dim(G: Graph, p: LatticePoint):
    if len(p.x) != G.n_edges:
        raise ValueError(f"point has {len(p.x)} edge coordinates, graph has {G.n_edges} edges")


# -- cut vectors ------------------------------------------------------------

def cut_vector(G: Graph, A) -> CutVector:
    A = frozenset(A)
    if any(not (0 <= v < G.n_vertices) for v in A):
        raise ValueError("subset references a vertex outside the graph")
    if 0 in A:
        A = frozenset(range(G.n_vertices)) - A
    coords = tuple(int((u in A) != (v in A)) for u, v in G.edges)
    return CutVector(A, coords)


def _cut_order_key(n: int, A: frozenset[int]) -> tuple:
    comp = frozenset(range(n)) - A
    # Display the smaller side, or the side holding vertex 0 on ties.
    side = min((A, comp), key=lambda S: (len(S), 0 not in S))
    return len(side), tuple(sorted(side))


@lru_cache(maxsize=4096)
def _cut_vectors(G: Graph) -> tuple[CutVector, ...]:
    n = G.n_vertices
    subsets = [frozenset(c) for r in range(n) for c in itertools.combinations(range(1, n), r)]
    subsets.sort(key=lambda A: _cut_order_key(n, A))
    return tuple(cut_vector(G, A) for A in subsets)


def enumerate_cut_vectors(G: Graph) -> list[CutVector]:
    """All ``2^(n-1)`` cut vectors in canonical order.

    Order: empty cut first, then by the size of the smaller shore and the
    sorted vertices of that shore.  For ``K_n`` this lists the singletons
    before the pairs.
    """
    return list(_cut_vectors(G))


def generator_matrix(G: Graph) -> np.ndarray:
    """Cut vectors as rows of an integer matrix (degree column excluded)."""
    cuts = _cut_vectors(G)
    return np.array([c.coords for c in cuts], dtype=np.int64).reshape(len(cuts), G.n_edges)


# -- facet system -----------------------------------------------------------

@dataclass(frozen=True)
class FacetSystem:
    box_rows: tuple[tuple[int, str], ...]  # (edge, "ge0" | "le_alpha")
    cycle_rows: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]  # (cycle edges, odd F)
    graph_fingerprint: str
    n_edges: int

    def __len__(self):
        return len(self.box_rows) + len(self.cycle_rows)

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        """Each row as ``(a, c)`` meaning ``a . x <= c * alpha``."""
        out = []
        m = self.n_edges
        for e, sense in self.box_rows:
            a = [0] * m
            if sense == "ge0":
                a[e] = -1
                out.append((tuple(a), 0))
            else:
                a[e] = 1
                out.append((tuple(a), 1))
        for cyc, F in self.cycle_rows:
            a = [0] * m
            for e in cyc:
                a[e] = 1 if e in F else -1
            out.append((tuple(a), len(F) - 1))
        return out

    def to_json(self) -> dict:
        box_edges = sorted({e for e, _ in self.box_rows})
        return {
            "box": [{"edge": e} for e in box_edges],
            "cycles": [{"cycle": list(c), "F": list(F)} for c, F in self.cycle_rows],
            "fingerprint": self.graph_fingerprint,
        }


def graph_fingerprint(G: Graph) -> str:
    payload = f"{G.n_vertices}:" + ";".join(f"{u},{v}" for u, v in G.edges)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


@lru_cache(maxsize=4096)
def facet_system(G: Graph) -> FacetSystem:
    """Box rows for triangle-free edges and odd-subset rows for induced cycles."""
    branch = find_minor(G, "K5")
    if branch is not None:
        raise K5MinorError(branch)
    box = []
    for e in range(G.n_edges):
        if not edge_in_triangle(G, e):
            box += [(e, "ge0"), (e, "le_alpha")]
    cyc_rows = []
    for cyc in enumerate_induced_cycles(G):
        edges = tuple(sorted(cyc.edge_indices))
        for r in range(1, len(edges) + 1, 2):
            for F in itertools.combinations(edges, r):
                cyc_rows.append((edges, F))
    return FacetSystem(tuple(box), tuple(cyc_rows), graph_fingerprint(G), G.n_edges)


@lru_cache(maxsize=4096)
def row_arrays(G: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Facet rows as ``(A, c)`` arrays: the cone is ``A x <= c * alpha``."""
    rows = facet_system(G).rows()
    A = np.array([a for a, _ in rows], dtype=np.int64).reshape(len(rows), G.n_edges)
    c = np.array([cc for _, cc in rows], dtype=np.int64)
    return A, c


# -- membership -------------------------------------------------------------

def in_group(G: Graph, p: LatticePoint, order: Sequence[int] | None = None) -> bool:
    """Even sum over every cycle; checking a cycle basis suffices over GF(2)."""
    _check_dim(G, p)
    return all(sum(p.x[e] for e in c.edge_indices) % 2 == 0 for c in cycle_space_basis(G, order))


def in_cone(G: Graph, p: LatticePoint, strict: bool = False) -> bool:
    """Membership in the cone over the cut polytope (its interior if ``strict``)."""
    _check_dim(G, p)
    fs = facet_system(G)
    if strict and p.alpha <= 0 or p.alpha < 0:
        return False
    for a, c in fs.rows():
        lhs = sum(ai * xi for ai, xi in zip(a, p.x))
        if lhs > c * p.alpha or strict and lhs == c * p.alpha:
            return False
    return True


def verify_positive_combination(G: Graph, p: LatticePoint, coeffs: Sequence) -> bool:
    """True iff ``p`` equals ``sum coeffs[i] * (cut_i, 1)`` with every coefficient > 0.

    All cut vectors together span the full-dimensional cone, so a strictly
    positive combination certifies an interior point for any graph.
    """
    _check_dim(G, p)
    cuts = _cut_vectors(G)
    if len(coeffs) != len(cuts):
        raise ValueError(f"expected {len(cuts)} coefficients, got {len(coeffs)}")
    q = [Fraction(c) for c in coeffs]
    if any(c <= 0 for c in q):
        return False
    if sum(q) != p.alpha:
        return False
    for e in range(G.n_edges):
        if sum(c for c, cut in zip(q, cuts) if cut.coords[e]) != p.x[e]:
            return False
    return True


# -- lattice points ---------------------------------------------------------

def _parity_checks(G: Graph) -> dict[int, list[list[int]]]:
    """Basis cycles keyed by their largest edge index (when they become checkable)."""
    checks: dict[int, list[list[int]]] = {}
    for c in cycle_space_basis(G):
        idx = sorted(c.edge_indices)
        checks.setdefault(idx[-1], []).append(idx)
    return checks


def work_dtype(G: Graph, alpha: int):
    """Narrowest integer type that holds every row sum at this degree."""
    A, c = row_arrays(G)
    reach = (int(np.abs(A).sum(axis=1).max(initial=0)) + int(np.abs(c).max(initial=0)) + 2) * (alpha + 1)
    return np.int16 if reach < 2**15 else np.int64


def _points_with_first(G: Graph, alpha: int, interior: bool, first: int) -> np.ndarray:
    m = G.n_edges
    dt = work_dtype(G, alpha)
    A, c = (arr.astype(dt) for arr in row_arrays(G))
    lo, hi = (1, alpha - 1) if interior else (0, alpha)
    bound = c * alpha - (1 if interior else 0)
    # Least possible contribution of coordinates j+1.. to each row.
    per_coord = np.minimum(A * lo, A * hi)
    tail = np.zeros((m + 1, A.shape[0]), dtype=dt)
    for j in range(m - 1, -1, -1):
        tail[j] = tail[j + 1] + per_coord[:, j]
    parity = _parity_checks(G)
    values = np.arange(lo, hi + 1, dtype=dt)

    pts = np.full((1, 1), first, dtype=dt)
    sums = A[:, 0][None, :] * first
    j = 0
    while True:
        keep = np.all(sums + tail[j + 1] <= bound, axis=1)
        for idx in parity.get(j, ()):
            keep &= pts[:, idx].sum(axis=1) % 2 == 0
        pts, sums = pts[keep], sums[keep]
        j += 1
        if j == m or len(pts) == 0:
            return pts.astype(np.int64)
        n = len(pts)
        k = len(values)
        pts = np.hstack([np.repeat(pts, k, axis=0), np.tile(values, n)[:, None]])
        sums = np.repeat(sums, k, axis=0) + np.tile(values, n)[:, None] * A[:, j][None, :]


def lattice_point_chunks(G: Graph, alpha: int, interior_only: bool = False) -> Iterator[np.ndarray]:
    """Group-and-cone lattice points at degree ``alpha`` as arrays of edge parts.

    One chunk per value of the first edge coordinate, so chunks can be
    consumed independently.
    """
    if alpha < 0:
        return
    facet_system(G)
    if G.n_edges == 0:
        if alpha > 0 or not interior_only:
            yield np.zeros((1, 0), dtype=np.int64)
        return
    lo, hi = (1, alpha - 1) if interior_only else (0, alpha)
    for first in range(lo, hi + 1):
        chunk = _points_with_first(G, alpha, interior_only, first)
        if len(chunk):
            yield chunk


def lattice_points_at_degree(G: Graph, alpha: int, interior_only: bool = False) -> Iterator[LatticePoint]:
    """Stream all points of the group in the cone (interior if asked) at degree ``alpha``.

    Coordinates are fixed one edge at a time inside ``0 <= x_e <= alpha``,
    pruning any row that can no longer be satisfied and any basis cycle
    whose parity is already odd.
    """
    for chunk in lattice_point_chunks(G, alpha, interior_only):
        for row in chunk.tolist():
            yield LatticePoint(tuple(row), alpha)


def count_lattice_points(G: Graph, alpha: int, interior_only: bool = False) -> int:
    return sum(len(ch) for ch in lattice_point_chunks(G, alpha, interior_only))
