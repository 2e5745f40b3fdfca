"""Slow, independent reference implementations used to check the library.

Nothing here imports the facet system: cuts come from all vertex subsets,
monoid points from multiset sums, and cone membership from an exact
rational simplex over the generators.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def brute_cuts(n: int, edges) -> set[tuple[int, ...]]:
    out = set()
    for mask in range(1 << n):
        out.add(tuple(int(bool(mask >> u & 1) != bool(mask >> v & 1)) for u, v in edges))
    return out


def brute_induced_cycles(n: int, edges) -> set[frozenset[int]]:
    """Edge-index sets of chordless cycles, found by testing every vertex subset."""
    found = set()
    for size in range(3, n + 1):
        for verts in itertools.combinations(range(n), size):
            vs = set(verts)
            inside = [i for i, (u, v) in enumerate(edges) if u in vs and v in vs]
            if len(inside) != size:
                continue
            deg = {v: 0 for v in verts}
            for i in inside:
                u, v = edges[i]
                deg[u] += 1
                deg[v] += 1
            if any(d != 2 for d in deg.values()):
                continue
            # 2-regular with |V| edges: a single cycle iff connected
            seen, stack = {verts[0]}, [verts[0]]
            while stack:
                a = stack.pop()
                for i in inside:
                    u, v = edges[i]
                    for x, y in ((u, v), (v, u)):
                        if x == a and y not in seen:
                            seen.add(y)
                            stack.append(y)
            if len(seen) == size:
                found.add(frozenset(inside))
    return found


def gf2_rank(vectors) -> int:
    rows = [int("".join(map(str, v)) or "0", 2) for v in vectors]
    rank = 0
    while rows:
        pivot = max(rows)
        if pivot == 0:
            break
        rows.remove(pivot)
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if r >> top & 1 else r for r in rows]
        rank += 1
    return rank


def monoid_points(cuts, alpha: int) -> set[tuple[int, ...]]:
    """All sums of ``alpha`` cut vectors (with repetition), degree appended."""
    cuts = sorted(cuts)
    m = len(cuts[0]) if cuts else 0
    out = set()
    for combo in itertools.combinations_with_replacement(cuts, alpha):
        out.add(tuple(sum(c[e] for c in combo) for e in range(m)) + (alpha,))
    return out


def brute_group(n: int, edges, x) -> bool:
    """x mod 2 must be a cut vector: the cut space is the orthogonal
    complement of the cycle space over GF(2)."""
    return tuple(v % 2 for v in x) in brute_cuts(n, edges)


# -- exact simplex ----------------------------------------------------------

def lp_solve(A, b, c):
    """Maximize ``c.x`` subject to ``A x = b``, ``x >= 0`` in exact arithmetic.

    Returns ``(value, y)``.  ``value`` is ``None`` when infeasible (then ``y``
    is the phase-one dual: ``y.A_j >= 0`` for all ``j`` and ``y.b < 0``),
    ``inf`` when unbounded, otherwise the optimum with ``y`` an optimal dual
    (``y.A_j >= c_j`` and ``y.b`` equal to the optimum).  Callers must verify
    ``y`` before relying on it.  Two phases, Bland's rule.
    """
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    m, n = len(A), len(A[0]) if A else 0
    sign = [1] * m
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
            sign[i] = -1
    # tableau columns: n originals, m artificials, right-hand side
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [b[i]] for i in range(m)]
    basis = [n + i for i in range(m)]

    def pivot(r, col):
        p = T[r][col]
        T[r] = [v / p for v in T[r]]
        for i in range(m):
            if i != r and T[i][col] != 0:
                f = T[i][col]
                T[i] = [a - f * bb for a, bb in zip(T[i], T[r])]
        basis[r] = col

    def dual(cost):
        return [sign[i] * sum(cost[basis[r]] * T[r][n + i] for r in range(m)) for i in range(m)]

    def run(cost, allowed):
        while True:
            enter = None
            for j in allowed:
                rc = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
                if rc > 0:
                    enter = j
                    break
            if enter is None:
                return True
            ratios = [(T[i][-1] / T[i][enter], basis[i], i) for i in range(m) if T[i][enter] > 0]
            if not ratios:
                return False
            _, _, r = min(ratios)
            pivot(r, enter)

    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    run(phase1, range(n + m))
    if sum(T[i][-1] for i in range(m) if basis[i] >= n) != 0:
        return None, dual(phase1)
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if T[i][j] != 0:
                    pivot(i, j)
                    break
    cost = [Fraction(v) for v in c] + [Fraction(0)] * m
    if not run(cost, range(n)):
        return float("inf"), None
    return sum(cost[basis[i]] * T[i][-1] for i in range(m)), dual(cost)


def lp_max(A, b, c):
    return lp_solve(A, b, c)[0]


def _lifted(cuts):
    return [tuple(g) + (1,) for g in sorted(cuts)]


def _dot(y, v):
    return sum(a * b for a, b in zip(y, v))


def rational_cone_member(cuts, p) -> bool:
    gens = _lifted(cuts)
    A = [[g[r] for g in gens] for r in range(len(p))]
    return lp_max(A, p, [0] * len(gens)) is not None


def rational_cone_interior(cuts, p) -> bool:
    """Strictly positive combination of all generators exists (the cone is
    full-dimensional): maximize t with lambda_i = mu_i + t."""
    gens = _lifted(cuts)
    rows = len(p)
    A = [[g[r] for g in gens] + [sum(g[r] for g in gens)] for r in range(rows)]
    best = lp_max(A, p, [0] * len(gens) + [1])
    return best is not None and best > 0


class ConeOracle:
    """Exact cone and interior membership for one graph, with certificate reuse.

    Every answer comes from an exact LP or from a cached certificate that was
    checked against all generators:

    - a multiset sum of cuts is a nonnegative combination (member);
    - ``y`` with ``y.g >= 0`` for every generator and ``y.p < 0`` separates
      ``p`` from the cone (not a member);
    - ``y`` with ``y.g >= 0`` for every generator, ``y.g > 0`` for some, and
      ``y.p == 0`` puts ``p`` on a proper face (not interior).
    """

    def __init__(self, n: int, edges):
        self.cuts = brute_cuts(n, edges)
        self.gens = _lifted(self.cuts)
        self.known: set[tuple[int, ...]] = set()
        self.separators: list[list[Fraction]] = []
        self.faces: list[list[Fraction]] = []
        self.lp_calls = 0

    def add_monoid_points(self, pts):
        self.known |= set(pts)

    def _valid_face(self, y) -> bool:
        vals = [_dot(y, g) for g in self.gens]
        return all(v >= 0 for v in vals) and any(v > 0 for v in vals)

    def member(self, p) -> bool:
        if p in self.known:
            return True
        if any(_dot(y, p) < 0 for y in self.separators):
            return False
        self.lp_calls += 1
        A = [[g[r] for g in self.gens] for r in range(len(p))]
        value, y = lp_solve(A, p, [0] * len(self.gens))
        if value is None:
            if y is not None and _dot(y, p) < 0 and self._valid_face(y):
                self.separators.append(y)
                self.faces.append(y)
            return False
        self.known.add(p)
        return True

    def interior(self, p) -> bool:
        if p[-1] <= 0 or not self.member(p):
            return False
        if any(_dot(y, p) == 0 for y in self.faces):
            return False
        self.lp_calls += 1
        s = [sum(g[r] for g in self.gens) for r in range(len(p))]
        A = [[g[r] for g in self.gens] + [s[r]] for r in range(len(p))]
        value, y = lp_solve(A, p, [0] * len(self.gens) + [1])
        if value is not None and value > 0:
            return True
        if y is not None and _dot(y, p) == 0 and self._valid_face(y):
            self.faces.append(y)
        return False
