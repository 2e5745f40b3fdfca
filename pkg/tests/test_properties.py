"""Randomized invariants over small graphs and points."""

import itertools

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from cutlab.geometry import LatticePoint, enumerate_cut_vectors, in_cone, in_group, verify_positive_combination
from cutlab.graphs import (
    CliqueSumSpec,
    build_graph,
    canonical_form,
    clique_sum,
    enumerate_connected_graphs,
    enumerate_induced_cycles,
    has_minor,
    standard_graph,
    structural_predicates,
)
from cutlab.monoid import decompose, is_gorenstein_normal, normality_probe
from cutlab.regularity import regularity

SMALL = list(enumerate_connected_graphs(6))
TINY = list(enumerate_connected_graphs(5))
settings.register_profile("artifact", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("artifact")


@st.composite
def graph_and_point(draw, graphs=TINY, max_alpha=4):
    G = draw(st.sampled_from(graphs))
    alpha = draw(st.integers(0, max_alpha))
    x = draw(st.lists(st.integers(0, alpha), min_size=G.n_edges, max_size=G.n_edges))
    return G, LatticePoint(tuple(x), alpha)


@st.composite
def random_graph(draw, max_n=7):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=len(pairs), unique=True))
    return build_graph(n, chosen)


@given(graph_and_point())
def test_decomposition_is_sound(gp):
    G, p = gp
    d = decompose(G, p)
    if d is not None:
        assert d.total(G) == p and len(d.parts) == p.alpha


@given(graph_and_point())
def test_monoid_points_lie_in_group_and_cone(gp):
    G, p = gp
    if decompose(G, p) is not None:
        assert in_group(G, p) and in_cone(G, p)


@given(graph_and_point())
def test_verified_probe_means_group_and_cone_points_decompose(gp):
    G, p = gp
    assume(in_group(G, p) and in_cone(G, p))
    assert normality_probe(G, 4).verified
    assert decompose(G, p) is not None


@given(st.sampled_from(SMALL), st.data())
def test_positive_combination_implies_interior(G, data):
    cuts = enumerate_cut_vectors(G)
    coeffs = data.draw(st.lists(st.integers(1, 3), min_size=len(cuts), max_size=len(cuts)))
    x = tuple(sum(c * cut.coords[e] for c, cut in zip(coeffs, cuts)) for e in range(G.n_edges))
    p = LatticePoint(x, sum(coeffs))
    assert verify_positive_combination(G, p, coeffs)
    assert in_cone(G, p, strict=True)


@given(random_graph(), st.permutations(range(7)))
def test_canonical_form_invariant_under_relabeling(G, perm):
    perm = [v for v in perm if v < G.n_vertices]
    H = build_graph(G.n_vertices, [(perm[u], perm[v]) for u, v in G.edges])
    assert canonical_form(G) == canonical_form(H)


@given(random_graph())
def test_induced_cycles_are_chordless(G):
    for c in enumerate_induced_cycles(G):
        vs = c.vertices
        k = len(vs)
        assert len(c.edge_indices) == k
        for i, j in itertools.combinations(range(k), 2):
            if (j - i) % k not in (1, k - 1):
                assert not G.has_edge(vs[i], vs[j])


@given(random_graph(6))
def test_ring_graphs_have_no_k4_minor(G):
    if structural_predicates(G).ring_graph:
        assert not has_minor(G, "K4") and not has_minor(G, "K5")


@given(st.sampled_from([standard_graph("cycle", n) for n in (3, 4, 5)] + [standard_graph("path", 2)]),
       st.sampled_from([standard_graph("cycle", n) for n in (3, 4)] + [standard_graph("path", 1)]))
def test_zero_sum_edge_count(G1, G2):
    S = clique_sum(G1, G2, CliqueSumSpec.of(0, {G1.n_vertices - 1: 0}))
    assert S.n_edges == G1.n_edges + G2.n_edges
    assert S.n_vertices == G1.n_vertices + G2.n_vertices - 1


@settings(max_examples=25)
@given(st.sampled_from(TINY))
def test_regularity_identity_and_lower_bound(G):
    rep = regularity(G)
    assert rep.regularity + rep.min_interior_degree == G.n_edges + 1
    assert rep.regularity >= G.n_edges - 3


@settings(max_examples=20)
@given(st.sampled_from(TINY))
def test_gorenstein_means_single_generator(G):
    from cutlab.monoid import canonical_generators
    status = is_gorenstein_normal(G)
    gens = canonical_generators(G).generators
    if status.gorenstein:
        fill, deg = (1, 2) if status.criterion == "bipartite_no_long_cycle" else (2, 4)
        assert gens == (LatticePoint((fill,) * G.n_edges, deg),)
