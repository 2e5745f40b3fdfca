"""Cut polytopes of graphs and the affine monoids of their lattice points."""

from .graphs import (
    CliqueSumSpec,
    Cycle,
    Graph,
    GraphError,
    build_graph,
    canonical_form,
    clique_sum,
    cycle_space_basis,
    enumerate_connected_graphs,
    enumerate_induced_cycles,
    find_minor,
    has_minor,
    is_ring_graph,
    read_edge_list,
    standard_graph,
    structural_predicates,
)
from .geometry import (
    CutVector,
    FacetSystem,
    K5MinorError,
    LatticePoint,
    enumerate_cut_vectors,
    facet_system,
    in_cone,
    in_group,
    lattice_points_at_degree,
    verify_positive_combination,
)
from .monoid import (
    NormalityVerdict,
    NotCoveredError,
    NotNormalError,
    SeminormalityWitness,
    canonical_generators,
    cliquesum_generator_transfer,
    decompose,
    is_gorenstein_normal,
    k5_witness,
    min_interior_degree,
    normality_probe,
    verify_seminormality_witness,
)
from .regularity import RegularityReport, bounds_check, classify_small, expected_regularity, regularity
