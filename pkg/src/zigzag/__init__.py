"""Generalized zig-zag products of labeled simple graphs."""

from .graphs import (
    CoverCheck,
    Dart,
    Graph,
    VertexMap,
    boundary,
    check_combinatorial_cover,
    compose,
    darts,
    disjoint_union,
    identity_map,
    induced_dart_map,
    inverse_map,
    is_combinatorial_cover,
    is_connected,
    is_covering_map,
    is_graph_morphism,
    is_isomorphism,
    isoperimetric_ratio,
    make_edge,
)
from .generators import cayley_cyclic, complete, cycle, generate, hypercube, path
from .labeling import (
    HLabeling,
    ImageValencyError,
    LabeledMorphism,
    constant_labeling,
    image_valency,
    is_locally_constant,
    is_strict_morphism,
    is_weak_morphism,
    matching_label_neighborhoods,
    pullback_labeling,
    pushforward_labeling,
    restrict_labeling,
    satisfies_neighbor_reflecting,
    vertex_labeling,
)
from .product import (
    CombinatorialLift,
    CoveringLift,
    EdgeTag,
    ZigZagGraph,
    induced_product_map,
    is_product_isomorphism,
    lift_combinatorial_cover,
    lift_covering,
    lift_pair,
    pi_combinatorial_cover_check,
    product_edge_count_check,
    product_valency_check,
    projection,
    section_subgraphs,
    zigzag_product,
)
from .spectral import (
    MATCH_TOL,
    RESIDUAL_TOL,
    EigenPair,
    SpectrumReport,
    ZeroCertificate,
    adjacency_eigenpairs,
    adjacency_spectrum,
    cover_radius_check,
    descend_eigenvector,
    laplacian_containment_check,
    lift_eigenvector,
    normalized_laplacian_spectrum,
    normalized_radius,
    radius_comparison_check,
)
from .tower import (
    FolnerReport,
    TowerBuild,
    TowerConfig,
    TowerLevel,
    TowerReport,
    build_tower,
    folner_product_check,
    tower_spectrum_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
