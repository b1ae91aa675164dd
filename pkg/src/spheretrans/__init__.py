"""Simplicial sphere constructions and facet-hypergraph transversals."""

from .complexes import (
    EMPTY,
    Face,
    FVector,
    PseudomanifoldReport,
    PureComplex,
    boundary,
    f_vector,
    face,
    gf2_betti,
    is_closed_pseudomanifold,
    is_cs,
    is_cs_k_neighborly,
    is_k_neighborly,
    join,
    link,
    negate,
    relative_difference,
    simplex,
    sphere_betti_profile,
    union,
)
from .cs_family import (
    EdgeLinkReport,
    cs_ball,
    cs_sphere,
    edge_link_search,
    edge_link_sphere,
)
from .lemmas import LemmaId, LemmaReport, generate_candidates, verify_lemma
from .polytopes import cross_boundary, cyclic_boundary, stacked_sphere
from .squeezed import (
    Antichain,
    PairPattern,
    enumerate_pair_poset,
    neighborly_antichain,
    pattern_leq,
    relative_squeezed_ball,
    relative_squeezed_sphere,
    sew,
    sewing_antichain,
    shift_antichain,
    squeezed_ball,
)
from .transversal import (
    Hypergraph,
    TransversalCertificate,
    exact_transversal,
    explicit_cs_transversal,
    facet_hypergraph,
    greedy_transversal,
    is_transversal,
    matching_lower_bound,
    transversal_ratio,
)

__all__ = [
    "EMPTY",
    "Antichain",
    "EdgeLinkReport",
    "FVector",
    "Face",
    "Hypergraph",
    "LemmaId",
    "LemmaReport",
    "PairPattern",
    "PseudomanifoldReport",
    "PureComplex",
    "TransversalCertificate",
    "boundary",
    "cross_boundary",
    "cs_ball",
    "cs_sphere",
    "cyclic_boundary",
    "edge_link_search",
    "edge_link_sphere",
    "enumerate_pair_poset",
    "exact_transversal",
    "explicit_cs_transversal",
    "f_vector",
    "face",
    "facet_hypergraph",
    "generate_candidates",
    "gf2_betti",
    "greedy_transversal",
    "is_closed_pseudomanifold",
    "is_cs",
    "is_cs_k_neighborly",
    "is_k_neighborly",
    "is_transversal",
    "join",
    "link",
    "matching_lower_bound",
    "neighborly_antichain",
    "negate",
    "pattern_leq",
    "relative_difference",
    "relative_squeezed_ball",
    "relative_squeezed_sphere",
    "sew",
    "sewing_antichain",
    "shift_antichain",
    "simplex",
    "sphere_betti_profile",
    "squeezed_ball",
    "stacked_sphere",
    "transversal_ratio",
    "union",
    "verify_lemma",
]

__version__ = "0.1.0"
