"""Σ-coloring of graphs with neighborhood systems.

A neighborhood system Σ picks a subset Σ(v) of the ball of radius ``depth``
around every vertex v; a Σ-coloring gives distinct colors to the members of
every Σ(v).  Equivalently it is a proper coloring of the auxiliary graph
G_Σ, in which u ~ v whenever some Σ(w) contains both.
"""

from .arrangeability import (
    ArrangeabilityCertificate,
    arrangeability_exact,
    arrangeability_of_ordering,
    heuristic_ordering,
)
from .coloring import (
    choosability_check,
    in_arc_graph,
    is_sigma_valid,
    pair_systems,
    sigma_chromatic_exact,
    sigma_chromatic_with_witness,
    sigma_color_greedy,
    sigma_color_product,
    sigma_color_via_star,
)
from .errors import (
    CliqueTooSmall,
    InstanceTooLarge,
    ListExhausted,
    NotASigmaClique,
    NotAStarColoring,
    ParseError,
    PathTooLong,
    SamplingBudgetExhausted,
    SigmaColorError,
    TooFewVertices,
    ValidationError,
    WrongDepth,
    WrongRho,
)
from .families import (
    Embedding,
    Instance,
    encode_depth_d_system,
    gen_random_instance,
    gen_star_example,
    gen_subdivided_biclique,
    gen_subdivided_clique,
    gen_subdivision,
)
from .flow import max_density, maximum_average_degree
from .graph import (
    Coloring,
    Graph,
    Ordering,
    chromatic_number_exact,
    clique_number_exact,
    degeneracy_ordering,
    greedy_coloring,
    is_proper,
    neighborhood_at_depth,
)
from .hypergraph import (
    FullHypergraph,
    extract_rank2_subhypergraph,
    extract_subdivided_clique,
    is_rank2_full_on,
    is_sigma_clique,
    is_subdivided_clique,
    omega_sigma,
    random_full_hypergraph,
    sigma_clique_to_hypergraph,
)
from .sigma import (
    NeighborhoodSystem,
    Realizer,
    build_sigma_graph,
    default_realizer,
    mad_sigma,
    realizer_complexity,
    rho,
    sigma_witnesses,
)
from .star import (
    InOrientation,
    ListAssignment,
    acyclic_chromatic_exact,
    greedy_star_coloring,
    in_orientation_exists,
    is_star_coloring,
    orientation_from_star_coloring,
    star_chromatic_exact,
    verify_in_orientation,
)

__version__ = "0.1.0"

__all__ = [
    "acyclic_chromatic_exact",
    "arrangeability_exact",
    "arrangeability_of_ordering",
    "ArrangeabilityCertificate",
    "build_sigma_graph",
    "choosability_check",
    "chromatic_number_exact",
    "clique_number_exact",
    "CliqueTooSmall",
    "Coloring",
    "default_realizer",
    "degeneracy_ordering",
    "Embedding",
    "encode_depth_d_system",
    "extract_rank2_subhypergraph",
    "extract_subdivided_clique",
    "FullHypergraph",
    "gen_random_instance",
    "gen_star_example",
    "gen_subdivided_biclique",
    "gen_subdivided_clique",
    "gen_subdivision",
    "Graph",
    "greedy_coloring",
    "greedy_star_coloring",
    "heuristic_ordering",
    "in_arc_graph",
    "in_orientation_exists",
    "InOrientation",
    "Instance",
    "InstanceTooLarge",
    "is_proper",
    "is_rank2_full_on",
    "is_sigma_clique",
    "is_sigma_valid",
    "is_star_coloring",
    "is_subdivided_clique",
    "ListAssignment",
    "ListExhausted",
    "mad_sigma",
    "max_density",
    "maximum_average_degree",
    "neighborhood_at_depth",
    "NeighborhoodSystem",
    "NotASigmaClique",
    "NotAStarColoring",
    "omega_sigma",
    "Ordering",
    "orientation_from_star_coloring",
    "pair_systems",
    "ParseError",
    "PathTooLong",
    "random_full_hypergraph",
    "Realizer",
    "realizer_complexity",
    "rho",
    "SamplingBudgetExhausted",
    "sigma_chromatic_exact",
    "sigma_chromatic_with_witness",
    "sigma_clique_to_hypergraph",
    "sigma_color_greedy",
    "sigma_color_product",
    "sigma_color_via_star",
    "sigma_witnesses",
    "SigmaColorError",
    "star_chromatic_exact",
    "TooFewVertices",
    "ValidationError",
    "verify_in_orientation",
    "WrongDepth",
    "WrongRho",
]
