"""Enumeration of minimal dominating sets of chordal graphs with polynomial
delay and polynomial space, guided by a clique tree."""

from .graph import (
    BRUTE_FORCE_LIMIT,
    Graph,
    VertexSet,
    brute_force_minimal_dominating_sets,
    build_graph,
    closed_neighborhood,
    closed_neighborhood_of_set,
    greedy_minimal_dominating_set,
    induced_subgraph,
    is_dominating,
    is_irredundant,
    is_minimal_dominating,
    private_neighbors,
)
from .clique_tree import (
    CliqueTree,
    CliqueTreeError,
    NotChordal,
    NotChordalError,
    build_clique_tree,
    build_clique_tree_from_spec,
    home_cliques,
    is_antichain,
    is_partial_antichain,
    l_prime_set,
    l_set,
    maximal_cliques,
    recognize_chordal,
    reroot,
    subproblem,
    top_antichain,
    uncov,
    up_set,
)
from .extension import (
    EnumContext,
    PrivateWitness,
    c_star_high,
    c_star_low,
    is_extendable,
    is_safe_private,
    is_safe_vertex,
    private_witness,
    q_set,
)
from .enumeration import (
    EnumerationStats,
    enum_antichains,
    enum_combinations,
    enum_k_extensions,
    enum_minimal_dominating_sets,
    iter_minimal_dominating_sets,
)
from .delay import DelayProfile, profile_delays
from .generators import (
    CnfFormula,
    GadgetInstance,
    assignments_from_solution,
    make_cnf,
    random_chordal,
    sat_gadget,
    split_double,
    truth_table_satisfying,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "1.0.0"
