"""cyclord: partial cyclic orders as oriented 3-hypergraphs.

Canonical representations, the transitivity rule and axiom checks, links
and linear-permutation graphs, cyclic-permutation hypergraphs with
constructive recovery, transitive-orientation solving, total-extendability
deciders, and an exhaustive small-size census backing every structural
claim by brute force.
"""

from .core import (
    FORWARD,
    BACKWARD,
    Orientation,
    OrientedThreeHypergraph,
    OrientedTriple,
    UnorientedThreeHypergraph,
    all_supports,
    are_isomorphic,
    build_tt,
    canonical_oriented_triple,
    complement_in_tt,
    complement_unoriented,
    induced_sub,
)
from .axioms import (
    AxiomReport,
    TernaryRelationInput,
    TransitivityViolation,
    axiom_report,
    evenness_violations,
    is_self_transitive,
    is_transitive_pair_rule,
    is_transitive_quadruple_local,
    normalize_relation,
)
from .links import (
    OrientedGraph,
    graph_is_self_transitive,
    graph_is_transitive,
    graph_of_linear_perm,
    linear_perm_from_graph,
    link_of,
)
from .perms import (
    CyclicPermutation,
    all_cyclic_permutations,
    hypergraph_of_cyclic_perm,
    hypertournament_of_cyclic_perm,
    induces_edge,
    is_clockwise,
    recover_cyclic_perm,
    reverse_cyclic_perm,
)
from .solver import (
    SolverStats,
    enumerate_transitive_orientations,
    find_transitive_orientation,
    is_cyclic_permutation_hypergraph,
    union_check_tt,
)
from .extend import (
    enumerate_cyclic_extensions,
    extend_exact,
    extend_sufficient,
    hypertournament_to_cyclic_ordering,
)
from .census import (
    CensusRecord,
    compute_oriented_flags,
    compute_unoriented_flags,
    enumerate_instances,
    run_census,
)
from . import errors

__version__ = "0.1.0"
