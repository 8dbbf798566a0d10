"""Faithful DAGs and posets for marginal independence graphs."""

from .census import (
    canonical_form,
    census_connected,
    count_faithful_to_complete,
    count_labeled_posets,
    count_smigs_height1,
)
from .enumeration import (
    DagPattern,
    MinimalPoset,
    faithful_dag_patterns,
    faithful_dags,
    faithful_posets,
    minimal_posets,
    sink_orientations,
    tree_poset,
)
from .exceptions import (
    CapacityError,
    CycleError,
    GraphInputError,
    NotSMIGError,
    NotTriviallyPerfectError,
)
from .graphs import (
    Dag,
    MixedGraph,
    SimplexDecomposition,
    UndirectedGraph,
    complete_graph,
    cycle_graph,
    path_graph,
    simplex_decomposition,
    star_graph,
)
from .io import emit, parse_dag, parse_graph, parse_poset
from .latent import AugmentedDag, CliqueCover, dag_from_cover, edge_clique_cover, hardness_gadget, min_auxiliary_dag
from .posets import Poset, marginal_independence_graph, transitive_closure, transitive_reduction
from .recognition import (
    embed_as_induced_smig,
    has_unique_faithful_dag,
    is_smig,
    is_trivially_perfect,
    sink_graph,
    smig_witness,
)

__version__ = "0.1.0"
