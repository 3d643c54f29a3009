"""Exact and approximation algorithms for maximum k-order bounded component sets.

A vertex set S is a *k-component set* of G when every connected component of
the induced subgraph G[S] has at most k vertices; comp_k(G) is the largest
such set. k = 1 gives independent sets, k = 2 dissociation sets.
"""

from .errors import (
    BoundViolation,
    ConfigurationError,
    DomainError,
    KobcsError,
    ParseError,
    PreconditionError,
    SizeGuardError,
    UnsupportedParameterError,
    ValidationError,
)
from .exact import ExactResult, exact_comp_k, exact_weighted
from .feasibility import (
    ComponentPartition,
    IncrementalComponents,
    components,
    is_independent_set,
    is_k_component_set,
)
from .graph import (
    Graph,
    GraphMetrics,
    complete_graph,
    cycle_graph,
    dump_graph,
    dumps_graph,
    gen_gnp,
    induced_subgraph,
    load_graph,
    loads_graph,
    metrics,
    path_graph,
    random_weights,
    read_graph,
    star_graph,
    write_graph,
)
from .greedy import GreedyStep, GreedyTrace, greedy_dissociation, greedy_k
from .harness import ExperimentSpec, GnpFamily, RunRecord, run_experiment, verify
from .local_ratio import LocalRatioResult, WeightDecomposition, local_ratio, local_ratio_k_obcs
from .reductions import (
    ReductionMap,
    compose_to_power,
    double_graph,
    lift_solution,
    lift_through,
    recover_solution,
    recover_through,
    round_to_independent_set,
    truncate_components,
)

__version__ = "0.1.0"
