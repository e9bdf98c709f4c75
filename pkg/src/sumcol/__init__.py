"""Lower bounds for the chromatic sum and chromatic number of a graph.

The pipeline computes the stability number, enumerates the maximum
independent sets, measures how many of them can be pairwise disjoint, and
feeds those counts into closed-form bounds obtained from a relaxed
partition problem over color class sizes.
"""

from .bounds import (
    REPORT_SCHEMA,
    BoundReport,
    PipelineConfig,
    choose_s_lower,
    compute_bounds_pipeline,
    lb_chi,
    lbm_sigma,
    sigma_m,
    sigma_m0,
)
from .cache import SolveCache, default_cache_dir
from .fixtures import ReferenceRow, compare_report, get_row, rows_in_tier
from .graph import DimacsError, Graph, parse_dimacs, read_dimacs, write_dimacs
from .instances import (
    can_generate,
    generate,
    insertions_graph,
    myciel_graph,
    mycielskian,
    queen_graph,
)
from .misgraph import MisGraph, alpha_tilde, build_mis_graph, compute_m
from .partitions import (
    BoundParams,
    InfeasibleParamsError,
    IntegerPartition,
    LatticeDag,
    change,
    cost,
    enumerate_admissible,
    is_admissible,
    lattice_dag,
    linewise_add,
    oracle_min,
    predecessors,
    successors,
)
from .stable import (
    AlphaResult,
    Budget,
    EnumerationResult,
    degree_rule_alpha_bar,
    enumerate_maximum_independent_sets,
    greedy_coloring_alpha_bar,
    max_independent_set,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaResult",
    "BoundParams",
    "BoundReport",
    "Budget",
    "DimacsError",
    "EnumerationResult",
    "Graph",
    "InfeasibleParamsError",
    "IntegerPartition",
    "LatticeDag",
    "MisGraph",
    "PipelineConfig",
    "REPORT_SCHEMA",
    "ReferenceRow",
    "SolveCache",
    "alpha_tilde",
    "build_mis_graph",
    "can_generate",
    "change",
    "choose_s_lower",
    "compare_report",
    "compute_bounds_pipeline",
    "compute_m",
    "cost",
    "default_cache_dir",
    "degree_rule_alpha_bar",
    "enumerate_admissible",
    "enumerate_maximum_independent_sets",
    "generate",
    "get_row",
    "greedy_coloring_alpha_bar",
    "insertions_graph",
    "is_admissible",
    "lattice_dag",
    "lb_chi",
    "lbm_sigma",
    "linewise_add",
    "max_independent_set",
    "myciel_graph",
    "mycielskian",
    "oracle_min",
    "parse_dimacs",
    "predecessors",
    "queen_graph",
    "read_dimacs",
    "rows_in_tier",
    "sigma_m",
    "sigma_m0",
    "successors",
    "write_dimacs",
    "__version__",
]
