"""Graph burning toolkit.

Simulation and verification of burning schedules, exact burning number
search, grid bounds with a factor-2 heuristic burner, a solver for the
distinct 3-partition problem, and the reductions that tie the two
problems together on interval and permutation graphs.
"""

from __future__ import annotations

from .burning import (
    BurnOutcome,
    BurningSchedule,
    assert_agreement,
    clusters,
    greedy_burn,
    read_schedule,
    simulate,
    verify_schedule,
    write_schedule,
)
from .errors import (
    BudgetExceededError,
    BurnkitError,
    ExtractionError,
    GraphError,
    InputError,
    InstanceError,
    NotOptimalShapedError,
    ScheduleError,
)
from .exact import ExactResult, can_burn_in, exact_burning_number
from .graph import (
    Graph,
    IntervalRepresentation,
    PathDecoration,
    bfs_distances,
    ball,
    build_comb,
    build_grid,
    build_interval_graph,
    build_path,
    build_path_forest,
    build_permutation_graph,
    connected_components,
    is_connected,
    longest_shortest_path,
    radical_center,
    read_graph,
    read_intervals,
    write_graph,
    write_intervals,
)
from .grid import (
    GridBurnReport,
    GridSpec,
    burn_grid_2approx,
    grid_lower_bound,
    max_burnable,
    subgrid_dims,
    upper_bound_formula,
)
from .interval_reduction import (
    DerivedSets,
    IntervalArtifact,
    SpineSegment,
    construct_ig,
    derive_sets,
    partition_to_schedule,
    schedule_to_partition,
)
from .partition import (
    Partition3,
    ThreePartitionInstance,
    read_instance,
    solve_3partition,
    validate_instance,
    verify_partition,
    write_instance,
)
from .permutation_reduction import (
    PermutationArtifact,
    ValueSegment,
    construct_px,
    forest_permutation,
    partition_to_schedule_pg,
    path_permutation,
    read_permutation,
    schedule_to_partition_pg,
    write_permutation,
)

__all__ = [
    "BudgetExceededError",
    "BurnOutcome",
    "BurningSchedule",
    "BurnkitError",
    "DerivedSets",
    "ExactResult",
    "ExtractionError",
    "Graph",
    "GraphError",
    "GridBurnReport",
    "GridSpec",
    "InputError",
    "InstanceError",
    "IntervalArtifact",
    "IntervalRepresentation",
    "NotOptimalShapedError",
    "Partition3",
    "PathDecoration",
    "PermutationArtifact",
    "ScheduleError",
    "SpineSegment",
    "ThreePartitionInstance",
    "ValueSegment",
    "assert_agreement",
    "ball",
    "bfs_distances",
    "build_comb",
    "build_grid",
    "build_interval_graph",
    "build_path",
    "build_path_forest",
    "build_permutation_graph",
    "burn_grid_2approx",
    "can_burn_in",
    "clusters",
    "connected_components",
    "construct_ig",
    "construct_px",
    "derive_sets",
    "exact_burning_number",
    "forest_permutation",
    "greedy_burn",
    "grid_lower_bound",
    "is_connected",
    "longest_shortest_path",
    "max_burnable",
    "partition_to_schedule",
    "partition_to_schedule_pg",
    "path_permutation",
    "radical_center",
    "read_graph",
    "read_instance",
    "read_intervals",
    "read_permutation",
    "read_schedule",
    "schedule_to_partition",
    "schedule_to_partition_pg",
    "simulate",
    "solve_3partition",
    "subgrid_dims",
    "upper_bound_formula",
    "validate_instance",
    "verify_partition",
    "verify_schedule",
    "write_graph",
    "write_instance",
    "write_intervals",
    "write_permutation",
    "write_schedule",
]
