"""Toolkit for analyzing, sampling, and dismantling covert networks."""

from .errors import (
    ConvergenceError,
    DismantlingError,
    FileFormatError,
    GraphError,
    InfeasibleTargetError,
    PreconditionError,
)
from .graph import (
    LabeledGraph,
    Role,
    connected_components,
    dump_edge_list,
    dump_roles,
    induced_subgraph,
    largest_connected_component,
    load_edge_list,
    load_roles,
    remove_nodes,
)
from .metrics import (
    MetricsReport,
    average_clustering,
    average_degree,
    betweenness,
    degree_centralization,
    density,
    diameter_lcc,
    eigenvector_centrality,
    fragmentation,
    local_clustering,
    mean_betweenness,
    report,
)
from .spectral import (
    SpectralBisection,
    adjacency_matrix,
    bisect,
    cost_matrix,
    crossing_subgraph,
    degree_costs,
    fiedler,
    node_order,
    spectral_bisection,
    weighted_laplacian,
)
from .dismantling import (
    DismantlingTrace,
    RemovalStep,
    StrategySpec,
    gnd,
    hub_strategy,
    random_strategy,
    run_strategy,
    threshold_cost,
    wvc,
)
from .sampling import SamplingConfig, SnowballRun, WaveStats, snowball, snowball_run
from .synthesis import (
    AnnealingSchedule,
    HardConstraints,
    SoftTarget,
    SynthesisTarget,
    load_synthesis_target,
    objective,
    soft_report,
    synthesize_reference,
)
from .reference import (
    build_reference_network,
    chiapas_roster,
    default_chiapas_target,
    reference_network,
    reference_network_path,
)

__version__ = "0.1.0"

__all__ = [
    "AnnealingSchedule",
    "ConvergenceError",
    "DismantlingError",
    "DismantlingTrace",
    "FileFormatError",
    "GraphError",
    "HardConstraints",
    "InfeasibleTargetError",
    "LabeledGraph",
    "MetricsReport",
    "PreconditionError",
    "RemovalStep",
    "Role",
    "SamplingConfig",
    "SnowballRun",
    "SoftTarget",
    "SpectralBisection",
    "StrategySpec",
    "SynthesisTarget",
    "WaveStats",
    "adjacency_matrix",
    "average_clustering",
    "average_degree",
    "betweenness",
    "bisect",
    "build_reference_network",
    "chiapas_roster",
    "connected_components",
    "cost_matrix",
    "crossing_subgraph",
    "default_chiapas_target",
    "degree_centralization",
    "degree_costs",
    "density",
    "diameter_lcc",
    "dump_edge_list",
    "dump_roles",
    "eigenvector_centrality",
    "fiedler",
    "fragmentation",
    "gnd",
    "hub_strategy",
    "induced_subgraph",
    "largest_connected_component",
    "load_edge_list",
    "load_roles",
    "load_synthesis_target",
    "local_clustering",
    "mean_betweenness",
    "node_order",
    "objective",
    "random_strategy",
    "reference_network",
    "reference_network_path",
    "remove_nodes",
    "report",
    "run_strategy",
    "snowball",
    "snowball_run",
    "soft_report",
    "spectral_bisection",
    "synthesize_reference",
    "threshold_cost",
    "weighted_laplacian",
    "wvc",
]
