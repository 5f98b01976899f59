"""tvgkit: time-varying graph analytics.

Builds on a presence-interval TVG model: journeys and the three temporal
distances (shortest / foremost / fastest), windowed footprint and
temporal-subgraph sequences, and both atemporal and temporal
social-network indicators evaluated per window.
"""

from .core import (
    Edge,
    Footprint,
    Lifetime,
    PresenceSet,
    TimeVaryingGraph,
    active_nodes,
    build_tvg,
    footprint,
    presence,
    temporal_subgraph,
)
from .journeys import (
    count_minimal_journeys,
    distance_map,
    fastest_distance,
    foremost_distance,
    is_journey,
    shortest_distance,
    temporal_view,
    witness_journey,
)
from .static_metrics import (
    average_clustering,
    average_modularity,
    clustering_coefficient,
    cut_conductance,
    density,
    graph_conductance,
    pair_modularity,
    powerlaw_exponent,
)
from .temporal_metrics import (
    diameter,
    eccentricity,
    eccentricity_report,
    temporal_betweenness,
    temporal_closeness,
    temporal_series,
)
from .trace_io import parse_trace, write_trace
from .synth import generate_trace
from .windows import (
    IndicatorSeries,
    WindowSpec,
    evolve,
    footprint_sequence,
    tvg_sequence,
    windows_of,
)

__version__ = "0.1.0"
