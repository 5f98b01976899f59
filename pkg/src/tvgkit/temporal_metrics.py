"""Journey-based indicators on a time-varying graph.

All indicators take an evaluation time ``t`` and a distance kind
(shortest / foremost / fastest).  Unreachable targets make eccentricities
unbounded (returned as ``math.inf``), contribute 0 to betweenness and are
excluded from closeness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .core import Edge, TimeVaryingGraph, active_nodes, footprint
from .journeys import KINDS, distance_map, minimal_route_counts
from .windows import IndicatorSeries, WindowSpec, tvg_sequence, windows_of

REDUCERS = ("mean", "max", "std")


def _check_kind(kind: str) -> None:
    if kind not in KINDS:
        raise ValueError(f"unknown distance kind {kind!r}")


def eccentricity(
    g: TimeVaryingGraph, u: int, t: int, kind: str, strict: bool = False
) -> float:
    """Max ``kind`` distance from ``u`` to every other node; inf if any is unreachable."""
    _check_kind(kind)
    d = distance_map(g, u, t, kind, strict)
    if len(d) < g.n:
        return math.inf
    if g.n == 1:
        return 0.0
    return float(max(v for x, v in d.items() if x != u))


def diameter(g: TimeVaryingGraph, t: int, kind: str, strict: bool = False) -> float:
    """Max eccentricity over all nodes; inf if any is unbounded."""
    _check_kind(kind)
    worst = 0.0
    for u in range(g.n):
        e = eccentricity(g, u, t, kind, strict)
        if math.isinf(e):
            return math.inf
        worst = max(worst, e)
    return worst


@dataclass
class EccentricityReport:
    """Per-node eccentricities for every distance kind at one instant."""

    t: int
    values: dict[str, dict[int, float]] = field(default_factory=dict)
    reachable_count: dict[int, int] = field(default_factory=dict)

    def unbounded(self, u: int, kind: str) -> bool:
        return math.isinf(self.values[kind][u])


def eccentricity_report(
    g: TimeVaryingGraph, t: int, strict: bool = False
) -> EccentricityReport:
    report = EccentricityReport(t, {k: {} for k in KINDS})
    for u in range(g.n):
        report.reachable_count[u] = len(distance_map(g, u, t, "foremost", strict))
        for kind in KINDS:
            report.values[kind][u] = eccentricity(g, u, t, kind, strict)
    return report


def temporal_betweenness(
    g: TimeVaryingGraph, q: int, t: int, kind: str, strict: bool = False
) -> float:
    """Sum over ordered pairs (u, v) avoiding ``q`` of the fraction of
    minimal routes that use ``q`` as an interior node."""
    _check_kind(kind)
    if t not in g.lifetime:
        raise ValueError(f"t={t} outside lifetime")
    total = 0.0
    for u in range(g.n):
        if u == q:
            continue
        counts = minimal_route_counts(g, u, t, kind, strict, through=q)
        for v, (_, c, cq) in counts.items():
            if v == u or v == q or c == 0:
                continue
            total += cq / c
    return total


def temporal_closeness(
    g: TimeVaryingGraph, u: int, t: int, kind: str, strict: bool = False
) -> float:
    """Mean ``kind`` distance from ``u`` to its reachable nodes; NaN if none."""
    _check_kind(kind)
    d = distance_map(g, u, t, kind, strict)
    others = [v for v in d if v != u]
    if not others:
        return math.nan
    return sum(d[v] for v in others) / len(others)


def _reduce(values: list[float], reducer: str) -> float:
    if reducer not in REDUCERS:
        raise ValueError(f"unknown reducer {reducer!r}")
    finite = [v for v in values if not math.isnan(v)]
    if not finite:
        return math.nan
    if any(math.isinf(v) for v in finite):
        return math.inf
    if reducer == "mean":
        return sum(finite) / len(finite)
    if reducer == "max":
        return max(finite)
    mean = sum(finite) / len(finite)
    return math.sqrt(sum((v - mean) ** 2 for v in finite) / len(finite))


def restrict_nodes(g: TimeVaryingGraph, nodes: list[int]) -> TimeVaryingGraph:
    """TVG induced on ``nodes`` (relabelled densely, in ascending order)."""
    index = {x: i for i, x in enumerate(sorted(set(nodes)))}
    edges = []
    presence = []
    for e, p in zip(g.edges, g.presence):
        if e.u in index and e.v in index:
            edges.append(Edge(index[e.u], index[e.v], e.label))
            presence.append(p)
    return TimeVaryingGraph(len(index), g.directed, g.lifetime, edges, presence)


def _policy_graph(g: TimeVaryingGraph, node_policy: str) -> Optional[TimeVaryingGraph]:
    """Graph whose node set matches the policy, or None when it is empty."""
    if node_policy == "all":
        return g if g.n else None
    if node_policy != "active":
        raise ValueError(f"unknown node policy {node_policy!r}")
    f = footprint(g, g.lifetime.start, g.lifetime.end)
    act = sorted(active_nodes(f))
    if not act:
        return None
    return restrict_nodes(g, act)


def _window_eccentricity(g, t, kind, reducer, node_policy, strict=False) -> float:
    g2 = _policy_graph(g, node_policy)
    if g2 is None:
        return math.nan
    return _reduce(
        [eccentricity(g2, u, t, kind, strict) for u in range(g2.n)], reducer
    )


def _window_diameter(g, t, kind, reducer, node_policy, strict=False) -> float:
    g2 = _policy_graph(g, node_policy)
    if g2 is None or not g2.edges:
        return math.nan
    return diameter(g2, t, kind, strict)


def _window_closeness(g, t, kind, reducer, node_policy, strict=False) -> float:
    g2 = _policy_graph(g, node_policy)
    if g2 is None:
        return math.nan
    return _reduce(
        [temporal_closeness(g2, u, t, kind, strict) for u in range(g2.n)], reducer
    )


def _window_betweenness(g, t, kind, reducer, node_policy, strict=False) -> float:
    g2 = _policy_graph(g, node_policy)
    if g2 is None:
        return math.nan
    return _reduce(
        [temporal_betweenness(g2, q, t, kind, strict) for q in range(g2.n)], reducer
    )


_WINDOW_INDICATORS = {
    "eccentricity": _window_eccentricity,
    "diameter": _window_diameter,
    "closeness": _window_closeness,
    "betweenness": _window_betweenness,
}


def temporal_series(
    g: TimeVaryingGraph,
    spec: WindowSpec,
    indicator: str,
    kind: str = "shortest",
    reducer: str = "mean",
    node_policy: str = "active",
    strict: bool = False,
) -> IndicatorSeries:
    """Evaluate a temporal indicator on each temporal subgraph of the
    window decomposition, at each window's start time."""
    _check_kind(kind)
    if indicator not in _WINDOW_INDICATORS:
        raise ValueError(f"unknown temporal indicator {indicator!r}")
    fn = _WINDOW_INDICATORS[indicator]
    wins = windows_of(g.lifetime, spec)
    values = []
    for sub in tvg_sequence(g, spec):
        v = fn(sub, sub.lifetime.start, kind, reducer, node_policy, strict)
        values.append(v if math.isfinite(v) else math.nan)
    return IndicatorSeries(indicator, wins, values)
