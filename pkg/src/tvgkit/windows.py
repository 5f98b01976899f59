"""Window decomposition of a TVG lifetime and windowed indicator series.

The lifetime is cut into consecutive (or sliding) half-open windows; each
window yields either a footprint (for atemporal indicators) or a temporal
subgraph (for journey-based indicators), and an indicator evaluated per
window produces a time series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    Footprint,
    Lifetime,
    TimeVaryingGraph,
    footprint,
    temporal_subgraph,
)

Window = tuple[int, int]


@dataclass(frozen=True)
class WindowSpec:
    """Length/stride decomposition of a lifetime.

    ``stride == length`` gives a disjoint partition; ``stride < length``
    gives overlapping (sliding) windows.  ``align`` defaults to the
    lifetime start.
    """

    length: int
    stride: Optional[int] = None
    align: Optional[int] = None

    def __post_init__(self):
        if self.length <= 0:
            raise ValueError(f"window length must be positive, got {self.length}")
        stride = self.length if self.stride is None else self.stride
        if stride <= 0:
            raise ValueError(f"window stride must be positive, got {stride}")
        if stride > self.length:
            raise ValueError(
                f"stride {stride} > length {self.length} would leave gaps"
            )
        object.__setattr__(self, "stride", stride)


@dataclass
class IndicatorSeries:
    """Named per-window indicator values; NaN marks undefined-in-window."""

    name: str
    windows: list[Window]
    values: list[float] = field(default_factory=list)

    def __post_init__(self):
        if len(self.windows) != len(self.values):
            raise ValueError("windows and values differ in length")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(zip(self.windows, self.values))


def windows_of(lifetime: Lifetime, spec: WindowSpec) -> list[Window]:
    """Windows covering the lifetime; the tail window is clipped, not dropped."""
    align = lifetime.start if spec.align is None else spec.align
    if align > lifetime.start:
        raise ValueError(
            f"align {align} after lifetime start {lifetime.start} would leave a gap"
        )
    out: list[Window] = []
    s = align
    while s < lifetime.end:
        out.append((s, min(s + spec.length, lifetime.end)))
        if out[-1][1] >= lifetime.end:
            break
        s += spec.stride
    return out


def footprint_sequence(
    g: TimeVaryingGraph, spec: WindowSpec, node_policy: str = "active"
) -> list[Footprint]:
    """One footprint per window; under ``active`` the node universe of each
    footprint is restricted to nodes with at least one adjacent edge."""
    if node_policy not in ("all", "active"):
        raise ValueError(f"unknown node policy {node_policy!r}")
    seq = []
    for a, b in windows_of(g.lifetime, spec):
        f = footprint(g, a, b)
        if node_policy == "active":
            f = f.restrict_to_active()
        seq.append(f)
    return seq


def tvg_sequence(g: TimeVaryingGraph, spec: WindowSpec) -> list[TimeVaryingGraph]:
    """One temporal subgraph per window."""
    return [temporal_subgraph(g, a, b) for a, b in windows_of(g.lifetime, spec)]


#: static indicator name -> callable(Footprint) -> float
STATIC_INDICATORS = {}
#: temporal indicator name -> callable(tvg, t, kind, reducer, node_policy) -> float
TEMPORAL_INDICATORS = {}


def _load_registries():
    # populated lazily to avoid a module import cycle with the metric modules
    if STATIC_INDICATORS:
        return
    from . import static_metrics as sm
    from . import temporal_metrics as tm

    STATIC_INDICATORS.update(
        {
            "density": sm.density,
            "avg_clustering": sm.average_clustering,
            "avg_modularity": sm.average_modularity,
            "powerlaw": lambda f: sm.powerlaw_exponent(sm.degree_sequence(f)),
            "conductance": lambda f: sm.graph_conductance(f, approximate=True).value,
        }
    )
    TEMPORAL_INDICATORS.update(
        {
            "diameter": tm._window_diameter,
            "eccentricity": tm._window_eccentricity,
            "closeness": tm._window_closeness,
            "betweenness": tm._window_betweenness,
        }
    )


def indicator_names() -> list[str]:
    _load_registries()
    return sorted(STATIC_INDICATORS) + sorted(TEMPORAL_INDICATORS)


def evolve(
    g: TimeVaryingGraph,
    spec: WindowSpec,
    indicator: str,
    node_policy: str = "active",
    kind: str = "shortest",
    reducer: str = "mean",
    strict: bool = False,
) -> IndicatorSeries:
    """Evaluate one named indicator per window.

    Static indicators run on footprints, temporal ones on temporal
    subgraphs (evaluated at the window start).  Windows where the
    indicator is undefined yield NaN.
    """
    _load_registries()
    wins = windows_of(g.lifetime, spec)
    values: list[float] = []
    if indicator in STATIC_INDICATORS:
        fn = STATIC_INDICATORS[indicator]
        for f in footprint_sequence(g, spec, node_policy):
            try:
                values.append(float(fn(f)))
            except ValueError:
                values.append(math.nan)
    elif indicator in TEMPORAL_INDICATORS:
        fn = TEMPORAL_INDICATORS[indicator]
        for sub in tvg_sequence(g, spec):
            v = fn(sub, sub.lifetime.start, kind, reducer, node_policy, strict)
            values.append(v if math.isfinite(v) else math.nan)
    else:
        raise ValueError(f"unknown indicator {indicator!r}")
    return IndicatorSeries(indicator, wins, values)
