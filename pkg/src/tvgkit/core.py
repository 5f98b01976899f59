"""Core time-varying graph model.

A time-varying graph (TVG) is a node set plus a collection of edges, each
carrying a presence set: the sub-intervals of the graph lifetime during
which the edge exists.  Time is measured in integer ticks whose unit is the
caller's convention (seconds, days, ...).  All intervals are half-open
``[a, b)``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class Lifetime:
    """Half-open time span ``[start, end)`` of a system."""

    start: int
    end: int

    def __post_init__(self):
        if self.start >= self.end:
            raise ValueError(f"empty lifetime [{self.start}, {self.end})")

    def __contains__(self, t: int) -> bool:
        return self.start <= t < self.end

    @property
    def length(self) -> int:
        return self.end - self.start


@dataclass(frozen=True)
class Edge:
    """Edge endpoints plus an optional opaque label distinguishing parallel edges."""

    u: int
    v: int
    label: Optional[str] = None


class PresenceSet:
    """Sorted, disjoint, non-adjacent half-open integer intervals.

    Supports O(log k) membership and next/previous presence-time queries.
    """

    __slots__ = ("_starts", "_ends")

    def __init__(self, intervals: Iterable[tuple[int, int]]):
        merged: list[list[int]] = []
        for a, b in sorted(intervals):
            if a >= b:
                raise ValueError(f"empty interval [{a}, {b})")
            if merged and a <= merged[-1][1]:  # overlap or adjacency: merge
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        self._starts = [a for a, _ in merged]
        self._ends = [b for _, b in merged]

    @property
    def intervals(self) -> list[tuple[int, int]]:
        return list(zip(self._starts, self._ends))

    def __bool__(self) -> bool:
        return bool(self._starts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PresenceSet)
            and self._starts == other._starts
            and self._ends == other._ends
        )

    def __hash__(self):
        return hash((tuple(self._starts), tuple(self._ends)))

    def __repr__(self):
        body = " u ".join(f"[{a},{b})" for a, b in self.intervals)
        return f"PresenceSet({body or 'empty'})"

    def __contains__(self, t: int) -> bool:
        i = bisect.bisect_right(self._starts, t) - 1
        return i >= 0 and t < self._ends[i]

    def next_at_or_after(self, t: int) -> Optional[int]:
        """Smallest present instant >= t, or None."""
        i = bisect.bisect_right(self._starts, t) - 1
        if i >= 0 and t < self._ends[i]:
            return t
        if i + 1 < len(self._starts):
            return self._starts[i + 1]
        return None

    def latest_at_or_before(self, t: int) -> Optional[int]:
        """Largest present instant <= t, or None."""
        i = bisect.bisect_right(self._starts, t) - 1
        if i < 0:
            return None
        if t < self._ends[i]:
            return t
        return self._ends[i] - 1

    def clip(self, a: int, b: int) -> "PresenceSet":
        """Intersection with the window ``[a, b)``."""
        out = []
        lo = bisect.bisect_right(self._ends, a)
        for i in range(lo, len(self._starts)):
            if self._starts[i] >= b:
                break
            out.append((max(self._starts[i], a), min(self._ends[i], b)))
        return PresenceSet(out)

    def intersects(self, a: int, b: int) -> bool:
        i = bisect.bisect_right(self._ends, a)
        return i < len(self._starts) and self._starts[i] < b


class TimeVaryingGraph:
    """Immutable TVG: node count, edge list, and one presence set per edge."""

    def __init__(
        self,
        n: int,
        directed: bool,
        lifetime: Lifetime,
        edges: Sequence[Edge],
        presence: Sequence[PresenceSet],
    ):
        if len(edges) != len(presence):
            raise ValueError("edges and presence lists differ in length")
        for e, p in zip(edges, presence):
            for a, b in p.intervals:
                if a < lifetime.start or b > lifetime.end:
                    raise ValueError(
                        f"interval [{a},{b}) of edge ({e.u},{e.v}) outside lifetime"
                    )
        self.n = n
        self.directed = directed
        self.lifetime = lifetime
        self.edges = tuple(edges)
        self.presence = tuple(presence)
        # out-adjacency (both directions for undirected) and in-adjacency
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        radj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for i, e in enumerate(self.edges):
            adj[e.u].append((i, e.v))
            radj[e.v].append((i, e.u))
            if not directed:
                adj[e.v].append((i, e.u))
                radj[e.u].append((i, e.v))
        self._adj = adj
        self._radj = radj

    def out_edges(self, u: int) -> list[tuple[int, int]]:
        """(edge index, neighbor) pairs usable when standing at ``u``."""
        return self._adj[u]

    def in_edges(self, v: int) -> list[tuple[int, int]]:
        return self._radj[v]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TimeVaryingGraph)
            and self.n == other.n
            and self.directed == other.directed
            and self.lifetime == other.lifetime
            and sorted(zip(self.edges, self.presence), key=_edge_key)
            == sorted(zip(other.edges, other.presence), key=_edge_key)
        )

    def __repr__(self):
        kind = "directed" if self.directed else "undirected"
        return (
            f"TimeVaryingGraph(n={self.n}, {kind}, "
            f"lifetime=[{self.lifetime.start},{self.lifetime.end}), "
            f"{len(self.edges)} edges)"
        )


def _edge_key(item):
    e, p = item
    return (e.u, e.v, e.label or "", tuple(p.intervals))


class Footprint:
    """Static aggregation of a TVG over a window ``[t1, t2)``.

    ``nodes`` is the node universe used as |V| by the indicator formulas;
    it is the full node set by default and may be restricted to active
    nodes (see :meth:`restrict_to_active`).
    """

    def __init__(
        self,
        nodes: Iterable[int],
        directed: bool,
        edges: Iterable[tuple[int, int]],
        window: tuple[int, int],
    ):
        self.nodes = tuple(sorted(set(nodes)))
        self.directed = directed
        if directed:
            self.edges = frozenset(edges)
        else:
            self.edges = frozenset(
                (u, v) if u < v else (v, u) for u, v in edges
            )
        self.window = window
        self._degree: Optional[dict[int, int]] = None
        self._neighbors: Optional[dict[int, set[int]]] = None

    @property
    def num_nodes(self) -> int:
        return len(self.nodes)

    @property
    def num_edges(self) -> int:
        """Edge count: directed arcs, or undirected edges (each once)."""
        return len(self.edges)

    def undirected_edges(self) -> frozenset[tuple[int, int]]:
        """Underlying simple undirected edge set."""
        if not self.directed:
            return self.edges
        return frozenset((u, v) if u < v else (v, u) for u, v in self.edges)

    def degree(self, x: int) -> int:
        return self.degrees().get(x, 0)

    def degrees(self) -> dict[int, int]:
        """Undirected-view degree per node of the universe (in+out summed when directed)."""
        if self._degree is None:
            d = {x: 0 for x in self.nodes}
            for u, v in self.undirected_edges():
                if u in d:
                    d[u] += 1
                if v in d:
                    d[v] += 1
            self._degree = d
        return self._degree

    def neighbors(self, x: int) -> set[int]:
        if self._neighbors is None:
            nb: dict[int, set[int]] = {y: set() for y in self.nodes}
            for u, v in self.undirected_edges():
                if u in nb:
                    nb[u].add(v)
                if v in nb:
                    nb[v].add(u)
            self._neighbors = nb
        return self._neighbors[x]

    def restrict_to_active(self) -> "Footprint":
        """Footprint whose node universe is its active-node set."""
        return Footprint(active_nodes(self), self.directed, self.edges, self.window)

    def __eq__(self, other):
        return (
            isinstance(other, Footprint)
            and self.nodes == other.nodes
            and self.directed == other.directed
            and self.edges == other.edges
            and self.window == other.window
        )

    def __repr__(self):
        a, b = self.window
        return (
            f"Footprint([{a},{b}), {len(self.nodes)} nodes, "
            f"{len(self.edges)} edges)"
        )


def build_tvg(
    n: int,
    directed: bool,
    lifetime: Lifetime,
    events: Iterable[tuple],
) -> TimeVaryingGraph:
    """Build a TVG from ``(u, v, a, b[, label])`` contact events.

    Overlapping and adjacent intervals of the same (u, v, label) edge are
    unioned; for undirected graphs endpoints are canonicalized to u < v.
    """
    by_edge: dict[tuple[int, int, Optional[str]], list[tuple[int, int]]] = {}
    for rec in events:
        if len(rec) == 4:
            u, v, a, b = rec
            label = None
        elif len(rec) == 5:
            u, v, a, b, label = rec
        else:
            raise ValueError(f"malformed event record {rec!r}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"node id out of range in event {rec!r}")
        if u == v:
            raise ValueError(f"self-loop rejected in event {rec!r}")
        if a >= b:
            raise ValueError(f"empty or inverted interval in event {rec!r}")
        if a < lifetime.start or b > lifetime.end:
            raise ValueError(f"event outside lifetime in event {rec!r}")
        if not directed and u > v:
            u, v = v, u
        by_edge.setdefault((u, v, label), []).append((a, b))
    edges = []
    presence = []
    for (u, v, label), ivals in sorted(
        by_edge.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2] or "")
    ):
        edges.append(Edge(u, v, label))
        presence.append(PresenceSet(ivals))
    return TimeVaryingGraph(n, directed, lifetime, edges, presence)


def presence(g: TimeVaryingGraph, e: int, t: int) -> bool:
    """Whether edge ``e`` (by index) is present at instant ``t``."""
    if t not in g.lifetime:
        raise ValueError(f"t={t} outside lifetime")
    return t in g.presence[e]


def footprint(g: TimeVaryingGraph, t1: int, t2: int) -> Footprint:
    """Static graph of edges present at least once during ``[t1, t2)``."""
    if t1 >= t2:
        raise ValueError(f"empty or inverted window [{t1}, {t2})")
    if t1 < g.lifetime.start or t2 > g.lifetime.end:
        raise ValueError(f"window [{t1},{t2}) outside lifetime")
    pairs = [
        (e.u, e.v)
        for e, p in zip(g.edges, g.presence)
        if p.intersects(t1, t2)
    ]
    return Footprint(range(g.n), g.directed, pairs, (t1, t2))


def temporal_subgraph(g: TimeVaryingGraph, t1: int, t2: int) -> TimeVaryingGraph:
    """TVG restricted to lifetime ``[t1, t2)``; edges never present there are dropped."""
    if t1 >= t2:
        raise ValueError(f"empty or inverted window [{t1}, {t2})")
    if t1 < g.lifetime.start or t2 > g.lifetime.end:
        raise ValueError(f"window [{t1},{t2}) outside lifetime")
    edges = []
    presence_sets = []
    for e, p in zip(g.edges, g.presence):
        clipped = p.clip(t1, t2)
        if clipped:
            edges.append(e)
            presence_sets.append(clipped)
    return TimeVaryingGraph(g.n, g.directed, Lifetime(t1, t2), edges, presence_sets)


def active_nodes(f: Footprint) -> set[int]:
    """Nodes of the footprint with at least one adjacent edge."""
    out: set[int] = set()
    for u, v in f.edges:
        out.add(u)
        out.add(v)
    return out
