"""Journeys and temporal distances.

A journey is a walk whose edges are crossed at non-decreasing instants,
each at a time the edge is present.  Crossing is instantaneous (no edge
latency), so several hops may happen at the same instant; pass
``strict=True`` to require strictly increasing crossing times instead.

Three distance notions follow: shortest (fewest hops), foremost (earliest
arrival after a start time) and fastest (smallest arrival minus departure).
"""

from __future__ import annotations

import heapq
import math
from typing import Iterable, Optional

from .core import TimeVaryingGraph

KINDS = ("shortest", "foremost", "fastest")

Step = tuple[int, int]  # (edge index, crossing time)


def _check_time(g: TimeVaryingGraph, t: int) -> None:
    if t not in g.lifetime:
        raise ValueError(f"t={t} outside lifetime [{g.lifetime.start},{g.lifetime.end})")


def is_journey(g: TimeVaryingGraph, steps: Iterable[Step], strict: bool = False) -> bool:
    """Whether ``steps`` is a valid journey of ``g`` (empty sequences are)."""
    steps = list(steps)
    positions: Optional[set[int]] = None
    prev_t: Optional[int] = None
    for ei, t in steps:
        if not 0 <= ei < len(g.edges):
            raise ValueError(f"unknown edge index {ei}")
        e = g.edges[ei]
        if prev_t is not None and (t < prev_t or (strict and t <= prev_t)):
            return False
        if t not in g.presence[ei]:
            return False
        if positions is None:
            positions = {e.v} if g.directed else {e.u, e.v}
        else:
            nxt = set()
            if e.u in positions:
                nxt.add(e.v)
            if not g.directed and e.v in positions:
                nxt.add(e.u)
            if not nxt:
                return False
            positions = nxt
        prev_t = t
    return True


def _earliest_arrival(g: TimeVaryingGraph, u: int, t: int, strict: bool = False):
    """Earliest-arrival relaxation from ``u`` with first crossing >= ``t``.

    Returns (arrival, pred) where arrival[v] is the minimal last-crossing
    time of a journey u->v departing >= t (arrival[u] = t), and pred[v] is
    the (prev node, edge index, crossing time) of one witness.
    """
    arrival = {u: t}
    ready = {u: t}
    pred: dict[int, Optional[tuple[int, int, int]]] = {u: None}
    heap = [(t, u)]
    done: set[int] = set()
    while heap:
        a, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        lb = ready[x]
        for ei, y in g.out_edges(x):
            if y in done:
                continue
            tp = g.presence[ei].next_at_or_after(lb)
            if tp is None:
                continue
            if y not in arrival or tp < arrival[y]:
                arrival[y] = tp
                ready[y] = tp + 1 if strict else tp
                pred[y] = (x, ei, tp)
                heapq.heappush(heap, (tp, y))
    return arrival, pred


def foremost_distance(
    g: TimeVaryingGraph, u: int, t: int, strict: bool = False
) -> dict[int, int]:
    """Minimal arrival delay after ``t`` per reachable node (unreachable absent)."""
    _check_time(g, t)
    arrival, _ = _earliest_arrival(g, u, t, strict)
    return {v: a - t for v, a in arrival.items()}


def _layered_states(g: TimeVaryingGraph, u: int, t: int, strict: bool = False):
    """Per hop budget h, the minimal next-crossing bound reachable at each node.

    Returns (best, pred): best[(h, x)] -> lower bound for the next crossing
    after reaching x in exactly h hops; pred[(h, x)] -> (x_prev, edge,
    crossing time) of a witness route of length h.
    """
    best = {(0, u): t}
    pred: dict[tuple[int, int], Optional[tuple[int, int, int]]] = {(0, u): None}
    frontier = {u: t}
    for h in range(1, g.n):
        nxt: dict[int, int] = {}
        for x, lb in frontier.items():
            for ei, y in g.out_edges(x):
                tp = g.presence[ei].next_at_or_after(lb)
                if tp is None:
                    continue
                r = tp + 1 if strict else tp
                if y not in nxt or r < nxt[y]:
                    nxt[y] = r
                    pred[(h, y)] = (x, ei, tp)
        for y, r in nxt.items():
            best[(h, y)] = r
        frontier = nxt
        if not frontier:
            break
    return best, pred


def shortest_distance(
    g: TimeVaryingGraph, u: int, t: int, strict: bool = False
) -> dict[int, int]:
    """Minimal hop count per reachable node over journeys departing >= ``t``."""
    _check_time(g, t)
    best, _ = _layered_states(g, u, t, strict)
    dist: dict[int, int] = {}
    for (h, x) in sorted(best):
        if x not in dist:
            dist[x] = h
    return dist


def _departure_candidates(g: TimeVaryingGraph, t: int, strict: bool = False) -> list[int]:
    """Times at which an optimal fastest journey may depart.

    Interval starts cover waiting for an edge to open; interval last ticks
    cover leaving as late as possible before an edge closes.  Strict
    ordering forces one tick per hop, so each critical time also spawns
    candidates shifted earlier by up to n-1 ticks.
    """
    base = set()
    for p in g.presence:
        for a, b in p.intervals:
            base.add(a)
            base.add(b - 1)
    cand = {t}
    shifts = range(g.n) if strict else (0,)
    for c in base:
        for j in shifts:
            if c - j >= t:
                cand.add(c - j)
    return sorted(cand)


def fastest_distance(
    g: TimeVaryingGraph, u: int, t: int, strict: bool = False
) -> dict[int, int]:
    """Minimal journey duration (arrival - departure) per reachable node."""
    _check_time(g, t)
    dur: dict[int, int] = {u: 0}
    for s in _departure_candidates(g, t, strict):
        arrival, _ = _earliest_arrival(g, u, s, strict)
        for v, a in arrival.items():
            if v == u:
                continue
            d = a - s
            if v not in dur or d < dur[v]:
                dur[v] = d
    return dur


def temporal_view(
    g: TimeVaryingGraph, u: int, v: int, t: int, strict: bool = False
) -> Optional[int]:
    """Latest departure at ``u`` of a journey to ``v`` arriving by ``t``, or None."""
    _check_time(g, t)
    if u == v:
        return t
    # latest[x]: max departure over journeys x -> v with arrival <= t
    latest = {v: t}
    heap = [(-t, v)]
    done: set[int] = set()
    while heap:
        neg, y = heapq.heappop(heap)
        if y in done:
            continue
        done.add(y)
        cap = latest[y]
        if strict and y != v:
            cap -= 1
        for ei, x in g.in_edges(y):
            if x in done:
                continue
            tp = g.presence[ei].latest_at_or_before(cap)
            if tp is None or tp < g.lifetime.start:
                continue
            if x not in latest or tp > latest[x]:
                latest[x] = tp
                heapq.heappush(heap, (-tp, x))
    return latest.get(u)


def witness_journey(
    g: TimeVaryingGraph, u: int, v: int, t: int, kind: str, strict: bool = False
) -> Optional[list[Step]]:
    """One journey achieving the ``kind`` distance from u to v at t, or None."""
    _check_time(g, t)
    if kind not in KINDS:
        raise ValueError(f"unknown distance kind {kind!r}")
    if u == v:
        return []
    if kind == "foremost":
        arrival, pred = _earliest_arrival(g, u, t, strict)
        if v not in arrival:
            return None
        steps = []
        x = v
        while x != u:
            px, ei, tp = pred[x]
            steps.append((ei, tp))
            x = px
        return steps[::-1]
    if kind == "shortest":
        best, pred = _layered_states(g, u, t, strict)
        hs = [h for (h, x) in best if x == v]
        if not hs:
            return None
        h = min(hs)
        steps = []
        x = v
        while h > 0:
            px, ei, tp = pred[(h, x)]
            steps.append((ei, tp))
            x, h = px, h - 1
        return steps[::-1]
    # fastest: find the best departure candidate, then extract its foremost witness
    best_s = None
    best_d = None
    for s in _departure_candidates(g, t, strict):
        arrival, _ = _earliest_arrival(g, u, s, strict)
        if v in arrival:
            d = arrival[v] - s
            if best_d is None or d < best_d:
                best_d, best_s = d, s
    if best_s is None:
        return None
    return witness_journey(g, u, v, best_s, "foremost", strict)


def distance_map(
    g: TimeVaryingGraph, u: int, t: int, kind: str, strict: bool = False
) -> dict[int, int]:
    """Dispatch to the ``kind`` distance from ``u`` at ``t``."""
    if kind == "shortest":
        return shortest_distance(g, u, t, strict)
    if kind == "foremost":
        return foremost_distance(g, u, t, strict)
    if kind == "fastest":
        return fastest_distance(g, u, t, strict)
    raise ValueError(f"unknown distance kind {kind!r}")


def minimal_route_counts(
    g: TimeVaryingGraph,
    u: int,
    t: int,
    kind: str,
    strict: bool = False,
    through: Optional[int] = None,
) -> dict[int, tuple[int, int, int]]:
    """Minimal-route counts from ``u`` at time ``t`` for every reachable target.

    A route is an edge sequence of at most n-1 hops realizable as a journey
    departing at or after ``t``; it is minimal if its best achievable
    measure equals the ``kind`` distance.  Returns, per reachable node v,
    ``(distance, route count, routes with `through` as an interior node)``.
    The source maps to ``(0, 1, 0)`` (the empty route).
    """
    _check_time(g, t)
    if kind not in KINDS:
        raise ValueError(f"unknown distance kind {kind!r}")
    if kind == "fastest":
        return _fastest_route_counts(g, u, t, strict, through)

    if kind == "foremost":
        arrival_best, _ = _earliest_arrival(g, u, t, strict)
        if len(arrival_best) > 1:
            horizon = max(a for v, a in arrival_best.items() if v != u)
        else:
            horizon = t
    else:
        horizon = None

    # state: (node, bound for next crossing) -> [routes, routes through q]
    layer: dict[tuple[int, int], list[int]] = {(u, t): [1, 0]}
    totals: dict[int, list[int]] = {}
    first_hop: dict[int, int] = {}
    for h in range(1, g.n):
        nxt: dict[tuple[int, int], list[int]] = {}
        for (x, lb), (c, cq) in layer.items():
            for ei, y in g.out_edges(x):
                tp = g.presence[ei].next_at_or_after(lb)
                if tp is None:
                    continue
                if horizon is not None and tp > horizon:
                    continue
                r = tp + 1 if strict else tp
                acc = nxt.setdefault((y, r), [0, 0])
                acc[0] += c
                acc[1] += c if (x == through and x != u) else cq
        for (y, r), (c, cq) in nxt.items():
            if y == u:
                continue  # the empty route is the only minimal route to the source
            if kind == "shortest":
                if y in first_hop and first_hop[y] < h:
                    continue
                first_hop.setdefault(y, h)
            else:  # foremost: count routes whose earliest arrival is optimal
                arr = r - 1 if strict else r
                if arr != arrival_best[y]:
                    continue
            acc = totals.setdefault(y, [0, 0])
            acc[0] += c
            acc[1] += cq
        layer = nxt
        if not layer:
            break
    out: dict[int, tuple[int, int, int]] = {u: (0, 1, 0)}
    for v, (c, cq) in totals.items():
        if kind == "shortest":
            out[v] = (first_hop[v], c, cq)
        else:
            out[v] = (arrival_best[v] - t, c, cq)
    return out


def _fastest_route_counts(
    g: TimeVaryingGraph, u: int, t: int, strict: bool, through: Optional[int]
):
    """Route counting for the fastest kind.

    Each route class tracks, per candidate departure, the departure tick and
    the greedy arrival; its best duration is minimized over candidates.
    """
    cands = _departure_candidates(g, t, strict)
    # state: (node, profile) where profile[i] = (departure, bound) or None
    init = tuple((None, s) for s in cands)  # departure fixed at first hop
    layer: dict[tuple[int, tuple], list[int]] = {(u, init): [1, 0]}
    # per target: best duration and counts of route classes achieving it
    best: dict[int, int] = {}
    counts: dict[int, list[int]] = {}

    def record(y: int, profile: tuple, c: int, cq: int) -> None:
        durs = [
            (lb - 1 if strict else lb) - dep
            for dep, lb in profile
            if dep is not None
        ]
        if not durs:
            return
        d = min(durs)
        if y not in best or d < best[y]:
            best[y] = d
            counts[y] = [0, 0]
        if d == best[y]:
            counts[y][0] += c
            counts[y][1] += cq

    for h in range(1, g.n):
        nxt: dict[tuple[int, tuple], list[int]] = {}
        for (x, profile), (c, cq) in layer.items():
            for ei, y in g.out_edges(x):
                p = g.presence[ei]
                new = []
                feasible = False
                for dep, lb in profile:
                    if lb is None:
                        new.append((None, None))
                        continue
                    tp = p.next_at_or_after(lb)
                    if tp is None:
                        new.append((None, None))
                        continue
                    feasible = True
                    r = tp + 1 if strict else tp
                    new.append((tp if dep is None else dep, r))
                if not feasible:
                    continue
                key = (y, tuple(new))
                acc = nxt.setdefault(key, [0, 0])
                acc[0] += c
                acc[1] += c if (x == through and x != u) else cq
        for (y, profile), (c, cq) in nxt.items():
            if y != u:
                record(y, profile, c, cq)
        layer = nxt
        if not layer:
            break
    out: dict[int, tuple[int, int, int]] = {u: (0, 1, 0)}
    for v, d in best.items():
        out[v] = (d, counts[v][0], counts[v][1])
    return out


def count_minimal_journeys(
    g: TimeVaryingGraph, u: int, v: int, t: int, kind: str, strict: bool = False
) -> Optional[tuple[int, int]]:
    """Distance and number of minimal routes from u to v at t, or None."""
    res = minimal_route_counts(g, u, t, kind, strict)
    if v not in res:
        return None
    d, c, _ = res[v]
    return d, c
