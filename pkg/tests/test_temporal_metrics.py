import math
import random

import pytest

from tvgkit.core import Lifetime, build_tvg
from tvgkit.journeys import distance_map
from tvgkit.temporal_metrics import (
    diameter,
    eccentricity,
    eccentricity_report,
    restrict_nodes,
    temporal_betweenness,
    temporal_closeness,
    temporal_series,
)
from tvgkit.windows import WindowSpec

from oracles import oracle_distances, random_always_on_tvg, random_tvg


def tvg(events, n=3, end=10, directed=False):
    return build_tvg(n, directed, Lifetime(0, end), events)


def always(edges, n, end=10):
    return tvg([(u, v, 0, end) for u, v in edges], n=n, end=end)


class TestEccentricity:
    def test_path_endpoint(self):
        g = always([(0, 1), (1, 2)], 3)
        assert eccentricity(g, 0, 0, "shortest") == 2.0

    def test_path_center(self):
        g = always([(0, 1), (1, 2)], 3)
        assert eccentricity(g, 1, 0, "shortest") == 1.0

    def test_unreachable_is_infinite(self):
        g = tvg([(0, 1, 0, 2)], n=3)
        assert math.isinf(eccentricity(g, 0, 0, "shortest"))

    def test_singleton_zero(self):
        g = build_tvg(1, False, Lifetime(0, 4), [])
        assert eccentricity(g, 0, 0, "foremost") == 0.0

    def test_static_clique_fastest_zero(self):
        g = always([(0, 1), (1, 2), (0, 2)], 3)
        for u in range(3):
            assert eccentricity(g, u, 0, "fastest") == 0.0

    def test_report_collects_all_kinds(self):
        g = always([(0, 1), (1, 2)], 3)
        rep = eccentricity_report(g, 0)
        assert rep.values["shortest"][0] == 2.0
        assert rep.values["foremost"][0] == 0.0
        assert rep.values["fastest"][0] == 0.0
        assert rep.reachable_count[0] == 3
        assert not rep.unbounded(0, "shortest")


class TestDiameter:
    def test_path(self):
        g = always([(0, 1), (1, 2)], 3)
        assert diameter(g, 0, "shortest") == 2.0

    def test_clique_is_one(self):
        g = always([(0, 1), (1, 2), (0, 2)], 3)
        assert diameter(g, 0, "shortest") == 1.0

    def test_clique_fastest_is_zero(self):
        g = always([(0, 1), (1, 2), (0, 2)], 3)
        assert diameter(g, 0, "fastest") == 0.0

    def test_disconnected_infinite(self):
        g = tvg([(0, 1, 0, 2)], n=3)
        assert math.isinf(diameter(g, 0, "foremost"))

    def test_is_max_eccentricity(self):
        rng = random.Random(3)
        for _ in range(15):
            g = random_tvg(rng)
            t = rng.randrange(g.lifetime.start, g.lifetime.end)
            for kind in ("shortest", "foremost", "fastest"):
                eccs = [eccentricity(g, u, t, kind) for u in range(g.n)]
                assert diameter(g, t, kind) == max(eccs)


class TestBetweenness:
    def test_star_center(self):
        # routes 1-0-2 and 2-0-1 both pass through the hub
        g = always([(0, 1), (0, 2)], 3)
        assert temporal_betweenness(g, 0, 0, "shortest") == 2.0

    def test_clique_interior_never_needed(self):
        g = always([(0, 1), (1, 2), (0, 2)], 3)
        for q in range(3):
            assert temporal_betweenness(g, q, 0, "shortest") == 0.0

    def test_diamond_split_credit(self):
        # two shortest 0-3 routes, one through each middle node
        g = always([(0, 1), (1, 3), (0, 2), (2, 3)], 4)
        assert temporal_betweenness(g, 1, 0, "shortest") == pytest.approx(1.0)
        assert temporal_betweenness(g, 2, 0, "shortest") == pytest.approx(1.0)

    def test_temporal_order_breaks_symmetry(self):
        # relay works 0->2 via 1, but not 2->0: journeys are time-asymmetric
        g = tvg([(0, 1, 1, 2), (1, 2, 5, 6)], n=3)
        b = temporal_betweenness(g, 1, 0, "foremost")
        assert b == 1.0

    def test_invalid_time_rejected(self):
        g = always([(0, 1)], 2)
        with pytest.raises(ValueError):
            temporal_betweenness(g, 0, 99, "shortest")

    def test_matches_networkx_on_static_graphs(self):
        import networkx as nx

        rng = random.Random(7)
        for _ in range(12):
            g = random_always_on_tvg(rng)
            G = nx.Graph([(e.u, e.v) for e in g.edges])
            G.add_nodes_from(range(g.n))
            ref = nx.betweenness_centrality(G, normalized=False)
            for q in range(g.n):
                # ordered pairs double nx's unordered undirected count
                assert temporal_betweenness(g, q, 0, "shortest") == pytest.approx(
                    2 * ref[q]
                )


class TestCloseness:
    def test_path_center(self):
        g = always([(0, 1), (1, 2)], 3)
        assert temporal_closeness(g, 1, 0, "shortest") == 1.0

    def test_path_endpoint(self):
        g = always([(0, 1), (1, 2)], 3)
        assert temporal_closeness(g, 0, 0, "shortest") == 1.5

    def test_isolated_node_nan(self):
        g = tvg([(0, 1, 0, 2)], n=3)
        assert math.isnan(temporal_closeness(g, 2, 0, "shortest"))

    def test_reachable_only_average(self):
        rng = random.Random(11)
        for _ in range(15):
            g = random_tvg(rng)
            t = rng.randrange(g.lifetime.start, g.lifetime.end)
            u = rng.randrange(g.n)
            for kind in ("shortest", "foremost", "fastest"):
                d = oracle_distances(g, u, t)[kind]
                others = [d[v] for v in d if v != u]
                got = temporal_closeness(g, u, t, kind)
                if others:
                    assert got == pytest.approx(sum(others) / len(others))
                else:
                    assert math.isnan(got)


class TestRestrictNodes:
    def test_induced_edges_and_relabeling(self):
        g = always([(0, 1), (1, 3), (0, 2)], 4)
        sub = restrict_nodes(g, [0, 1, 3])
        assert sub.n == 3
        assert sorted((e.u, e.v) for e in sub.edges) == [(0, 1), (1, 2)]

    def test_distances_agree_on_closed_subset(self):
        # restricting to a component never changes distances inside it
        g = tvg([(0, 1, 0, 8), (1, 2, 3, 8), (3, 4, 0, 8)], n=5)
        sub = restrict_nodes(g, [0, 1, 2])
        for u in range(3):
            assert distance_map(sub, u, 0, "foremost") == {
                v: d for v, d in distance_map(g, u, 0, "foremost").items() if v < 3
            }


class TestTemporalSeries:
    def test_diameter_series_constant_graph(self):
        g = always([(0, 1), (1, 2)], 3, end=12)
        s = temporal_series(g, WindowSpec(4), "diameter")
        assert s.values == [2.0, 2.0, 2.0]

    def test_disconnection_shows_as_nan(self):
        g = tvg([(0, 1, 0, 4), (1, 2, 0, 4), (0, 1, 4, 8)], n=3, end=8)
        s = temporal_series(g, WindowSpec(4), "diameter", node_policy="all")
        assert s.values[0] == 2.0
        assert math.isnan(s.values[1])

    def test_active_policy_ignores_silent_nodes(self):
        g = tvg([(0, 1, 0, 4), (1, 2, 0, 4), (0, 1, 4, 8)], n=3, end=8)
        s = temporal_series(g, WindowSpec(4), "diameter", node_policy="active")
        assert s.values == [2.0, 1.0]

    def test_reducers(self):
        g = always([(0, 1), (1, 2)], 3, end=4)
        mean = temporal_series(g, WindowSpec(4), "eccentricity", reducer="mean")
        mx = temporal_series(g, WindowSpec(4), "eccentricity", reducer="max")
        assert mean.values[0] == pytest.approx(5 / 3)
        assert mx.values[0] == 2.0
        with pytest.raises(ValueError, match="reducer"):
            temporal_series(g, WindowSpec(4), "eccentricity", reducer="median")

    def test_unknown_indicator_and_kind(self):
        g = always([(0, 1)], 2, end=4)
        with pytest.raises(ValueError, match="indicator"):
            temporal_series(g, WindowSpec(2), "pagerank")
        with pytest.raises(ValueError, match="kind"):
            temporal_series(g, WindowSpec(2), "diameter", kind="slowest")
