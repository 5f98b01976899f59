"""Watching a network's structure change through a sliding window.

The `evolve` entry point cuts a time-varying graph's lifetime into
windows, aggregates each window into a static footprint (or temporal
subgraph), and evaluates an indicator per window.  On the bundled
phase-transition generator this makes the regime change obvious: sparse
random contacts first, tight cliques afterwards.
"""

from tvgkit import WindowSpec, evolve, generate_trace, parse_trace

text = generate_trace("phase-transition", seed=7)
g = parse_trace(text).graph
print(f"trace: {g.n} nodes, {len(g.edges)} edges, lifetime {g.lifetime}")

spec = WindowSpec(length=10)
series = {
    name: evolve(g, spec, name)
    for name in ("density", "avg_clustering", "powerlaw", "diameter")
}

header = f"{'window':>12s}" + "".join(f"{n:>16s}" for n in series)
print(header)
windows = next(iter(series.values())).windows
for i, (a, b) in enumerate(windows):
    cells = "".join(f"{s.values[i]:16.3f}" for s in series.values())
    print(f"{f'[{a},{b})':>12s}{cells}")

# Average clustering jumps from near 0 to 1.0 at t=60, and the fitted
# power-law exponent drops: the degree distribution loses its heavy
# dominance of degree-1 nodes once the cliques appear.
