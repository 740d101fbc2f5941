"""
Three path problems, one closure
================================

The same weighted digraph answers different questions depending on the
semiring its weights are read in.  Here a small road network gives shortest
distances (min-plus), the best bottleneck capacity (max-min) and plain
reachability (Boolean).
"""
from idempotent import BOOLEAN, WeightedDigraph, algebraic_path, max_width_paths, shortest_paths
from idempotent.semiring import MIN_PLUS

# %%
# Arc weights double as lengths and as lane capacities.
roads = WeightedDigraph.from_arcs(MIN_PLUS, ["depot", "mill", "port", "town"], [
    ("depot", "mill", 4), ("mill", "port", 3), ("depot", "port", 9),
    ("port", "town", 2), ("town", "depot", 6), ("mill", "town", 8),
])


def show(title, M, nodes):
    print(title)
    for v, row in zip(nodes, M.tolist()):
        print(f"  {v:>6}: " + "  ".join(f"{x:>6}" for x in row))


# %%
# Shortest distances.  The diagonal is 0, the length of the empty path.
show("shortest", shortest_paths(roads), roads.nodes)

# %%
# Widest paths.  A route is as wide as its narrowest arc; the diagonal is
# +inf because staying put has no bottleneck.
show("widest", max_width_paths(roads), roads.nodes)

# %%
# Reachability is the Boolean reading of the same arcs.
show("reachable", algebraic_path(roads, BOOLEAN), roads.nodes)
