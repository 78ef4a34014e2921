"""The directed Cayley graph of a quandle and what its shape reveals.

Vertices are quandle elements; there is an edge x -> x |> y for every y.
Every vertex carries a loop (idempotency), and the graph is edgeless
apart from loops exactly when the quandle is trivial.
"""
from quandle_cayley import (
    build_cayley_graph,
    component_diameter,
    degrees,
    dihedral_quandle,
    export_graph,
    induced_subgraph,
    is_complete,
    is_edgeless,
    is_symmetric,
    strongly_connected_components,
    trivial_quandle,
)


def describe(q):
    graph = build_cayley_graph(q)
    comps = strongly_connected_components(graph)
    print(f"\n{q.label}: {graph.n} vertices, {graph.edge_count} edges")
    print(f"  edgeless={is_edgeless(graph)} symmetric={is_symmetric(graph)} "
          f"complete={is_complete(graph)}")
    degs = sorted(set(degrees(graph)))
    print(f"  degree profile (out, in): {degs}")
    for comp in comps.components:
        sub = induced_subgraph(graph, comp)
        print(f"  component {list(comp)}: complete={is_complete(sub)}, "
              f"diameter={component_diameter(graph, comp)}")


print("Trivial quandles give loops and nothing else:")
describe(trivial_quandle(4))

print("\nOdd dihedral quandles are connected and complete:")
describe(dihedral_quandle(5))

print("\nEven ones split into the two parity classes, each complete:")
describe(dihedral_quandle(6))

print("\nGraphs serialize to DOT for rendering, JSON for tooling, and a")
print("plain adjacency list.  DOT output for R4:\n")
print(export_graph(build_cayley_graph(dihedral_quandle(4)), "dot"))
