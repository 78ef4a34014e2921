"""Directed graphs for quandle Cayley structure.

The Cayley graph of a quandle Q has vertex set Q and an edge x -> x |> y
for every y (duplicates collapse, and idempotency puts a loop at every
vertex).  Graphs are immutable: vertex count, sorted adjacency lists, and
display names.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .quandles import Quandle

ISOMORPHISM_CAP = 64


class DirectedGraph:
    """Immutable digraph on 0..n-1 with sorted out-neighbor lists."""

    def __init__(self, n: int, edges, names=None):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        self.n = int(n)
        adj: list[set] = [set() for _ in range(self.n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            adj[u].add(v)
        self.adj = tuple(tuple(sorted(s)) for s in adj)
        if names is None:
            names = [str(i) for i in range(self.n)]
        if len(names) != self.n:
            raise ValueError("names length must equal vertex count")
        self.names = tuple(str(s) for s in names)
        self._matrix: np.ndarray | None = None

    def matrix(self) -> np.ndarray:
        """Boolean adjacency matrix (cached)."""
        if self._matrix is None:
            m = np.zeros((self.n, self.n), dtype=bool)
            for u, outs in enumerate(self.adj):
                m[u, list(outs)] = True
            self._matrix = m
        return self._matrix

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.matrix()[u, v])

    def edges(self) -> list[tuple]:
        return [(u, v) for u in range(self.n) for v in self.adj[u]]

    @property
    def edge_count(self) -> int:
        return sum(len(outs) for outs in self.adj)

    def __repr__(self) -> str:
        return f"DirectedGraph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class ComponentDecomposition:
    kind: str                 # "strong" or "weak"
    components: tuple         # tuple of sorted vertex tuples, ordered by min vertex

    @property
    def count(self) -> int:
        return len(self.components)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]

    def as_sets(self) -> set:
        return {frozenset(c) for c in self.components}

    def component_of(self, v: int) -> tuple:
        for comp in self.components:
            if v in comp:
                return comp
        raise ValueError(f"vertex {v} not in any component")


def build_cayley_graph(q: Quandle) -> DirectedGraph:
    """Edge x -> x |> y for every y; one loop per vertex, no multi-edges."""
    edges = ((x, int(v)) for x in range(q.order) for v in set(q.rhd[x]))
    return DirectedGraph(q.order, edges, names=q.element_names)


def complete_graph(n: int, names=None) -> DirectedGraph:
    """All ordered pairs, loops included."""
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return DirectedGraph(n, ((u, v) for u in range(n) for v in range(n)), names=names)


def degrees(g: DirectedGraph) -> list[tuple]:
    """(out, in) per vertex; a loop adds one to each."""
    m = g.matrix()
    outs = m.sum(axis=1)
    ins = m.sum(axis=0)
    return [(int(o), int(i)) for o, i in zip(outs, ins)]


def is_edgeless(g: DirectedGraph) -> bool:
    """Only loops (if anything) present."""
    m = g.matrix().copy()
    np.fill_diagonal(m, False)
    return not m.any()


def is_symmetric(g: DirectedGraph) -> bool:
    m = g.matrix()
    return bool((m == m.T).all())


def is_complete(g: DirectedGraph) -> bool:
    """Every ordered pair of distinct vertices plus a loop at each vertex."""
    return bool(g.matrix().all())


def _tarjan(adj, n: int) -> list[list[int]]:
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while pi < len(adj[v]):
                w = adj[v][pi]
                pi += 1
                if index[w] == -1:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
        # loop continues with next root
    return comps


def strongly_connected_components(g: DirectedGraph) -> ComponentDecomposition:
    """Maximal sets with directed paths both ways between every pair."""
    comps = _tarjan(g.adj, g.n)
    comps.sort(key=lambda c: c[0])
    return ComponentDecomposition(kind="strong",
                                  components=tuple(tuple(c) for c in comps))


def weakly_connected_components(g: DirectedGraph) -> ComponentDecomposition:
    """Components of the symmetrized graph."""
    sym = g.matrix() | g.matrix().T
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        frontier = [s]
        seen[s] = True
        comp = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in np.nonzero(sym[u])[0]:
                    v = int(v)
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        nxt.append(v)
            frontier = nxt
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return ComponentDecomposition(kind="weak", components=tuple(comps))


def induced_subgraph(g: DirectedGraph, vertices) -> DirectedGraph:
    """Subgraph on the given vertices, relabeled densely in sorted order."""
    verts = sorted({int(v) for v in vertices})
    for v in verts:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u in verts for v in g.adj[u] if v in pos]
    return DirectedGraph(len(verts), edges, names=[g.names[v] for v in verts])


def component_diameter(g: DirectedGraph, component) -> int:
    """Max over ordered pairs of shortest directed path length inside one
    strongly connected component."""
    comp = sorted({int(v) for v in component})
    sub = induced_subgraph(g, comp)
    n = sub.n
    best = 0
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for v in sub.adj[u]:
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        nxt.append(v)
            frontier = nxt
        if min(dist) == -1:
            raise ValueError("component is not strongly connected")
        best = max(best, max(dist))
    return best


# -- isomorphism -------------------------------------------------------------


def _signatures(g: DirectedGraph) -> list[tuple]:
    m = g.matrix()
    outs = m.sum(axis=1)
    ins = m.sum(axis=0)
    loops = np.diagonal(m)
    return [(int(outs[v]), int(ins[v]), bool(loops[v])) for v in range(g.n)]


def find_isomorphism(g1: DirectedGraph, g2: DirectedGraph,
                     cap: int = ISOMORPHISM_CAP) -> list[int] | None:
    """Exact directed-graph isomorphism by backtracking.

    Vertices are classed by (out-degree, in-degree, loop) and matched class
    against class; the search order walks g1 by connectivity so partial
    mappings get contradicted early.  Returns the vertex mapping or None.
    """
    if g1.n > cap or g2.n > cap:
        raise ValueError(f"isomorphism search capped at {cap} vertices")
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    sig1, sig2 = _signatures(g1), _signatures(g2)
    if sorted(sig1) != sorted(sig2):
        return None
    by_sig: dict[tuple, list[int]] = {}
    for v, s in enumerate(sig2):
        by_sig.setdefault(s, []).append(v)

    # order: start at the rarest signature, then grow along edges
    order: list[int] = []
    placed = [False] * g1.n
    sym1 = [sorted(set(g1.adj[v]) | {u for u in range(g1.n) if v in g1.adj[u]})
            for v in range(g1.n)]
    rarity = {v: len(by_sig[sig1[v]]) for v in range(g1.n)}
    while len(order) < g1.n:
        pool = [v for v in range(g1.n) if not placed[v]]
        seed = min(pool, key=lambda v: (rarity[v], v))
        queue = [seed]
        placed[seed] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            for w in sym1[v]:
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    m1, m2 = g1.matrix(), g2.matrix()
    mapping = [-1] * g1.n
    used = [False] * g2.n

    def consistent(v: int, w: int, upto: int) -> bool:
        for k in range(upto):
            u = order[k]
            mu = mapping[u]
            if m1[v, u] != m2[w, mu] or m1[u, v] != m2[mu, w]:
                return False
        return True

    def backtrack(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in by_sig.get(sig1[v], ()):
            if used[w] or not consistent(v, w, k):
                continue
            mapping[v] = w
            used[w] = True
            if backtrack(k + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    if backtrack(0):
        return list(mapping)
    return None


def is_isomorphic(g1: DirectedGraph, g2: DirectedGraph,
                  cap: int = ISOMORPHISM_CAP) -> bool:
    return find_isomorphism(g1, g2, cap=cap) is not None


# -- export / import ---------------------------------------------------------


def export_graph(g: DirectedGraph, fmt: str) -> str:
    """Render as 'dot', 'json', or 'adjlist'.  Output is byte-stable."""
    if fmt == "dot":
        lines = ["digraph {"]
        for v in range(g.n):
            label = g.names[v].replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'    {v} [label="{label}"];')
        for u, v in g.edges():
            lines.append(f"    {u} -> {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        payload = {
            "n": g.n,
            "names": list(g.names),
            "edges": [[u, v] for u, v in g.edges()],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "adjlist":
        lines = [f"{g.names[v]}: " + " ".join(str(w) for w in g.adj[v])
                 for v in range(g.n)]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r} (use dot, json, or adjlist)")


def graph_from_json(obj) -> DirectedGraph:
    """Rebuild a graph exported with fmt='json' (accepts dict or text)."""
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict):
        raise ValueError("graph JSON must be an object")
    for key in ("n", "edges"):
        if key not in obj:
            raise ValueError(f"graph JSON missing key {key!r}")
    return DirectedGraph(int(obj["n"]), [tuple(e) for e in obj["edges"]],
                         names=obj.get("names"))


# -- the integer quandle window ----------------------------------------------


def takasaki_z_edge(a: int, c: int) -> bool:
    """Whether c is reachable from a in one step of a |> b = 2b - a over Z.

    Solvable for integer b exactly when a and c have the same parity.
    """
    return (a + c) % 2 == 0


def takasaki_z_window(w: int) -> DirectedGraph:
    """The induced edge relation on the integer window [-w, w].

    Vertex i stands for the integer i - w; names are the integers.
    """
    if w < 0:
        raise ValueError("window radius must be >= 0")
    values = list(range(-w, w + 1))
    n = len(values)
    edges = [(i, j) for i in range(n) for j in range(n)
             if takasaki_z_edge(values[i], values[j])]
    return DirectedGraph(n, edges, names=[str(v) for v in values])
