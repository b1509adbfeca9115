"""Graphs on degree-one divisor classes with edges at Mukai product zero."""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import (
    DivisorClass,
    E,
    degree_one_catalogue,
    from_bracket,
    mukai_pairing,
    to_bracket,
)


@dataclass(frozen=True)
class LabelledGraph:
    """Undirected graph with hashable vertex labels and index-pair edges.

    Vertices are stored in a canonical sorted order; edges are frozensets of
    two distinct indices into the vertex tuple.
    """

    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be pairwise distinct")
        n = len(self.vertices)
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"self-loop or malformed edge {set(e)}")
            if not all(0 <= i < n for i in e):
                raise ValueError(f"edge {set(e)} references missing vertex")

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def label_edges(self) -> set[frozenset]:
        """Edges as frozensets of vertex labels."""
        return {frozenset((self.vertices[i], self.vertices[j])) for i, j in map(tuple, self.edges)}

    def degree_sequence(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for e in self.edges:
            for i in e:
                deg[i] += 1
        return sorted(deg)

    def components(self) -> list[set[int]]:
        n = len(self.vertices)
        adj = [[] for _ in range(n)]
        for e in self.edges:
            i, j = tuple(e)
            adj[i].append(j)
            adj[j].append(i)
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            stack = [s]
            while stack:
                u = stack.pop()
                for v in adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.add(v)
                        stack.append(v)
            comps.append(comp)
        return comps

    def complement(self) -> "LabelledGraph":
        n = len(self.vertices)
        all_edges = {frozenset((i, j)) for i in range(n) for j in range(i + 1, n)}
        return LabelledGraph(self.vertices, frozenset(all_edges - self.edges))

    def is_regular(self) -> int | None:
        degs = set(self.degree_sequence()) or {0}
        return degs.pop() if len(degs) == 1 else None

    def has_triangle(self) -> bool:
        n = len(self.vertices)
        adj = [set() for _ in range(n)]
        for e in self.edges:
            i, j = tuple(e)
            adj[i].add(j)
            adj[j].add(i)
        for i in range(n):
            for j in adj[i]:
                if j > i and adj[i] & adj[j]:
                    return True
        return False

    def induced(self, keep: set[int]) -> "LabelledGraph":
        order = sorted(keep)
        remap = {old: new for new, old in enumerate(order)}
        verts = tuple(self.vertices[i] for i in order)
        edges = frozenset(
            frozenset(remap[i] for i in e) for e in self.edges if set(e) <= keep
        )
        return LabelledGraph(verts, edges)


def graph_from_labelled_edges(vertices, labelled_edges) -> LabelledGraph:
    verts = tuple(sorted(vertices))
    index = {v: i for i, v in enumerate(verts)}
    edges = frozenset(frozenset((index[a], index[b])) for a, b in labelled_edges)
    return LabelledGraph(verts, edges)


def mukai_edge_graph(k: int, d: int, full: bool = False) -> LabelledGraph:
    """Graph on degree-one classes with edges at Mukai product zero.

    Vertices are bracket tuples.  By default returns the connected component
    containing E_1; with full=True the whole graph on the degree-one
    catalogue is returned.
    """
    catalogue = degree_one_catalogue(k, d, allow_conjectural=True)
    classes = catalogue.all_classes()
    verts = tuple(sorted(to_bracket(D) for D in classes))
    cls = [from_bracket(v, k, d) for v in verts]
    edges = set()
    n = len(cls)
    for i in range(n):
        for j in range(i + 1, n):
            if mukai_pairing(cls[i], cls[j]) == 0:
                edges.add(frozenset((i, j)))
    g = LabelledGraph(verts, frozenset(edges))
    if full:
        return g
    e1 = to_bracket(E(1, k, d))
    start = verts.index(e1)
    for comp in g.components():
        if start in comp:
            return g.induced(comp)
    raise AssertionError("E_1 vertex not found in its own graph")


def is_spanning_subgraph(inner: LabelledGraph, outer: LabelledGraph):
    """Check vertices(inner) <= vertices(outer) and edges(inner) <= edges(outer).

    Returns (ok, certificate): the certificate lists missing vertices and the
    inner edges absent from outer, as label pairs.
    """
    inner_v = set(inner.vertices)
    outer_v = set(outer.vertices)
    missing_vertices = sorted(inner_v - outer_v)
    outer_edges = outer.label_edges()
    violating = sorted(
        tuple(sorted(e)) for e in inner.label_edges() if e not in outer_edges
    )
    ok = not missing_vertices and not violating
    certificate = {"missing_vertices": missing_vertices, "missing_edges": violating}
    return ok, certificate


def graph_stats(g: LabelledGraph) -> dict:
    return {
        "vertices": g.num_vertices,
        "edges": g.num_edges,
        "degree_sequence": g.degree_sequence(),
        "components": len(g.components()) if g.num_vertices else 0,
    }
