"""Immutable multigraph with stable edge identities, plus the structural
queries and surgeries everything else is built from.

Vertices are ``0..n-1``.  Edge ids are arbitrary distinct nonnegative ints
that survive surgeries unchanged (a certificate naming an edge stays
meaningful after the graph it came from has been cut apart); ids are never
reused within one graph value.  Loops and parallel edges are allowed.
Colors are opaque nonnegative ints carried by all edges or by none.

Vertex deletion renumbers the survivors order-preservingly (gap closing);
the trace records the correspondence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from . import _kernels
from .errors import ArgumentError


class Edge(NamedTuple):
    eid: int
    u: int
    v: int
    color: int | None = None

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, w: int) -> int:
        """The endpoint that is not ``w`` (``w`` itself for a loop)."""
        if w == self.u:
            return self.v
        if w == self.v:
            return self.u
        raise ArgumentError(f"vertex {w} is not an endpoint of edge {self.eid}")

    def touches(self, w: int) -> bool:
        return w == self.u or w == self.v


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ArgumentError("vertex count must be nonnegative")
        edges = tuple(sorted((Edge(*e) for e in self.edges), key=lambda e: e.eid))
        object.__setattr__(self, "edges", edges)
        seen = set()
        colored = uncolored = 0
        for e in edges:
            if e.eid < 0:
                raise ArgumentError(f"negative edge id {e.eid}")
            if e.eid in seen:
                raise ArgumentError(f"duplicate edge id {e.eid}")
            seen.add(e.eid)
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ArgumentError(f"edge {e.eid} endpoint out of range")
            if e.color is None:
                uncolored += 1
            elif e.color < 0:
                raise ArgumentError(f"edge {e.eid} has negative color")
            else:
                colored += 1
        if colored and uncolored:
            raise ArgumentError("either all edges carry a color or none do")

    @classmethod
    def build(cls, n: int, pairs: Iterable[Sequence[int]]) -> "Graph":
        """Convenience constructor: ids 0.. in iteration order; items are
        (u, v) or (u, v, color)."""
        edges = []
        for i, p in enumerate(pairs):
            if len(p) == 2:
                edges.append(Edge(i, p[0], p[1]))
            elif len(p) == 3:
                edges.append(Edge(i, p[0], p[1], p[2]))
            else:
                raise ArgumentError("edge items must be (u, v) or (u, v, color)")
        return cls(n, tuple(edges))

    # -- cached views ------------------------------------------------------

    @cached_property
    def _by_id(self) -> dict[int, Edge]:
        return {e.eid: e for e in self.edges}

    @cached_property
    def _arrays(self) -> tuple[list[int], list[int], list[int] | None]:
        us = [e.u for e in self.edges]
        vs = [e.v for e in self.edges]
        colors = [e.color for e in self.edges] if self.is_colored else None
        return us, vs, colors

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices (into ``self.edges``) per vertex; loops listed once."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            inc[e.u].append(i)
            if e.v != e.u:
                inc[e.v].append(i)
        return tuple(tuple(x) for x in inc)

    @property
    def is_colored(self) -> bool:
        return bool(self.edges) and self.edges[0].color is not None

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.eid for e in self.edges)

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise ArgumentError(f"no edge with id {eid}") from None

    def has_edge_id(self, eid: int) -> bool:
        return eid in self._by_id

    def incident(self, v: int) -> tuple[Edge, ...]:
        """Edges touching v, in id order; a loop appears once."""
        self._check_vertex(v)
        return tuple(self.edges[i] for i in self._incidence[v])

    def degree(self, v: int) -> int:
        """Loops count twice."""
        self._check_vertex(v)
        d = 0
        for i in self._incidence[v]:
            d += 2 if self.edges[i].is_loop else 1
        return d

    def colors(self) -> frozenset[int]:
        if not self.is_colored:
            raise ArgumentError("graph is not colored")
        return frozenset(e.color for e in self.edges)

    def max_color(self) -> int:
        return max(self.colors())

    def next_edge_id(self) -> int:
        return max((e.eid for e in self.edges), default=-1) + 1

    def with_colors(self, colors: Sequence[int]) -> "Graph":
        """Same structure, colors assigned by stored edge order."""
        if len(colors) != len(self.edges):
            raise ArgumentError("need one color per edge")
        return Graph(self.n, tuple(Edge(e.eid, e.u, e.v, c) for e, c in zip(self.edges, colors)))

    def uncolored(self) -> "Graph":
        return Graph(self.n, tuple(Edge(e.eid, e.u, e.v) for e in self.edges))

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ArgumentError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class VertexPartition:
    """Partition of 0..n-1 into connected components; indices are contiguous
    and ordered by each component's lowest vertex."""

    component_of: tuple[int, ...]
    component_count: int

    def __post_init__(self):
        seen = sorted(set(self.component_of))
        if self.component_of and seen != list(range(self.component_count)):
            raise ArgumentError("component indices must be contiguous from 0")
        if not self.component_of and self.component_count != 0:
            raise ArgumentError("empty partition must have zero components")

    def same(self, u: int, v: int) -> bool:
        return self.component_of[u] == self.component_of[v]

    def members(self, idx: int) -> tuple[int, ...]:
        return tuple(v for v, c in enumerate(self.component_of) if c == idx)


@dataclass(frozen=True)
class SurgeryTrace:
    """How a surgery's output maps back onto its input.

    ``edge_map``/``vertex_map``: surviving output id -> input id (injective;
    identity for edges, gap-closing for vertices).  Items the surgery created
    (and a glued vertex, which has two preimages) appear in ``new_edges`` /
    ``new_vertices`` instead.
    """

    kind: str
    edge_map: dict[int, int] = field(default_factory=dict)
    vertex_map: dict[int, int] = field(default_factory=dict)
    new_edges: frozenset[int] = frozenset()
    new_vertices: frozenset[int] = frozenset()

    KINDS = ("delete_edge", "delete_vertex", "induce", "contract", "glue", "pendant")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ArgumentError(f"unknown surgery kind {self.kind!r}")
        for name, mapping, fresh in (
            ("edge", self.edge_map, self.new_edges),
            ("vertex", self.vertex_map, self.new_vertices),
        ):
            if len(set(mapping.values())) != len(mapping):
                raise ArgumentError(f"{name} map must be injective")
            if fresh & mapping.keys():
                raise ArgumentError(f"new {name}s overlap the {name} map")


# -- queries ---------------------------------------------------------------


def components(g: Graph) -> VertexPartition:
    us, vs, _ = g._arrays
    labels = _kernels.component_labels(g.n, us, vs)
    count = (max(labels) + 1) if labels else 0
    return VertexPartition(tuple(labels), count)


def is_connected(g: Graph) -> bool:
    return components(g).component_count <= 1


def bridges(g: Graph) -> frozenset[int]:
    """Edge ids whose deletion disconnects their component.  Loops and
    parallel-pair members never qualify."""
    us, vs, _ = g._arrays
    mask = _kernels.bridge_mask(g.n, us, vs)
    return frozenset(g.edges[i].eid for i in range(len(mask)) if mask[i])


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation vertices (deletion disconnects their component)."""
    n = g.n
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for i, e in enumerate(g.edges):
        if e.is_loop:
            continue
        adj[e.u].append((e.v, i))
        adj[e.v].append((e.u, i))
    disc = [-1] * n
    low = [0] * n
    out = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [[root, -1, 0]]
        while stack:
            top = stack[-1]
            v, pe = top[0], top[1]
            if top[2] < len(adj[v]):
                w, ei = adj[v][top[2]]
                top[2] += 1
                if ei == pe:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append([w, ei, 0])
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        out.add(pv)
        if root_children >= 2:
            out.add(root)
    return frozenset(out)


def is_monochrome(g: Graph, v: int) -> bool:
    """All edges at v share one color (a loop counts once); degree 0/1 is
    monochrome by convention."""
    if not g.is_colored and g.edges:
        raise ArgumentError("is_monochrome needs a colored graph")
    g._check_vertex(v)
    cs = {e.color for e in g.incident(v)}
    return len(cs) <= 1


# -- surgeries ---------------------------------------------------------------


def delete_edge(g: Graph, eid: int) -> tuple[Graph, SurgeryTrace]:
    e = g.edge(eid)
    rest = tuple(x for x in g.edges if x.eid != eid)
    trace = SurgeryTrace(
        "delete_edge",
        edge_map={x.eid: x.eid for x in rest},
        vertex_map={v: v for v in range(g.n)},
    )
    return Graph(g.n, rest), trace


def delete_vertex(g: Graph, v: int) -> tuple[Graph, SurgeryTrace]:
    """Remove v and its incident edges; vertices above v shift down by one."""
    g._check_vertex(v)
    ren = {w: (w if w < v else w - 1) for w in range(g.n) if w != v}
    kept = tuple(
        Edge(e.eid, ren[e.u], ren[e.v], e.color) for e in g.edges if not e.touches(v)
    )
    trace = SurgeryTrace(
        "delete_vertex",
        edge_map={e.eid: e.eid for e in kept},
        vertex_map={new: old for old, new in ren.items()},
    )
    return Graph(g.n - 1, kept), trace


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, SurgeryTrace]:
    """Subgraph on a vertex subset, renumbered order-preservingly; edge ids
    are kept."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check_vertex(v)
    ren = {old: new for new, old in enumerate(vs)}
    kept = tuple(
        Edge(e.eid, ren[e.u], ren[e.v], e.color)
        for e in g.edges
        if e.u in ren and e.v in ren
    )
    trace = SurgeryTrace(
        "induce",
        edge_map={e.eid: e.eid for e in kept},
        vertex_map={new: old for old, new in ren.items()},
    )
    return Graph(len(vs), kept), trace


def glue_vertices(g: Graph, a: int, b: int) -> tuple[Graph, SurgeryTrace]:
    """Merge b into a (the merged vertex takes min(a, b)'s slot, vertices
    above max(a, b) shift down).  Edges keep their ids; an a-b edge becomes a
    loop.  The merged vertex is reported as new (it has two preimages)."""
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise ArgumentError("glue_vertices needs two distinct vertices")
    lo, hi = min(a, b), max(a, b)

    def ren(w: int) -> int:
        if w == hi:
            return lo
        return w if w < hi else w - 1

    edges = tuple(Edge(e.eid, ren(e.u), ren(e.v), e.color) for e in g.edges)
    vmap = {ren(w): w for w in range(g.n) if w != lo and w != hi}
    trace = SurgeryTrace(
        "glue",
        edge_map={e.eid: e.eid for e in edges},
        vertex_map=vmap,
        new_vertices=frozenset({lo}),
    )
    return Graph(g.n - 1, edges), trace


# -- generation --------------------------------------------------------------


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p).

    Fixed algorithm (stable across platforms): ``random.Random(seed)``
    (Mersenne Twister), pairs (u, v) with u < v scanned in lexicographic
    order, one ``random()`` draw per pair, edge included iff draw < p.
    Edge ids run 0.. in scan order.
    """
    if n < 0:
        raise ArgumentError("n must be nonnegative")
    if not (0.0 <= p <= 1.0):
        raise ArgumentError("p must be in [0, 1]")
    rng = random.Random(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append(Edge(len(edges), u, v))
    return Graph(n, tuple(edges))
