"""Total dichotomy for edge-colored graphs: a cut-color vertex or a properly
colored (alternating) cycle — plus the four counterexample surgeries as
independent, liftable operations.

A vertex is *monochrome* when all its edges share one color, and *cut-color*
when no component of the graph minus that vertex is joined to it by more
than one color.  The dichotomy says every connected colored graph has a
cut-color vertex or an alternating cycle.  The surgeries below are the
reduction steps that drive that fact:

- ``case1_pendant``: when deleting an edge b1b2 exposes a cut-color vertex
  v, graft a pendant vertex c onto the b1-side so that any alternating cycle
  of the smaller graph yields an alternating v-to-b1 path (``lift_pendant_cycle``),
  and two such paths close into a cycle of the original graph
  (``join_paths_to_cycle``).
- ``case3_reduce``: two adjacent degree-2 vertices shrink the graph (glue or
  replace variant); ``lift_case3_cycle`` re-expands alternating cycles.
- ``mono_arc_digraph`` / ``degree2_lemma_check`` / ``counting_report``: the
  arc-counting machinery that rules out every remaining shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import _kernels
from .errors import ArgumentError, InternalInvariantError
from .graph import (
    Edge,
    Graph,
    SurgeryTrace,
    components,
    delete_edge,
    delete_vertex,
    glue_vertices,
    induced_subgraph,
    is_connected,
    is_monochrome,
)

# -- certificate and report types ---------------------------------------------


@dataclass(frozen=True, eq=True)
class AlternatingCycle:
    """A properly colored cycle: edge ``edge_ids[i]`` joins ``vertices[i]``
    to ``vertices[(i+1) % L]`` and cyclically consecutive edges have distinct
    colors.  Plain data; ``verify_alternating_cycle`` is the checker."""

    graph: Graph
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True, eq=True)
class AlternatingPath:
    """A properly colored simple path: ``edge_ids[i]`` joins ``vertices[i]``
    to ``vertices[i+1]``; consecutive edges have distinct colors."""

    graph: Graph
    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> "AlternatingPath":
        return AlternatingPath(self.graph, self.vertices[::-1], self.edge_ids[::-1])


@dataclass(frozen=True, eq=True)
class CutColorCertificate:
    """Vertex v plus, per component of g-v (indexed as ``components`` orders
    them), the single color of all v-to-component edges and one witness
    edge."""

    graph: Graph
    v: int
    component_colors: tuple[tuple[int, int], ...]
    witness_edges: tuple[tuple[int, int], ...]

    def color_of_component(self, idx: int) -> int:
        return dict(self.component_colors)[idx]


@dataclass(frozen=True, eq=True)
class MonoArcDigraph:
    """Arc (a, b, edge id): ab is an edge and b is monochrome once ab is
    deleted.  Both directions may coexist; a loop contributes one arc."""

    graph: Graph
    arcs: tuple[tuple[int, int, int], ...]

    def in_edges(self, v: int) -> tuple[int, ...]:
        return tuple(eid for (_, b, eid) in self.arcs if b == v)

    def out_edges(self, v: int) -> tuple[int, ...]:
        return tuple(eid for (a, _, eid) in self.arcs if a == v)


@dataclass(frozen=True, eq=True)
class CaseFlags:
    """Which hypotheses of the final counting case hold for a graph."""

    no_adjacent_degree2_pair: bool
    min_degree_ge_2: bool
    no_case12_reduction: bool

    def all_hold(self) -> bool:
        return (
            self.no_adjacent_degree2_pair
            and self.min_degree_ge_2
            and self.no_case12_reduction
        )


@dataclass(frozen=True, eq=True)
class CountingReport:
    """Exact counting data for the final case: x_count is the number of
    degree-2 vertices, edge_lb = (2x + 3(v - x)) / 2, arc_lb = x + e.  The
    arc inequality is evaluated (not assumed) only when all flags hold."""

    v_count: int
    e_count: int
    x_count: int
    arc_count: int
    edge_lb: Fraction
    arc_lb: Fraction
    flags: CaseFlags
    arc_bound_holds: Optional[bool]


YeoCertificate = Union[CutColorCertificate, AlternatingCycle]


@dataclass(frozen=True)
class PendantConstruction:
    """Result of ``case1_pendant``: the grafted graph plus everything needed
    to lift its cycles back.  Iterates as (graph, trace) so it unpacks like
    the bare surgery pair."""

    graph: Graph
    trace: SurgeryTrace
    base: Graph
    b1b2: int
    v: int
    b1: int
    b2: int
    c: int
    v_new: int
    b1_new: int
    b1c_id: int
    vc_id: int

    def __iter__(self):
        return iter((self.graph, self.trace))


# -- definitional verifiers ----------------------------------------------------


def verify_alternating_cycle(g: Graph, cyc: AlternatingCycle) -> bool:
    """Definitional check, independent of any search: edge-by-edge incidence
    in either orientation, simple vertices, distinct edges, cyclic
    alternation.  Length 2 passes only as a parallel pair (loops can never
    appear because the traversal vertices are distinct)."""
    if not g.is_colored:
        raise ArgumentError("alternating cycles need an edge-colored graph")
    vs, es = cyc.vertices, cyc.edge_ids
    L = len(es)
    if L < 2 or len(vs) != L:
        return False
    if len(set(vs)) != L or len(set(es)) != L:
        return False
    if not all(0 <= v < g.n for v in vs):
        return False
    if not all(g.has_edge_id(eid) for eid in es):
        return False
    for i in range(L):
        e = g.edge(es[i])
        if {e.u, e.v} != {vs[i], vs[(i + 1) % L]}:
            return False
        if e.color == g.edge(es[(i + 1) % L]).color:
            return False
    return True


def verify_alternating_path(g: Graph, p: AlternatingPath) -> bool:
    """Definitional path check: simple, incident edge-by-edge, internally
    alternating.  A single vertex with no edges is a (degenerate) path."""
    if not g.is_colored and g.edges:
        raise ArgumentError("alternating paths need an edge-colored graph")
    vs, es = p.vertices, p.edge_ids
    if len(vs) != len(es) + 1 or not vs:
        return False
    if len(set(vs)) != len(vs) or len(set(es)) != len(es):
        return False
    if not all(0 <= v < g.n for v in vs):
        return False
    if not all(g.has_edge_id(eid) for eid in es):
        return False
    for i, eid in enumerate(es):
        e = g.edge(eid)
        if {e.u, e.v} != {vs[i], vs[i + 1]}:
            return False
        if i and e.color == g.edge(es[i - 1]).color:
            return False
    return True


def verify_cut_color(g: Graph, cert: CutColorCertificate) -> bool:
    """Definitional check: recompute the components of g - v and confirm
    every non-loop edge at v matches its component's claimed single color,
    with one valid witness edge per component."""
    if not g.is_colored:
        raise ArgumentError("cut-color certificates need an edge-colored graph")
    v = cert.v
    if not (0 <= v < g.n):
        return False
    h, _ = delete_vertex(g, v)
    part = components(h)
    colors = dict(cert.component_colors)
    witnesses = dict(cert.witness_edges)
    if len(colors) != len(cert.component_colors) or len(witnesses) != len(cert.witness_edges):
        return False
    joined: dict[int, int] = {}
    for e in g.incident(v):
        if e.is_loop:
            continue
        w = e.other(v)
        comp = part.component_of[w - 1 if w > v else w]
        if comp not in colors or colors[comp] != e.color:
            return False
        joined[comp] = joined.get(comp, 0) + 1
    if set(colors) != set(joined) or set(witnesses) != set(joined):
        return False
    for comp, eid in witnesses.items():
        if not g.has_edge_id(eid):
            return False
        e = g.edge(eid)
        if e.is_loop or v not in (e.u, e.v):
            return False
        w = e.other(v)
        if part.component_of[w - 1 if w > v else w] != comp:
            return False
    return True


def is_cut_color_vertex(g: Graph, v: int) -> bool:
    """Direct test of the defining property at one vertex (no scan)."""
    if not g.is_colored:
        raise ArgumentError("cut-color vertices need an edge-colored graph")
    g._check_vertex(v)
    h, _ = delete_vertex(g, v)
    part = components(h)
    seen: dict[int, int] = {}
    for e in g.incident(v):
        if e.is_loop:
            continue
        w = e.other(v)
        comp = part.component_of[w - 1 if w > v else w]
        if comp in seen and seen[comp] != e.color:
            return False
        seen.setdefault(comp, e.color)
    return True


# -- the dichotomy --------------------------------------------------------------


def cut_color_scan(g: Graph) -> Optional[CutColorCertificate]:
    """Lowest-id cut-color vertex with its component color map, or None."""
    _require_colored_connected(g, "cut_color_scan")
    us, vs, colors = g._arrays
    x = _kernels.cut_color_vertex(g.n, us, vs, colors)
    if x < 0:
        return None
    h, _ = delete_vertex(g, x)
    part = components(h)
    comp_color: dict[int, int] = {}
    witness: dict[int, int] = {}
    for e in g.incident(x):
        if e.is_loop:
            continue
        w = e.other(x)
        comp = part.component_of[w - 1 if w > x else w]
        if comp in comp_color and comp_color[comp] != e.color:
            raise InternalInvariantError("scan accepted a vertex the assembly rejects")
        comp_color.setdefault(comp, e.color)
        witness.setdefault(comp, e.eid)
    cert = CutColorCertificate(
        g,
        x,
        tuple(sorted(comp_color.items())),
        tuple(sorted(witness.items())),
    )
    if not verify_cut_color(g, cert):
        raise InternalInvariantError("assembled cut-color certificate does not verify")
    return cert


def find_alternating_cycle(g: Graph) -> Optional[AlternatingCycle]:
    """First properly colored cycle in deterministic order (anchored at its
    lowest vertex, expanding by lowest edge id), or None."""
    if not g.is_colored:
        if g.edges:
            raise ArgumentError("find_alternating_cycle needs an edge-colored graph")
        return None
    us, vs, colors = g._arrays
    idxs = _kernels.find_alternating_cycle(g.n, us, vs, colors)
    if idxs is None:
        return None
    edges = [g.edges[i] for i in idxs]
    anchor = min(min(e.u, e.v) for e in edges)
    verts = [anchor]
    for e in edges[:-1]:
        verts.append(e.other(verts[-1]))
    cyc = AlternatingCycle(g, tuple(verts), tuple(e.eid for e in edges))
    if not verify_alternating_cycle(g, cyc):
        raise InternalInvariantError("search produced a non-verifying cycle")
    return cyc


def yeo_dichotomy(g: Graph) -> YeoCertificate:
    """Either certificate, always verified; the underlying theorem makes the
    no-certificate outcome impossible for valid inputs."""
    _require_colored_connected(g, "yeo_dichotomy")
    cut = cut_color_scan(g)
    if cut is not None:
        return cut
    cyc = find_alternating_cycle(g)
    if cyc is None:
        raise InternalInvariantError(
            "connected colored graph with neither a cut-color vertex nor an "
            "alternating cycle: dichotomy broken"
        )
    return cyc


def _require_colored_connected(g: Graph, who: str) -> None:
    if not g.is_colored:
        raise ArgumentError(f"{who} needs an edge-colored graph")
    if g.n < 2:
        raise ArgumentError(f"{who} needs at least two vertices")
    if not is_connected(g):
        raise ArgumentError(f"{who} needs a connected graph")


# -- pendant construction (degree-based reduction, first shape) -----------------


def case1_pendant(
    g: Graph, b1b2: int, v: int, b1: Optional[int] = None
) -> PendantConstruction:
    """Graft graph for the edge-deletion reduction: take X1 = {v} plus the
    component of g - b1b2 - v containing b1, add a pendant vertex c with
    edge b1-c colored like b1b2 and edge v-c in a fresh color (max + 1).

    ``b1`` defaults to the lower endpoint of b1b2; pass the other endpoint
    to build the other side.  Preconditions (argument errors): g colored and
    connected, v a cut-color vertex of g - b1b2 distinct from both
    endpoints, and at least two vertices outside X1 (otherwise the graft is
    not smaller than g).
    """
    _require_colored_connected(g, "case1_pendant")
    e = g.edge(b1b2)
    if e.is_loop:
        raise ArgumentError("b1b2 must not be a loop")
    g._check_vertex(v)
    if v in (e.u, e.v):
        raise ArgumentError("v must differ from both endpoints of b1b2")
    if b1 is None:
        b1 = min(e.u, e.v)
    elif b1 not in (e.u, e.v):
        raise ArgumentError("b1 must be an endpoint of b1b2")
    b2 = e.other(b1)

    h, _ = delete_edge(g, b1b2)
    if not is_cut_color_vertex(h, v):
        raise ArgumentError("v is not a cut-color vertex of g minus b1b2")

    h2, tr2 = delete_vertex(h, v)
    part = components(h2)
    b1_shift = b1 - 1 if b1 > v else b1
    comp_idx = part.component_of[b1_shift]
    x1_vertices = sorted({v} | {tr2.vertex_map[w] for w in part.members(comp_idx)})
    if g.n - len(x1_vertices) < 2:
        raise ArgumentError(
            "fewer than two vertices outside X1: the graft would not shrink the graph"
        )

    sub, tr = induced_subgraph(h, x1_vertices)
    fwd = {old: new for new, old in tr.vertex_map.items()}
    c = sub.n
    fresh = g.max_color() + 1
    b1c_id = g.next_edge_id()
    vc_id = b1c_id + 1
    g1 = Graph(
        sub.n + 1,
        sub.edges + (Edge(b1c_id, fwd[b1], c, e.color), Edge(vc_id, fwd[v], c, fresh)),
    )
    trace = SurgeryTrace(
        "pendant",
        edge_map={x.eid: x.eid for x in sub.edges},
        vertex_map=dict(tr.vertex_map),
        new_edges=frozenset({b1c_id, vc_id}),
        new_vertices=frozenset({c}),
    )
    return PendantConstruction(
        graph=g1,
        trace=trace,
        base=g,
        b1b2=b1b2,
        v=v,
        b1=b1,
        b2=b2,
        c=c,
        v_new=fwd[v],
        b1_new=fwd[b1],
        b1c_id=b1c_id,
        vc_id=vc_id,
    )


def lift_pendant_cycle(cons: PendantConstruction, cyc: AlternatingCycle) -> AlternatingPath:
    """Turn an alternating cycle of the grafted graph that passes through c
    into an alternating path from v to b1 inside X1 (in the original graph's
    vertex ids), whose b1-end edge color differs from color(b1b2).  A cycle
    avoiding c is rejected: it already lives in the original graph."""
    g1 = cons.graph
    if not verify_alternating_cycle(g1, cyc):
        raise ArgumentError("cycle does not verify in the grafted graph")
    if cons.c not in cyc.vertices:
        raise ArgumentError(
            "cycle avoids the pendant vertex; map it through the trace and use it directly"
        )
    i = cyc.vertices.index(cons.c)
    L = len(cyc.edge_ids)
    verts = [cyc.vertices[(i + k) % L] for k in range(L)]
    edges = [cyc.edge_ids[(i + k) % L] for k in range(L)]
    # with c rotated to the front, edges[0] and edges[-1] are c's two edges
    if {edges[0], edges[-1]} != {cons.b1c_id, cons.vc_id}:
        raise InternalInvariantError("pendant vertex is not traversed by its two edges")
    path_vertices = verts[1:]
    path_edges = edges[1:-1]
    if edges[0] == cons.vc_id:
        pass  # path runs v .. b1 already
    else:
        path_vertices.reverse()
        path_edges.reverse()
    back = dict(cons.trace.vertex_map)
    path = AlternatingPath(
        cons.base,
        tuple(back[w] for w in path_vertices),
        tuple(path_edges),
    )
    if not verify_alternating_path(cons.base, path):
        raise InternalInvariantError("lifted pendant path does not verify")
    if path.start != cons.v or path.end != cons.b1:
        raise InternalInvariantError("lifted pendant path has wrong endpoints")
    if cons.base.edge(path.edge_ids[-1]).color == cons.base.edge(cons.b1b2).color:
        raise InternalInvariantError(
            "lifted path ends in the color of b1b2 despite alternation at c"
        )
    return path


def join_paths_to_cycle(
    p1: AlternatingPath, p2: AlternatingPath, closing: tuple[int, ...] | list[int]
) -> AlternatingCycle:
    """Close two alternating paths that share only their start vertex v into
    one alternating cycle of their graph, via the given closing edges walked
    from p1's end to p2's end.  Every color constraint is checked and the
    offending junction named: the two v-edges must differ ('v-junction'),
    each closing edge must differ from its neighbors ('b1-junction',
    'closing-junction', 'b2-junction')."""
    g = p1.graph
    if p2.graph != g:
        raise ArgumentError("paths live in different graphs")
    if not verify_alternating_path(g, p1):
        raise ArgumentError("p1 is not an alternating path")
    if not verify_alternating_path(g, p2):
        raise ArgumentError("p2 is not an alternating path")
    if not p1.edge_ids or not p2.edge_ids:
        raise ArgumentError("both paths need at least one edge")
    if p1.start != p2.start:
        raise ArgumentError("paths must start at the same vertex")
    if set(p1.vertices[1:]) & set(p2.vertices[1:]):
        raise ArgumentError("paths must share only their start vertex")
    closing = tuple(closing)
    if not closing:
        raise ArgumentError("need at least one closing edge")
    if len(set(closing)) != len(closing) or set(closing) & (set(p1.edge_ids) | set(p2.edge_ids)):
        raise ArgumentError("closing edges must be new and distinct")

    # walk the closing edges from p1's end to p2's end
    walk = [p1.end]
    for eid in closing:
        e = g.edge(eid)
        if walk[-1] not in (e.u, e.v) or e.is_loop:
            raise ArgumentError(f"closing edge {eid} does not continue the walk")
        walk.append(e.other(walk[-1]))
    if walk[-1] != p2.end:
        raise ArgumentError("closing walk does not reach p2's end")
    interior = walk[1:-1]
    if len(set(interior)) != len(interior) or set(interior) & (
        set(p1.vertices) | set(p2.vertices)
    ):
        raise ArgumentError("closing walk revisits a path vertex")

    col = {eid: g.edge(eid).color for eid in (*p1.edge_ids, *p2.edge_ids, *closing)}
    if col[p1.edge_ids[0]] == col[p2.edge_ids[0]]:
        raise ArgumentError("alternation fails at the v-junction (equal colors at v)")
    if col[p1.edge_ids[-1]] == col[closing[0]]:
        raise ArgumentError("alternation fails at the b1-junction")
    for i in range(len(closing) - 1):
        if col[closing[i]] == col[closing[i + 1]]:
            raise ArgumentError(f"alternation fails at closing-junction {i}")
    if col[closing[-1]] == col[p2.edge_ids[-1]]:
        raise ArgumentError("alternation fails at the b2-junction")

    vertices = tuple(p1.vertices) + tuple(interior) + tuple(reversed(p2.vertices[1:]))
    edges = tuple(p1.edge_ids) + closing + tuple(reversed(p2.edge_ids))
    cyc = AlternatingCycle(g, vertices, edges)
    if not verify_alternating_cycle(g, cyc):
        raise InternalInvariantError("joined cycle does not verify despite junction checks")
    return cyc


# -- adjacent degree-2 reduction -------------------------------------------------


def case3_reduce(g: Graph, c1: int, c2: int) -> tuple[Graph, SurgeryTrace, str]:
    """Shrink at two adjacent degree-2 vertices c1, c2 with outer edges
    c1-b1, c2-b2.  Variant 'glue' (outer colors differ): delete the edge
    c1c2 and merge c1 with c2.  Variant 'replace' (outer colors equal):
    delete both vertices and add one edge b1-b2 in that shared color.

    Degeneracies that would create loops or parallel edges are rejected:
    b1 = b2, b1 or b2 inside {c1, c2}, and (replace variant) an existing
    b1-b2 edge."""
    if not g.is_colored:
        raise ArgumentError("case3_reduce needs an edge-colored graph")
    g._check_vertex(c1)
    g._check_vertex(c2)
    if c1 == c2:
        raise ArgumentError("c1 and c2 must be distinct")
    if g.degree(c1) != 2 or g.degree(c2) != 2:
        raise ArgumentError("c1 and c2 must both have degree 2")
    between = [e for e in g.incident(c1) if e.touches(c2)]
    if not between:
        raise ArgumentError("c1 and c2 must be adjacent")
    if len(between) > 1:
        raise ArgumentError("parallel edges between c1 and c2: no outer edges exist")
    e12 = between[0]
    (eb1,) = [e for e in g.incident(c1) if e.eid != e12.eid]
    (eb2,) = [e for e in g.incident(c2) if e.eid != e12.eid]
    b1 = eb1.other(c1)
    b2 = eb2.other(c2)
    if b1 in (c1, c2) or b2 in (c1, c2):
        raise ArgumentError("outer edges must leave the pair")
    if b1 == b2:
        raise ArgumentError("outer edges meet at one vertex; reducing would degenerate")

    if eb1.color != eb2.color:
        h, _ = delete_edge(g, e12.eid)
        h2, t2 = glue_vertices(h, c1, c2)
        trace = SurgeryTrace(
            "contract",
            edge_map={eid: eid for eid in h2.edge_ids},
            vertex_map=dict(t2.vertex_map),
            new_vertices=t2.new_vertices,
        )
        return h2, trace, "glue"

    if any(x.touches(b2) for x in g.incident(b1) if not x.is_loop):
        raise ArgumentError("b1 and b2 are already adjacent; replacing would add a parallel edge")
    hi, lo = max(c1, c2), min(c1, c2)
    h, t_hi = delete_vertex(g, hi)
    h2, t_lo = delete_vertex(h, lo)
    vmap = {nf: t_hi.vertex_map[mid] for nf, mid in t_lo.vertex_map.items()}
    fwd = {old: new for new, old in vmap.items()}
    new_id = g.next_edge_id()
    reduced = Graph(h2.n, h2.edges + (Edge(new_id, fwd[b1], fwd[b2], eb1.color),))
    trace = SurgeryTrace(
        "contract",
        edge_map={eid: eid for eid in h2.edge_ids},
        vertex_map=vmap,
        new_edges=frozenset({new_id}),
    )
    return reduced, trace, "replace"


def _case3_site(g: Graph, trace: SurgeryTrace) -> tuple[int, int, Edge, Edge, Edge]:
    """Recover (c1, c2, e12, eb1, eb2) of a case-3 reduction from its trace,
    with c1 the lower removed vertex."""
    removed = sorted(set(range(g.n)) - set(trace.vertex_map.values()))
    if len(removed) != 2:
        raise ArgumentError("trace does not describe an adjacent degree-2 reduction")
    c1, c2 = removed
    between = [e for e in g.incident(c1) if e.touches(c2)]
    if len(between) != 1:
        raise ArgumentError("reduction site is not a single edge between c1 and c2")
    e12 = between[0]
    outer1 = [e for e in g.incident(c1) if e.eid != e12.eid]
    outer2 = [e for e in g.incident(c2) if e.eid != e12.eid]
    if len(outer1) != 1 or len(outer2) != 1:
        raise ArgumentError("reduction site vertices are not degree 2")
    return c1, c2, e12, outer1[0], outer2[0]


def lift_case3_cycle(
    g: Graph, trace: SurgeryTrace, variant: str, cyc: AlternatingCycle
) -> AlternatingCycle:
    """Re-expand an alternating cycle of the reduced graph into g.

    Glue variant: a cycle crossing the merged vertex gains the c1-c2 edge
    (+1 edge); replace variant: a cycle using the added b1-b2 edge gains the
    b1-c1-c2-b2 detour (+2 edges).  Cycles avoiding the surgery site map
    straight through.  The c1c2-edge color must differ from both outer edge
    colors for the insertion to alternate; when it does not (which makes c1
    or c2 monochrome in g, so g has a cut-color vertex anyway) the lift is
    refused with an argument error."""
    reduced = cyc.graph
    if not verify_alternating_cycle(reduced, cyc):
        raise ArgumentError("cycle does not verify in the reduced graph")

    if variant == "glue":
        if len(trace.new_vertices) != 1:
            raise ArgumentError("glue trace must introduce exactly one merged vertex")
        (m,) = trace.new_vertices
        c1, c2, e12, eb1, eb2 = _case3_site(g, trace)
        back = dict(trace.vertex_map)
        if m not in cyc.vertices:
            lifted = AlternatingCycle(
                g, tuple(back[w] for w in cyc.vertices), cyc.edge_ids
            )
            return _checked_lift(g, lifted)
        i = cyc.vertices.index(m)
        L = len(cyc.edge_ids)
        verts = [cyc.vertices[(i + k) % L] for k in range(L)]
        edges = [cyc.edge_ids[(i + k) % L] for k in range(L)]
        first_c = _c_endpoint(g, edges[0], (c1, c2))
        last_c = _c_endpoint(g, edges[-1], (c1, c2))
        if first_c == last_c:
            raise InternalInvariantError("merged vertex traversed on one side only")
        gamma = e12.color
        if gamma == g.edge(edges[0]).color or gamma == g.edge(edges[-1]).color:
            raise ArgumentError(
                "c1c2 shares a color with an outer edge (the site vertex is "
                "monochrome in g); the glued cycle does not lift"
            )
        new_vertices = (first_c, *(back[w] for w in verts[1:]), last_c)
        new_edges = (*edges, e12.eid)
        return _checked_lift(g, AlternatingCycle(g, new_vertices, new_edges))

    if variant == "replace":
        if len(trace.new_edges) != 1:
            raise ArgumentError("replace trace must introduce exactly one edge")
        (ne,) = trace.new_edges
        c1, c2, e12, eb1, eb2 = _case3_site(g, trace)
        back = dict(trace.vertex_map)
        if ne not in cyc.edge_ids:
            lifted = AlternatingCycle(
                g, tuple(back[w] for w in cyc.vertices), cyc.edge_ids
            )
            return _checked_lift(g, lifted)
        gamma = e12.color
        if gamma == eb1.color or gamma == eb2.color:
            raise ArgumentError(
                "c1c2 shares the outer color (a site vertex is monochrome in g); "
                "the replaced cycle does not lift"
            )
        j = cyc.edge_ids.index(ne)
        L = len(cyc.edge_ids)
        verts = [back[cyc.vertices[(j + 1 + k) % L]] for k in range(L)]
        edges = [cyc.edge_ids[(j + 1 + k) % L] for k in range(L - 1)]
        # verts runs from one b-endpoint around to the other; rebuild with the detour
        b_first, b_last = verts[0], verts[-1]
        if {b_first, b_last} != {eb1.other(c1), eb2.other(c2)}:
            raise InternalInvariantError("replacement edge endpoints do not map to b1, b2")
        if b_last == eb1.other(c1):
            detour_edges = (eb1.eid, e12.eid, eb2.eid)
            detour_vertices = (c1, c2)
        else:
            detour_edges = (eb2.eid, e12.eid, eb1.eid)
            detour_vertices = (c2, c1)
        new_vertices = (*verts, *detour_vertices)
        new_edges = (*edges, *detour_edges)
        return _checked_lift(g, AlternatingCycle(g, new_vertices, new_edges))

    raise ArgumentError(f"unknown reduction variant {variant!r}")


def _c_endpoint(g: Graph, eid: int, pair: tuple[int, int]) -> int:
    e = g.edge(eid)
    hits = [w for w in (e.u, e.v) if w in pair]
    if len(hits) != 1:
        raise InternalInvariantError("edge at the merged vertex does not touch exactly one site vertex")
    return hits[0]


def _checked_lift(g: Graph, cyc: AlternatingCycle) -> AlternatingCycle:
    if not verify_alternating_cycle(g, cyc):
        raise InternalInvariantError("lifted cycle does not verify in the original graph")
    return cyc


# -- arc counting machinery ------------------------------------------------------


def mono_arc_digraph(g: Graph) -> MonoArcDigraph:
    """Arc a -> b for every edge ab whose deletion leaves b monochrome
    (degree 0 or 1 counts as monochrome; a loop yields one arc u -> u)."""
    if not g.is_colored and g.edges:
        raise ArgumentError("mono_arc_digraph needs an edge-colored graph")
    us, vs, colors = g._arrays
    raw = _kernels.mono_arcs(g.n, us, vs, colors or [])
    return MonoArcDigraph(g, tuple((a, b, g.edges[i].eid) for (a, b, i) in raw))


def degree2_lemma_check(g: Graph) -> list[int]:
    """Vertices hit by two arcs (distinct underlying edges) that are not
    monochrome yet do not have exactly two incident edges — provably none,
    so any returned vertex falsifies the counting lemma.  (Loops count once
    here: on loop-free graphs "two incident edges" is exactly degree 2, and
    only that form stays provable when differently colored loops exist.)"""
    d = mono_arc_digraph(g)
    incoming: dict[int, set[int]] = {}
    for _, b, eid in d.arcs:
        incoming.setdefault(b, set()).add(eid)
    violations = []
    for v in range(g.n):
        if (
            len(incoming.get(v, ())) >= 2
            and not is_monochrome(g, v)
            and len(g.incident(v)) != 2
        ):
            violations.append(v)
    return violations


def counting_report(g: Graph) -> CountingReport:
    """Exact counts for the final case: with x degree-2 vertices among v,
    edge_lb = (2x + 3(v-x))/2 (a handshake bound once min degree >= 2,
    asserted), and arc_lb = x + e (evaluated against the true arc count only
    when every case hypothesis flag holds)."""
    _require_colored_connected(g, "counting_report")
    degs = [g.degree(w) for w in range(g.n)]
    x = sum(1 for d in degs if d == 2)
    v = g.n
    e = len(g.edges)
    edge_lb = Fraction(2 * x + 3 * (v - x), 2)
    arcs = mono_arc_digraph(g).arcs
    flags = CaseFlags(
        no_adjacent_degree2_pair=not any(
            not ed.is_loop and degs[ed.u] == 2 and degs[ed.v] == 2 for ed in g.edges
        ),
        min_degree_ge_2=all(d >= 2 for d in degs),
        no_case12_reduction=_no_case12_reduction(g, degs),
    )
    if flags.min_degree_ge_2 and e < edge_lb:
        raise InternalInvariantError("handshake bound violated with min degree >= 2")
    arc_bound_holds = (len(arcs) >= x + e) if flags.all_hold() else None
    return CountingReport(
        v_count=v,
        e_count=e,
        x_count=x,
        arc_count=len(arcs),
        edge_lb=edge_lb,
        arc_lb=Fraction(x + e),
        flags=flags,
        arc_bound_holds=arc_bound_holds,
    )


def _no_case12_reduction(g: Graph, degs: list[int]) -> bool:
    """True when no single-edge deletion and no degree-2 vertex deletion
    wipes out all monochrome vertices (i.e. the first two reduction shapes
    are unavailable)."""
    for ed in g.edges:
        h, _ = delete_edge(g, ed.eid)
        if not any(is_monochrome(h, w) for w in range(h.n)):
            return False
    for w in range(g.n):
        if degs[w] == 2:
            h, _ = delete_vertex(g, w)
            if not any(is_monochrome(h, y) for y in range(h.n)):
                return False
    return True
