"""Total dichotomy for matchings: a bridge inside the matching, or a second
perfect matching — with the arm telling you exactly whether the matching is
unique.

The engine is a recursion over ever-smaller graphs:

(i)   matching bridges are unavoidable (their side of the cut is odd, so
      *every* perfect matching uses them): strip them and their endpoints
      and recurse into each remaining component; the bridge arm is returned
      only when every factor is itself unique, so bridge arm <=> unique.
(ii)  a bridge outside the matching splits the graph; the side containing
      its lower endpoint keeps a perfect sub-matching, recurse there.
(iii) otherwise bridgeless: the first non-matching edge whose deletion
      creates no matching bridge is simply deleted.
(iv)  if no such edge exists and some vertex has two non-matching edges,
      pigeonhole gives two deletions sharing a lowest matching bridge;
      cutting along that pair splits the graph into two sides that are
      solved independently and recombined.

Between (iii) and (iv) sits the one remaining shape — every vertex with
exactly one non-matching incidence, i.e. a single even cycle — whose
complement is itself a second perfect matching.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

from . import _kernels
from .errors import ArgumentError, InternalInvariantError
from .graph import Edge, Graph, bridges, components, delete_edge, induced_subgraph, is_connected
from .matching import Matching, verify_perfect_matching


@dataclass(frozen=True)
class MatchingBridge:
    """Certifies: this edge lies in the base matching and is a bridge (and,
    by the dichotomy's contract, that the matching is unique).  Carries its
    graph and matching so it serializes without extra context."""

    graph: Graph
    base_matching: Matching
    edge_id: int

    @property
    def arm(self) -> str:
        return "bridge"


@dataclass(frozen=True)
class SecondMatching:
    """Certifies non-uniqueness by exhibiting a perfect matching different
    from the base one."""

    base_matching: Matching
    matching: Matching

    @property
    def arm(self) -> str:
        return "second_matching"


KotzigCertificate = Union[MatchingBridge, SecondMatching]


@dataclass(frozen=True)
class SideSplit:
    """The two-sided cut used by step (iv): deleting a1, a2 leaves exactly
    the components X (containing x1, x2) and Y (containing y1, y2), with
    a1 = x1-y1, a2 = x2-y2 and the common bridge b inside one side."""

    graph: Graph
    f_ids: frozenset[int]
    a1: int
    a2: int
    b: int
    x_vertices: frozenset[int]
    y_vertices: frozenset[int]
    x1: int
    y1: int
    x2: int
    y2: int


def verify_kotzig_certificate(g: Graph, f: Matching, cert: KotzigCertificate) -> bool:
    """Definitional check, independent of the search: bridges are re-derived
    by deletion + component recount, and the base matching is re-checked to be
    perfect (both arms presuppose it; a checker fed reconstructed inputs must
    not take the producer's word for it).  The certificate must also bind to
    the very (g, f) being queried."""
    if isinstance(cert, MatchingBridge):
        if cert.graph != g or cert.base_matching != f:
            return False
        if not verify_perfect_matching(g, f):
            return False
        if cert.edge_id not in f.edge_ids or not g.has_edge_id(cert.edge_id):
            return False
        before = components(g).component_count
        after = components(delete_edge(g, cert.edge_id)[0]).component_count
        return after == before + 1
    if isinstance(cert, SecondMatching):
        if cert.base_matching != f or cert.matching.graph != g:
            return False
        if not verify_perfect_matching(g, f):
            return False
        m = cert.matching
        return verify_perfect_matching(g, m) and m.edge_ids != f.edge_ids
    return False


def kotzig_dichotomy(g: Graph, f: Matching) -> KotzigCertificate:
    """Either a MatchingBridge (iff f is g's unique perfect matching) or a
    SecondMatching.  g must be connected with >= 2 vertices and uncolored;
    f must be a perfect matching of g."""
    if g.is_colored:
        raise ArgumentError("kotzig_dichotomy expects an uncolored graph")
    if g.n < 2:
        raise ArgumentError("need at least two vertices")
    if not is_connected(g):
        raise ArgumentError("graph must be connected")
    if not verify_perfect_matching(g, f):
        raise ArgumentError("f must be a perfect matching of g")
    tag, val = _solve(g, f.edge_ids)
    cert: KotzigCertificate
    if tag == "bridge":
        cert = MatchingBridge(g, f, val)
    else:
        cert = SecondMatching(f, Matching(g, val))
    if not verify_kotzig_certificate(g, f, cert):
        raise InternalInvariantError("dichotomy produced a non-verifying certificate")
    return cert


def _solve(g: Graph, f_ids: frozenset[int]) -> tuple[str, int | frozenset[int]]:
    br = bridges(g)
    f_bridges = sorted(br & f_ids)
    if f_bridges:
        return _factor_matching_bridges(g, f_ids, f_bridges)

    if br:  # (ii) every bridge is outside f
        a = g.edge(min(br))
        h, _ = delete_edge(g, a.eid)
        part = components(h)
        side = part.component_of[min(a.u, a.v)]
        comp, _ = induced_subgraph(h, part.members(side))
        comp_f = f_ids & set(comp.edge_ids)
        if 2 * len(comp_f) != comp.n:
            raise InternalInvariantError("matching does not restrict to the bridge side")
        tag, val = _solve(comp, frozenset(comp_f))
        if tag != "bridge":
            return ("second", (f_ids - comp_f) | val)
        raise InternalInvariantError("bridge-free side returned a bridge arm")

    # bridgeless from here on
    id_to_idx = {e.eid: i for i, e in enumerate(g.edges)}
    us, vs, _ = g._arrays
    fbar = sorted(set(g.edge_ids) - f_ids)

    for eid in fbar:  # (iii)
        mask = _kernels.bridge_mask(g.n, us, vs, skip=id_to_idx[eid])
        if not any(mask[id_to_idx[fe]] for fe in f_ids):
            h, _ = delete_edge(g, eid)
            tag, val = _solve(h, f_ids)
            if tag != "bridge":
                return ("second", val)
            raise InternalInvariantError("f-bridge-free deletion returned a bridge arm")

    # single even alternating cycle: the complement is the second matching
    nf_inc = [0] * g.n
    for e in g.edges:
        if e.eid not in f_ids:
            nf_inc[e.u] += 1
            nf_inc[e.v] += 1
    if all(x == 1 for x in nf_inc):
        return ("second", frozenset(fbar))

    # (iv)
    f = Matching(g, f_ids)
    a1, a2, b = find_common_bridge_pair(g, f)
    s = split_sides(g, f, a1, a2, b)
    side_results: dict[str, Matching] = {}
    for side in ("x", "y"):
        side_graph, side_f, new_edge = build_side_graph(g, s, side)
        tag, val = _solve(side_graph, side_f.edge_ids)
        if tag == "bridge":
            raise InternalInvariantError("side graph returned a bridge arm")
        assert isinstance(val, frozenset)
        if new_edge not in val:
            return ("second", (f_ids - side_f.edge_ids) | val)
        side_results[side] = Matching(side_graph, val)
    combined = combine_matchings(s, side_results["x"], side_results["y"])
    return ("second", combined.edge_ids)


def _factor_matching_bridges(
    g: Graph, f_ids: frozenset[int], f_bridges: list[int]
) -> tuple[str, int | frozenset[int]]:
    """(i): strip the matching bridges (present in every perfect matching)
    and their endpoints; a second matching in any remaining component lifts,
    and if all components are unique so is g."""
    covered = set()
    for eid in f_bridges:
        e = g.edge(eid)
        covered.add(e.u)
        covered.add(e.v)
    rest = [v for v in range(g.n) if v not in covered]
    if rest:
        sub, _ = induced_subgraph(g, rest)
        part = components(sub)
        for ci in range(part.component_count):
            comp, _ = induced_subgraph(sub, part.members(ci))
            comp_f = f_ids & set(comp.edge_ids)
            if 2 * len(comp_f) != comp.n:
                raise InternalInvariantError("matching does not restrict to a factor")
            tag, val = _solve(comp, frozenset(comp_f))
            if tag != "bridge":
                assert isinstance(val, frozenset)
                return ("second", (f_ids - comp_f) | val)
    return ("bridge", f_bridges[0])


def find_common_bridge_pair(g: Graph, f: Matching) -> tuple[int, int, int]:
    """First pair (a1, a2) of non-matching edges, in scan order, whose
    one-edge deletions share their lowest-id matching bridge b.

    Preconditions: g connected and bridgeless, f perfect, every non-matching
    deletion creates a matching bridge, and |f| < |non-matching edges| (the
    pigeonhole premise; an even cycle fails it).  Under these the collision
    is guaranteed, so running out of edges is an internal error.
    """
    if not is_connected(g):
        raise ArgumentError("graph must be connected")
    if bridges(g):
        raise ArgumentError("graph must be bridgeless")
    if not verify_perfect_matching(g, f):
        raise ArgumentError("f must be a perfect matching of g")
    fbar = sorted(set(g.edge_ids) - f.edge_ids)
    if not len(f.edge_ids) < len(fbar):
        raise ArgumentError("pigeonhole premise |F| < |F-bar| does not hold")
    id_to_idx = {e.eid: i for i, e in enumerate(g.edges)}
    us, vs, _ = g._arrays
    beta_owner: dict[int, int] = {}
    for eid in fbar:
        mask = _kernels.bridge_mask(g.n, us, vs, skip=id_to_idx[eid])
        f_bridges = sorted(fe for fe in f.edge_ids if mask[id_to_idx[fe]])
        if not f_bridges:
            raise ArgumentError(f"deleting edge {eid} creates no matching bridge")
        beta = f_bridges[0]
        if beta in beta_owner:
            return (beta_owner[beta], eid, beta)
        beta_owner[beta] = eid
    raise InternalInvariantError("no common-bridge collision despite the pigeonhole premise")


def split_sides(g: Graph, f: Matching, a1: int, a2: int, b: int) -> SideSplit:
    """Resolve the cut structure of a common-bridge triple.  X is the side
    containing a1's lower endpoint.  Component-count mismatches mean the
    triple did not come from find_common_bridge_pair and are internal
    errors."""
    ea1, ea2, eb = g.edge(a1), g.edge(a2), g.edge(b)
    if len({a1, a2, b}) != 3:
        raise ArgumentError("a1, a2, b must be three distinct edges")
    if b not in f.edge_ids or a1 in f.edge_ids or a2 in f.edge_ids:
        raise ArgumentError("need a1, a2 outside the matching and b inside it")
    without = Graph(g.n, tuple(e for e in g.edges if e.eid not in (a1, a2)))
    part = components(without)
    if part.component_count != 2:
        raise InternalInvariantError("deleting {a1, a2} must leave exactly two components")
    without_b = Graph(g.n, tuple(e for e in without.edges if e.eid != b))
    if components(without_b).component_count != 3:
        raise InternalInvariantError("deleting {a1, a2, b} must leave exactly three components")
    x_idx = part.component_of[min(ea1.u, ea1.v)]
    xs = frozenset(part.members(x_idx))
    ys = frozenset(v for v in range(g.n) if v not in xs)
    if (ea1.u in xs) == (ea1.v in xs) or (ea2.u in xs) == (ea2.v in xs):
        raise InternalInvariantError("a1 and a2 must each cross between the sides")
    x1, y1 = (ea1.u, ea1.v) if ea1.u in xs else (ea1.v, ea1.u)
    x2, y2 = (ea2.u, ea2.v) if ea2.u in xs else (ea2.v, ea2.u)
    if (eb.u in xs) != (eb.v in xs):
        raise InternalInvariantError("the common bridge must lie inside one side")
    return SideSplit(g, f.edge_ids, a1, a2, b, xs, ys, x1, y1, x2, y2)


def build_side_graph(
    g: Graph, s: SideSplit, side: Literal["x", "y"]
) -> tuple[Graph, Matching, int]:
    """Induced side plus the one new edge joining the two cut endpoints
    (a loop when they coincide).  The new edge id is fresh relative to g and
    identical for both sides, so it can be recognized during recombination.
    Returns (side graph, matching restricted to the side, new edge id)."""
    if side == "x":
        verts, p, q = s.x_vertices, s.x1, s.x2
    elif side == "y":
        verts, p, q = s.y_vertices, s.y1, s.y2
    else:
        raise ArgumentError("side must be 'x' or 'y'")
    sub, trace = induced_subgraph(g, verts)
    fwd = {old: new for new, old in trace.vertex_map.items()}
    new_id = g.next_edge_id()
    side_graph = Graph(sub.n, sub.edges + (Edge(new_id, fwd[p], fwd[q]),))
    side_f = Matching(side_graph, s.f_ids & set(sub.edge_ids))
    return side_graph, side_f, new_id


def combine_matchings(s: SideSplit, fx2: Matching, fy2: Matching) -> Matching:
    """Recombine side matchings that both use their new edge: drop the new
    edges, add back a1 and a2.  Verified perfect on the split's graph."""
    new_id = s.graph.next_edge_id()
    if new_id not in fx2.edge_ids or new_id not in fy2.edge_ids:
        raise ArgumentError("both side matchings must contain their new edge")
    ids = (fx2.edge_ids - {new_id}) | (fy2.edge_ids - {new_id}) | {s.a1, s.a2}
    out = Matching(s.graph, ids)
    if not verify_perfect_matching(s.graph, out):
        raise InternalInvariantError("recombined matching is not perfect")
    return out


def kotzig_holds(g: Graph) -> bool:
    """Falsification probe: False only for a connected graph whose unique
    perfect matching contains no bridge — which the theorem rules out."""
    if g.n < 2 or not is_connected(g):
        return True
    from .matching import has_unique_pm

    m = has_unique_pm(g)
    if m is None:
        return True
    return bool(bridges(g) & m.edge_ids)
