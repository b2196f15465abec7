"""Matchings as 2-colorings: encode a perfect matching with colors
{0 = outside, 1 = inside}, translate the edge-colored dichotomy's
certificates back into matching certificates, and cover the two-color
special case (Grossman-Haggkvist).

With two colors an alternating cycle is forced to strictly alternate
matching / non-matching edges, so its symmetric difference with the matching
is a second perfect matching; and a cut-color vertex pins its matching edge
as the sole connection into the partner's component, i.e. a bridge inside
the matching.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ArgumentError, InternalInvariantError
from .graph import Graph, bridges, components, delete_vertex, is_connected
from .kotzig import KotzigCertificate, MatchingBridge, SecondMatching, verify_kotzig_certificate
from .matching import Matching, verify_perfect_matching
from .yeo import (
    AlternatingCycle,
    cut_color_scan,
    find_alternating_cycle,
    verify_alternating_cycle,
    verify_cut_color,
    yeo_dichotomy,
)

MATCHING_COLOR = 1
NON_MATCHING_COLOR = 0


@dataclass(frozen=True)
class TwoColoring:
    """A graph whose colors are restricted to {0, 1} with the 1-edges
    forming a perfect matching."""

    graph: Graph

    def __post_init__(self):
        g = self.graph
        if not g.is_colored:
            raise ArgumentError("a two-coloring needs colored edges")
        if not g.colors() <= {NON_MATCHING_COLOR, MATCHING_COLOR}:
            raise ArgumentError("colors must be 0 (non-matching) or 1 (matching)")
        ids = frozenset(e.eid for e in g.edges if e.color == MATCHING_COLOR)
        m = Matching(g, ids)
        if not m.is_perfect():
            raise ArgumentError("the color-1 edges must form a perfect matching")

    @property
    def matching_ids(self) -> frozenset[int]:
        return frozenset(e.eid for e in self.graph.edges if e.color == MATCHING_COLOR)

    def matching(self) -> Matching:
        return Matching(self.graph, self.matching_ids)


def matching_to_coloring(g: Graph, f: Matching) -> TwoColoring:
    """Same graph with f's edges colored 1 and everything else 0 (any
    pre-existing colors are replaced)."""
    if not verify_perfect_matching(g, f):
        raise ArgumentError("f must be a perfect matching of g")
    colors = [
        MATCHING_COLOR if e.eid in f.edge_ids else NON_MATCHING_COLOR for e in g.edges
    ]
    return TwoColoring(g.with_colors(colors))


def alternating_cycle_to_second_matching(
    g: Graph, f: Matching, cyc: AlternatingCycle
) -> Matching:
    """Flip f along an alternating cycle of the encoding: the result is
    f symmetric-difference cycle-edges, a different perfect matching.

    With only two colors, "consecutive colors differ" already forces strict
    matching / non-matching alternation (and hence even length); that is
    re-asserted, not assumed."""
    tc = matching_to_coloring(g, f)
    if not verify_alternating_cycle(tc.graph, cyc):
        raise ArgumentError("cyc is not an alternating cycle of the matching encoding")
    in_f = [tc.graph.edge(eid).color == MATCHING_COLOR for eid in cyc.edge_ids]
    L = len(in_f)
    if L % 2 or any(in_f[i] == in_f[(i + 1) % L] for i in range(L)):
        raise InternalInvariantError(
            "two-colored alternating cycle failed to strictly alternate matching membership"
        )
    flipped = Matching(g, f.edge_ids ^ frozenset(cyc.edge_ids))
    if not verify_perfect_matching(g, flipped) or flipped.edge_ids == f.edge_ids:
        raise InternalInvariantError("flipping along the cycle did not produce a second matching")
    return flipped


def derive_kotzig_bridge_from_yeo(g: Graph, f: Matching) -> KotzigCertificate:
    """Solve the matching dichotomy by translation: run the edge-colored
    dichotomy on the 2-coloring.  An alternating cycle flips into a second
    matching; with no cycle, the guaranteed cut-color vertex v pins the
    matching edge vu (u = v's partner): u's component is the unique
    matching-colored one and vu its sole connecting edge, hence a bridge of
    g inside f.

    The cycle arm is checked first.  A cut-color vertex can coexist with an
    alternating cycle (a pendant matching edge hanging off an even cycle),
    and only "no cycle in the encoding" is equivalent to f being unique —
    so cycle-priority is what makes this translation return the same arm as
    the direct matching solver on every input."""
    if g.n < 2:
        raise ArgumentError("need at least two vertices")
    if not is_connected(g):
        raise ArgumentError("graph must be connected")
    if not verify_perfect_matching(g, f):
        raise ArgumentError("f must be a perfect matching of g")
    tc = matching_to_coloring(g, f)
    cyc = find_alternating_cycle(tc.graph)
    if cyc is not None:
        return SecondMatching(f, alternating_cycle_to_second_matching(g, f, cyc))

    result = cut_color_scan(tc.graph)
    if result is None:
        raise InternalInvariantError(
            "encoding with no alternating cycle must have a cut-color vertex"
        )
    v = result.v
    partner_edges = [
        eid for eid in f.edge_ids if v in (g.edge(eid).u, g.edge(eid).v)
    ]
    if len(partner_edges) != 1:
        raise InternalInvariantError("perfect matching must touch v exactly once")
    vu_id = partner_edges[0]
    u = g.edge(vu_id).other(v)

    h, _ = delete_vertex(g, v)
    part = components(h)
    u_comp = part.component_of[u - 1 if u > v else u]
    matching_comps = [
        comp for comp, color in result.component_colors if color == MATCHING_COLOR
    ]
    if matching_comps != [u_comp]:
        raise InternalInvariantError(
            "the partner's component must be the unique matching-colored one"
        )
    into_u_comp = [
        e
        for e in g.incident(v)
        if not e.is_loop and part.component_of[e.other(v) - 1 if e.other(v) > v else e.other(v)] == u_comp
    ]
    if [e.eid for e in into_u_comp] != [vu_id]:
        raise InternalInvariantError("vu must be the sole edge from v into u's component")
    if vu_id not in bridges(g):
        raise InternalInvariantError("the pinned matching edge must be a bridge")
    cert = MatchingBridge(g, f, vu_id)
    if not verify_kotzig_certificate(g, f, cert):
        raise InternalInvariantError("translated bridge certificate does not verify")
    return cert


def grossman_haggkvist_check(g: Graph) -> bool:
    """Falsification probe for the two-color case: the dichotomy must return
    a verifying certificate on every connected graph colored with at most
    two distinct colors."""
    if not g.is_colored:
        raise ArgumentError("grossman_haggkvist_check needs an edge-colored graph")
    if len(g.colors()) > 2:
        raise ArgumentError("this check covers colorings with at most two distinct colors")
    result = yeo_dichotomy(g)
    if isinstance(result, AlternatingCycle):
        return verify_alternating_cycle(g, result)
    return verify_cut_color(g, result)
