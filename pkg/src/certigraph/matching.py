"""Perfect matchings: verification, enumeration, and the alternating-cycle
route to a second one.

A second perfect matching exists iff some cycle alternates between matching
and non-matching edges (symmetric-differencing such a cycle flips it into a
different perfect matching), so the search below is the constructive side of
non-uniqueness.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import ArgumentError
from .graph import Graph


@dataclass(frozen=True)
class Matching:
    """A set of edge ids of the host graph, pairwise vertex-disjoint and
    loop-free (not necessarily perfect)."""

    graph: Graph
    edge_ids: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", frozenset(self.edge_ids))
        seen = set()
        for eid in self.edge_ids:
            e = self.graph.edge(eid)
            if e.is_loop:
                raise ArgumentError(f"edge {eid} is a loop; loops never match")
            if e.u in seen or e.v in seen:
                raise ArgumentError(f"edge {eid} shares a vertex with another matching edge")
            seen.add(e.u)
            seen.add(e.v)

    @property
    def covered(self) -> frozenset[int]:
        out = set()
        for eid in self.edge_ids:
            e = self.graph.edge(eid)
            out.add(e.u)
            out.add(e.v)
        return frozenset(out)

    def is_perfect(self) -> bool:
        return len(self.edge_ids) * 2 == self.graph.n

    def sorted_ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_ids))


def verify_perfect_matching(g: Graph, m: Matching) -> bool:
    """Definitional check: every vertex of g covered exactly once by m.
    Edge ids foreign to g are an argument error, not a False."""
    seen = set()
    for eid in m.edge_ids:
        e = g.edge(eid)  # raises ArgumentError on foreign ids
        if e.is_loop or e.u in seen or e.v in seen:
            return False
        seen.add(e.u)
        seen.add(e.v)
    return len(seen) == g.n


def count_perfect_matchings(g: Graph, cap: int = 0) -> int:
    """Number of perfect matchings, stopping early at ``cap`` (0 = count all)."""
    if cap < 0:
        raise ArgumentError("cap must be >= 0")
    us, vs, _ = g._arrays
    return _kernels.count_perfect_matchings(g.n, us, vs, cap)


def first_perfect_matching(g: Graph) -> Matching | None:
    """Deterministic first perfect matching (backtracking on the lowest
    uncovered vertex, edges in id order), or None."""
    us, vs, _ = g._arrays
    idxs = _kernels.first_perfect_matching(g.n, us, vs)
    if idxs is None:
        return None
    return Matching(g, frozenset(g.edges[i].eid for i in idxs))


def enumerate_perfect_matchings(g: Graph, limit: int | None = None) -> list[Matching]:
    """All perfect matchings, ordered lexicographically by their sorted edge
    id tuples; the first ``limit`` of that order if given.

    Backtracking emits in DFS order, which is *not* that order (later
    branches can complete with smaller ids), so results are sorted before
    the limit is applied.
    """
    if limit is not None and limit < 1:
        raise ArgumentError("limit must be >= 1")
    if g.n % 2:
        return []
    found: list[tuple[int, ...]] = []
    inc = g._incidence
    edges = g.edges
    full = (1 << g.n) - 1 if g.n else 0
    chosen: list[int] = []

    def rec(cov: int) -> None:
        if cov == full:
            found.append(tuple(sorted(edges[i].eid for i in chosen)))
            return
        x = (~cov) & full
        v = (x & -x).bit_length() - 1
        for i in inc[v]:
            e = edges[i]
            if e.is_loop:
                continue
            w = e.u ^ e.v ^ v
            if not (cov >> w) & 1:
                chosen.append(i)
                rec(cov | (1 << v) | (1 << w))
                chosen.pop()

    rec(0)
    found.sort()
    if limit is not None:
        found = found[:limit]
    return [Matching(g, frozenset(ids)) for ids in found]


def matching_alternating_cycle(g: Graph, f: Matching) -> list[int] | None:
    """First cycle alternating between f and non-f edges, as a cyclic edge id
    list starting with its lowest-id f edge; None if f is the unique way to
    extend itself (i.e. none exists).

    Exhaustive DFS, intended for desk-scale graphs: starting from each f edge
    (u, w) in id order, grow a simple path from w on alternating edges and
    close it back at u on a non-f edge.
    """
    f_ids = f.edge_ids
    for eid in sorted(f_ids):
        e0 = g.edge(eid)
        if e0.is_loop:
            continue
        u, w = e0.u, e0.v
        res = _alt_path(g, f_ids, u, w, eid)
        if res is not None:
            return [eid] + res
    return None


def _alt_path(g: Graph, f_ids, target: int, start: int, first_eid: int) -> list[int] | None:
    inc = g._incidence
    edges = g.edges

    def rec(v: int, need_f: bool, visited: set[int], path: list[int]) -> list[int] | None:
        for i in inc[v]:
            e = edges[i]
            if e.is_loop or (e.eid in f_ids) != need_f:
                continue
            w = e.other(v)
            if w == target:
                if not need_f and e.eid != first_eid:
                    return path + [e.eid]
            elif w not in visited:
                visited.add(w)
                res = rec(w, not need_f, visited, path + [e.eid])
                if res is not None:
                    return res
                visited.remove(w)
        return None

    return rec(start, False, {target, start}, [])


def second_matching(g: Graph, f: Matching) -> Matching | None:
    """A perfect matching different from f, obtained by flipping f along an
    f-alternating cycle; None iff f is the unique perfect matching."""
    if not verify_perfect_matching(g, f):
        raise ArgumentError("f must be a perfect matching of g")
    cyc = matching_alternating_cycle(g, f)
    if cyc is None:
        return None
    other = Matching(g, f.edge_ids.symmetric_difference(cyc))
    assert verify_perfect_matching(g, other) and other.edge_ids != f.edge_ids
    return other


def has_unique_pm(g: Graph) -> Matching | None:
    """The unique perfect matching if there is exactly one, else None."""
    if count_perfect_matchings(g, cap=2) != 1:
        return None
    return first_perfect_matching(g)
