"""Pure-Python kernels for the hot inner loops.

Every function here has a compiled twin in ``_speedups.pyx`` with byte-for-
byte identical outputs (same tie-breaking, same traversal order), so the
backends are interchangeable.  Inputs are flat parallel arrays: ``us[i]``,
``vs[i]`` (and ``colors[i]`` where relevant) describe edge *index* ``i``;
callers translate between edge ids and indices.

Determinism rules shared by both backends:
- vertices are scanned in increasing order, edges in increasing index;
- matching backtracking branches on the lowest uncovered vertex;
- cycle DFS anchors each cycle at its lowest vertex.
"""

from __future__ import annotations


def component_labels(n, us, vs):
    """Connected-component label per vertex, contiguous, in order of first
    occurrence (vertex 0's component is 0)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(us)):
        ru, rv = find(us[i]), find(vs[i])
        if ru != rv:
            parent[ru] = rv
    root_label = {}
    out = []
    for v in range(n):
        r = find(v)
        if r not in root_label:
            root_label[r] = len(root_label)
        out.append(root_label[r])
    return out


def bridge_mask(n, us, vs, skip=-1):
    """0/1 per edge index: 1 iff the edge is a bridge.

    ``skip`` (an edge index) is treated as deleted, which lets callers probe
    one-edge deletions without rebuilding arrays.  Loops are never bridges;
    a parallel partner is seen as a back edge (entry edges are skipped by
    index, not by endpoint), so neither copy of a parallel pair is one.
    """
    m = len(us)
    adj = [[] for _ in range(n)]
    for i in range(m):
        if i == skip:
            continue
        u, v = us[i], vs[i]
        if u == v:
            continue
        adj[u].append((v, i))
        adj[v].append((u, i))
    disc = [-1] * n
    low = [0] * n
    out = [0] * m
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
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
                    stack.append([w, ei, 0])
                elif disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] > disc[pv]:
                        out[pe] = 1
    return out


def _incidence(n, us, vs, with_loops):
    inc = [[] for _ in range(n)]
    for i in range(len(us)):
        u, v = us[i], vs[i]
        if u == v:
            if with_loops:
                inc[u].append(i)
            continue
        inc[u].append(i)
        inc[v].append(i)
    return inc


def count_perfect_matchings(n, us, vs, cap):
    """Number of perfect matchings; stops early once ``cap`` is reached
    (``cap=0`` means count them all).  Loops never participate."""
    if n == 0:
        return 1
    if n % 2:
        return 0
    inc = _incidence(n, us, vs, with_loops=False)
    full = (1 << n) - 1
    count = 0

    def rec(cov):
        nonlocal count
        if cov == full:
            count += 1
            return cap and count >= cap
        x = (~cov) & full
        v = (x & -x).bit_length() - 1
        for i in inc[v]:
            w = us[i] ^ vs[i] ^ v
            if not (cov >> w) & 1:
                if rec(cov | (1 << v) | (1 << w)):
                    return True
        return False

    rec(0)
    return count


def first_perfect_matching(n, us, vs):
    """Edge indices of the first perfect matching found by backtracking on
    the lowest uncovered vertex, trying its edges in index order; None if
    there is none."""
    if n == 0:
        return []
    if n % 2:
        return None
    inc = _incidence(n, us, vs, with_loops=False)
    full = (1 << n) - 1
    chosen = []

    def rec(cov):
        if cov == full:
            return True
        x = (~cov) & full
        v = (x & -x).bit_length() - 1
        for i in inc[v]:
            w = us[i] ^ vs[i] ^ v
            if not (cov >> w) & 1:
                chosen.append(i)
                if rec(cov | (1 << v) | (1 << w)):
                    return True
                chosen.pop()
        return False

    return chosen if rec(0) else None


def find_alternating_cycle(n, us, vs, colors):
    """First properly colored simple cycle in deterministic search order, as
    a cyclic list of edge indices, or None.

    Anchors at the cycle's lowest vertex s (only vertices > s may appear on
    the path), extends with edges whose color differs from the previous
    edge's, and closes back at s only when the closing edge differs in color
    from both the last and the first path edge.  A closing edge distinct
    from a length-1 path's edge yields the parallel-pair 2-cycle, which is
    exactly the multigraph case where one is legal.
    """
    inc = _incidence(n, us, vs, with_loops=False)

    def rec(s, v, visited, path):
        last_c = colors[path[-1]]
        first_e = path[0]
        first_c = colors[first_e]
        for i in inc[v]:
            w = us[i] ^ vs[i] ^ v
            if w == s:
                if i != first_e and colors[i] != last_c and colors[i] != first_c:
                    return path + [i]
            elif w > s and not (visited >> w) & 1 and colors[i] != last_c:
                res = rec(s, w, visited | (1 << w), path + [i])
                if res is not None:
                    return res
        return None

    for s in range(n):
        for i in inc[s]:
            w = us[i] ^ vs[i] ^ s
            if w > s:
                res = rec(s, w, (1 << s) | (1 << w), [i])
                if res is not None:
                    return res
    return None


def cut_color_vertex(n, us, vs, colors):
    """Lowest vertex x such that every component of the graph minus x is
    joined to x by edges of a single color; -1 if none.  Loops at x are
    ignored (they join x to no component)."""
    m = len(us)
    for x in range(n):
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in range(m):
            u, v = us[i], vs[i]
            if u == x or v == x or u == v:
                continue
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        comp_color = {}
        ok = True
        for i in range(m):
            u, v = us[i], vs[i]
            if u == v:
                continue
            if u == x:
                w = v
            elif v == x:
                w = u
            else:
                continue
            r = find(w)
            c = comp_color.get(r)
            if c is None:
                comp_color[r] = colors[i]
            elif c != colors[i]:
                ok = False
                break
        if ok:
            return x
    return -1


def mono_arcs(n, us, vs, colors):
    """Arcs (a, b, edge_index): edge ab such that b is monochrome once ab is
    deleted.  Ordered by edge index, u->v direction first; a loop at u
    yields the single arc (u, u, i).  Degree 0/1 counts as monochrome."""
    m = len(us)
    inc = _incidence(n, us, vs, with_loops=True)

    def mono_after(w, skip):
        c = -1
        for j in inc[w]:
            if j == skip:
                continue
            if c == -1:
                c = colors[j]
            elif colors[j] != c:
                return False
        return True

    arcs = []
    for i in range(m):
        u, v = us[i], vs[i]
        if u == v:
            if mono_after(u, i):
                arcs.append((u, u, i))
        else:
            if mono_after(v, i):
                arcs.append((u, v, i))
            if mono_after(u, i):
                arcs.append((v, u, i))
    return arcs
