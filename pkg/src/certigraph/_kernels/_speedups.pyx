# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled twins of the pure-Python kernels.

Outputs are byte-for-byte identical to ``pure``: same tie-breaking, same
traversal order, same return types.  Bitmask-based routines handle n <= 62
natively and delegate anything larger (or any count without a cap on more
than 30 vertices, where a C counter could overflow) to the pure versions,
so the two backends agree on every input.
"""

from libc.stdlib cimport free, malloc

from . import pure as _pure

ctypedef unsigned long long u64


cdef inline int _find(int *parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef inline int _lowest_bit(u64 x) noexcept nogil:
    cdef int v = 0
    while not (x >> v) & 1:
        v += 1
    return v


cdef int *_alloc_int(Py_ssize_t count) except NULL:
    cdef int *buf = <int *> malloc(count * sizeof(int) if count > 0 else sizeof(int))
    if buf == NULL:
        raise MemoryError()
    return buf


def component_labels(n, us, vs):
    cdef Py_ssize_t cn = n, m = len(us), i
    cdef int ru, rv, v, r, nxt
    out = []
    if cn == 0:
        return out
    cdef int *parent = _alloc_int(cn)
    cdef int *root_label = _alloc_int(cn)
    try:
        for i in range(cn):
            parent[i] = <int> i
            root_label[i] = -1
        for i in range(m):
            ru = _find(parent, us[i])
            rv = _find(parent, vs[i])
            if ru != rv:
                parent[ru] = rv
        nxt = 0
        for v in range(cn):
            r = _find(parent, v)
            if root_label[r] == -1:
                root_label[r] = nxt
                nxt += 1
            out.append(root_label[r])
        return out
    finally:
        free(parent)
        free(root_label)


def bridge_mask(n, us, vs, skip=-1):
    cdef Py_ssize_t cn = n, m = len(us), i
    cdef int cskip = skip
    cdef int u, v, w, ei, pe, root, pv, timer, sp
    cdef Py_ssize_t total, k
    if m == 0:
        return []
    cdef int *cus = _alloc_int(m)
    cdef int *cvs = _alloc_int(m)
    cdef int *out = _alloc_int(m)
    cdef int *deg = _alloc_int(cn + 1)
    cdef int *start = _alloc_int(cn + 2)
    cdef int *adj_w = NULL
    cdef int *adj_e = NULL
    cdef int *fill = NULL
    cdef int *disc = NULL
    cdef int *low = NULL
    cdef int *sv = NULL
    cdef int *spe = NULL
    cdef int *sit = NULL
    try:
        for i in range(m):
            cus[i] = us[i]
            cvs[i] = vs[i]
            out[i] = 0
        for i in range(cn + 1):
            deg[i] = 0
        for i in range(m):
            if i == cskip or cus[i] == cvs[i]:
                continue
            deg[cus[i]] += 1
            deg[cvs[i]] += 1
        start[0] = 0
        for i in range(cn):
            start[i + 1] = start[i] + deg[i]
        total = start[cn]
        adj_w = _alloc_int(total)
        adj_e = _alloc_int(total)
        fill = _alloc_int(cn + 1)
        for i in range(cn):
            fill[i] = start[i]
        for i in range(m):
            if i == cskip or cus[i] == cvs[i]:
                continue
            u = cus[i]
            v = cvs[i]
            adj_w[fill[u]] = v
            adj_e[fill[u]] = <int> i
            fill[u] += 1
            adj_w[fill[v]] = u
            adj_e[fill[v]] = <int> i
            fill[v] += 1
        disc = _alloc_int(cn + 1)
        low = _alloc_int(cn + 1)
        sv = _alloc_int(cn + 1)
        spe = _alloc_int(cn + 1)
        sit = _alloc_int(cn + 1)
        for i in range(cn):
            disc[i] = -1
        timer = 0
        for root in range(cn):
            if disc[root] != -1:
                continue
            disc[root] = timer
            low[root] = timer
            timer += 1
            sv[0] = root
            spe[0] = -1
            sit[0] = start[root]
            sp = 1
            while sp > 0:
                v = sv[sp - 1]
                pe = spe[sp - 1]
                if sit[sp - 1] < start[v + 1]:
                    k = sit[sp - 1]
                    sit[sp - 1] += 1
                    w = adj_w[k]
                    ei = adj_e[k]
                    if ei == pe:
                        continue
                    if disc[w] == -1:
                        disc[w] = timer
                        low[w] = timer
                        timer += 1
                        sv[sp] = w
                        spe[sp] = ei
                        sit[sp] = start[w]
                        sp += 1
                    elif disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    sp -= 1
                    if sp > 0:
                        pv = sv[sp - 1]
                        if low[v] < low[pv]:
                            low[pv] = low[v]
                        if low[v] > disc[pv]:
                            out[pe] = 1
        return [out[i] for i in range(m)]
    finally:
        free(cus)
        free(cvs)
        free(out)
        free(deg)
        free(start)
        free(adj_w)
        free(adj_e)
        free(fill)
        free(disc)
        free(low)
        free(sv)
        free(spe)
        free(sit)


cdef class _Csr:
    """Incidence lists in CSR form, insertion order identical to pure's
    per-vertex append order (ascending edge index)."""

    cdef int *cus
    cdef int *cvs
    cdef long long *ccol
    cdef int *start
    cdef int *item
    cdef Py_ssize_t n, m

    def __cinit__(self, n, us, vs, colors, bint with_loops):
        cdef Py_ssize_t i
        cdef int u, v
        self.n = n
        self.m = len(us)
        self.cus = _alloc_int(self.m + 1)
        self.cvs = _alloc_int(self.m + 1)
        self.start = _alloc_int(self.n + 2)
        self.ccol = <long long *> malloc((self.m + 1) * sizeof(long long))
        if self.ccol == NULL:
            raise MemoryError()
        cdef int *deg = _alloc_int(self.n + 1)
        cdef int *fill = NULL
        try:
            for i in range(self.m):
                self.cus[i] = us[i]
                self.cvs[i] = vs[i]
                self.ccol[i] = colors[i] if colors is not None else -1
            for i in range(self.n + 1):
                deg[i] = 0
            for i in range(self.m):
                u = self.cus[i]
                v = self.cvs[i]
                if u == v:
                    if with_loops:
                        deg[u] += 1
                    continue
                deg[u] += 1
                deg[v] += 1
            self.start[0] = 0
            for i in range(self.n):
                self.start[i + 1] = self.start[i] + deg[i]
            self.item = _alloc_int(self.start[self.n] + 1)
            fill = _alloc_int(self.n + 1)
            for i in range(self.n):
                fill[i] = self.start[i]
            for i in range(self.m):
                u = self.cus[i]
                v = self.cvs[i]
                if u == v:
                    if with_loops:
                        self.item[fill[u]] = <int> i
                        fill[u] += 1
                    continue
                self.item[fill[u]] = <int> i
                fill[u] += 1
                self.item[fill[v]] = <int> i
                fill[v] += 1
        finally:
            free(deg)
            free(fill)

    def __dealloc__(self):
        free(self.cus)
        free(self.cvs)
        free(self.ccol)
        free(self.start)
        free(self.item)


cdef int _count_rec(_Csr inc, u64 cov, u64 full, long long cap,
                    long long *count) noexcept nogil:
    cdef int v, w, i
    cdef Py_ssize_t k
    if cov == full:
        count[0] += 1
        return 1 if (cap != 0 and count[0] >= cap) else 0
    v = _lowest_bit((~cov) & full)
    for k in range(inc.start[v], inc.start[v + 1]):
        i = inc.item[k]
        w = inc.cus[i] ^ inc.cvs[i] ^ v
        if not (cov >> w) & 1:
            if _count_rec(inc, cov | (<u64> 1 << v) | (<u64> 1 << w), full, cap, count):
                return 1
    return 0


def count_perfect_matchings(n, us, vs, cap):
    if n > 62 or (n > 30 and cap == 0):
        return _pure.count_perfect_matchings(n, us, vs, cap)
    if n == 0:
        return 1
    if n % 2:
        return 0
    cdef _Csr inc = _Csr(n, us, vs, None, False)
    cdef long long count = 0
    cdef u64 full = (<u64> 1 << n) - 1
    _count_rec(inc, 0, full, cap, &count)
    return count


cdef int _first_rec(_Csr inc, u64 cov, u64 full, int *chosen,
                    int depth) noexcept nogil:
    cdef int v, w, i
    cdef Py_ssize_t k
    if cov == full:
        return 1
    v = _lowest_bit((~cov) & full)
    for k in range(inc.start[v], inc.start[v + 1]):
        i = inc.item[k]
        w = inc.cus[i] ^ inc.cvs[i] ^ v
        if not (cov >> w) & 1:
            chosen[depth] = i
            if _first_rec(inc, cov | (<u64> 1 << v) | (<u64> 1 << w), full,
                          chosen, depth + 1):
                return 1
    return 0


def first_perfect_matching(n, us, vs):
    if n > 62:
        return _pure.first_perfect_matching(n, us, vs)
    if n == 0:
        return []
    if n % 2:
        return None
    cdef _Csr inc = _Csr(n, us, vs, None, False)
    cdef u64 full = (<u64> 1 << n) - 1
    cdef int *chosen = _alloc_int(n // 2 + 1)
    cdef Py_ssize_t i
    try:
        if _first_rec(inc, 0, full, chosen, 0):
            return [chosen[i] for i in range(n // 2)]
        return None
    finally:
        free(chosen)


cdef int _cycle_rec(_Csr inc, int s, int v, u64 visited, int *path,
                    int depth) noexcept nogil:
    cdef long long last_c = inc.ccol[path[depth - 1]]
    cdef int first_e = path[0]
    cdef long long first_c = inc.ccol[first_e]
    cdef int w, i, res
    cdef Py_ssize_t k
    for k in range(inc.start[v], inc.start[v + 1]):
        i = inc.item[k]
        w = inc.cus[i] ^ inc.cvs[i] ^ v
        if w == s:
            if i != first_e and inc.ccol[i] != last_c and inc.ccol[i] != first_c:
                path[depth] = i
                return depth + 1
        elif w > s and not (visited >> w) & 1 and inc.ccol[i] != last_c:
            path[depth] = i
            res = _cycle_rec(inc, s, w, visited | (<u64> 1 << w), path, depth + 1)
            if res:
                return res
    return 0


def find_alternating_cycle(n, us, vs, colors):
    if n > 62:
        return _pure.find_alternating_cycle(n, us, vs, colors)
    cdef _Csr inc = _Csr(n, us, vs, colors, False)
    cdef int *path = _alloc_int(n + 2)
    cdef int s, w, i, length
    cdef Py_ssize_t k, j
    try:
        for s in range(n):
            for k in range(inc.start[s], inc.start[s + 1]):
                i = inc.item[k]
                w = inc.cus[i] ^ inc.cvs[i] ^ s
                if w > s:
                    path[0] = i
                    length = _cycle_rec(inc, s, w,
                                        (<u64> 1 << s) | (<u64> 1 << w), path, 1)
                    if length:
                        return [path[j] for j in range(length)]
        return None
    finally:
        free(path)


def cut_color_vertex(n, us, vs, colors):
    cdef Py_ssize_t cn = n, m = len(us), i
    cdef int x, u, v, w, r, ru, rv
    cdef long long c
    if cn == 0:
        return -1
    cdef int *cus = _alloc_int(m + 1)
    cdef int *cvs = _alloc_int(m + 1)
    cdef long long *ccol = <long long *> malloc((m + 1) * sizeof(long long))
    cdef int *parent = _alloc_int(cn)
    cdef long long *comp_color = <long long *> malloc(cn * sizeof(long long))
    if ccol == NULL or comp_color == NULL:
        free(cus)
        free(cvs)
        free(ccol)
        free(parent)
        free(comp_color)
        raise MemoryError()
    cdef bint ok
    try:
        for i in range(m):
            cus[i] = us[i]
            cvs[i] = vs[i]
            ccol[i] = colors[i]
        for x in range(cn):
            for i in range(cn):
                parent[i] = <int> i
                comp_color[i] = -1
            for i in range(m):
                u = cus[i]
                v = cvs[i]
                if u == x or v == x or u == v:
                    continue
                ru = _find(parent, u)
                rv = _find(parent, v)
                if ru != rv:
                    parent[ru] = rv
            ok = True
            for i in range(m):
                u = cus[i]
                v = cvs[i]
                if u == v:
                    continue
                if u == x:
                    w = v
                elif v == x:
                    w = u
                else:
                    continue
                r = _find(parent, w)
                c = comp_color[r]
                if c == -1:
                    comp_color[r] = ccol[i]
                elif c != ccol[i]:
                    ok = False
                    break
            if ok:
                return x
        return -1
    finally:
        free(cus)
        free(cvs)
        free(ccol)
        free(parent)
        free(comp_color)


cdef bint _mono_after(_Csr inc, int w, int skip) noexcept nogil:
    cdef long long c = -1
    cdef int j
    cdef Py_ssize_t k
    for k in range(inc.start[w], inc.start[w + 1]):
        j = inc.item[k]
        if j == skip:
            continue
        if c == -1:
            c = inc.ccol[j]
        elif inc.ccol[j] != c:
            return False
    return True


def mono_arcs(n, us, vs, colors):
    cdef Py_ssize_t m = len(us), i
    cdef int u, v
    cdef _Csr inc = _Csr(n, us, vs, colors, True)
    arcs = []
    for i in range(m):
        u = inc.cus[i]
        v = inc.cvs[i]
        if u == v:
            if _mono_after(inc, u, <int> i):
                arcs.append((u, u, i))
        else:
            if _mono_after(inc, v, <int> i):
                arcs.append((u, v, i))
            if _mono_after(inc, u, <int> i):
                arcs.append((v, u, i))
    return arcs
