"""graph6 and .cel readers/writers.

graph6 (single-byte size form, n <= 62): first byte is n+63; then the upper
triangle of the adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),...
packed big-endian into 6-bit groups, each +63.  Only simple uncolored graphs.
Edge ids are assigned 0.. in bit order.

.cel is the line-based colored-edge-list format::

    cel 1
    n 5
    k 3          # optional color count
    e 0 1 2      # u v [color]; '#' starts a comment

Edge ids are assigned 0.. in file order, colors are all-or-none, loops and
parallel edges are fine.
"""

from __future__ import annotations

from .errors import ArgumentError, FormatError
from .graph import Edge, Graph


def pair_order(n: int) -> list[tuple[int, int]]:
    """The (u, v) scan order graph6 uses for its bit vector."""
    return [(u, v) for v in range(1, n) for u in range(v)]


GRAPH6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    if any(b < 63 or b > 126 for b in data):
        raise FormatError("graph6 bytes must be in 63..126")
    n = data[0] - 63
    if n > 62:
        raise FormatError("only the single-byte size form (n <= 62) is supported")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[1:]
    if len(body) != nbytes:
        raise FormatError(f"graph6 body for n={n} must be {nbytes} bytes, got {len(body)}")
    bits = []
    for b in body:
        x = b - 63
        bits.extend(((x >> k) & 1) for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits")
    edges = []
    for bit, (u, v) in zip(bits, pair_order(n)):
        if bit:
            edges.append(Edge(len(edges), u, v))
    return Graph(n, tuple(edges))


def write_graph6(g: Graph) -> str:
    if g.is_colored:
        raise FormatError("graph6 cannot carry colors")
    if g.n > 62:
        raise FormatError("only n <= 62 is supported")
    present = set()
    for e in g.edges:
        if e.is_loop:
            raise FormatError("graph6 cannot carry loops")
        key = (min(e.u, e.v), max(e.u, e.v))
        if key in present:
            raise FormatError("graph6 cannot carry parallel edges")
        present.add(key)
    bits = [1 if uv in present else 0 for uv in pair_order(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [g.n + 63]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        out.append(x + 63)
    return bytes(out).decode("ascii")


def parse_cel(text: str) -> Graph:
    n = None
    k = None
    header_seen = False
    pairs: list[tuple] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if not header_seen:
            if tok != ["cel", "1"]:
                raise FormatError(f"line {lineno}: expected 'cel 1' header")
            header_seen = True
            continue
        if tok[0] == "n":
            if n is not None or len(tok) != 2:
                raise FormatError(f"line {lineno}: bad n directive")
            n = _int(tok[1], lineno)
        elif tok[0] == "k":
            if k is not None or len(tok) != 2 or n is None:
                raise FormatError(f"line {lineno}: bad k directive")
            k = _int(tok[1], lineno)
        elif tok[0] == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before n directive")
            if len(tok) == 3:
                pairs.append((_int(tok[1], lineno), _int(tok[2], lineno)))
            elif len(tok) == 4:
                c = _int(tok[3], lineno)
                if k is not None and not (0 <= c < k):
                    raise FormatError(f"line {lineno}: color {c} outside 0..{k - 1}")
                pairs.append((_int(tok[1], lineno), _int(tok[2], lineno), c))
            else:
                raise FormatError(f"line {lineno}: edge lines are 'e u v [color]'")
        else:
            raise FormatError(f"line {lineno}: unknown directive {tok[0]!r}")
    if not header_seen or n is None:
        raise FormatError("missing 'cel 1' header or n directive")
    lens = {len(p) for p in pairs}
    if len(lens) > 1:
        raise FormatError("either all edges carry a color or none do")
    try:
        return Graph.build(n, pairs)
    except ArgumentError as exc:
        raise FormatError(str(exc)) from exc


def _int(tok: str, lineno: int) -> int:
    try:
        v = int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: {tok!r} is not an integer") from None
    if v < 0:
        raise FormatError(f"line {lineno}: negative value {v}")
    return v


def write_cel(g: Graph) -> str:
    """Canonical text: edges in stored (id) order, ids implied 0.. — composing
    with parse_cel is the identity whenever ids already run 0.. in order."""
    lines = ["cel 1", f"n {g.n}"]
    if g.is_colored:
        lines.append(f"k {g.max_color() + 1}")
        lines.extend(f"e {e.u} {e.v} {e.color}" for e in g.edges)
    else:
        lines.extend(f"e {e.u} {e.v}" for e in g.edges)
    return "\n".join(lines) + "\n"


def load_graph_text(text: str, hint: str = "") -> Graph:
    """Parse by file-name hint (.g6/.cel) or by sniffing the header."""
    if hint.endswith(".g6") or hint.endswith(".graph6"):
        return parse_graph6(text)
    if hint.endswith(".cel"):
        return parse_cel(text)
    stripped = text.lstrip()
    if stripped.startswith("cel") or stripped.startswith("#"):
        return parse_cel(text)
    return parse_graph6(text)
