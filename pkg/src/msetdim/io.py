"""Edge-list text and graph6 reading/writing."""
from __future__ import annotations

from msetdim.errors import GraphError
from msetdim.graph import Graph, from_edge_list

GRAPH6_HEADER = ">>graph6<<"


def read_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v`` (0-based).

    Blank lines and lines starting with ``#`` are skipped.
    """
    lines = [(no, ln.split()) for no, ln in enumerate(text.splitlines(), 1)]
    lines = [(no, tok) for no, tok in lines if tok and not tok[0].startswith("#")]
    if not lines:
        raise GraphError("empty edge list")
    no, head = lines[0]
    try:
        n, m = (int(t) for t in head)
    except ValueError:
        raise GraphError(f"line {no}: expected 'n m' header") from None
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    edges = []
    for no, tok in body:
        if len(tok) != 2:
            raise GraphError(f"line {no}: expected 'u v'")
        try:
            edges.append((int(tok[0]), int(tok[1])))
        except ValueError:
            raise GraphError(f"line {no}: non-integer vertex") from None
    return from_edge_list(n, edges)


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "".join([f"{g.n} {len(edges)}\n"] + [f"{u} {v}\n" for u, v in edges])


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def to_graph6(g: Graph, header: bool = False) -> str:
    """Encode ``g`` in graph6 (no trailing newline)."""
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(sum(b << (5 - k) for k, b in enumerate(bits[p : p + 6])) + 63) for p in range(0, len(bits), 6)
    )
    return (GRAPH6_HEADER if header else "") + _encode_size(g.n) + body


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise GraphError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(not 0 <= v <= 63 for v in vals):
        raise GraphError("graph6 string contains characters outside '?'..'~'")
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) > 1 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphError("truncated graph6 size prefix")
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        pos = 8
    else:
        if len(vals) < 4:
            raise GraphError("truncated graph6 size prefix")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    data = vals[pos:]
    if len(data) != (nbits + 5) // 6:
        raise GraphError(f"graph6 body has {len(data)} bytes, expected {(nbits + 5) // 6} for n={n}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if data[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(text: str) -> list[Graph]:
    return [from_graph6(ln) for ln in text.splitlines() if ln.strip()]

