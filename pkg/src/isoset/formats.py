"""Graph file formats: plain edge lists and graph6.

Edge list (one graph per file): a header line ``n m`` followed by m lines
``u v`` with 0-based endpoints; blank lines and ``#`` comments allowed.

graph6 (many graphs per file, one per line): the standard printable
encoding for n <= 62 - the order byte n+63, then the upper triangle of the
adjacency matrix in column-major order packed into 6-bit groups, each +63.
An optional ``>>graph6<<`` header is tolerated.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph


class ParseError(ValueError):
    """The input file does not parse under any supported format."""


class VertexOutOfRange(ValueError):
    """A witness vertex lies outside the graph."""


GRAPH6_HEADER = ">>graph6<<"


def _triangle_bits(g: Graph):
    for j in range(1, g.n):
        for i in range(j):
            yield g.adj_bits[j] >> i & 1


def to_graph6(g: Graph) -> str:
    if not 0 <= g.n <= 62:
        raise ParseError("short graph6 encoding supports 0 <= n <= 62")
    out = [chr(g.n + 63)]
    group = 0
    filled = 0
    for bit in _triangle_bits(g):
        group = group << 1 | bit
        filled += 1
        if filled == 6:
            out.append(chr(group + 63))
            group, filled = 0, 0
    if filled:
        out.append(chr((group << (6 - filled)) + 63))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 line")
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise ParseError(f"unsupported graph6 order byte {s[0]!r}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ParseError(
            f"graph6 body length {len(body)} != expected {need} for n={n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ParseError(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    pairs = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                pairs.append((i, j))
            pos += 1
    return Graph(n, pairs)


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ParseError("no content lines")
    head = rows[0].split()
    if len(head) != 2:
        raise ParseError(f"expected header 'n m', got {rows[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"bad header {rows[0]!r}") from exc
    if len(rows) - 1 != m:
        raise ParseError(f"header says {m} edges, file has {len(rows) - 1}")
    pairs = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {row!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"bad edge line {row!r}") from exc
        pairs.append((u, v))
    try:
        return Graph(n, pairs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _looks_like_edge_list(text: str) -> bool:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            parts = line.split()
            return len(parts) == 2 and all(p.isdigit() for p in parts)
    return False


def read_graph_file(path) -> list[tuple[str, Graph]]:
    """Parse a file into (label, graph) pairs.

    ``.g6`` files and files whose first content line is not ``n m`` are
    treated as graph6, one graph per line; otherwise the file holds a
    single edge-list graph.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    if path.suffix != ".g6" and _looks_like_edge_list(text):
        return [(path.name, from_edge_list_text(text))]
    graphs = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        graphs.append((f"{path.name}:{i}", from_graph6(line)))
    if not graphs:
        raise ParseError(f"{path}: no graphs found")
    return graphs


def write_edge_list(g: Graph, path) -> None:
    Path(path).write_text(to_edge_list(g))


def write_graph6(graphs, path) -> None:
    Path(path).write_text("".join(to_graph6(g) + "\n" for g in graphs))
