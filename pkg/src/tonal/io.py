"""Text formats: the coloured edge list and graph6.

Edge-list format::

    # comment
    p 4
    e 0 1 R
    e 1 2 B

The ``p`` header may be omitted, in which case the order is one more than
the largest vertex index seen.  Colour tokens are optional for plain graphs
and required for coloured ones.
"""

from __future__ import annotations

from .graph import ColouredHost, Colour, Graph, PatternColouring, norm_edge


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def _scan(text: str):
    """Yield ``(byte_offset, tokens)`` for each non-blank, non-comment line."""
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            yield offset, body.split()
        offset += len(line.encode("utf-8"))


def _parse_edge_lines(text: str, coloured: bool):
    n = None
    edges: dict[tuple[int, int], Colour | None] = {}
    max_vertex = -1
    for off, tok in _scan(text):
        kind = tok[0]
        if kind == "p":
            if n is not None or edges:
                raise ParseError("header must come first and only once", off)
            if len(tok) != 2 or not tok[1].isdigit():
                raise ParseError("malformed header, expected 'p <n>'", off)
            n = int(tok[1])
        elif kind == "e":
            if len(tok) not in (3, 4):
                raise ParseError("expected 'e <u> <v> [R|B]'", off)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError("vertex indices must be integers", off) from None
            if u < 0 or v < 0 or (n is not None and (u >= n or v >= n)):
                raise ParseError(f"vertex index out of range in edge ({u}, {v})", off)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", off)
            colour = None
            if len(tok) == 4:
                if tok[3] not in ("R", "B"):
                    raise ParseError(f"unknown colour token {tok[3]!r}", off)
                colour = Colour(tok[3])
            elif coloured:
                raise ParseError("missing colour token", off)
            e = norm_edge(u, v)
            if e in edges:
                if coloured and edges[e] is not colour:
                    raise ParseError(f"edge {e} repeated with conflicting colours", off)
                raise ParseError(f"duplicate edge {e}", off)
            edges[e] = colour
            max_vertex = max(max_vertex, u, v)
        else:
            raise ParseError(f"unknown line type {kind!r}", off)
    if n is None:
        n = max_vertex + 1
    return n, edges


def parse_edge_list(text: str) -> Graph:
    n, edges = _parse_edge_lines(text, coloured=False)
    return Graph(n, frozenset(edges))


def parse_coloured(text: str) -> PatternColouring:
    n, edges = _parse_edge_lines(text, coloured=True)
    graph = Graph(n, frozenset(edges))
    return PatternColouring(graph, frozenset(e for e, c in edges.items() if c is Colour.RED))


def parse_host(text: str) -> ColouredHost:
    pc = parse_coloured(text)
    n = pc.graph.n
    if pc.graph.e != n * (n - 1) // 2:
        raise ParseError(f"host must colour all {n * (n - 1) // 2} edges of K_{n}, got {pc.graph.e}", 0)
    return ColouredHost.from_pattern(pc)


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n}"] + [f"e {u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


def format_coloured(pc: PatternColouring | ColouredHost) -> str:
    if isinstance(pc, ColouredHost):
        pc = pc.as_pattern()
    lines = [f"p {pc.graph.n}"]
    lines += [f"e {u} {v} {'R' if (u, v) in pc.red else 'B'}" for u, v in pc.graph.edge_list]
    return "\n".join(lines) + "\n"


# graph6 -----------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [int(g.has_edge(i, j)) for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6))
    return _g6_size(g.n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    start = 0
    if s.startswith(_G6_HEADER):
        start = len(_G6_HEADER)
    data = s[start:].encode("ascii", errors="replace")
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"invalid graph6 byte {c!r}", start + i)
    if not data:
        raise ParseError("empty graph6 string", start)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field", start)
        n, pos = 0, 8
        for c in data[2:8]:
            n = n << 6 | (c - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field", start)
        n, pos = 0, 4
        for c in data[1:4]:
            n = n << 6 | (c - 63)
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}", start + pos)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    total = len(body) * 6
    for k2 in range(k, total):
        if (body[k2 // 6] - 63) >> (5 - k2 % 6) & 1:
            raise ParseError("non-zero graph6 padding bits", start + pos + k2 // 6)
    return Graph(n, frozenset(edges))


def parse_graph(text: str) -> Graph:
    """Parse either format; edge lists are recognised by their ``p``/``e``/``#`` lines."""
    head = text.lstrip()
    if not head or head[0] in "pe#":
        return parse_edge_list(text)
    return parse_graph6(text)
