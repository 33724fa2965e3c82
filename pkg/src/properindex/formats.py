"""Text formats: plain edge lists, graph6, colorings and tree witnesses."""

from __future__ import annotations

import json

from .graph import Graph, GraphError


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


# -- edge lists ---------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """First non-blank line is ``n``; then one ``u v`` pair per line, 0-based.

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    edges = []
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ParseError("expected vertex count", lineno)
            try:
                n = int(parts[0])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[0]!r}", lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range [0, {n})", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key} (first on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append(key)
    if n is None:
        raise ParseError("empty input")
    return Graph(n, edges)


def render_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


# -- graph6 -------------------------------------------------------------------

def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n + 63]
    if n < 258048:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]


def render_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(val + 63)
    return bytes(_encode_n(g.n) + body).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", 1)
    data = [ord(ch) - 63 for ch in s]
    if any(not 0 <= d < 64 for d in data):
        raise ParseError("graph6 byte outside printable range", 1)
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    elif len(data) >= 8:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        rest = data[8:]
    else:
        raise ParseError("truncated graph6 header", 1)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise ParseError(f"graph6 body has {len(rest)} bytes, expected {need}", 1)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def parse_graph(text: str, fmt: str = "auto") -> Graph:
    """Parse ``text`` as ``'el'`` (edge list), ``'g6'`` or ``'auto'``.

    Auto-detection treats input whose first meaningful line is a lone integer
    as an edge list and anything else as graph6.
    """
    if fmt == "el":
        return parse_edge_list(text)
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError("graph6 input must be a single line", 1)
        return parse_graph6(lines[0])
    if fmt == "json":
        return graph_from_json(text)
    if fmt != "auto":
        raise ValueError(f"unknown format {fmt!r}")
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lstrip("-").isdigit():
            return parse_edge_list(text)
        return parse_graph(text, "g6")
    raise ParseError("empty input")


def graph_from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
        return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON graph: {exc}") from None


def render_graph(g: Graph, fmt: str = "el") -> str:
    if fmt == "el":
        return render_edge_list(g)
    if fmt == "g6":
        return render_graph6(g) + "\n"
    if fmt == "json":
        return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


# -- colorings and witnesses ---------------------------------------------------

def render_coloring(coloring) -> str:
    g = coloring.graph
    out = []
    for i, (u, v) in enumerate(g.edges):
        c = coloring.colors[i]
        if c:
            out.append(f"{u} {v} {c}")
    return "\n".join(out) + ("\n" if out else "")


def parse_coloring(g: Graph, text: str):
    """Parse ``u v c`` lines into an :class:`EdgeColoring` of ``g``."""
    from .coloring import EdgeColoring

    colors = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(f"expected 'u v c', got {line!r}", lineno)
        try:
            u, v, c = (int(p) for p in parts)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if not g.has_edge(u, v):
            raise ParseError(f"({u}, {v}) is not an edge", lineno)
        if c < 1:
            raise ParseError(f"color ids must be positive, got {c}", lineno)
        key = (min(u, v), max(u, v))
        if key in colors:
            raise ParseError(f"edge {key} colored twice", lineno)
        colors[key] = c
    return EdgeColoring(g, colors)


def witness_to_json(coloring, witness) -> dict:
    return {
        "terminals": sorted(witness.terminals),
        "edges": [list(e) for e in witness.edges],
        "colors": [coloring.color(u, v) for u, v in witness.edges],
    }


def witness_from_json(obj) -> "ProperTreeWitness":
    from .coloring import ProperTreeWitness

    if isinstance(obj, str):
        obj = json.loads(obj)
    return ProperTreeWitness(
        terminals=frozenset(obj["terminals"]),
        edges=tuple((min(u, v), max(u, v)) for u, v in obj["edges"]),
    )


__all__ = [
    "GraphError",
    "ParseError",
    "parse_edge_list",
    "render_edge_list",
    "parse_graph6",
    "render_graph6",
    "parse_graph",
    "render_graph",
    "render_coloring",
    "parse_coloring",
    "witness_to_json",
    "witness_from_json",
]
