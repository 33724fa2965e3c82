"""Edge colorings, proper trees, and exact 3-proper verification."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import _kernels
from .graph import Graph


class ColoringError(ValueError):
    pass


class EdgeColoring:
    """A (possibly partial) map from edges of ``graph`` to positive color ids.

    ``colors[i]`` is the color of ``graph.edges[i]``; 0 means uncolored.
    """

    __slots__ = ("graph", "colors")

    def __init__(self, graph: Graph, colors: Mapping | Sequence[int] | None = None):
        self.graph = graph
        if colors is None:
            self.colors = (0,) * graph.m
        elif isinstance(colors, Mapping):
            arr = [0] * graph.m
            for (u, v), c in colors.items():
                arr[graph.edge_id(u, v)] = int(c)
            self.colors = tuple(arr)
        else:
            if len(colors) != graph.m:
                raise ColoringError(f"expected {graph.m} colors, got {len(colors)}")
            self.colors = tuple(int(c) for c in colors)
        if any(c < 0 for c in self.colors):
            raise ColoringError("color ids must be positive (0 = uncolored)")

    def color(self, u: int, v: int) -> int:
        return self.colors[self.graph.edge_id(u, v)]

    @property
    def is_total(self) -> bool:
        return all(self.colors)

    @property
    def palette(self) -> list[int]:
        return sorted({c for c in self.colors if c})

    @property
    def num_colors(self) -> int:
        return len(self.palette)

    @property
    def palette_size(self) -> int:
        return max(self.colors, default=0)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {e: c for e, c in zip(self.graph.edges, self.colors) if c}

    def renamed(self, mapping: Mapping[int, int]) -> "EdgeColoring":
        return EdgeColoring(self.graph, [mapping.get(c, c) if c else 0 for c in self.colors])

    def dense(self) -> list[int]:
        """Colors relabelled to ``0..K-1`` in order of first appearance (kernel input)."""
        ids: dict[int, int] = {}
        return [ids.setdefault(c, len(ids)) for c in self.colors]

    def __eq__(self, other) -> bool:
        return (isinstance(other, EdgeColoring) and self.graph == other.graph
                and self.colors == other.colors)

    def __hash__(self) -> int:
        return hash((self.graph, self.colors))

    def __repr__(self) -> str:
        return f"EdgeColoring({self.graph!r}, colors={self.num_colors})"


@dataclass(frozen=True)
class ProperTreeWitness:
    terminals: frozenset
    edges: tuple
    branch: int | None = None

    @property
    def vertices(self) -> set[int]:
        vs = {v for e in self.edges for v in e}
        if not self.edges:
            vs |= set(self.terminals)
        return vs


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    failing_triple: tuple | None = None


@lru_cache(maxsize=256)
def _kernel_for(graph: Graph, backend: str | None, wide: bool):
    return _kernels.kernel_graph(graph.n, graph.edges, backend, max_colors=10**9 if wide else 0)


def _kernel(coloring: EdgeColoring, backend: str | None = None):
    dense = coloring.dense()
    wide = (max(dense, default=0) + 1) > 64
    return _kernel_for(coloring.graph, backend, wide), dense


def _require_total(c: EdgeColoring) -> None:
    if not c.is_total:
        raise ColoringError("operation needs a total coloring")


def _path_edges(path: Sequence[int]) -> list[tuple[int, int]]:
    return [(min(a, b), max(a, b)) for a, b in zip(path, path[1:])]


def is_proper_path(c: EdgeColoring, path: Sequence[int]) -> bool:
    if len(set(path)) != len(path):
        return False
    g = c.graph
    prev = None
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            return False
        col = c.color(a, b)
        if col == 0 or col == prev:
            return False
        prev = col
    return True


def proper_path_exists(c: EdgeColoring, u: int, v: int, backend: str | None = None):
    """A simple properly colored ``u``-``v`` path as a vertex list, or None."""
    _require_total(c)
    if u == v:
        return [u]
    kg, dense = _kernel(c, backend)
    arms = kg.tree_witness(dense, (u, v))
    return None if arms is None else list(arms[0])


def proper_s_tree(c: EdgeColoring, terminals: Iterable[int], backend: str | None = None):
    """Exact search for a proper tree containing ``terminals`` (2 or 3 vertices).

    Returns a :class:`ProperTreeWitness` whose leaves are all terminals, or None
    when no proper S-tree exists.
    """
    _require_total(c)
    terms = tuple(sorted(set(terminals)))
    if len(terms) not in (2, 3) or len(terms) != len(tuple(terminals)):
        raise ValueError("terminal set must be 2 or 3 distinct vertices")
    kg, dense = _kernel(c, backend)
    arms = kg.tree_witness(dense, terms)
    if arms is None:
        return None
    edges = sorted({e for arm in arms for e in _path_edges(arm)})
    center = arms[0][0]
    branch = center if len(arms) == 3 else None
    return ProperTreeWitness(frozenset(terms), tuple(edges), branch)


def has_proper_s_tree(c: EdgeColoring, terminals, backend: str | None = None) -> bool:
    _require_total(c)
    kg, dense = _kernel(c, backend)
    return kg.tree_exists(dense, tuple(terminals))


def verify_3_proper(c: EdgeColoring, backend: str | None = None) -> VerifyReport:
    """Check every 3-subset for a proper tree; report the lexicographically first failure."""
    from .structure import is_connected

    _require_total(c)
    g = c.graph
    if g.n < 3:
        raise ValueError("3-proper colorings need at least 3 vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    kg, dense = _kernel(c, backend)
    bad = kg.first_failing_triple(dense)
    return VerifyReport(ok=bad is None, failing_triple=bad)


def is_proper_edge_set(c: EdgeColoring, edges: Iterable[tuple[int, int]]) -> bool:
    """True when no two of ``edges`` sharing a vertex have the same color."""
    seen: dict[tuple[int, int], tuple] = {}
    for u, v in set((min(a, b), max(a, b)) for a, b in edges):
        col = c.color(u, v)
        if col == 0:
            return False
        for x in (u, v):
            if (x, col) in seen:
                return False
            seen[(x, col)] = (u, v)
    return True


def check_witness(c: EdgeColoring, w: ProperTreeWitness) -> bool:
    """Re-validate a witness: a proper tree in ``c.graph`` with every leaf a terminal."""
    g = c.graph
    edges = {(min(u, v), max(u, v)) for u, v in w.edges}
    if len(edges) != len(w.edges):
        return False
    if any(not g.has_edge(u, v) for u, v in edges):
        return False
    if not edges:
        return len(w.terminals) <= 1
    verts = {x for e in edges for x in e}
    if len(edges) != len(verts) - 1:
        return False
    adj: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != verts:
        return False
    if not set(w.terminals) <= verts:
        return False
    if any(len(adj[v]) == 1 and v not in w.terminals for v in verts):
        return False
    return is_proper_edge_set(c, edges)


def prune_to_terminals(edges: Iterable[tuple[int, int]], terminals) -> list[tuple[int, int]]:
    """Repeatedly strip non-terminal leaves from a tree's edge set."""
    edges = {(min(u, v), max(u, v)) for u, v in edges}
    terminals = set(terminals)
    while True:
        deg: dict[int, int] = {}
        for u, v in edges:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        strip = {e for e in edges if any(deg[x] == 1 and x not in terminals for x in e)}
        if not strip:
            return sorted(edges)
        edges -= strip
