"""Immutable simple undirected graphs on dense vertex ids ``0..n-1``."""

from __future__ import annotations

from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for structurally invalid graphs (self-loops, parallel edges, bad ids)."""


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph.

    Edges are stored as sorted ``(u, v)`` pairs with ``u < v``; an edge's id is
    its index in that sorted tuple.  Adjacency lists are sorted ascending.
    """

    __slots__ = ("n", "edges", "_adj", "_eid", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            key = _norm(u, v)
            if key in seen:
                raise GraphError(f"parallel edge {key}")
            seen.add(key)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        self._eid = {e: i for i, e in enumerate(self.edges)}
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._hash = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._eid

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._eid[_norm(u, v)]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    def vertices(self) -> range:
        return range(self.n)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``.

        Returns the subgraph and ``order`` where ``order[i]`` is the original id
        of new vertex ``i`` (ascending original ids).
        """
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        sub = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph(len(order), sub), order

    def spanning_subgraph(self, edges: Iterable[Sequence[int]]) -> "Graph":
        edges = list(edges)
        for u, v in edges:
            if not self.has_edge(u, v):
                raise GraphError(f"({u}, {v}) is not an edge of the host graph")
        return Graph(self.n, edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edges))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class CapExceeded(RuntimeError):
    """An exact search refused an instance above its size cap."""
