"""Utility colorings: trees, traceable graphs, spanning trees, and contraction."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .coloring import ColoringError, EdgeColoring, verify_3_proper
from .graph import Graph
from .structure import (components, hamiltonian_path, is_connected, is_tree,
                        min_max_degree_spanning_tree)


def _greedy_tree_colors(tree: Graph, root: int = 0) -> dict[tuple[int, int], int]:
    """Proper edge coloring of a tree with exactly Δ colors, greedily in BFS order."""
    colors: dict[tuple[int, int], int] = {}
    parent_color = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        c = 1
        for w in tree.neighbors(v):
            if w in parent_color:
                continue
            if c == parent_color[v]:
                c += 1
            colors[(min(v, w), max(v, w))] = c
            parent_color[w] = c
            queue.append(w)
            c += 1
    return colors


def color_tree(t: Graph) -> EdgeColoring:
    if not is_tree(t):
        raise ColoringError("color_tree needs a tree")
    if t.n < 3:
        raise ColoringError("color_tree needs at least 3 vertices")
    return EdgeColoring(t, _greedy_tree_colors(t))


def spanning_tree_coloring(g: Graph, tree: Graph | None = None, fill: int = 1) -> EdgeColoring:
    """Properly color a spanning tree with Δ(T) colors; every other edge gets ``fill``.

    The tree alone contains a proper S-tree for every S, so the result is
    k-proper for all k.  Defaults to a min-max-degree spanning tree.
    """
    if g.n == 1:
        return EdgeColoring(g, [])
    if tree is None:
        tree = min_max_degree_spanning_tree(g)
    colors = _greedy_tree_colors(tree)
    return EdgeColoring(g, [colors.get(e, fill) for e in g.edges])


def color_traceable(g: Graph, path: list[int] | None = None) -> EdgeColoring:
    """Alternate 1, 2 along a Hamiltonian path; off-path edges get 1."""
    if path is None:
        path = hamiltonian_path(g)
    if path is None:
        raise ColoringError("graph is not traceable")
    on_path = {(min(a, b), max(a, b)): 1 + i % 2 for i, (a, b) in enumerate(zip(path, path[1:]))}
    return EdgeColoring(g, [on_path.get(e, 1) for e in g.edges])


def _validate_inner(h: Graph, inner: EdgeColoring) -> None:
    if inner.graph != h:
        raise ColoringError("inner coloring is not a coloring of the contracted subgraph")
    if not inner.is_total:
        raise ColoringError("inner coloring must be total")
    if h.n >= 3 and not verify_3_proper(inner).ok:
        raise ColoringError("inner coloring is not 3-proper on the contracted subgraph")


def color_by_contraction(g: Graph, h_vertices: Iterable[int], inner: EdgeColoring) -> EdgeColoring:
    """Contract the induced subgraph on ``h_vertices`` and lift a tree coloring.

    ``inner`` colors ``g.induced(h_vertices)[0]`` (vertex ``i`` there is the
    ``i``-th smallest id of ``h_vertices``).  The quotient is colored through a
    min-max-degree spanning tree with at most ``n_G - n_H`` colors; those lift to
    every preimage edge.  Inner colors are shifted past the quotient palette.
    """
    hv = sorted(set(h_vertices))
    if not hv:
        raise ColoringError("contracted subgraph is empty")
    if not is_connected(g):
        raise ColoringError("graph is disconnected")
    if len(components(g, hv)) != 1:
        raise ColoringError("contracted subgraph is disconnected")
    h, order = g.induced(hv)
    _validate_inner(h, inner)
    hset = set(hv)
    outside = [v for v in range(g.n) if v not in hset]
    # quotient: outside vertices keep their order, z is the last vertex
    qid = {v: i for i, v in enumerate(outside)}
    z = len(outside)
    preimage: dict[tuple[int, int], tuple[int, int]] = {}
    for u, v in g.edges:
        a = qid.get(u, z)
        b = qid.get(v, z)
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        preimage.setdefault(key, (u, v))
    q = Graph(z + 1, preimage.keys())
    qcolors = spanning_tree_coloring(q) if q.n > 1 else EdgeColoring(q, [])
    shift = qcolors.palette_size
    inner_map = {(order[a], order[b]): c for (a, b), c in zip(h.edges, inner.colors)}
    out = []
    for u, v in g.edges:
        if (u, v) in inner_map:
            out.append(inner_map[(u, v)] + shift)
            continue
        a, b = qid.get(u, z), qid.get(v, z)
        out.append(qcolors.color(a, b))
    return EdgeColoring(g, out)
