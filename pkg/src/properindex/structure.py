"""Structural queries: connectivity, traceability, spanning trees."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from . import _kernels
from .graph import CapExceeded, Graph

HAM_CAP = 20
EXACT_TREE_CAP = 30


def components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Connected components (sorted vertex lists, ordered by smallest vertex).

    With ``within`` the components of the induced subgraph on that set are returned.
    """
    allowed = set(range(g.n)) if within is None else set(within)
    seen: set[int] = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in allowed and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    if within is not None:
        within = set(within)
        if not within:
            return False
    elif g.n == 0:
        return False
    return len(components(g, within)) == 1


def cut_vertices(g: Graph) -> list[int]:
    """Articulation points via the low-point DFS (iterative)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def hamiltonian_path(g: Graph, cap: int = HAM_CAP, backend: str | None = None):
    """A Hamiltonian path (vertex list) or None, by bitmask dynamic programming.

    Refuses with :class:`CapExceeded` above ``cap`` vertices rather than guessing.
    """
    if g.n > cap or g.n > _kernels.ham_path_limit(backend):
        raise CapExceeded(f"Hamiltonian path search capped at n <= {cap}, got n={g.n}")
    if g.n >= 2 and not is_connected(g):
        return None
    kg = _kernels.kernel_graph(g.n, g.edges, backend)
    return kg.hamiltonian_path()


def hamiltonian_path_exists(g: Graph, cap: int = HAM_CAP, backend: str | None = None) -> bool:
    return hamiltonian_path(g, cap, backend) is not None


# -- spanning trees -------------------------------------------------------------

def bfs_spanning_tree(g: Graph, root: int = 0) -> Graph:
    parent = {root: None}
    queue = deque([root])
    edges = []
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in parent:
                parent[y] = x
                edges.append((x, y))
                queue.append(y)
    if len(parent) != g.n:
        raise ValueError("graph is disconnected")
    return Graph(g.n, edges)


def _dfs_spanning_tree(g: Graph, root: int = 0) -> list[tuple[int, int]]:
    seen = {root}
    edges = []
    stack = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if w not in seen:
                seen.add(w)
                edges.append((v, w))
                stack.append((w, iter(g.neighbors(w))))
                break
        else:
            stack.pop()
    return edges


def _tree_path(adj: dict[int, set[int]], a: int, b: int) -> list[int]:
    prev = {a: None}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        if x == b:
            break
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    return path[::-1]


def _improve(g: Graph, tree_edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Local search: swap a non-tree edge in to lower the degree of a max-degree vertex."""
    adj: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in tree_edges:
        adj[u].add(v)
        adj[v].add(u)
    while True:
        k = max(len(a) for a in adj.values())
        if k <= 2:
            break
        improved = False
        for x in [v for v in range(g.n) if len(adj[v]) == k]:
            for a, b in g.edges:
                if b in adj[a] or x in (a, b):
                    continue
                if len(adj[a]) > k - 2 or len(adj[b]) > k - 2:
                    continue
                path = _tree_path(adj, a, b)
                if x not in path:
                    continue
                i = path.index(x)
                y = path[i - 1] if i > 0 else path[i + 1]
                adj[x].discard(y)
                adj[y].discard(x)
                adj[a].add(b)
                adj[b].add(a)
                improved = True
                break
            if improved:
                break
        if not improved:
            break
    return sorted({(min(u, v), max(u, v)) for u in adj for v in adj[u]})


def _bounded_degree_tree(g: Graph, k: int):
    """Exact include/exclude search for a spanning tree with max degree <= k."""
    n, edges = g.n, g.edges
    m = len(edges)
    parent = list(range(n))
    size = [1] * n
    deg = [0] * n
    chosen: list[tuple[int, int]] = []

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def feasible(i):
        p = list(range(n))

        def f(x):
            while p[x] != x:
                p[x] = p[p[x]]
                x = p[x]
            return x

        comps = n
        for u, v in chosen:
            ru, rv = f(u), f(v)
            if ru != rv:
                p[ru] = rv
                comps -= 1
        for u, v in edges[i:]:
            if deg[u] < k and deg[v] < k:
                ru, rv = f(u), f(v)
                if ru != rv:
                    p[ru] = rv
                    comps -= 1
        return comps == 1

    def rec(i):
        if len(chosen) == n - 1:
            return True
        if m - i < n - 1 - len(chosen) or not feasible(i):
            return False
        u, v = edges[i]
        if deg[u] < k and deg[v] < k:
            ru, rv = find(u), find(v)
            if ru != rv:
                if size[ru] > size[rv]:
                    ru, rv = rv, ru
                parent[ru] = rv
                size[rv] += size[ru]
                deg[u] += 1
                deg[v] += 1
                chosen.append((u, v))
                if rec(i + 1):
                    return True
                chosen.pop()
                deg[u] -= 1
                deg[v] -= 1
                parent[ru] = ru
                size[rv] -= size[ru]
        return rec(i + 1)

    return list(chosen) if rec(0) else None


def min_max_degree_spanning_tree(g: Graph, exact_cap: int = EXACT_TREE_CAP) -> Graph:
    """Spanning tree with small maximum degree.

    Local improvement always runs and a Hamiltonian path is tried for
    ``n <= HAM_CAP``; when ``g.m <= exact_cap`` the result is additionally made
    optimal by exact search for every smaller degree bound.
    """
    if g.n == 0 or not is_connected(g):
        raise ValueError("graph is disconnected")
    if g.n <= 2:
        return Graph(g.n, g.edges)
    best = _improve(g, _dfs_spanning_tree(g))
    best_k = Graph(g.n, best).max_degree
    if best_k > 2 and g.n <= HAM_CAP:
        path = hamiltonian_path(g)
        if path is not None:
            return Graph(g.n, list(zip(path, path[1:])))
    if g.m <= exact_cap and g.n <= HAM_CAP and best_k > 2:
        lower = max(3, max((len(components(g, set(range(g.n)) - {x})) for x in cut_vertices(g)),
                           default=3))
        for k in range(lower, best_k):
            found = _bounded_degree_tree(g, k)
            if found is not None:
                return Graph(g.n, found)
    return Graph(g.n, best)
