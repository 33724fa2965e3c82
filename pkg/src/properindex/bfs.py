"""BFS trees with levels, visit order, first-level ancestors and subtree types."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import Graph

TYPE_I = "I"
TYPE_II = "II"


@dataclass
class BfsTree:
    root: int
    parent: dict = field(default_factory=dict)
    level: dict = field(default_factory=dict)
    order: dict = field(default_factory=dict)
    children: dict = field(default_factory=dict)
    alpha: dict = field(default_factory=dict)
    subtree_type: dict = field(default_factory=dict)

    @property
    def first_level(self) -> list[int]:
        return self.children[self.root]

    @property
    def vertices(self) -> list[int]:
        return sorted(self.order, key=self.order.get)

    def is_leaf(self, v: int) -> bool:
        return not self.children[v]

    def dump(self) -> list[dict]:
        """Per-vertex table in visit order."""
        return [{"vertex": v, "level": self.level[v], "parent": self.parent.get(v),
                 "type": self.subtree_type.get(v), "order": self.order[v]}
                for v in self.vertices]


def bfs_tree(g: Graph, root: int, component: Iterable[int] | None = None) -> BfsTree:
    """BFS over ``component`` (default: all of g); children in ascending id."""
    comp = set(range(g.n)) if component is None else set(component)
    if root not in comp:
        raise ValueError(f"root {root} is outside the component")
    t = BfsTree(root)
    t.level[root] = 0
    t.order[root] = 0
    t.children[root] = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w in comp and w not in t.level:
                t.parent[w] = v
                t.level[w] = t.level[v] + 1
                t.order[w] = len(t.order)
                t.children[w] = []
                t.children[v].append(w)
                queue.append(w)
    if len(t.level) != len(comp):
        raise ValueError("component is not connected")
    first = t.children[root]
    for v in t.vertices:
        if v == root:
            continue
        a = v if t.parent[v] == root else t.alpha[t.parent[v]]
        t.alpha[v] = a
        t.subtree_type[v] = TYPE_II if a == first[-1] else TYPE_I
    return t


def classify_neighbor(t: BfsTree, v: int, u: int) -> str:
    d = t.level[u] - t.level[v]
    if d == 0:
        return "same_level"
    if d == -1:
        return "level_minus_1"
    if d == 1:
        return "level_plus_1"
    raise ValueError(f"{u} and {v} are not BFS-adjacent levels")
