"""Dominating-set variants: certificates, greedy and exhaustive search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import CapExceeded, Graph
from .structure import is_connected


@dataclass(frozen=True)
class DominatingSetCert:
    D: frozenset
    s: int
    dominating: bool
    connected: bool
    s_way: bool
    s_dominating: bool

    @property
    def connected_s_way(self) -> bool:
        return self.dominating and self.connected and self.s_way

    @property
    def connected_s_dominating(self) -> bool:
        return self.connected and self.s_dominating


def verify_dominating(g: Graph, D: Iterable[int], s: int = 3) -> DominatingSetCert:
    D = frozenset(D)
    if not D <= set(range(g.n)):
        raise ValueError("D must be a subset of the vertex set")
    outside = [v for v in range(g.n) if v not in D]
    hits = [sum(1 for w in g.neighbors(v) if w in D) for v in outside]
    dominating = all(h >= 1 for h in hits)
    s_dom = all(h >= s for h in hits)
    s_way = dominating and all(g.degree(v) >= s for v in outside)
    connected = bool(D) and is_connected(g, D)
    return DominatingSetCert(D, s, dominating, connected, s_way or s_dom, s_dom)


def _is_cds(g: Graph, D: set) -> bool:
    if not D or not is_connected(g, D):
        return False
    return all(v in D or any(w in D for w in g.neighbors(v)) for v in range(g.n))


def greedy_connected_dominating_set(g: Graph) -> frozenset:
    """Connected dominating set from a greedily grown spanning tree.

    The tree starts at a max-degree vertex and repeatedly expands the tree
    vertex with the most neighbors not yet reached; its internal vertices form
    a CDS, which is then pruned of redundant vertices (largest id first).
    """
    if g.n == 0 or not is_connected(g):
        raise ValueError("graph must be connected and non-empty")
    if g.n <= 2:
        return frozenset({0})
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    reached = {start} | set(g.neighbors(start))
    internal = {start}
    while len(reached) < g.n:
        best = max((v for v in reached if v not in internal),
                   key=lambda v: (sum(1 for w in g.neighbors(v) if w not in reached), -v))
        internal.add(best)
        reached |= set(g.neighbors(best))
    D = set(internal)
    for v in sorted(D, reverse=True):
        if len(D) > 1 and _is_cds(g, D - {v}):
            D.discard(v)
    return frozenset(D)


def find_connected_s_dominating_set(g: Graph, s: int, cap: int | None = None):
    """Smallest connected s-dominating set of size at most ``cap`` (size, then lex order)."""
    cap = g.n if cap is None else min(cap, g.n)
    for k in range(1, cap + 1):
        for D in combinations(range(g.n), k):
            Ds = set(D)
            if not is_connected(g, Ds):
                continue
            if all(v in Ds or sum(1 for w in g.neighbors(v) if w in Ds) >= s
                   for v in range(g.n)):
                return frozenset(D)
    return None


def min_connected_dominating_set(g: Graph, cap_n: int = 12) -> frozenset:
    if g.n > cap_n:
        raise CapExceeded(f"exact CDS search capped at n <= {cap_n}, got n={g.n}")
    if g.n == 0 or not is_connected(g):
        raise ValueError("graph must be connected and non-empty")
    for k in range(1, g.n + 1):
        for D in combinations(range(g.n), k):
            if _is_cds(g, set(D)):
                return frozenset(D)
    raise AssertionError("unreachable: V is always a CDS")


def gamma_c_exact(g: Graph, cap_n: int = 12) -> int:
    return len(min_connected_dominating_set(g, cap_n))
