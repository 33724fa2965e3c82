"""Exact px₃ on small graphs by canonical coloring enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import _kernels
from .basic import spanning_tree_coloring
from .coloring import EdgeColoring, verify_3_proper
from .graph import CapExceeded, Graph
from .structure import is_connected, min_max_degree_spanning_tree

DEFAULT_CAP_EDGES = 20


@dataclass(frozen=True)
class PxResult:
    value: int
    witness_coloring: EdgeColoring
    refuted_palette: int
    checked: int = 0


@dataclass(frozen=True)
class RefuteResult:
    t: int
    exhaustive: bool
    proved_ge: bool
    sampled_failures: int
    checked: int


def _check_input(g: Graph) -> None:
    if g.n < 3:
        raise ValueError("px3 needs at least 3 vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")


def _search(g: Graph, t: int, exact: bool, backend: str | None):
    kg = _kernels.kernel_graph(g.n, g.edges, backend, max_colors=t)
    return kg.search_palette(t, exact)


def px3_exact(g: Graph, cap_colors: int = 8, cap_edges: int = DEFAULT_CAP_EDGES,
              backend: str | None = None) -> PxResult:
    """Exact px₃.

    The spanning-tree bound Δ(T) seeds the search; every palette ``t`` below it
    (up to ``cap_colors``) is tried in canonical order, each time only over
    colorings that use all ``t`` colors (smaller palettes were already refuted).
    """
    _check_input(g)
    if g.m > cap_edges:
        raise CapExceeded(f"exact search capped at m <= {cap_edges}, got m={g.m}")
    tree = min_max_degree_spanning_tree(g)
    upper = tree.max_degree
    checked = 0
    # one color: a monochromatic tree on 3 or more vertices is never proper
    for t in range(2, min(cap_colors, upper - 1) + 1):
        found, n = _search(g, t, True, backend)
        checked += n
        if found is not None:
            c = EdgeColoring(g, [x + 1 for x in found])
            return PxResult(t, c, t - 1, checked)
    if cap_colors < upper - 1:
        raise CapExceeded(f"px3 exceeds cap_colors={cap_colors}; upper bound is {upper}")
    witness = spanning_tree_coloring(g, tree)
    return PxResult(upper, witness, upper - 1, checked)


def px3_lower_bound_refute(g: Graph, t: int, budget: int = 100, seed: int = 0,
                           cap_edges: int = 24, backend: str | None = None) -> RefuteResult:
    """Try to show px₃(g) > t.

    With ``g.m <= cap_edges`` every canonical coloring with at most ``t`` colors
    is checked, so ``proved_ge`` is a proof.  Otherwise ``budget`` uniformly
    random t-colorings are verified and the number that fail is reported; that
    is evidence only and ``proved_ge`` stays False.
    """
    _check_input(g)
    if g.m <= cap_edges:
        found, n = _search(g, t, False, backend)
        return RefuteResult(t, True, found is None, 0 if found is None else n - 1, n)
    rng = random.Random(seed)
    failures = 0
    for _ in range(budget):
        c = EdgeColoring(g, [rng.randint(1, t) for _ in range(g.m)])
        if not verify_3_proper(c, backend).ok:
            failures += 1
    return RefuteResult(t, False, False, failures, budget)
