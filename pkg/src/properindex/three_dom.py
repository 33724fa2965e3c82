"""Colorings from a connected 3-dominating set; threshold and chain graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import EdgeColoring, ProperTreeWitness, proper_s_tree
from .domination import verify_dominating
from .generators import ChainSpec, ThresholdSpec, chain, threshold
from .graph import Graph
from .structure import components, is_connected
from .three_way import DominatingSetError, inner_strategy


@dataclass(frozen=True)
class ThreeDomColoring:
    coloring: EdgeColoring
    D: frozenset
    inner_palette: tuple
    crossing_color: int = 1


def check_three_dom_set(g: Graph, D) -> frozenset:
    cert = verify_dominating(g, D, 3)
    if not cert.connected_s_dominating:
        raise DominatingSetError("D is not a connected 3-dominating set")
    return cert.D


def color_three_dom(g: Graph, D, inner="spanning_tree_delta") -> ThreeDomColoring:
    """Inner coloring of G[D] shifted to colors 2.., every other edge colored 1."""
    D = check_three_dom_set(g, D)
    if len(D) < g.n and g.min_degree < 3:
        raise DominatingSetError("minimum degree must be at least 3")
    gD, order = g.induced(D)
    ic = inner if isinstance(inner, EdgeColoring) else inner_strategy(gD, inner)
    if ic.graph != gD:
        raise ValueError("inner coloring does not match G[D]")
    shift = {c: i + 2 for i, c in enumerate(ic.palette)}
    col = {(order[a], order[b]): shift[c] for (a, b), c in zip(gD.edges, ic.colors)}
    coloring = EdgeColoring(g, [col.get(e, 1) for e in g.edges])
    return ThreeDomColoring(coloring, D, tuple(sorted(shift.values())))


def distinct_attachments(g: Graph, D, vertices) -> dict:
    """Pairwise distinct neighbors in D for the given outside vertices (greedy, id order)."""
    used: set = set()
    out = {}
    for v in sorted(vertices):
        a = next((d for d in g.neighbors(v) if d in D and d not in used), None)
        if a is None:
            raise DominatingSetError(f"no free attachment for {v}")
        used.add(a)
        out[v] = a
    return out


def three_dom_tree(res: ThreeDomColoring, terminals) -> ProperTreeWitness:
    """Proper tree for ``terminals``: color-1 legs to distinct feet plus an inner tree."""
    g = res.coloring.graph
    D = res.D
    terms = sorted(set(terminals))
    outside = [v for v in terms if v not in D]
    att = distinct_attachments(g, D, outside)
    legs = [(min(v, a), max(v, a)) for v, a in att.items()]
    anchors = sorted({v for v in terms if v in D} | set(att.values()))
    gD, order = g.induced(D)
    index = {v: i for i, v in enumerate(order)}
    inner_edges: list = []
    if len(anchors) >= 2:
        sub = EdgeColoring(gD, [res.coloring.color(order[a], order[b]) for a, b in gD.edges])
        w = proper_s_tree(sub, [index[a] for a in anchors])
        if w is None:
            raise DominatingSetError(f"no proper tree in G[D] for {anchors}")
        inner_edges = [(order[a], order[b]) for a, b in w.edges]
    edges = tuple(sorted(set(legs) | {(min(a, b), max(a, b)) for a, b in inner_edges}))
    return ProperTreeWitness(frozenset(terms), edges)


# -- recognition ----------------------------------------------------------------

def _peel(g: Graph):
    """Blocks of simultaneously isolated / dominating vertices, in peel order."""
    alive = set(range(g.n))
    blocks = []
    while alive:
        deg = {v: sum(1 for w in g.neighbors(v) if w in alive) for v in alive}
        if len(alive) == 1:
            blocks.append(("iso", sorted(alive)))
            break
        iso = sorted(v for v in alive if deg[v] == 0)
        if iso:
            blocks.append(("iso", iso))
            alive -= set(iso)
            continue
        dom = sorted(v for v in alive if deg[v] == len(alive) - 1)
        if not dom:
            return None
        blocks.append(("dom", dom))
        alive -= set(dom)
    return blocks


def recognize_threshold(g: Graph):
    """A realizing ThresholdSpec, or None when g is not a threshold graph."""
    if g.n == 0:
        return None
    blocks = _peel(g)
    if blocks is None:
        return None
    weights = [0] * g.n
    loose: list = []
    if blocks[0][0] == "iso" and len(blocks) > 1:
        loose = blocks[0][1]
        blocks = blocks[1:]
    k = len(blocks)
    # construction order is the reverse of peel order
    built = list(reversed(blocks))
    iso = [b for b in built if b[0] == "iso"]
    dom = [b for b in built if b[0] == "dom"]
    w = 0
    for _, vs in reversed(iso):
        for v in vs:
            weights[v] = w
        w += 1
    for _, vs in dom:
        for v in vs:
            weights[v] = w
        w += 1
    t = k - 1 if dom else 1
    for v in loose:
        weights[v] = -(k + 1)
    spec = ThresholdSpec(tuple(weights), t)
    return spec if threshold(spec) == g else None


def _two_color(g: Graph, comp):
    side = {comp[0]: 0}
    stack = [comp[0]]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in side:
                side[y] = 1 - side[x]
                stack.append(y)
            elif side[y] == side[x]:
                return None
    return side


def recognize_chain(g: Graph):
    """A realizing ChainSpec (U ordered by nested neighborhoods), or None."""
    comps = components(g)
    big = [c for c in comps if len(c) > 1]
    if len(big) > 1:
        return None
    loose = [c[0] for c in comps if len(c) == 1]
    if not big:
        return ChainSpec(tuple(loose), (), tuple(frozenset() for _ in loose))
    side = _two_color(g, big[0])
    if side is None:
        return None
    parts = [sorted(v for v in big[0] if side[v] == s) for s in (0, 1)]
    for u_side, v_side in (parts, parts[::-1]):
        u_all = loose + u_side
        u_order = sorted(u_all, key=lambda u: (g.degree(u), u))
        nbs = [frozenset(g.neighbors(u)) for u in u_order]
        if all(a <= b for a, b in zip(nbs, nbs[1:])):
            spec = ChainSpec(tuple(u_order), tuple(v_side), tuple(nbs))
            if chain(spec) == g:
                return spec
    return None


def threshold_dominating_set(spec: ThresholdSpec) -> frozenset:
    """The three heaviest vertices (ties by id)."""
    order = sorted(range(len(spec.weights)), key=lambda v: (-spec.weights[v], v))
    return frozenset(order[:3])


def chain_dominating_set(spec: ChainSpec) -> frozenset:
    """Three V vertices adjacent to all of U plus the last three U vertices."""
    first = sorted(spec.neighborhoods[0])[:3]
    return frozenset(first) | frozenset(spec.side_u[-3:])
