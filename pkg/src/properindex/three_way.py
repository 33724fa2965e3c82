"""3-proper colorings from a connected 3-way dominating set D.

Edges touching the outside of D get colors 1..3 so that every outside
vertex has three internally disjoint proper paths into D whose last edges
have three different colors; G[D] gets a 3-proper coloring with fresh colors.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

from .bfs import TYPE_I, TYPE_II, BfsTree, bfs_tree
from .coloring import EdgeColoring, is_proper_edge_set
from .domination import greedy_connected_dominating_set, verify_dominating
from .graph import Graph
from .structure import components

INNER_MODES = ("exact_oracle", "spanning_tree_delta", "recursive_three_way")

# (f_v, e_v) colors by subtree type and level mod 3
SCHEDULE = {
    TYPE_I: {0: (1, 3), 1: (2, 1), 2: (3, 2)},
    TYPE_II: {0: (2, 3), 1: (1, 2), 2: (3, 1)},
}
# star center recolor: (new e_center, star edge color)
STAR = {
    TYPE_I: {0: (1, 2), 1: (2, 3), 2: (3, 1)},
    TYPE_II: {0: (2, 1), 1: (1, 3), 2: (3, 2)},
}
# isolated leaf with an extra foot w' in D: color of ww'
FOOT = {TYPE_I: {0: 1, 1: 2, 2: 3}, TYPE_II: {0: 2, 1: 1, 2: 3}}

# Isolated leaf w with a neighbor w' in the same tree.  Key: (type w, type w',
# level(w) mod 3, level(w') - level(w), e_{w'} recolored).  Value: (color of
# ww', route for w, route for w' when w' still lacks a third path).
#   direct   w w' t(w')           parent  w w' p(w') t(p(w'))
#   grand    w w' p(w') p(p(w')) t(.)  sib  w w' w'' t(w''), w'' a star leaf of w'
#   back*    the same shapes read from w' through w
_CASES: dict = {}


def _fill_same_type(kind, table):
    for r, (c_minus, c_same, c_plus) in table.items():
        for rec in (False, True):
            _CASES[(kind, kind, r, -1, rec)] = (c_minus, "parent", "back")
            _CASES[(kind, kind, r, 0, rec)] = (c_same, "grand", "back_grand")
            _CASES[(kind, kind, r, 1, rec)] = ((c_plus, "sib", None) if rec
                                               else (c_plus, "direct", "back_parent"))


_fill_same_type(TYPE_I, {0: (1, 3, 2), 1: (2, 1, 3), 2: (3, 2, 1)})
_fill_same_type(TYPE_II, {0: (2, 3, 1), 1: (1, 2, 3), 2: (3, 1, 2)})
for _rec in (False, True):
    _CASES.update({
        (TYPE_I, TYPE_II, 0, 0, _rec): (3, "parent", "back_parent"),
        (TYPE_I, TYPE_II, 1, -1, _rec): (3, "grand", "back_grand"),
        (TYPE_I, TYPE_II, 2, -1, _rec): (2, "parent", "back_parent"),
        (TYPE_I, TYPE_II, 2, 0, _rec): (1, "grand", "back_grand"),
        (TYPE_II, TYPE_I, 0, 0, _rec): (3, "parent", "back_parent"),
        (TYPE_II, TYPE_I, 0, 1, _rec): (3, "grand", "back_grand"),
        (TYPE_II, TYPE_I, 1, 1, _rec): (2, "parent", "back_parent"),
        (TYPE_II, TYPE_I, 2, 0, _rec): (1, "grand", "back_grand"),
    })
_CASES.update({
    (TYPE_I, TYPE_II, 0, -1, False): (2, "direct", "back"),
    (TYPE_I, TYPE_II, 0, -1, True): (3, "sib", None),
    (TYPE_I, TYPE_II, 1, 0, False): (3, "direct", "back"),
    (TYPE_I, TYPE_II, 1, 0, True): (2, "sib", None),
    (TYPE_II, TYPE_I, 1, 0, False): (3, "direct", "back"),
    (TYPE_II, TYPE_I, 1, 0, True): (2, "sib", None),
    (TYPE_II, TYPE_I, 2, 1, False): (2, "direct", "back"),
    (TYPE_II, TYPE_I, 2, 1, True): (3, "sib", None),
})


class ConstructionError(AssertionError):
    """An internal invariant of the construction failed (a bug signal)."""


class DominatingSetError(ValueError):
    pass


@dataclass
class ThreeWayColoringTrace:
    graph: Graph
    D: frozenset
    coloring: EdgeColoring | None = None
    classes: dict = field(default_factory=dict)        # vertex -> "A" | "B" | "C"
    component_of: dict = field(default_factory=dict)   # vertex -> component index
    comps: list = field(default_factory=list)          # (class, sorted vertices)
    trees: dict = field(default_factory=dict)          # component index -> BfsTree
    leg: dict = field(default_factory=dict)            # e_v as an edge
    foot: dict = field(default_factory=dict)           # t(v)
    parent_edge: dict = field(default_factory=dict)    # f_v
    recolored: set = field(default_factory=set)
    stars: list = field(default_factory=list)          # (center, leaves)
    witnesses: dict = field(default_factory=dict)      # v -> [P1, P2, P3]
    log: list = field(default_factory=list)
    inner_colors: int = 0

    def tree_of(self, v):
        return self.trees.get(self.component_of.get(v))

    def to_json(self) -> dict:
        return {
            "D": sorted(self.D),
            "components": [{"class": k, "vertices": vs} for k, vs in self.comps],
            "trees": {str(i): t.dump() for i, t in self.trees.items()},
            "legs": {str(v): list(e) for v, e in sorted(self.leg.items())},
            "recolored": sorted(self.recolored),
            "stars": [{"center": c, "leaves": ls} for c, ls in self.stars],
            "log": self.log,
            "witnesses": {str(v): ps for v, ps in sorted(self.witnesses.items())},
            "inner_colors": self.inner_colors,
            "colors": None if self.coloring is None else self.coloring.num_colors,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)


# -- path checks ----------------------------------------------------------------

def _key(a, b):
    return (a, b) if a < b else (b, a)


def _path_colors(col: dict, path):
    return [col.get(_key(a, b), 0) for a, b in zip(path, path[1:])]


def _is_v_d_path(path, D, col) -> bool:
    if len(path) < 2 or len(set(path)) != len(path):
        return False
    if path[-1] not in D or any(x in D for x in path[:-1]):
        return False
    cs = _path_colors(col, path)
    return all(cs) and all(a != b for a, b in zip(cs, cs[1:]))


def is_good(v, paths, D, col) -> bool:
    """Three internally disjoint proper v-D paths with distinct last-edge colors."""
    if len(paths) != 3 or any(p[0] != v for p in paths):
        return False
    if not all(_is_v_d_path(p, D, col) for p in paths):
        return False
    inner = [set(p[1:-1]) for p in paths]
    if any(inner[i] & inner[j] for i, j in ((0, 1), (0, 2), (1, 2))):
        return False
    ends = {col[_key(p[-2], p[-1])] for p in paths}
    return len(ends) == 3


# -- the construction -----------------------------------------------------------

class _Builder:
    def __init__(self, g: Graph, D: frozenset):
        self.g = g
        self.D = D
        self.col: dict = {}
        self.tr = ThreeWayColoringTrace(g, D)

    def set(self, a, b, c, why=None):
        k = _key(a, b)
        if k in self.col and self.col[k] != c and why != "recolor":
            raise ConstructionError(f"edge {k} already colored {self.col[k]}, wanted {c}")
        self.col[k] = c

    def feet(self, v):
        return [w for w in self.g.neighbors(v) if w in self.D]

    def require_good(self, v):
        if not is_good(v, self.tr.witnesses.get(v, []), self.D, self.col):
            raise ConstructionError(f"vertex {v} is not good: {self.tr.witnesses.get(v)}")

    # A and B components
    def color_a(self, v):
        legs = self.feet(v)
        for i, f in enumerate(legs):
            self.set(v, f, min(i + 1, 3))
        self.tr.witnesses[v] = [[v, legs[0]], [v, legs[1]], [v, legs[2]]]
        self.tr.leg[v], self.tr.foot[v] = _key(v, legs[0]), legs[0]

    def color_b(self, u, v):
        fu, fv = self.feet(u), self.feet(v)
        for i, f in enumerate(fu):
            self.set(u, f, 1 if i == 0 else 2)
        for i, f in enumerate(fv):
            self.set(v, f, 2 if i == 0 else 3)
        self.set(u, v, 2)
        self.tr.witnesses[u] = [[u, fu[0]], [u, fu[1]], [u, v, fv[1]]]
        self.tr.witnesses[v] = [[v, fv[0]], [v, fv[1]], [v, u, fu[0]]]
        for x, fx in ((u, fu), (v, fv)):
            self.tr.leg[x], self.tr.foot[x] = _key(x, fx[0]), fx[0]

    # C components
    def color_c(self, idx, comp):
        g = self.g
        cset = set(comp)
        root = next(v for v in comp if sum(1 for w in g.neighbors(v) if w in cset) >= 2)
        t = bfs_tree(g, root, cset)
        self.tr.trees[idx] = t
        foot = {v: self.feet(v)[0] for v in comp}
        for v in comp:
            self.tr.foot[v] = foot[v]
            self.tr.leg[v] = _key(v, foot[v])
        self.set(root, foot[root], 3)
        for v in comp:
            if v == root:
                continue
            f, e = SCHEDULE[t.subtree_type[v]][t.level[v] % 3]
            self.set(v, t.parent[v], f)
            self.set(v, foot[v], e)
            self.tr.parent_edge[v] = _key(v, t.parent[v])
        self._leaves(t, cset)

    def _sibling_groups(self, t: BfsTree):
        for p in t.vertices:
            for kind in (TYPE_I, TYPE_II):
                W = [c for c in t.children[p] if t.is_leaf(c) and t.subtree_type[c] == kind]
                if W:
                    yield p, W

    def _star_forest(self, W):
        """Spanning star forest of G[W] leaving exactly the isolated vertices alone."""
        g = self.g
        rest = set(W)
        stars: dict = {}          # center -> leaves
        while True:
            deg = {v: [w for w in g.neighbors(v) if w in rest] for v in rest}
            best = max(sorted(rest), key=lambda v: len(deg[v]), default=None)
            if best is None or not deg[best]:
                break
            stars[best] = sorted(deg[best])
            rest -= {best, *deg[best]}
        wset = set(W)
        for x in sorted(rest):
            nbrs = [y for y in g.neighbors(x) if y in wset]
            if not nbrs:
                continue
            y = nbrs[0]
            if y in stars:
                stars[y] = sorted(stars[y] + [x])
                continue
            c = next(c for c, ls in stars.items() if y in ls)
            if len(stars[c]) >= 2:
                stars[c] = [z for z in stars[c] if z != y]
                stars[y] = [x]
            else:
                del stars[c]
                stars[y] = sorted([c, x])
            self.tr.log.append({"step": "star_repair", "vertex": x, "via": y})
        isolated = [x for x in W if not any(x == c or x in ls for c, ls in stars.items())]
        return sorted(stars.items()), isolated

    def _child(self, t: BfsTree, v):
        for c in t.children[v]:
            if c not in self.tr.recolored:
                return c
        raise ConstructionError(f"every child of {v} had its leg recolored")

    def _route(self, t: BfsTree, a, b, kind):
        """Path from a through its neighbor b (or through a's own tree relatives)."""
        foot = self.tr.foot
        p = t.parent
        if kind in ("direct", "back"):
            return [a, b, foot[b]]
        if kind in ("parent", "back_parent"):
            return [a, b, p[b], foot[p[b]]]
        if kind in ("grand", "back_grand"):
            return [a, b, p[b], p[p[b]], foot[p[p[b]]]]
        if kind == "child":
            c = self._child(t, b)
            return [a, b, c, foot[c]]
        if kind == "sib":
            c = next(ls for cc, ls in self.tr.stars if cc == b)[0]
            return [a, b, c, foot[c]]
        raise ValueError(kind)

    def _leaves(self, t: BfsTree, cset):
        g, tr = self.g, self.tr
        foot = tr.foot
        groups = list(self._sibling_groups(t))
        isolated_all = []
        for p, W in groups:
            stars, isolated = self._star_forest(W)
            isolated_all += isolated
            for center, leaves in stars:
                kind = t.subtree_type[center]
                new_e, star_c = STAR[kind][t.level[center] % 3]
                self.set(center, foot[center], new_e, "recolor")
                tr.recolored.add(center)
                for x in leaves:
                    self.set(center, x, star_c)
                tr.stars.append((center, list(leaves)))
                tr.log.append({"step": "star", "center": center, "leaves": list(leaves)})
        star_of = {}
        for c, ls in tr.stars:
            star_of[c] = ls[0]
            for x in ls:
                star_of[x] = c
        # witnesses of non-leaves and star members
        first = t.first_level
        for v in t.vertices:
            if v == t.root:
                vi = next(c for c in first[:-1] if c not in tr.recolored)
                tr.witnesses[v] = [[v, foot[v]], [v, vi, foot[vi]], [v, first[-1], foot[first[-1]]]]
            else:
                base = [[v, foot[v]], [v, t.parent[v], foot[t.parent[v]]]]
                if not t.is_leaf(v):
                    c = self._child(t, v)
                    tr.witnesses[v] = base + [[v, c, foot[c]]]
                elif v in star_of:
                    s = star_of[v]
                    tr.witnesses[v] = base + [[v, s, foot[s]]]
                else:
                    continue
            self.require_good(v)
        # isolated leaves
        order = sorted(isolated_all, key=t.order.get)
        for w in order:
            if w in tr.witnesses and len(tr.witnesses[w]) == 3:
                continue
            self._isolated(t, w, cset)

    def _isolated(self, t: BfsTree, w, cset):
        g, tr = self.g, self.tr
        foot = tr.foot
        base = [[w, foot[w]], [w, t.parent[w], foot[t.parent[w]]]]
        kind = t.subtree_type[w]
        r = t.level[w] % 3
        extra_feet = [x for x in g.neighbors(w) if x in self.D and x != foot[w]]
        if extra_feet:
            x = extra_feet[0]
            self.set(w, x, FOOT[kind][r])
            tr.witnesses[w] = base + [[w, x]]
            tr.log.append({"step": "isolated_foot", "w": w, "w2": x})
            self.require_good(w)
            return
        cands = [x for x in g.neighbors(w) if x in cset and x != t.parent[w]]
        if not cands:
            raise ConstructionError(f"leaf {w} has no third neighbor")
        w2 = cands[0]
        kind2 = t.subtree_type.get(w2)
        if kind2 is None:
            raise ConstructionError(f"leaf {w} is adjacent to the root")
        delta = t.level[w2] - t.level[w]
        rec = w2 in tr.recolored
        entry = _CASES.get((kind, kind2, r, delta, rec))
        if entry is None:
            raise ConstructionError(
                f"unreachable configuration: types {kind}/{kind2}, level {t.level[w]}, delta {delta}")
        color, route, back = entry
        if route == "grand" and t.parent[w2] == t.parent[w]:
            # non-leaf sibling under the same parent: leave through its child
            route, back = "child", None
            if t.is_leaf(w2):
                raise ConstructionError(f"leaf sibling {w2} of {w} should share its star group")
        self.set(w, w2, color)
        tr.witnesses[w] = base + [self._route(t, w, w2, route)]
        tr.log.append({"step": "isolated", "w": w, "w2": w2, "color": color, "route": route,
                       "delta": delta, "recolored": rec})
        self.require_good(w)
        if back and len(tr.witnesses.get(w2, [])) != 3:
            b2 = [[w2, foot[w2]], [w2, t.parent[w2], foot[t.parent[w2]]]]
            tr.witnesses[w2] = b2 + [self._route(t, w2, w, back)]
            tr.log.append({"step": "isolated_back", "w": w2, "via": w, "route": back})
            self.require_good(w2)


def check_three_way_set(g: Graph, D) -> frozenset:
    cert = verify_dominating(g, D, 3)
    if not cert.connected_s_way:
        raise DominatingSetError("D is not a connected 3-way dominating set")
    return cert.D


def inner_strategy(gD: Graph, mode: str = "spanning_tree_delta") -> EdgeColoring:
    """3-proper coloring of G[D] (colors from 1)."""
    from .basic import spanning_tree_coloring
    from .oracle import px3_exact

    if mode not in INNER_MODES:
        raise ValueError(f"unknown inner mode {mode!r}")
    if gD.n <= 2:
        return EdgeColoring(gD, [1] * gD.m)
    if mode == "exact_oracle":
        return px3_exact(gD).witness_coloring
    if mode == "recursive_three_way":
        sub = _recursive_set(gD)
        if sub is not None:
            return color_three_way(gD, sub, "recursive_three_way").coloring
    return spanning_tree_coloring(gD)


def _recursive_set(gD: Graph):
    if gD.min_degree < 3:
        return None
    D2 = greedy_connected_dominating_set(gD)
    if len(D2) >= gD.n:
        return None
    cert = verify_dominating(gD, D2, 3)
    return D2 if cert.connected_s_way else None


def color_three_way(g: Graph, D, inner="spanning_tree_delta") -> ThreeWayColoringTrace:
    """Color g from a connected 3-way dominating set ``D``.

    ``inner`` is an inner mode name or a ready EdgeColoring of ``g.induced(D)[0]``.
    """
    D = check_three_way_set(g, D)
    b = _Builder(g, D)
    tr = b.tr
    outside = [v for v in range(g.n) if v not in D]
    for idx, comp in enumerate(components(g, outside)):
        kind = "A" if len(comp) == 1 else "B" if len(comp) == 2 else "C"
        tr.comps.append((kind, comp))
        for v in comp:
            tr.classes[v] = kind
            tr.component_of[v] = idx
        if kind == "A":
            b.color_a(comp[0])
        elif kind == "B":
            b.color_b(*comp)
        else:
            b.color_c(idx, comp)
    for v in outside:
        b.require_good(v)
    gD, order = g.induced(D)
    if isinstance(inner, EdgeColoring):
        if inner.graph != gD:
            raise ValueError("inner coloring does not match G[D]")
        ic = inner
    else:
        ic = inner_strategy(gD, inner)
    tr.inner_colors = ic.num_colors
    shift = {c: i + 4 for i, c in enumerate(ic.palette)}
    for (a, bb), c in zip(gD.edges, ic.colors):
        b.col[_key(order[a], order[bb])] = shift[c]
    for e in g.edges:
        b.col.setdefault(e, 1)
    tr.coloring = EdgeColoring(g, [b.col[e] for e in g.edges])
    for v in outside:
        b.require_good(v)
    return tr


def witness_triple(tr: ThreeWayColoringTrace, v):
    if v in tr.D:
        raise ValueError(f"{v} lies in D")
    col = tr.coloring.as_dict()
    paths = tr.witnesses[v]
    if not is_good(v, paths, tr.D, col):
        raise ConstructionError(f"witnesses of {v} do not validate")
    return tuple(tuple(p) for p in paths)


def _scheduled_choice(tr: ThreeWayColoringTrace, u, v, w):
    """Path indices suggested by the case analysis on leg colors and recolor flags."""
    col = tr.coloring.as_dict()
    trio = [u, v, w]
    ec = {x: col[tr.leg[x]] for x in trio}
    if len(set(ec.values())) == 3:
        return {x: 0 for x in trio}, []
    if len(set(ec.values())) == 2:
        odd = next(x for x in trio if sum(ec[y] == ec[x] for y in trio) == 1)
        pair = [x for x in trio if x != odd]
        return None, [{odd: 0, pair[0]: 0, pair[1]: i} for i in (1, 2)] + \
            [{odd: 0, pair[1]: 0, pair[0]: i} for i in (1, 2)]
    t = tr.tree_of(u)
    if t is None or not all(tr.component_of[x] == tr.component_of[u] for x in trio) \
            or t.root in trio:
        return None, []
    rec = {x: x in tr.recolored for x in trio}
    types = {x: t.subtree_type[x] for x in trio}
    if len(set(types.values())) == 1:
        r = sorted(trio, key=lambda x: (not rec[x], t.order[x]))
        n_rec = sum(rec.values())
        if n_rec == 1:
            return {r[0]: 1, r[1]: 0, r[2]: 1}, []
        if n_rec == 2:
            return {r[0]: 1, r[1]: 0, r[2]: 1}, [{r[1]: 1, r[0]: 0, r[2]: 1}]
        a, b_, c = sorted(trio, key=t.order.get)
        return {a: 0, b_: 1, c: 2}, [{b_: 0, a: 1, c: 2}, {c: 0, a: 1, b_: 2}]
    w_ = next(x for x in trio if sum(types[y] == types[x] for y in trio) == 1)
    a, b_ = sorted((x for x in trio if x != w_), key=t.order.get)
    if rec[a] == rec[b_] == rec[w_]:
        return {a: 0, b_: 1, w_: 1}, [{b_: 0, a: 1, w_: 1}]
    if rec[a] and rec[b_]:
        return {a: 0, b_: 2, w_: 1}, [{b_: 0, a: 2, w_: 1}]
    if rec[a] != rec[b_]:
        x, y = (a, b_) if rec[a] else (b_, a)
        return ({x: 1, y: 0, w_: 1} if rec[w_] else {x: 0, y: 1, w_: 1}), []
    return {a: 0, b_: 1, w_: 2}, [{b_: 0, a: 1, w_: 2}]


def _union_ok(tr, paths, terminals) -> bool:
    """Proper, a forest once D is identified to one vertex, and every terminal reaches D."""
    edges = sorted({_key(a, b) for p in paths for a, b in zip(p, p[1:])})
    if not is_proper_edge_set(tr.coloring, edges):
        return False
    parent: dict = {}

    def find(x):
        x = "D" if x in tr.D else x
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return all(find(x) == find("D") for x in terminals)


def _truncations(paths):
    """Variants where chosen paths stop at their first vertex shared with another path."""
    for mask in range(1, 1 << len(paths)):
        out = []
        for i, p in enumerate(paths):
            if mask >> i & 1:
                others = {x for j, q in enumerate(paths) if j != i for x in q}
                cut = next((k for k in range(1, len(p)) if p[k] in others), None)
                if cut is None:
                    break
                p = p[:cut + 1]
            out.append(p)
        else:
            yield out


@dataclass(frozen=True)
class TripleChoice:
    paths: tuple
    indices: tuple
    source: str


def combine_triples(tr: ThreeWayColoringTrace, u, v, w) -> TripleChoice:
    """One witness path per vertex with a proper union that is a forest modulo D."""
    trio = (u, v, w)
    if len(set(trio)) != 3 or any(x in tr.D for x in trio):
        raise ValueError("need three distinct vertices outside D")
    first, extra = _scheduled_choice(tr, u, v, w)
    tried = ([first] if first else []) + extra
    for choice in tried:
        paths = [tr.witnesses[x][choice[x]] for x in trio]
        if _union_ok(tr, paths, trio):
            return TripleChoice(tuple(map(tuple, paths)), tuple(choice[x] for x in trio), "scheduled")
    combos = list(itertools.product(range(3), repeat=3))
    for idx in combos:
        paths = [tr.witnesses[x][i] for x, i in zip(trio, idx)]
        if _union_ok(tr, paths, trio):
            return TripleChoice(tuple(map(tuple, paths)), idx, "search")
    # a witness path may run through another terminal; stop it there
    for idx in combos:
        paths = [tr.witnesses[x][i] for x, i in zip(trio, idx)]
        for cut in _truncations(paths):
            if _union_ok(tr, cut, trio):
                return TripleChoice(tuple(map(tuple, cut)), idx, "truncated")
    raise ConstructionError(f"no compatible witness paths for {trio}")
