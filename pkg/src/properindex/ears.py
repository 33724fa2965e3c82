"""Even cycles, nonincreasing ear decompositions, and the ear coloring."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .basic import color_traceable
from .coloring import ColoringError, EdgeColoring
from .graph import CapExceeded, Graph
from .structure import hamiltonian_path, is_two_connected

EAR_CAP = 16


class EarError(ValueError):
    pass


def _key(a, b):
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Ear:
    path: tuple  # a ... b

    @property
    def a(self) -> int:
        return self.path[0]

    @property
    def b(self) -> int:
        return self.path[-1]

    @property
    def internal(self) -> tuple:
        return self.path[1:-1]

    @property
    def length(self) -> int:
        return len(self.path) - 1

    @property
    def edges(self) -> list:
        return [_key(x, y) for x, y in zip(self.path, self.path[1:])]

    @property
    def end_edges(self) -> list:
        e = self.edges
        return e if len(e) <= 2 else [e[0], e[-1]]

    @property
    def internal_edges(self) -> list:
        return self.edges[1:-1]


@dataclass
class EarDecomposition:
    cycle: list
    ears: list = field(default_factory=list)

    @property
    def lengths(self) -> list:
        return [e.length for e in self.ears]

    @property
    def t(self) -> int:
        """Last (1-based) index of an ear with length at least 2."""
        return max((i + 1 for i, e in enumerate(self.ears) if e.length >= 2), default=0)

    def stage_edges(self, i: int) -> set:
        edges = {_key(x, y) for x, y in zip(self.cycle, self.cycle[1:] + self.cycle[:1])}
        for e in self.ears[:i]:
            edges |= set(e.edges)
        return edges

    def to_json(self) -> dict:
        return {"cycle": list(self.cycle), "t": self.t,
                "ears": [{"a": e.a, "b": e.b, "internal": list(e.internal), "length": e.length}
                         for e in self.ears]}


def _require_two_connected(g: Graph) -> None:
    if g.n < 4 or not is_two_connected(g):
        raise EarError("graph must be 2-connected with at least 4 vertices")


def _shortest_cycle(g: Graph) -> list:
    best = None
    for s in range(g.n):
        dist = {s: 0}
        par = {s: None}
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    par[y] = x
                    queue.append(y)
                elif par[x] != y and dist[y] >= dist[x]:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < len(best):
                        px, py = [x], [y]
                        while par[px[-1]] is not None:
                            px.append(par[px[-1]])
                        while par[py[-1]] is not None:
                            py.append(par[py[-1]])
                        if set(px[:-1]) & set(py[:-1]):
                            continue
                        best = px[::-1] + py[:-1]
    return best


def _find_ear(g: Graph, on: set, used: set, exclude=()):
    """Shortest ear (BFS through vertices off ``on``) avoiding ``used`` edges."""
    for a in sorted(on):
        for y in g.neighbors(a):
            if y in on:
                if y != a and _key(a, y) not in used:
                    return [a, y]
                continue
            prev = {y: a}
            queue = deque([y])
            while queue:
                x = queue.popleft()
                for z in g.neighbors(x):
                    if z in on and z != a:
                        path = [z, x]
                        while path[-1] != a:
                            path.append(prev[path[-1]])
                        return path[::-1]
                    if z not in on and z not in prev:
                        prev[z] = x
                        queue.append(z)
    return None


def even_cycle(g: Graph) -> list:
    """An even cycle as a vertex list (shortest cycle, rerouted through an ear if odd)."""
    _require_two_connected(g)
    c = _shortest_cycle(g)
    if len(c) % 2 == 0:
        return c
    used = {_key(x, y) for x, y in zip(c, c[1:] + c[:1])}
    ear = _find_ear(g, set(c), used)
    if ear is None:
        raise EarError("graph has no even cycle")
    a, b = ear[0], ear[-1]
    i = c.index(a)
    rot = c[i:] + c[:i]
    j = rot.index(b)
    # a..b one way round closes with the ear walked back; b..a the other way with it forward
    for seg, back in ((rot[: j + 1], ear[::-1][1:-1]), (rot[j:] + [a], ear[1:-1])):
        if (len(seg) - 1 + len(ear) - 1) % 2 == 0:
            return (seg + back) if seg[0] == a else (seg[:-1] + ear[:-1])
    raise AssertionError("segments of an odd cycle have different parities")


def _longest_ear(g: Graph, on: set, used: set):
    best = None
    for a in sorted(on):
        for y in g.neighbors(a):
            if y in on:
                if y > a and _key(a, y) not in used and best is None:
                    best = [a, y]
                continue
            path = [a, y]
            seen = {a, y}
            stack = [iter(g.neighbors(y))]
            while stack:
                nxt = next(stack[-1], None)
                if nxt is None:
                    stack.pop()
                    seen.discard(path.pop())
                    if len(path) == 1:
                        break
                    continue
                if nxt in on:
                    if nxt != a and (best is None or len(path) + 1 > len(best)):
                        best = path + [nxt]
                    continue
                if nxt in seen:
                    continue
                path.append(nxt)
                seen.add(nxt)
                stack.append(iter(g.neighbors(nxt)))
    return best


def nonincreasing_ear_decomposition(g: Graph, cap: int = EAR_CAP) -> EarDecomposition:
    """Ear decomposition from an even cycle, always adding a longest ear."""
    _require_two_connected(g)
    if g.n > cap:
        raise CapExceeded(f"longest-ear search capped at n <= {cap}, got n={g.n}")
    cyc = even_cycle(g)
    dec = EarDecomposition(list(cyc))
    on = set(cyc)
    used = dec.stage_edges(0)
    while len(used) < g.m:
        ear = _longest_ear(g, on, used)
        if ear is None:
            raise EarError("no ear found although edges remain")
        dec.ears.append(Ear(tuple(ear)))
        on |= set(ear)
        used |= {_key(x, y) for x, y in zip(ear, ear[1:])}
    return dec


def validate_decomposition(g: Graph, dec: EarDecomposition) -> list[str]:
    """Problems found (empty list when every invariant holds)."""
    problems = []
    c = dec.cycle
    if len(c) < 4 or len(c) % 2 or len(set(c)) != len(c):
        problems.append("start cycle is not an even cycle of length >= 4")
    if any(not g.has_edge(x, y) for x, y in zip(c, c[1:] + c[:1])):
        problems.append("start cycle uses a non-edge")
    on = set(c)
    used = dec.stage_edges(0)
    for i, ear in enumerate(dec.ears, 1):
        if ear.a == ear.b or ear.a not in on or ear.b not in on:
            problems.append(f"ear {i} endpoints are not distinct vertices of the previous stage")
        if any(x in on for x in ear.internal) or len(set(ear.internal)) != len(ear.internal):
            problems.append(f"ear {i} has an internal vertex already present")
        if any(not g.has_edge(*e) or e in used for e in ear.edges):
            problems.append(f"ear {i} uses a non-edge or a used edge")
        on |= set(ear.path)
        used |= set(ear.edges)
        stage = Graph(g.n, used)
        sub, _ = stage.induced(on)
        if not is_two_connected(sub):
            problems.append(f"stage {i} is not 2-connected")
    if used != set(g.edges):
        problems.append("decomposition does not cover every edge")
    lengths = dec.lengths
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        problems.append("ear lengths increase")
    t = dec.t
    span = set(c) | {x for e in dec.ears[:t] for x in e.path}
    if span != set(range(g.n)):
        problems.append("G_t does not span the graph")
    return problems


@dataclass(frozen=True)
class EarColoring:
    coloring: EdgeColoring
    decomposition: EarDecomposition | None
    t: int

    @property
    def expected_colors(self) -> int:
        return 2 if self.decomposition is None else -(-(self.t + 3) // 2)


def color_ear_detailed(g: Graph, cap: int = EAR_CAP) -> EarColoring:
    _require_two_connected(g)
    path = hamiltonian_path(g)
    if path is not None:
        return EarColoring(color_traceable(g, path), None, 0)
    dec = nonincreasing_ear_decomposition(g, cap)
    t = dec.t
    if t < 2:
        raise EarError("non-traceable graph produced t < 2")
    col: dict = {}
    # G_1 = cycle + first ear is a theta graph: alternate along a Hamiltonian path
    g1_edges = dec.stage_edges(1)
    g1_vertices = sorted({x for e in g1_edges for x in e})
    g1, order = Graph(g.n, g1_edges).induced(g1_vertices)
    p1 = hamiltonian_path(g1)
    if p1 is None:
        raise ColoringError("first stage is not traceable")
    c1 = color_traceable(g1, p1)
    for (a, b), c in zip(g1.edges, c1.colors):
        col[_key(order[a], order[b])] = c
    for i in range(2, t + 1):
        ear = dec.ears[i - 1]
        fresh = i // 2 + 2        # pairs (P2, P3) -> 3, (P4, P5) -> 4, ...
        for e in ear.end_edges:
            col[e] = fresh
        for k, e in enumerate(ear.internal_edges):
            col[e] = 1 + k % 2
    for e in g.edges:
        col.setdefault(e, 1)
    return EarColoring(EdgeColoring(g, [col[e] for e in g.edges]), dec, t)


def color_ear(g: Graph, cap: int = EAR_CAP) -> EdgeColoring:
    return color_ear_detailed(g, cap).coloring
