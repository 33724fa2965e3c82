"""Pure-Python search kernels.

Mirrors ``_fast.pyx`` call for call; the compiled module is preferred when it
imports.  Colors handed to a kernel are dense ids ``0..K-1`` indexed by edge id.

Proper-tree search: pruning non-terminal leaves of a proper tree keeps it
proper, so for terminals ``S`` (``|S| <= 3``) it suffices to look for a tree
whose leaves all lie in ``S``.  Such a tree is a spider: a center ``x`` and
vertex-disjoint proper arms from ``x`` to each terminal other than ``x``,
with pairwise distinct colors on the arm edges at ``x``.  A path through all
three terminals is the spider centered at its middle terminal.
"""

from __future__ import annotations

from itertools import combinations

BACKEND = "python"


class KernelGraph:
    def __init__(self, n: int, edges):
        self.n = n
        self.m = len(edges)
        adj = [[] for _ in range(n)]
        for i, (u, v) in enumerate(edges):
            adj[u].append((v, i))
            adj[v].append((u, i))
        for a in adj:
            a.sort()
        self.adj = [tuple(a) for a in adj]

    # -- proper S-trees ---------------------------------------------------

    def _spider(self, colors, terms, want):
        termset = 0
        for s in terms:
            termset |= 1 << s
        if len(terms) == 2:
            centers = [terms[0]]
        else:
            centers = list(terms) + [x for x in range(self.n) if not (termset >> x) & 1]
        for x in centers:
            targets = [s for s in terms if s != x]
            if len(self.adj[x]) < len(targets):
                continue
            if len(targets) > 1 and len({colors[e] for _, e in self.adj[x]}) < len(targets):
                continue
            arms = []
            if self._place(colors, termset, x, targets, 0, 1 << x, 0, arms):
                return arms if want else True
        return None

    def _place(self, colors, termset, x, targets, k, used, ccols, arms):
        if k == len(targets):
            return True
        target = targets[k]
        path = [x]
        arms.append(path)
        for y, e in self.adj[x]:
            c = colors[e]
            if (ccols >> c) & 1 or (used >> y) & 1:
                continue
            path.append(y)
            if y == target:
                if self._place(colors, termset, x, targets, k + 1, used | (1 << y),
                               ccols | (1 << c), arms):
                    return True
            elif not (termset >> y) & 1:
                if self._grow(colors, termset, x, targets, k, y, c, used | (1 << y),
                              ccols | (1 << c), arms, path):
                    return True
            path.pop()
        arms.pop()
        return False

    def _grow(self, colors, termset, x, targets, k, v, last, used, ccols, arms, path):
        target = targets[k]
        for y, e in self.adj[v]:
            c = colors[e]
            if c == last or (used >> y) & 1:
                continue
            path.append(y)
            if y == target:
                if self._place(colors, termset, x, targets, k + 1, used | (1 << y), ccols, arms):
                    return True
            elif not (termset >> y) & 1:
                if self._grow(colors, termset, x, targets, k, y, c, used | (1 << y), ccols,
                              arms, path):
                    return True
            path.pop()
        return False

    def tree_exists(self, colors, terms) -> bool:
        return self._spider(colors, tuple(terms), False) is not None

    def tree_witness(self, colors, terms):
        """Arms of a proper tree (each a vertex list starting at the center) or None."""
        return self._spider(colors, tuple(terms), True)

    def first_failing_triple(self, colors, hint=None):
        if hint is not None and not self.tree_exists(colors, hint):
            return tuple(hint)
        for s in combinations(range(self.n), 3):
            if s == hint:
                continue
            if not self.tree_exists(colors, s):
                return s
        return None

    # -- canonical coloring enumeration ------------------------------------

    def search_palette(self, t: int, exact: bool):
        """First canonical coloring with at most ``t`` colors that is 3-proper.

        Canonical: edge 0 gets color 0 and every later edge uses at most one more
        than the largest color so far.  With ``exact`` only colorings using all
        ``t`` colors are tried.  Returns ``(colors | None, n_checked)``.
        """
        m = self.m
        if m == 0:
            return None, 0
        colors = [0] * m
        checked = 0
        hint = None
        found = None

        def rec(i, cmax):
            nonlocal checked, hint, found
            if exact and (t - 1 - cmax) > (m - i):
                return False
            if i == m:
                if exact and cmax != t - 1:
                    return False
                checked += 1
                bad = self.first_failing_triple(colors, hint)
                if bad is None:
                    found = list(colors)
                    return True
                hint = bad
                return False
            for c in range(min(cmax + 2, t)):
                colors[i] = c
                if rec(i + 1, max(cmax, c)):
                    return True
            return False

        colors[0] = 0
        rec(1, 0)
        return found, checked

    # -- Hamiltonian paths -------------------------------------------------

    def hamiltonian_path(self):
        n = self.n
        if n == 0:
            return None
        if n == 1:
            return [0]
        nbr = [0] * n
        for v in range(n):
            for y, _ in self.adj[v]:
                nbr[v] |= 1 << y
        full = (1 << n) - 1
        # ends[mask]: bitset of vertices v such that some path covers mask and ends at v
        ends = [0] * (1 << n)
        for v in range(n):
            ends[1 << v] = 1 << v
        for mask in range(1, full + 1):
            e = ends[mask]
            if not e:
                continue
            while e:
                low = e & -e
                v = low.bit_length() - 1
                e ^= low
                cand = nbr[v] & ~mask
                while cand:
                    lb = cand & -cand
                    cand ^= lb
                    ends[mask | lb] |= lb
        if not ends[full]:
            return None
        v = (ends[full] & -ends[full]).bit_length() - 1
        path = [v]
        mask = full
        while mask != (1 << v):
            prev_mask = mask ^ (1 << v)
            cand = ends[prev_mask] & nbr[v]
            u = (cand & -cand).bit_length() - 1
            path.append(u)
            mask, v = prev_mask, u
        path.reverse()
        return path
