"""Homotopy categories of quasi-categories, computed from the 2-skeleton."""
from __future__ import annotations

from dataclasses import dataclass, field

from . import operators as ops
from .sset import SimplicialSet


class NotQuasiCategory(ValueError):
    pass


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if repr(rb) < repr(ra):
                ra, rb = rb, ra
            self.parent[rb] = ra


def components(X: SimplicialSet) -> list[list]:
    """Path components, as lists of vertex keys in canonical order."""
    uf = _UnionFind(X.cells_of(0))
    for c in X.cells_of(1):
        a, b = X.vertices_of(X.cell(c))
        uf.union(a, b)
    groups = {}
    for v in X.cells_of(0):
        groups.setdefault(uf.find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: X.order[g[0]])


@dataclass
class HomotopyCategory:
    """Objects are vertices; morphisms are classes of edges (all 1-simplices,
    degenerate ones included) up to homotopy."""

    X: SimplicialSet
    class_of: dict = field(default_factory=dict)
    members: dict = field(default_factory=dict)
    ends: dict = field(default_factory=dict)
    table: dict = field(default_factory=dict)

    def identity(self, v):
        return self.class_of[((0, 0), v)]

    def compose(self, f, g):
        """Class of ``f`` then ``g``."""
        return self.table[(f, g)]

    def morphisms(self, a=None, b=None) -> list:
        return [m for m, e in self.ends.items() if (a is None or e[0] == a) and (b is None or e[1] == b)]

    def is_invertible(self, m) -> bool:
        a, b = self.ends[m]
        return any(self.table.get((m, g)) == self.identity(a) and self.table.get((g, m)) == self.identity(b)
                   for g in self.morphisms(b, a))

    def edge_invertible(self, s) -> bool:
        return self.is_invertible(self.class_of[s])


def homotopy_category(X: SimplicialSet, strict: bool = True) -> HomotopyCategory:
    """Compute ``hX``.

    Two edges are identified when some 2-simplex has them as its ``d2`` and
    ``d1`` faces with ``d0`` degenerate (or as ``d0`` and ``d1`` with ``d2``
    degenerate).  Composition is read off from 2-simplices.  With
    ``strict``, a :class:`NotQuasiCategory` is raised if some composable pair
    has no composite or two witnesses give different classes.
    """
    edges = X.simplices(1)
    uf = _UnionFind(edges)
    tri = X.simplices(2)
    for s in tri:
        d0, d1, d2 = X.faces_of(s)
        if not ops.is_identity(d0[0]):
            uf.union(d2, d1)
        if not ops.is_identity(d2[0]):
            uf.union(d0, d1)
    H = HomotopyCategory(X)
    for e in edges:
        r = uf.find(e)
        H.class_of[e] = r
        H.members.setdefault(r, []).append(e)
        H.ends[r] = X.vertices_of(e)
    witnessed = {}
    for s in tri:
        d0, d1, d2 = X.faces_of(s)
        key = (H.class_of[d2], H.class_of[d0])
        val = H.class_of[d1]
        old = witnessed.setdefault(key, val)
        if old != val and strict:
            raise NotQuasiCategory(f"composite of {d2} and {d0} is not well defined")
    if strict:
        for f in H.ends:
            for g in H.ends:
                if H.ends[f][1] == H.ends[g][0] and (f, g) not in witnessed:
                    raise NotQuasiCategory(f"no composite witnessed for {f} then {g}")
    H.table = witnessed
    return H


def invertible_core(X: SimplicialSet, H: HomotopyCategory = None) -> SimplicialSet:
    """Subcomplex of cells all of whose edges are invertible in ``hX``."""
    H = H or homotopy_category(X)

    def ok(c):
        n = X.dim_of[c]
        s = X.cell(c)
        return all(H.edge_invertible(X.act(s, (i, j))) for i in range(n + 1) for j in range(i + 1, n + 1))

    return X.where(ok, name=f"core {X.name}")
