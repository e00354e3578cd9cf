"""Finite simplicial sets in Eilenberg-Zilber form.

Every simplex is a pair ``(epi, key)``: a degeneracy operator applied to a
nondegenerate cell.  A set stores, for each nondegenerate cell, its faces in
that normal form, and everything else (operator action, enumeration of all
simplices, maps) is derived from those face tables.
"""
from __future__ import annotations

from collections.abc import Iterable
from typing import Callable, Optional

from . import operators as ops

Simplex = tuple  # (epi, key)


class BoundExceeded(RuntimeError):
    """A computation needed cells above the dimension a set was built to."""


class SimplicialSet:
    """Nondegenerate cells grouped by dimension, with their face tables.

    Parameters
    ----------
    cells : list of lists
        ``cells[n]`` lists the keys of nondegenerate ``n``-cells in canonical
        order.  Keys must be hashable and distinct across dimensions.
    faces : dict
        ``faces[key][i]`` is the ``i``-th face of ``key`` as an EZ simplex.
    bound : int or None
        ``None`` means the table is complete.  An integer ``D`` means cells
        are known only through dimension ``D`` (nerves and other
        infinite-dimensional sets are truncated this way).
    """

    def __init__(self, cells, faces, bound: Optional[int] = None, name: str = ""):
        cells = [list(c) for c in cells]
        while cells and not cells[-1] and (bound is None or len(cells) - 1 > bound):
            cells.pop()
        self.cells = cells
        self.faces = dict(faces)
        self.bound = bound
        self.name = name
        self.dim_of = {}
        self.order = {}
        for n, row in enumerate(cells):
            for c in row:
                if c in self.dim_of:
                    raise ValueError(f"duplicate cell key {c!r}")
                self.dim_of[c] = n
                self.order[c] = len(self.order)
        self._restrict = {}
        self._simplices = {}
        self._index = {}

    # -- basic queries -----------------------------------------------------
    @property
    def top_dim(self) -> int:
        return len(self.cells) - 1

    def known(self, n: int):
        if self.bound is not None and n > self.bound:
            raise BoundExceeded(f"{self.name or 'set'} is only known through dimension {self.bound}, needed {n}")

    def cells_of(self, n: int) -> list:
        self.known(n)
        return self.cells[n] if n < len(self.cells) else []

    def all_cells(self) -> list:
        return [c for row in self.cells for c in row]

    def counts(self) -> list[int]:
        return [len(r) for r in self.cells]

    def __len__(self):
        return len(self.dim_of)

    def __contains__(self, key):
        return key in self.dim_of

    def __repr__(self):
        b = "" if self.bound is None else f", through dim {self.bound}"
        return f"SimplicialSet({self.name or '?'}: {self.counts()}{b})"

    @staticmethod
    def dim(s: Simplex) -> int:
        return len(s[0]) - 1

    def cell(self, key) -> Simplex:
        return (ops.identity(self.dim_of[key]), key)

    # -- operator action ---------------------------------------------------
    def face(self, key, i: int) -> Simplex:
        return self.faces[key][i]

    def restrict(self, key, mono) -> Simplex:
        """``key . mono`` for an injective operator ``mono``."""
        mono = tuple(mono)
        memo = (key, mono)
        hit = self._restrict.get(memo)
        if hit is not None:
            return hit
        n = self.dim_of[key]
        if len(mono) == n + 1:
            out = (ops.identity(n), key)
        else:
            img = set(mono)
            i = next(j for j in range(n + 1) if j not in img)
            rest = tuple(v if v < i else v - 1 for v in mono)
            out = self.act(self.faces[key][i], rest)
        self._restrict[memo] = out
        return out

    def act(self, s: Simplex, op) -> Simplex:
        """``s . op`` in normal form."""
        e, key = s
        comp = ops.compose(e, op)
        eta, mono = ops.factor(comp)
        e2, k2 = self.restrict(key, mono)
        return (ops.compose(e2, eta), k2)

    def faces_of(self, s: Simplex) -> tuple:
        n = self.dim(s)
        return tuple(self.act(s, ops.face(i, n)) for i in range(n + 1))

    def vertices_of(self, s: Simplex) -> tuple:
        return tuple(self.act(s, (i,))[1] for i in range(self.dim(s) + 1))

    def degenerate(self, s: Simplex, i: int) -> Simplex:
        return self.act(s, ops.degeneracy(i, self.dim(s)))

    # -- enumeration -------------------------------------------------------
    def simplices(self, n: int) -> list:
        """All ``n``-simplices, degenerate ones included, in canonical order."""
        hit = self._simplices.get(n)
        if hit is not None:
            return hit
        self.known(n)
        out = []
        for k in range(min(n, self.top_dim) + 1):
            for e in ops.epis(n, k):
                out.extend((e, c) for c in self.cells[k])
        out.sort(key=lambda s: (self.order[s[1]], s[0]))
        self._simplices[n] = out
        return out

    def index(self, n: int) -> dict:
        """Map from face tuples to the ``n``-simplices having those faces."""
        hit = self._index.get(n)
        if hit is not None:
            return hit
        idx = {}
        for s in self.simplices(n):
            key = self.faces_of(s) if n > 0 else ()
            idx.setdefault(key, []).append(s)
        self._index[n] = idx
        return idx

    # -- structure ---------------------------------------------------------
    def check(self) -> list[str]:
        """Verify the face tables; returns a list of problems (empty if fine)."""
        problems = []
        for key, n in self.dim_of.items():
            fs = self.faces.get(key, ())
            if n == 0:
                if fs:
                    problems.append(f"vertex {key!r} has faces")
                continue
            if len(fs) != n + 1:
                problems.append(f"{key!r} has {len(fs)} faces, expected {n + 1}")
                continue
            for i, (e, c) in enumerate(fs):
                if c not in self.dim_of:
                    problems.append(f"face {i} of {key!r} names unknown cell {c!r}")
                elif len(e) != n or not ops.is_epi(e) or e[-1] != self.dim_of[c]:
                    problems.append(f"face {i} of {key!r} has bad operator {e}")
        if problems:
            return problems
        for key, n in self.dim_of.items():
            if n < 2:
                continue
            for j in range(n + 1):
                for i in range(j):
                    a = self.act(self.faces[key][j], ops.face(i, n - 1))
                    b = self.act(self.faces[key][i], ops.face(j - 1, n - 1))
                    if a != b:
                        problems.append(f"d{i}d{j} != d{j - 1}d{i} on {key!r}")
        return problems

    def closure(self, keys: Iterable) -> set:
        seen = set()
        stack = list(keys)
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            stack.extend(k for _, k in self.faces.get(c, ()))
        return seen

    def subcomplex(self, keys: Iterable, name: str = "") -> "SimplicialSet":
        """Smallest subcomplex containing ``keys``; cells keep their keys."""
        keep = self.closure(keys)
        cells = [[c for c in row if c in keep] for row in self.cells]
        return SimplicialSet(cells, {c: self.faces[c] for c in keep}, bound=self.bound, name=name)

    def where(self, pred: Callable, name: str = "") -> "SimplicialSet":
        return self.subcomplex([c for c in self.all_cells() if pred(c)], name=name)

    def skeleton(self, n: int, name: str = "") -> "SimplicialSet":
        cells = [list(r) for r in self.cells[: n + 1]]
        keep = {c for r in cells for c in r}
        return SimplicialSet(cells, {c: self.faces[c] for c in keep}, bound=None, name=name or self.name)

    def maximal_cells(self) -> list:
        hit = set()
        for c in self.dim_of:
            hit.update(k for _, k in self.faces.get(c, ()) if k != c)
        return [c for c in self.all_cells() if c not in hit]

    def closure_order(self) -> list:
        """Cells ordered so that each appears after all of its faces, with the
        closure of each maximal cell kept together."""
        out, seen = [], set()

        def visit(c):
            if c in seen:
                return
            for _, k in self.faces.get(c, ()):
                visit(k)
            seen.add(c)
            out.append(c)

        for c in self.maximal_cells():
            visit(c)
        return out


def empty(name: str = "empty") -> SimplicialSet:
    return SimplicialSet([], {}, name=name)


def from_simplex_functor(simplices: Callable, face: Callable, degen: Callable, max_dim: int,
                         bound: Optional[int] = None, name: str = "") -> SimplicialSet:
    """Build the EZ table of a simplicial set presented by all its simplices.

    ``simplices(n)`` lists every ``n``-simplex (degenerate ones too) as a
    hashable value; ``face(v, i)`` and ``degen(v, i)`` implement the
    structure maps.  Values are used as cell keys, so they must be distinct
    across dimensions.
    """
    memo = {}

    def normalize(v, n):
        hit = memo.get(v)
        if hit is not None:
            return hit
        out = None
        for i in range(n):
            f = face(v, i)
            if degen(f, i) == v:
                e, c = normalize(f, n - 1)
                out = (ops.compose(e, ops.degeneracy(i, n - 1)), c)
                break
        if out is None:
            out = (ops.identity(n), v)
        memo[v] = out
        return out

    cells, faces = [], {}
    for n in range(max_dim + 1):
        row = []
        for v in simplices(n):
            e, c = normalize(v, n)
            if ops.is_identity(e):
                row.append(v)
                faces[v] = tuple(normalize(face(v, i), n - 1) for i in range(n + 1)) if n else ()
        cells.append(row)
    X = SimplicialSet(cells, faces, bound=max_dim if bound is None else bound, name=name)
    X.normalize = normalize
    return X


class SimplicialMap:
    """A map of simplicial sets given on nondegenerate cells."""

    def __init__(self, source: SimplicialSet, target: SimplicialSet, assignment: dict, name: str = ""):
        self.source = source
        self.target = target
        self.assignment = dict(assignment)
        self.name = name

    def __repr__(self):
        return f"SimplicialMap({self.name or '?'}: {self.source.name} -> {self.target.name})"

    def __call__(self, key):
        return self.assignment[key]

    def apply(self, s: Simplex) -> Simplex:
        e, c = s
        return self.target.act(self.assignment[c], e)

    def check(self) -> list[str]:
        problems = []
        for c, n in self.source.dim_of.items():
            if c not in self.assignment:
                problems.append(f"no image for {c!r}")
                continue
            img = self.assignment[c]
            if SimplicialSet.dim(img) != n or img[1] not in self.target:
                problems.append(f"image of {c!r} is not an {n}-simplex of the target")
                continue
            for i in range(n + 1 if n else 0):
                if self.apply(self.source.faces[c][i]) != self.target.act(img, ops.face(i, n)):
                    problems.append(f"face {i} of {c!r} not preserved")
        return problems

    def then(self, other: "SimplicialMap", name: str = "") -> "SimplicialMap":
        """``other . self``."""
        return SimplicialMap(self.source, other.target,
                             {c: other.apply(s) for c, s in self.assignment.items()}, name=name)

    def is_injective(self) -> bool:
        seen = set()
        for s in self.assignment.values():
            if not ops.is_identity(s[0]) or s[1] in seen:
                return False
            seen.add(s[1])
        return True

    def is_isomorphism(self) -> bool:
        return self.is_injective() and len(self.assignment) == len(self.target)

    def image_cells(self) -> set:
        return {s[1] for s in self.assignment.values() if ops.is_identity(s[0])}


def identity_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, {c: X.cell(c) for c in X.dim_of}, name=f"id {X.name}")


def inclusion(sub: SimplicialSet, X: SimplicialSet, name: str = "") -> SimplicialMap:
    return SimplicialMap(sub, X, {c: X.cell(c) for c in sub.dim_of}, name=name)


def enumerate_maps(X: SimplicialSet, Y: SimplicialSet, fixed: Optional[dict] = None,
                   over: Optional[tuple] = None, order: Optional[list] = None, given: Optional[dict] = None):
    """Generate every map ``X -> Y`` agreeing with ``fixed``.

    ``over=(p, b)`` restricts to maps ``f`` with ``p . f == b`` where
    ``p : Y -> B`` and ``b : X -> B``.  Cells are visited in ``order``
    (default: closure order), so the first map produced is the first hit of
    a depth-first search in canonical order.  Each yielded dict is fresh.
    Cells in ``given`` are trusted as already assigned and never revisited.
    """
    fixed = dict(fixed or {})
    order = list(order or X.closure_order())
    if given:
        order = [c for c in order if c not in given]
    if X.top_dim >= 0:
        Y.known(X.top_dim)
    p, b = over if over is not None else (None, None)
    assign = dict(given or {})

    def cands(c):
        n = X.dim_of[c]
        if n == 0:
            pool = Y.simplices(0)
        else:
            key = tuple(Y.act(assign[k], e) for e, k in X.faces[c])
            pool = Y.index(n).get(key, ())
        if c in fixed:
            pool = [fixed[c]] if fixed[c] in pool else []
        if p is not None:
            want = b.assignment[c]
            pool = [y for y in pool if p.apply(y) == want]
        return pool

    if not order:
        yield dict(assign)
        return
    stack = [iter(cands(order[0]))]
    while stack:
        depth = len(stack) - 1
        c = order[depth]
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            assign.pop(c, None)
            continue
        assign[c] = nxt
        if depth + 1 == len(order):
            yield dict(assign)
        else:
            stack.append(iter(cands(order[depth + 1])))


def first_map(X, Y, fixed=None, over=None, order=None, given=None) -> Optional[dict]:
    return next(enumerate_maps(X, Y, fixed=fixed, over=over, order=order, given=given), None)
