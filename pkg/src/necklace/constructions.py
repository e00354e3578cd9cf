"""Standard simplicial sets and the basic constructions on them."""
from __future__ import annotations

from itertools import product as iproduct
from typing import Callable, Optional

from . import operators as ops
from .sset import SimplicialMap, SimplicialSet, Simplex


# -- nerves of finite posets ------------------------------------------------

def chain_simplex(seq) -> Simplex:
    """EZ form of a weakly increasing sequence in a poset nerve."""
    seq = tuple(seq)
    eta, chain = [0], [seq[0]]
    for v in seq[1:]:
        if v != chain[-1]:
            chain.append(v)
        eta.append(len(chain) - 1)
    return tuple(eta), tuple(chain)


def poset_nerve(elements: list, leq: Callable, name: str = "", max_dim: Optional[int] = None) -> SimplicialSet:
    """Nerve of a finite poset whose ``elements`` are listed along a linear
    extension.  Cells are strictly increasing chains, stored as tuples."""
    elements = list(elements)
    ups = {a: [b for b in elements if b != a and leq(a, b)] for a in elements}
    cells = [[]]
    for a in elements:
        cells[0].append((a,))
    n = 0
    while cells[n] and (max_dim is None or n < max_dim):
        row = [c + (b,) for c in cells[n] for b in ups[c[-1]]]
        if not row:
            break
        cells.append(row)
        n += 1
    faces = {}
    for row in cells:
        for c in row:
            if len(c) > 1:
                faces[c] = tuple((ops.identity(len(c) - 2), c[:i] + c[i + 1:]) for i in range(len(c)))
            else:
                faces[c] = ()
    return SimplicialSet(cells, faces, bound=max_dim, name=name)


def standard(n: int) -> SimplicialSet:
    if n < 0:
        return SimplicialSet([], {}, name="empty")
    return poset_nerve(list(range(n + 1)), lambda a, b: a <= b, name=f"D{n}")


def operator_simplex(op) -> Simplex:
    """The simplex of a standard simplex named by an operator into it."""
    return chain_simplex(op)


def boundary(n: int) -> SimplicialSet:
    D = standard(n)
    top = tuple(range(n + 1))
    return D.where(lambda c: c != top, name=f"bdD{n}")


def horn(n: int, k: int) -> SimplicialSet:
    if not 0 <= k <= n:
        raise ValueError("horn index out of range")
    D = standard(n)
    top = tuple(range(n + 1))
    missing = top[:k] + top[k + 1:]
    return D.where(lambda c: c != top and c != missing, name=f"L{n},{k}")


def spine(n: int) -> SimplicialSet:
    D = standard(n)
    return D.where(lambda c: len(c) == 1 or (len(c) == 2 and c[1] == c[0] + 1), name=f"spine{n}")


def _cube_order(a, b):
    return all(x <= y for x, y in zip(a, b))


def cube(k: int) -> SimplicialSet:
    """``(D1)^k`` as the nerve of the poset ``{0,1}^k``.  A cell is a chain of
    0/1 vectors; coordinate ``i`` of a chain is the operator ``rho_i``."""
    pts = sorted(iproduct((0, 1), repeat=k))
    return poset_nerve(pts, _cube_order, name=f"cube{k}")


def _coord_const(chain, i, val=None):
    vals = {v[i] for v in chain}
    return len(vals) == 1 and (val is None or val in vals)


def cube_boundary(k: int) -> SimplicialSet:
    C = cube(k)
    return C.where(lambda c: any(_coord_const(c, i) for i in range(k)), name=f"bdcube{k}")


def cube_horn(k: int, j: int, e: int) -> SimplicialSet:
    """Cells with some coordinate ``i != j`` constant, or coordinate ``j``
    constant at ``e`` (coordinates numbered from 1)."""
    if not 1 <= j <= k or e not in (0, 1):
        raise ValueError("bad cubical horn index")
    C = cube(k)
    return C.where(lambda c: any(_coord_const(c, i) for i in range(k) if i != j - 1)
                   or _coord_const(c, j - 1, e), name=f"hcube{k},{j},{e}")


# -- products, coproducts, pullbacks -----------------------------------------

class ProductSet(SimplicialSet):
    """Product of two simplicial sets.  Cells are jointly nondegenerate pairs
    ``(x, y)`` of simplices of the factors."""

    def __init__(self, X: SimplicialSet, Y: SimplicialSet, name: str = ""):
        self.left, self.right = X, Y
        bounds = [b for b in (X.bound, Y.bound) if b is not None]
        bound = min(bounds) if bounds else None
        if X.top_dim < 0 or Y.top_dim < 0:
            top = -1
        elif bound is None:
            top = X.top_dim + Y.top_dim
        else:
            top = min(bound, (X.top_dim if X.bound is None else bound) + (Y.top_dim if Y.bound is None else bound))
        cells, faces = [], {}
        for n in range(top + 1):
            row = []
            for k1 in range(min(n, X.top_dim) + 1):
                for k2 in range(min(n, Y.top_dim) + 1):
                    if k1 + k2 < n:
                        continue
                    for c1 in X.cells[k1]:
                        for c2 in Y.cells[k2]:
                            for e1 in ops.epis(n, k1):
                                for e2 in ops.epis(n, k2):
                                    if all((e1[i], e2[i]) != (e1[i + 1], e2[i + 1]) for i in range(n)):
                                        row.append(((e1, c1), (e2, c2)))
            row.sort(key=lambda p: (X.order[p[0][1]], Y.order[p[1][1]], p[0][0], p[1][0]))
            cells.append(row)
        for row in cells:
            for key in row:
                x, y = key
                n = len(x[0]) - 1
                faces[key] = tuple(self.pair(X.act(x, ops.face(i, n)), Y.act(y, ops.face(i, n)))
                                   for i in range(n + 1)) if n else ()
        super().__init__(cells, faces, bound=bound, name=name or f"({X.name} x {Y.name})")

    @staticmethod
    def pair(x: Simplex, y: Simplex) -> Simplex:
        eta, (r1, r2) = ops.collapse_common([x[0], y[0]])
        return (eta, ((r1, x[1]), (r2, y[1])))

    def split(self, s: Simplex) -> tuple:
        """The two components of a simplex of the product."""
        e, (x, y) = s
        return (self.left.act(x, e), self.right.act(y, e))

    def projections(self):
        p = SimplicialMap(self, self.left, {c: c[0] for c in self.dim_of}, name="pr1")
        q = SimplicialMap(self, self.right, {c: c[1] for c in self.dim_of}, name="pr2")
        return p, q


def product(X: SimplicialSet, Y: SimplicialSet, name: str = "") -> ProductSet:
    return ProductSet(X, Y, name=name)


def product_map(f: SimplicialMap, g: SimplicialMap, source: ProductSet = None, target: ProductSet = None) -> SimplicialMap:
    source = source or product(f.source, g.source)
    target = target or product(f.target, g.target)
    return SimplicialMap(source, target,
                         {c: target.pair(f.apply(c[0]), g.apply(c[1])) for c in source.dim_of},
                         name=f"({f.name} x {g.name})")


def pairing(P: ProductSet, f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """The map into a product with components ``f`` and ``g``."""
    return SimplicialMap(f.source, P, {c: P.pair(f.assignment[c], g.assignment[c]) for c in f.source.dim_of})


def pullback(f: SimplicialMap, g: SimplicialMap, name: str = ""):
    """Strict pullback of ``f : A -> B`` and ``g : E -> B``.  Returns the set
    (a subcomplex of ``A x E``) and its two projections."""
    P = product(f.source, g.source)
    keep = [c for c in P.all_cells() if f.apply(c[0]) == g.apply(c[1])]
    sub = P.subcomplex(keep, name=name or "pullback")
    sub.left, sub.right, sub.pair, sub.split = P.left, P.right, P.pair, P.split
    p = SimplicialMap(sub, f.source, {c: c[0] for c in sub.dim_of}, name="pr1")
    q = SimplicialMap(sub, g.source, {c: c[1] for c in sub.dim_of}, name="pr2")
    return sub, p, q


def coproduct(*Xs: SimplicialSet, name: str = "") -> SimplicialSet:
    """Disjoint union; cells are tagged ``(i, key)``."""
    top = max((X.top_dim for X in Xs), default=-1)
    cells = [[(i, c) for i, X in enumerate(Xs) for c in (X.cells[n] if n <= X.top_dim else [])]
             for n in range(top + 1)]
    faces = {(i, c): tuple((e, (i, k)) for e, k in X.faces[c]) for i, X in enumerate(Xs) for c in X.dim_of}
    bounds = [X.bound for X in Xs if X.bound is not None]
    return SimplicialSet(cells, faces, bound=min(bounds) if bounds else None, name=name or "+".join(X.name for X in Xs))


# -- joins, quotients, suspensions ------------------------------------------

def join_with_point(X: SimplicialSet, apex="top", name: str = "") -> SimplicialSet:
    """``X * D0``.  Cells of ``X`` become ``('x', c)``; each cell ``c`` gets a
    cone cell ``('c', c)`` one dimension up; ``apex`` is the new vertex."""
    if X.bound is not None:
        raise ValueError("join needs a complete set")
    cells = [[] for _ in range(X.top_dim + 2)] if X.top_dim >= 0 else [[]]
    faces = {apex: ()}
    cells[0].append(apex)
    for n, row in enumerate(X.cells):
        for c in row:
            cells[n].append(("x", c))
            faces[("x", c)] = tuple((e, ("x", k)) for e, k in X.faces[c])
    for n, row in enumerate(X.cells):
        for c in row:
            cells[n + 1].append(("c", c))
            fs = []
            for i in range(n + 1):
                if n == 0:
                    fs.append(((0,), apex))
                else:
                    fs.append(cone_simplex(X.faces[c][i], 0))
            fs.append((ops.identity(n), ("x", c)))
            faces[("c", c)] = tuple(fs)
    # cones listed after base cells within each dimension
    cells = [sorted(r, key=lambda k: (k == apex, k[0] == "c" if isinstance(k, tuple) else 0)) for r in cells]
    return SimplicialSet(cells, faces, name=name or f"({X.name} * D0)")


def cone_simplex(x: Simplex, q: int, apex="top") -> Simplex:
    """The simplex ``x * (q-simplex of D0)`` of ``X * D0`` in EZ form; ``x``
    may be ``None`` for the empty simplex."""
    if x is None:
        return (ops.const(0, q), apex)
    if q < 0:
        return (x[0], ("x", x[1]))
    e, c = x
    k = e[-1]
    return (tuple(e) + (k + 1,) * (q + 1), ("c", c))


def collapse(X: SimplicialSet, groups: list, name: str = ""):
    """Quotient collapsing each subcomplex ``groups[j] = (keys, point)`` to its
    own new vertex ``point``.  Returns the quotient and the quotient map."""
    where = {}
    for keys, pt in groups:
        for k in keys:
            where[k] = pt
    points = [pt for _, pt in groups]
    cells = [list(points)] + [[] for _ in range(max(X.top_dim, 0))]
    for n, row in enumerate(X.cells):
        for c in row:
            if c not in where:
                cells[n].append(c)
    faces = {pt: () for pt in points}

    def push(s):
        e, k = s
        return (ops.const(0, len(e) - 1), where[k]) if k in where else s

    for c in X.dim_of:
        if c not in where:
            faces[c] = tuple(push(f) for f in X.faces[c])
    Q = SimplicialSet(cells, faces, bound=X.bound, name=name)
    q = SimplicialMap(X, Q, {c: push(X.cell(c)) for c in X.dim_of}, name="quotient")
    return Q, q


def relabel(X: SimplicialSet, mapping: dict, name: str = "") -> SimplicialSet:
    r = lambda k: mapping.get(k, k)
    cells = [[r(c) for c in row] for row in X.cells]
    faces = {r(c): tuple((e, r(k)) for e, k in fs) for c, fs in X.faces.items()}
    return SimplicialSet(cells, faces, bound=X.bound, name=name or X.name)


def suspension(U: SimplicialSet):
    """``U x D1`` with both ends collapsed to the vertices ``'-'`` and ``'+'``.
    Returns the suspension and the quotient map from ``U x D1``."""
    P = product(U, standard(1))
    low = [c for c in P.all_cells() if c[1][1] == (0,)]
    high = [c for c in P.all_cells() if c[1][1] == (1,)]
    S, q = collapse(P, [(low, "-"), (high, "+")], name=f"S{U.name}")
    S.cylinder = P
    return S, q


def right_suspension(U: SimplicialSet):
    """``U * D0`` with ``U`` collapsed to ``'-'``; the apex is ``'+'``.
    Returns the set and the quotient map from the join."""
    J = join_with_point(U, apex="+")
    S, q = collapse(J, [([("x", c) for c in U.dim_of], "-")], name=f"Sr{U.name}")
    S.join = J
    return S, q


def opposite(X: SimplicialSet, name: str = "") -> SimplicialSet:
    """Same cells; the ``i``-th face is the old ``(n-i)``-th face."""
    faces = {}
    for c, fs in X.faces.items():
        n = X.dim_of[c]
        faces[c] = tuple((ops.dual(e, e[-1]), k) for e, k in reversed(fs)) if n else ()
    return SimplicialSet(X.cells, faces, bound=X.bound, name=name or f"{X.name}op")


def opposite_simplex(s: Simplex) -> Simplex:
    e, k = s
    return (ops.dual(e, e[-1]), k)


def opposite_map(f: SimplicialMap, source=None, target=None) -> SimplicialMap:
    source = source or opposite(f.source)
    target = target or opposite(f.target)
    return SimplicialMap(source, target, {c: opposite_simplex(s) for c, s in f.assignment.items()})


def standard_map(op, m: int, n: int, source=None, target=None) -> SimplicialMap:
    """The map ``Dm -> Dn`` induced by an operator."""
    source = source or standard(m)
    target = target or standard(n)
    return SimplicialMap(source, target, {c: chain_simplex([op[v] for v in c]) for c in source.dim_of})


def map_from_vertices(X: SimplicialSet, Y: SimplicialSet, fn: Callable) -> SimplicialMap:
    """A map between poset nerves determined by a monotone vertex function."""
    return SimplicialMap(X, Y, {c: chain_simplex([fn(v) for v in c]) for c in X.dim_of})


def isomorphic_via(f: SimplicialMap) -> list[str]:
    """Problems preventing ``f`` from being an isomorphism (empty if it is)."""
    problems = f.check()
    if problems:
        return problems
    if not f.is_injective():
        problems.append("not injective on nondegenerate cells")
    if len(f.image_cells()) != len(f.target):
        problems.append("not surjective on nondegenerate cells")
    return problems
