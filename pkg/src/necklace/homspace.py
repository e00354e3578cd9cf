"""Hom-spaces of quasi-categories and the maps comparing their models.

* :func:`comma` -- ``f | g``, simplices ``(c, b, h)`` with ``h`` a map
  ``Dn x D1 -> A`` from ``f b`` to ``g c``; the hom-space ``a | b`` is the
  case of two points.
* :func:`right_hom` -- ``(n+1)``-simplices ending at ``b`` whose face
  opposite the last vertex is degenerate at ``a``.
* :func:`left_hom` -- the dual construction.
"""
from __future__ import annotations

from . import operators as ops
from .constructions import chain_simplex, opposite, product, standard
from .exponential import Prisms
from .hcat import components, homotopy_category
from .nerve import CoherentNerve, pairs, _cube
from .sset import SimplicialMap, SimplicialSet, from_simplex_functor


def _point_map(A: SimplicialSet, a) -> SimplicialMap:
    P = standard(0)
    return SimplicialMap(P, A, {(0,): ((0,), a)}, name=str(a))


class Comma:
    """``f | g`` for ``f : B -> A`` and ``g : C -> A`` through dimension ``D``."""

    def __init__(self, f: SimplicialMap, g: SimplicialMap, D: int = 2):
        self.f, self.g = f, g
        self.A = A = f.target
        self.B, self.C = f.source, g.source
        A.known(D + 1)
        self.prisms = pr = Prisms(standard(1))
        self.D = D

        def simplices(n):
            P = pr(n)
            out = []
            for b in self.B.simplices(n):
                fb = f.apply(b)
                for c in self.C.simplices(n):
                    gc = g.apply(c)
                    fixed = {}
                    for cell in P.cell_list:
                        (e1, v1), (e2, ch) = cell
                        if len(v1) == 1:
                            op = tuple(ch[t] for t in e2)
                            fixed[cell] = A.act(fb if v1 == (0,) else gc, op)
                    for h in pr.maps(A, n, fixed=fixed):
                        out.append((n, b, c, h))
            return out

        def face(v, i):
            n, b, c, h = v
            op = ops.face(i, n)
            return (n - 1, self.B.act(b, op), self.C.act(c, op), pr.precompose(A, h, op, n - 1, n))

        def degen(v, i):
            n, b, c, h = v
            op = ops.degeneracy(i, n)
            return (n + 1, self.B.act(b, op), self.C.act(c, op), pr.precompose(A, h, op, n + 1, n))

        self.sset = from_simplex_functor(simplices, face, degen, D, name=f"({f.name} | {g.name})")

    def value(self, s):
        """Data ``(n, b, c, h)`` of an EZ simplex."""
        e, key = s
        n = len(e) - 1
        _, b, c, h = key
        m = key[0]
        return (n, self.B.act(b, e), self.C.act(c, e), self.prisms.precompose(self.A, h, e, n, m))

    def projections(self):
        X = self.sset
        p0 = SimplicialMap(X, self.B, {k: k[1] for k in X.dim_of}, name="p0")
        p1 = SimplicialMap(X, self.C, {k: k[2] for k in X.dim_of}, name="p1")
        return p0, p1

    def evaluate(self, s, tau):
        """The canonical 2-cell: a simplex ``s`` of the comma and an operator
        ``tau`` into ``[1]`` of the same dimension give a simplex of ``A``."""
        n, b, c, h = self.value(s)
        P = self.prisms(n)
        eta, key = P.pair(chain_simplex(tau), (ops.identity(n), tuple(range(n + 1))))
        return self.A.act(h[P.position[key]], eta)

    def arrow_of_vertex(self, key):
        """The edge of ``A`` underlying a vertex of the comma."""
        return self.evaluate(self.sset.act(self.sset.cell(key), (0, 0)), (0, 1))


def comma(f: SimplicialMap, g: SimplicialMap, D: int = 2) -> Comma:
    return Comma(f, g, D)


def hom(A: SimplicialSet, a, b, D: int = 2) -> Comma:
    """The hom-space ``a | b``; its vertices are the edges ``a -> b``."""
    return Comma(_point_map(A, a), _point_map(A, b), D)


def right_hom(A: SimplicialSet, a, b, D: int = 2) -> SimplicialSet:
    A.known(D + 1)
    const_a = lambda n: (ops.const(0, n), a)

    def simplices(n):
        out = []
        for x in A.simplices(n + 1):
            if A.act(x, (n + 1,))[1] == b and A.act(x, ops.face(n + 1, n + 1)) == const_a(n):
                out.append((n, x))
        return out

    face = lambda v, i: (v[0] - 1, A.act(v[1], ops.face(i, v[0] + 1)))
    degen = lambda v, i: (v[0] + 1, A.act(v[1], ops.degeneracy(i, v[0] + 1)))
    return from_simplex_functor(simplices, face, degen, D, name=f"HomR({a},{b})")


def left_hom(A: SimplicialSet, a, b, D: int = 2) -> SimplicialSet:
    R = right_hom(opposite(A), b, a, D)
    X = opposite(R, name=f"HomL({a},{b})")
    return X


def u_op(n: int, tau, alpha) -> tuple:
    """``u : [n] x [1] -> [n+1]`` applied to a simplex ``(alpha, tau)``."""
    return tuple(alpha[t] if tau[t] == 0 else n + 1 for t in range(len(tau)))


def u_comparison(A: SimplicialSet, a, b, D: int = 2, R: SimplicialSet = None, H: Comma = None) -> SimplicialMap:
    """``HomR(a, b) -> a | b``: precompose an ``(n+1)``-simplex with ``u``."""
    R = R or right_hom(A, a, b, D)
    H = H or hom(A, a, b, D)
    assignment = {}
    for key in R.all_cells():
        n, x = key
        P = H.prisms(n)
        h = []
        for cell in P.cell_list:
            (e1, c1), (e2, c2) = cell
            tau = [c1[i] for i in e1]
            alpha = [c2[i] for i in e2]
            h.append(A.act(x, u_op(n, tau, alpha)))
        v = (n, (ops.const(0, n), (0,)), (ops.const(0, n), (0,)), tuple(h))
        assignment[key] = H.sset.normalize(v, n)
    return SimplicialMap(R, H.sset, assignment, name="u")


def fun_to_rhom(N: CoherentNerve, a, b, D: int = 2, R: SimplicialSet = None) -> SimplicialMap:
    """``Fun(a, b) -> HomR(a, b)`` of the coherent nerve: an ``n``-simplex
    ``x`` goes to the ``(n+1)``-simplex whose cube over ``(i, n+1)`` sends a
    subset ``T`` to ``x`` restricted along ``max(T - {n+1})``."""
    C = N.C
    X = C.hom(a, b).skeleton(D) if C.hom(a, b).bound is not None else C.hom(a, b)
    R = R or right_hom(N.sset, a, b, D)
    assignment = {}
    for key in X.all_cells():
        n = X.dim_of[key]
        x = X.cell(key)
        objs = (a,) * (n + 1) + (b,)
        cubes = []
        for i, j in pairs(n + 1):
            K = _cube(j - i - 1)
            imgs = []
            for chain in K.cell_list:
                r = len(chain) - 1
                if j <= n:
                    imgs.append(C.identity_simplex(a, r))
                else:
                    op = tuple(max([i] + [i + 1 + t for t, bit in enumerate(v) if bit and i + 1 + t <= n]) for v in chain)
                    imgs.append(C.hom(a, b).act(x, op))
            cubes.append(tuple(imgs))
        data = (objs, tuple(cubes))
        s = N.sset.normalize(data, n + 1)
        assignment[key] = R.normalize((n, s), n)
    return SimplicialMap(X, R, assignment, name="Fun->HomR")


def pi0(X: SimplicialSet) -> list:
    return components(X)


def all_edges_invertible(X: SimplicialSet) -> bool:
    H = homotopy_category(X)
    return all(H.is_invertible(m) for m in H.ends)


def u_vertex(n: int, i: int, e: int) -> int:
    return i if e == 0 else n + 1


def u_prism(n: int) -> SimplicialMap:
    """``u : Dn x D1 -> D(n+1)`` as a map of simplicial sets."""
    P = product(standard(n), standard(1))
    a = {}
    for c in P.dim_of:
        (e1, c1), (e2, c2) = c
        a[c] = chain_simplex([u_vertex(n, c1[e1[t]], c2[e2[t]]) for t in range(len(e1))])
    return SimplicialMap(P, standard(n + 1), a, name=f"u{n}")


def is_epimorphism(f: SimplicialMap) -> bool:
    """Every nondegenerate cell of the target is hit."""
    return f.image_cells() == set(f.target.dim_of)


def pi0_map_is_bijection(f: SimplicialMap) -> bool:
    src, tgt = components(f.source), components(f.target)
    where = {v: i for i, comp in enumerate(tgt) for v in comp}
    images = {where[f.apply(f.source.cell(comp[0]))[1]] for comp in src}
    consistent = all(len({where[f.apply(f.source.cell(v))[1]] for v in comp}) == 1 for comp in src)
    return consistent and len(images) == len(src) == len(tgt)


def homotopy_discrete(X: SimplicialSet, expected_pi0: int) -> dict:
    n = len(components(X))
    inv = all_edges_invertible(X) if X.cells_of(0) else True
    return {"pi0": n, "expected": expected_pi0, "edges_invertible": inv, "ok": n == expected_pi0 and inv}
