"""Simplicial sets whose simplices are maps out of prisms ``X x Dn``.

Exponentials ``Y^X`` and commas are both of this kind; the helpers here
enumerate such maps and transport them along simplicial operators.
"""
from __future__ import annotations

from . import operators as ops
from .constructions import ProductSet, chain_simplex, product, standard
from .sset import BoundExceeded, SimplicialSet, enumerate_maps, from_simplex_functor


class ExponentialOverflow(BoundExceeded):
    """The requested exponential has more simplices than the cap allows."""


class Prisms:
    """The products ``X x Dn`` with cells in canonical order, and the maps
    between them induced by operators on the second factor."""

    def __init__(self, X: SimplicialSet):
        self.X = X
        self._p = {}
        self._pull = {}

    def __call__(self, n: int) -> ProductSet:
        P = self._p.get(n)
        if P is None:
            P = product(self.X, standard(n), name=f"{self.X.name}xD{n}")
            P.cell_list = P.closure_order()
            P.position = {c: i for i, c in enumerate(P.cell_list)}
            self._p[n] = P
        return P

    def pull(self, alpha, m: int, n: int):
        """For each cell of ``X x Dm`` its image in ``X x Dn`` under ``id x alpha``."""
        key = (tuple(alpha), m, n)
        hit = self._pull.get(key)
        if hit is None:
            Pm, Pn = self(m), self(n)
            hit = []
            for c in Pm.cell_list:
                x, (e, chain) = c
                seq = [alpha[chain[i]] for i in e]
                hit.append(Pn.pair(x, chain_simplex(seq)))
            self._pull[key] = hit
        return hit

    def precompose(self, Y: SimplicialSet, f: tuple, alpha, m: int, n: int) -> tuple:
        """``f . (id x alpha)`` for a map ``f`` given as a tuple over ``X x Dn``."""
        Pn = self(n)
        out = []
        for eta, key in self.pull(alpha, m, n):
            out.append(Y.act(f[Pn.position[key]], eta))
        return tuple(out)

    def maps(self, Y: SimplicialSet, n: int, fixed=None, over=None):
        P = self(n)
        for a in enumerate_maps(P, Y, fixed=fixed, over=over, order=P.cell_list):
            yield tuple(a[c] for c in P.cell_list)


def prism_set(X: SimplicialSet, Y: SimplicialSet, D: int, simplices_fn, name: str, cap: int,
              prisms: Prisms = None) -> SimplicialSet:
    """Simplicial set whose ``n``-simplices are the tuples produced by
    ``simplices_fn(n)`` (maps ``X x Dn -> Y`` possibly with decorations)."""
    prisms = prisms or Prisms(X)
    count = [0]

    def simplices(n):
        out = []
        for v in simplices_fn(n):
            out.append((n, v))
            count[0] += 1
            if count[0] > cap:
                raise ExponentialOverflow(f"{name} exceeds {cap} simplices by dimension {n}")
        return out

    def face(v, i):
        n, f = v
        return (n - 1, prisms.precompose(Y, f, ops.face(i, n), n - 1, n))

    def degen(v, i):
        n, f = v
        return (n + 1, prisms.precompose(Y, f, ops.degeneracy(i, n), n + 1, n))

    return from_simplex_functor(simplices, face, degen, D, name=name)


def bounded_exponential(X: SimplicialSet, Y: SimplicialSet, D: int = 2, cap: int = 200_000) -> SimplicialSet:
    """``Y^X`` through dimension ``D``; ``n``-cells are maps ``X x Dn -> Y``
    stored as ``(n, images)`` with images listed over the cells of the prism
    in closure order."""
    if X.bound is not None:
        raise ValueError("exponent must be a complete finite set")
    prisms = Prisms(X)
    if X.top_dim >= 0:
        Y.known(X.top_dim + D)
    return prism_set(X, Y, D, lambda n: prisms.maps(Y, n), f"{Y.name}^{X.name}", cap, prisms)


def evaluate(prisms: Prisms, Y: SimplicialSet, f: tuple, n: int, s):
    """Value of ``f : X x Dn -> Y`` on a simplex ``s`` of ``X x Dn``."""
    P = prisms(n)
    eta, key = s
    return Y.act(f[P.position[key]], eta)
