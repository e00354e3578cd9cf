"""Homotopy coherent simplices and the realization of simplicial sets as
simplicial computads.

An ``r``-arrow ``k -> l`` of the coherent ``n``-simplex is a flag
``T0 <= T1 <= ... <= Tr`` of subsets of ``[k, l]`` each containing ``k``
and ``l``; composition is pointwise union.  Atomic arrows are those with
``T0 == {k, l}``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from . import operators as ops
from .computad import Atom, Computad, ComputadFunctor, Word
from .constructions import (chain_simplex, collapse, cone_simplex, cube, join_with_point, map_from_vertices,
                            poset_nerve, product, right_suspension, standard, suspension)
from .sset import SimplicialMap, SimplicialSet


class Flag(NamedTuple):
    lo: int
    hi: int
    sets: tuple

    @property
    def dim(self) -> int:
        return len(self.sets) - 1

    def blocks(self) -> list:
        out = [self.sets[0]]
        for a, b in zip(self.sets, self.sets[1:]):
            out.append(tuple(sorted(set(b) - set(a))))
        return out

    def __str__(self):
        return format_flag(self)


def make_flag(sets) -> Flag:
    sets = tuple(tuple(sorted(set(S))) for S in sets)
    lo, hi = sets[0][0], sets[0][-1]
    f = Flag(lo, hi, sets)
    check_flag(f)
    return f


def check_flag(f: Flag):
    prev = None
    for S in f.sets:
        if f.lo not in S or f.hi not in S or S[0] < f.lo or S[-1] > f.hi:
            raise ValueError(f"{S} is not a subset of [{f.lo},{f.hi}] containing both ends")
        if prev is not None and not set(prev) <= set(S):
            raise ValueError("sets of a flag must increase")
        prev = S


def from_blocks(blocks) -> Flag:
    sets, acc = [], set()
    for b in blocks:
        if acc & set(b):
            raise ValueError("blocks of a flag must be disjoint")
        acc |= set(b)
        sets.append(tuple(sorted(acc)))
    return make_flag(sets)


def parse_flag(text: str) -> Flag:
    """Read compact notation such as ``<0,3,5|4||1,2>`` (angle brackets may be
    ASCII or the mathematical ones)."""
    t = text.strip()
    for a, b in (("<", ">"), ("⟨", "⟩")):
        if t.startswith(a) and t.endswith(b):
            t = t[1:-1]
    blocks = [tuple(int(v) for v in part.split(",") if v.strip()) for part in t.split("|")]
    if not blocks[0]:
        raise ValueError("first block of a flag must be nonempty")
    return from_blocks(blocks)


def format_flag(f: Flag, ascii: bool = True) -> str:
    a, b = ("<", ">") if ascii else ("⟨", "⟩")
    return a + "|".join(",".join(map(str, blk)) for blk in f.blocks()) + b


def identity_flag(k: int, r: int = 0) -> Flag:
    return Flag(k, k, ((k,),) * (r + 1))


def flag_act(f: Flag, op) -> Flag:
    """Operator action: ``(T . a)^i = T^{a(i)}``."""
    return Flag(f.lo, f.hi, tuple(f.sets[a] for a in op))


def flag_image(f: Flag, beta) -> Flag:
    """Image under the functor induced by ``beta : [m] -> [n]``."""
    return Flag(beta[f.lo], beta[f.hi], tuple(tuple(sorted({beta[t] for t in S})) for S in f.sets))


def flag_compose(f: Flag, g: Flag) -> Flag:
    """``f`` then ``g``: pointwise union."""
    if f.hi != g.lo or f.dim != g.dim:
        raise ValueError("flags are not composable")
    return Flag(f.lo, g.hi, tuple(tuple(sorted(set(a) | set(b))) for a, b in zip(f.sets, g.sets)))


def is_atomic(f: Flag) -> bool:
    return f.lo < f.hi and f.sets[0] == (f.lo, f.hi)


def is_nondegenerate(f: Flag) -> bool:
    return all(a != b for a, b in zip(f.sets, f.sets[1:]))


def normalize_flag(f: Flag):
    """``(eta, g)`` with ``f == g . eta`` and ``g`` nondegenerate."""
    eta, chain = chain_simplex(f.sets)
    return eta, Flag(f.lo, f.hi, chain)


def decompose(f: Flag) -> list:
    """The unique factorization into atomic flags (empty for identities)."""
    pts = f.sets[0]
    out = []
    for a, b in zip(pts, pts[1:]):
        out.append(Flag(a, b, tuple(tuple(t for t in S if a <= t <= b) for S in f.sets)))
    return out


def whisker(left: Flag, right: Flag) -> Flag:
    """Compose a 0-arrow (or any arrow) with an arrow of possibly higher
    dimension by degenerating the lower-dimensional one."""
    r = max(left.dim, right.dim)
    l2 = flag_act(left, ops.const(0, r)) if left.dim < r else left
    r2 = flag_act(right, ops.const(0, r)) if right.dim < r else right
    return flag_compose(l2, r2)


def ordered_partitions(items) -> list:
    items = tuple(items)
    if not items:
        return [()]
    out = []
    first, rest = items[0], items[1:]
    for p in ordered_partitions(rest):
        for i in range(len(p) + 1):
            out.append(p[:i] + ((first,),) + p[i:])
        for i in range(len(p)):
            out.append(p[:i] + (tuple(sorted((first,) + p[i])),) + p[i + 1:])
    return sorted(set(out))


@lru_cache(maxsize=None)
def bead_shapes(n: int) -> tuple:
    """Nondegenerate atomic arrows ``0 -> n`` whose last set is ``[0, n]``."""
    if n < 1:
        return ()
    if n == 1:
        return (Flag(0, 1, ((0, 1),)),)
    shapes = [from_blocks(((0, n),) + p) for p in ordered_partitions(range(1, n))]
    return tuple(sorted(shapes, key=lambda f: (f.dim, f.blocks())))


def atomic_flags(k: int, l: int) -> list:
    """All nondegenerate atomic arrows ``k -> l``."""
    interior = range(k + 1, l)
    out = []
    for size in range(len(interior) + 1):
        for S in combinations(interior, size):
            for p in ordered_partitions(S) if S else [()]:
                out.append(from_blocks(((k, l),) + p))
    return sorted(out, key=lambda f: (f.dim, f.blocks()))


# -- the coherent simplex as a computad, and its function complexes ----------

def flag_word(C: Computad, f: Flag) -> Word:
    """The word of a flag in :func:`simplex_computad`."""
    letters = []
    for piece in decompose(f):
        eta, g = normalize_flag(piece)
        letters.append((eta, g))
    return Word(f.lo, f.hi, f.dim, tuple(letters))


def word_flag(w: Word) -> Flag:
    """Inverse of :func:`flag_word` (atoms must be flags)."""
    if not w.letters:
        return identity_flag(w.src, w.dim)
    f = None
    for e, a in w.letters:
        g = flag_act(a, e)
        f = g if f is None else flag_compose(f, g)
    return f


@lru_cache(maxsize=None)
def simplex_computad(n: int) -> Computad:
    """The coherent ``n``-simplex presented by its nondegenerate atomic flags."""
    atoms = {}
    for k in range(n + 1):
        for l in range(k + 1, n + 1):
            for f in atomic_flags(k, l):
                atoms[f] = Atom(k, l, f.dim, ())
    C = Computad(list(range(n + 1)), atoms, name=f"C[D{n}]")
    for f, A in atoms.items():
        A.faces = tuple(flag_word(C, flag_act(f, ops.face(i, f.dim))) for i in range(f.dim + 1)) if f.dim else ()
    C._restrict.clear()
    return C


def subset_poset(k: int, l: int) -> list:
    inner = range(k + 1, l)
    subs = [tuple(sorted((k, l) + S)) if k != l else (k,) for size in range(len(inner) + 1)
            for S in combinations(inner, size)]
    return sorted(set(subs), key=lambda S: (len(S), S))


def hom_poset_nerve(k: int, l: int) -> SimplicialSet:
    """``Fun(k, l)`` of the coherent simplex built directly as the nerve of
    the poset of subsets of ``[k, l]`` containing both ends."""
    if k > l:
        return SimplicialSet([], {}, name=f"Fun({k},{l})")
    return poset_nerve(subset_poset(k, l), lambda a, b: set(a) <= set(b), name=f"Fun({k},{l})")


def indicator(S, k: int, l: int) -> tuple:
    s = set(S)
    return tuple(int(i in s) for i in range(k + 1, l))


def flag_cube_simplex(f: Flag):
    """The simplex of ``cube(l-k-1)`` corresponding to a flag ``k -> l``."""
    return chain_simplex([indicator(S, f.lo, f.hi) for S in f.sets])


def cube_iso(k: int, l: int, source: SimplicialSet = None, target: SimplicialSet = None) -> SimplicialMap:
    """``Fun(k, l) -> cube(l-k-1)``, sending a subset to its indicator vector."""
    source = source or hom_poset_nerve(k, l)
    target = target or cube(l - k - 1)
    return map_from_vertices(source, target, lambda S: indicator(S, k, l))


def insert_one(x: tuple, y: tuple) -> tuple:
    return tuple(x) + (1,) + tuple(y)


# -- realization --------------------------------------------------------------

class Realization(Computad):
    """The computad freely generated by the beads of a simplicial set.

    Atoms are pairs ``(cell, shape)`` with ``cell`` a nondegenerate
    ``n``-cell (``n >= 1``) and ``shape`` one of :func:`bead_shapes`.
    """

    def __init__(self, X: SimplicialSet, name: str = ""):
        if X.bound is not None:
            raise ValueError("realization needs a complete finite set")
        self.X = X
        self._neck = {}
        atoms = {}
        for n in range(1, X.top_dim + 1):
            for c in X.cells[n]:
                e0, v0 = X.restrict(c, (0,))
                e1, v1 = X.restrict(c, (n,))
                for T in bead_shapes(n):
                    atoms[(c, T)] = Atom(v0, v1, T.dim, ())
        super().__init__(X.cells[0] if X.cells else [], atoms, name=name or f"C[{X.name}]")
        for (c, T), A in atoms.items():
            if T.dim:
                A.faces = tuple(self.necklace(X.cell(c), flag_act(T, ops.face(i, T.dim))) for i in range(T.dim + 1))
        self._restrict.clear()

    def necklace(self, s, f: Flag) -> Word:
        """Image of the flag ``f`` under the functor induced by the simplex ``s``."""
        X = self.X
        letters = []
        for piece in decompose(f):
            letters.extend(self._atomic(s, piece))
        src = X.act(s, (f.lo,))[1]
        tgt = X.act(s, (f.hi,))[1]
        return Word(src, tgt, f.dim, tuple(letters))

    def _atomic(self, s, f: Flag) -> list:
        key = (s, f)
        hit = self._neck.get(key)
        if hit is not None:
            return hit
        X = self.X
        e, c = s
        if not ops.is_identity(e):
            g = flag_image(f, e)
            out = [] if g.lo == g.hi else self._atomic(X.cell(c), g)
        else:
            n = X.dim_of[c]
            V = f.sets[-1]
            if len(V) != n + 1:
                pos = {v: i for i, v in enumerate(V)}
                g = Flag(pos[f.lo], pos[f.hi], tuple(tuple(pos[t] for t in S) for S in f.sets))
                out = self._atomic(X.restrict(c, V), g)
            else:
                eta, shape = normalize_flag(f)
                out = [(eta, (c, shape))]
        self._neck[key] = out
        return out


def format_bead(atom) -> str:
    c, T = atom
    blocks = T.blocks()[1:]
    return f"<{c}; " + "|".join(",".join(map(str, b)) for b in blocks) + ">"


def realize(X: SimplicialSet, name: str = "") -> Realization:
    return Realization(X, name=name)


def realize_map(f: SimplicialMap, source: Realization = None, target: Realization = None) -> ComputadFunctor:
    source = source or realize(f.source)
    target = target or realize(f.target)
    objs = {v: f.apply(f.source.cell(v))[1] for v in source.objects}
    atoms = {(c, T): target.necklace(f.assignment[c], T) for (c, T) in source.atoms}
    return ComputadFunctor(source, target, objs, atoms, name=f"C[{f.name}]")


def standard_realization_iso(n: int, R: Realization = None) -> ComputadFunctor:
    """``C[Dn] -> simplex_computad(n)``: a bead ``(chain, shape)`` goes to the
    flag ``chain(shape)``."""
    R = R or realize(standard(n))
    S = simplex_computad(n)
    objs = {v: v[0] for v in R.objects}
    atoms = {(c, T): S.letter_word(flag_image(T, c)) for (c, T) in R.atoms}
    return ComputadFunctor(R, S, objs, atoms, name="standard")


def realized_subsimplex(X: SimplicialSet, n: int):
    """For ``X`` a subcomplex of ``Dn``: the realization of ``X`` and its
    functor into the coherent ``n``-simplex."""
    R = realize(X)
    S = simplex_computad(n)
    objs = {v: v[0] for v in R.objects}
    atoms = {(c, T): S.letter_word(flag_image(T, c)) for (c, T) in R.atoms}
    return R, ComputadFunctor(R, S, objs, atoms, name=f"C[{X.name}]")


def distinguished_complex(X: SimplicialSet, n: int, k: int, l: int, D: int = None):
    """Image of ``Fun(k, l)`` of the realization of ``X <= Dn`` inside
    ``cube(l-k-1)``, as a set of nondegenerate cube cells, together with a flag
    telling whether the comparison is injective."""
    R, F = realized_subsimplex(X, n)
    D = l - k - 1 if D is None else D
    cells, seen, injective = set(), {}, True
    vk, vl = (k,), (l,)
    if vk not in R.objects or vl not in R.objects:
        return cells, True
    for r in range(D + 1):
        for w in R.words(vk, vl, r):
            if not R.is_nondegenerate(w):
                continue
            f = word_flag(F.apply(w))
            eta, chain = flag_cube_simplex(f)
            if not ops.is_identity(eta):
                injective = False
            if chain in seen and seen[chain] != w:
                injective = False
            seen[chain] = w
            cells.add(chain)
    return cells, injective


# -- the computads 2[U] and 3[U] and the comparison functors ------------------

def two_cat(U: SimplicialSet, name: str = "") -> Computad:
    """Objects ``'-'`` and ``'+'``, with ``Fun(-, +) = U``."""
    atoms = {("u", c): Atom("-", "+", U.dim_of[c], tuple(Word("-", "+", U.dim_of[c] - 1, ((e, ("u", k)),))
                                                         for e, k in U.faces[c])) for c in U.all_cells()}
    C = Computad(["-", "+"], atoms, name=name or f"2[{U.name}]")
    C.U = U
    return C


def two_cat_word(U: SimplicialSet, s) -> Word:
    e, k = s
    return Word("-", "+", len(e) - 1, ((e, ("u", k)),))


def two_cat_map(f: SimplicialMap, source: Computad = None, target: Computad = None) -> ComputadFunctor:
    source = source or two_cat(f.source)
    target = target or two_cat(f.target)
    return ComputadFunctor(source, target, {"-": "-", "+": "+"},
                           {("u", c): two_cat_word(f.target, s) for c, s in f.assignment.items()})


class ThreeCat(Computad):
    """Objects ``'-'``, ``'+'``, ``'top'``: ``Fun(-, +) = U``, ``Fun(+, top)`` a
    point ``'i+'``, and ``Fun(-, top)`` the quotient of ``U x D1`` collapsing
    ``U x {0}`` to ``i-``; composing ``u`` with ``i+`` gives ``[u, 1]``."""

    def __init__(self, U: SimplicialSet, name: str = ""):
        self.U = U
        P = product(U, standard(1))
        low = [c for c in P.all_cells() if c[1][1] == (0,)]
        self.P = P
        self.Q, self.qmap = collapse(P, [(low, "i-")], name=f"{U.name}xD1/{U.name}x0")
        self.high = {c for c in P.all_cells() if c[1][1] == (1,)}
        atoms = {}
        for c in U.all_cells():
            atoms[("u", c)] = Atom("-", "+", U.dim_of[c], tuple(two_cat_word(U, f) for f in U.faces[c]))
        atoms["i+"] = Atom("+", "top", 0, ())
        for c in self.Q.all_cells():
            if c in self.high:
                continue
            atoms[("q", c)] = Atom("-", "top", self.Q.dim_of[c], tuple(self._qword(f) for f in self.Q.faces[c]))
        super().__init__(["-", "+", "top"], atoms, name=name or f"3[{U.name}]")

    def _qword(self, s) -> Word:
        e, k = s
        r = len(e) - 1
        if k in self.high:
            (eu, cu), _ = k
            return Word("-", "top", r, ((ops.compose(eu, e), ("u", cu)), (ops.const(0, r), "i+")))
        return Word("-", "top", r, ((e, ("q", k)),))

    def corner(self, x, tau) -> Word:
        """The arrow ``[x, tau]`` of ``Fun(-, top)`` for a simplex ``x`` of ``U``
        and an operator ``tau`` into ``[1]`` of the same dimension."""
        r = len(tau) - 1
        if all(t == 0 for t in tau):
            return Word("-", "top", r, ((ops.const(0, r), ("q", "i-")),))
        if all(t == 1 for t in tau):
            e, c = x
            return Word("-", "top", r, ((e, ("u", c)), (ops.const(0, r), "i+")))
        s = self.P.pair(x, chain_simplex(tau))
        return self._qword(s)


def three_cat(U: SimplicialSet) -> ThreeCat:
    return ThreeCat(U)


def join_set(X: SimplicialSet, apex) -> SimplicialSet:
    J = join_with_point(X, apex=apex)
    J.apex = apex
    J.base = X
    return J


def t_map(U: SimplicialSet, join: SimplicialSet = None, target: Computad = None) -> ComputadFunctor:
    """``C[U * D0] -> 2[U]``: beads of base cells go to identities; a bead
    ``T`` of the cone on an ``m``-cell ``u`` goes to ``u . a`` with
    ``a(i) = max(T^i - {m+1})``."""
    J = join or join_set(U, "+")
    R = realize(J)
    T2 = target or two_cat(U)
    objs = {v: ("+" if v == J.apex else "-") for v in R.objects}
    atoms = {}
    for (c, T) in R.atoms:
        if c[0] == "x":
            atoms[(c, T)] = Word("-", "-", T.dim, ())
        else:
            u = c[1]
            m = U.dim_of[u]
            a = tuple(max(t for t in S if t != m + 1) for S in T.sets)
            atoms[(c, T)] = two_cat_word(U, U.act(U.cell(u), a))
    return ComputadFunctor(R, T2, objs, atoms, name="t")


def w_map(U: SimplicialSet, target: Computad = None):
    """``C[Sr U] -> 2[U]``, the map ``t`` passed to the quotient.  Returns the
    functor, the realization of the quotient map ``C[U * D0] -> C[Sr U]`` and
    ``t`` itself, so that callers can check ``w . q == t``."""
    S, q = right_suspension(U)
    J = S.join
    J.apex, J.base = "+", U
    T2 = target or two_cat(U)
    t = t_map(U, join=J, target=T2)
    RS = realize(S)
    atoms = {}
    for (c, T) in RS.atoms:
        u = c[1]
        m = U.dim_of[u]
        a = tuple(max(x for x in Sset if x != m + 1) for Sset in T.sets)
        atoms[(c, T)] = two_cat_word(U, U.act(U.cell(u), a))
    w = ComputadFunctor(RS, T2, {"-": "-", "+": "+"}, atoms, name="w")
    Rq = realize_map(q, source=t.source, target=RS)
    return w, Rq, t


def v_map(U: SimplicialSet, target: ThreeCat = None):
    """``C[Sr U * D0] -> 3[U]``.  Returns the functor and the join it is
    defined on."""
    S, _ = right_suspension(U)
    J = join_set(S, "top")
    R = realize(J)
    T3 = target or ThreeCat(U)
    objs = {("x", "-"): "-", ("x", "+"): "+", "top": "top"}
    objs = {v: objs[v] for v in R.objects}
    atoms = {}
    for (c, T) in R.atoms:
        if c[0] == "x":
            base = c[1]
            u = base[1]
            m = U.dim_of[u]
            a = tuple(max(x for x in Sset if x != m + 1) for Sset in T.sets)
            atoms[(c, T)] = two_cat_word(U, U.act(U.cell(u), a))
        elif c[1] == "-":
            atoms[(c, T)] = Word("-", "top", 0, (((0,), ("q", "i-")),))
        elif c[1] == "+":
            atoms[(c, T)] = Word("+", "top", 0, (((0,), "i+"),))
        else:
            u = c[1][1]
            m = U.dim_of[u]
            a = tuple(max(x for x in Sset if x not in (m + 1, m + 2)) for Sset in T.sets)
            rho = tuple(int(m + 1 in Sset) for Sset in T.sets)
            atoms[(c, T)] = T3.corner(U.act(U.cell(u), a), rho)
    return ComputadFunctor(R, T3, objs, atoms, name="v"), J


def s_map(U: SimplicialSet, source: ThreeCat = None, target: Computad = None):
    """``3[U] -> 2[S U]``: ``-`` and ``+`` go to ``-``, ``top`` to ``+``."""
    T3 = source or ThreeCat(U)
    SU, q = suspension(U)
    T2 = target or two_cat(SU)
    atoms = {}
    for a, A in T3.atoms.items():
        if a == "i+":
            atoms[a] = Word("-", "+", 0, (((0,), ("u", "+")),))
        elif a[0] == "u":
            atoms[a] = Word("-", "-", A.dim, ())
        elif a[1] == "i-":
            atoms[a] = Word("-", "+", 0, (((0,), ("u", "-")),))
        else:
            atoms[a] = two_cat_word(SU, q.apply(T3.P.cell(a[1])))
    return ComputadFunctor(T3, T2, {"-": "-", "+": "-", "top": "+"}, atoms, name="s"), SU


def u_map(U: SimplicialSet, SU: SimplicialSet = None, SrU: SimplicialSet = None) -> SimplicialMap:
    """``S U -> Sr U`` induced by ``(i, 0) -> i``, ``(i, 1) -> apex``."""
    if SU is None:
        SU, _ = suspension(U)
    if SrU is None:
        SrU, _ = right_suspension(U)
    q = {("x", c): "-" for c in U.dim_of}
    a = {"-": ((0,), "-"), "+": ((0,), "+")}
    for c in SU.all_cells():
        if c in ("-", "+"):
            continue
        x, (e2, ch) = c
        m = len(e2) - 1
        tau = [ch[i] for i in e2]
        j = tau.count(0)
        xs = U.act(x, tuple(range(j)))
        e, k = cone_simplex(xs, m - j, apex="+")
        a[c] = (e, k) if k not in q else (ops.const(0, m), "-")
    return SimplicialMap(SU, SrU, a, name="u")
