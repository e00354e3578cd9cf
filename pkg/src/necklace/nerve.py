"""Simplicially enriched categories and their homotopy coherent nerves.

An ``n``-simplex of the coherent nerve is stored as ``(objects, cubes)``:
``objects`` lists ``c0 .. cn`` and ``cubes`` gives, for each pair ``i < j``
in lexicographic order, the map ``cube(j-i-1) -> Fun(ci, cj)`` as a tuple of
images of the cube's cells.  A vertex ``x`` of the cube over ``(i, j)``
stands for the subset ``{i, j} + {i+1+t : x[t] == 1}``; functoriality says
that on the face ``x[m-i-1] == 1`` the map is the composite of the maps over
``(i, m)`` and ``(m, j)``.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product as iproduct
from typing import Callable, Optional

from . import operators as ops
from .category import FiniteCategory, nerve_of_category, nerve_simplex_morphisms, nerve_string
from .coherent import Flag, Realization, decompose, flag_cube_simplex, realize, simplex_computad
from .computad import Word
from .constructions import ProductSet, chain_simplex, cube, horn, product, standard
from .hcat import homotopy_category, invertible_core
from .sset import SimplicialMap, SimplicialSet, enumerate_maps, first_map, from_simplex_functor


@lru_cache(maxsize=None)
def _cube(k: int):
    C = cube(k)
    C.cell_list = C.all_cells()
    C.position = {c: i for i, c in enumerate(C.cell_list)}
    return C


class SimplicialCategory:
    """A category enriched in finite simplicial sets.

    ``fun[(a, b)]`` is the function complex; ``identity[a]`` the vertex key of
    the identity; ``comp_tables[(a, b, c)]`` a map ``Fun(a,b) x Fun(b,c) ->
    Fun(a,c)`` given on nondegenerate cells of the product.  Composition is
    written in path order: ``compose(f, g)`` is ``f`` then ``g``.
    """

    def __init__(self, objects, fun: dict, identity: dict, comp_tables: dict, name: str = ""):
        self.objects = list(objects)
        self.fun = dict(fun)
        self.identity = dict(identity)
        self.comp_tables = dict(comp_tables)
        self.name = name
        self._empty = SimplicialSet([], {}, name="empty")

    def __repr__(self):
        return f"SimplicialCategory({self.name or '?'}: {len(self.objects)} objects)"

    def hom(self, a, b) -> SimplicialSet:
        return self.fun.get((a, b), self._empty)

    def compose(self, f, g, a, b, c):
        """``f`` in ``Fun(a, b)`` then ``g`` in ``Fun(b, c)`` (same dimension)."""
        P, table = self.comp_tables[(a, b, c)]
        eta, key = ProductSet.pair(f, g)
        return self.hom(a, c).act(table[key], eta)

    def identity_simplex(self, a, r: int = 0):
        return (ops.const(0, r), self.identity[a])

    @classmethod
    def from_cell_composition(cls, objects, fun, identity, comp: Callable, name=""):
        """Build composition tables from ``comp(a, b, c, f, g)`` evaluated on
        the nondegenerate cells of each product."""
        tables = {}
        for a, b, c in iproduct(objects, repeat=3):
            if (a, b) not in fun or (b, c) not in fun:
                continue
            P = product(fun[(a, b)], fun[(b, c)])
            tables[(a, b, c)] = (P, {key: comp(a, b, c, key[0], key[1]) for key in P.all_cells()})
        return cls(objects, fun, identity, tables, name=name)

    def check(self, max_dim: Optional[int] = None) -> list[str]:
        """Composition tables are simplicial maps; units and associativity
        hold on all simplices through ``max_dim``."""
        problems = []
        for (a, b, c), (P, table) in self.comp_tables.items():
            f = SimplicialMap(P, self.hom(a, c), table)
            problems += [f"comp {a},{b},{c}: {p}" for p in f.check()]
        if problems:
            return problems
        for (a, b), X in self.fun.items():
            top = X.top_dim if max_dim is None else min(X.top_dim, max_dim)
            for r in range(top + 1):
                for s in X.simplices(r):
                    if self.compose(self.identity_simplex(a, r), s, a, a, b) != s:
                        problems.append(f"left unit fails on {s} in Fun({a},{b})")
                    if self.compose(s, self.identity_simplex(b, r), a, b, b) != s:
                        problems.append(f"right unit fails on {s} in Fun({a},{b})")
        for a, b, c, d in iproduct(self.objects, repeat=4):
            if not all(k in self.fun for k in ((a, b), (b, c), (c, d))):
                continue
            X, Y, Z = self.fun[(a, b)], self.fun[(b, c)], self.fun[(c, d)]
            top = min(X.top_dim, Y.top_dim, Z.top_dim)
            if max_dim is not None:
                top = min(top, max_dim)
            for r in range(top + 1):
                for f in X.simplices(r):
                    for g in Y.simplices(r):
                        fg = self.compose(f, g, a, b, c)
                        for h in Z.simplices(r):
                            if self.compose(fg, h, a, c, d) != self.compose(f, self.compose(g, h, b, c, d), a, b, d):
                                problems.append(f"associativity fails at {a},{b},{c},{d}")
                                return problems
        return problems

    def opposite(self) -> "SimplicialCategory":
        fun = {(b, a): X for (a, b), X in self.fun.items()}
        tables = {}
        for (a, b, c), (P, table) in self.comp_tables.items():
            Q = product(self.hom(b, c), self.hom(a, b))
            tables[(c, b, a)] = (Q, {(g, f): table[(f, g)] for (f, g) in P.all_cells()})
        return SimplicialCategory(self.objects, fun, self.identity, tables, name=f"{self.name}op")

    def restrict(self, funs: dict, name: str = "") -> "SimplicialCategory":
        """Same objects, function complexes replaced by subcomplexes closed
        under composition."""
        tables = {}
        for (a, b, c), (P, table) in self.comp_tables.items():
            X, Y = funs[(a, b)], funs[(b, c)]
            tables[(a, b, c)] = (P, {k: v for k, v in table.items() if k[0][1] in X and k[1][1] in Y})
            for k, v in tables[(a, b, c)][1].items():
                if v[1] not in funs[(a, c)]:
                    raise ValueError("subcomplexes are not closed under composition")
        sub = SimplicialCategory(self.objects, funs, self.identity, tables, name=name)
        return sub


def discrete_set(points, name="") -> SimplicialSet:
    return SimplicialSet([list(points)], {p: () for p in points}, name=name)


def from_category(C: FiniteCategory) -> SimplicialCategory:
    """A 1-category with discrete function complexes."""
    fun = {(a, b): discrete_set(C.hom(a, b), name=f"{a}->{b}") for a in C.objects for b in C.objects}
    comp = lambda a, b, c, f, g: ((0,), C.comp(g[1], f[1]))
    return SimplicialCategory.from_cell_composition(C.objects, fun, C.identities, comp, name=C.name)


def from_hom_categories(objects, homs: dict, identity: dict, on_objects: Callable, on_morphisms: Callable,
                        D: int = 4, name: str = "") -> SimplicialCategory:
    """A strict 2-category: each ``Fun(a, b)`` is the nerve of the finite
    category ``homs[(a, b)]`` and composition is the nerve of the functors
    ``on_objects(a, b, c, x, y)`` / ``on_morphisms(a, b, c, f, g)``."""
    fun = {k: nerve_of_category(H, D, name=f"N{k}") for k, H in homs.items()}
    ids = {a: (0, identity[a]) for a in objects}

    def comp(a, b, c, f, g):
        H1, H2, H3 = homs[(a, b)], homs[(b, c)], homs[(a, c)]
        o1, m1 = nerve_simplex_morphisms(H1, f)
        o2, m2 = nerve_simplex_morphisms(H2, g)
        objs = [on_objects(a, b, c, x, y) for x, y in zip(o1, o2)]
        ms = [on_morphisms(a, b, c, p, q) for p, q in zip(m1, m2)]
        return nerve_string(H3, objs, ms)

    return SimplicialCategory.from_cell_composition(objects, fun, ids, comp, name=name)


# -- coherent nerve -----------------------------------------------------------

def pairs(n: int) -> list:
    return [(i, j) for i in range(n + 1) for j in range(i + 1, n + 1)]


class CoherentNerve:
    """The homotopy coherent nerve of ``C`` through dimension ``D``."""

    def __init__(self, C: SimplicialCategory, D: int = 3):
        self.C = C
        self.D = D
        self._all = {}
        self.sset = from_simplex_functor(self.all_simplices, self.face, self.degen, D,
                                         name=f"N({C.name})")

    # -- data access
    def cube_map(self, s, i, j) -> tuple:
        objs, cubes = s
        return cubes[pairs(len(objs) - 1).index((i, j))]

    def evaluate(self, s, i: int, j: int, cs):
        """Value of the map over ``(i, j)`` on a simplex ``cs`` of the cube."""
        objs, _ = s
        if i == j:
            return self.C.identity_simplex(objs[i], len(cs[0]) - 1)
        K = _cube(j - i - 1)
        eta, key = cs
        return self.C.hom(objs[i], objs[j]).act(self.cube_map(s, i, j)[K.position[key]], eta)

    def arrow(self, s, f: Flag):
        """Image of a flag of the coherent simplex under the functor ``s``."""
        return self.evaluate(s, f.lo, f.hi, flag_cube_simplex(f))

    def act(self, s, beta):
        objs, cubes = s
        m = len(beta) - 1
        new_objs = tuple(objs[b] for b in beta)
        out = []
        for i, j in pairs(m):
            K = _cube(j - i - 1)
            bi, bj = beta[i], beta[j]
            imgs = []
            for chain in K.cell_list:
                r = len(chain) - 1
                if bi == bj:
                    imgs.append(self.C.identity_simplex(objs[bi], r))
                    continue
                seq = []
                for x in chain:
                    y = [0] * (bj - bi - 1)
                    for t, k in enumerate(range(i + 1, j)):
                        l = beta[k]
                        if bi < l < bj and x[t]:
                            y[l - bi - 1] = 1
                    seq.append(tuple(y))
                imgs.append(self.evaluate(s, bi, bj, chain_simplex(seq)))
            out.append(tuple(imgs))
        return (new_objs, tuple(out))

    def face(self, s, i):
        return self.act(s, ops.face(i, len(s[0]) - 1))

    def degen(self, s, i):
        return self.act(s, ops.degeneracy(i, len(s[0]) - 1))

    # -- enumeration
    def composite_constraints(self, left, right, n: int) -> Optional[dict]:
        """Values forced on the faces ``x_m == 1`` of ``cube(n-1)`` for an
        ``n``-simplex with ``d_n == left`` and ``d_0 == right``; ``None`` if
        they are inconsistent."""
        objs = left[0] + (right[0][-1],)
        K = _cube(n - 1)
        fixed = {}
        for chain in K.cell_list:
            val = None
            for m in range(1, n):
                if not all(x[m - 1] == 1 for x in chain):
                    continue
                lo = chain_simplex([x[: m - 1] for x in chain])
                hi = chain_simplex([x[m:] for x in chain])
                f = self.evaluate(left, 0, m, lo)
                g = self.evaluate(right, m - 1, n - 1, hi)
                v = self.C.compose(f, g, objs[0], objs[m], objs[n])
                if val is not None and v != val:
                    return None
                val = v
            if val is not None:
                fixed[chain] = val
        return fixed


    def all_simplices(self, n: int) -> list:
        hit = self._all.get(n)
        if hit is not None:
            return hit
        C = self.C
        out = []
        if n == 0:
            out = [((a,), ()) for a in C.objects]
        elif n == 1:
            for a in C.objects:
                for b in C.objects:
                    for v in C.hom(a, b).cells_of(0):
                        out.append(((a, b), (((ops.identity(0), v),),)))
        else:
            prev = self.all_simplices(n - 1)
            by_front = {}
            for right in prev:
                by_front.setdefault(self.act(right, tuple(range(n - 1))), []).append(right)
            for left in prev:
                for right in by_front.get(self.act(left, tuple(range(1, n))), ()):
                    out.extend(self.fillers(left, right, n))
        self._all[n] = out
        return out

    def fillers(self, left, right, n, extra_fixed=None, first_only=False):
        """All ``n``-simplices with ``d_n == left`` and ``d_0 == right``."""
        if self.act(left, tuple(range(1, n))) != self.act(right, tuple(range(0, n - 1))):
            return []
        objs = left[0] + (right[0][-1],)
        fixed = self.composite_constraints(left, right, n)
        if fixed is None:
            return []
        if extra_fixed:
            for k, v in extra_fixed.items():
                if fixed.get(k, v) != v:
                    return []
                fixed[k] = v
        K = _cube(n - 1)
        target = self.C.hom(objs[0], objs[n])
        out = []
        for a in enumerate_maps(K, target, fixed=fixed):
            cubes = {}
            for (i, j) in pairs(n - 1):
                cubes[(i, j)] = self.cube_map(left, i, j)
            for (i, j) in pairs(n - 1):
                cubes[(i + 1, j + 1)] = self.cube_map(right, i, j)
            cubes[(0, n)] = tuple(a[c] for c in K.cell_list)
            out.append((objs, tuple(cubes[p] for p in pairs(n))))
            if first_only:
                break
        return out


def coherent_nerve(C: SimplicialCategory, D: int = 3) -> CoherentNerve:
    return CoherentNerve(C, D)


def nerve_value(N: CoherentNerve, s):
    """Turn an EZ simplex ``(epi, key)`` of ``N.sset`` into its data."""
    e, key = s
    return N.act(key, e)


# -- horn filling -------------------------------------------------------------

def fills_horns(X: SimplicialSet, D: int, which: str = "inner", limit: Optional[int] = None) -> dict:
    """Check that every horn ``L(n,k) -> X`` with ``n <= D`` extends.

    ``which`` selects ``inner`` (``0<k<n``), ``all``, ``right``
    (``0<k<=n``) or ``left`` (``0<=k<n``).  Returns a report with the
    number of horns examined and the first failure, if any.
    """
    report = {"horns": 0, "failure": None, "witnesses": []}
    for n in range(1, D + 1):
        ks = {"inner": range(1, n), "all": range(0, n + 1), "right": range(1, n + 1),
              "left": range(0, n)}[which]
        for k in ks:
            H, S = horn(n, k), standard(n)
            for h in enumerate_maps(H, X):
                report["horns"] += 1
                fill = first_map(S, X, fixed=h)
                if fill is None:
                    report["failure"] = {"n": n, "k": k, "horn": h}
                    return report
                if len(report["witnesses"]) < 3:
                    report["witnesses"].append({"n": n, "k": k, "filler": fill[tuple(range(n + 1))]})
                if limit and report["horns"] >= limit:
                    return report
    return report


def kan_check(C: SimplicialCategory, D: int = 3) -> dict:
    """Horn filling in every function complex, all horns through ``D``."""
    out = {}
    for key, X in C.fun.items():
        out[key] = fills_horns(X, min(D, X.bound if X.bound is not None else D), which="all")
    return out


def is_kan_enriched(C: SimplicialCategory, D: int = 3) -> bool:
    return all(r["failure"] is None for r in kan_check(C, D).values())


def groupoidal_core(C: SimplicialCategory) -> SimplicialCategory:
    """Restrict each function complex to the cells whose edges are invertible."""
    funs = {k: invertible_core(X) for k, X in C.fun.items()}
    return C.restrict(funs, name=f"core {C.name}")


def inner_horn_fill(N: CoherentNerve, faces: dict, n: int, k: int, first_only: bool = True):
    """Fill an inner horn of the coherent nerve.

    ``faces[m]`` (``m != k``) are the ``(n-1)``-simplices of the horn as data.
    All structure over pairs other than ``(0, n)`` is read off the faces; the
    map ``cube(n-1) -> Fun(c0, cn)`` is then prescribed on a cubical horn and
    completed by depth-first search in canonical order, which always
    succeeds when the function complex is Kan.  Returns the filler data and
    the number of cube cells that had to be chosen.
    """
    if not 0 < k < n:
        raise ValueError("inner horns only")
    left, right = faces[n], faces[0]
    fixed = {}
    K = _cube(n - 1)
    for m, f in faces.items():
        if m in (0, n):
            continue
        # cells with coordinate m constant 0 come from the (0, n-1) cube of d_m
        for chain in K.cell_list:
            if all(x[m - 1] == 0 for x in chain):
                sub = chain_simplex([x[: m - 1] + x[m:] for x in chain])
                fixed[chain] = N.evaluate(f, 0, n - 1, sub)
    fills = N.fillers(left, right, n, extra_fixed=fixed, first_only=first_only)
    chosen = sum(1 for c in K.cell_list if c not in fixed)
    return (fills[0] if fills else None), chosen


def horn_faces_of(N: CoherentNerve, s, k: int) -> dict:
    n = len(s[0]) - 1
    return {m: N.face(s, m) for m in range(n + 1) if m != k}


# -- functors out of realizations ---------------------------------------------

class CoherentFunctor:
    """A simplicial functor from a realization (or the coherent simplex) to a
    simplicial category, given by the images of atoms."""

    def __init__(self, source, C: SimplicialCategory, on_objects: dict, on_atoms: dict):
        self.source, self.C = source, C
        self.on_objects = dict(on_objects)
        self.on_atoms = dict(on_atoms)

    def apply(self, w: Word):
        C, S = self.C, self.source
        a = self.on_objects[w.src]
        if not w.letters:
            return C.identity_simplex(a, w.dim)
        val, at = None, a
        for e, atom in w.letters:
            A = S.atoms[atom]
            img = C.hom(self.on_objects[A.src], self.on_objects[A.tgt]).act(self.on_atoms[atom], e)
            nxt = self.on_objects[A.tgt]
            val = img if val is None else C.compose(val, img, a, at, nxt)
            at = nxt
        return val

    def check(self) -> list[str]:
        problems = []
        for atom, A in self.source.atoms.items():
            img = self.on_atoms.get(atom)
            if img is None:
                problems.append(f"no image for {atom!r}")
                continue
            X = self.C.hom(self.on_objects[A.src], self.on_objects[A.tgt])
            if img[1] not in X or len(img[0]) != A.dim + 1:
                problems.append(f"image of {atom!r} is not a {A.dim}-simplex of Fun({A.src},{A.tgt})")
                continue
            for i, f in enumerate(A.faces):
                if self.apply(f) != X.act(img, ops.face(i, A.dim)):
                    problems.append(f"face {i} of {atom!r} does not match")
        return problems


def functor_from_data(X: SimplicialSet, C: SimplicialCategory, objects: dict, beads: dict,
                      R: Realization = None) -> CoherentFunctor:
    """Assemble a functor ``C[X] -> C`` from an object per vertex and a
    simplex per bead (edges are 0-beads; an ``n``-cell's 1-bead goes from the
    image of its long edge to the composite along its spine).  Raises with a
    diagnostic naming the first offending bead."""
    R = R or realize(X)
    F = CoherentFunctor(R, C, objects, beads)
    problems = F.check()
    if problems:
        raise ValueError("incompatible bead data: " + problems[0])
    return F


def extend_functor(F: CoherentFunctor, R_big: Realization, new_beads: dict, objects: dict = None) -> CoherentFunctor:
    """Extend a functor along a subcomplex inclusion by new bead images."""
    atoms = dict(F.on_atoms)
    atoms.update(new_beads)
    objs = dict(F.on_objects)
    objs.update(objects or {})
    G = CoherentFunctor(R_big, F.C, objs, atoms)
    problems = G.check()
    if problems:
        raise ValueError("extension is not compatible: " + problems[0])
    return G


def simplex_functor(N: CoherentNerve, s) -> CoherentFunctor:
    """The functor from the coherent simplex named by nerve data ``s``."""
    n = len(s[0]) - 1
    S = simplex_computad(n)
    return CoherentFunctor(S, N.C, dict(enumerate(s[0])), {f: N.arrow(s, f) for f in S.atoms})


def functor_simplex(F: CoherentFunctor, n: int):
    """Inverse of :func:`simplex_functor`."""
    objs = tuple(F.on_objects[i] for i in range(n + 1))
    cubes = []
    for i, j in pairs(n):
        K = _cube(j - i - 1)
        imgs = []
        for chain in K.cell_list:
            sets = [tuple([i] + [i + 1 + t for t, b in enumerate(x) if b] + [j]) for x in chain]
            f = Flag(i, j, tuple(sets))
            w = Word(i, j, f.dim, tuple((e, g) for e, g in (_norm(p) for p in decompose(f))))
            imgs.append(F.apply(w))
        cubes.append(tuple(imgs))
    return (objs, tuple(cubes))


def _norm(p):
    from .coherent import normalize_flag
    return normalize_flag(p)


def enumerate_simplex_functors(C: SimplicialCategory, n: int):
    """All functors from the coherent ``n``-simplex, by backtracking over its
    atoms in order of dimension.  Independent of :class:`CoherentNerve`."""
    S = simplex_computad(n)
    atoms = sorted(S.atoms, key=lambda f: (f.dim, f.hi - f.lo, f.lo, f.blocks()))
    for objs in iproduct(C.objects, repeat=n + 1):
        F = CoherentFunctor(S, C, dict(enumerate(objs)), {})

        def rec(idx):
            if idx == len(atoms):
                yield dict(F.on_atoms)
                return
            f = atoms[idx]
            X = C.hom(objs[f.lo], objs[f.hi])
            if f.dim == 0:
                pool = X.simplices(0)
            else:
                want = tuple(F.apply(w) for w in S.atoms[f].faces)
                pool = X.index(f.dim).get(want, ())
            for v in pool:
                F.on_atoms[f] = v
                yield from rec(idx + 1)
            F.on_atoms.pop(f, None)

        for a in rec(0):
            yield objs, a


# -- duality and comparisons ---------------------------------------------------

def opposite_nerve_map(N: CoherentNerve, Nop: CoherentNerve, n: int) -> dict:
    """The bijection ``N(C)_n -> N(Cop)_n``, reversing objects and cube
    coordinates."""
    out = {}
    for s in N.all_simplices(n):
        objs, _ = s
        new_objs = tuple(reversed(objs))
        cubes = []
        for i, j in pairs(n):
            K = _cube(j - i - 1)
            imgs = []
            for chain in K.cell_list:
                seq = [tuple(reversed(x)) for x in chain]
                imgs.append(N.evaluate(s, n - j, n - i, chain_simplex(seq)))
            cubes.append(tuple(imgs))
        out[s] = (new_objs, tuple(cubes))
    return out


def core_criterion_check(N: CoherentNerve, n: int) -> dict:
    """For each ``n``-simplex: if every ``<i,k|j>`` goes to an invertible
    1-arrow then every 1-arrow in its image is invertible."""
    C = N.C
    hcats = {}

    def inv(a, b, edge):
        H = hcats.get((a, b))
        if H is None:
            H = hcats[(a, b)] = homotopy_category(C.hom(a, b))
        return H.edge_invertible(edge)

    checked = hypotheses = 0
    failures = []
    for s in N.all_simplices(n):
        objs = s[0]
        hyp = True
        for i in range(n + 1):
            for k in range(i + 2, n + 1):
                for j in range(i + 1, k):
                    f = Flag(i, k, ((i, k), (i, j, k)))
                    if not inv(objs[i], objs[k], N.arrow(s, f)):
                        hyp = False
        checked += 1
        if not hyp:
            continue
        hypotheses += 1
        for i, j in pairs(n):
            K = _cube(j - i - 1)
            for chain in K.cells_of(1) if K.top_dim >= 1 else []:
                e = N.evaluate(s, i, j, K.cell(chain))
                if not inv(objs[i], objs[j], e):
                    failures.append((s, i, j, chain))
    return {"simplices": checked, "hypothesis_holds": hypotheses, "failures": failures}
