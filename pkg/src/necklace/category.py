"""Finite 1-categories, functors between them, and their nerves."""
from __future__ import annotations

from itertools import product as iproduct
from typing import Optional

from .sset import SimplicialMap, SimplicialSet


class CategoryError(ValueError):
    pass


class FiniteCategory:
    """A finite category given by generators-free data.

    ``morphisms`` maps a name to ``(source, target)``.  ``compose`` maps
    ``(g, f)`` to the name of ``g . f`` for composable non-identity pairs.
    Identities are added automatically as ``id:<object>`` unless given.
    Morphisms are ordered identities first, then in the order supplied.
    """

    def __init__(self, objects, morphisms: dict, compose: dict, identities: Optional[dict] = None,
                 name: str = ""):
        self.name = name
        self.objects = list(objects)
        self.identities = dict(identities or {a: f"id:{a}" for a in self.objects})
        self.ends = {}
        for a in self.objects:
            self.ends[self.identities[a]] = (a, a)
        for m, st in morphisms.items():
            if m in self.ends:
                continue
            self.ends[m] = tuple(st)
        self.morphisms = list(self.ends)
        self.rank = {m: i for i, m in enumerate(self.morphisms)}
        self.ident_set = set(self.identities.values())
        self.table = {}
        for (g, f), h in compose.items():
            self.table[(g, f)] = h
        for m, (a, b) in self.ends.items():
            self.table[(m, self.identities[a])] = m
            self.table[(self.identities[b], m)] = m

    def __repr__(self):
        return f"FiniteCategory({self.name or '?'}: {len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def src(self, m):
        return self.ends[m][0]

    def tgt(self, m):
        return self.ends[m][1]

    def is_identity(self, m) -> bool:
        return m in self.ident_set

    def hom(self, a, b) -> list:
        return [m for m in self.morphisms if self.ends[m] == (a, b)]

    def comp(self, g, f):
        """``g . f``."""
        if self.tgt(f) != self.src(g):
            raise CategoryError(f"{g} and {f} are not composable")
        try:
            return self.table[(g, f)]
        except KeyError:
            raise CategoryError(f"no composite recorded for {g} . {f}") from None

    def check(self) -> list[str]:
        problems = []
        for g, f in iproduct(self.morphisms, repeat=2):
            if self.tgt(f) != self.src(g):
                continue
            h = self.table.get((g, f))
            if h is None:
                problems.append(f"missing composite {g} . {f}")
            elif self.ends[h] != (self.src(f), self.tgt(g)):
                problems.append(f"composite {g} . {f} = {h} has wrong ends")
        if problems:
            return problems
        for h, g, f in iproduct(self.morphisms, repeat=3):
            if self.tgt(f) == self.src(g) and self.tgt(g) == self.src(h):
                if self.comp(h, self.comp(g, f)) != self.comp(self.comp(h, g), f):
                    problems.append(f"associativity fails on {h}, {g}, {f}")
        return problems

    def inverse(self, f):
        a, b = self.ends[f]
        for g in self.hom(b, a):
            if self.comp(g, f) == self.identities[a] and self.comp(f, g) == self.identities[b]:
                return g
        return None

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def opposite(self) -> "FiniteCategory":
        morph = {m: (b, a) for m, (a, b) in self.ends.items() if not self.is_identity(m)}
        comp = {(f, g): h for (g, f), h in self.table.items()
                if not self.is_identity(g) and not self.is_identity(f)}
        return FiniteCategory(self.objects, morph, comp, identities=self.identities, name=f"{self.name}op")

    def arrow_category(self) -> "FiniteCategory":
        """Objects are morphisms; morphisms ``f -> f'`` are commuting squares
        ``(u, v)`` with ``v . f == f' . u``."""
        objs = list(self.morphisms)
        morph, ids = {}, {}
        for f, f2 in iproduct(objs, repeat=2):
            for u in self.hom(self.src(f), self.src(f2)):
                for v in self.hom(self.tgt(f), self.tgt(f2)):
                    if self.comp(v, f) == self.comp(f2, u):
                        name = (u, v, f, f2)
                        morph[name] = (f, f2)
                        if self.is_identity(u) and self.is_identity(v) and f == f2:
                            ids[f] = name
        comp = {}
        for s1, (a, b) in morph.items():
            for s2, (b2, c) in morph.items():
                if b == b2:
                    comp[(s2, s1)] = (self.comp(s2[0], s1[0]), self.comp(s2[1], s1[1]), a, c)
        idmorph = {k: v for k, v in morph.items() if k not in set(ids.values())}
        return FiniteCategory(objs, idmorph, comp, identities=ids, name=f"{self.name}^2")


class FiniteFunctor:
    def __init__(self, source: FiniteCategory, target: FiniteCategory, on_objects: dict,
                 on_morphisms: dict, name: str = ""):
        self.source, self.target = source, target
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)
        for a in source.objects:
            self.on_morphisms.setdefault(source.identities[a], target.identities[self.on_objects[a]])
        self.name = name

    def __call__(self, m):
        return self.on_morphisms[m]

    def check(self) -> list[str]:
        S, T = self.source, self.target
        problems = []
        for m, (a, b) in S.ends.items():
            fm = self.on_morphisms.get(m)
            if fm is None or T.ends[fm] != (self.on_objects[a], self.on_objects[b]):
                problems.append(f"{m} is sent to {fm!r} with wrong ends")
        for a in S.objects:
            if self.on_morphisms[S.identities[a]] != T.identities[self.on_objects[a]]:
                problems.append(f"identity of {a} not preserved")
        if problems:
            return problems
        for (g, f), h in S.table.items():
            if T.comp(self(g), self(f)) != self(h):
                problems.append(f"composite {g} . {f} not preserved")
        return problems

    def then(self, other: "FiniteFunctor") -> "FiniteFunctor":
        return FiniteFunctor(self.source, other.target,
                             {a: other.on_objects[b] for a, b in self.on_objects.items()},
                             {m: other(n) for m, n in self.on_morphisms.items()})


# -- nerves -------------------------------------------------------------------

def nerve_string(C: FiniteCategory, objects, morphs):
    """EZ form of a composable string in the nerve (identities allowed)."""
    if not morphs:
        return ((0,), (0, objects[0]))
    eta, kept, v = [0], [], 0
    for m in morphs:
        if not C.is_identity(m):
            kept.append(m)
            v += 1
        eta.append(v)
    if not kept:
        return (tuple(eta), (0, objects[0]))
    return (tuple(eta), (len(kept), tuple(kept)))


def nerve_of_category(C: FiniteCategory, D: int = 4, name: str = "") -> SimplicialSet:
    """Nerve of ``C`` through dimension ``D``.  Cells are ``(0, object)`` and
    ``(n, (f1, ..., fn))`` for composable strings of non-identity morphisms,
    ``f1`` first."""
    nonid = [m for m in C.morphisms if not C.is_identity(m)]
    out_of = {a: [m for m in nonid if C.src(m) == a] for a in C.objects}
    cells = [[(0, a) for a in C.objects]]
    strings = [()]
    for n in range(1, D + 1):
        if n == 1:
            strings = [(m,) for m in nonid]
        else:
            strings = [s + (m,) for s in strings for m in out_of[C.tgt(s[-1])]]
        cells.append([(n, s) for s in strings])
        if not strings:
            break
    complete = not cells[-1]
    faces = {(0, a): () for a in C.objects}
    for row in cells[1:]:
        for key in row:
            n, s = key
            objs = [C.src(s[0])] + [C.tgt(m) for m in s]
            fs = []
            for i in range(n + 1):
                if i == 0:
                    fs.append(nerve_string(C, objs[1:], s[1:]))
                elif i == n:
                    fs.append(nerve_string(C, objs[:-1], s[:-1]))
                else:
                    fs.append(nerve_string(C, objs[:i] + objs[i + 1:], s[:i - 1] + (C.comp(s[i], s[i - 1]),) + s[i + 1:]))
            faces[key] = tuple(fs)
    return SimplicialSet(cells, faces, bound=None if complete else D, name=name or f"N{C.name}")


def nerve_simplex_morphisms(C: FiniteCategory, s):
    """The objects and the full morphism string (identities included) of a
    simplex ``(epi, key)`` of a nerve."""
    e, (k, payload) = s
    if k == 0:
        return [payload] * len(e), [C.identities[payload]] * (len(e) - 1)
    objs = [C.src(payload[0])] + [C.tgt(m) for m in payload]
    vs = [objs[i] for i in e]
    ms = []
    for i in range(len(e) - 1):
        ms.append(payload[e[i]] if e[i + 1] != e[i] else C.identities[vs[i]])
    return vs, ms


def nerve_map(F: FiniteFunctor, source: SimplicialSet, target: SimplicialSet) -> SimplicialMap:
    assignment = {}
    for key in source.dim_of:
        n, payload = key
        if n == 0:
            assignment[key] = ((0,), (0, F.on_objects[payload]))
        else:
            objs = [F.on_objects[F.source.src(payload[0])]] + [F.on_objects[F.source.tgt(m)] for m in payload]
            assignment[key] = nerve_string(F.target, objs, [F(m) for m in payload])
    return SimplicialMap(source, target, assignment, name=F.name)


def edge_morphism(C: FiniteCategory, s):
    """The morphism named by a 1-simplex of a nerve."""
    e, (k, payload) = s
    if k == 0:
        return C.identities[payload]
    return payload[0]


def morphism_edge(C: FiniteCategory, m):
    if C.is_identity(m):
        return ((0, 0), (0, C.src(m)))
    return ((0, 1), (1, (m,)))


def object_vertex(a):
    return ((0,), (0, a))
