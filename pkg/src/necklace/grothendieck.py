"""Grothendieck constructions of strict functors ``B -> Cat``.

These are the classical oracles for the fibration checks: the projection
``int F -> B`` is an opfibration whose cocartesian arrows are exactly the
``(f, x, phi)`` with ``phi`` invertible in the fibre.  Morphisms of the
total category are named ``(f, x, phi)``: ``f : a -> b`` in the base, ``x``
an object over ``a`` and ``phi : F(f) x -> y`` over ``b``.
"""
from __future__ import annotations

from .category import FiniteCategory, FiniteFunctor, nerve_map, nerve_of_category
from .io import category_from_json, category_to_json, functor_from_json


def identity_functor(C: FiniteCategory) -> FiniteFunctor:
    return FiniteFunctor(C, C, {a: a for a in C.objects}, {m: m for m in C.morphisms}, name=f"id {C.name}")


class Grothendieck:
    """``int F`` for ``F`` given by fibre categories and transition functors
    on the non-identity morphisms of ``base``."""

    def __init__(self, base: FiniteCategory, fibres: dict, transitions: dict, name: str = ""):
        self.base = base
        self.fibres = dict(fibres)
        self.name = name or f"int({base.name})"
        self.transitions = {}
        for m in base.morphisms:
            if base.is_identity(m):
                self.transitions[m] = identity_functor(self.fibres[base.src(m)])
            else:
                self.transitions[m] = transitions[m]
        self._total = None
        self._nerves = {}

    def F(self, m) -> FiniteFunctor:
        return self.transitions[m]

    def check(self) -> list[str]:
        B = self.base
        problems = []
        for m, (a, b) in B.ends.items():
            T = self.transitions[m]
            if T.source is not self.fibres[a] or T.target is not self.fibres[b]:
                problems.append(f"transition for {m} has the wrong fibres")
                continue
            problems += [f"{m}: {p}" for p in T.check()]
        if problems:
            return problems
        for (g, f), h in B.table.items():
            Fg, Ff, Fh = self.F(g), self.F(f), self.F(h)
            if any(Fg.on_objects[Ff.on_objects[x]] != Fh.on_objects[x] for x in Ff.source.objects) or \
                    any(Fg(Ff(u)) != Fh(u) for u in Ff.source.morphisms):
                problems.append(f"F({g}) . F({f}) differs from F({h})")
        return problems

    # -- the total category
    def total(self) -> FiniteCategory:
        if self._total is not None:
            return self._total
        B = self.base
        objects = [(b, x) for b in B.objects for x in self.fibres[b].objects]
        ids = {(b, x): (B.identities[b], x, self.fibres[b].identities[x]) for b, x in objects}
        morph = {}
        for f in B.morphisms:
            a, b = B.ends[f]
            Fb = self.fibres[b]
            for x in self.fibres[a].objects:
                fx = self.F(f).on_objects[x]
                for phi in Fb.morphisms:
                    if Fb.src(phi) == fx:
                        morph[(f, x, phi)] = ((a, x), (b, Fb.tgt(phi)))
        comp = {}
        for m1, (s1, t1) in morph.items():
            f, x, phi = m1
            for m2, (s2, t2) in morph.items():
                g, _, psi = m2
                if t1 == s2:
                    Fc = self.fibres[B.tgt(g)]
                    comp[(m2, m1)] = (B.comp(g, f), x, Fc.comp(psi, self.F(g)(phi)))
        self._total = FiniteCategory(objects, morph, comp, identities=ids, name=self.name)
        return self._total

    def projection(self) -> FiniteFunctor:
        T = self.total()
        return FiniteFunctor(T, self.base, {o: o[0] for o in T.objects}, {m: m[0] for m in T.morphisms},
                             name="p")

    def fibre_inclusion(self, b) -> FiniteFunctor:
        Fb = self.fibres[b]
        idb = self.base.identities[b]
        return FiniteFunctor(Fb, self.total(), {x: (b, x) for x in Fb.objects},
                             {m: (idb, Fb.src(m), m) for m in Fb.morphisms}, name=f"incl {b}")

    def is_cocartesian_morphism(self, m) -> bool:
        f, _, phi = m
        return self.fibres[self.base.tgt(f)].is_iso(phi)

    # -- nerves
    def nerves(self, D: int = 3):
        """``(N int F, N B, Np)`` through dimension ``D``."""
        hit = self._nerves.get(D)
        if hit is None:
            E = nerve_of_category(self.total(), D, name=f"N{self.name}")
            B = nerve_of_category(self.base, D, name=f"N{self.base.name}")
            hit = (E, B, nerve_map(self.projection(), E, B))
            self._nerves[D] = hit
        return hit

    def fibre_nerve(self, b, D: int = 3):
        """``N(F b)`` and its inclusion into ``N int F``."""
        E = self.nerves(D)[0]
        N = nerve_of_category(self.fibres[b], D)
        return N, nerve_map(self.fibre_inclusion(b), N, E)

    def restrict(self, u: FiniteFunctor, name: str = "") -> "Grothendieck":
        """``int (F . u)`` for ``u : B' -> B``."""
        fib = {c: self.fibres[u.on_objects[c]] for c in u.source.objects}
        tr = {m: self.F(u(m)) for m in u.source.morphisms if not u.source.is_identity(m)}
        return Grothendieck(u.source, fib, tr, name=name or f"int({u.source.name})")


def to_json(G: Grothendieck) -> dict:
    return {"kind": "grothendieck", "name": G.name, "base": category_to_json(G.base),
            "fibres": {str(b): category_to_json(C) for b, C in G.fibres.items()},
            "transitions": {str(m): {"objects": {str(k): v for k, v in T.on_objects.items()},
                                     "morphisms": {str(k): v for k, v in T.on_morphisms.items()}}
                            for m, T in G.transitions.items() if not G.base.is_identity(m)}}


def from_json(doc: dict) -> Grothendieck:
    base = category_from_json(doc["base"])
    fibres = {b: category_from_json(doc["fibres"][str(b)]) for b in base.objects}
    tr = {}
    for m in base.morphisms:
        if base.is_identity(m):
            continue
        a, b = base.ends[m]
        tr[m] = functor_from_json(doc["transitions"][str(m)], fibres[a], fibres[b])
    G = Grothendieck(base, fibres, tr, name=doc.get("name", ""))
    problems = G.check()
    if problems:
        raise ValueError("invalid Grothendieck data: " + "; ".join(problems[:5]))
    return G
