"""Small named examples used by the tests, the CLI and the check suite."""
from __future__ import annotations

from itertools import product as iproduct

from .category import FiniteCategory
from .nerve import SimplicialCategory, from_category, from_hom_categories


def arrow() -> FiniteCategory:
    return FiniteCategory(["a", "b"], {"f": ("a", "b")}, {}, name="arrow")


def chain2() -> FiniteCategory:
    return FiniteCategory(["a", "b", "c"], {"f": ("a", "b"), "g": ("b", "c"), "h": ("a", "c")},
                          {("g", "f"): "h"}, name="chain2")


def commuting_square() -> FiniteCategory:
    m = {"r0": ("00", "10"), "u0": ("00", "01"), "u1": ("10", "11"), "r1": ("01", "11"), "d": ("00", "11")}
    return FiniteCategory(["00", "01", "10", "11"], m, {("u1", "r0"): "d", ("r1", "u0"): "d"}, name="square")


def parallel_pair() -> FiniteCategory:
    return FiniteCategory(["a", "b"], {"f": ("a", "b"), "g": ("a", "b")}, {}, name="parallel")


def z2() -> FiniteCategory:
    return FiniteCategory(["*"], {"t": ("*", "*")}, {("t", "t"): "id:*"}, name="Z2")


def walking_iso() -> FiniteCategory:
    return FiniteCategory(["a", "b"], {"i": ("a", "b"), "j": ("b", "a")},
                          {("j", "i"): "id:a", ("i", "j"): "id:b"}, name="iso")


def span() -> FiniteCategory:
    return FiniteCategory(["a", "b", "c"], {"f": ("a", "b"), "g": ("a", "c")}, {}, name="span")


def categories() -> list:
    return [arrow(), chain2(), commuting_square(), parallel_pair(), z2(), walking_iso(), span()]


def codiscrete(points, name="") -> FiniteCategory:
    """The groupoid with exactly one arrow between any two objects."""
    pts = list(points)
    morph = {(x, y): (x, y) for x in pts for y in pts if x != y}
    comp = {}
    for (x, y), (y2, z) in iproduct(morph, repeat=2):
        if y == y2:
            comp[((y, z), (x, y))] = f"id:{x}" if x == z else (x, z)
    return FiniteCategory(pts, morph, comp, name=name)


def fattened(C: FiniteCategory, D: int = 4) -> SimplicialCategory:
    """Each hom-set replaced by the contractible Kan complex on it; composition
    is induced by composition in ``C``."""
    homs = {(a, b): codiscrete(C.hom(a, b), name=f"E({a},{b})") for a in C.objects for b in C.objects}

    def on_obj(a, b, c, x, y):
        return C.comp(y, x)

    def on_mor(a, b, c, p, q):
        H = homs[(a, c)]
        src = C.comp(homs[(b, c)].src(q), homs[(a, b)].src(p))
        tgt = C.comp(homs[(b, c)].tgt(q), homs[(a, b)].tgt(p))
        return H.identities[src] if src == tgt else (src, tgt)

    return from_hom_categories(C.objects, homs, C.identities, on_obj, on_mor, D=D, name=f"E{C.name}")


def bz2() -> FiniteCategory:
    return FiniteCategory(["e"], {"t": ("e", "e")}, {("t", "t"): "id:e"}, name="BZ2")


def z2_two_group(D: int = 4) -> SimplicialCategory:
    """One object whose endomorphism complex is the nerve of ``BZ/2``;
    composition adds."""
    H = bz2()
    add = lambda p, q: "id:e" if (p == q) else "t"
    return from_hom_categories(["*"], {("*", "*"): H}, {"*": "e"}, lambda a, b, c, x, y: "e",
                               lambda a, b, c, p, q: add(p, q), D=D, name="B2Z2")


def suspended_bz2(D: int = 4) -> SimplicialCategory:
    """Two objects with ``Fun(a, b)`` the nerve of ``BZ/2`` and nothing else."""
    pt = FiniteCategory(["1"], {}, {}, name="pt")
    empty = FiniteCategory([], {}, {}, name="0")
    homs = {("a", "a"): pt, ("b", "b"): pt, ("a", "b"): bz2(), ("b", "a"): empty}

    def on_obj(a, b, c, x, y):
        return x if (a, b) != ("a", "a") or c == "a" else y

    def on_mor(a, b, c, p, q):
        if (a, b, c) == ("a", "a", "a") or (a, b, c) == ("b", "b", "b"):
            return "id:1"
        return p if (a, b) == ("a", "b") else q

    return from_hom_categories(["a", "b"], homs, {"a": "1", "b": "1"}, on_obj, on_mor, D=D, name="2[BZ2]")


def _discrete_homs(C: FiniteCategory) -> SimplicialCategory:
    S = from_category(C)
    S.name = f"s{C.name}"
    return S


def kan_enriched(D: int = 4) -> list:
    return [_discrete_homs(chain2()), _discrete_homs(z2()), fattened(parallel_pair(), D), z2_two_group(D),
            suspended_bz2(D)]


def max_monoid(D: int = 4) -> SimplicialCategory:
    """One object whose endomorphisms form the poset ``0 <= 1`` with ``max``
    as composition: enriched in quasi-categories but not in Kan complexes."""
    P = FiniteCategory([0, 1], {"<": (0, 1)}, {}, identities={0: "=0", 1: "=1"}, name="[1]")

    def on_mor(a, b, c, p, q):
        s = max(P.src(p), P.src(q))
        t = max(P.tgt(p), P.tgt(q))
        return "<" if s < t else ("=1" if s else "=0")

    return from_hom_categories(["*"], {("*", "*"): P}, {"*": 0}, lambda a, b, c, x, y: max(x, y), on_mor,
                               D=D, name="max")


# -- Grothendieck instances ---------------------------------------------------

def point() -> FiniteCategory:
    return FiniteCategory(["0"], {}, {}, name="pt")


def _functor(S, T, objs, morphs=None, name=""):
    from .category import FiniteFunctor
    return FiniteFunctor(S, T, objs, morphs or {}, name=name)


def groth_collapse():
    """Over ``a -> b``: the walking isomorphism collapsed onto one end of an arrow."""
    from .grothendieck import Grothendieck
    B, Fa, Fb = arrow(), walking_iso(), FiniteCategory(["0", "1"], {"u": ("0", "1")}, {}, name="[1]")
    Ff = _functor(Fa, Fb, {"a": "0", "b": "0"}, {"i": "id:0", "j": "id:0"}, name="collapse")
    return Grothendieck(B, {"a": Fa, "b": Fb}, {"f": Ff}, name="G_collapse")


def groth_chain():
    """Over ``a -> b -> c``: ``[1]`` sent into the walking isomorphism, then to a point."""
    from .grothendieck import Grothendieck
    B = chain2()
    Fa = FiniteCategory(["0", "1"], {"u": ("0", "1")}, {}, name="[1]")
    Fb, Fc = walking_iso(), point()
    f = _functor(Fa, Fb, {"0": "a", "1": "b"}, {"u": "i"}, name="F(f)")
    g = _functor(Fb, Fc, {"a": "0", "b": "0"}, {"i": "id:0", "j": "id:0"}, name="F(g)")
    h = _functor(Fa, Fc, {"0": "0", "1": "0"}, {"u": "id:0"}, name="F(h)")
    return Grothendieck(B, {"a": Fa, "b": Fb, "c": Fc}, {"f": f, "g": g, "h": h}, name="G_chain")


def groth_swap():
    """``Z/2`` acting on two points by the swap."""
    from .grothendieck import Grothendieck
    B = z2()
    F = FiniteCategory(["x", "y"], {}, {}, name="2pt")
    t = _functor(F, F, {"x": "y", "y": "x"}, name="swap")
    return Grothendieck(B, {"*": F}, {"t": t}, name="G_swap")


def groth_span():
    """Over the span ``b <- a -> c``: a parallel pair mapped to an arrow and to a point."""
    from .grothendieck import Grothendieck
    B = span()
    Fa = FiniteCategory(["0", "1"], {"p": ("0", "1"), "q": ("0", "1")}, {}, name="par")
    Fb = FiniteCategory(["0", "1"], {"u": ("0", "1")}, {}, name="[1]")
    Fc = point()
    f = _functor(Fa, Fb, {"0": "0", "1": "1"}, {"p": "u", "q": "u"}, name="F(f)")
    g = _functor(Fa, Fc, {"0": "0", "1": "0"}, {"p": "id:0", "q": "id:0"}, name="F(g)")
    return Grothendieck(B, {"a": Fa, "b": Fb, "c": Fc}, {"f": f, "g": g}, name="G_span")


def groth_iso_chain():
    """Over ``a -> b -> c``: ``[1]`` into the walking isomorphism, then its swap."""
    from .grothendieck import Grothendieck
    B = chain2()
    Fa = FiniteCategory(["0", "1"], {"u": ("0", "1")}, {}, name="[1]")
    Fb, Fc = walking_iso(), walking_iso()
    f = _functor(Fa, Fb, {"0": "a", "1": "b"}, {"u": "i"}, name="F(f)")
    g = _functor(Fb, Fc, {"a": "b", "b": "a"}, {"i": "j", "j": "i"}, name="swap")
    h = _functor(Fa, Fc, {"0": "b", "1": "a"}, {"u": "j"}, name="F(h)")
    return Grothendieck(B, {"a": Fa, "b": Fb, "c": Fc}, {"f": f, "g": g, "h": h}, name="G_iso")


def grothendieck_instances() -> list:
    return [groth_collapse(), groth_chain(), groth_swap(), groth_span(), groth_iso_chain()]


def simplicial_sets() -> dict:
    from .constructions import boundary, horn, standard
    out = {f"D{n}": standard(n) for n in range(5)}
    out.update({f"bdD{n}": boundary(n) for n in range(1, 5)})
    out.update({f"L{n},{k}": horn(n, k) for n in range(1, 5) for k in range(n + 1)})
    return out


def named(name: str, D: int = 4):
    """Look up a corpus object by name: a simplicial set, a category, a
    simplicially enriched category or a Grothendieck construction."""
    sets = simplicial_sets()
    if name in sets:
        return sets[name]
    for C in categories():
        if C.name == name:
            return C
    for C in kan_enriched(D) + [max_monoid(D)]:
        if C.name == name:
            return C
    for G in grothendieck_instances():
        if G.name == name:
            return G
    raise KeyError(f"no corpus object named {name!r}")


def names(D: int = 4) -> list:
    return (list(simplicial_sets()) + [C.name for C in categories()]
            + [C.name for C in kan_enriched(D) + [max_monoid(D)]] + [G.name for G in grothendieck_instances()])
