"""The acceptance checks, shared by the test-suite and ``necklace verify``.

Each check returns a :class:`Report`.  Checks are deterministic; the only
nondeterministic field is the wall time.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Callable

from . import operators as ops
from .category import FiniteFunctor, morphism_edge, nerve_map, nerve_of_category, nerve_string
from .coherent import (Flag, bead_shapes, cube_iso, decompose, distinguished_complex,
                       flag_compose, flag_cube_simplex, insert_one, is_atomic, s_map,
                       simplex_computad, t_map, two_cat_map, u_map, v_map, w_map, word_flag)
from .constructions import (boundary, chain_simplex, cube, cube_boundary, cube_horn, horn, isomorphic_via,
                            standard)
from .corpus import arrow, categories, groth_chain, groth_iso_chain, grothendieck_instances, kan_enriched
from .fibration import (Fibration, change_of_base, closure_report, composition_in_h, fibre_matches_nerve,
                        is_cocartesian_fibration, outer_horn_extension_lowdim, pullback_matches_restriction, transport_matches_nerve,
                        yoneda_object)
from .hcat import components
from .homspace import (fun_to_rhom, hom, homotopy_discrete, is_epimorphism, left_hom, pi0_map_is_bijection,
                       right_hom, u_comparison, u_prism)
from .nerve import coherent_nerve, from_category, inner_horn_fill, opposite_nerve_map
from .sset import SimplicialMap, enumerate_maps


@dataclass
class Report:
    id: str
    title: str
    status: str = "fail"
    dims: str = ""
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def record(self) -> dict:
        return {"id": self.id, "title": self.title, "status": self.status, "dims": self.dims,
                "detail": self.detail}

    def line(self) -> str:
        return f"{self.status.upper():4}  {self.id:24} {self.title} [{self.dims}] ({self.seconds:.2f}s)"


# -- coherent simplices -------------------------------------------------------

def check_cube_iso(N: int = 5) -> Report:
    """``Fun(k, l)`` of the coherent ``n``-simplex is a cube, with composition
    given by inserting a 1."""
    rep = Report("cube-iso", "function complexes of coherent simplices are cubes", dims=f"n<={N}")
    bad = []
    checked = complexes = 0
    for n in range(1, N + 1):
        S = simplex_computad(n)
        funs = {}
        for k in range(n + 1):
            for l in range(k + 1, n + 1):
                X = S.fun(k, l, l - k - 1)
                funs[(k, l)] = X
                f = SimplicialMap(X, cube(l - k - 1), {w: flag_cube_simplex(word_flag(w)) for w in X.dim_of})
                problems = isomorphic_via(f)
                # the poset model of the same complex must agree
                problems += isomorphic_via(cube_iso(k, l))
                checked += 1
                complexes += 1
                if problems:
                    bad.append((n, k, l, problems[0]))
        for k, m, l in combinations(range(n + 1), 3):
            for r in range(min(m - k, l - m)):
                for x in funs[(k, m)].simplices(r):
                    wx = S.act(x[1], x[0])
                    cx = [_vertex(word_flag(wx), t) for t in range(r + 1)]
                    for y in funs[(m, l)].simplices(r):
                        wy = S.act(y[1], y[0])
                        cy = [_vertex(word_flag(wy), t) for t in range(r + 1)]
                        got = flag_cube_simplex(word_flag(S.compose(wx, wy)))
                        want = chain_simplex([insert_one(a, b) for a, b in zip(cx, cy)])
                        checked += 1
                        if got != want:
                            bad.append((n, k, m, l, "composition"))
    rep.detail = {"checked": checked, "complexes": complexes, "failures": bad[:5]}
    rep.status = "pass" if not bad else "fail"
    return rep


def _vertex(f: Flag, t: int) -> tuple:
    S = set(f.sets[t])
    return tuple(int(i in S) for i in range(f.lo + 1, f.hi))


def all_flags(k: int, l: int, r: int) -> list:
    """Every ``r``-arrow ``k -> l`` of the coherent simplex, degenerate ones
    included, by direct enumeration of chains of subsets."""
    inner = list(range(k + 1, l))
    subsets = [tuple(sorted((k, l) + S)) for size in range(len(inner) + 1) for S in combinations(inner, size)]
    out = []
    for seq in combinations_with_replacement(range(len(subsets)), r + 1):
        sets = [subsets[i] for i in seq]
        if all(set(a) <= set(b) for a, b in zip(sets, sets[1:])):
            out.append(Flag(k, l, tuple(sets)))
    return out


def check_computad(N: int = 4, R: int = 3) -> Report:
    """Every arrow of the coherent simplex is a composite of atomic arrows in
    exactly one way, and the presentation by atoms is free."""
    rep = Report("computad", "unique atomic factorization in coherent simplices", dims=f"n<={N}, r<={R}")
    bad, checked = [], 0
    for n in range(1, N + 1):
        S = simplex_computad(n)
        problems = S.check()
        if problems:
            bad.append((n, problems[0]))
        for k in range(n + 1):
            for l in range(k + 1, n + 1):
                for r in range(R + 1):
                    for f in all_flags(k, l, r):
                        checked += 1
                        count = 0
                        inner = list(range(k + 1, l))
                        for size in range(len(inner) + 1):
                            for M in combinations(inner, size):
                                cuts = [k, *M, l]
                                pieces = [_restrict_flag(f, a, b) for a, b in zip(cuts, cuts[1:])]
                                if any(p is None or not is_atomic(p) for p in pieces):
                                    continue
                                g = pieces[0]
                                for p in pieces[1:]:
                                    g = flag_compose(g, p)
                                count += g == f
                        if count != 1:
                            bad.append((n, str(f), count))
                        if [str(p) for p in decompose(f)] != [str(_restrict_flag(f, a, b)) for a, b in
                                                              _cut_pairs(f)]:
                            bad.append((n, str(f), "decompose"))
    rep.detail = {"arrows": checked, "failures": bad[:5]}
    rep.status = "pass" if not bad else "fail"
    return rep


def _restrict_flag(f: Flag, a: int, b: int):
    sets = []
    for S in f.sets:
        if a not in S or b not in S:
            return None
        sets.append(tuple(x for x in S if a <= x <= b))
    return Flag(a, b, tuple(sets))


def _cut_pairs(f: Flag):
    cuts = sorted(f.sets[0])
    return list(zip(cuts, cuts[1:]))


def fubini(m: int) -> int:
    """Number of ordered set partitions of an ``m``-element set."""
    a = [1]
    for j in range(1, m + 1):
        a.append(sum(comb(j, i) * a[j - i] for i in range(1, j + 1)))
    return a[m]


BEAD_COUNTS = {2: 1, 3: 3, 4: 13, 5: 75}


def check_bead_shapes() -> Report:
    rep = Report("bead-shapes", "bead shapes are counted by ordered set partitions", dims="n=2..5")
    got = {n: len(bead_shapes(n)) for n in BEAD_COUNTS}
    oracle = {n: fubini(n - 1) for n in BEAD_COUNTS}
    rep.detail = {"counts": got, "oracle": oracle, "expected": BEAD_COUNTS}
    rep.status = "pass" if got == oracle == BEAD_COUNTS else "fail"
    return rep


def _bead_oracle(X, k: int, l: int, D: int) -> set:
    """Cells of ``cube(l-k-1)`` whose flag factors into atomic pieces each
    of whose largest set spans a simplex of ``X``."""
    out = set()
    for r in range(D + 1):
        for f in all_flags(k, l, r):
            eta, chain = flag_cube_simplex(f)
            if not ops.is_identity(eta):
                continue
            if all(tuple(sorted(p.sets[-1])) in X.dim_of for p in decompose(f)):
                out.add(chain)
    return out


def check_boundary_horns(N: int = 4) -> Report:
    rep = Report("boundary-horn", "realized boundaries and horns are cubical boundaries and horns",
                 dims=f"n<={N}")
    bad, checked = [], 0
    for n in range(2, N + 1):
        subs = [("boundary", None, boundary(n))] + [("horn", k, horn(n, k)) for k in range(n + 1)]
        for kind, k, X in subs:
            for a in range(n + 1):
                for b in range(a + 1, n + 1):
                    cells, injective = distinguished_complex(X, n, a, b)
                    checked += 1
                    if not injective or cells != _bead_oracle(X, a, b, b - a - 1):
                        bad.append((kind, n, k, a, b))
            cells, _ = distinguished_complex(X, n, 0, n)
            if kind == "boundary":
                want = set(cube_boundary(n - 1).dim_of)
            elif k == 0:
                want = set(cube_horn(n - 1, 1, 0).dim_of)
            elif k == n:
                want = set(cube_horn(n - 1, n - 1, 0).dim_of)
            else:
                want = set(cube_horn(n - 1, k, 1).dim_of)
            if cells != want:
                bad.append((kind, n, k, "explicit"))
    rep.detail = {"hom_complexes": checked, "failures": bad[:5]}
    rep.status = "pass" if not bad else "fail"
    return rep


def square_sets() -> list:
    return [standard(0), standard(1), standard(2), standard(3), boundary(2), horn(2, 1)]


def check_comparison_square() -> Report:
    rep = Report("comparison-square", "s . v equals 2[u] . t", dims="D0..D3, bdD2, L2,1")
    out, bad = {}, []
    for U in square_sets():
        w, Rq, t = w_map(U)
        v, J = v_map(U)
        s, SU = s_map(U, source=v.target)
        um = u_map(U, SU)
        t2 = t_map(um.target, join=J)
        problems = v.check() + s.check() + um.check() + t2.check()
        problems += Rq.then(w).agrees_with(t)
        problems += v.then(s).then(two_cat_map(um, source=s.target, target=t2.target)).agrees_with(t2)
        out[U.name] = len(problems)
        if problems:
            bad.append((U.name, problems[0]))
    rep.detail = {"sets": out, "failures": bad[:5]}
    rep.status = "pass" if not bad else "fail"
    return rep


# -- coherent nerves ----------------------------------------------------------

def check_qcat_nerves(D: int = 4) -> Report:
    rep = Report("qcat-nerve", "coherent nerves of Kan-enriched categories fill inner horns", dims=f"n<={D}")
    bad, horns, witnesses = [], {}, {}
    for C in kan_enriched(D):
        Nv = coherent_nerve(C, D)
        X = Nv.sset
        count = 0
        for n in range(2, D + 1):
            for k in range(1, n):
                H = horn(n, k)
                for h in enumerate_maps(H, X):
                    faces = {}
                    for m in range(n + 1):
                        if m != k:
                            faces[m] = Nv.act(*_ez_value(h[tuple(v for v in range(n + 1) if v != m)]))
                    fill, chosen = inner_horn_fill(Nv, faces, n, k)
                    count += 1
                    if fill is None or any(Nv.face(fill, m) != faces[m] for m in faces):
                        bad.append((C.name, n, k))
                    elif (n, k) not in witnesses.setdefault(C.name, {}):
                        witnesses[C.name][(n, k)] = chosen
        horns[C.name] = count
    classical = {}
    for C in categories():
        Nv = coherent_nerve(from_category(C), D)
        N1 = nerve_of_category(C, D)
        same = True
        for n in range(D + 1):
            images = set()
            for s in Nv.all_simplices(n):
                objs = s[0]
                ms = [_edge_morphism(Nv, s, i) for i in range(n)]
                images.add(nerve_string(C, list(objs), ms))
            if n and images != set(N1.simplices(n)):
                same = False
            if len(images) != len(Nv.all_simplices(n)):
                same = False
        classical[C.name] = same
        if not same:
            bad.append((C.name, "classical"))
    rep.detail = {"horns": horns, "classical_nerves_agree": classical, "failures": bad[:5],
                  "witness_cells_chosen": {k: {f"{n},{kk}": c for (n, kk), c in v.items()}
                                           for k, v in witnesses.items()}}
    rep.status = "pass" if not bad else "fail"
    return rep


def _ez_value(s):
    e, key = s
    return key, e


def _edge_morphism(Nv, s, i):
    """The morphism over ``(i, i+1)`` of a simplex of the coherent nerve of a
    1-category (function complexes are discrete)."""
    v = Nv.cube_map(s, i, i + 1)[0]
    return v[1]


def check_nerve_duality(D: int = 4) -> Report:
    rep = Report("nerve-duality", "coherent nerve of the opposite is the opposite nerve", dims=f"n<={D}")
    bad, sizes = [], {}
    cats = kan_enriched(D) + [from_category(C) for C in categories()]
    for C in cats:
        Nv, Nop = coherent_nerve(C, D), coherent_nerve(C.opposite(), D)
        maps = {n: opposite_nerve_map(Nv, Nop, n) for n in range(D + 1)}
        total = 0
        for n in range(D + 1):
            phi = maps[n]
            if len(set(phi.values())) != len(phi) or set(phi.values()) != set(Nop.all_simplices(n)):
                bad.append((C.name, n, "bijection"))
            total += len(phi)
            for s, t in phi.items():
                for i in range(n + 1 if n else 0):
                    if maps[n - 1][Nv.face(s, i)] != Nop.face(t, n - i):
                        bad.append((C.name, n, "face"))
                if n < D:
                    for i in range(n + 1):
                        if maps[n + 1][Nv.degen(s, i)] != Nop.degen(t, n - i):
                            bad.append((C.name, n, "degeneracy"))
        sizes[C.name] = total
    rep.detail = {"simplices": sizes, "failures": bad[:5]}
    rep.status = "pass" if not bad else "fail"
    return rep


# -- hom-spaces ---------------------------------------------------------------

U1_TABLE = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 2}


def check_hom_comparisons(D: int = 2) -> Report:
    rep = Report("hom-comparison", "hom-space comparison maps", dims=f"u: n<=3, homs: dim<={D}")
    bad = []
    tables = {}
    for n in range(4):
        u = u_prism(n)
        table = {}
        for c in u.source.cells_of(0):
            (_, (i,)), (_, (e,)) = c
            table[(i, e)] = u.assignment[c][1][0]
        tables[n] = table
        formula = {(i, e): (i if e == 0 else n + 1) for i in range(n + 1) for e in (0, 1)}
        if table != formula or u.check() or not is_epimorphism(u):
            bad.append(("u", n))
    if tables[1] != U1_TABLE:
        bad.append(("u1", tables[1]))
    discrete = {}
    for C in categories():
        A = nerve_of_category(C, D + 2)
        ok = True
        for a in C.objects:
            for b in C.objects:
                av, bv = (0, a), (0, b)
                k = len(C.hom(a, b))
                H, R, L = hom(A, av, bv, D), right_hom(A, av, bv, D), left_hom(A, av, bv, D)
                u = u_comparison(A, av, bv, D, R, H)
                if not all(homotopy_discrete(X, k)["ok"] for X in (H.sset, R, L)):
                    ok = False
                if u.check() or not u.is_injective() or not pi0_map_is_bijection(u):
                    ok = False
        discrete[C.name] = ok
        if not ok:
            bad.append((C.name, "discrete"))
    injective = {}
    for C in kan_enriched(D + 2):
        Nv = coherent_nerve(C, D + 2)
        ok = True
        for a in C.objects:
            for b in C.objects:
                av, bv = ((a,), ()), ((b,), ())
                R, H = right_hom(Nv.sset, av, bv, D), hom(Nv.sset, av, bv, D)
                f, u = fun_to_rhom(Nv, a, b, D, R), u_comparison(Nv.sset, av, bv, D, R, H)
                if f.check() or u.check() or not f.is_injective() or not u.is_injective():
                    ok = False
        injective[C.name] = ok
        if not ok:
            bad.append((C.name, "injective"))
    rep.detail = {"u_tables_ok": not any(b[0] in ("u", "u1") for b in bad), "homotopy_discrete": discrete,
                  "injective": injective, "failures": bad[:5]}
    rep.status = "pass" if not bad else "fail"
    return rep


# -- fibrations ---------------------------------------------------------------

def check_cocartesian(D: int = 3) -> Report:
    rep = Report("cocartesian-detection", "lifting test for cocartesian edges matches the classical one",
                 dims=f"D={D}")
    bad, per = [], {}
    for G in grothendieck_instances():
        E, B, p = G.nerves(D)
        fib = Fibration(p, D)
        T = G.total()
        mism = [m for m in T.morphisms if fib.is_cocartesian(morphism_edge(T, m)) != G.is_cocartesian_morphism(m)]
        closures = closure_report(fib)
        whole = is_cocartesian_fibration(fib, D)
        per[G.name] = {"edges": len(T.morphisms), "mismatches": len(mism), "closures": closures["ok"],
                       "cocartesian_fibration": whole["ok"], "non_invertible_transition": _has_non_invertible(G)}
        if mism or not closures["ok"] or not whole["ok"]:
            bad.append(G.name)
    if not any(v["non_invertible_transition"] for v in per.values()):
        bad.append("no non-invertible transition")
    rep.detail = {"instances": per, "failures": bad}
    rep.status = "pass" if not bad and len(per) >= 3 else "fail"
    return rep


def _has_non_invertible(G) -> bool:
    for m, T in G.transitions.items():
        if G.base.is_identity(m):
            continue
        objs = T.on_objects
        if len(set(objs.values())) < len(objs) or len(objs) != len(T.target.objects):
            return True
    return False


def change_of_base_cases():
    G = groth_chain()
    return [(G, FiniteFunctor(arrow(), G.base, {"a": "a", "b": "c"}, {"f": "h"}, name="f->h")),
            (G, FiniteFunctor(arrow(), G.base, {"a": "a", "b": "b"}, {"f": "f"}, name="f->f")),
            (G, FiniteFunctor(arrow(), G.base, {"a": "b", "b": "c"}, {"f": "g"}, name="f->g"))]


def check_comprehension(D: int = 3) -> Report:
    rep = Report("comprehension", "comprehension on objects and arrows", dims=f"D={D}")
    bad, per = [], {}
    for G in grothendieck_instances():
        E, B, p = G.nerves(D)
        fib = Fibration(p, D)
        fibres = all(not fibre_matches_nerve(G, fib, b, D) for b in G.base.objects)
        transports = all(not transport_matches_nerve(G, fib, f, D=D) for f in G.base.morphisms)
        comp = True
        for s in B.simplices(2):
            r = composition_in_h(fib, B.act(s, (0, 1)), B.act(s, (1, 2)))
            comp &= r["equal"]
        per[G.name] = {"fibres": fibres, "transports": transports, "composition": comp}
        if not (fibres and transports and comp):
            bad.append(G.name)
    cob = {}
    for G, u in change_of_base_cases():
        E, B, p = G.nerves(D)
        fib = Fibration(p, D)
        r = change_of_base(fib, nerve_map(u, nerve_of_category(u.source, D), B), D)
        iso = not pullback_matches_restriction(G, u, D)
        cob[u.name] = {"cocartesian": r["cocartesian"], "edges_match": not r["mismatched_edges"],
                       "comprehension": all(r["comprehension"].values()), "pullback_is_restriction": iso}
        if not (r["ok"] and iso):
            bad.append(u.name)
    rep.detail = {"instances": per, "change_of_base": cob, "failures": bad}
    rep.status = "pass" if not bad else "fail"
    return rep


def check_conservativity(D: int = 3) -> Report:
    rep = Report("conservativity", "comparison of a coherent triangle of transports is invertible",
                 dims="n=3")
    per, bad = {}, []
    for G in (groth_chain(), groth_iso_chain()):
        E, B, p = G.nerves(D)
        fib = Fibration(p, D)
        sigma = next(s for s in B.simplices(2) if ops.is_identity(s[0]))
        r = outer_horn_extension_lowdim(fib, sigma, 3)
        per[G.name] = {"simplex": repr(sigma), "hypotheses": r.get("hypotheses"),
                       "components": {repr(k): repr(v) for k, v in r.get("components", {}).items()},
                       "invertible": all(r.get("invertible", {}).values()),
                       "base_invertible": r.get("base_invertible")}
        if not (r["ok"] and r.get("base_invertible")):
            bad.append(G.name)
    rep.detail = {"instances": per, "failures": bad}
    rep.status = "pass" if not bad else "fail"
    return rep


def check_yoneda(D: int = 3) -> Report:
    rep = Report("yoneda", "slices over a vertex are right fibrations with hom-set fibres", dims=f"D={D}")
    bad, per = [], {}
    for C in categories():
        A = nerve_of_category(C, D + 1)
        ok = True
        for a in C.objects:
            r = yoneda_object(A, (0, a), D, {(0, x): len(C.hom(x, a)) for x in C.objects})
            ok &= r["right_fibration"] and r["matches_hom_sets"]
        per[C.name] = ok
        if not ok:
            bad.append(C.name)
    for C in kan_enriched(D + 1):
        A = coherent_nerve(C, D + 1).sset
        ok = True
        for a in C.objects:
            sizes = {((x,), ()): len(components(C.hom(x, a))) for x in C.objects}
            r = yoneda_object(A, ((a,), ()), D, sizes)
            ok &= r["right_fibration"] and r["matches_hom_sets"]
        per[C.name] = ok
        if not ok:
            bad.append(C.name)
    rep.detail = {"quasi_categories": per, "failures": bad}
    rep.status = "pass" if not bad else "fail"
    return rep


# -- registry -----------------------------------------------------------------

CHECKS: dict[str, tuple[str, Callable[[], Report]]] = {
    "cube-iso": ("coherent", check_cube_iso),
    "computad": ("coherent", check_computad),
    "bead-shapes": ("coherent", check_bead_shapes),
    "boundary-horn": ("coherent", check_boundary_horns),
    "comparison-square": ("coherent", check_comparison_square),
    "qcat-nerve": ("nerve", check_qcat_nerves),
    "nerve-duality": ("nerve", check_nerve_duality),
    "hom-comparison": ("homspace", check_hom_comparisons),
    "cocartesian-detection": ("fibration", check_cocartesian),
    "comprehension": ("fibration", check_comprehension),
    "conservativity": ("fibration", check_conservativity),
    "yoneda": ("fibration", check_yoneda),
}


def run(ids=None, suite=None) -> list[Report]:
    out = []
    for cid, (group, fn) in CHECKS.items():
        if ids and cid not in ids:
            continue
        if suite and group != suite:
            continue
        t = time.perf_counter()
        try:
            rep = fn()
        except Exception as exc:  # a crash is a failed check, reported as such
            rep = Report(cid, "crashed", status="fail", detail={"error": f"{type(exc).__name__}: {exc}"})
        rep.seconds = time.perf_counter() - t
        out.append(rep)
    return out
