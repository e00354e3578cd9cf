"""Lifting problems, inner fibrations, isofibrations and cocartesian
fibrations of finite simplicial sets, and the comprehension of a
cocartesian fibration in low dimensions.

Every search runs depth first in canonical cell order, so witnesses are
deterministic.  Among the cocartesian lifts of an edge the canonical one is
degenerate if possible and otherwise has the smallest cell order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import operators as ops
from .constructions import horn, product, pullback, standard
from .hcat import components, homotopy_category
from .homspace import comma, hom
from .sset import SimplicialMap, SimplicialSet, enumerate_maps, first_map, identity_map, inclusion


class LiftingError(ValueError):
    """A required lift does not exist; ``problem`` describes where."""

    def __init__(self, message, problem=None):
        super().__init__(message)
        self.problem = problem


# -- lifting problems ---------------------------------------------------------

@dataclass
class LiftingProblem:
    """The square ``I -> E``, ``J -> B`` with ``I -> J`` an inclusion."""

    inclusion: SimplicialMap
    bottom: SimplicialMap
    top: SimplicialMap
    p: SimplicialMap

    def commutes(self) -> bool:
        return all(self.p.apply(self.top.assignment[c]) == self.bottom.apply(self.inclusion.assignment[c])
                   for c in self.inclusion.source.dim_of)

    def fixed(self) -> dict:
        return {self.inclusion.assignment[c][1]: self.top.assignment[c] for c in self.inclusion.source.dim_of}


@dataclass
class FillerWitness:
    problem: LiftingProblem
    lift: Optional[SimplicialMap]
    extensions_ignoring_base: Optional[int] = None

    @property
    def found(self) -> bool:
        return self.lift is not None

    def verify(self) -> list[str]:
        """Re-check the lift, or the exhaustion record."""
        P = self.problem
        if self.lift is None:
            n = sum(1 for a in enumerate_maps(P.bottom.source, P.p.source, fixed=P.fixed())
                    if all(P.p.apply(a[c]) == P.bottom.assignment[c] for c in a))
            return [] if n == 0 else [f"{n} lifts exist"]
        problems = self.lift.check()
        for c, v in P.fixed().items():
            if self.lift.assignment[c] != v:
                problems.append(f"lift does not extend the top map at {c!r}")
        for c in P.bottom.source.dim_of:
            if P.p.apply(self.lift.assignment[c]) != P.bottom.assignment[c]:
                problems.append(f"lift does not project to the bottom map at {c!r}")
        return problems


def solve_lift(problem: LiftingProblem) -> FillerWitness:
    if not problem.commutes():
        raise ValueError("lifting problem does not commute")
    J, E = problem.bottom.source, problem.p.source
    a = first_map(J, E, fixed=problem.fixed(), over=(problem.p, problem.bottom))
    if a is not None:
        return FillerWitness(problem, SimplicialMap(J, E, a, name="lift"))
    n = sum(1 for _ in enumerate_maps(J, E, fixed=problem.fixed()))
    return FillerWitness(problem, None, extensions_ignoring_base=n)


# -- horn lifting -------------------------------------------------------------

def horn_report(p: SimplicialMap, n: int, k: int, fixed: Optional[dict] = None,
                witnesses: bool = False) -> dict:
    """Right lifting of ``p`` against ``horn(n, k) -> standard(n)``.

    Every map of the horn into the total space (agreeing with ``fixed``) and
    every extension of its image to an ``n``-simplex of the base is tried.
    """
    E, B = p.source, p.target
    H, S = horn(n, k), standard(n)
    order = S.closure_order()
    horn_order = [c for c in order if c in H.dim_of]
    count, found = 0, []
    for h in enumerate_maps(H, E, fixed=fixed, order=horn_order):
        base_given = {c: p.apply(v) for c, v in h.items()}
        for sigma in enumerate_maps(S, B, order=order, given=base_given):
            count += 1
            b = SimplicialMap(S, B, sigma)
            lift = first_map(S, E, over=(p, b), order=order, given=h)
            if lift is None:
                return {"n": n, "k": k, "problems": count, "failure": {"horn": h, "base": sigma}}
            if witnesses:
                found.append(lift)
    out = {"n": n, "k": k, "problems": count, "failure": None}
    if witnesses:
        out["witnesses"] = found
    return out


def _lifting_report(p, D, pairs_nk, kind):
    runs = []
    for n, k in pairs_nk:
        r = horn_report(p, n, k)
        runs.append(r)
        if r["failure"] is not None:
            return {"kind": kind, "D": D, "ok": False, "runs": runs, "failure": r}
    return {"kind": kind, "D": D, "ok": True, "runs": runs, "failure": None}


def is_inner_fibration(p: SimplicialMap, D: int = 3) -> dict:
    return _lifting_report(p, D, [(n, k) for n in range(2, D + 1) for k in range(1, n)], "inner")


def is_right_fibration(p: SimplicialMap, D: int = 3) -> dict:
    return _lifting_report(p, D, [(n, k) for n in range(1, D + 1) for k in range(1, n + 1)], "right")


def is_left_fibration(p: SimplicialMap, D: int = 3) -> dict:
    return _lifting_report(p, D, [(n, k) for n in range(1, D + 1) for k in range(0, n)], "left")


def is_isofibration(p: SimplicialMap, D: int = 3) -> dict:
    """Inner fibration, and every invertible edge of the base lifts to an
    invertible edge at each vertex over its source."""
    rep = is_inner_fibration(p, D)
    rep["kind"] = "iso"
    if not rep["ok"]:
        return rep
    E, B = p.source, p.target
    hB, hE = homotopy_category(B), homotopy_category(E)
    for beta in B.simplices(1):
        if not hB.edge_invertible(beta):
            continue
        a = B.act(beta, (0,))
        for e in E.simplices(0):
            if p.apply(e) != a:
                continue
            if not any(E.act(x, (0,)) == e and p.apply(x) == beta and hE.edge_invertible(x)
                       for x in E.simplices(1)):
                rep["ok"] = False
                rep["failure"] = {"edge": beta, "vertex": e}
                return rep
    return rep


# -- cocartesian fibrations ---------------------------------------------------

class Fibration:
    """A map ``p : E -> B`` with cached cocartesian-edge tests through ``D``."""

    def __init__(self, p: SimplicialMap, D: int = 3):
        self.p, self.E, self.B, self.D = p, p.source, p.target, D
        self._cocart = {}
        self._fibres = {}

    def is_cocartesian(self, chi) -> bool:
        hit = self._cocart.get(chi)
        if hit is None:
            hit = self.cocartesian_report(chi)["ok"]
            self._cocart[chi] = hit
        return hit

    def cocartesian_report(self, chi) -> dict:
        """Lifting against ``horn(n, 0)`` for ``2 <= n <= D`` with the
        initial edge sent to ``chi``."""
        runs = []
        for n in range(2, self.D + 1):
            r = horn_report(self.p, n, 0, fixed={(0, 1): chi})
            runs.append(r)
            if r["failure"] is not None:
                return {"edge": chi, "ok": False, "runs": runs, "failure": r}
        return {"edge": chi, "ok": True, "runs": runs, "failure": None}

    def edges_over(self, beta, e=None) -> list:
        """Edges over ``beta`` starting at ``e``, in canonical order."""
        E = self.E
        out = [x for x in E.simplices(1) if self.p.apply(x) == beta and (e is None or E.act(x, (0,)) == e)]
        out.sort(key=lambda x: (ops.is_identity(x[0]), E.order[x[1]], x[0]))
        return out

    def cocartesian_lift(self, beta, e):
        """The canonical cocartesian lift of ``beta`` at ``e`` or ``None``."""
        for x in self.edges_over(beta, e):
            if self.is_cocartesian(x):
                return x
        return None

    def fibre(self, b):
        """The strict fibre over the vertex ``b`` and its inclusion."""
        hit = self._fibres.get(b)
        if hit is None:
            E, p = self.E, self.p
            F = E.where(lambda c: p.apply(E.cell(c)) == (ops.const(0, E.dim_of[c]), b), name=f"E_{b}")
            hit = (F, inclusion(F, E, name=f"l_{b}"))
            self._fibres[b] = hit
        return hit


def is_cocartesian_edge(p, chi, D: int = 3) -> dict:
    fib = p if isinstance(p, Fibration) else Fibration(p, D)
    return fib.cocartesian_report(chi)


def is_cocartesian_fibration(p, D: int = 3) -> dict:
    fib = p if isinstance(p, Fibration) else Fibration(p, D)
    rep = is_isofibration(fib.p, D)
    out = {"kind": "cocartesian", "D": D, "isofibration": rep["ok"], "lifts": {}, "ok": rep["ok"],
           "failure": rep["failure"]}
    if not rep["ok"]:
        return out
    E, B = fib.E, fib.B
    for beta in B.simplices(1):
        a = B.act(beta, (0,))
        for e in E.simplices(0):
            if fib.p.apply(e) != a:
                continue
            chi = fib.cocartesian_lift(beta, e)
            if chi is None:
                out["ok"] = False
                out["failure"] = {"edge": beta, "vertex": e}
                return out
            out["lifts"][(beta, e)] = chi
    return out


def closure_report(fib: Fibration) -> dict:
    """Composition, right cancellation and conservativity of cocartesian
    edges over every 2-simplex of the total space, and invertible edges
    being cocartesian."""
    E = fib.E
    hE, hB = homotopy_category(E), homotopy_category(fib.B)
    bad = []
    count = 0
    for s in E.simplices(2):
        d0, d1, d2 = E.faces_of(s)
        c0, c1, c2 = (fib.is_cocartesian(x) for x in (d0, d1, d2))
        count += 1
        if c2 and c0 and not c1:
            bad.append(("compose", s))
        if c2 and c1 and not c0:
            bad.append(("cancel", s))
    for x in E.simplices(1):
        if hE.edge_invertible(x) and not fib.is_cocartesian(x):
            bad.append(("invertible-not-cocartesian", x))
        if fib.is_cocartesian(x) and hB.edge_invertible(fib.p.apply(x)) and not hE.edge_invertible(x):
            bad.append(("conservative", x))
    return {"triangles": count, "edges": len(E.simplices(1)), "failures": bad, "ok": not bad}


# -- cylinders ----------------------------------------------------------------

def lift_prism(fib: Fibration, Y: SimplicialSet, m: int, base: dict, start: SimplicialMap,
               partial: Optional[dict] = None, P=None) -> tuple:
    """Lift ``Y x Dm -> B`` to ``E`` extending ``start`` on ``Y x {0}``.

    ``base`` is keyed by the cells of ``P = Y x Dm``.  The edges
    ``{y} x <0, j>`` at vertices ``y`` are the canonical cocartesian lifts;
    everything else is the first extension found, one prism ``y x Dm`` at a
    time in skeletal order.  Cells listed in ``partial`` are kept.  Returns
    ``(P, assignment)``.
    """
    P = P or product(Y, standard(m))
    E = fib.E
    b = SimplicialMap(P, fib.B, base)
    assign = dict(partial or {})
    order = P.closure_order()
    blocks = {}
    for c in order:
        blocks.setdefault(c[0][1], []).append(c)
    for c in P.dim_of:
        (e1, y), (e2, ch) = c
        if ch == (0,) and c not in assign:
            assign[c] = start.apply((e1, y))
    for y in Y.closure_order():
        todo = {c for c in blocks.get(y, ()) if c not in assign}
        if not todo:
            continue
        if Y.dim_of[y] == 0:
            ey = assign[((0,), y), ((0,), (0,))]
            for j in range(1, m + 1):
                cell = (((0, 0), y), ((0, 1), (0, j)))
                chi = fib.cocartesian_lift(base[cell], ey)
                if chi is None:
                    raise LiftingError(f"no cocartesian lift at {y!r} towards vertex {j}",
                                       problem={"edge": base[cell], "vertex": ey})
                assign[cell] = chi
                assign[(((0,), y), ((0,), (j,)))] = E.act(chi, (1,))
        a = first_map(P, E, over=(fib.p, b), order=[c for c in order if c in todo or c in assign],
                      given=assign)
        if a is None:
            raise LiftingError(f"prism over {y!r} cannot be filled", problem={"cell": y})
        assign = a
    return P, assign


def cylinder_extension(fib: Fibration, Y: SimplicialSet, base: dict, start: SimplicialMap,
                       partial: Optional[dict] = None, P=None) -> tuple:
    """A pointwise cocartesian cylinder ``Y x D1 -> E``; see :func:`lift_prism`."""
    P, a = lift_prism(fib, Y, 1, base, start, partial, P=P)
    for y in Y.cells_of(0):
        if not fib.is_cocartesian(a[(((0, 0), y), ((0, 1), (0, 1)))]):
            raise LiftingError(f"cylinder edge at {y!r} is not cocartesian")
    return P, a


def prism_base(P, B: SimplicialSet, sigma) -> dict:
    """``Y x Dm -> Dm -> B`` for an ``m``-simplex ``sigma``."""
    return {c: B.act(sigma, tuple(c[1][1][i] for i in c[1][0])) for c in P.dim_of}


def end_map(P, a: dict, E: SimplicialSet, target: SimplicialSet, j: int, name: str = "") -> SimplicialMap:
    """Restriction of a prism map to ``Y x {j}``, corestricted to ``target``."""
    Y = P.left
    out = {}
    for c in Y.dim_of:
        eta, key = P.pair(Y.cell(c), (ops.const(0, Y.dim_of[c]), (j,)))
        v = E.act(a[key], eta)
        if v[1] not in target.dim_of:
            raise LiftingError(f"prism end at {c!r} leaves {target.name}")
        out[c] = v
    return SimplicialMap(Y, target, out, name=name)


# -- comprehension ------------------------------------------------------------

def fibre(p, b, D: int = 3):
    fib = p if isinstance(p, Fibration) else Fibration(p, D)
    return fib.fibre(b)


@dataclass
class Comprehension:
    """``E_f : E_a -> E_b`` with the cylinder it was read off from."""

    edge: tuple
    functor: SimplicialMap
    prism: object = None
    assignment: dict = field(default_factory=dict)


def comprehension_edge(fib: Fibration, f) -> Comprehension:
    B = fib.B
    a, b = B.act(f, (0,))[1], B.act(f, (1,))[1]
    Ea, la = fib.fibre(a)
    Eb, _ = fib.fibre(b)
    P = product(Ea, standard(1))
    P, asg = cylinder_extension(fib, Ea, prism_base(P, B, f), la, P=P)
    return Comprehension(f, end_map(P, asg, fib.E, Eb, 1, name=f"E[{f}]"), P, asg)


def natural_iso_in_h(F: SimplicialMap, G: SimplicialMap, H=None) -> Optional[dict]:
    """Invertible classes ``alpha_x : F x -> G x`` in ``h`` of the common
    target, natural on the edges of the source; ``None`` if none exist."""
    X, Y = F.source, F.target
    H = H or homotopy_category(Y)
    verts = X.cells_of(0)
    edges = [X.cell(c) for c in X.cells_of(1)]
    choice = {}

    def ok(x):
        for e in edges:
            s, t = X.act(e, (0,))[1], X.act(e, (1,))[1]
            if s in choice and t in choice and x in (s, t):
                fe, ge = H.class_of[F.apply(e)], H.class_of[G.apply(e)]
                if H.table.get((fe, choice[t])) != H.table.get((choice[s], ge)):
                    return False
        return True

    def rec(i):
        if i == len(verts):
            return True
        x = verts[i]
        a, b = F.apply(X.cell(x)), G.apply(X.cell(x))
        for m in H.morphisms(a[1], b[1]):
            if H.is_invertible(m):
                choice[x] = m
                if ok(x) and rec(i + 1):
                    return True
                del choice[x]
        return False

    return dict(choice) if rec(0) else None


def functors_equal_in_h(F: SimplicialMap, G: SimplicialMap, H=None) -> bool:
    H = H or homotopy_category(F.target)
    X = F.source
    return all(F.apply(X.cell(c)) == G.apply(X.cell(c)) for c in X.cells_of(0)) and \
        all(H.class_of[F.apply(X.cell(c))] == H.class_of[G.apply(X.cell(c))] for c in X.cells_of(1))


# -- comparisons with the Grothendieck oracle ---------------------------------

def fibre_matches_nerve(G, fib: Fibration, b, D: int = 3) -> list[str]:
    """``E_b`` is exactly the image of ``N(F b)`` under the fibre inclusion."""
    Eb, _ = fib.fibre((0, b))
    N, incl = G.fibre_nerve(b, D)
    problems = incl.check()
    if not incl.is_injective():
        problems.append("fibre inclusion is not injective")
    if incl.image_cells() != set(Eb.dim_of):
        problems.append(f"image of N(F {b}) differs from the fibre over {b}")
    return problems


def transport_matches_nerve(G, fib: Fibration, f, comp: Comprehension = None, D: int = 3) -> list[str]:
    """``E_f . incl_a == incl_b . N(F f)`` on every cell."""
    from .category import morphism_edge, nerve_map
    a, b = G.base.ends[f]
    comp = comp or comprehension_edge(fib, morphism_edge(G.base, f))
    Na, ia = G.fibre_nerve(a, D)
    Nb, ib = G.fibre_nerve(b, D)
    NF = nerve_map(G.F(f), Na, Nb)
    return [f"cell {c!r}" for c in Na.dim_of
            if comp.functor.apply(ia.assignment[c]) != ib.apply(NF.assignment[c])]


def composition_in_h(fib: Fibration, f, g) -> dict:
    """Compare ``E_{g.f}`` with ``E_g . E_f`` in the homotopy category of
    the final fibre."""
    B = fib.B
    gf = _composite_edge(B, f, g)
    Ef, Eg, Egf = (comprehension_edge(fib, x).functor for x in (f, g, gf))
    both = Ef.then(Eg)
    H = homotopy_category(Egf.target)
    return {"equal": functors_equal_in_h(Egf, both, H),
            "natural_iso": natural_iso_in_h(Egf, both, H) is not None}


def _composite_edge(B: SimplicialSet, f, g):
    for s in B.simplices(2):
        if B.act(s, (0, 1)) == f and B.act(s, (1, 2)) == g:
            return B.act(s, (0, 2))
    raise LiftingError(f"no 2-simplex composes {f} and {g}")


# -- change of base -----------------------------------------------------------

def change_of_base(fib: Fibration, u: SimplicialMap, D: int = 3) -> dict:
    """Pull ``p`` back along ``u : B' -> B`` and check that the result is a
    cocartesian fibration whose cocartesian edges are exactly those sent to
    cocartesian edges, and that its comprehension agrees with the restricted
    comprehension up to natural isomorphism in ``h``."""
    P, q, r = pullback(u, fib.p, name="pullback")
    pb = Fibration(q, D)
    rep = is_cocartesian_fibration(pb, D)
    mismatched = [e for e in P.simplices(1) if pb.is_cocartesian(e) != fib.is_cocartesian(r.apply(e))]
    comprehension = {}
    for f in u.source.simplices(1):
        Ef = comprehension_edge(pb, f).functor
        Euf = comprehension_edge(fib, u.apply(f)).functor
        ra = SimplicialMap(Ef.source, Euf.source, {c: r.assignment[c] for c in Ef.source.dim_of})
        rb = SimplicialMap(Ef.target, Euf.target, {c: r.assignment[c] for c in Ef.target.dim_of})
        comprehension[f] = natural_iso_in_h(Ef.then(rb), ra.then(Euf)) is not None
    return {"pullback": P, "projection": q, "cocartesian": rep["ok"], "mismatched_edges": mismatched,
            "comprehension": comprehension,
            "ok": rep["ok"] and not mismatched and all(comprehension.values())}


# -- low dimensional extensions -----------------------------------------------

def outer_horn_extension_lowdim(fib: Fibration, sigma, n: int) -> dict:
    """Comprehension data over an ``(n-1)``-simplex ``sigma`` of the base.

    ``n = 1``: the fibre with its inclusion.  ``n = 2``: the cylinder of the
    edge, giving ``l_b . E_f``.  ``n = 3``: a lift of ``E_a x D2`` with
    cocartesian edges out of vertex 0; its comparison
    ``E_{12} E_{01} => E_{02}`` is read off from 2-simplices over the
    degenerate edge at vertex 2 and certified invertible pointwise.
    """
    if n not in (1, 2, 3):
        raise ValueError("only n = 1, 2, 3 are supported")
    E, B = fib.E, fib.B
    if n == 1:
        Eb, lb = fib.fibre(B.act(sigma, (0,))[1])
        return {"n": 1, "fibre": Eb, "inclusion": lb, "pullback": _is_strict_fibre(fib, Eb), "ok": True}
    a = B.act(sigma, (0,))[1]
    Ea, la = fib.fibre(a)
    P = product(Ea, standard(n - 1))
    P, asg = lift_prism(fib, Ea, n - 1, prism_base(P, B, sigma), la, P=P)
    if n == 2:
        end = end_map(P, asg, E, E, 1, name="l_b E_f")
        return {"n": 2, "prism": asg, "end": end, "ok": True}
    c = B.act(sigma, (2,))[1]
    Ec, _ = fib.fibre(c)
    E02 = end_map(P, asg, E, Ec, 2, name="E02")
    E12 = comprehension_edge(fib, B.act(sigma, (1, 2)))
    hyp = {
        "nadir_cocartesian": all(fib.is_cocartesian(asg[(((0, 0), y), ((0, 1), (0, j)))])
                                 for y in Ea.cells_of(0) for j in (1, 2)),
        "fibre_is_pullback": _is_strict_fibre(fib, Ec),
        "last_edge_cocartesian": all(fib.is_cocartesian(asg[(((0, 0), y), ((0, 1), (1, 2)))])
                                     for y in Ea.cells_of(0)),
    }
    H = homotopy_category(Ec)
    S = standard(2)
    components_ = {}
    for y in Ea.cells_of(0):
        mid = asg[(((0, 0), y), ((0, 1), (0, 1)))]
        x1 = E.act(mid, (1,))
        kappa = fib.cocartesian_lift(B.act(sigma, (1, 2)), x1)
        base = {k: B.act(sigma, tuple((1, 2, 2)[i] for i in k)) for k in S.dim_of}
        tri = first_map(S, E, fixed={(0, 1): kappa, (0, 2): asg[(((0, 0), y), ((0, 1), (1, 2)))]},
                        over=(fib.p, SimplicialMap(S, B, base)))
        if tri is None:
            return {"n": 3, "hypotheses": hyp, "ok": False, "failure": y}
        components_[y] = tri[(1, 2)]
    invertible = {y: H.edge_invertible(e) for y, e in components_.items()}
    hB = homotopy_category(B)
    return {"n": 3, "hypotheses": hyp, "E02": E02, "E12": E12.functor, "components": components_,
            "invertible": invertible, "base_invertible": hB.edge_invertible(B.act(sigma, (2, 2))),
            "ok": all(hyp.values()) and all(invertible.values())}


def _is_strict_fibre(fib: Fibration, Eb) -> bool:
    """The fibre agrees cell for cell with the pullback along the vertex."""
    b = next(iter(Eb.cells_of(0)), None)
    if b is None:
        return True
    bv = fib.p.apply(Eb.cell(b))[1]
    pt = standard(0)
    P, _, r = pullback(SimplicialMap(pt, fib.B, {(0,): ((0,), bv)}), fib.p)
    return {k[1][1] for k in P.dim_of} == set(Eb.dim_of)


# -- external action ----------------------------------------------------------

def external_action(fib: Fibration, a, b, D: int = 1) -> dict:
    """The action ``(a | b) x E_a -> E_b`` from a cocartesian cylinder over
    the canonical 2-cell of the hom-space, and its value on vertices."""
    E, B = fib.E, fib.B
    Hs = hom(B, a, b, D)
    Ea, la = fib.fibre(a)
    Eb, _ = fib.fibre(b)
    Y = product(Hs.sset.skeleton(D), Ea.skeleton(D))
    P = product(Y, standard(1))
    base = {}
    for c in P.dim_of:
        (e1, y), (e2, ch) = c
        hs, xs = Y.split(Y.act(Y.cell(y), e1))
        base[c] = Hs.evaluate(hs, tuple(ch[i] for i in e2))
    start = SimplicialMap(Y, E, {y: Y.split(Y.cell(y))[1] for y in Y.dim_of})
    P, asg = cylinder_extension(fib, Y, base, start, P=P)
    m = end_map(P, asg, E, Eb, 1, name="m")
    tilde = {}
    for g in Hs.sset.cells_of(0):
        gs = Hs.sset.cell(g)
        tilde[g] = SimplicialMap(Ea, Eb, {c: m.apply(Y.pair(Hs.sset.act(gs, ops.const(0, Ea.dim_of[c])),
                                                           Ea.cell(c))) for c in Ea.dim_of if Ea.dim_of[c] <= D},
                                 name=f"m~{g}")
    hEb = homotopy_category(Eb)
    invertible = True
    for g in Hs.sset.cells_of(1):
        for x in Ea.cells_of(0):
            v = m.apply(Y.pair(Hs.sset.cell(g), Ea.act(Ea.cell(x), (0, 0))))
            invertible &= hEb.edge_invertible(v)
    return {"hom": Hs, "action": m, "on_vertices": tilde, "hom_edges_act_invertibly": invertible}


# -- Yoneda -------------------------------------------------------------------

def yoneda_object(A: SimplicialSet, a, D: int = 3, hom_sizes: Optional[dict] = None) -> dict:
    """``A | a -> A`` with a right fibration report and the number of path
    components of each fibre (compared with ``hom_sizes`` when given)."""
    C = comma(identity_map(A), SimplicialMap(standard(0), A, {(0,): ((0,), a)}, name=str(a)), D)
    p0, _ = C.projections()
    rep = is_right_fibration(p0, D)
    fib = Fibration(p0, D)
    pi0 = {}
    for x in A.cells_of(0):
        F, _ = fib.fibre(x)
        pi0[x] = len(components(F))
    out = {"comma": C, "projection": p0, "right_fibration": rep["ok"], "failure": rep["failure"],
           "fibre_pi0": pi0}
    if hom_sizes is not None:
        out["matches_hom_sets"] = all(pi0[x] == hom_sizes[x] for x in pi0)
    return out


def pullback_matches_restriction(G, u, D: int = 3) -> list[str]:
    """``N int (F . u)`` is isomorphic to the pullback of ``N int F`` along
    ``N u``, by the map pairing the projection with ``int u``."""
    from .category import nerve_map, nerve_of_category, nerve_string
    from .constructions import isomorphic_via
    E, B, p = G.nerves(D)
    Bp = nerve_of_category(u.source, D)
    P, _, _ = pullback(nerve_map(u, Bp, B), p)
    G2 = G.restrict(u)
    T2, T = G2.total(), G.total()
    N2 = nerve_of_category(T2, D)
    a = {}
    for key in N2.dim_of:
        n, payload = key
        if n == 0:
            b, x = payload
            a[key] = P.pair(((0,), (0, b)), ((0,), (0, (u.on_objects[b], x))))
            continue
        objs = [T2.src(payload[0])] + [T2.tgt(m) for m in payload]
        base = nerve_string(u.source, [o[0] for o in objs], [m[0] for m in payload])
        up = nerve_string(T, [(u.on_objects[o[0]], o[1]) for o in objs],
                          [(u(m[0]), m[1], m[2]) for m in payload])
        a[key] = P.pair(base, up)
    return isomorphic_via(SimplicialMap(N2, P, a, name="comparison"))
