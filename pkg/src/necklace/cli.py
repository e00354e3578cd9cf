"""Command-line interface.

Every subcommand writes line-delimited records, either as canonical JSON
(``--format json``) or as ``key=value`` text.  The exit status is 0 exactly
when every check that was asked for passed.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus
from .category import FiniteCategory, nerve_of_category
from .coherent import format_bead, realize, s_map, t_map, two_cat_map, u_map, v_map, w_map
from .constructions import product
from .exponential import ExponentialOverflow, bounded_exponential
from .grothendieck import Grothendieck, from_json as groth_from_json
from .io import category_from_json, dumps, load, map_from_json, sset_from_json, sset_to_json
from .nerve import SimplicialCategory, coherent_nerve, fills_horns
from .sset import BoundExceeded, SimplicialMap, SimplicialSet


class UsageError(Exception):
    pass


# -- output -------------------------------------------------------------------

def jsonable(x):
    if isinstance(x, dict):
        return {k if isinstance(k, str) else repr(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    if x is None or isinstance(x, (str, int, float, bool)):
        return x
    return repr(x)


class Emitter:
    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout

    def __call__(self, record: dict):
        rec = jsonable(record)
        if self.fmt == "json":
            self.out.write(dumps(rec) + "\n")
        else:
            self.out.write(" ".join(f"{k}={_text(v)}" for k, v in rec.items()) + "\n")


def _text(v) -> str:
    if isinstance(v, str):
        return v if v and " " not in v else json.dumps(v, ensure_ascii=False)
    return dumps(v)


def write_witness(args, name: str, doc):
    if not args.witnesses:
        return None
    os.makedirs(args.witnesses, exist_ok=True)
    path = os.path.join(args.witnesses, f"{name}.json")
    with open(path, "w") as fh:
        fh.write(dumps(jsonable(doc)) + "\n")
    return path


# -- inputs -------------------------------------------------------------------

def load_input(args, which: str = "in", index: int = 0):
    """A corpus object (``--corpus``) or a JSON document (``--in``)."""
    names = getattr(args, "corpus", None) or []
    paths = getattr(args, which, None) or []
    if index < len(names):
        try:
            return corpus.named(names[index], args.D + 1)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if index - len(names) < len(paths):
        path = paths[index - len(names)]
        try:
            doc = load(path)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"{path}: {exc}") from None
        kind = doc.get("kind")
        try:
            if kind == "simplicial_set":
                return sset_from_json(doc)
            if kind == "category":
                return category_from_json(doc)
            if kind == "grothendieck":
                return groth_from_json(doc)
            if kind == "simplicial_map":
                return map_from_json(doc)
        except (KeyError, ValueError) as exc:
            raise UsageError(f"{path}: {exc}") from None
        raise UsageError(f"{path}: unknown document kind {kind!r}")
    raise UsageError("missing input: give --corpus NAME or --in FILE")


def as_sset(obj, D: int) -> SimplicialSet:
    if isinstance(obj, SimplicialSet):
        return obj
    if isinstance(obj, FiniteCategory):
        return nerve_of_category(obj, D)
    if isinstance(obj, SimplicialCategory):
        return coherent_nerve(obj, D).sset
    raise UsageError(f"cannot view {type(obj).__name__} as a simplicial set")


def resolve(obj, X: SimplicialSet, name: str):
    """The vertex of ``X`` named ``name`` and the object it stands for."""
    if isinstance(obj, (FiniteCategory, SimplicialCategory)):
        found = [o for o in obj.objects if str(o) == name]
        if not found:
            known = ", ".join(str(o) for o in obj.objects)
            raise UsageError(f"{name!r} is not an object (objects: {known})")
        o = found[0]
        return ((0, o) if isinstance(obj, FiniteCategory) else ((o,), ())), o
    ids = {str(c): c for c in X.cells_of(0)}
    ids.update({f"c{X.order[c]}": c for c in X.cells_of(0)})
    if name not in ids:
        raise UsageError(f"{name!r} is not a vertex")
    return ids[name], ids[name]


def cell_label(X: SimplicialSet, c) -> str:
    return c if isinstance(c, str) else f"c{X.order[c]}"


# -- subcommands --------------------------------------------------------------

def cmd_realize(args, emit):
    X = as_sset(load_input(args), args.D)
    if X.bound is not None:
        raise UsageError("realize needs a complete finite simplicial set")
    R = realize(X)
    for (c, T), A in R.atoms.items():
        emit({"kind": "atom", "cell": cell_label(X, c), "shape": str(T), "source": cell_label(X, A.src),
              "target": cell_label(X, A.tgt), "dim": A.dim, "bead": format_bead((c, T))})
    emit({"kind": "summary", "objects": len(R.objects), "atoms": len(R.atoms)})
    return True


def cmd_nerve(args, emit):
    obj = load_input(args)
    X = as_sset(obj, args.D)
    emit(sset_to_json(X, labels=True))
    emit({"kind": "summary", "counts": X.counts(), "bound": X.bound})
    return True


def cmd_hom(args, emit):
    from .homspace import fun_to_rhom, hom, homotopy_discrete, left_hom, right_hom, u_comparison
    obj = load_input(args)
    try:
        a, b = args.at.split(",")
    except ValueError:
        raise UsageError("--at expects two vertices a,b") from None
    Nv = coherent_nerve(obj, args.D + 2) if isinstance(obj, SimplicialCategory) else None
    A = Nv.sset if Nv is not None else as_sset(obj, args.D + 2)
    (av, a), (bv, b) = resolve(obj, A, a), resolve(obj, A, b)
    R, H = right_hom(A, av, bv, args.D), hom(A, av, bv, args.D)
    model = {"comma": lambda: H.sset, "right": lambda: R, "left": lambda: left_hom(A, av, bv, args.D)}
    X = model[args.model]()
    emit(sset_to_json(X))
    u = u_comparison(A, av, bv, args.D, R, H)
    ok = _report_map(emit, "HomR->Hom", u)
    if Nv is not None:
        ok &= _report_map(emit, "Fun->HomR", fun_to_rhom(Nv, a, b, args.D, R))
    if isinstance(obj, FiniteCategory):
        r = homotopy_discrete(X, len(obj.hom(a, b)))
        emit({"kind": "homotopy_discrete", **r})
        ok &= r["ok"]
    return ok


def _report_map(emit, name, f) -> bool:
    problems = f.check()
    inj = not problems and f.is_injective()
    emit({"kind": "comparison", "map": name, "valid": not problems, "injective": inj})
    return inj


def cmd_product(args, emit):
    X = as_sset(load_input(args, index=0), args.D)
    Y = as_sset(load_input(args, index=1), args.D)
    P = product(X, Y)
    emit(sset_to_json(P))
    emit({"kind": "summary", "counts": P.counts()})
    return True


def cmd_exp(args, emit):
    X = as_sset(load_input(args, index=0), args.D)
    Y = as_sset(load_input(args, index=1), args.D + (X.top_dim if X.top_dim > 0 else 0))
    try:
        Z = bounded_exponential(X, Y, args.D, cap=args.cap)
    except (ExponentialOverflow, BoundExceeded) as exc:
        raise UsageError(f"overflow: {exc}") from None
    emit(sset_to_json(Z))
    emit({"kind": "summary", "counts": Z.counts()})
    return True


def _horn_check(args, emit, which):
    X = as_sset(load_input(args), args.D)
    rep = fills_horns(X, args.D if X.bound is None else min(args.D, X.bound), which=which)
    path = write_witness(args, f"{which}-horns", rep["witnesses"])
    emit({"kind": "horns", "which": which, "horns": rep["horns"], "ok": rep["failure"] is None,
          "failure": rep["failure"], "witnesses": path})
    return rep["failure"] is None


def cmd_check_qcat(args, emit):
    return _horn_check(args, emit, "inner")


def cmd_check_kan(args, emit):
    return _horn_check(args, emit, "all")


def _fibration(args):
    from .fibration import Fibration
    obj = load_input(args, which="fibration")
    if isinstance(obj, Grothendieck):
        E, B, p = obj.nerves(args.D)
        return obj, Fibration(p, args.D)
    if isinstance(obj, SimplicialMap):
        return None, Fibration(obj, args.D)
    raise UsageError("--fibration expects a Grothendieck construction or a simplicial map")


def cmd_check_cocart(args, emit):
    from .fibration import is_cocartesian_fibration
    G, fib = _fibration(args)
    rep = is_cocartesian_fibration(fib, args.D)
    E = fib.E
    for x in E.simplices(1):
        rec = {"kind": "edge", "edge": repr(x), "cocartesian": fib.is_cocartesian(x)}
        if G is not None and x[0] == (0, 1):
            rec["classical"] = G.is_cocartesian_morphism(x[1][1][0])
        emit(rec)
    path = write_witness(args, "cocartesian-lifts", {repr(k): v for k, v in rep["lifts"].items()})
    emit({"kind": "summary", "isofibration": rep["isofibration"], "cocartesian_fibration": rep["ok"],
          "failure": rep["failure"], "witnesses": path, "D": args.D})
    return rep["ok"]


def cmd_comprehend(args, emit):
    from .category import morphism_edge
    from .fibration import comprehension_edge, transport_matches_nerve
    G, fib = _fibration(args)
    B = fib.B
    if G is not None:
        if args.edge not in G.base.morphisms:
            raise UsageError(f"{args.edge!r} is not a morphism of the base")
        f = morphism_edge(G.base, args.edge)
    else:
        f = next((s for s in B.simplices(1) if repr(s) == args.edge or cell_label(B, s[1]) == args.edge), None)
        if f is None:
            raise UsageError(f"{args.edge!r} is not an edge of the base")
    comp = comprehension_edge(fib, f)
    F = comp.functor
    for c in F.source.all_cells():
        emit({"kind": "assign", "dim": F.source.dim_of[c], "cell": repr(c), "image": repr(F.assignment[c])})
    ok = not F.check()
    rec = {"kind": "summary", "edge": args.edge, "valid": ok}
    if G is not None:
        mism = transport_matches_nerve(G, fib, args.edge, comp, D=args.D)
        rec["matches_oracle"] = not mism
        ok &= not mism
    emit(rec)
    return ok


def cmd_yoneda(args, emit):
    from .fibration import yoneda_object
    from .hcat import components
    obj = load_input(args)
    A = as_sset(obj, args.D + 1)
    a, o = resolve(obj, A, args.at)
    sizes = None
    if isinstance(obj, FiniteCategory):
        sizes = {(0, x): len(obj.hom(x, o)) for x in obj.objects}
    elif isinstance(obj, SimplicialCategory):
        sizes = {((x,), ()): len(components(obj.hom(x, o))) for x in obj.objects}
    r = yoneda_object(A, a, args.D, sizes)
    for x, n in r["fibre_pi0"].items():
        emit({"kind": "fibre", "vertex": repr(x), "pi0": n})
    ok = r["right_fibration"] and r.get("matches_hom_sets", True)
    emit({"kind": "summary", "right_fibration": r["right_fibration"], "failure": r["failure"],
          "matches_hom_sets": r.get("matches_hom_sets"), "D": args.D})
    return ok


def cmd_compare_maps(args, emit):
    U = as_sset(load_input(args), args.D)
    if U.bound is not None:
        raise UsageError("compare-maps needs a complete finite simplicial set")
    w, Rq, t = w_map(U)
    v, J = v_map(U)
    s, SU = s_map(U, source=v.target)
    um = u_map(U, SU)
    t2 = t_map(um.target, join=J)
    maps = {"t": t, "w": w, "v": v, "s": s, "u": um}
    ok = True
    for name in args.which or list(maps):
        probs = maps[name].check()
        emit({"kind": "map", "map": name, "valid": not probs, "problems": probs[:3]})
        ok &= not probs
    checks = {"w.q=t": Rq.then(w).agrees_with(t),
              "s.v=2[u].t": v.then(s).then(two_cat_map(um, source=s.target, target=t2.target)).agrees_with(t2)}
    for name, probs in checks.items():
        emit({"kind": "identity", "identity": name, "holds": not probs, "problems": probs[:3]})
        ok &= not probs
    return ok


def cmd_verify(args, emit):
    from . import suite
    reports = suite.run(ids=args.check or None, suite=args.suite)
    if not reports:
        raise UsageError("no checks selected")
    for r in reports:
        path = write_witness(args, r.id, r.record())
        rec = {"id": r.id, "status": r.status, "title": r.title, "dims": r.dims}
        if path:
            rec["witness"] = path
        emit(rec)
    return all(r.passed for r in reports)


def cmd_corpus(args, emit):
    for name in corpus.names(args.D):
        emit({"kind": "corpus", "name": name, "type": type(corpus.named(name, args.D)).__name__})
    return True


COMMANDS = {
    "realize": (cmd_realize, "list the beads of the realization of a simplicial set"),
    "nerve": (cmd_nerve, "nerve of a category or coherent nerve of an enriched category"),
    "hom": (cmd_hom, "hom-space between two vertices, with comparison maps"),
    "product": (cmd_product, "product of two simplicial sets"),
    "exp": (cmd_exp, "bounded exponential Y^X"),
    "check-qcat": (cmd_check_qcat, "inner horn filling"),
    "check-kan": (cmd_check_kan, "filling of all horns"),
    "check-cocart": (cmd_check_cocart, "cocartesian edges and lifts of a fibration"),
    "comprehend": (cmd_comprehend, "transport functor of a base edge"),
    "yoneda": (cmd_yoneda, "slice over a vertex as a right fibration"),
    "compare-maps": (cmd_compare_maps, "the comparison functors t, w, v, s, u"),
    "verify": (cmd_verify, "run the acceptance checks"),
    "corpus": (cmd_corpus, "list the named examples"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="necklace", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-D", type=int, default=3, help="dimension bound (default 3)")
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--witnesses", metavar="DIR", help="write witness files here")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name in ("realize", "nerve", "hom", "product", "exp", "check-qcat", "check-kan", "yoneda",
                    "compare-maps"):
            p.add_argument("--in", action="append", metavar="FILE", help="JSON input")
            p.add_argument("--corpus", action="append", metavar="NAME", help="named example")
        if name in ("check-cocart", "comprehend"):
            p.add_argument("--fibration", action="append", metavar="FILE", help="Grothendieck or map JSON")
            p.add_argument("--corpus", action="append", metavar="NAME", help="named Grothendieck example")
        if name == "hom":
            p.add_argument("--model", choices=["comma", "right", "left"], default="comma")
            p.add_argument("--at", required=True, metavar="A,B")
        if name == "yoneda":
            p.add_argument("--at", required=True, metavar="A")
        if name == "comprehend":
            p.add_argument("--edge", required=True)
        if name == "exp":
            p.add_argument("--cap", type=int, default=200_000)
        if name == "compare-maps":
            p.add_argument("--which", action="append", choices=["t", "w", "v", "s", "u"])
        if name == "verify":
            p.add_argument("--suite", choices=["coherent", "nerve", "homspace", "fibration"])
            p.add_argument("--check", action="append", metavar="ID")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    emit = Emitter(args.format)
    fn, _ = COMMANDS[args.command]
    try:
        ok = fn(args, emit)
    except UsageError as exc:
        print(f"necklace {args.command}: {exc}", file=sys.stderr)
        return 2
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
