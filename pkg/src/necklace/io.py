"""JSON encodings.  Output is canonical: dumping a parsed document gives back
the same bytes."""
from __future__ import annotations

import json

from .category import FiniteCategory, FiniteFunctor
from .sset import SimplicialMap, SimplicialSet


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def cell_ids(X: SimplicialSet) -> dict:
    """Stable string ids: keys that are already strings are kept."""
    if all(isinstance(c, str) for c in X.dim_of):
        return {c: c for c in X.dim_of}
    return {c: f"c{X.order[c]}" for c in X.dim_of}


def sset_to_json(X: SimplicialSet, labels: bool = False) -> dict:
    ids = cell_ids(X)
    dims = []
    for row in X.cells:
        out = []
        for c in row:
            rec = {"id": ids[c], "faces": [{"epi": list(e), "cell": ids[k]} for e, k in X.faces[c]]}
            if labels and ids[c] != c:
                rec["label"] = repr(c)
            out.append(rec)
        dims.append(out)
    return {"kind": "simplicial_set", "name": X.name, "bound": X.bound, "dims": dims}


def sset_from_json(doc: dict) -> SimplicialSet:
    cells, faces = [], {}
    for row in doc["dims"]:
        cells.append([rec["id"] for rec in row])
        for rec in row:
            faces[rec["id"]] = tuple((tuple(f["epi"]), f["cell"]) for f in rec["faces"])
    X = SimplicialSet(cells, faces, bound=doc.get("bound"), name=doc.get("name", ""))
    problems = X.check()
    if problems:
        raise ValueError("invalid simplicial set: " + "; ".join(problems[:5]))
    return X


def map_to_json(f: SimplicialMap) -> dict:
    si, ti = cell_ids(f.source), cell_ids(f.target)
    return {"kind": "simplicial_map", "source": sset_to_json(f.source), "target": sset_to_json(f.target),
            "assignment": {si[c]: {"epi": list(e), "cell": ti[k]} for c, (e, k) in f.assignment.items()}}


def map_from_json(doc: dict) -> SimplicialMap:
    S, T = sset_from_json(doc["source"]), sset_from_json(doc["target"])
    a = {c: (tuple(v["epi"]), v["cell"]) for c, v in doc["assignment"].items()}
    f = SimplicialMap(S, T, a)
    problems = f.check()
    if problems:
        raise ValueError("invalid simplicial map: " + "; ".join(problems[:5]))
    return f


def category_to_json(C: FiniteCategory) -> dict:
    return {"kind": "category", "name": C.name, "objects": list(C.objects),
            "morphisms": [{"name": m, "source": C.src(m), "target": C.tgt(m)}
                          for m in C.morphisms if not C.is_identity(m)],
            "identities": {str(a): C.identities[a] for a in C.objects},
            "compose": [[g, f, h] for (g, f), h in C.table.items()
                        if not C.is_identity(g) and not C.is_identity(f)]}


def category_from_json(doc: dict) -> FiniteCategory:
    ids = doc.get("identities")
    C = FiniteCategory(doc["objects"], {m["name"]: (m["source"], m["target"]) for m in doc["morphisms"]},
                       {(g, f): h for g, f, h in doc.get("compose", [])},
                       identities={a: ids[str(a)] for a in doc["objects"]} if ids else None,
                       name=doc.get("name", ""))
    problems = C.check()
    if problems:
        raise ValueError("invalid category: " + "; ".join(problems[:5]))
    return C


def functor_from_json(doc: dict, source: FiniteCategory, target: FiniteCategory) -> FiniteFunctor:
    F = FiniteFunctor(source, target, doc["objects"], doc["morphisms"])
    problems = F.check()
    if problems:
        raise ValueError("invalid functor: " + "; ".join(problems[:5]))
    return F


def load(path):
    with open(path) as fh:
        return json.load(fh)
