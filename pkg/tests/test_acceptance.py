"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (visible with ``pytest -v``
or ``-s``).  Run this file directly for just the table:
``python tests/test_acceptance.py``.
"""
import sys

import pytest

from necklace import suite

CRITERIA = [
    (1, "cube-iso"),
    (2, "computad"),
    (3, "bead-shapes"),
    (4, "boundary-horn"),
    (5, "comparison-square"),
    (6, "qcat-nerve"),
    (7, "nerve-duality"),
    (8, "hom-comparison"),
    (9, "cocartesian-detection"),
    (10, "comprehension"),
    (11, "conservativity"),
    (12, "yoneda"),
]

_reports = {}


def report(cid):
    if cid not in _reports:
        (_reports[cid],) = suite.run(ids=[cid])
    return _reports[cid]


def announce(capsys, num, rep, ok):
    with capsys.disabled():
        print(f"\n[{num:2}] {'PASS' if ok else 'FAIL'}  {rep.id}: {rep.title} [{rep.dims}] ({rep.seconds:.2f}s)")


@pytest.fixture
def check(capsys):
    def run(num, cid, extra):
        rep = report(cid)
        problems = [] if rep.passed else [f"status {rep.status}: {rep.detail.get('failures') or rep.detail}"]
        if rep.passed:
            problems += [p for p in extra(rep) if p]
        announce(capsys, num, rep, not problems)
        assert not problems, problems
        return rep
    return run


def test_01_cube_isomorphism(check):
    check(1, "cube-iso", lambda r: [None if r.detail["complexes"] == 35 else "wrong number of function complexes",
                                    None if r.seconds < 10 else f"took {r.seconds:.1f}s, budget 10s"])


def test_02_computad_property(check):
    check(2, "computad", lambda r: [None if r.detail["arrows"] > 0 else "no arrows checked"])


def test_03_bead_shape_counts(check):
    expected = {2: 1, 3: 3, 4: 13, 5: 75}
    check(3, "bead-shapes", lambda r: [
        None if r.detail["counts"] == expected == r.detail["oracle"] else f"counts {r.detail['counts']}"])


def test_04_boundaries_and_horns(check):
    check(4, "boundary-horn", lambda r: [None if r.detail["hom_complexes"] > 0 else "nothing compared"])


def test_05_comparison_square(check):
    def extra(r):
        sets = set(r.detail["sets"])
        return [None if {"D0", "D1", "D2", "D3"} <= sets else "missing a standard simplex",
                None if len(sets - {"D0", "D1", "D2", "D3"}) >= 2 else "fewer than two non-representable sets"]
    check(5, "comparison-square", extra)


def test_06_coherent_nerves_are_quasi_categories(check):
    def extra(r):
        d = r.detail
        return [None if all(d["horns"].values()) else "an enriched category had no horns",
                None if set(d["witness_cells_chosen"]) == set(d["horns"]) else "missing witnesses",
                None if all(d["classical_nerves_agree"].values()) else "classical nerve mismatch"]
    check(6, "qcat-nerve", extra)


def test_07_nerve_duality(check):
    check(7, "nerve-duality", lambda r: [None if all(r.detail["simplices"].values()) else "empty nerve"])


def test_08_hom_comparisons(check):
    def extra(r):
        d = r.detail
        return [None if d["u_tables_ok"] else "u vertex tables",
                None if all(d["injective"].values()) else "non-injective comparison",
                None if all(d["homotopy_discrete"].values()) else "hom not homotopy discrete"]
    check(8, "hom-comparison", extra)


def test_09_cocartesian_detection(check):
    def extra(r):
        inst = r.detail["instances"]
        return [None if len(inst) >= 3 else "fewer than three instances",
                None if any(v["non_invertible_transition"] for v in inst.values()) else "all transitions invertible",
                None if all(v["mismatches"] == 0 and v["closures"] for v in inst.values()) else "mismatch",
                None if all(v["cocartesian_fibration"] for v in inst.values()) else "not a cocartesian fibration"]
    check(9, "cocartesian-detection", extra)


def test_10_comprehension(check):
    def extra(r):
        ok = all(all(v.values()) for v in r.detail["instances"].values())
        cob = all(all(v.values()) for v in r.detail["change_of_base"].values())
        return [None if ok else "comprehension", None if cob else "change of base"]
    check(10, "comprehension", extra)


def test_11_conservativity(check):
    def extra(r):
        inst = r.detail["instances"]
        return [None if all(all(v["hypotheses"].values()) for v in inst.values()) else "hypotheses fail",
                None if all(v["invertible"] for v in inst.values()) else "component not invertible"]
    check(11, "conservativity", extra)


def test_12_yoneda(check):
    check(12, "yoneda", lambda r: [None if all(r.detail["quasi_categories"].values()) else "fibre mismatch"])


def test_total_runtime(capsys):
    total = sum(report(cid).seconds for _, cid in CRITERIA)
    with capsys.disabled():
        print(f"\n      total {total:.1f}s (budget 300s)")
    assert total < 300


if __name__ == "__main__":
    reports = suite.run()
    for (num, _), rep in zip(CRITERIA, reports):
        print(f"[{num:2}] {rep.line()}")
    sys.exit(0 if all(r.passed for r in reports) else 1)
