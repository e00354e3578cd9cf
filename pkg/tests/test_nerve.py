import pytest

from necklace.category import nerve_of_category
from necklace.constructions import horn, standard
from necklace.corpus import chain2, kan_enriched, max_monoid, z2
from necklace.nerve import (coherent_nerve, fills_horns, from_category, horn_faces_of, inner_horn_fill,
                            is_kan_enriched, kan_check, opposite_nerve_map)


def test_fills_horns_on_small_sets():
    assert fills_horns(standard(2), 3)["failure"] is None
    r = fills_horns(horn(2, 1), 2)
    assert r["failure"] == {"n": 2, "k": 1, "horn": r["failure"]["horn"]}


def test_kan_vs_quasi_category():
    X = nerve_of_category(chain2(), 3)
    assert fills_horns(X, 3, "inner")["failure"] is None
    assert fills_horns(X, 2, "all")["failure"] is not None
    assert fills_horns(nerve_of_category(z2(), 3), 3, "all")["failure"] is None


@pytest.mark.parametrize("C", kan_enriched(3), ids=lambda C: C.name)
def test_corpus_enriched_categories(C):
    assert C.check(2) == []
    assert is_kan_enriched(C, 2)


def test_max_monoid_is_not_kan_enriched():
    C = max_monoid(3)
    assert C.check(2) == []
    assert not is_kan_enriched(C, 2)
    assert any(r["failure"] is not None for r in kan_check(C, 2).values())


def test_coherent_nerve_of_discrete_category_is_classical_nerve():
    C = chain2()
    N = coherent_nerve(from_category(C), 3)
    assert N.sset.counts()[:3] == nerve_of_category(C, 3).counts()
    assert N.sset.counts()[3:] == [0]


@pytest.mark.parametrize("C", kan_enriched(3)[2:], ids=lambda C: C.name)
def test_inner_horn_fill_recovers_faces(C):
    N = coherent_nerve(C, 3)
    for s in N.all_simplices(2)[:20]:
        faces = horn_faces_of(N, s, 1)
        fill, _ = inner_horn_fill(N, faces, 2, 1)
        assert fill is not None
        assert all(N.face(fill, m) == faces[m] for m in faces)


def test_inner_horn_fill_rejects_outer_horns():
    N = coherent_nerve(kan_enriched(2)[0], 2)
    with pytest.raises(ValueError):
        inner_horn_fill(N, {}, 2, 0)


def test_opposite_nerve_map_is_bijective():
    C = kan_enriched(3)[3]
    N, Nop = coherent_nerve(C, 3), coherent_nerve(C.opposite(), 3)
    for n in range(3):
        table = opposite_nerve_map(N, Nop, n)
        assert len(set(table.values())) == len(table) == len(Nop.all_simplices(n))
