import pytest

from necklace.category import FiniteCategory, FiniteFunctor, morphism_edge, nerve_map, nerve_of_category
from necklace.constructions import horn, standard
from necklace.corpus import arrow, categories, chain2, commuting_square, walking_iso, z2
from necklace.hcat import NotQuasiCategory, components, homotopy_category, invertible_core


@pytest.mark.parametrize("C", categories(), ids=lambda C: C.name)
def test_corpus_categories_check(C):
    assert C.check() == []
    assert C.opposite().check() == []


def test_composition_and_inverses():
    C = walking_iso()
    assert C.comp("j", "i") == "id:a"
    assert C.inverse("i") == "j"
    assert not chain2().is_iso("f")


def test_bad_composition_table_is_reported():
    C = FiniteCategory(["a"], {"t": ("a", "a")}, {}, name="broken")
    assert C.check()


def test_nerve_counts():
    assert nerve_of_category(arrow(), 3).counts() == [2, 1]
    assert nerve_of_category(chain2(), 3).counts() == [3, 3, 1]
    X = nerve_of_category(z2(), 3)
    assert X.counts() == [1, 1, 1, 1]
    assert X.check() == []


def test_nerve_of_square_has_two_triangles():
    assert nerve_of_category(commuting_square(), 3).counts() == [4, 5, 2]


def test_nerve_map_of_functor():
    C, D = chain2(), arrow()
    F = FiniteFunctor(C, D, {"a": "a", "b": "b", "c": "b"}, {"id:a": "id:a", "id:b": "id:b", "id:c": "id:b",
                                                          "f": "f", "g": "id:b", "h": "f"})
    assert F.check() == []
    f = nerve_map(F, nerve_of_category(C, 3), nerve_of_category(D, 3))
    assert f.check() == []


def test_morphism_edge_vertices():
    C = chain2()
    X = nerve_of_category(C, 2)
    e = morphism_edge(C, "h")
    assert X.vertices_of(e) == ((0, "a"), (0, "c"))


def test_homotopy_category_of_nerve_recovers_category():
    for C in categories():
        H = homotopy_category(nerve_of_category(C, 3))
        assert len(H.ends) == len(C.morphisms)
        assert len(H.morphisms()) == len(C.morphisms)


def test_homotopy_category_invertibility():
    H = homotopy_category(nerve_of_category(walking_iso(), 3))
    assert all(H.is_invertible(m) for m in H.morphisms())
    H = homotopy_category(nerve_of_category(chain2(), 3))
    assert sum(H.is_invertible(m) for m in H.morphisms()) == 3


def test_horn_is_not_a_quasi_category():
    with pytest.raises(NotQuasiCategory):
        homotopy_category(horn(2, 1))
    homotopy_category(horn(2, 1), strict=False)


def test_components_and_core():
    assert len(components(standard(2))) == 1
    X = nerve_of_category(chain2(), 3)
    core = invertible_core(X)
    assert len(components(core)) == 3
