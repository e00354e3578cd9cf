import pytest

from necklace.category import nerve_of_category
from necklace.constructions import standard
from necklace.corpus import chain2, kan_enriched, parallel_pair
from necklace.homspace import (fun_to_rhom, hom, homotopy_discrete, is_epimorphism, left_hom, pi0_map_is_bijection,
                               right_hom, u_comparison, u_prism, u_vertex)
from necklace.nerve import coherent_nerve


def test_u_vertex_formula():
    assert [u_vertex(2, i, 0) for i in range(3)] == [0, 1, 2]
    assert {u_vertex(2, i, 1) for i in range(3)} == {3}


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_u_prism_is_an_epimorphism(n):
    u = u_prism(n)
    assert u.check() == []
    assert is_epimorphism(u)


def test_hom_in_standard_simplex_is_contractible():
    X = standard(2)
    H = hom(X, (0,), (2,), 2)
    assert H.sset.check() == []
    assert homotopy_discrete(H.sset, 1)["ok"]
    assert H.sset.counts()[0] == 1


def test_hom_from_later_to_earlier_vertex_is_empty():
    H = hom(standard(2), (2,), (0,), 1)
    assert not H.sset.cells_of(0)


@pytest.mark.parametrize("C", [chain2(), parallel_pair()], ids=lambda C: C.name)
def test_three_models_for_categories(C):
    A = nerve_of_category(C, 4)
    for a in C.objects:
        for b in C.objects:
            av, bv = (0, a), (0, b)
            R, H, L = right_hom(A, av, bv, 2), hom(A, av, bv, 2), left_hom(A, av, bv, 2)
            k = len(C.hom(a, b))
            for X in (R, H.sset, L):
                assert homotopy_discrete(X, k)["ok"]
            u = u_comparison(A, av, bv, 2, R, H)
            assert u.check() == [] and u.is_injective()
            assert pi0_map_is_bijection(u)


def test_vertices_of_comma_hom_are_edges():
    C = parallel_pair()
    A = nerve_of_category(C, 3)
    H = hom(A, (0, "a"), (0, "b"), 1)
    arrows = sorted(H.arrow_of_vertex(v) for v in H.sset.cells_of(0))
    assert len(arrows) == 2


def test_fun_to_right_hom_is_injective():
    C = kan_enriched(3)[3]
    N = coherent_nerve(C, 4)
    a, b = C.objects[0], C.objects[-1]
    av, bv = ((a,), ()), ((b,), ())
    R = right_hom(N.sset, av, bv, 2)
    f = fun_to_rhom(N, a, b, 2, R)
    assert f.check() == [] and f.is_injective()
    u = u_comparison(N.sset, av, bv, 2, R)
    assert u.check() == [] and u.is_injective()
