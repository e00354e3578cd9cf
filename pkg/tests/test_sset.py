import pytest
from hypothesis import given, strategies as st

from necklace import operators as ops
from necklace.constructions import (boundary, coproduct, cube, horn, join_with_point, opposite, product, pullback,
                                    right_suspension, spine, standard, suspension)
from necklace.sset import SimplicialMap, SimplicialSet, enumerate_maps, first_map, identity_map, inclusion

SETS = {
    "D3": standard(3),
    "bdD3": boundary(3),
    "L3,1": horn(3, 1),
    "D1xD2": product(standard(1), standard(2)),
    "cube2": cube(2),
}


@st.composite
def acted(draw):
    X = SETS[draw(st.sampled_from(sorted(SETS)))]
    n = draw(st.integers(0, 3))
    s = draw(st.sampled_from(X.simplices(n)))
    k = draw(st.integers(0, 3))
    j = draw(st.integers(0, 3))
    alpha = draw(st.sampled_from(ops.monotone_maps(k, n)))
    beta = draw(st.sampled_from(ops.monotone_maps(j, k)))
    return X, s, alpha, beta


@given(acted())
def test_action_is_functorial(t):
    X, s, alpha, beta = t
    assert X.act(X.act(s, alpha), beta) == X.act(s, ops.compose(alpha, beta))


@given(acted())
def test_normal_form_is_unique(t):
    X, s, alpha, _ = t
    e, c = X.act(s, alpha)
    assert ops.is_epi(e) and e[-1] == X.dim_of[c]


@pytest.mark.parametrize("name", sorted(SETS))
def test_corpus_sets_are_valid(name):
    assert SETS[name].check() == []


def test_standard_counts():
    from math import comb
    for n in range(5):
        assert standard(n).counts() == [comb(n + 1, k + 1) for k in range(n + 1)]
        assert len(standard(n).simplices(2)) == comb(n + 3, 3)


def test_boundary_and_horn_counts():
    assert boundary(3).counts() == [4, 6, 4]
    assert horn(3, 0).counts() == [4, 6, 3]
    assert spine(3).counts() == [4, 3]


def test_product_counts():
    assert product(standard(1), standard(1)).counts() == [4, 5, 2]
    assert product(standard(1), standard(2)).counts() == [6, 12, 10, 3]


def test_cube_is_product_of_intervals():
    assert cube(3).counts() == [8, 19, 18, 6]


def test_opposite_is_involution():
    X = horn(3, 1)
    Y = opposite(opposite(X))
    assert Y.counts() == X.counts()
    assert Y.check() == []


def test_join_and_suspensions():
    J = join_with_point(standard(1), apex="+")
    assert J.counts() == standard(2).counts()
    S, q = suspension(standard(1))
    assert S.counts()[0] == 2 and q.check() == []
    Sr, q = right_suspension(standard(1))
    assert Sr.counts() == [2, 2, 1] and q.check() == []


def test_coproduct():
    X = coproduct(standard(1), standard(2))
    assert X.counts() == [5, 4, 1]


def test_horn_extension_in_standard():
    H, S = horn(2, 1), standard(2)
    maps = list(enumerate_maps(H, S))
    assert len(maps) == 10
    assert all(first_map(S, S, fixed=h) is not None for h in maps)


def test_inclusion_and_identity():
    X = standard(2)
    f = inclusion(boundary(2), X)
    assert f.check() == [] and f.is_injective()
    assert identity_map(X).is_isomorphism()


def test_invalid_map_is_reported():
    X = standard(1)
    bad = SimplicialMap(X, X, {(0,): ((0,), (0,)), (1,): ((0,), (0,)), (0, 1): ((0, 1), (0, 1))})
    assert bad.check()


def test_pullback_of_product_projections():
    P = product(standard(1), standard(1))
    p = SimplicialMap(standard(1), standard(0), {c: (ops.const(0, len(c) - 1), (0,)) for c in standard(1).dim_of})
    sub, a, b = pullback(p, p)
    assert sub.counts() == P.counts()
    assert a.check() == [] and b.check() == []


def test_maps_over_a_base():
    D1 = standard(1)
    X = product(D1, D1)
    pr = SimplicialMap(X, D1, {c: c[0] for c in X.dim_of})
    assert pr.check() == []
    sections = list(enumerate_maps(D1, X, over=(pr, identity_map(D1))))
    assert len(sections) == 3


def test_bounded_sets_refuse_to_guess():
    from necklace.category import nerve_of_category
    from necklace.corpus import z2
    from necklace.sset import BoundExceeded
    X = nerve_of_category(z2(), 2)
    with pytest.raises(BoundExceeded):
        X.simplices(3)


def test_empty_set():
    X = SimplicialSet([], {})
    assert X.counts() == [] and X.check() == []
