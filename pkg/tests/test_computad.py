import pytest
from hypothesis import given, strategies as st

from necklace.coherent import (atomic_flags, bead_shapes, cube_iso, decompose, flag_compose, flag_word,
                               format_flag, hom_poset_nerve, insert_one, is_atomic, ordered_partitions, parse_flag,
                               realize, simplex_computad, standard_realization_iso, word_flag)
from necklace.constructions import boundary, cube, horn, standard
from necklace.suite import fubini


def test_ordered_partitions_match_fubini():
    for m in range(6):
        assert len(ordered_partitions(range(m))) == fubini(m)


def test_bead_shape_counts():
    assert [len(bead_shapes(n)) for n in range(2, 6)] == [1, 3, 13, 75]


def test_flag_text_roundtrip():
    for f in atomic_flags(0, 3):
        assert parse_flag(format_flag(f)) == f


def test_decompose_composes_back():
    C = simplex_computad(3)
    for r in range(3):
        for w in C.words(0, 3, r):
            f = word_flag(w)
            pieces = decompose(f)
            g = pieces[0]
            for p in pieces[1:]:
                g = flag_compose(g, p)
            assert g == f
            assert all(is_atomic(p) for p in pieces)
            assert word_flag(flag_word(C, f)) == f


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplex_computad_is_well_formed(n):
    assert simplex_computad(n).check() == []


@pytest.mark.parametrize("k,l", [(0, 1), (0, 2), (0, 3), (1, 3)])
def test_function_complexes_are_cubes(k, l):
    f = cube_iso(k, l)
    assert f.check() == []
    assert f.is_isomorphism()
    assert hom_poset_nerve(k, l).counts() == cube(l - k - 1).counts()


def test_insert_one():
    assert insert_one((0,), (1, 0)) == (0, 1, 1, 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_realization_of_standard_simplex(n):
    F = standard_realization_iso(n)
    assert F.check() == []


def test_realization_atoms_of_small_sets():
    assert len(realize(standard(2)).atoms) == 4
    assert len(realize(boundary(2)).atoms) == 3
    assert len(realize(horn(3, 1)).atoms) == 6 + 3 * 1


def test_realization_needs_complete_set():
    from necklace.category import nerve_of_category
    from necklace.corpus import z2
    with pytest.raises(ValueError):
        realize(nerve_of_category(z2(), 2))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n - 1))))
def test_atomic_flags_have_inner_points(t):
    n, k = t
    for f in atomic_flags(k, n):
        assert f.lo == k and f.hi == n
        assert set(f.sets[-1]) <= set(range(k, n + 1))
