from hypothesis import given, strategies as st

from necklace import operators as ops


@st.composite
def monotone(draw, m=None, n=None):
    m = draw(st.integers(0, 5)) if m is None else m
    n = draw(st.integers(0, 5)) if n is None else n
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return tuple(vals), m, n


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, n))))
def test_face_face_identity(t):
    n, i, j = t
    if i < j:
        lhs = ops.compose(ops.face(j, n), ops.face(i, n - 1))
        rhs = ops.compose(ops.face(i, n), ops.face(j - 1, n - 1))
        assert lhs == rhs


@given(st.integers(0, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, n))))
def test_degeneracy_degeneracy_identity(t):
    n, i, j = t
    if i <= j:
        lhs = ops.compose(ops.degeneracy(i, n), ops.degeneracy(j + 1, n + 1))
        rhs = ops.compose(ops.degeneracy(j, n), ops.degeneracy(i, n + 1))
        assert lhs == rhs


@given(st.integers(0, 5).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n), st.integers(0, n + 1))))
def test_degeneracy_face_mixed(t):
    n, j, i = t
    s_then_d = ops.compose(ops.degeneracy(j, n), ops.face(i, n + 1))
    if i in (j, j + 1):
        assert s_then_d == ops.identity(n)
    elif i < j:
        assert s_then_d == ops.compose(ops.face(i, n), ops.degeneracy(j - 1, n - 1))
    else:
        assert s_then_d == ops.compose(ops.face(i - 1, n), ops.degeneracy(j, n - 1))


@given(monotone())
def test_factor_roundtrip(t):
    op, m, n = t
    epi, mono = ops.factor(op)
    assert ops.is_epi(epi) and ops.is_mono(mono)
    assert ops.compose(mono, epi) == op


@given(monotone())
def test_dual_is_involution(t):
    op, m, n = t
    assert ops.dual(ops.dual(op, n), n) == op
    assert ops.is_monotone(ops.dual(op, n))


def test_epi_and_monotone_counts():
    from math import comb
    for n in range(6):
        for k in range(n + 1):
            assert len(ops.epis(n, k)) == comb(n, k)
        for m in range(4):
            assert len(ops.monotone_maps(m, n)) == comb(m + n + 1, m + 1)


def test_face_out_of_range():
    import pytest
    with pytest.raises(ValueError):
        ops.face(3, 2)


def test_collapse_common():
    family = [(0, 0, 1, 1), (2, 2, 2, 3)]
    eta, red = ops.collapse_common(family)
    assert eta == (0, 0, 1, 2)
    assert all(ops.compose(r, eta) == o for r, o in zip(red, family))


def test_operator_object():
    d = ops.SimplicialOperator.face(1, 2)
    s = ops.SimplicialOperator.degeneracy(1, 1)
    assert s.compose(d).image == (0, 1)
