import pytest

from necklace import operators as ops
from necklace.category import morphism_edge, nerve_of_category
from necklace.constructions import horn, standard
from necklace.corpus import chain2, groth_chain, groth_collapse, groth_span, groth_swap
from necklace.fibration import (Fibration, LiftingProblem, closure_report, comprehension_edge, external_action,
                                fibre_matches_nerve, functors_equal_in_h, is_cocartesian_fibration,
                                is_inner_fibration, is_isofibration, is_left_fibration, is_right_fibration,
                                outer_horn_extension_lowdim, solve_lift, transport_matches_nerve, yoneda_object)
from necklace.sset import SimplicialMap, identity_map, inclusion


def to_point(X):
    return SimplicialMap(X, standard(0), {c: (ops.const(0, X.dim_of[c]), (0,)) for c in X.dim_of})


def test_solve_lift_and_verify():
    H, S = horn(2, 1), standard(2)
    E = standard(2)
    p = to_point(E)
    top = SimplicialMap(H, E, {c: ((tuple(range(len(c)))), c) for c in H.dim_of})
    prob = LiftingProblem(inclusion(H, S), to_point(S), top, p)
    assert prob.commutes()
    w = solve_lift(prob)
    assert w.found and w.verify() == []


def test_unsolvable_lift_records_exhaustion():
    S = standard(1)
    v0 = SimplicialMap(standard(0), S, {(0,): ((0,), (0,))})
    top = identity_map(standard(0))
    w = solve_lift(LiftingProblem(v0, identity_map(S), top, v0))
    assert not w.found
    assert w.extensions_ignoring_base == 1
    assert w.verify() == []


def test_non_commuting_square_is_rejected():
    S = standard(1)
    inc = SimplicialMap(standard(0), S, {(0,): ((0,), (0,))})
    top = SimplicialMap(standard(0), S, {(0,): ((0,), (1,))})
    with pytest.raises(ValueError):
        solve_lift(LiftingProblem(inc, identity_map(S), top, identity_map(S)))


def test_right_and_left_fibrations_of_an_interval():
    p = to_point(standard(1))
    assert is_inner_fibration(p, 3)["ok"]
    assert not is_right_fibration(p, 2)["ok"]
    assert not is_left_fibration(p, 2)["ok"]
    assert is_right_fibration(identity_map(standard(2)), 2)["ok"]


def test_vertex_inclusion_is_not_cocartesian():
    p = SimplicialMap(standard(0), standard(1), {(0,): ((0,), (0,))})
    assert is_isofibration(p, 2)["ok"]
    rep = is_cocartesian_fibration(p, 2)
    assert not rep["ok"]


@pytest.mark.parametrize("G", [groth_chain(), groth_collapse(), groth_swap(), groth_span()], ids=lambda G: G.name)
def test_lifting_test_matches_classical_criterion(G):
    E, B, p = G.nerves(2)
    fib = Fibration(p, 2)
    T = G.total()
    for m in T.morphisms:
        assert fib.is_cocartesian(morphism_edge(T, m)) == G.is_cocartesian_morphism(m), m
    assert closure_report(fib)["ok"]


def test_canonical_lift_prefers_degenerate_edges():
    G = groth_collapse()
    E, B, p = G.nerves(2)
    fib = Fibration(p, 2)
    for x in E.cells_of(0):
        beta = B.act(p.apply(E.cell(x)), (0, 0))
        lift = fib.cocartesian_lift(beta, E.cell(x))
        assert lift == E.act(E.cell(x), (0, 0))


@pytest.mark.parametrize("G", [groth_chain(), groth_collapse()], ids=lambda G: G.name)
def test_comprehension_is_nerve_of_transition(G):
    E, B, p = G.nerves(2)
    fib = Fibration(p, 2)
    for b in G.base.objects:
        assert fibre_matches_nerve(G, fib, b, 2) == []
    for f in G.base.morphisms:
        assert transport_matches_nerve(G, fib, f, D=2) == []


def test_comprehension_of_identity_is_identity():
    G = groth_chain()
    E, B, p = G.nerves(2)
    fib = Fibration(p, 2)
    comp = comprehension_edge(fib, morphism_edge(G.base, "id:b"))
    F = comp.functor
    assert all(F.apply(F.source.cell(c)) == F.target.cell(c) for c in F.source.dim_of)
    assert functors_equal_in_h(F, identity_map(F.source))


def test_outer_horn_extensions_in_low_dimension():
    G = groth_chain()
    E, B, p = G.nerves(3)
    fib = Fibration(p, 3)
    sigma = next(s for s in B.simplices(2) if ops.is_identity(s[0]))
    assert outer_horn_extension_lowdim(fib, B.act(sigma, (0,)), 1)["pullback"]
    assert outer_horn_extension_lowdim(fib, B.act(sigma, (0, 1)), 2)["end"].check() == []
    r = outer_horn_extension_lowdim(fib, sigma, 3)
    assert r["ok"] and all(r["hypotheses"].values())
    with pytest.raises(ValueError):
        outer_horn_extension_lowdim(fib, sigma, 4)


def test_external_action_on_vertices():
    G = groth_collapse()
    E, B, p = G.nerves(2)
    fib = Fibration(p, 2)
    r = external_action(fib, (0, "a"), (0, "b"), D=1)
    assert r["action"].check() == []
    assert len(r["on_vertices"]) == 1
    assert r["hom_edges_act_invertibly"]


def test_yoneda_on_a_poset():
    A = nerve_of_category(chain2(), 3)
    r = yoneda_object(A, (0, "b"), 2, {(0, "a"): 1, (0, "b"): 1, (0, "c"): 0})
    assert r["right_fibration"] and r["matches_hom_sets"]
    assert not is_left_fibration(r["projection"], 2)["ok"]
