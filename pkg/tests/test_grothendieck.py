import pytest

from necklace.category import FiniteFunctor, nerve_of_category
from necklace.corpus import arrow, groth_chain, groth_collapse, grothendieck_instances
from necklace.grothendieck import Grothendieck, from_json, to_json
from necklace.io import dumps


@pytest.mark.parametrize("G", grothendieck_instances(), ids=lambda G: G.name)
def test_instances_are_valid(G):
    assert G.check() == []
    T = G.total()
    assert T.check() == []
    assert G.projection().check() == []
    for b in G.base.objects:
        assert G.fibre_inclusion(b).check() == []


def test_total_category_sizes():
    G = groth_chain()
    T = G.total()
    assert len(T.objects) == 2 + 2 + 1
    assert len(T.hom(("a", "0"), ("c", "0"))) == 1


def test_classical_cocartesian_morphisms():
    G = groth_chain()
    over_f = [m for m in G.total().morphisms if m[0] == "f"]
    assert over_f and all(G.is_cocartesian_morphism(m) for m in over_f)
    G = groth_collapse()
    T = G.total()
    cocart = {m for m in T.morphisms if G.is_cocartesian_morphism(m)}
    assert ("f", "a", "id:0") in cocart
    assert ("f", "a", "u") not in cocart
    assert ("id:b", "0", "u") not in cocart


def test_transition_with_wrong_fibres_is_reported():
    G = groth_chain()
    tr = {m: T for m, T in G.transitions.items() if not G.base.is_identity(m)}
    tr["g"] = FiniteFunctor(G.fibres["a"], G.fibres["c"], {"0": "0", "1": "0"}, {"u": "id:0"})
    assert Grothendieck(G.base, G.fibres, tr).check()


def test_non_functorial_transitions_are_reported():
    G = groth_chain()
    tr = {m: T for m, T in G.transitions.items() if not G.base.is_identity(m)}
    fibres = dict(G.fibres)
    fibres["c"] = G.fibres["b"]
    tr["g"] = FiniteFunctor(G.fibres["b"], fibres["c"], {"a": "a", "b": "b"}, {"i": "i", "j": "j"})
    tr["h"] = FiniteFunctor(G.fibres["a"], fibres["c"], {"0": "b", "1": "a"}, {"u": "j"})
    problems = Grothendieck(G.base, fibres, tr).check()
    assert any("differs" in p for p in problems)


def test_json_roundtrip_is_byte_stable():
    for G in grothendieck_instances():
        doc = to_json(G)
        again = to_json(from_json(doc))
        assert dumps(doc) == dumps(again)


def test_nerves_and_restriction():
    G = groth_chain()
    E, B, p = G.nerves(3)
    assert p.check() == []
    assert B.counts() == nerve_of_category(G.base, 3).counts()
    u = FiniteFunctor(arrow(), G.base, {"a": "a", "b": "c"}, {"f": "h"})
    R = G.restrict(u)
    assert R.check() == []
    assert len(R.total().objects) == 3
