import pytest

from necklace.constructions import horn, product, standard
from necklace.corpus import categories
from necklace.io import (category_from_json, category_to_json, dumps, map_from_json, map_to_json, sset_from_json,
                         sset_to_json)
from necklace.sset import inclusion


@pytest.mark.parametrize("X", [standard(3), horn(3, 2), product(standard(1), standard(1))], ids=str)
def test_sset_roundtrip(X):
    doc = sset_to_json(X)
    Y = sset_from_json(doc)
    assert Y.counts() == X.counts()
    assert dumps(sset_to_json(Y)) == dumps(doc)


@pytest.mark.parametrize("C", categories(), ids=lambda C: C.name)
def test_category_roundtrip(C):
    doc = category_to_json(C)
    assert dumps(category_to_json(category_from_json(doc))) == dumps(doc)


def test_map_roundtrip():
    f = inclusion(horn(2, 0), standard(2))
    doc = map_to_json(f)
    g = map_from_json(doc)
    assert g.check() == [] and dumps(map_to_json(g)) == dumps(doc)


def test_bad_faces_are_rejected():
    doc = sset_to_json(standard(2))
    tri = doc["dims"][2][0]
    tri["faces"][0] = dict(tri["faces"][2])
    with pytest.raises(ValueError, match="invalid simplicial set"):
        sset_from_json(doc)


def test_bad_composition_is_rejected():
    doc = category_to_json(categories()[1])
    doc["compose"] = [["g", "f", "f"]]
    with pytest.raises(ValueError):
        category_from_json(doc)
