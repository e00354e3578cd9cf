import json

import pytest

from necklace.cli import main
from necklace.constructions import standard
from necklace.corpus import groth_collapse
from necklace.grothendieck import to_json
from necklace.io import dumps, sset_to_json


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def test_realize_from_file(tmp_path, capsys):
    path = tmp_path / "d3.json"
    path.write_text(dumps(sset_to_json(standard(3))))
    code, out, _ = run(capsys, "realize", "--in", str(path))
    assert code == 0
    recs = records(out)
    assert recs[-1] == {"kind": "summary", "objects": 4, "atoms": 6 + 4 + 3}


def test_output_is_deterministic(capsys):
    _, a, _ = run(capsys, "hom", "--corpus", "parallel", "--at", "a,b", "-D", "2")
    _, b, _ = run(capsys, "hom", "--corpus", "parallel", "--at", "a,b", "-D", "2")
    assert a == b and a


def test_text_format(capsys):
    code, out, _ = run(capsys, "nerve", "--corpus", "chain2", "--format", "text", "-D", "2")
    assert code == 0
    assert out.splitlines()[-1] == "kind=summary counts=[3,3,1] bound=2"


def test_check_qcat_exit_codes(capsys, tmp_path):
    assert run(capsys, "check-qcat", "--corpus", "D3")[0] == 0
    code, out, _ = run(capsys, "check-qcat", "--corpus", "L2,1", "--witnesses", str(tmp_path))
    assert code == 1
    assert records(out)[0]["failure"]["n"] == 2


def test_check_kan(capsys):
    assert run(capsys, "check-kan", "--corpus", "Z2", "-D", "2")[0] == 0
    assert run(capsys, "check-kan", "--corpus", "chain2", "-D", "2")[0] == 1


def test_cocartesian_and_comprehension_from_file(tmp_path, capsys):
    path = tmp_path / "groth.json"
    path.write_text(dumps(to_json(groth_collapse())))
    code, out, _ = run(capsys, "check-cocart", "--fibration", str(path), "-D", "2", "--witnesses", str(tmp_path))
    assert code == 0
    edges = [r for r in records(out) if r["kind"] == "edge" and "classical" in r]
    assert edges and all(r["cocartesian"] == r["classical"] for r in edges)
    assert (tmp_path / "cocartesian-lifts.json").exists()
    code, out, _ = run(capsys, "comprehend", "--fibration", str(path), "--edge", "f", "-D", "2")
    assert code == 0 and records(out)[-1]["matches_oracle"]


def test_yoneda_and_compare_maps(capsys):
    code, out, _ = run(capsys, "yoneda", "--corpus", "chain2", "--at", "b", "-D", "2")
    assert code == 0 and records(out)[-1]["right_fibration"]
    code, out, _ = run(capsys, "compare-maps", "--corpus", "bdD2", "--which", "u")
    assert code == 0
    assert [r["kind"] for r in records(out)] == ["map", "identity", "identity"]


def test_product_and_exp(capsys):
    code, out, _ = run(capsys, "product", "--corpus", "D1", "--corpus", "D2")
    assert records(out)[-1]["counts"] == [6, 12, 10, 3]
    code, out, _ = run(capsys, "exp", "--corpus", "D1", "--corpus", "D1", "-D", "1")
    assert code == 0 and records(out)[-1]["counts"] == [3, 3]
    code, _, err = run(capsys, "exp", "--corpus", "D2", "--corpus", "D2", "-D", "2", "--cap", "5")
    assert code == 2 and "overflow" in err


def test_verify_selected_checks(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--check", "bead-shapes", "--witnesses", str(tmp_path))
    assert code == 0
    rec = records(out)[0]
    assert rec["id"] == "bead-shapes" and rec["status"] == "pass"
    assert json.loads((tmp_path / "bead-shapes.json").read_text())["status"] == "pass"


@pytest.mark.parametrize("argv,needle", [
    (["realize", "--corpus", "nope"], "no corpus object"),
    (["nerve"], "missing input"),
    (["hom", "--corpus", "chain2", "--at", "a"], "two vertices"),
    (["yoneda", "--corpus", "chain2", "--at", "z"], "not an object"),
    (["realize", "--corpus", "Z2"], "complete"),
    (["verify", "--check", "no-such-check"], "no checks"),
])
def test_usage_errors(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 2 and needle in err and out == ""


def test_parse_error_names_the_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "nerve", "--in", str(path))
    assert code == 2 and "bad.json" in err
