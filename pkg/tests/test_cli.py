import json
import subprocess
import sys

import pytest

from wajsberg import chain, product, product_of
from wajsberg.cli import main
from wajsberg.formats import parse, render
from wajsberg.regression import fixture_dir, reconstruct


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, out, err


@pytest.fixture
def files(tmp_path):
    def write(name, W, fmt="json"):
        path = tmp_path / f"{name}.{'txt' if fmt == 'text' else fmt}"
        path.write_text(render(W, fmt), encoding="utf-8")
        return path

    return write


def printed(name):
    return fixture_dir() / f"{name}.txt"


def test_chain_text_matches_printed_layout(capsys):
    status, out, _ = run(capsys, "chain", 4, "--format", "text")
    assert status == 0
    assert parse(out, "text").op == parse(printed("nabla_0_4").read_text(encoding="utf-8"), "text").op


def test_chain_one_and_json(capsys):
    status, out, _ = run(capsys, "chain", 1)
    assert status == 0 and out.splitlines()[-1] == "E | E"
    status, out, _ = run(capsys, "chain", 9, "--format", "json")
    assert status == 0 and parse(out, "json").to_table() == chain(9)


def test_chain_bad_order_is_usage_error(capsys):
    status, _, err = run(capsys, "chain", 0)
    assert status == 2 and "at least 1" in err
    assert run(capsys, "chain", "x")[0] == 2
    assert run(capsys)[0] == 2


def test_product(capsys, files):
    c2, c3 = files("c2", chain(2)), files("c3", chain(3))
    status, out, _ = run(capsys, "product", c2, c3)
    assert status == 0 and parse(out, "text").op == parse(printed("nabla_11_6").read_text(encoding="utf-8"), "text").op
    status, out, _ = run(capsys, "product", c2, c2, c2, "--format", "csv")
    assert status == 0 and parse(out, "csv").to_table() == product_of(chain(2), chain(2), chain(2))
    W = product(chain(2), chain(3))
    status, out, _ = run(capsys, "product", files("w", W), files("one", chain(1)))
    assert status == 0 and parse(out, "text").to_table() == W


def test_verify(capsys, tmp_path):
    status, out, _ = run(capsys, "verify", printed("nabla_11_6"))
    assert status == 0 and out.startswith("valid")
    status, out, _ = run(capsys, "verify", printed("nabla_0_9"))
    assert status == 1 and "iii" in out and "(T, S)" in out
    status, out, _ = run(capsys, "verify", printed("nabla_0_9"), "--format", "json")
    data = json.loads(out)
    assert status == 1 and not data["valid"] and ["T", "S"] in [v["witness"] for v in data["violations"]]
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": 1,\n  "n": }', encoding="utf-8")
    status, _, err = run(capsys, "verify", bad)
    assert status == 2 and "bad.json:2:" in err


def test_ideals(capsys):
    status, out, _ = run(capsys, "ideals", printed("nabla_11_6"), "--proper")
    assert status == 0 and out == "{O,A,B}\n{O,C}\n"
    status, out, _ = run(capsys, "ideals", printed("nabla_0_6"), "--proper")
    assert status == 0 and out == ""
    status, out, _ = run(capsys, "ideals", printed("nabla_11_6"))
    assert out.splitlines()[0] == "{O}" and out.splitlines()[-1] == "{O,A,B,C,D,E}"
    status, out, _ = run(capsys, "ideals", printed("nabla_21_8"), "--proper", "--prime", "--format", "json")
    assert json.loads(out) == {"ideals": [["O", "X", "Y", "Z"], ["O", "X", "T", "U"], ["O", "Y", "T", "V"]]}
    status, out, _ = run(capsys, "ideals", printed("nabla_21_8"), "--proper", "--literal", "--format", "csv")
    assert len(out.splitlines()) == 6


def test_quotient(capsys):
    status, out, _ = run(capsys, "quotient", printed("nabla_11_6"), "--ideal", "O,C")
    doc = parse(out, "text")
    assert status == 0 and doc.to_table() == chain(3)
    assert doc.note == "blocks O={O,C}, A={A,D}, E={B,E}"
    status, out, _ = run(capsys, "quotient", printed("nabla_11_6"), "--ideal", "O")
    assert parse(out, "text").to_table() == reconstruct("nabla_11_6")
    status, out, _ = run(capsys, "quotient", printed("nabla_21_8"), "--ideal", "O,X,Y,Z", "--format", "json")
    assert parse(out, "json").to_table() == chain(2)
    status, _, err = run(capsys, "quotient", printed("nabla_11_6"), "--ideal", "O,A")
    assert status == 1 and "not an ideal" in err
    status, _, err = run(capsys, "quotient", printed("nabla_11_6"), "--ideal", "O,Q")
    assert status == 1 and "no element labelled" in err


def test_iso(capsys, files):
    W118 = files("w118", reconstruct("nabla_11_8"), "text")
    W218 = printed("nabla_21_8")
    assert run(capsys, "iso", W118, W218)[1] == "none\n"
    assert run(capsys, "iso", W118, W218, "--poset")[1] == "none\n"
    status, out, _ = run(capsys, "iso", printed("nabla_11_6"), printed("nabla_11_6"))
    assert out == "O->O A->A B->B C->C D->D E->E\n"
    status, out, _ = run(capsys, "iso", printed("nabla_11_6"), printed("nabla_14_6"), "--format", "json")
    assert json.loads(out)["witness"] == {"O": "O", "A": "B", "B": "D", "C": "A", "D": "C", "E": "E"}


def test_iso_refuses_invalid_input(capsys):
    status, _, err = run(capsys, "iso", printed("nabla_11_8"), printed("nabla_21_8"))
    assert status == 1 and "not a Wajsberg algebra" in err


def test_census(capsys, monkeypatch):
    status, out, _ = run(capsys, "census", 6, "--report", "json")
    data = json.loads(out)
    assert status == 0 and data["formula_total"] == 25 and data["distinct_labeled_total"] == 25
    data = json.loads(run(capsys, "census", 9, "--report", "json")[1])
    assert data["formula_total"] == 5041 and data["discrepancy"]
    status, out, _ = run(capsys, "census", 5)
    assert "isomorphism classes: 1 {5}" in out
    assert "formula_total,3" in run(capsys, "census", 4, "--format", "csv")[1]
    status, _, err = run(capsys, "census", 10)
    assert status == 1 and "census limit" in err
    assert run(capsys, "census", 10, "--allow-large", "--report", "json")[0] == 0
    monkeypatch.setenv("WAJSBERG_CENSUS_CAP", "10")
    assert run(capsys, "census", 10, "--report", "json")[0] == 0


def test_decompose(capsys, files):
    W9 = files("w9", reconstruct("nabla_11_9"), "text")
    status, out, _ = run(capsys, "decompose", W9)
    assert status == 0 and out.splitlines() == [
        "signature: {3,3}",
        "P1 = {O,X,Y}  quotient: chain of order 3",
        "P2 = {O,Z,S}  quotient: chain of order 3",
    ]
    assert run(capsys, "decompose", files("c8", chain(8)))[1].startswith("signature: {8}")
    data = json.loads(run(capsys, "decompose", files("w8", reconstruct("nabla_11_8")), "--format", "json")[1])
    assert data["signature"] == [2, 4]
    assert sorted(map(sorted, (f["ideal"] for f in data["factors"]))) == [["O", "T", "V", "Y"], ["O", "X"]]


def test_regress(capsys, tmp_path):
    status, out, _ = run(capsys, "regress")
    assert status == 0 and "nabla_0_9: 3 mismatching cell(s)" in out and "unexpected" not in out
    status, out, _ = run(capsys, "regress", "--format", "json", "--maps")
    data = json.loads(out)
    assert data["tables"]["nabla_11_6"]["mismatches"] == [] and len(data["maps"]) == 24
    assert ["T", "S", "V", "E"] in data["tables"]["nabla_0_9"]["mismatches"]
    status, out, _ = run(capsys, "regress", "--fixtures", tmp_path)
    assert status == 0 and "nabla_0_4: MISSING fixture" in out
    status, out, _ = run(capsys, "regress", "--export", tmp_path / "rec", "--format", "json")
    assert status == 0 and len(out.splitlines()) == 17
    assert run(capsys, "verify", tmp_path / "rec" / "nabla_0_9.json")[0] == 0


def test_output_is_deterministic(capsys):
    argv = ["decompose", printed("nabla_21_8"), "--format", "json"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
    assert run(capsys, "census", 8)[1] == run(capsys, "census", 8)[1]


def test_module_entry_point(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "wajsberg", "chain", "3", "--format", "csv"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0 and result.stdout.startswith("#unit=E")
    result = subprocess.run([sys.executable, "-m", "wajsberg", "verify", str(tmp_path / "nope.txt")], capture_output=True, text=True)
    assert result.returncode == 2
