import json

import pytest

from zesting import gallery
from zesting.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gallery_list(capsys):
    code, out, _ = call(capsys, "gallery", "list")
    assert code == 0
    assert json.loads(out)["names"] == ["su3_3", "su4_2", "su4_4"]


def test_validate_ok_and_failure(capsys, tmp_path):
    code, out, _ = call(capsys, "validate", "su3_3")
    assert code == 0 and json.loads(out)["ok"]
    doc = gallery.builtin("su3_3").category.to_json()
    doc["dims"]["Y"] = "2"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    code, out, _ = call(capsys, "validate", str(bad))
    assert code == 1


def test_usage_errors(capsys):
    assert call(capsys, "frobnicate")[0] == 64
    assert call(capsys, "info")[0] == 64
    assert call(capsys, "info", "no_such_thing")[0] == 64
    assert call(capsys, "zest-enum", "su3_3", "--format", "xml")[0] == 64


def test_zest_enum_su3_3(capsys):
    code, out, _ = call(capsys, "zest-enum", "su3_3", "--closed-form")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert len(rows) == 9
    assert sum(r["admissible"] for r in rows) == 3
    spectra = set()
    for r in rows:
        if r["admissible"]:
            spectra.update(r["t_spectrum"].split("|"))
    assert len(spectra) == 3


def test_zest_enum_general_agrees(capsys):
    _, closed, _ = call(capsys, "zest-enum", "su3_3", "--closed-form", "--expand")
    _, general, _ = call(capsys, "zest-enum", "su3_3", "--expand")
    a, b = json.loads(closed), json.loads(general)
    assert a["rows"] == b["rows"]


def test_zest_enum_deterministic(capsys):
    first = call(capsys, "zest-enum", "su4_2", "--closed-form", "--format", "table")[1]
    second = call(capsys, "zest-enum", "su4_2", "--closed-form", "--format", "table")[1]
    assert first == second
    assert first.splitlines()[0].split()[:2] == ["a", "b"]


def test_zest_enum_subgroup(capsys):
    code, out, _ = call(capsys, "zest-enum", "su4_4", "--closed-form", "--group", "2")
    assert code == 0
    assert json.loads(out)["generator"] == "g2"


def test_obstructions(capsys):
    code, out, _ = call(capsys, "obstructions", "su4_4", "--group", "2", "--lambda2", "1,1=g", "--format", "table")
    assert code == 2
    assert "second partial obstruction nontrivial" in out
    code, out, _ = call(capsys, "obstructions", "su4_4", "--grading", "2", "--lambda2", "1,1=g2")
    assert code == 0
    assert json.loads(out)["ok"]


def test_obstructions_lambda2_file(capsys, tmp_path):
    path = tmp_path / "lam.json"
    path.write_text(json.dumps({"lambda2": {"1,1": "g"}}))
    assert call(capsys, "obstructions", "su4_4", "--group", "2", "--lambda2", str(path))[0] == 2


def test_zest_apply_trivial_is_identity(capsys, tmp_path):
    exported = tmp_path / "base.json"
    assert call(capsys, "gallery", "export", "su3_3", "--out", str(exported))[0] == 0
    code, out, _ = call(capsys, "zest-apply", "su3_3", "--trivial")
    assert code == 0
    doc = json.loads(out)
    assert json.dumps(doc["category"], indent=1, sort_keys=True) + "\n" == exported.read_text()
    assert doc["modular"] and not doc["degenerate"]


def test_zest_apply_from_exported_file(capsys, tmp_path):
    call(capsys, "zest-enum", "su3_3", "--closed-form", "--export-dir", str(tmp_path))
    files = sorted(tmp_path.glob("zesting_*.json"))
    assert len(files) == 9
    trivial = tmp_path / "zesting_a0_b0_s0-1_f0.json"
    code, out, _ = call(capsys, "zest-apply", "--zesting", str(trivial))
    assert json.loads(out)["category"] == gallery.builtin("su3_3").category.to_json()
    code, out, _ = call(capsys, "zest-apply", "--zesting", str(tmp_path / "zesting_a1_b2_s8-9_f0.json"))
    doc = json.loads(out)
    assert code == 0 and doc["modular"] and doc["central_charge"] == "-1"
    code, out, _ = call(capsys, "modular-data", "--zesting", str(tmp_path / "zesting_a1_b2_s8-9_f0.json"))
    assert json.loads(out)["T"][3] == "-1"


def test_info(capsys):
    code, out, _ = call(capsys, "info", "su4_2")
    doc = json.loads(out)
    assert code == 0
    assert doc["global_dimension"] == "24"
    assert doc["component_sizes"] == [3, 2, 3, 2]
