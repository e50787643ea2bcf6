import codecs
import json
import re
from pathlib import Path

import pytest

from zesting import gallery
from zesting.category import CategoryData, validate
from zesting.cohomology import FinAbGroup
from zesting.cyclic import CyclicContext, enumerate_braided, enumerate_ribbon
from zesting.cyclotomic import root_of_unity as z
from zesting.engine import RibbonZesting, check_braided, zesting_to_json

ROOT = Path(__file__).resolve().parents[1]


@pytest.mark.parametrize("name", gallery.names())
def test_builtins_validate(name):
    entry = gallery.builtin(name)
    rep = validate(entry.category)
    assert rep.ok, rep.render()


def test_builtin_shapes(su3_3, su4_4, su4_2):
    assert su3_3.twists[4] == z(18, 4)
    assert su4_4.rank == 35
    assert su4_4.grading.component_sizes() == [10, 8, 9, 8]
    assert su4_2.rank == 10
    assert sum((d * d for d in su4_2.dims), z(1) * 0) == 24


@pytest.mark.parametrize("name", gallery.names())
def test_every_field_has_a_note(name):
    entry = gallery.builtin(name)
    keys = {"dual": "duals"}
    for cap in entry.capabilities:
        note = entry.notes.get(keys.get(cap, cap), "")
        assert note.strip(), f"{name}: no provenance note for {cap}"


@pytest.mark.parametrize("name", gallery.names())
def test_save_load_round_trip(tmp_path, name):
    cat = gallery.builtin(name).category
    path = tmp_path / f"{name}.json"
    gallery.save(cat, path)
    back = gallery.load(path)
    assert back == cat
    gallery.save(back, tmp_path / "again.json")
    assert (tmp_path / "again.json").read_text() == path.read_text()


def test_load_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"labels": [1,\n 2,,]}')
    with pytest.raises(ValueError, match="line 2"):
        gallery.load(path)


def test_non_quadratic_pointed_file_fails_validation(tmp_path):
    cat = gallery.pointed(FinAbGroup.cyclic(4), lambda a: z(8, a[0] ** 2))
    doc = cat.to_json()
    doc.pop("smatrix")
    doc["twists"]["g"] = z(8, 3).to_json()
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    rep = validate(gallery.load(path))
    assert not rep["pointed part quadratic"].ok


def test_zested_export_reloads(tmp_path, su3_3):
    ctx = CyclicContext.build(su3_3)
    rz = enumerate_ribbon(ctx, enumerate_braided(ctx, 1, 2)[0])[0]
    path = tmp_path / "z.json"
    path.write_text(json.dumps(zesting_to_json(rz)))
    back = gallery.load(path)
    assert isinstance(back, RibbonZesting)
    assert check_braided(back.braided)
    assert zesting_to_json(back) == zesting_to_json(rz)


# Words that must not appear in shipped text; stored rot13 so this file stays clean.
_BANNED = [codecs.decode(w, "rot13") for w in (
    r"\ocncre\o", r"\ofcrp\o", r"fcrpvsvpngvba", r"nekvi", r"\[CNCRE", r"\[QREVIRQ", r"\[GEVIVNY",
    r"Gnoyr [0-9]", r"Rd\. ?\(", r"\oPbebyynel\o", r"\oYrzzn\o", r"\oCebcbfvgvba\o",
)] + ["\u00a7", "\u2014"]


def _shipped_files():
    for sub in ("src", "tests", "demos"):
        yield from (p for p in (ROOT / sub).rglob("*.py"))
    for name in ("README.md", "pyproject.toml"):
        if (ROOT / name).exists():
            yield ROOT / name


def test_no_banned_references():
    hits = []
    for path in _shipped_files():
        text = path.read_text()
        for pat in _BANNED:
            for m in re.finditer(pat, text, flags=re.IGNORECASE):
                hits.append(f"{path.relative_to(ROOT)}: {m.group(0)!r}")
    assert not hits, hits
