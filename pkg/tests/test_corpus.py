import json

import pytest

from scg.corpus import (
    APPENDIX_IDS,
    NOPSL_IDS,
    PSL_IDS,
    UnknownEntry,
    all_ids,
    corpus_dir,
    load,
    witnesses,
)
from scg.prgraph import PRGraph, to_generators


def test_ids():
    ids = all_ids()
    assert len(APPENDIX_IDS) == 52
    assert len(ids) == 61 == len(set(ids))
    assert ids[:2] == ["A1", "A2"] and ids[-1] == "NOPSL_C"
    on_disk = {p.stem for p in corpus_dir().glob("*.graph")}
    assert on_disk == set(ids)


def test_manifest_covers_every_entry():
    manifest = json.loads((corpus_dir() / "manifest.json").read_text())
    assert set(manifest) == set(all_ids())


@pytest.mark.parametrize("entry_id", all_ids())
def test_entries_load(entry_id):
    e = load(entry_id)
    assert e.graph.n == 11
    assert e.expected_order in (660, 19958400)
    assert e.expected_ip in ("holds", "fails")
    g = e.graph
    assert PRGraph.from_text(g.to_text()) == g
    to_generators(g)


def test_ranks():
    rank5 = {"B1", "B2", "B3", "E11", "E12", "E13"}
    for i in APPENDIX_IDS:
        assert load(i).graph.rank == (5 if i in rank5 else 4)
    for i in PSL_IDS[:4]:
        assert load(i).graph.rank == 3
    assert load("ELEVEN_CELL").graph.rank == 4


def test_kinds():
    assert load("A1").kind == "appendix"
    assert load("PSL2").kind == "psl"
    assert load(NOPSL_IDS[0]).kind == "nopsl"


def test_graph_five_is_the_eleven_cell():
    assert load("PSL5").graph.edges == load("ELEVEN_CELL").graph.edges


def test_a1_witness_words():
    e = load("A1")
    env = e.evaluate_witnesses(to_generators(e.graph))
    assert str(env["alpha"]) == "(9,10,11)"
    assert [w.name for w in witnesses("A1")] == ["a", "b", "alpha", "beta"]


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        load("Z9")


def test_corpus_dir_override(tmp_path, monkeypatch):
    (tmp_path / "X1.graph").write_text("points 2\nrank 1\nedge 1 2 0\n")
    monkeypatch.setenv("SCG_CORPUS_DIR", str(tmp_path))
    assert corpus_dir() == tmp_path
    e = load("X1")
    assert e.graph.n == 2 and e.expected_order is None
