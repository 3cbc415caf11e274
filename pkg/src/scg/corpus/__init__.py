"""Graphs of degree-11 sggi's with their expected verdicts.

Each entry is a graph file ``<id>.graph`` in this directory (or in
``$SCG_CORPUS_DIR``); expectations and witness words live in
``manifest.json``.  Witness words are evaluated in order, so later words may
refer to earlier names.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from functools import cache
from pathlib import Path

from ..perm import Permutation, parse_cycles
from ..prgraph import PRGraph
from ..words import evaluate

__all__ = [
    "APPENDIX_IDS",
    "CorpusEntry",
    "NamedWord",
    "UnknownEntry",
    "all_ids",
    "corpus_dir",
    "load",
    "witnesses",
]

APPENDIX_IDS = (
    [f"A{k}" for k in range(1, 5)]
    + [f"B{k}" for k in range(1, 16)]
    + [f"C{k}" for k in range(1, 7)]
    + [f"D{k}" for k in range(1, 5)]
    + [f"E{k}" for k in range(1, 14)]
    + [f"F{k}" for k in range(1, 11)]
)
PSL_IDS = [f"PSL{k}" for k in range(1, 6)]
NOPSL_IDS = ["NOPSL_A", "NOPSL_B", "NOPSL_C"]
_ALL = tuple(APPENDIX_IDS + PSL_IDS + ["ELEVEN_CELL"] + NOPSL_IDS)


class UnknownEntry(KeyError):
    pass


def corpus_dir() -> Path:
    env = os.environ.get("SCG_CORPUS_DIR")
    return Path(env) if env else Path(__file__).parent


@dataclass(frozen=True)
class NamedWord:
    name: str
    word: str
    expected: str | None = None


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    graph: PRGraph
    expected_order: int | None
    expected_ip: str
    source: str
    witnesses: tuple[NamedWord, ...] = ()
    ip_witness: dict | None = None
    ipf4: dict | None = None
    notes: tuple[str, ...] = field(default=())

    @property
    def kind(self) -> str:
        if self.id in APPENDIX_IDS:
            return "appendix"
        if self.id in NOPSL_IDS:
            return "nopsl"
        return "psl"

    def evaluate_witnesses(self, gens: tuple[Permutation, ...]) -> dict[str, Permutation]:
        env: dict[str, Permutation] = {}
        for w in self.witnesses:
            env[w.name] = evaluate(w.word, gens, env, self.graph.n)
        return env

    def expected_permutation(self, w: NamedWord, gens, env) -> Permutation | None:
        """The expected value of a witness word: a cycle form or another word."""
        if w.expected is None:
            return None
        text = w.expected.strip()
        if re.fullmatch(r"(\(\s*\d+(\s*,\s*\d+)*\s*\))+|\(\)|id", text):
            return parse_cycles(text, self.graph.n)
        return evaluate(text, gens, env, self.graph.n)


def all_ids() -> list[str]:
    return list(_ALL)


@cache
def _manifest(directory: str) -> dict:
    path = Path(directory) / "manifest.json"
    return json.loads(path.read_text(encoding="utf-8")) if path.exists() else {}


def load(entry_id: str, directory: Path | None = None) -> CorpusEntry:
    d = Path(directory) if directory is not None else corpus_dir()
    path = d / f"{entry_id}.graph"
    if entry_id not in _ALL and not path.exists():
        raise UnknownEntry(entry_id)
    if not path.exists():
        raise UnknownEntry(f"{entry_id}: missing file {path}")
    graph = PRGraph.read(path)
    meta = _manifest(str(d)).get(entry_id, {})
    return CorpusEntry(
        id=entry_id,
        graph=graph,
        expected_order=meta.get("expected_order"),
        expected_ip=meta.get("expected_ip", "fails"),
        source=meta.get("source", ""),
        witnesses=tuple(NamedWord(**w) for w in meta.get("witnesses", [])),
        ip_witness=meta.get("ip_witness"),
        ipf4=meta.get("ipf4"),
        notes=tuple(meta.get("notes", [])),
    )


def witnesses(entry_id: str) -> list[NamedWord]:
    return list(load(entry_id).witnesses)
