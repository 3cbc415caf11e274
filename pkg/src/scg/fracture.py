"""Fracture graphs, splits and 2-fracture graphs.

For a label ``i`` the *crossing* ``i``-edges are the ``i``-edges whose ends
lie in different orbits of ``G_i``.  A fracture graph picks one crossing edge
per label (possible when every ``G_i`` is intransitive); a split is a
crossing edge that every fracture graph must pick, i.e. the only crossing
edge of its label.
"""

from __future__ import annotations

from dataclasses import dataclass

from .prgraph import PRGraph, find_motifs, from_generators
from .sggi import Sggi

__all__ = [
    "FractureReport",
    "analyze",
    "check_double_edge_split",
    "check_split_path_property",
    "crossing_edges",
]

Edge = tuple[int, int]


def crossing_edges(s: Sggi, g: PRGraph, i: int) -> list[Edge]:
    orbit_of = {}
    for k, orb in enumerate(s.maximal_parabolic(i).orbits()):
        for x in orb:
            orbit_of[x] = k
    return [(u, v) for u, v in g.edges_with_label(i) if orbit_of[u] != orbit_of[v]]


@dataclass(frozen=True)
class FractureReport:
    crossing: tuple[tuple[Edge, ...], ...]
    parabolic_transitive: tuple[bool, ...]
    splits: tuple[tuple[int, Edge], ...]
    has_fracture: bool
    has_two_fracture: bool
    sample_fracture: PRGraph | None
    sample_two_fracture: PRGraph | None

    @property
    def split_labels(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.splits)

    def to_json(self) -> dict:
        return {
            "has_fracture": self.has_fracture,
            "splits": [{"label": i, "edge": [u + 1, v + 1]} for i, (u, v) in self.splits],
            "two_fracture": self.has_two_fracture,
            "crossing_counts": [len(c) for c in self.crossing],
        }


def analyze(s: Sggi, g: PRGraph | None = None) -> FractureReport:
    if g is None:
        g = from_generators(s.rho, s.degree)
    crossing = tuple(tuple(crossing_edges(s, g, i)) for i in range(s.rank))
    transitive = tuple(s.maximal_parabolic(i).is_transitive() for i in range(s.rank))
    has_fracture = not any(transitive)
    splits = tuple((i, c[0]) for i, c in enumerate(crossing) if has_fracture and len(c) == 1)
    has_two = has_fracture and all(len(c) >= 2 for c in crossing)
    sample = sample2 = None
    if has_fracture:
        sample = PRGraph(g.n, g.rank, tuple((u, v, i) for i, c in enumerate(crossing) for u, v in sorted(c)[:1]))
    if has_two:
        sample2 = PRGraph(g.n, g.rank, tuple((u, v, i) for i, c in enumerate(crossing) for u, v in sorted(c)[:2]))
    return FractureReport(crossing, transitive, splits, has_fracture, has_two, sample, sample2)


def check_split_path_property(g: PRGraph, split: tuple[int, Edge]) -> bool:
    """Every simple path that starts at an end of the ``i``-split, avoids ``i``-edges
    and ends in an ``l``-edge carries every label strictly between ``l`` and ``i``."""
    i, (a, b) = split
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v, l in g.edges:
        if l != i:
            adj[u].append((v, l))
            adj[v].append((u, l))

    def ok(labels: frozenset[int], l: int) -> bool:
        lo, hi = min(l, i), max(l, i)
        return all(m in labels for m in range(lo + 1, hi))

    def walk(x: int, visited: set[int], labels: frozenset[int]) -> bool:
        for y, l in adj[x]:
            if y in visited:
                continue
            seen = labels | {l}
            if not ok(seen, l):
                return False
            visited.add(y)
            good = walk(y, visited, seen)
            visited.discard(y)
            if not good:
                return False
        return True

    return walk(a, {a, b}, frozenset()) and walk(b, {a, b}, frozenset())


def check_double_edge_split(s: Sggi, g: PRGraph | None = None, report: FractureReport | None = None) -> bool:
    """If ``rho_i`` swaps exactly two pairs and some double edge carries ``i``, ``i`` has a split.

    Vacuously true without a fracture graph.
    """
    if g is None:
        g = from_generators(s.rho, s.degree)
    if report is None:
        report = analyze(s, g)
    if not report.has_fracture:
        return True
    doubles = [m.labels for m in find_motifs(g) if m.kind == "double_edge"]
    for i in range(s.rank):
        if len(g.edges_with_label(i)) == 2 and any(i in labels for labels in doubles):
            if i not in report.split_labels:
                return False
    return True
