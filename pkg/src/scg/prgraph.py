"""Edge-labelled multigraphs of involution tuples.

An ``i``-edge ``{a, b}`` is present whenever the ``i``-th involution swaps
``a`` and ``b``; parallel edges with different labels form double and triple
edges.  The text format, one directive per line, is::

    points 11
    rank 4
    edge 1 2 0      # 1-based vertices, 0-based label

Lines starting with ``#`` are comments.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .perm import Permutation

__all__ = [
    "GraphFormatError",
    "Motif",
    "PRGraph",
    "commuting_components_are_squares",
    "components",
    "dual",
    "find_motifs",
    "fix_boundary_labels_ok",
    "from_generators",
    "parse_graph",
    "restrict",
    "to_generators",
]


class GraphFormatError(ValueError):
    """Malformed graph text; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class PRGraph:
    n: int
    rank: int
    edges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        canon = []
        for u, v, label in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u + 1}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {{{u + 1},{v + 1}}} outside {self.n} vertices")
            if not 0 <= label < self.rank:
                raise ValueError(f"label {label} outside rank {self.rank}")
            canon.append((min(u, v), max(u, v), label))
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))
        if len(set(canon)) != len(canon):
            raise ValueError("repeated edge with the same label")

    def check_matching(self) -> None:
        """Raise unless every label class is a partial matching."""
        for label in range(self.rank):
            used: set[int] = set()
            for u, v, l in self.edges:
                if l != label:
                    continue
                for x in (u, v):
                    if x in used:
                        raise ValueError(f"vertex {x + 1} meets two {label}-edges")
                    used.add(x)

    def edges_with_label(self, label: int) -> list[tuple[int, int]]:
        return [(u, v) for u, v, l in self.edges if l == label]

    def labels_between(self, u: int, v: int) -> frozenset[int]:
        a, b = min(u, v), max(u, v)
        return frozenset(l for x, y, l in self.edges if (x, y) == (a, b))

    def neighbours(self, x: int) -> list[tuple[int, int]]:
        """``(other_vertex, label)`` for every edge at ``x``."""
        out = []
        for u, v, l in self.edges:
            if u == x:
                out.append((v, l))
            elif v == x:
                out.append((u, l))
        return out

    # -- text format ---------------------------------------------------------

    def to_text(self, comment: str | None = None) -> str:
        lines = []
        if comment:
            lines.extend(f"# {c}" for c in comment.splitlines())
        lines.append(f"points {self.n}")
        lines.append(f"rank {self.rank}")
        lines.extend(f"edge {u + 1} {v + 1} {l}" for u, v, l in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> PRGraph:
        return parse_graph(text)

    @classmethod
    def read(cls, path: str | Path) -> PRGraph:
        return parse_graph(Path(path).read_text(encoding="utf-8"))

    def write(self, path: str | Path, comment: str | None = None) -> None:
        Path(path).write_text(self.to_text(comment), encoding="utf-8")

    # -- invariants ----------------------------------------------------------

    def canonical_form(self) -> tuple:
        """A label-preserving isomorphism invariant that is complete for connected graphs.

        Each label class is a matching, so a breadth-first walk that tries
        labels in increasing order is determined by its start vertex; the
        least resulting relabelled edge list over all start vertices is the
        canonical form.  Disconnected graphs are handled per component.
        """
        comps = components(self)
        adj: list[dict[int, int]] = [dict() for _ in range(self.n)]
        for u, v, l in self.edges:
            adj[u][l] = v
            adj[v][l] = u
        forms = []
        for comp in comps:
            best = None
            for start in sorted(comp):
                num = {start: 0}
                queue = [start]
                k = 0
                while k < len(queue):
                    x = queue[k]
                    k += 1
                    for l in range(self.rank):
                        y = adj[x].get(l)
                        if y is not None and y not in num:
                            num[y] = len(num)
                            queue.append(y)
                enc = tuple(sorted(
                    (min(num[u], num[v]), max(num[u], num[v]), l)
                    for u, v, l in self.edges if u in num
                ))
                if best is None or enc < best:
                    best = enc
            forms.append((len(comp), best))
        return (self.n, self.rank, tuple(sorted(forms)))

    def is_isomorphic(self, other: PRGraph) -> bool:
        return self.canonical_form() == other.canonical_form()


def parse_graph(text: str) -> PRGraph:
    n = rank = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        try:
            vals = [int(a) for a in args]
        except ValueError:
            raise GraphFormatError(f"non-integer argument in {raw.strip()!r}", lineno) from None
        if key == "points" and len(vals) == 1:
            n = vals[0]
        elif key == "rank" and len(vals) == 1:
            rank = vals[0]
        elif key == "edge" and len(vals) == 3:
            if n is None or rank is None:
                raise GraphFormatError("edge before points/rank", lineno)
            u, v, label = vals
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise GraphFormatError(f"bad vertices {u} {v}", lineno)
            if not 0 <= label < rank:
                raise GraphFormatError(f"label {label} outside rank {rank}", lineno)
            edges.append((u - 1, v - 1, label))
        else:
            raise GraphFormatError(f"unknown directive {raw.strip()!r}", lineno)
    if n is None or rank is None:
        raise GraphFormatError("missing points or rank directive")
    try:
        g = PRGraph(n, rank, tuple(edges))
        g.check_matching()
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None
    return g


def from_generators(gens: Sequence[Permutation], n: int | None = None) -> PRGraph:
    if n is None:
        if not gens:
            raise ValueError("n required for an empty tuple")
        n = gens[0].degree
    edges = []
    for label, g in enumerate(gens):
        if g.degree != n:
            raise ValueError(f"generator {label} has degree {g.degree}, expected {n}")
        if any(g.images[x] != i for i, x in enumerate(g.images)):
            raise ValueError(f"generator {label} is not an involution")
        edges.extend((a, b, label) for a, b in enumerate(g.images) if a < b)
    return PRGraph(n, len(gens), tuple(edges))


def to_generators(g: PRGraph) -> tuple[Permutation, ...]:
    g.check_matching()
    out = []
    for label in range(g.rank):
        images = list(range(g.n))
        for u, v in g.edges_with_label(label):
            images[u], images[v] = v, u
        out.append(Permutation(images))
    return tuple(out)


def dual(g: PRGraph) -> PRGraph:
    return PRGraph(g.n, g.rank, tuple((u, v, g.rank - 1 - l) for u, v, l in g.edges))


def restrict(g: PRGraph, keep: Iterable[int]) -> PRGraph:
    """Subgraph on the same vertices keeping only the given labels (labels are not renumbered)."""
    keep = set(keep)
    return PRGraph(g.n, g.rank, tuple(e for e in g.edges if e[2] in keep))


def components(g: PRGraph) -> list[frozenset[int]]:
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges:
        a, b = find(u), find(v)
        if a != b:
            parent[max(a, b)] = min(a, b)
    parts: dict[int, set[int]] = {}
    for x in range(g.n):
        parts.setdefault(find(x), set()).add(x)
    return sorted((frozenset(p) for p in parts.values()), key=min)


@dataclass(frozen=True)
class Motif:
    kind: str  # "double_edge", "triple_edge" or "square"
    labels: frozenset[int]
    vertices: tuple[int, ...]


def find_motifs(g: PRGraph) -> list[Motif]:
    """Multiple edges and alternating squares, each reported once.

    Parallel classes with three or more labels are reported as triple edges.
    """
    out = []
    multi: dict[tuple[int, int], set[int]] = {}
    for u, v, l in g.edges:
        multi.setdefault((u, v), set()).add(l)
    for (u, v), labels in sorted(multi.items()):
        if len(labels) == 2:
            out.append(Motif("double_edge", frozenset(labels), (u, v)))
        elif len(labels) >= 3:
            out.append(Motif("triple_edge", frozenset(labels), (u, v)))
    adj: list[dict[int, int]] = [dict() for _ in range(g.n)]
    for u, v, l in g.edges:
        adj[u][l] = v
        adj[v][l] = u
    seen = set()
    for i, j in combinations(range(g.rank), 2):
        for a in range(g.n):
            b = adj[a].get(i)
            c = adj[b].get(j) if b is not None else None
            d = adj[c].get(i) if c is not None else None
            if d is None or adj[d].get(j) != a or len({a, b, c, d}) != 4:
                continue
            key = (i, j, frozenset((a, b, c, d)))
            if key in seen:
                continue
            seen.add(key)
            start = min((a, b, c, d))
            cyc = [a, b, c, d]
            k = cyc.index(start)
            cyc = cyc[k:] + cyc[:k]
            out.append(Motif("square", frozenset((i, j)), tuple(cyc)))
    return out


def fix_boundary_labels_ok(g: PRGraph) -> bool:
    """Every edge between ``Fix(rho_i)`` and its complement has label ``i-1`` or ``i+1``."""
    for i in range(g.rank):
        moved = {x for u, v in g.edges_with_label(i) for x in (u, v)}
        for u, v, l in g.edges:
            if (u in moved) != (v in moved) and abs(l - i) != 1:
                return False
    return True


def commuting_components_are_squares(g: PRGraph) -> bool:
    """For non-consecutive labels ``i, j`` every component of the ``{i, j}``-subgraph
    with more than two vertices is an ``{i, j}``-square."""
    for i, j in combinations(range(g.rank), 2):
        if j - i < 2:
            continue
        sub = restrict(g, (i, j))
        squares = {
            frozenset(m.vertices) for m in find_motifs(sub) if m.kind == "square" and m.labels == {i, j}
        }
        for comp in components(sub):
            if len(comp) > 2 and comp not in squares:
                return False
    return True
