"""Exhaustive search for string group representations of small groups.

Tuples of involutions are generated with the commuting constraints applied
as filters (``rho_k`` is drawn only from involutions commuting with
``rho_0 .. rho_{k-2}``), kept when they generate the whole group (and pass
the intersection property when asked), and finally grouped into classes:
first conjugacy under the group, then abstract isomorphism of the
generating tuples, optionally identifying a tuple with its reverse.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .corpus import corpus_dir
from .perm import (
    BudgetExceeded,
    PermGroup,
    Permutation,
    _orbits,
    diagonal_isomorphic,
    parse_cycles,
)
from .prgraph import dual as dual_graph
from .prgraph import from_generators
from .sggi import Sggi, check_ip_recursive

__all__ = [
    "SearchResult",
    "SearchSpec",
    "commuting_triples",
    "enumerate_tuples",
    "graph_classes_up_to_duality",
    "involutions",
    "m11_rank3_check",
    "named_group",
]

Tuple = tuple[Permutation, ...]

ELEMENT_BUDGET = 10_000
DEFAULT_SEARCH_BUDGET = 100_000_000


def named_group(name: str) -> PermGroup:
    """``psl2_11``, ``m11`` or ``s4`` from the corpus group table."""
    table = json.loads((corpus_dir() / "groups.json").read_text(encoding="utf-8"))
    if name not in table:
        raise KeyError(f"unknown group {name!r}; known: {sorted(table)}")
    spec = table[name]
    gens = [parse_cycles(c, spec["degree"]) for c in spec["generators"]]
    return PermGroup(gens, degree=spec["degree"])


def _elements(G: PermGroup, budget: int = ELEMENT_BUDGET) -> list[Permutation]:
    if G.order > budget:
        raise BudgetExceeded(f"group of order {G.order} exceeds the element budget {budget}")
    return sorted(G.elements())


def involutions(G: PermGroup, budget: int = ELEMENT_BUDGET) -> list[Permutation]:
    return [g for g in _elements(G, budget) if g.is_involution()]


@dataclass(frozen=True)
class SearchSpec:
    group: PermGroup
    rank: int
    require_ip: bool = True
    quotient: str = "iso_and_duality"  # "none", "iso" or "iso_and_duality"
    budget: int = DEFAULT_SEARCH_BUDGET
    jobs: int = 1
    conjugacy_reduction: bool = False

    def __post_init__(self):
        if self.quotient not in ("none", "iso", "iso_and_duality"):
            raise ValueError(f"unknown quotient {self.quotient!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")


@dataclass
class SearchResult:
    spec: SearchSpec
    tuples: list[Tuple]
    representatives: list[Tuple]
    class_sizes: list[int] = field(default_factory=list)
    candidates: int = 0

    def __len__(self) -> int:
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)


def _key(t: Sequence[Permutation]) -> tuple:
    return tuple(p.images for p in t)


def _scan_branch(args) -> tuple[list[tuple[int, ...]], int]:
    """Complete every tuple whose first entry is ``first``; returns index tuples and the candidate count."""
    inv_images, comm, rank, first, target_order, orbit_sig, require_ip, budget = args
    invs = [Permutation(x) for x in inv_images]
    degree = len(inv_images[0])
    found = []
    count = 0

    def extend(prefix: list[int]):
        nonlocal count
        k = len(prefix)
        if k == rank:
            count += 1
            if count > budget:
                raise BudgetExceeded(f"more than {budget} candidate tuples")
            t = [invs[i] for i in prefix]
            if _signature(_orbits(t, degree)) != orbit_sig:
                return
            H = PermGroup(t, degree=degree)
            if H.order != target_order:
                return
            if require_ip:
                s = Sggi(tuple(t), H, len(set(t)) < len(t))
                if not check_ip_recursive(s).holds:
                    return
            found.append(tuple(prefix))
            return
        allowed = range(len(invs)) if k < 2 else sorted(set.intersection(*(comm[i] for i in prefix[: k - 1])))
        for j in allowed:
            prefix.append(j)
            extend(prefix)
            prefix.pop()

    extend([first])
    return found, count


def _signature(orbits) -> tuple:
    return tuple(sorted(tuple(sorted(o)) for o in orbits))


def enumerate_tuples(spec: SearchSpec) -> SearchResult:
    """All string tuples of involutions generating ``spec.group``, grouped per ``spec.quotient``."""
    G = spec.group
    invs = involutions(G)
    if not invs:
        raise ValueError("the group contains no involutions")
    if PermGroup(invs, degree=G.degree).order != G.order:
        raise ValueError("the group is not generated by involutions")
    comm = [
        {j for j, b in enumerate(invs) if a * b == b * a}
        for a in invs
    ]
    sig = _signature(G.orbits())
    images = [p.images for p in invs]
    firsts = _class_representatives(G, invs) if spec.conjugacy_reduction else range(len(invs))
    tasks = [
        (images, comm, spec.rank, first, G.order, sig, spec.require_ip, spec.budget)
        for first in firsts
    ]
    if spec.jobs > 1:
        with ProcessPoolExecutor(max_workers=spec.jobs) as pool:
            results = list(pool.map(_scan_branch, tasks))
    else:
        results = [_scan_branch(t) for t in tasks]
    total = sum(c for _, c in results)
    if total > spec.budget:
        raise BudgetExceeded(f"{total} candidate tuples exceed the budget {spec.budget}")
    tuples = [tuple(invs[i] for i in idx) for found, _ in results for idx in found]
    if spec.conjugacy_reduction:
        # the solution set is closed under conjugation, so the orbits of the hits recover all of it
        elements = _elements(G)
        tuples = list({tuple(p.conjugate(g) for p in t) for t in tuples for g in elements})
    tuples.sort(key=_key)
    reps, sizes = _classify(G, tuples, spec.quotient)
    return SearchResult(spec, tuples, reps, sizes, total)


def _class_representatives(G: PermGroup, invs: list[Permutation]) -> list[int]:
    index = {t: k for k, t in enumerate(invs)}
    seen: set[Permutation] = set()
    reps = []
    elements = _elements(G)
    for k, t in enumerate(invs):
        if t not in seen:
            seen |= {t.conjugate(g) for g in elements}
            reps.append(index[t])
    return reps


def _classify(G: PermGroup, tuples: list[Tuple], quotient: str) -> tuple[list[Tuple], list[int]]:
    if quotient == "none":
        return list(tuples), [1] * len(tuples)
    elements = _elements(G)
    index = {_key(t): k for k, t in enumerate(tuples)}
    orbit_of = [-1] * len(tuples)
    orbits: list[list[int]] = []
    for k, t in enumerate(tuples):
        if orbit_of[k] >= 0:
            continue
        members = set()
        for g in elements:
            c = _key(tuple(p.conjugate(g) for p in t))
            members.add(index[c])
        for m in members:
            orbit_of[m] = len(orbits)
        orbits.append(sorted(members))
    parent = list(range(len(orbits)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        a, b = find(a), find(b)
        if a != b:
            parent[max(a, b)] = min(a, b)

    reps = [tuples[o[0]] for o in orbits]
    if quotient == "iso_and_duality":
        for a, o in enumerate(orbits):
            rev = _key(tuple(reversed(tuples[o[0]])))
            if rev in index:
                union(a, orbit_of[index[rev]])
    for a in range(len(orbits)):
        for b in range(a + 1, len(orbits)):
            if find(a) == find(b):
                continue
            if diagonal_isomorphic(reps[a], reps[b]) or (
                quotient == "iso_and_duality" and diagonal_isomorphic(reps[a], tuple(reversed(reps[b])))
            ):
                union(a, b)
    classes: dict[int, list[int]] = {}
    for a, o in enumerate(orbits):
        classes.setdefault(find(a), []).extend(o)
    out = sorted((min(tuples[m] for m in members), len(members)) for members in classes.values())
    out = sorted(((tuples_min, size) for tuples_min, size in out), key=lambda x: _key(x[0]))
    return [t for t, _ in out], [size for _, size in out]


def graph_classes_up_to_duality(tuples: Iterable[Sequence[Permutation]]) -> int:
    """Number of graphs up to label-preserving isomorphism and label reversal."""
    forms = set()
    for t in tuples:
        g = from_generators(tuple(t))
        forms.add(min(g.canonical_form(), dual_graph(g).canonical_form()))
    return len(forms)


def commuting_triples(G: PermGroup, exhaustive: bool = False) -> int:
    """Count triples of involutions ``(t0, t1, t2)`` with ``t0 t2 = t2 t0`` generating ``G``.

    By default ``t0`` runs over one representative per conjugacy class of
    involutions and each count is multiplied by the class size (conjugation
    permutes generating triples); ``exhaustive`` loops over every ``t0``.
    """
    elements = _elements(G)
    invs = [g for g in elements if g.is_involution()]
    comm = {a: [b for b in invs if a * b == b * a] for a in invs}
    if exhaustive:
        firsts = [(t, 1) for t in invs]
    else:
        firsts = []
        seen: set[Permutation] = set()
        for t in invs:
            if t in seen:
                continue
            cls = {t.conjugate(g) for g in elements}
            seen |= cls
            firsts.append((t, len(cls)))
    target = G.order
    total = 0
    for t0, weight in firsts:
        count = 0
        for t1, t2 in product(invs, comm[t0]):
            H = PermGroup((t0, t1, t2), degree=G.degree)
            if H.order == target:
                count += 1
        total += count * weight
    return total


def m11_rank3_check(exhaustive: bool = False) -> int:
    return commuting_triples(named_group("m11"), exhaustive=exhaustive)
