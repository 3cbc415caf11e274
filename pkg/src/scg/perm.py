"""Permutations and permutation groups of small degree.

Points are 0-based internally and 1-based in cycle notation.  Permutations act
on the right: ``p * q`` first applies ``p`` and then ``q``, so the image of
``x`` under ``p * q`` is ``q(p(x))``.

Groups are stored as a stabilizer chain over the fixed base ``0, 1, ..., n-2``
(Schreier-Sims).  A common base for every group of a given degree keeps the
chains reproducible and lets :func:`intersect` compare partial base images of
two groups directly.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Iterator, Sequence
from itertools import product
from random import Random

__all__ = [
    "BudgetExceeded",
    "PermGroup",
    "Permutation",
    "build_group",
    "compose",
    "diagonal_isomorphic",
    "element_order",
    "format_cycles",
    "intersect",
    "is_primitive",
    "is_transitive",
    "member",
    "orbits",
    "parity",
    "parse_cycles",
]

DEFAULT_CAP = 20_000_000


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its element budget."""


# -- raw tuple helpers (hot paths work on plain tuples) ---------------------


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(q.__getitem__, p))


def _inv(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def _cycles(images: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = images[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = images[x]
        out.append(tuple(cyc))
    return out


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as its image tuple."""

    __slots__ = ("_hash", "images")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images: tuple) -> Permutation:
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Build from 0-based cycles."""
        images = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x + 1} outside degree {degree}")
                if x in seen:
                    raise ValueError(f"point {x + 1} repeated in cycle notation")
                seen.add(x)
            for a, b in zip(cyc, tuple(cyc[1:]) + tuple(cyc[:1])):
                images[a] = b
        return cls._raw(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> Permutation:
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other.images) != len(self.images):
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation._raw(_mul(self.images, other.images))

    def __invert__(self) -> Permutation:
        return Permutation._raw(_inv(self.images))

    def inverse(self) -> Permutation:
        return ~self

    def __pow__(self, k: int) -> Permutation:
        base = self.images if k >= 0 else _inv(self.images)
        k = abs(k)
        result = tuple(range(len(base)))
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation._raw(result)

    def conjugate(self, g: Permutation) -> Permutation:
        """``g^-1 * self * g`` (the right-action conjugate ``self^g``)."""
        return ~g * self * g

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: Permutation) -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        cyc = _cycles(self.images)
        return cyc if include_fixed else [c for c in cyc if len(c) > 1]

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.images) if i != x)

    def fixed_points(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.images) if i == x)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def is_involution(self) -> bool:
        """True when the permutation has order exactly 2."""
        return not self.is_identity() and all(self.images[x] == i for i, x in enumerate(self.images))

    @property
    def sign(self) -> int:
        return -1 if (self.degree - len(_cycles(self.images))) % 2 else 1

    def is_even(self) -> bool:
        return self.sign == 1

    def order(self) -> int:
        return math.lcm(*(len(c) for c in _cycles(self.images))) if self.images else 1

    def extend(self, degree: int) -> Permutation:
        """The same permutation on a larger point set, fixing the new points."""
        if degree < self.degree:
            raise ValueError("cannot shrink a permutation")
        return Permutation._raw(self.images + tuple(range(self.degree, degree)))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1,2)(3,5,8)"``.

    ``"()"`` and ``"id"`` denote the identity; whitespace is ignored.
    """
    s = "".join(text.split())
    if s in ("", "()", "id"):
        return Permutation.identity(degree)
    if _CYCLE_RE.sub("", s):
        raise ValueError(f"malformed cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(s):
        if not body:
            continue
        try:
            cycles.append([int(t) - 1 for t in body.split(",")])
        except ValueError:
            raise ValueError(f"malformed cycle notation: {text!r}") from None
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    """Canonical 1-based cycle notation (least point first, cycles sorted)."""
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` then ``q``."""
    return p * q


def parity(p: Permutation) -> str:
    return "even" if p.is_even() else "odd"


def element_order(p: Permutation) -> int:
    return p.order()


# -- groups -----------------------------------------------------------------


class _Level:
    """One level of the stabilizer chain: a base point, its orbit and coset reps."""

    __slots__ = ("base", "gens", "inv", "trans")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[tuple] = []
        # trans[p] maps the base point to p; inv[p] is its inverse
        self.trans: dict[int, tuple] = {}
        self.inv: dict[int, tuple] = {}

    def reset(self, identity: tuple) -> None:
        self.trans = {self.base: identity}
        self.inv = {self.base: identity}

    def extend_orbit(self, new_gens: Sequence[tuple]) -> None:
        """Grow the orbit after ``new_gens`` joined ``self.gens``; existing reps are kept."""
        trans, inv = self.trans, self.inv
        queue = []
        for p, u in list(trans.items()):
            for g in new_gens:
                q = g[p]
                if q not in trans:
                    trans[q] = _mul(u, g)
                    inv[q] = _inv(trans[q])
                    queue.append(q)
        gens = self.gens
        while queue:
            p = queue.pop()
            u = trans[p]
            for g in gens:
                q = g[p]
                if q not in trans:
                    trans[q] = _mul(u, g)
                    inv[q] = _inv(trans[q])
                    queue.append(q)


class PermGroup:
    """A permutation group given by generators, with a stabilizer chain.

    The chain uses the base ``0, 1, ..., degree-2``; levels whose orbit is a
    single point are kept so that every group of one degree shares a base.
    Instances are immutable after construction.
    """

    def __init__(self, generators: Iterable[Permutation | Sequence[int]] = (), degree: int | None = None):
        gens = [g.images if isinstance(g, Permutation) else tuple(g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = len(gens[0])
        if degree < 1:
            raise ValueError("empty degree")
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
        self.degree = degree
        self._identity = tuple(range(degree))
        self.generators: tuple[Permutation, ...] = tuple(Permutation._raw(g) for g in gens)
        self._levels = [_Level(b) for b in range(max(degree - 1, 0))]
        for lv in self._levels:
            lv.reset(self._identity)
        self._schreier_sims([g for g in gens if g != self._identity])

    # -- construction ------------------------------------------------------

    def _first_moved_level(self, g: tuple) -> int:
        for i, x in enumerate(g):
            if i != x:
                return i
        return len(self._levels)

    def _add_strong(self, h: tuple, upto: int) -> None:
        for j in range(upto + 1):
            lv = self._levels[j]
            lv.gens.append(h)
            lv.extend_orbit([h])

    def _schreier_sims(self, gens: list[tuple]) -> None:
        levels = self._levels
        if not levels:
            return
        for g in gens:
            self._add_strong(g, min(self._first_moved_level(g), len(levels) - 1))
        checked: list[set] = [set() for _ in levels]
        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            found = None
            for p in list(lv.trans):
                u = lv.trans[p]
                for gi, s in enumerate(lv.gens):
                    key = (p, gi)
                    if key in checked[i]:
                        continue
                    checked[i].add(key)
                    q = s[p]
                    sg = _mul(_mul(u, s), lv.inv[q])
                    h, j = self._sift_from(sg, i + 1)
                    if h != self._identity:
                        found = (h, j)
                        break
                if found:
                    break
            if found is None:
                i -= 1
                continue
            h, j = found
            # h fixes base points below j and is new at level j
            j = min(j, len(levels) - 1)
            self._add_strong(h, j)
            i = j

    def _sift_from(self, g: tuple, start: int) -> tuple[tuple, int]:
        for j in range(start, len(self._levels)):
            lv = self._levels[j]
            p = g[lv.base]
            inv = lv.inv.get(p)
            if inv is None:
                return g, j
            g = _mul(g, inv)
        return g, len(self._levels)

    # -- queries -------------------------------------------------------------

    @property
    def order(self) -> int:
        return math.prod(len(lv.trans) for lv in self._levels)

    def __len__(self) -> int:
        return self.order

    def sift(self, g: Permutation) -> tuple[Permutation, int]:
        """Residue of ``g`` and the level where sifting stopped."""
        h, j = self._sift_from(g.images, 0)
        return Permutation._raw(h), j

    def __contains__(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            raise ValueError(f"degree mismatch: {g.degree} vs {self.degree}")
        h, _ = self._sift_from(g.images, 0)
        return h == self._identity

    def contains(self, g: Permutation) -> bool:
        return g in self

    def identity(self) -> Permutation:
        return Permutation._raw(self._identity)

    def is_trivial(self) -> bool:
        return self.order == 1

    def base_orbits(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(lv.trans)) for lv in self._levels]

    def strong_generators(self) -> list[Permutation]:
        seen: dict[tuple, None] = {}
        for lv in self._levels:
            for g in lv.gens:
                seen.setdefault(g)
        return [Permutation._raw(g) for g in seen]

    def stabilizer_level(self, i: int) -> PermGroup:
        """The pointwise stabilizer of base points ``0..i-1`` as a group."""
        gens = [Permutation._raw(g) for g in self._levels[i].gens] if i < len(self._levels) else []
        return PermGroup(gens, degree=self.degree)

    def elements(self) -> Iterator[Permutation]:
        """Stream every element once, as products of coset representatives."""
        reps = [list(lv.trans.values()) for lv in reversed(self._levels)]
        for combo in product(*reps):
            g = self._identity
            for u in combo:
                g = _mul(g, u)
            yield Permutation._raw(g)

    def random_element(self, rng: Random) -> Permutation:
        g = self._identity
        for lv in reversed(self._levels):
            reps = lv.trans
            g = _mul(g, reps[rng.choice(sorted(reps))])
        return Permutation._raw(g)

    def orbits(self, points: Iterable[int] | None = None) -> list[frozenset[int]]:
        return _orbits(self.generators, self.degree, points)

    def orbit(self, x: int) -> frozenset[int]:
        return next(o for o in self.orbits() if x in o)

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def restricted(self, points: Iterable[int]) -> tuple[PermGroup, list[int]]:
        """The group induced on an invariant point set, relabelled ``0..len-1``.

        Returns the induced group and the sorted list of original points.
        """
        pts = sorted(set(points))
        where = {p: k for k, p in enumerate(pts)}
        gens = []
        for g in self.generators:
            try:
                gens.append(tuple(where[g.images[p]] for p in pts))
            except KeyError:
                raise ValueError("point set is not invariant under the group") from None
        return PermGroup(gens, degree=len(pts)), pts

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return all(g in other for g in self.generators)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.order == other.order
            and self.is_subgroup_of(other)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order}, ngens={len(self.generators)})"


def build_group(gens: Iterable[Permutation], degree: int | None = None) -> PermGroup:
    return PermGroup(gens, degree=degree)


def member(G: PermGroup, p: Permutation) -> bool:
    return p in G


def _orbits(gens: Sequence[Permutation], degree: int, points: Iterable[int] | None = None) -> list[frozenset[int]]:
    parent = list(range(degree))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(g.images):
            a, b = find(x), find(y)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, set[int]] = {}
    for x in range(degree) if points is None else points:
        classes.setdefault(find(x), set()).add(x)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def orbits(G: PermGroup) -> list[frozenset[int]]:
    """Orbit partition of the natural action, sorted by least point."""
    return G.orbits()


def is_transitive(G: PermGroup) -> bool:
    return G.is_transitive()


def _minimal_block(gens: Sequence[tuple], domain: Sequence[int], a: int, b: int) -> list[frozenset[int]]:
    """Finest block system on ``domain`` in which ``a`` and ``b`` share a block."""
    parent = {x: x for x in domain}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> bool:
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(a, b)
    pending = [(a, b)]
    while pending:
        x, y = pending.pop()
        for g in gens:
            gx, gy = g[x], g[y]
            if union(gx, gy):
                pending.append((gx, gy))
    blocks: dict[int, set[int]] = {}
    for x in domain:
        blocks.setdefault(find(x), set()).add(x)
    return sorted((frozenset(s) for s in blocks.values()), key=min)


def is_primitive(
    G: PermGroup, domain: Iterable[int] | None = None
) -> tuple[bool, list[frozenset[int]] | None]:
    """Primitivity of ``G`` on ``domain`` (default: all points).

    ``domain`` must be a single orbit.  Returns ``(True, None)`` or
    ``(False, blocks)`` where ``blocks`` is a block system with the smallest
    nontrivial block size found by closing ``{b0, x}`` for every ``x``.
    """
    pts = sorted(set(range(G.degree)) if domain is None else set(domain))
    if not pts:
        raise ValueError("empty domain")
    if G.orbits(pts)[0] != frozenset(pts) or any(g.images[p] not in set(pts) for g in G.generators for p in pts):
        raise ValueError("group is not transitive on the domain")
    if len(pts) <= 2:
        return True, None
    gens = [g.images for g in G.generators]
    b0 = pts[0]
    best = None
    for x in pts[1:]:
        blocks = _minimal_block(gens, pts, b0, x)
        if len(blocks) > 1 and (best is None or len(blocks[0]) < len(best[0])):
            best = blocks
    return (best is None), best


# -- intersection ------------------------------------------------------------


def _search_leaf(H: PermGroup, K: PermGroup, level: int, q: int) -> tuple | None:
    """Some element of ``H ∩ K`` fixing base points below ``level`` and mapping ``level`` to ``q``.

    Depth-first over H's coset representatives; a branch is cut as soon as
    no element of K agrees with the partial base images.
    """
    hl, kl = H._levels, K._levels
    nlev = len(hl)
    if q not in hl[level].trans or q not in kl[level].trans:
        return None
    t0 = hl[level].trans[q]
    winv0 = kl[level].inv[q]

    def descend(j: int, t: tuple, winv: tuple) -> tuple | None:
        # t: product of chosen H reps for levels < j (applied last); winv: inverse of K's counterpart
        if j == nlev:
            return t
        hlev, ktrans = hl[j], kl[j].trans
        for p, u in hlev.trans.items():
            image = t[p]
            r = winv[image]
            if r not in ktrans:
                continue
            found = descend(j + 1, _mul(u, t), _mul(winv, kl[j].inv[r]))
            if found is not None:
                return found
        return None

    return descend(level + 1, t0, winv0)


def intersect(
    G: PermGroup,
    H: PermGroup,
    cap: int = DEFAULT_CAP,
    seed: Iterable[Permutation] = (),
    stop_at_first: bool = False,
) -> PermGroup:
    """The subgroup ``G ∩ H``.

    The smaller group is searched through its transversal product with
    base-image pruning against the other group; elements are never stored,
    and a generating set is collected whenever a found element is not yet in
    the partial result.  ``seed`` must lie in both groups and starts the
    partial result; with ``stop_at_first`` the search returns right after the
    first element outside the seed subgroup is added (its last generator).

    Raises :class:`BudgetExceeded` when the smaller group has more than
    ``cap`` elements.
    """
    if G.degree != H.degree:
        raise ValueError(f"degree mismatch: {G.degree} vs {H.degree}")
    small, big = (G, H) if G.order <= H.order else (H, G)
    if small.order > cap:
        raise BudgetExceeded(f"smaller group has {small.order} elements, cap is {cap}")
    gens = list(seed)
    P = PermGroup(gens, degree=G.degree)
    for i in reversed(range(len(small._levels))):
        while True:
            covered = P._levels[i].trans
            witness = None
            for q in sorted(small._levels[i].trans):
                if q in covered:
                    continue
                witness = _search_leaf(small, big, i, q)
                if witness is not None:
                    break
            if witness is None:
                break
            gens.append(Permutation._raw(witness))
            P = PermGroup(gens, degree=G.degree)
            if stop_at_first:
                return P
    return P


def intersect_by_enumeration(G: PermGroup, H: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """``G ∩ H`` by streaming every element of the smaller group (no pruning)."""
    if G.degree != H.degree:
        raise ValueError(f"degree mismatch: {G.degree} vs {H.degree}")
    small, big = (G, H) if G.order <= H.order else (H, G)
    if small.order > cap:
        raise BudgetExceeded(f"smaller group has {small.order} elements, cap is {cap}")
    gens: list[Permutation] = []
    P = PermGroup(gens, degree=G.degree)
    for g in small.elements():
        if g in big and g not in P:
            gens.append(g)
            P = PermGroup(gens, degree=G.degree)
    return P


def diagonal_isomorphic(t1: Sequence[Permutation], t2: Sequence[Permutation]) -> bool:
    """Whether ``t1[i] -> t2[i]`` extends to an isomorphism of the generated groups."""
    if len(t1) != len(t2):
        raise ValueError("tuples of different length")
    if not t1:
        return True
    n1, n2 = t1[0].degree, t2[0].degree
    o1 = PermGroup(t1, degree=n1).order
    if PermGroup(t2, degree=n2).order != o1:
        return False
    paired = [a.images + tuple(n1 + x for x in b.images) for a, b in zip(t1, t2)]
    return PermGroup(paired, degree=n1 + n2).order == o1
