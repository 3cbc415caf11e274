"""String groups generated by involutions and the intersection property."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .perm import DEFAULT_CAP, PermGroup, Permutation, intersect
from .words import evaluate

__all__ = [
    "CommutingViolation",
    "DegenerateGenerators",
    "IpVerdict",
    "IpWitness",
    "NotInvolution",
    "Sggi",
    "SggiError",
    "check_ip",
    "check_ip_full",
    "check_ip_recursive",
    "check_witness",
    "dual",
    "independence",
    "parabolic",
    "schlafli_type",
    "sesqui_extension",
    "validate_sggi",
]


class SggiError(ValueError):
    pass


class NotInvolution(SggiError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"generator {index} is not an involution")


class CommutingViolation(SggiError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"generators {i} and {j} do not commute")


class DegenerateGenerators(SggiError):
    pass


@dataclass(frozen=True, eq=False)
class Sggi:
    rho: tuple[Permutation, ...]
    group: PermGroup
    degenerate: bool = False
    _parabolics: dict = field(default_factory=dict, repr=False)

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def rank(self) -> int:
        return len(self.rho)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def is_transitive(self) -> bool:
        return self.group.is_transitive()

    @property
    def is_even(self) -> bool:
        return all(r.is_even() for r in self.rho)

    def parabolic(self, labels: Iterable[int]) -> PermGroup:
        key = frozenset(labels)
        if not key <= set(range(self.rank)):
            raise ValueError(f"labels {sorted(key)} outside rank {self.rank}")
        if key not in self._parabolics:
            if len(key) == self.rank:
                self._parabolics[key] = self.group
            else:
                self._parabolics[key] = PermGroup([self.rho[j] for j in sorted(key)], degree=self.degree)
        return self._parabolics[key]

    def maximal_parabolic(self, i: int) -> PermGroup:
        """``G_i``, generated by every generator except the ``i``-th."""
        return self.parabolic(set(range(self.rank)) - {i})

    def word(self, text: str, env=None) -> Permutation:
        return evaluate(text, self.rho, env, self.degree)


def validate_sggi(rho: Sequence[Permutation], n: int | None = None, allow_degenerate: bool = False) -> Sggi:
    """Check the involution and commuting conditions and build the group.

    Identity or repeated generators raise :class:`DegenerateGenerators`
    unless ``allow_degenerate``; the result then has ``degenerate=True``.
    """
    rho = tuple(rho)
    if n is None:
        if not rho:
            raise SggiError("degree required for an empty tuple")
        n = rho[0].degree
    for i, r in enumerate(rho):
        if r.degree != n:
            raise SggiError(f"generator {i} has degree {r.degree}, expected {n}")
    degenerate = False
    for i, r in enumerate(rho):
        if r.is_identity():
            degenerate = True
        elif not r.is_involution():
            raise NotInvolution(i)
    for i, j in combinations(range(len(rho)), 2):
        if j - i > 1 and rho[i] * rho[j] != rho[j] * rho[i]:
            raise CommutingViolation(i, j)
    if len(set(rho)) < len(rho):
        degenerate = True
    if degenerate and not allow_degenerate:
        raise DegenerateGenerators("identity or repeated generator")
    return Sggi(rho, PermGroup(rho, degree=n), degenerate)


def parabolic(s: Sggi, J: Iterable[int]) -> PermGroup:
    return s.parabolic(J)


def schlafli_type(s: Sggi) -> tuple[int, ...]:
    return tuple((s.rho[i - 1] * s.rho[i]).order() for i in range(1, s.rank))


def independence(s: Sggi) -> bool:
    return all(s.rho[i] not in s.maximal_parabolic(i) for i in range(s.rank))


def dual(s: Sggi) -> Sggi:
    return Sggi(tuple(reversed(s.rho)), s.group, s.degenerate)


# -- intersection property ----------------------------------------------------


@dataclass(frozen=True)
class IpWitness:
    """``element`` lies in the parabolics of ``J`` and ``K`` but not in that of ``J ∩ K``."""

    element: Permutation
    J: frozenset[int]
    K: frozenset[int]

    def to_json(self) -> dict:
        return {"element": str(self.element), "J": sorted(self.J), "K": sorted(self.K)}


@dataclass(frozen=True)
class IpVerdict:
    status: str  # "holds" or "fails"
    witness: IpWitness | None = None
    method: str = "full"  # "full", "recursive_2E16" or "witness_only"

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_json() if self.witness else None,
            "method": self.method,
        }


def check_witness(s: Sggi, w: IpWitness) -> bool:
    """The three membership tests that certify an intersection-property failure."""
    return (
        w.element in s.parabolic(w.J)
        and w.element in s.parabolic(w.K)
        and w.element not in s.parabolic(w.J & w.K)
    )


def _pair_failure(s: Sggi, J: frozenset, K: frozenset, cap: int) -> IpWitness | None:
    GJ, GK, GJK = s.parabolic(J), s.parabolic(K), s.parabolic(J & K)
    if GJ.order == GJK.order or GK.order == GJK.order:
        return None
    inter = intersect(GJ, GK, cap=cap, seed=GJK.generators, stop_at_first=True)
    if inter.order == GJK.order:
        return None
    return IpWitness(inter.generators[-1], J, K)


def _subsets(labels: Sequence[int]) -> list[frozenset[int]]:
    out = []
    for k in range(len(labels) + 1):
        out.extend(frozenset(c) for c in combinations(labels, k))
    return out


def check_ip_full(s: Sggi, cap: int = DEFAULT_CAP, labels: Sequence[int] | None = None) -> IpVerdict:
    """Test every pair of label sets; the first failing pair supplies the witness.

    ``labels`` restricts the test to the sub-sggi on those generators.
    """
    labels = tuple(range(s.rank)) if labels is None else tuple(labels)
    subsets = _subsets(labels)
    for a, J in enumerate(subsets):
        for K in subsets[a + 1:]:
            if J <= K or K <= J:
                continue
            w = _pair_failure(s, J, K, cap)
            if w is not None:
                return IpVerdict("fails", w, "full")
    return IpVerdict("holds", None, "full")


def check_ip_recursive(s: Sggi, cap: int = DEFAULT_CAP, labels: Sequence[int] | None = None) -> IpVerdict:
    """Recursive test: both end-deleted sub-sggi's, then ``G_0 ∩ G_{r-1} = G_{0,r-1}``.

    The last step compares subgroups (order of the intersection against the
    order of ``G_{0,r-1}``), which is what the recursion needs.
    """
    labels = tuple(range(s.rank)) if labels is None else tuple(labels)
    if len(labels) <= 2:
        v = check_ip_full(s, cap, labels)
        return IpVerdict(v.status, v.witness, "recursive_2E16")
    for sub in (labels[1:], labels[:-1]):
        v = check_ip_recursive(s, cap, sub)
        if not v.holds:
            return v
    first, last = labels[0], labels[-1]
    J = frozenset(labels) - {first}
    K = frozenset(labels) - {last}
    w = _pair_failure(s, J, K, cap)
    if w is not None:
        return IpVerdict("fails", w, "recursive_2E16")
    return IpVerdict("holds", None, "recursive_2E16")


def check_ip(s: Sggi, cap: int = DEFAULT_CAP, method: str = "recursive") -> IpVerdict:
    if method == "full":
        return check_ip_full(s, cap)
    if method == "recursive":
        return check_ip_recursive(s, cap)
    raise ValueError(f"unknown method {method!r}")


def sesqui_extension(s: Sggi, k: int, tau: Permutation | None = None) -> Sggi:
    """Replace ``rho[k]`` by ``rho[k] * tau`` for an involution ``tau`` centralizing ``G``.

    Without ``tau`` two fresh points are adjoined and ``tau`` swaps them.
    """
    if not 0 <= k < s.rank:
        raise ValueError(f"index {k} outside rank {s.rank}")
    rho = s.rho
    group = s.group
    if tau is None:
        n = s.degree
        rho = tuple(r.extend(n + 2) for r in rho)
        group = PermGroup(rho, degree=n + 2)
        images = list(range(n + 2))
        images[n], images[n + 1] = n + 1, n
        tau = Permutation(images)
    if tau.degree != rho[0].degree:
        raise ValueError(f"tau has degree {tau.degree}, generators have {rho[0].degree}")
    if not tau.is_involution():
        raise ValueError("tau is not an involution")
    for i, r in enumerate(rho):
        if r * tau != tau * r:
            raise ValueError(f"tau does not commute with generator {i}")
    if tau in group:
        raise ValueError("tau lies in the group")
    new = tuple(r * tau if i == k else r for i, r in enumerate(rho))
    return validate_sggi(new, allow_degenerate=s.degenerate)
