"""Brute-force reference implementations used to check the library."""

from itertools import combinations, product
from random import Random

from scg.perm import Permutation


def closure(gens, degree):
    """Every element of the group generated by ``gens``, as image tuples."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    gens = [g.images if isinstance(g, Permutation) else tuple(g) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def random_perm(rng, degree):
    images = list(range(degree))
    rng.shuffle(images)
    return Permutation(images)


def random_involution(rng, degree, max_pairs=None):
    pts = list(range(degree))
    rng.shuffle(pts)
    k = rng.randint(1, min(degree // 2, max_pairs or degree))
    images = list(range(degree))
    for a, b in zip(pts[0:2 * k:2], pts[1:2 * k:2]):
        images[a], images[b] = b, a
    return Permutation(images)


def random_group_gens(seed, max_degree=8):
    rng = Random(seed)
    degree = rng.randint(2, max_degree)
    ngens = rng.randint(1, 3)
    gens = []
    for _ in range(ngens):
        if rng.random() < 0.4:
            gens.append(random_involution(rng, degree))
        else:
            gens.append(random_perm(rng, degree))
    return degree, gens


def random_string_tuple(rng, degree, rank, tries=200):
    """Involutions satisfying the string commuting conditions, or ``None``."""
    for _ in range(tries):
        rho = []
        for k in range(rank):
            for _ in range(100):
                t = random_involution(rng, degree)
                if all(t * rho[i] == rho[i] * t for i in range(k - 1)):
                    rho.append(t)
                    break
            else:
                break
        if len(rho) == rank:
            return tuple(rho)
    return None


def ip_holds_brute(rho, degree):
    r = len(rho)
    sets = {}
    for k in range(r + 1):
        for J in combinations(range(r), k):
            sets[frozenset(J)] = closure([rho[j] for j in J], degree)
    for J, K in product(sets, repeat=2):
        if sets[J] & sets[K] != sets[J & K]:
            return False
    return True


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def primitive_brute(elements, domain):
    """No nontrivial partition of ``domain`` is preserved by every element."""
    domain = sorted(domain)
    for part in set_partitions(domain):
        if len(part) in (1, len(domain)):
            continue
        blocks = [frozenset(b) for b in part]
        if all(frozenset(g[x] for x in b) in blocks for g in elements for b in blocks):
            return False
    return True


def random_sggi_tuples(seed, count, want_ip=None, max_degree=7):
    """``count`` random non-degenerate string tuples; ``want_ip`` filters on the brute-force verdict."""
    rng = Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, max_degree)
        rho = random_string_tuple(rng, n, rng.randint(2, 4))
        if rho is None or len(set(rho)) < len(rho):
            continue
        if want_ip is not None and ip_holds_brute(rho, n) != want_ip:
            continue
        out.append(rho)
    return out
