from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import closure, primitive_brute, random_group_gens, random_perm

from scg.perm import (
    BudgetExceeded,
    PermGroup,
    Permutation,
    compose,
    diagonal_isomorphic,
    element_order,
    format_cycles,
    intersect,
    intersect_by_enumeration,
    is_primitive,
    parity,
    parse_cycles,
)

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(n)).map(Permutation))


def P(text, n):
    return parse_cycles(text, n)


def test_parse_and_format():
    p = P("(1,2)(3,5,8)", 8)
    assert p.images == (1, 0, 4, 3, 7, 5, 6, 2)
    assert format_cycles(p) == "(1,2)(3,5,8)"
    assert format_cycles(P("(5,3,8)", 8)) == "(3,8,5)"
    assert P("()", 4).is_identity()
    assert P("id", 4).is_identity()
    assert P(" ( 1 , 2 ) ", 3) == P("(1,2)", 3)


@pytest.mark.parametrize("bad", ["(1,2", "1,2", "(1,x)", "(1,1)", "(1,9)"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        P(bad, 4)


def test_composition_applies_left_first():
    p = compose(P("(1,2)", 3), P("(2,3)", 3))
    assert p == P("(1,3,2)", 3)
    assert p.images[0] == 2


def test_involution_squares_to_identity():
    t = P("(1,2)", 2)
    assert (t * t).is_identity()
    assert t.is_involution()
    assert not Permutation.identity(3).is_involution()


def test_parity_and_order():
    assert parity(P("(1,2)", 4)) == "odd"
    assert parity(P("(1,2)(3,4)", 4)) == "even"
    assert parity(P("(1,2,3)", 3)) == "even"
    assert element_order(P("(1,2)(3,5,8)", 8)) == 6
    assert element_order(P("(1,2)(3,5,8,10,7,6,4)(9,11)", 11)) == 14
    assert element_order(Permutation.identity(5)) == 1


@given(perms)
def test_cycle_round_trip(p):
    assert parse_cycles(format_cycles(p), p.degree) == p


@given(perms, st.data())
def test_group_axioms(p, data):
    q = data.draw(st.permutations(range(p.degree)).map(Permutation))
    assert (p * ~p).is_identity()
    assert ~(p * q) == ~q * ~p
    assert (p * q).sign == p.sign * q.sign
    assert (p ** p.order()).is_identity()
    assert p.conjugate(q) == ~q * p * q


def test_named_orders():
    n = 11
    cyc = P("(" + ",".join(map(str, range(1, 12))) + ")", n)
    assert PermGroup([cyc, P("(1,2)", n)]).order == 39916800
    assert PermGroup([P("(1,2,3)", n), cyc]).order == 19958400
    m11 = PermGroup([cyc, P("(3,7,11,8)(4,10,5,6)", n)])
    assert m11.order == 7920
    assert PermGroup([], degree=5).order == 1


@pytest.mark.parametrize("seed", range(60))
def test_order_and_membership_match_closure(seed):
    degree, gens = random_group_gens(seed)
    G = PermGroup(gens, degree=degree)
    elements = closure(gens, degree)
    assert G.order == len(elements)
    assert {g.images for g in G.elements()} == elements
    rng = Random(seed)
    for _ in range(20):
        p = random_perm(rng, degree)
        assert (p in G) == (p.images in elements)


@pytest.mark.parametrize("seed", range(40))
def test_intersection_matches_closure(seed):
    degree, g1 = random_group_gens(seed)
    rng = Random(1000 + seed)
    g2 = [random_perm(rng, degree) for _ in range(rng.randint(1, 2))]
    if rng.random() < 0.5:
        g2.append(g1[0])
    G, H = PermGroup(g1, degree=degree), PermGroup(g2, degree=degree)
    want = closure(g1, degree) & closure(g2, degree)
    for I in (intersect(G, H), intersect_by_enumeration(G, H)):
        assert {x.images for x in I.elements()} == want


def test_intersection_cap():
    S = PermGroup([P("(1,2,3,4,5,6,7)", 7), P("(1,2)", 7)])
    with pytest.raises(BudgetExceeded):
        intersect(S, S, cap=100)


def test_orbits_and_transitivity():
    G = PermGroup([P("(1,2)(5,6)", 6), P("(2,3)", 6)])
    assert sorted(sorted(o) for o in G.orbits()) == [[0, 1, 2], [3], [4, 5]]
    assert not G.is_transitive()
    assert PermGroup([P("(1,2,3)", 3)]).is_transitive()


def test_primitivity_examples():
    D4 = PermGroup([P("(1,2,3,4)", 4), P("(1,3)", 4)])
    ok, blocks = is_primitive(D4)
    assert not ok
    assert sorted(sorted(b) for b in blocks) == [[0, 2], [1, 3]]
    assert is_primitive(PermGroup([P("(1,2,3,4)", 4), P("(1,2)", 4)]))[0]
    assert is_primitive(PermGroup([P("(1,2,3,4,5)", 5)]))[0]
    with pytest.raises(ValueError):
        is_primitive(PermGroup([P("(1,2)", 4)]))


@pytest.mark.parametrize("seed", range(40))
def test_primitivity_matches_partitions(seed):
    degree, gens = random_group_gens(seed, max_degree=7)
    G = PermGroup(gens, degree=degree)
    for orbit in G.orbits():
        if len(orbit) < 2:
            continue
        want = primitive_brute(closure(gens, degree), orbit)
        assert is_primitive(G, orbit)[0] == want


def _iso_brute(t1, t2):
    n1, n2 = t1[0].degree, t2[0].degree
    pairs = closure([a.images + tuple(x + n1 for x in b.images) for a, b in zip(t1, t2)], n1 + n2)
    return len(pairs) == len(closure(t1, n1)) == len(closure(t2, n2))


def test_diagonal_isomorphism():
    s3 = (P("(1,2)", 3), P("(2,3)", 3))
    assert diagonal_isomorphic(s3, s3)
    assert diagonal_isomorphic(s3, tuple(reversed(s3)))
    d = (P("(1,2)(3,4)", 4), P("(2,3)", 4))
    assert not diagonal_isomorphic(s3, d)
    with pytest.raises(ValueError):
        diagonal_isomorphic(s3, s3[:1])


@pytest.mark.parametrize("seed", range(30))
def test_diagonal_isomorphism_matches_closure(seed):
    rng = Random(seed)
    n = rng.randint(3, 6)
    t1 = tuple(random_perm(rng, n) for _ in range(2))
    m = rng.randint(3, 6)
    t2 = tuple(random_perm(rng, m) for _ in range(2))
    relabel = random_perm(rng, n)
    t3 = tuple(p.conjugate(relabel) for p in t1)
    assert diagonal_isomorphic(t1, t3)
    assert diagonal_isomorphic(t1, t2) == _iso_brute(t1, t2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_order_matches_sympy(seed):
    from sympy.combinatorics import Permutation as SP
    from sympy.combinatorics import PermutationGroup

    rng = Random(seed)
    n = rng.randint(2, 11)
    gens = [random_perm(rng, n) for _ in range(rng.randint(1, 3))]
    assert PermGroup(gens, degree=n).order == PermutationGroup([SP(list(g.images)) for g in gens]).order()


def test_random_elements_are_members():
    G = PermGroup([P("(1,2,3,4,5,6,7,8,9,10,11)", 11), P("(3,7,11,8)(4,10,5,6)", 11)])
    rng = Random(3)
    for _ in range(50):
        assert G.random_element(rng) in G


def test_restricted_action():
    G = PermGroup([P("(1,2,3)(4,5)", 5)])
    induced, pts = G.restricted([0, 1, 2])
    assert pts == [0, 1, 2]
    assert induced.order == 3
    with pytest.raises(ValueError):
        G.restricted([0, 1])
