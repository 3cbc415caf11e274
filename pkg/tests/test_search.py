from itertools import product

import pytest

from scg.perm import PermGroup, parse_cycles
from scg.prgraph import from_generators
from scg.search import (
    SearchSpec,
    commuting_triples,
    enumerate_tuples,
    graph_classes_up_to_duality,
    involutions,
    m11_rank3_check,
    named_group,
)
from scg.sggi import check_ip_full, validate_sggi


def test_involution_counts():
    assert len(involutions(PermGroup([parse_cycles("(1,2)", 2)]))) == 1
    assert len(involutions(PermGroup([parse_cycles("(1,2)", 3), parse_cycles("(1,2,3)", 3)]))) == 3
    psl = named_group("psl2_11")
    invs = involutions(psl)
    assert len(invs) == 55
    t = invs[0]
    assert {t.conjugate(g) for g in psl.elements()} == set(invs)
    assert invs == sorted(invs)


def test_named_groups():
    assert named_group("psl2_11").order == 660
    assert named_group("m11").order == 7920
    assert named_group("s4").order == 24
    with pytest.raises(KeyError):
        named_group("a5")


def _s4_brute():
    S4 = named_group("s4")
    invs = involutions(S4)
    count = 0
    for t in product(invs, repeat=3):
        if t[0] * t[2] != t[2] * t[0]:
            continue
        if PermGroup(t, degree=4).order != 24:
            continue
        if check_ip_full(validate_sggi(t, allow_degenerate=True)).holds:
            count += 1
    return len(invs), count


def test_s4_matches_unpruned_search():
    n_inv, count = _s4_brute()
    assert n_inv == 9
    res = enumerate_tuples(SearchSpec(named_group("s4"), 3, quotient="none"))
    assert len(res.tuples) == count == len(res)
    for t in res.tuples:
        s = validate_sggi(t)
        assert s.order == 24 and check_ip_full(s).holds


def test_s4_classes_are_stable():
    a = enumerate_tuples(SearchSpec(named_group("s4"), 3))
    b = enumerate_tuples(SearchSpec(named_group("s4"), 3, jobs=2))
    assert a.representatives == b.representatives
    assert sum(a.class_sizes) == len(a.tuples)
    assert all(rep in a.tuples for rep in a.representatives)
    # each representative is the least tuple of its class, so the least tuple overall is one
    assert min(a.tuples) == a.representatives[0]


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_conjugacy_reduction_finds_the_same_tuples(rank):
    G = named_group("s4")
    plain = enumerate_tuples(SearchSpec(G, rank, require_ip=False, quotient="none"))
    reduced = enumerate_tuples(SearchSpec(G, rank, require_ip=False, quotient="none", conjugacy_reduction=True))
    assert plain.tuples == reduced.tuples
    assert reduced.candidates < plain.candidates


def test_psl_rank4_reduced():
    res = enumerate_tuples(SearchSpec(named_group("psl2_11"), 4, conjugacy_reduction=True))
    assert len(res) == 1 and len(res.tuples) == 1320


def test_search_spec_validation():
    with pytest.raises(ValueError):
        SearchSpec(named_group("s4"), 3, quotient="other")
    with pytest.raises(ValueError):
        SearchSpec(named_group("s4"), 0)


def test_not_generated_by_involutions():
    C3 = PermGroup([parse_cycles("(1,2,3)", 3)])
    with pytest.raises(ValueError):
        enumerate_tuples(SearchSpec(C3, 2))


def test_budget():
    from scg.perm import BudgetExceeded

    with pytest.raises(BudgetExceeded):
        enumerate_tuples(SearchSpec(named_group("s4"), 3, budget=10))


def test_graph_classes():
    assert graph_classes_up_to_duality([]) == 0
    t = tuple(parse_cycles(c, 4) for c in ("(1,2)", "(2,3)(1,4)", "(3,4)"))
    assert graph_classes_up_to_duality([t, tuple(reversed(t))]) == 1
    assert from_generators(t).is_isomorphic(from_generators(t))


def test_commuting_triples():
    S4 = named_group("s4")
    assert commuting_triples(S4) == commuting_triples(S4, exhaustive=True) > 0


def test_psl_rank3_reduced():
    G = named_group("psl2_11")
    res = enumerate_tuples(SearchSpec(G, 3, conjugacy_reduction=True))
    assert len(res) == 3 and len(res.tuples) == 5280
    assert len(enumerate_tuples(SearchSpec(G, 3, quotient="iso", conjugacy_reduction=True))) == 4
    assert commuting_triples(named_group("psl2_11")) > 0


def test_m11_has_no_triples():
    assert m11_rank3_check() == 0
