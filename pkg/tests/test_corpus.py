import itertools
import random

import pytest
from hypothesis import given, strategies as st

from sgx import (
    are_isomorphic,
    canonical_form,
    classify,
    corpus_up_to,
    count_semigroups_naive,
    cyclic_group,
    enumerate_semigroups,
    find_counterexample,
    left_zero,
    make_semigroup,
    right_zero,
)
from sgx.corpus import COUNTEREXAMPLE_PREDICATES, _relabel
from sgx.errors import OrderTooLarge

LABELED_COUNTS = {1: 1, 2: 8, 3: 113}
CANONICAL_COUNTS = {1: 1, 2: 5, 3: 24}


def test_labeled_counts():
    for n, expected in LABELED_COUNTS.items():
        assert len(enumerate_semigroups(n).members) == expected


def test_labeled_counts_match_naive_recount():
    for n in (1, 2, 3):
        assert len(enumerate_semigroups(n).members) == count_semigroups_naive(n)


def test_canonical_counts():
    for n, expected in CANONICAL_COUNTS.items():
        corpus = enumerate_semigroups(n, "canonical")
        assert len(corpus.members) == expected
        forms = [S.table for S in corpus.members]
        assert forms == sorted(set(forms))
        assert all(canonical_form(t) == t for t in forms)


def test_enumeration_is_lexicographic():
    tables = [S.table for S in enumerate_semigroups(2).members]
    assert tables == sorted(tables)


def test_order_gating():
    with pytest.raises(OrderTooLarge):
        enumerate_semigroups(5)
    with pytest.raises(OrderTooLarge):
        enumerate_semigroups(4)
    assert len(enumerate_semigroups(4, allow_slow=True).members) == 3492
    with pytest.raises(OrderTooLarge):
        count_semigroups_naive(4)


def test_corpus_up_to():
    members = corpus_up_to(2)
    assert len(members) == 9
    assert {S.order for S in members} == {1, 2}


def test_are_isomorphic():
    shifted = make_semigroup(2, [[1, 0], [0, 1]])  # Z2 with relabeled identity
    assert are_isomorphic(cyclic_group(2), shifted)
    assert not are_isomorphic(cyclic_group(2), right_zero(2))
    assert not are_isomorphic(left_zero(2), right_zero(2))


@given(st.data())
def test_canonical_form_is_relabeling_invariant(corpus3, data):
    S = data.draw(st.sampled_from(corpus3))
    perm = tuple(data.draw(st.permutations(range(S.order))))
    assert canonical_form(_relabel(S.table, perm)) == canonical_form(S.table)


def test_random_associative_tables_are_in_corpus():
    # completeness: a sampler must never find an associative table we missed
    members = {S.table for S in enumerate_semigroups(3).members}
    rng = random.Random(20240811)
    found = 0
    for _ in range(4000):
        table = tuple(tuple(rng.randrange(3) for _ in range(3)) for _ in range(3))
        associative = all(
            table[table[x][y]][z] == table[x][table[y][z]]
            for x in range(3) for y in range(3) for z in range(3))
        if associative:
            found += 1
            assert table in members
    assert found > 0


def test_find_counterexample_lu_not_cwlu():
    found = find_counterexample("lu-not-cwlu", 2)
    report = classify(found)
    assert report.local_units and not report.common_weak_local_units
    # the least such instance in table order is the left-zero semigroup;
    # the right-zero semigroup satisfies the same predicate
    assert found.table == left_zero(2).table
    rz = classify(right_zero(2))
    assert rz.local_units and not rz.common_weak_local_units


def test_find_counterexample_impossible_combinations():
    assert find_counterexample("firm-not-factorizable", 3) is None
    # finite semigroups promote weak local units to idempotent ones
    assert find_counterexample("wlu-not-lu", 3) is None


def test_find_counterexample_factorizable_not_firm_small_orders():
    # recorded outcome: no witness exists up to order 3
    assert find_counterexample("factorizable-not-firm", 3) is None


def test_find_counterexample_unknown_predicate():
    with pytest.raises(ValueError):
        find_counterexample("nonsense", 2)


def test_predicates_are_consistent_with_classify(corpus2):
    for S in corpus2:
        report = classify(S)
        for name, predicate in COUNTEREXAMPLE_PREDICATES.items():
            assert predicate(report) in (True, False)
