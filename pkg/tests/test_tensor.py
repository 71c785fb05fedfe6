import pytest
from hypothesis import given, settings, strategies as st

from sgx import (
    cyclic_group,
    induced_map,
    is_firm,
    make_right_act,
    null_semigroup,
    regular_biact,
    regular_left_act,
    regular_right_act,
    replay_tossing,
    right_zero,
    tensor_product,
    tossing_witness,
    trivial,
)
from sgx.errors import NotBalanced, SemigroupMismatch

Z2 = cyclic_group(2)
RZ2 = right_zero(2)
N2 = null_semigroup(2)
T1 = trivial()


def naive_closure_classes(S):
    """Fixed-point closure of the generating pairs, independent of union-find."""
    n = S.order
    pairs = [(S.mul(a, s) * n + b, a * n + S.mul(s, b))
             for a in range(n) for s in range(n) for b in range(n)]
    labels = list(range(n * n))
    changed = True
    while changed:
        changed = False
        for x, y in pairs:
            if labels[x] != labels[y]:
                keep, drop = sorted((labels[x], labels[y]))
                labels = [keep if l == drop else l for l in labels]
                changed = True
    groups = {}
    for idx, label in enumerate(labels):
        groups.setdefault(label, set()).add(divmod(idx, n))
    return {frozenset(g) for g in groups.values()}


def test_tensor_classes_frozen_examples():
    t = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    assert t.classes == (((0, 0), (1, 1)), ((0, 1), (1, 0)))
    t = tensor_product(regular_right_act(T1), regular_left_act(T1))
    assert t.classes == (((0, 0),),)
    t = tensor_product(regular_right_act(RZ2), regular_left_act(RZ2))
    assert t.classes == (((0, 0), (1, 0)), ((0, 1), (1, 1)))
    t = tensor_product(regular_right_act(N2), regular_left_act(N2))
    assert t.classes == (((0, 0), (0, 1), (1, 0)), ((1, 1),))


def test_tensor_semigroup_mismatch():
    with pytest.raises(SemigroupMismatch):
        tensor_product(regular_right_act(Z2), regular_left_act(RZ2))


def test_quotient_soundness_and_minimality(corpus3):
    for S in corpus3:
        A, B = regular_right_act(S), regular_left_act(S)
        t = tensor_product(A, B)
        for a in S.elements:
            for s in S.elements:
                for b in S.elements:
                    assert t.class_of(A.action[a][s], b) == t.class_of(a, B.action[s][b])
        assert {frozenset(members) for members in t.classes} == naive_closure_classes(S)


def test_induced_map_examples():
    t = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    mu = induced_map(t, Z2.mul)
    assert sorted(mu) == [0, 1]
    t = tensor_product(regular_right_act(RZ2), regular_left_act(RZ2))
    mu = induced_map(t, RZ2.mul)
    assert sorted(mu) == [0, 1]


def test_induced_map_not_balanced():
    t = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    with pytest.raises(NotBalanced) as err:
        induced_map(t, lambda a, b: a)
    a, s, b = err.value.witness
    assert Z2.mul(a, s) != a  # the named triple is a genuine counterexample


def test_induced_map_factors_through_classes(corpus2):
    for S in corpus2:
        t = tensor_product(regular_right_act(S), regular_left_act(S))
        mu = induced_map(t, S.mul)
        for cid, members in enumerate(t.classes):
            for a, b in members:
                assert mu[cid] == S.mul(a, b)


def test_tossing_reflexive_is_empty():
    t = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    w = tossing_witness(t, (0, 1), (0, 1))
    assert w is not None and w.steps == ()
    assert replay_tossing(t, w)


def test_tossing_connects_z2_pair():
    t = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    w = tossing_witness(t, (0, 1), (1, 0))
    assert w is not None and len(w.steps) >= 1
    assert replay_tossing(t, w)


def test_tossing_absent_across_classes():
    t = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    assert tossing_witness(t, (0, 0), (0, 1)) is None


@settings(deadline=None)
@given(st.data())
def test_tossing_iff_same_class(corpus3, data):
    S = data.draw(st.sampled_from(corpus3))
    t = tensor_product(regular_right_act(S), regular_left_act(S))
    a = data.draw(st.integers(0, S.order - 1))
    b = data.draw(st.integers(0, S.order - 1))
    a2 = data.draw(st.integers(0, S.order - 1))
    b2 = data.draw(st.integers(0, S.order - 1))
    w = tossing_witness(t, (a, b), (a2, b2))
    same = t.class_of(a, b) == t.class_of(a2, b2)
    assert (w is not None) == same
    if w is not None:
        assert replay_tossing(t, w)


def test_replay_rejects_mangled_witness():
    t = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    w = tossing_witness(t, (0, 1), (1, 0))
    broken = type(w)(start=(1, 1), end=w.end, steps=w.steps)
    assert not replay_tossing(t, broken)


def test_is_firm_examples():
    assert is_firm(Z2)
    assert not is_firm(N2)
    assert is_firm(RZ2)


def test_monoids_are_firm(corpus3):
    for S in corpus3:
        has_identity = any(
            all(S.mul(e, x) == x == S.mul(x, e) for x in S.elements)
            for e in S.elements)
        if has_identity:
            assert is_firm(S)


def test_biact_tensor_residual_actions():
    t = tensor_product(regular_biact(Z2), regular_biact(Z2))
    assert t.left_action is not None and t.right_action is not None
    # classes are indexed by a+b mod 2; acting shifts the class
    for s in range(2):
        for cid in range(t.size):
            a, b = t.classes[cid][0]
            assert t.left_action[s][cid] == t.class_of(Z2.mul(s, a), b)
            assert t.right_action[cid][s] == t.class_of(a, Z2.mul(b, s))
    plain = tensor_product(regular_right_act(Z2), regular_left_act(Z2))
    assert plain.left_action is None and plain.right_action is None


def test_nonregular_act_tensor():
    # trivial right action (a·s := a) against the regular left act: no collapse
    A = make_right_act(Z2, 2, [[0, 0], [1, 1]])
    t = tensor_product(A, regular_left_act(Z2))
    assert t.size == 2
    assert {frozenset(m) for m in t.classes} == {
        frozenset({(0, 0), (0, 1)}), frozenset({(1, 0), (1, 1)})}
