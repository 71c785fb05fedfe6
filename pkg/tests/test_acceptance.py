"""Acceptance criteria, one test per criterion.

Each test prints a single ``ACCEPTANCE <nn> <name>: PASS|FAIL`` line (visible
with ``pytest -s`` or in captured output).  All tolerances are exact: the
checks are equalities and zero-violation sweeps over the small-order corpus.
"""

import itertools

import pytest

from sgx import (
    SemigroupMorphism,
    bracket,
    bracket_semigroup,
    canonical_context,
    check_dual_pair_isomorphism,
    check_rank_one_brackets,
    classify,
    context_induced_semigroup_morphisms,
    corpus_up_to,
    count_semigroups_naive,
    cover_injectivity,
    cyclic_group,
    enumerate_semigroups,
    has_common_weak_local_units,
    has_weak_local_units,
    idempotents,
    is_dual_pair,
    is_factorizable,
    is_firm,
    morphism_quality,
    multiplication_pairing,
    null_semigroup,
    rees_construct,
    rees_cover,
    regular_left_act,
    regular_right_act,
    right_zero,
    tensor_product,
)
from sgx.cli import main


def _report(number: int, name: str, failures: list) -> None:
    if failures:
        print(f"ACCEPTANCE {number:02d} {name}: FAIL "
              f"({len(failures)} violations; first: {failures[0]})")
    else:
        print(f"ACCEPTANCE {number:02d} {name}: PASS")
    assert not failures, f"criterion {number} failed: {failures[:3]}"


@pytest.fixture(scope="module")
def members(corpus3):
    return corpus3


@pytest.fixture(scope="module")
def rees_sweep(members):
    """Covers for every factorizable base: all 1x1 sandwiches plus a
    deterministic sample of four 2x2 sandwiches."""
    sweep = []
    for S in members:
        if not is_factorizable(S):
            continue
        matrices = [(1, 1, ((p0,),)) for p0 in S.elements]
        all_2x2 = [((f[0], f[1]), (f[2], f[3]))
                   for f in itertools.product(range(S.order), repeat=4)]
        k = min(4, len(all_2x2))
        picks = sorted({(i * (len(all_2x2) - 1)) // (k - 1) if k > 1 else 0
                        for i in range(k)})
        matrices.extend((2, 2, all_2x2[i]) for i in picks)
        for num_u, num_v, p in matrices:
            cover = rees_cover(rees_construct(S, num_u, num_v, p))
            sweep.append((S, num_u, num_v, p, cover))
    return sweep


def test_criterion_01_class_hierarchy(members):
    assert len(members) == 1 + 8 + 113
    failures = []
    for S in members:
        r = classify(S)
        for name, holds in (
            ("LU=>WLU", not r.local_units or r.weak_local_units),
            ("WLU=>firm", not r.weak_local_units or r.firm),
            ("firm=>factorizable", not r.firm or r.factorizable),
            ("CWLU=>firm", not r.common_weak_local_units or r.firm),
        ):
            if not holds:
                failures.append((S.table, name))
    _report(1, "class hierarchy", failures)


def test_criterion_02_canned_classifications():
    failures = []
    rz2 = classify(right_zero(2))
    if not (rz2.local_units and not rz2.common_weak_local_units):
        failures.append(("RZ2", rz2))
    if (rz2.local_units, rz2.weak_local_units, rz2.common_weak_local_units,
            rz2.firm, rz2.factorizable) != (True, True, False, True, True):
        failures.append(("RZ2-exact", rz2))
    z2 = classify(cyclic_group(2))
    if (z2.local_units, z2.weak_local_units, z2.common_weak_local_units,
            z2.firm, z2.factorizable) != (True, True, True, True, True):
        failures.append(("Z2", z2))
    n2 = classify(null_semigroup(2))
    if (n2.local_units, n2.weak_local_units, n2.common_weak_local_units,
            n2.firm, n2.factorizable) != (False, False, False, False, False):
        failures.append(("N2", n2))
    _report(2, "canned classifications", failures)


def _fixpoint_classes(S):
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


def test_criterion_03_tensor_soundness(members):
    failures = []
    for S in members:
        A, B = regular_right_act(S), regular_left_act(S)
        t = tensor_product(A, B)
        for a in S.elements:
            for s in S.elements:
                for b in S.elements:
                    if t.class_of(A.action[a][s], b) != t.class_of(a, B.action[s][b]):
                        failures.append((S.table, a, s, b))
        if {frozenset(m) for m in t.classes} != _fixpoint_classes(S):
            failures.append((S.table, "oracle mismatch"))
    _report(3, "tensor soundness", failures)


def test_criterion_04_context_morphisms(members):
    failures = []
    checked = 0
    for S in members:
        if not is_factorizable(S):
            continue
        checked += 1
        try:
            ctx = canonical_context(S)
            cm = context_induced_semigroup_morphisms(ctx)
        except Exception as exc:  # noqa: BLE001 - failure data for the report
            failures.append((S.table, repr(exc)))
            continue
        for name, morphism in (("theta", cm.theta), ("phi", cm.phi)):
            quality = morphism_quality(morphism)
            if not quality.almost_injective:
                failures.append((S.table, name, "not almost injective"))
            if quality.surjective and not quality.idempotents_lift:
                failures.append((S.table, name, "no idempotent lifting"))
    assert checked > 0
    _report(4, "context morphisms", failures)


def test_criterion_05_rees_covers(rees_sweep):
    failures = []
    for S, num_u, num_v, p, cover in rees_sweep:
        q = cover.quality
        if not (q.surjective and q.almost_injective and q.idempotents_lift):
            failures.append((S.table, num_u, num_v, p, q))
    assert len(rees_sweep) > 100
    _report(5, "rees matrix covers", failures)


def test_criterion_06_firm_cover_injectivity(rees_sweep):
    failures = []
    checked = 0
    for S, num_u, num_v, p, cover in rees_sweep:
        if not is_firm(S):
            continue
        checked += 1
        if not cover_injectivity(cover):
            failures.append((S.table, num_u, num_v, p, "psi not injective"))
        if cover.morita.semigroup.order != cover.rees.semigroup.order:
            failures.append((S.table, num_u, num_v, p, "order mismatch"))
    assert checked > 0
    _report(6, "firm cover injectivity", failures)


def test_criterion_07_bracket_covers(members):
    from sgx import bracket_cover

    failures = []
    for S in members:
        try:
            cover = bracket_cover(multiplication_pairing(S))
        except Exception as exc:  # noqa: BLE001
            failures.append((S.table, repr(exc)))
            continue
        q = cover.quality
        if not (q.surjective and q.almost_injective and q.idempotents_lift):
            failures.append((S.table, q))
    _report(7, "bracket covers", failures)


def test_criterion_08_dual_pair_isomorphisms(members):
    failures = []
    checked = 0
    for S in members:
        if not has_weak_local_units(S):
            continue
        pair = multiplication_pairing(S)
        if not is_dual_pair(pair):
            continue
        checked += 1
        iso = check_dual_pair_isomorphism(pair)
        if not iso.isomorphism:
            failures.append((S.table, "bracket cover not bijective"))
        rank = check_rank_one_brackets(pair)
        if not (rank.monoid_enumerated and rank.equal):
            failures.append((S.table, "brackets differ from rank-one pairs"))
    assert checked > 0
    _report(8, "dual pair isomorphisms", failures)


def test_criterion_09_bracket_product_identity(members):
    failures = []
    for S in members:
        pair = multiplication_pairing(S)
        sg = bracket_semigroup(pair)
        index = {(m.rho, m.sigma): i for i, m in enumerate(sg.members)}
        size = len(sg.members)
        composed_table = []
        identity_table = []
        for m1 in sg.members:
            composed_row = []
            identity_row = []
            for m2 in sg.members:
                composed = (tuple(m2.rho[x] for x in m1.rho),
                            tuple(m1.sigma[m2.sigma[y]]
                                  for y in range(len(m1.sigma))))
                composed_row.append(index[composed])
                via = bracket(pair, m1.b,
                              pair.left_act.action[pair.table[m1.a][m2.b]][m2.a])
                identity_row.append(index[(via.rho, via.sigma)])
            composed_table.append(tuple(composed_row))
            identity_table.append(tuple(identity_row))
        if tuple(composed_table) != tuple(identity_table):
            failures.append((S.table, "tables differ"))
        if tuple(composed_table) != sg.semigroup.table:
            failures.append((S.table, "stored table differs"))
        assert size == sg.semigroup.order
    _report(9, "bracket product identity", failures)


def test_criterion_10_restricted_injectivity(members):
    from sgx import restricted_injectivity_report

    failures = []
    targets = corpus_up_to(2)
    checked = 0
    for S in members:
        if not has_common_weak_local_units(S):
            continue
        for T in targets:
            for mapping in itertools.product(range(T.order), repeat=S.order):
                if not all(mapping[S.mul(x, y)] == T.mul(mapping[x], mapping[y])
                           for x in S.elements for y in S.elements):
                    continue
                checked += 1
                report = restricted_injectivity_report(
                    SemigroupMorphism(S, T, mapping))
                if not report.equivalent:
                    failures.append((S.table, T.table, mapping))
    assert checked > 0
    _report(10, "restricted injectivity equivalence", failures)


def test_criterion_11_enumeration_counts():
    failures = []
    expected = {1: 1, 2: 8, 3: 113}
    for n, count in expected.items():
        generated = len(enumerate_semigroups(n).members)
        recounted = count_semigroups_naive(n)
        if not (generated == recounted == count):
            failures.append((n, generated, recounted, count))
    _report(11, "enumeration counts", failures)


def test_criterion_12_report_determinism(tmp_path):
    failures = []
    paths = (tmp_path / "first.report", tmp_path / "second.report")
    for path in paths:
        code = main(["verify", "--order", "3", "--report", str(path)])
        if code != 0:
            failures.append(("exit", code))
    first, second = (p.read_bytes() for p in paths)
    if first != second:
        failures.append(("reports differ",))
    _report(12, "report determinism", failures)
