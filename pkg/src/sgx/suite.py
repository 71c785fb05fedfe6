"""Corpus-wide theorem verification with deterministic, diff-able reports."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .acts import enumerate_endomorphisms, regular_left_act, regular_right_act
from .corpus import corpus_up_to, count_semigroups_naive, enumerate_semigroups
from .dualpairs import (
    bracket,
    bracket_cover,
    bracket_semigroup,
    check_dual_pair_isomorphism,
    check_rank_one_brackets,
    check_tensor_units,
    is_dual_pair,
)
from .errors import SgxError, TheoremViolation
from .morita import (
    canonical_context,
    context_induced_semigroup_morphisms,
    morita_semigroup,
    multiplication_pairing,
    verify_bijective_context,
)
from .morphisms import SemigroupMorphism, act_to_semigroup, restricted_injectivity_report
from .rees import cover_injectivity, rees_construct, rees_cover, rees_factorizable, tensor_base_cover
from .semigroups import (
    FiniteSemigroup,
    classify,
    has_common_weak_local_units,
    has_weak_local_units,
    is_factorizable,
)
from .tensor import is_firm, tensor_product

THEOREM_IDS = (
    "class-chain",
    "tensor-soundness",
    "restricted-injectivity",
    "functional-semigroup",
    "context-morphisms",
    "firm-context-iso",
    "rees-cover",
    "firm-rees-iso",
    "tensor-base-rees",
    "bracket-cover",
    "bracket-product",
    "dual-pair-iso",
    "rank-one-brackets",
    "tensor-units",
    "enumeration",
)


@dataclass(frozen=True)
class VerificationReport:
    theorem: str
    instance: str
    verdict: str  # "pass" | "fail" | "skip"
    witness: str | None
    seconds: float


@dataclass
class SuiteOptions:
    rees_sample: int = 4          # sampled 2x2 sandwich matrices per base
    tensor_base_sample: int = 3   # sampled 1x1 sandwiches over the tensor square
    max_candidates: int | None = None
    cover_cache: dict = field(default_factory=dict)


def describe(S: FiniteSemigroup) -> str:
    rows = ".".join("".join(str(v) for v in row) for row in S.table)
    return f"sgp(n={S.order};{rows})"


def _sample_indices(total: int, k: int) -> list[int]:
    if k <= 0 or total <= 0:
        return []
    if total <= k:
        return list(range(total))
    if k == 1:
        return [0]
    return sorted({(i * (total - 1)) // (k - 1) for i in range(k)})


def _sandwiches(n: int, num_u: int, num_v: int, sample: int | None):
    """Sandwich matrices in lexicographic order, optionally a deterministic
    evenly spaced sample."""
    total = n ** (num_u * num_v)
    if sample is None:
        chosen = range(total)
    else:
        chosen = _sample_indices(total, sample)
    for idx in chosen:
        flat = []
        rest = idx
        for _ in range(num_u * num_v):
            rest, digit = divmod(rest, n)
            flat.append(digit)
        flat.reverse()
        yield tuple(tuple(flat[v * num_u:(v + 1) * num_u]) for v in range(num_v))


def _sandwich_descr(p) -> str:
    return ".".join("".join(str(v) for v in row) for row in p)


def _timed(theorem: str, instance: str, fn) -> VerificationReport:
    start = time.perf_counter()
    try:
        verdict, witness = fn()
    except TheoremViolation as exc:
        verdict, witness = "fail", str(exc)
    except SgxError as exc:
        verdict, witness = "fail", f"{type(exc).__name__}: {exc}"
    return VerificationReport(theorem, instance, verdict, witness,
                              time.perf_counter() - start)


def _closure_classes_fixpoint(n: int, pairs) -> set[frozenset[int]]:
    """Independent fixed-point closure used as the quotient oracle."""
    labels = list(range(n))
    changed = True
    while changed:
        changed = False
        for x, y in pairs:
            lx, ly = labels[x], labels[y]
            if lx != ly:
                low = min(lx, ly)
                for i, l in enumerate(labels):
                    if l == lx or l == ly:
                        labels[i] = low
                changed = True
    groups: dict[int, set[int]] = {}
    for i, l in enumerate(labels):
        groups.setdefault(l, set()).add(i)
    return {frozenset(g) for g in groups.values()}


def _check_class_chain(S, opts):
    def run():
        r = classify(S)
        chain = (
            ("LU=>WLU", not r.local_units or r.weak_local_units),
            ("WLU=>firm", not r.weak_local_units or r.firm),
            ("firm=>factorizable", not r.firm or r.factorizable),
            ("CWLU=>firm", not r.common_weak_local_units or r.firm),
        )
        for name, holds in chain:
            if not holds:
                return "fail", name
        return "pass", None
    yield _timed("class-chain", describe(S), run)


def _check_tensor_soundness(S, opts):
    def run():
        A, B = regular_right_act(S), regular_left_act(S)
        t = tensor_product(A, B)
        n = S.order
        for a in S.elements:
            for s in S.elements:
                for b in S.elements:
                    if t.class_of(A.action[a][s], b) != t.class_of(a, B.action[s][b]):
                        return "fail", f"class mismatch at a={a},s={s},b={b}"
        pairs = [(A.action[a][s] * n + b, a * n + B.action[s][b])
                 for a in S.elements for s in S.elements for b in S.elements]
        oracle = _closure_classes_fixpoint(n * n, pairs)
        ours = {frozenset(a * n + b for a, b in members) for members in t.classes}
        if oracle != ours:
            return "fail", "partition differs from the fixed-point closure"
        return "pass", None
    yield _timed("tensor-soundness", describe(S), run)


def _multiplicative_maps(S, T):
    for mapping in itertools.product(range(T.order), repeat=S.order):
        if all(mapping[S.mul(x, y)] == T.mul(mapping[x], mapping[y])
               for x in S.elements for y in S.elements):
            yield mapping


def _check_restricted_injectivity(S, opts):
    if not has_common_weak_local_units(S):
        yield VerificationReport("restricted-injectivity", describe(S), "skip",
                                 "source lacks common weak local units", 0.0)
        return
    targets = opts.cover_cache.setdefault("cwlu-targets", corpus_up_to(2))
    for T in targets:
        instance = f"hom({describe(S)}->{describe(T)})"

        def run(T=T):
            for mapping in _multiplicative_maps(S, T):
                f = SemigroupMorphism(S, T, mapping)
                report = restricted_injectivity_report(f)
                if not report.equivalent:
                    return "fail", f"map={''.join(map(str, mapping))}"
            return "pass", None
        yield _timed("restricted-injectivity", instance, run)


def _check_functional_semigroup(S, opts):
    def run():
        A = regular_right_act(S)
        for rho in enumerate_endomorphisms(A, opts.max_candidates):
            act_to_semigroup(A, rho)  # raises TheoremViolation on failure
        return "pass", None
    yield _timed("functional-semigroup", describe(S), run)


def _check_context_morphisms(S, opts):
    def run():
        if not is_factorizable(S):
            return "skip", "not factorizable"
        ctx = canonical_context(S)
        context_induced_semigroup_morphisms(ctx)
        return "pass", None
    yield _timed("context-morphisms", describe(S), run)


def _check_firm_context_iso(S, opts):
    def run():
        if not is_firm(S):
            return "skip", "not firm"
        ctx = canonical_context(S)
        report = verify_bijective_context(ctx)
        if not report.passed:
            return "fail", str(report)
        return "pass", None
    yield _timed("firm-context-iso", describe(S), run)


def _rees_instances(S, opts):
    for p in _sandwiches(S.order, 1, 1, None):
        yield 1, 1, p
    for p in _sandwiches(S.order, 2, 2, opts.rees_sample):
        yield 2, 2, p


def _cover_for(S, num_u, num_v, p, opts):
    key = (S.table, num_u, num_v, p)
    if key not in opts.cover_cache:
        try:
            M = rees_construct(S, num_u, num_v, p)
            rees_factorizable(M)  # cross-checks the two factorizability routes
            opts.cover_cache[key] = ("ok", rees_cover(M))
        except SgxError as exc:
            opts.cover_cache[key] = ("err", f"{type(exc).__name__}: {exc}")
    return opts.cover_cache[key]


def _check_rees_cover(S, opts):
    base = describe(S)
    if not is_factorizable(S):
        yield VerificationReport("rees-cover", base, "skip", "not factorizable", 0.0)
        return
    for num_u, num_v, p in _rees_instances(S, opts):
        instance = f"rees(base={base};U={num_u};V={num_v};p={_sandwich_descr(p)})"

        def run(num_u=num_u, num_v=num_v, p=p):
            status, value = _cover_for(S, num_u, num_v, p, opts)
            if status == "err":
                return "fail", value
            q = value.quality
            if not (q.surjective and q.almost_injective and q.idempotents_lift):
                return "fail", str(q)
            return "pass", None
        yield _timed("rees-cover", instance, run)


def _check_firm_rees_iso(S, opts):
    base = describe(S)
    if not is_firm(S):
        yield VerificationReport("firm-rees-iso", base, "skip", "not firm", 0.0)
        return
    for num_u, num_v, p in _rees_instances(S, opts):
        instance = f"rees(base={base};U={num_u};V={num_v};p={_sandwich_descr(p)})"

        def run(num_u=num_u, num_v=num_v, p=p):
            status, value = _cover_for(S, num_u, num_v, p, opts)
            if status == "err":
                return "fail", value
            if not cover_injectivity(value):
                return "fail", "psi is not injective over a firm base"
            if value.morita.semigroup.order != value.rees.semigroup.order:
                return "fail", "orders differ"
            return "pass", None
        yield _timed("firm-rees-iso", instance, run)


def _check_tensor_base_rees(S, opts):
    base = describe(S)
    if not is_factorizable(S):
        yield VerificationReport("tensor-base-rees", base, "skip",
                                 "not factorizable", 0.0)
        return
    T = morita_semigroup(multiplication_pairing(S)).semigroup
    for p in _sandwiches(T.order, 1, 1, opts.tensor_base_sample):
        instance = f"rees(base={base};square;U=1;V=1;p={_sandwich_descr(p)})"

        def run(p=p):
            report = tensor_base_cover(S, 1, 1, p)
            if not report.passed:
                return "fail", str(report)
            return "pass", None
        yield _timed("tensor-base-rees", instance, run)


def _check_bracket_cover(S, opts):
    def run():
        bracket_cover(multiplication_pairing(S))
        return "pass", None
    yield _timed("bracket-cover", describe(S), run)


def _check_bracket_product(S, opts):
    def run():
        pair = multiplication_pairing(S)
        sg = bracket_semigroup(pair)
        members = sg.members
        index = {(m.rho, m.sigma): i for i, m in enumerate(members)}
        for i, m1 in enumerate(members):
            for j, m2 in enumerate(members):
                composed = (tuple(m2.rho[x] for x in m1.rho),
                            tuple(m1.sigma[m2.sigma[y]]
                                  for y in range(len(m1.sigma))))
                via = bracket(pair, m1.b,
                              pair.left_act.action[pair.table[m1.a][m2.b]][m2.a])
                if index[composed] != index[(via.rho, via.sigma)]:
                    return "fail", f"products differ at members ({i},{j})"
                if sg.semigroup.mul(i, j) != index[composed]:
                    return "fail", f"stored table differs at ({i},{j})"
        return "pass", None
    yield _timed("bracket-product", describe(S), run)


def _dual_pair_or_skip(S):
    if not has_weak_local_units(S):
        return None, "no weak local units"
    pair = multiplication_pairing(S)
    if not is_dual_pair(pair):
        return None, "multiplication pair is not dual"
    return pair, None


def _check_dual_pair_iso(S, opts):
    def run():
        pair, reason = _dual_pair_or_skip(S)
        if pair is None:
            return "skip", reason
        report = check_dual_pair_isomorphism(pair)
        if not report.isomorphism:
            return "fail", f"sizes {report.tensor_order}!={report.bracket_order}"
        return "pass", None
    yield _timed("dual-pair-iso", describe(S), run)


def _check_rank_one_brackets(S, opts):
    def run():
        pair, reason = _dual_pair_or_skip(S)
        if pair is None:
            return "skip", reason
        report = check_rank_one_brackets(pair, opts.max_candidates)
        if not report.monoid_enumerated:
            return "skip", f"guard tripped; brackets_rank_one={report.brackets_rank_one}"
        if not report.equal:
            return "fail", report.witness or "sets differ"
        return "pass", None
    yield _timed("rank-one-brackets", describe(S), run)


def _check_tensor_units(S, opts):
    def run():
        pair, reason = _dual_pair_or_skip(S)
        if pair is None:
            return "skip", reason
        report = check_tensor_units(pair)
        if not report.passed:
            return "fail", str(report)
        return "pass", None
    yield _timed("tensor-units", describe(S), run)


_PER_SEMIGROUP_CHECKS = {
    "class-chain": _check_class_chain,
    "tensor-soundness": _check_tensor_soundness,
    "restricted-injectivity": _check_restricted_injectivity,
    "functional-semigroup": _check_functional_semigroup,
    "context-morphisms": _check_context_morphisms,
    "firm-context-iso": _check_firm_context_iso,
    "rees-cover": _check_rees_cover,
    "firm-rees-iso": _check_firm_rees_iso,
    "tensor-base-rees": _check_tensor_base_rees,
    "bracket-cover": _check_bracket_cover,
    "bracket-product": _check_bracket_product,
    "dual-pair-iso": _check_dual_pair_iso,
    "rank-one-brackets": _check_rank_one_brackets,
    "tensor-units": _check_tensor_units,
}


def _check_enumeration(orders, allow_slow):
    for n in orders:
        def run(n=n):
            generated = len(enumerate_semigroups(n, "labeled", allow_slow).members)
            recounted = count_semigroups_naive(n)
            if generated != recounted:
                return "fail", f"generator={generated} recount={recounted}"
            return "pass", f"count={generated}"
        yield _timed("enumeration", f"order={n}", run)


def run_theorem_suite(members, theorems=None, options: SuiteOptions | None = None,
                      enumeration_orders=None, allow_slow: bool = False):
    """Run the selected theorem checks over a corpus of semigroups.

    Hypotheses are validated first: inapplicable instances produce ``skip``
    verdicts, never silent passes.  Reports come out in deterministic order.
    """
    opts = options or SuiteOptions()
    selected = list(theorems) if theorems is not None else list(THEOREM_IDS)
    unknown = [t for t in selected if t not in THEOREM_IDS]
    if unknown:
        raise ValueError(f"unknown theorem ids: {', '.join(unknown)}")
    reports: list[VerificationReport] = []
    for theorem in selected:
        if theorem == "enumeration":
            orders = enumeration_orders or ()
            reports.extend(_check_enumeration(orders, allow_slow))
            continue
        check = _PER_SEMIGROUP_CHECKS[theorem]
        for S in members:
            reports.extend(check(S, opts))
    return reports


def summarize(reports):
    """Per-theorem (pass, fail, skip) counts in THEOREM_IDS order."""
    counts: dict[str, list[int]] = {}
    for r in reports:
        slot = counts.setdefault(r.theorem, [0, 0, 0])
        slot[("pass", "fail", "skip").index(r.verdict)] += 1
    ordered = [t for t in THEOREM_IDS if t in counts]
    return {t: tuple(counts[t]) for t in ordered}


def _clean(value: str | None) -> str:
    if not value:
        return "-"
    return str(value).replace(" ", "_").replace("\n", ";")


def render_report(reports, meta: dict) -> str:
    """Machine-readable, byte-stable report (no timings)."""
    lines = ["sgx-report-v1"]
    for key in sorted(meta):
        lines.append(f"{key}={meta[key]}")
    for r in reports:
        lines.append(f"report theorem={r.theorem} instance={r.instance} "
                     f"verdict={r.verdict} witness={_clean(r.witness)}")
    total = [0, 0, 0]
    for theorem, (p, f, s) in summarize(reports).items():
        lines.append(f"summary theorem={theorem} pass={p} fail={f} skip={s}")
        total[0] += p
        total[1] += f
        total[2] += s
    lines.append(f"total pass={total[0]} fail={total[1]} skip={total[2]}")
    return "\n".join(lines) + "\n"
