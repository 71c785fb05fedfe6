"""Command-line interface: classify, tensor, morita-build, rees-cover,
dual-check, verify, gen-corpus, counterexample."""

from __future__ import annotations

import argparse
import os
import sys

from .acts import LeftAct, RightAct
from .corpus import (
    COUNTEREXAMPLE_PREDICATES,
    corpus_up_to,
    enumerate_semigroups,
    find_counterexample,
)
from .dualpairs import (
    bracket_cover,
    check_dual_pair_isomorphism,
    check_rank_one_brackets,
    check_tensor_units,
    dual_witnesses,
)
from .errors import SgxError
from .fileio import (
    parse_act,
    parse_pair_descriptor,
    parse_pairing_table,
    parse_rees,
    parse_semigroup,
    write_semigroup,
)
from .morita import Pairing, morita_semigroup
from .rees import cover_injectivity, rees_construct, rees_cover, rees_factorizable
from .semigroups import classify, has_weak_local_units
from .suite import (
    THEOREM_IDS,
    SuiteOptions,
    describe,
    render_report,
    run_theorem_suite,
    summarize,
)
from .tensor import tensor_product


def _write_report(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _cmd_classify(args) -> int:
    S = parse_semigroup(args.semigroup)
    report = classify(S)
    print(f"semigroup of order {S.order}")
    fields = (
        ("local_units", report.local_units),
        ("weak_local_units", report.weak_local_units),
        ("common_weak_local_units", report.common_weak_local_units),
        ("firm", report.firm),
        ("factorizable", report.factorizable),
    )
    for name, value in fields:
        print(f"{name}: {_bool(value)}")
    lines = ["sgx-report-v1", "command=classify", f"instance={describe(S)}"]
    lines += [f"{name}={_bool(value)}" for name, value in fields]
    _write_report(args.report, "\n".join(lines) + "\n")
    return 0


def _cmd_tensor(args) -> int:
    S = parse_semigroup(args.semigroup)
    A = parse_act(args.act_a, semigroup=S)
    B = parse_act(args.act_b, semigroup=S)
    if not isinstance(A, RightAct):
        raise SgxError(f"{args.act_a} must contain a right act")
    if not isinstance(B, LeftAct):
        raise SgxError(f"{args.act_b} must contain a left act")
    t = tensor_product(A, B)
    print(f"tensor product with {t.size} classes")
    for cid, members in enumerate(t.classes):
        printable = " ".join(f"({a},{b})" for a, b in members)
        print(f"class {cid}: {printable}")
    lines = ["sgx-report-v1", "command=tensor", f"instance={describe(S)}",
             f"classes={t.size}"]
    for cid, members in enumerate(t.classes):
        joined = ";".join(f"{a},{b}" for a, b in members)
        lines.append(f"class id={cid} members={joined}")
    _write_report(args.report, "\n".join(lines) + "\n")
    return 0


def _cmd_morita_build(args) -> int:
    S = parse_semigroup(args.semigroup)
    P = parse_act(args.left_act, semigroup=S)
    Q = parse_act(args.right_act, semigroup=S)
    if not isinstance(P, LeftAct):
        raise SgxError(f"{args.left_act} must contain a left act")
    if not isinstance(Q, RightAct):
        raise SgxError(f"{args.right_act} must contain a right act")
    table = parse_pairing_table(args.pairing, P.carrier_size, Q.carrier_size, S.order)
    mor = morita_semigroup(Pairing(P, Q, table))
    print(f"Morita semigroup of order {mor.semigroup.order}")
    for row in mor.semigroup.table:
        print(" ".join(str(v) for v in row))
    print(f"unitary: {_bool(mor.unitary)}")
    print(f"surjectively_defined: {_bool(mor.surjectively_defined)}")
    lines = ["sgx-report-v1", "command=morita-build",
             f"instance={describe(S)}",
             f"order={mor.semigroup.order}",
             f"table={describe(mor.semigroup)}",
             f"unitary={_bool(mor.unitary)}",
             f"surjectively_defined={_bool(mor.surjectively_defined)}"]
    _write_report(args.report, "\n".join(lines) + "\n")
    return 0


def _cmd_rees_cover(args) -> int:
    S = parse_semigroup(args.semigroup)
    num_u, num_v, sandwich = parse_rees(args.rees, S.order)
    M = rees_construct(S, num_u, num_v, sandwich)
    factorizable = rees_factorizable(M)
    cover = rees_cover(M)
    injective = cover_injectivity(cover)
    q = cover.quality
    print(f"Rees matrix semigroup of order {M.semigroup.order} "
          f"(|U|={num_u}, |V|={num_v})")
    print(f"cover order: {cover.morita.semigroup.order}")
    checks = (
        ("surjective", q.surjective),
        ("almost_injective", q.almost_injective),
        ("idempotents_lift", q.idempotents_lift),
    )
    for name, value in checks:
        print(f"{name}: {_bool(value)}")
    print(f"injective: {_bool(injective)}")
    print(f"rees_factorizable: {_bool(factorizable)}")
    lines = ["sgx-report-v1", "command=rees-cover",
             f"instance=rees(base={describe(S)};U={num_u};V={num_v})",
             f"order={M.semigroup.order}",
             f"cover_order={cover.morita.semigroup.order}"]
    lines += [f"{name}={_bool(value)}" for name, value in checks]
    lines.append(f"injective={_bool(injective)}")
    lines.append(f"rees_factorizable={_bool(factorizable)}")
    _write_report(args.report, "\n".join(lines) + "\n")
    failures = [name for name, value in checks if not value]
    return 1 if failures else 0


def _cmd_dual_check(args) -> int:
    pair = parse_pair_descriptor(args.pair)
    S = pair.semigroup
    witnesses = dual_witnesses(pair)
    dual = witnesses is not None
    wlu = has_weak_local_units(S)
    cover = bracket_cover(pair)
    print(f"pair over a semigroup of order {S.order}")
    print(f"dual: {_bool(dual)}")
    if dual:
        print(f"witnesses for A: {' '.join(map(str, witnesses[0]))}")
        print(f"witnesses for B: {' '.join(map(str, witnesses[1]))}")
    print(f"weak_local_units: {_bool(wlu)}")
    print(f"tensor order: {cover.morita.semigroup.order}")
    print(f"bracket order: {cover.brackets.semigroup.order}")
    q = cover.quality
    print(f"cover surjective: {_bool(q.surjective)}")
    print(f"cover almost_injective: {_bool(q.almost_injective)}")
    print(f"cover idempotents_lift: {_bool(q.idempotents_lift)}")
    lines = ["sgx-report-v1", "command=dual-check",
             f"instance={describe(S)}",
             f"dual={_bool(dual)}",
             f"weak_local_units={_bool(wlu)}",
             f"tensor_order={cover.morita.semigroup.order}",
             f"bracket_order={cover.brackets.semigroup.order}",
             f"cover_surjective={_bool(q.surjective)}",
             f"cover_almost_injective={_bool(q.almost_injective)}",
             f"cover_idempotents_lift={_bool(q.idempotents_lift)}"]
    failed = not (q.surjective and q.almost_injective and q.idempotents_lift)
    if dual and wlu:
        iso = check_dual_pair_isomorphism(pair)
        rank = check_rank_one_brackets(pair)
        units = check_tensor_units(pair)
        print(f"isomorphism: {_bool(iso.isomorphism)}")
        print(f"brackets_equal_rank_one: {_bool(bool(rank.equal))}")
        print(f"units_transfer: {_bool(units.passed)}")
        lines.append(f"isomorphism={_bool(iso.isomorphism)}")
        lines.append(f"brackets_equal_rank_one={_bool(bool(rank.equal))}")
        lines.append(f"units_transfer={_bool(units.passed)}")
        failed = failed or not (iso.isomorphism and rank.equal and units.passed)
    _write_report(args.report, "\n".join(lines) + "\n")
    return 1 if failed else 0


def _cmd_verify(args) -> int:
    theorems = args.theorems.split(",") if args.theorems else None
    members = corpus_up_to(args.order, args.dedup, args.allow_slow)
    options = SuiteOptions(rees_sample=args.rees_sample,
                           tensor_base_sample=args.tensor_base_sample)
    reports = run_theorem_suite(
        members,
        theorems=theorems,
        options=options,
        enumeration_orders=range(1, min(args.order, 3) + 1),
        allow_slow=args.allow_slow,
    )
    failures = 0
    for theorem, (passed, failed, skipped) in summarize(reports).items():
        print(f"{theorem}: pass={passed} fail={failed} skip={skipped}")
        failures += failed
    for r in reports:
        if r.verdict == "fail":
            print(f"FAIL {r.theorem} {r.instance}: {r.witness}")
    print(f"instances={len(members)} failures={failures}")
    meta = {
        "command": "verify",
        "order": args.order,
        "dedup": args.dedup,
        "theorems": ",".join(theorems) if theorems else "all",
        "rees_sample": args.rees_sample,
        "tensor_base_sample": args.tensor_base_sample,
    }
    _write_report(args.report, render_report(reports, meta))
    return 1 if failures else 0


def _cmd_gen_corpus(args) -> int:
    corpus = enumerate_semigroups(args.order, args.dedup, args.allow_slow)
    out_dir = args.out or f"corpus-order{args.order}"
    os.makedirs(out_dir, exist_ok=True)
    width = max(3, len(str(len(corpus.members))))
    for i, S in enumerate(corpus.members):
        write_semigroup(os.path.join(out_dir, f"s{args.order}_{i:0{width}d}.sgp"), S)
    print(f"wrote {len(corpus.members)} semigroups to {out_dir}")
    lines = ["sgx-report-v1", "command=gen-corpus", f"order={args.order}",
             f"dedup={corpus.dedup}", f"count={len(corpus.members)}"]
    _write_report(args.report, "\n".join(lines) + "\n")
    return 0


def _cmd_counterexample(args) -> int:
    found = find_counterexample(args.predicate, args.order, args.allow_slow)
    if found is None:
        print(f"no {args.predicate} instance up to order {args.order}")
        outcome = "absent"
    else:
        print(f"least {args.predicate} instance:")
        print(f"semigroup {found.order}")
        for row in found.table:
            print(" ".join(str(v) for v in row))
        outcome = describe(found)
    lines = ["sgx-report-v1", "command=counterexample",
             f"predicate={args.predicate}", f"order={args.order}",
             f"outcome={outcome}"]
    _write_report(args.report, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgx",
        description="finite semigroup toolkit: tensor products, Morita "
                    "semigroups, Rees covers, dual pairs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="class predicates of a semigroup file")
    p.add_argument("semigroup")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tensor", help="tensor product of a right and a left act")
    p.add_argument("act_a", help="right act file")
    p.add_argument("act_b", help="left act file")
    p.add_argument("-s", "--semigroup", required=True, help="semigroup file")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_tensor)

    p = sub.add_parser("morita-build", help="Morita semigroup from a pairing")
    p.add_argument("left_act")
    p.add_argument("right_act")
    p.add_argument("pairing")
    p.add_argument("-s", "--semigroup", required=True)
    p.add_argument("--report")
    p.set_defaults(func=_cmd_morita_build)

    p = sub.add_parser("rees-cover", help="cover a Rees matrix semigroup")
    p.add_argument("semigroup")
    p.add_argument("rees", help="rees descriptor file")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_rees_cover)

    p = sub.add_parser("dual-check", help="duality and bracket checks for a pair")
    p.add_argument("pair", help="pair descriptor file")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_dual_check)

    p = sub.add_parser("verify", help="run the theorem suite over a corpus")
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--dedup", choices=("labeled", "canonical"), default="labeled")
    p.add_argument("--theorems", help="comma-separated subset of: "
                                      + ",".join(THEOREM_IDS))
    p.add_argument("--rees-sample", type=int, default=4)
    p.add_argument("--tensor-base-sample", type=int, default=3)
    p.add_argument("--allow-slow", action="store_true",
                   help="permit order-4 enumeration")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen-corpus", help="write every semigroup of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--dedup", nargs="?", const="canonical", default="labeled",
                   choices=("labeled", "canonical"))
    p.add_argument("--out")
    p.add_argument("--allow-slow", action="store_true")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_gen_corpus)

    p = sub.add_parser("counterexample", help="least instance of a class predicate")
    p.add_argument("predicate", choices=sorted(COUNTEREXAMPLE_PREDICATES))
    p.add_argument("--order", type=int, default=3)
    p.add_argument("--allow-slow", action="store_true")
    p.add_argument("--report")
    p.set_defaults(func=_cmd_counterexample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SgxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
