"""Morita semigroups from pairings, and Morita contexts with full verification.

A pairing ⟨,⟩ : P×Q → S (P a left act, Q a right act, both over S) turns the
tensor product Q⊗P into a Morita semigroup with product

    (q⊗p)(q'⊗p') = q ⊗ ⟨p,q'⟩·p'.

A Morita context (S, T, P, Q, θ, φ) consists of biacts P (S on the left, T on
the right) and Q (T on the left, S on the right) together with class maps
θ : P⊗Q → S and φ : Q⊗P → T that are biact morphisms and satisfy the two
mixed identities  θ(p⊗q)p' = pφ(q⊗p')  and  q'θ(p⊗q) = φ(q'⊗p)q.
"""

from __future__ import annotations

from dataclasses import dataclass

from .acts import (
    Biact,
    LeftAct,
    RightAct,
    is_unitary,
    regular_left_act,
    regular_right_act,
)
from .errors import (
    BiactLawViolation,
    ContextInvalid,
    NotFactorizable,
    OutOfRange,
    PreconditionFailed,
    SemigroupMismatch,
    TheoremViolation,
    WellDefinednessViolation,
)
from .morphisms import SemigroupMorphism, idempotents_lift, is_almost_injective
from .semigroups import FiniteSemigroup, Table, _as_table, is_factorizable
from .tensor import TensorProduct, induced_map, tensor_product


@dataclass(frozen=True)
class Pairing:
    """A biact morphism P×Q → S given by a table indexed [p][q]."""

    left_act: LeftAct
    right_act: RightAct
    table: Table

    def __post_init__(self):
        P, Q = self.left_act, self.right_act
        if P.semigroup != Q.semigroup:
            raise SemigroupMismatch("pairing acts are over different semigroups")
        S = P.semigroup
        if len(self.table) != P.carrier_size:
            raise OutOfRange(
                f"pairing has {len(self.table)} rows, expected {P.carrier_size}")
        for i, row in enumerate(self.table):
            if len(row) != Q.carrier_size:
                raise OutOfRange(
                    f"pairing row {i} has {len(row)} entries, expected {Q.carrier_size}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < S.order:
                    raise OutOfRange(f"pairing value {v!r} is not an element of S")
        for s in S.elements:
            for p in range(P.carrier_size):
                for q in range(Q.carrier_size):
                    if self.table[P.action[s][p]][q] != S.mul(s, self.table[p][q]):
                        raise BiactLawViolation(
                            f"⟨s·p, q⟩ != s⟨p, q⟩ at s={s}, p={p}, q={q}")
                    if self.table[p][Q.action[q][s]] != S.mul(self.table[p][q], s):
                        raise BiactLawViolation(
                            f"⟨p, q·s⟩ != ⟨p, q⟩s at p={p}, q={q}, s={s}")

    @property
    def semigroup(self) -> FiniteSemigroup:
        return self.left_act.semigroup


def multiplication_pairing(S: FiniteSemigroup) -> Pairing:
    """Regular acts with ⟨p, q⟩ = pq."""
    return Pairing(regular_left_act(S), regular_right_act(S), S.table)


@dataclass(frozen=True)
class MoritaSemigroup:
    """The tensor quotient Q⊗P with the pairing-induced product on classes."""

    pairing: Pairing
    tensor: TensorProduct
    semigroup: FiniteSemigroup
    unitary: bool
    surjectively_defined: bool


def morita_semigroup(pairing: Pairing) -> MoritaSemigroup:
    """Build the Morita semigroup of a pairing.

    The product table is computed on representatives and its independence of
    the representative choice is verified over all member pairs.
    """
    P, Q, S = pairing.left_act, pairing.right_act, pairing.semigroup
    t = tensor_product(Q, P)
    size = t.size
    table = []
    for c1 in range(size):
        row = []
        for c2 in range(size):
            q, p = t.classes[c1][0]
            q2, p2 = t.classes[c2][0]
            target = t.class_of(q, P.action[pairing.table[p][q2]][p2])
            for qa, pa in t.classes[c1]:
                for qb, pb in t.classes[c2]:
                    got = t.class_of(qa, P.action[pairing.table[pa][qb]][pb])
                    if got != target:
                        raise WellDefinednessViolation(
                            "Morita product depends on representatives at "
                            f"classes ({c1}, {c2})")
            row.append(target)
        table.append(tuple(row))
    sgp = FiniteSemigroup(tuple(table))
    surjective = {v for row in pairing.table for v in row} == set(S.elements)
    return MoritaSemigroup(
        pairing=pairing,
        tensor=t,
        semigroup=sgp,
        unitary=is_unitary(P) and is_unitary(Q),
        surjectively_defined=surjective,
    )


def build_morita_semigroup(P: LeftAct, Q: RightAct, table) -> MoritaSemigroup:
    return morita_semigroup(Pairing(P, Q, _as_table(table)))


@dataclass(frozen=True)
class MoritaContext:
    S: FiniteSemigroup
    T: FiniteSemigroup
    P: Biact
    Q: Biact
    theta: tuple[int, ...]
    phi: tuple[int, ...]
    tensor_PQ: TensorProduct
    tensor_QP: TensorProduct


def make_context(S: FiniteSemigroup, T: FiniteSemigroup, P: Biact, Q: Biact,
                 theta, phi) -> MoritaContext:
    """Assemble a context, computing both tensor products; laws are checked
    separately by :func:`verify_context`."""
    if P.left_semigroup != S or P.right_semigroup != T:
        raise SemigroupMismatch("P must be an (S, T)-biact")
    if Q.left_semigroup != T or Q.right_semigroup != S:
        raise SemigroupMismatch("Q must be a (T, S)-biact")
    tensor_PQ = tensor_product(P, Q)
    tensor_QP = tensor_product(Q, P)
    theta = tuple(theta)
    phi = tuple(phi)
    if len(theta) != tensor_PQ.size:
        raise OutOfRange(f"theta has {len(theta)} entries, expected {tensor_PQ.size}")
    if len(phi) != tensor_QP.size:
        raise OutOfRange(f"phi has {len(phi)} entries, expected {tensor_QP.size}")
    if any(not 0 <= v < S.order for v in theta):
        raise OutOfRange("theta has values outside S")
    if any(not 0 <= v < T.order for v in phi):
        raise OutOfRange("phi has values outside T")
    return MoritaContext(S, T, P, Q, theta, phi, tensor_PQ, tensor_QP)


@dataclass(frozen=True)
class LawCheck:
    law: str
    holds: bool
    witness: str | None = None


@dataclass(frozen=True)
class ContextReport:
    laws: tuple[LawCheck, ...]
    unitary: bool
    surjective: bool

    @property
    def passed(self) -> bool:
        return all(check.holds for check in self.laws)

    def failures(self) -> tuple[LawCheck, ...]:
        return tuple(check for check in self.laws if not check.holds)


def verify_context(ctx: MoritaContext) -> ContextReport:
    """Check the biact-morphism laws for θ and φ and both mixed identities,
    reporting the first failing instance of each law."""
    S, T, P, Q = ctx.S, ctx.T, ctx.P, ctx.Q
    tPQ, tQP = ctx.tensor_PQ, ctx.tensor_QP
    laws = []

    def first_failure(name, triples):
        for witness in triples:
            laws.append(LawCheck(name, False, witness))
            return
        laws.append(LawCheck(name, True))

    first_failure("theta-left-morphism", (
        f"s={s},class={c}" for s in S.elements for c in range(tPQ.size)
        if ctx.theta[tPQ.left_action[s][c]] != S.mul(s, ctx.theta[c])))
    first_failure("theta-right-morphism", (
        f"class={c},s={s}" for c in range(tPQ.size) for s in S.elements
        if ctx.theta[tPQ.right_action[c][s]] != S.mul(ctx.theta[c], s)))
    first_failure("phi-left-morphism", (
        f"t={t},class={c}" for t in T.elements for c in range(tQP.size)
        if ctx.phi[tQP.left_action[t][c]] != T.mul(t, ctx.phi[c])))
    first_failure("phi-right-morphism", (
        f"class={c},t={t}" for c in range(tQP.size) for t in T.elements
        if ctx.phi[tQP.right_action[c][t]] != T.mul(ctx.phi[c], t)))
    first_failure("mixed-left", (
        f"p={p},q={q},p'={p2}"
        for p in range(P.carrier_size) for q in range(Q.carrier_size)
        for p2 in range(P.carrier_size)
        if P.left_action[ctx.theta[tPQ.class_of(p, q)]][p2]
        != P.right_action[p][ctx.phi[tQP.class_of(q, p2)]]))
    first_failure("mixed-right", (
        f"q'={q2},p={p},q={q}"
        for q2 in range(Q.carrier_size) for p in range(P.carrier_size)
        for q in range(Q.carrier_size)
        if Q.right_action[q2][ctx.theta[tPQ.class_of(p, q)]]
        != Q.left_action[ctx.phi[tQP.class_of(q2, p)]][q]))

    return ContextReport(
        laws=tuple(laws),
        unitary=is_unitary(P) and is_unitary(Q),
        surjective=(set(ctx.theta) == set(S.elements)
                    and set(ctx.phi) == set(T.elements)),
    )


@dataclass(frozen=True)
class ContextMorphisms:
    """The two Morita semigroups of a context with θ and φ as morphisms."""

    theta: SemigroupMorphism
    phi: SemigroupMorphism
    morita_over_T: MoritaSemigroup
    morita_over_S: MoritaSemigroup


def context_induced_semigroup_morphisms(ctx: MoritaContext) -> ContextMorphisms:
    """Build P⊗Q and Q⊗P as Morita semigroups and return θ, φ as validated
    semigroup morphisms.

    Both are checked to be almost injective, and any surjective one is
    checked to lift idempotents.
    """
    report = verify_context(ctx)
    if not report.passed:
        raise ContextInvalid(
            "; ".join(f"{c.law} fails at {c.witness}" for c in report.failures()))
    pairing_T = tuple(tuple(ctx.phi[ctx.tensor_QP.class_of(q, p)]
                            for p in range(ctx.P.carrier_size))
                      for q in range(ctx.Q.carrier_size))
    morita_T = build_morita_semigroup(ctx.Q.left_view(), ctx.P.right_view(), pairing_T)
    if morita_T.tensor.classes != ctx.tensor_PQ.classes:
        raise WellDefinednessViolation("P⊗Q classes diverged between constructions")
    theta_m = SemigroupMorphism(morita_T.semigroup, ctx.S, ctx.theta)

    pairing_S = tuple(tuple(ctx.theta[ctx.tensor_PQ.class_of(p, q)]
                            for q in range(ctx.Q.carrier_size))
                      for p in range(ctx.P.carrier_size))
    morita_S = build_morita_semigroup(ctx.P.left_view(), ctx.Q.right_view(), pairing_S)
    if morita_S.tensor.classes != ctx.tensor_QP.classes:
        raise WellDefinednessViolation("Q⊗P classes diverged between constructions")
    phi_m = SemigroupMorphism(morita_S.semigroup, ctx.T, ctx.phi)

    for name, morphism in (("theta", theta_m), ("phi", phi_m)):
        if not is_almost_injective(morphism):
            raise TheoremViolation(f"{name} is not almost injective")
        if morphism.is_surjective() and not idempotents_lift(morphism):
            raise TheoremViolation(f"idempotents do not lift along surjective {name}")
    return ContextMorphisms(theta_m, phi_m, morita_T, morita_S)


def canonical_context(S: FiniteSemigroup) -> MoritaContext:
    """The context connecting a factorizable S with its tensor square S⊗S.

    P is S as an (S, S⊗S)-biact, Q is S as an (S⊗S, S)-biact; θ is induced by
    multiplication and φ by the tensor class map.
    """
    if not is_factorizable(S):
        raise NotFactorizable("the canonical context needs a factorizable semigroup")
    mor = morita_semigroup(multiplication_pairing(S))
    T = mor.semigroup
    mu = induced_map(mor.tensor, S.mul)
    right_on_P = tuple(tuple(S.mul(p, mu[t]) for t in T.elements) for p in S.elements)
    P = Biact(S, T, S.table, right_on_P)
    left_on_Q = tuple(tuple(S.mul(mu[t], q) for q in S.elements) for t in T.elements)
    Q = Biact(T, S, left_on_Q, S.table)
    tensor_PQ = tensor_product(P, Q)
    theta = induced_map(tensor_PQ, S.mul)
    tensor_QP = tensor_product(Q, P)
    phi = tuple(mor.tensor.class_of(*tensor_QP.classes[c][0]) for c in range(tensor_QP.size))
    ctx = make_context(S, T, P, Q, theta, phi)
    report = verify_context(ctx)
    if not report.passed:
        raise TheoremViolation(
            "canonical context fails verification: "
            + "; ".join(f"{c.law} at {c.witness}" for c in report.failures()))
    return ctx


@dataclass(frozen=True)
class BijectiveContextReport:
    theta_isomorphism: bool
    morita_unitary: bool
    morita_surjectively_defined: bool

    @property
    def passed(self) -> bool:
        return (self.theta_isomorphism and self.morita_unitary
                and self.morita_surjectively_defined)


def verify_bijective_context(ctx: MoritaContext) -> BijectiveContextReport:
    """For firm S, T and bijective θ, φ: confirm θ is an isomorphism from the
    Morita semigroup P⊗Q onto S and that this Morita semigroup is unitary and
    surjectively defined."""
    from .tensor import is_firm

    if not (is_firm(ctx.S) and is_firm(ctx.T)):
        raise PreconditionFailed("both semigroups must be firm")
    theta_bijective = (len(ctx.theta) == ctx.S.order
                       and len(set(ctx.theta)) == ctx.S.order)
    phi_bijective = (len(ctx.phi) == ctx.T.order
                     and len(set(ctx.phi)) == ctx.T.order)
    if not (theta_bijective and phi_bijective):
        raise PreconditionFailed("theta and phi must be bijective")
    cm = context_induced_semigroup_morphisms(ctx)
    return BijectiveContextReport(
        theta_isomorphism=cm.theta.is_injective() and cm.theta.is_surjective(),
        morita_unitary=cm.morita_over_T.unitary,
        morita_surjectively_defined=cm.morita_over_T.surjectively_defined,
    )
