"""Semigroup morphisms and the morphism-quality predicates.

"Almost injective" means injective on every subsemigroup aSb where a has a
left multiplier (a ∈ Sa) and b a right one (b ∈ bS); a surjective almost
injective morphism is a strict local isomorphism.  Idempotent and regular
lifting ask each idempotent/regular target element for a preimage of the
same kind.
"""

from __future__ import annotations

from dataclasses import dataclass

from .acts import ActMorphism, RightAct, regular_right_act
from .errors import (
    MultiplicativityViolation,
    OutOfRange,
    PreconditionFailed,
    TheoremViolation,
    WellDefinednessViolation,
    WitnessNotFound,
)
from .semigroups import (
    FiniteSemigroup,
    has_common_weak_local_units,
    idempotents,
)


@dataclass(frozen=True)
class SemigroupMorphism:
    """A multiplicative map between two finite semigroups."""

    source: FiniteSemigroup
    target: FiniteSemigroup
    mapping: tuple[int, ...]

    def __post_init__(self):
        if len(self.mapping) != self.source.order:
            raise OutOfRange(
                f"map has {len(self.mapping)} entries, expected {self.source.order}")
        for v in self.mapping:
            if not isinstance(v, int) or not 0 <= v < self.target.order:
                raise OutOfRange(f"map value {v!r} is outside the target")
        f = self.mapping
        for x in self.source.elements:
            for y in self.source.elements:
                if f[self.source.mul(x, y)] != self.target.mul(f[x], f[y]):
                    raise MultiplicativityViolation(x, y)

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.order

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.order


def identity_morphism(S: FiniteSemigroup) -> SemigroupMorphism:
    return SemigroupMorphism(S, S, tuple(S.elements))


def principal_subsemigroup(S: FiniteSemigroup, a: int, b: int) -> tuple[int, ...]:
    """The set aSb = {a·s·b | s in S}, sorted; closure under the product is asserted."""
    sub = sorted({S.mul(S.mul(a, s), b) for s in S.elements})
    members = set(sub)
    for x in sub:
        for y in sub:
            if S.mul(x, y) not in members:
                raise TheoremViolation(f"aSb not closed: a={a} b={b} x={x} y={y}")
    return tuple(sub)


def is_almost_injective(f: SemigroupMorphism) -> bool:
    """Injective on every aSb with a ∈ Sa and b ∈ bS."""
    S = f.source
    left_anchored = [a for a in S.elements if any(S.mul(x, a) == a for x in S.elements)]
    right_anchored = [b for b in S.elements if any(S.mul(b, y) == b for y in S.elements)]
    for a in left_anchored:
        for b in right_anchored:
            sub = principal_subsemigroup(S, a, b)
            if len({f.mapping[x] for x in sub}) != len(sub):
                return False
    return True


def regular_elements(S: FiniteSemigroup) -> frozenset[int]:
    """{t | t = txt for some x}."""
    return frozenset(t for t in S.elements
                     if any(S.mul(S.mul(t, x), t) == t for x in S.elements))


def idempotents_lift(f: SemigroupMorphism) -> bool:
    """Every idempotent of the target is the image of some source idempotent."""
    source_images = {f.mapping[e] for e in idempotents(f.source)}
    return all(e in source_images for e in idempotents(f.target))


def regulars_lift(f: SemigroupMorphism) -> bool:
    """Every regular target element has a regular preimage."""
    regular_images = {f.mapping[t] for t in regular_elements(f.source)}
    return all(t in regular_images for t in regular_elements(f.target))


@dataclass(frozen=True)
class MorphismQuality:
    almost_injective: bool
    surjective: bool
    strict_local_iso: bool
    idempotents_lift: bool
    regulars_lift: bool


def morphism_quality(f: SemigroupMorphism) -> MorphismQuality:
    ai = is_almost_injective(f)
    surj = f.is_surjective()
    return MorphismQuality(
        almost_injective=ai,
        surjective=surj,
        strict_local_iso=ai and surj,
        idempotents_lift=idempotents_lift(f),
        regulars_lift=regulars_lift(f),
    )


@dataclass(frozen=True)
class RestrictedInjectivityReport:
    """The three injectivity conditions that coincide over sources with
    common weak local units."""

    almost_injective: bool
    injective_on_principal_right: bool
    injective_on_principal_left: bool

    @property
    def equivalent(self) -> bool:
        return (self.almost_injective == self.injective_on_principal_right
                == self.injective_on_principal_left)


def restricted_injectivity_report(f: SemigroupMorphism) -> RestrictedInjectivityReport:
    """Compare almost injectivity with injectivity on every sS and every Ss.

    Requires the source to have common weak local units (the hypothesis under
    which the three conditions are equivalent).
    """
    S = f.source
    if not has_common_weak_local_units(S):
        raise PreconditionFailed("source semigroup lacks common weak local units")

    def injective_on(subset) -> bool:
        subset = set(subset)
        return len({f.mapping[x] for x in subset}) == len(subset)

    on_right = all(injective_on(S.mul(s, x) for x in S.elements) for s in S.elements)
    on_left = all(injective_on(S.mul(x, s) for x in S.elements) for s in S.elements)
    return RestrictedInjectivityReport(is_almost_injective(f), on_right, on_left)


def act_to_semigroup(A: RightAct, rho: ActMorphism) -> tuple[FiniteSemigroup, SemigroupMorphism]:
    """Turn a right act with an act morphism ρ : A → S_S into a semigroup.

    The product is a·a' := a acted on by ρ(a'); ρ then becomes an almost
    injective semigroup morphism, and when ρ is surjective idempotents lift
    along it.  Both conclusions are verified, not assumed.
    """
    S = A.semigroup
    if rho.source != A or rho.target != regular_right_act(S):
        raise PreconditionFailed("rho must map the act into the regular right act of S")
    n = A.carrier_size
    table = tuple(tuple(A.action[a][rho.mapping[a2]] for a2 in range(n)) for a in range(n))
    sgp = FiniteSemigroup(table)
    morphism = SemigroupMorphism(sgp, S, rho.mapping)
    if not is_almost_injective(morphism):
        raise TheoremViolation("act-induced morphism is not almost injective")
    if morphism.is_surjective() and not idempotents_lift(morphism):
        raise TheoremViolation("idempotents do not lift along a surjective act-induced morphism")
    return sgp, morphism


def action_from_local_isomorphism(tau: SemigroupMorphism) -> RightAct:
    """Recover the right S-action t⋆s' := t·t' (τ(t') = s') behind a strict
    local isomorphism τ : T → S with T having common weak local units.

    The choice of preimage t' is the least index; independence of that choice
    is verified exhaustively, as is equivariance of τ for the new action.
    """
    T, S = tau.source, tau.target
    if not has_common_weak_local_units(T):
        raise PreconditionFailed("source semigroup lacks common weak local units")
    quality = morphism_quality(tau)
    if not quality.strict_local_iso:
        raise PreconditionFailed("map is not a strict local isomorphism")
    preimages: list[list[int]] = [[] for _ in S.elements]
    for t in T.elements:
        preimages[tau.mapping[t]].append(t)
    for s, pre in enumerate(preimages):
        if not pre:
            raise WitnessNotFound(f"no preimage for {s} despite surjectivity")
    action = []
    for t in T.elements:
        row = []
        for s in S.elements:
            pre = preimages[s]
            value = T.mul(t, pre[0])
            for other in pre[1:]:
                if T.mul(t, other) != value:
                    raise WellDefinednessViolation(
                        f"t⋆s depends on the preimage choice at t={t}, s={s}")
            row.append(value)
        action.append(tuple(row))
    act = RightAct(S, tuple(action))
    for t in T.elements:
        for s in S.elements:
            if tau.mapping[act.action[t][s]] != S.mul(tau.mapping[t], s):
                raise TheoremViolation(f"tau is not equivariant at t={t}, s={s}")
    return act
