"""Pairs of acts, adjoint endomorphism semigroups, brackets, and their covers.

A pair β = (A, B, ⟨,⟩) is a left act A, a right act B and a pairing
A×B → S (a :class:`~sgx.morita.Pairing` with P := A, Q := B).  Attached to it:

* the monoid of adjoint endomorphism pairs (ρ, σ) with ⟨ρ(a), b⟩ = ⟨a, σ(b)⟩
  under (f, g)(f', g') = (f'∘f, g∘g');
* its rank-one ideal, the pairs with ρ(A) ⊆ S·a1 and σ(B) ⊆ b1·S;
* the bracket ideal of pairs [b, a] = (⟨-, b⟩·a, b·⟨a, -⟩), whose product
  satisfies [b, a][b', a'] = [b, ⟨a, b'⟩·a'];
* the covering morphism b⊗a ↦ [b, a] from the induced Morita semigroup onto
  the bracket semigroup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .acts import enumerate_endomorphisms
from .errors import PreconditionFailed, SearchSpaceTooLarge, TheoremViolation
from .morita import MoritaSemigroup, Pairing, morita_semigroup
from .morphisms import MorphismQuality, SemigroupMorphism, morphism_quality
from .semigroups import (
    FiniteSemigroup,
    has_local_units,
    has_weak_local_units,
)

Pair = Pairing  # a pair is a pairing read as (left act A, right act B, ⟨,⟩)


def dual_witnesses(pair: Pairing):
    """Least witnesses (a' per a, b' per b) for duality, or None if some fail.

    Condition on a: a ∈ S·a' and ⟨a', B⟩ = S; symmetrically for b.
    """
    A, B, S = pair.left_act, pair.right_act, pair.semigroup
    full = set(S.elements)
    a_good = [a2 for a2 in range(A.carrier_size)
              if {pair.table[a2][b] for b in range(B.carrier_size)} == full]
    b_good = [b2 for b2 in range(B.carrier_size)
              if {pair.table[a][b2] for a in range(A.carrier_size)} == full]
    a_witness = []
    for a in range(A.carrier_size):
        found = next((a2 for a2 in a_good
                      if any(A.action[s][a2] == a for s in S.elements)), None)
        if found is None:
            return None
        a_witness.append(found)
    b_witness = []
    for b in range(B.carrier_size):
        found = next((b2 for b2 in b_good
                      if any(B.action[b2][s] == b for s in S.elements)), None)
        if found is None:
            return None
        b_witness.append(found)
    return tuple(a_witness), tuple(b_witness)


def is_dual_pair(pair: Pairing) -> bool:
    return dual_witnesses(pair) is not None


def _compose(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(outer[x] for x in inner)


def _adjoint(pair: Pairing, rho: tuple[int, ...], sigma: tuple[int, ...]) -> bool:
    table = pair.table
    return all(table[rho[a]][b] == table[a][sigma[b]]
               for a in range(pair.left_act.carrier_size)
               for b in range(pair.right_act.carrier_size))


@dataclass(frozen=True)
class AdjointMonoid:
    """All adjoint endomorphism pairs of a pair, as a finite monoid."""

    pair: Pairing
    members: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    semigroup: FiniteSemigroup

    def index_of(self, rho: tuple[int, ...], sigma: tuple[int, ...]) -> int:
        return self.members.index((rho, sigma))


def adjoint_monoid(pair: Pairing, max_candidates: int | None = None) -> AdjointMonoid:
    """Enumerate all adjoint pairs and build their composition table.

    Raises SearchSpaceTooLarge when either endomorphism enumeration would
    exceed the candidate guard.
    """
    endos_a = [f.mapping for f in enumerate_endomorphisms(pair.left_act, max_candidates)]
    endos_b = [g.mapping for g in enumerate_endomorphisms(pair.right_act, max_candidates)]
    members = tuple(sorted((rho, sigma) for rho in endos_a for sigma in endos_b
                           if _adjoint(pair, rho, sigma)))
    index = {m: i for i, m in enumerate(members)}
    identity = (tuple(range(pair.left_act.carrier_size)),
                tuple(range(pair.right_act.carrier_size)))
    if identity not in index:
        raise TheoremViolation("identity pair is missing from the adjoint monoid")
    table = []
    for rho1, sigma1 in members:
        row = []
        for rho2, sigma2 in members:
            product = (_compose(rho2, rho1), _compose(sigma1, sigma2))
            if product not in index:
                raise TheoremViolation(
                    "adjoint pairs are not closed under the product")
            row.append(index[product])
        table.append(tuple(row))
    return AdjointMonoid(pair, members, FiniteSemigroup(tuple(table)))


def rank_one_ideal(monoid: AdjointMonoid) -> tuple[int, ...]:
    """Indices of the rank-one members; the two-sided ideal property is checked."""
    pair = monoid.pair
    A, B, S = pair.left_act, pair.right_act, pair.semigroup
    down_sets = [frozenset(A.action[s][a1] for s in S.elements)
                 for a1 in range(A.carrier_size)]
    up_sets = [frozenset(B.action[b1][s] for s in S.elements)
               for b1 in range(B.carrier_size)]
    ids = []
    for i, (rho, sigma) in enumerate(monoid.members):
        rho_image = set(rho)
        sigma_image = set(sigma)
        if (any(rho_image <= d for d in down_sets)
                and any(sigma_image <= u for u in up_sets)):
            ids.append(i)
    id_set = set(ids)
    for i in ids:
        for j in range(len(monoid.members)):
            if (monoid.semigroup.mul(i, j) not in id_set
                    or monoid.semigroup.mul(j, i) not in id_set):
                raise TheoremViolation("rank-one members do not form an ideal")
    return tuple(ids)


@dataclass(frozen=True)
class Bracket:
    """The adjoint pair [b, a] = (⟨-, b⟩·a, b·⟨a, -⟩)."""

    b: int
    a: int
    rho: tuple[int, ...]
    sigma: tuple[int, ...]


def bracket(pair: Pairing, b: int, a: int) -> Bracket:
    """Evaluate [b, a] and verify it is a genuine adjoint endomorphism pair."""
    A, B = pair.left_act, pair.right_act
    rho = tuple(A.action[pair.table[x][b]][a] for x in range(A.carrier_size))
    sigma = tuple(B.action[b][pair.table[a][y]] for y in range(B.carrier_size))
    if not _adjoint(pair, rho, sigma):
        raise TheoremViolation(f"bracket [{b}, {a}] is not adjoint")
    return Bracket(b, a, rho, sigma)


@dataclass(frozen=True)
class BracketSemigroup:
    """All brackets, deduplicated by their endomorphism pair."""

    pair: Pairing
    members: tuple[Bracket, ...]
    semigroup: FiniteSemigroup

    def index_of(self, br: Bracket) -> int:
        for i, member in enumerate(self.members):
            if member.rho == br.rho and member.sigma == br.sigma:
                return i
        raise KeyError("bracket is not a member")


def bracket_semigroup(pair: Pairing, monoid: AdjointMonoid | None = None) -> BracketSemigroup:
    """Materialize all |B|·|A| brackets as a semigroup.

    The product is computed two ways, by composing endomorphism pairs and by
    the bracket identity [b, a][b', a'] = [b, ⟨a, b'⟩·a'], and the results
    must agree.  When the adjoint monoid is supplied the brackets are checked
    to form a two-sided ideal in it.
    """
    A, B = pair.left_act, pair.right_act
    seen: dict[tuple, Bracket] = {}
    for b in range(B.carrier_size):
        for a in range(A.carrier_size):
            br = bracket(pair, b, a)
            seen.setdefault((br.rho, br.sigma), br)
    members = tuple(sorted(seen.values(), key=lambda m: (m.rho, m.sigma)))
    index = {(m.rho, m.sigma): i for i, m in enumerate(members)}
    table = []
    for m1 in members:
        row = []
        for m2 in members:
            composed = (_compose(m2.rho, m1.rho), _compose(m1.sigma, m2.sigma))
            if composed not in index:
                raise TheoremViolation("bracket composition left the bracket set")
            via_identity = bracket(pair, m1.b,
                                   A.action[pair.table[m1.a][m2.b]][m2.a])
            if index[(via_identity.rho, via_identity.sigma)] != index[composed]:
                raise TheoremViolation(
                    f"bracket product disagrees with composition at "
                    f"[{m1.b},{m1.a}][{m2.b},{m2.a}]")
            row.append(index[composed])
        table.append(tuple(row))
    result = BracketSemigroup(pair, members, FiniteSemigroup(tuple(table)))
    if monoid is not None:
        positions = {monoid.index_of(m.rho, m.sigma) for m in members}
        for i in positions:
            for j in range(len(monoid.members)):
                if (monoid.semigroup.mul(i, j) not in positions
                        or monoid.semigroup.mul(j, i) not in positions):
                    raise TheoremViolation("brackets do not form an ideal")
    return result


@dataclass(frozen=True)
class BracketCover:
    """The Morita semigroup B⊗A with its covering morphism onto the brackets."""

    morita: MoritaSemigroup
    brackets: BracketSemigroup
    morphism: SemigroupMorphism
    quality: MorphismQuality


def bracket_cover(pair: Pairing) -> BracketCover:
    """Build b⊗a ↦ [b, a] as a morphism from the Morita semigroup of the pair
    onto the bracket semigroup.

    Well-definedness on tensor classes is verified exhaustively, together
    with surjectivity, almost injectivity and idempotent lifting.
    """
    A, B, S = pair.left_act, pair.right_act, pair.semigroup
    for b in range(B.carrier_size):
        for s in S.elements:
            for a in range(A.carrier_size):
                shifted = bracket(pair, B.action[b][s], a)
                other = bracket(pair, b, A.action[s][a])
                if shifted.rho != other.rho or shifted.sigma != other.sigma:
                    raise TheoremViolation(
                        f"[b·s, a] != [b, s·a] at b={b}, s={s}, a={a}")
    mor = morita_semigroup(pair)
    sigma = bracket_semigroup(pair)
    mapping = []
    for members in mor.tensor.classes:
        targets = {sigma.index_of(bracket(pair, b, a)) for b, a in members}
        if len(targets) != 1:
            raise TheoremViolation("bracket map is not constant on a tensor class")
        mapping.append(targets.pop())
    morphism = SemigroupMorphism(mor.semigroup, sigma.semigroup, tuple(mapping))
    quality = morphism_quality(morphism)
    if not quality.surjective:
        raise TheoremViolation("bracket cover is not surjective")
    if not quality.almost_injective:
        raise TheoremViolation("bracket cover is not almost injective")
    if not quality.idempotents_lift:
        raise TheoremViolation("idempotents do not lift along the bracket cover")
    return BracketCover(mor, sigma, morphism, quality)


def _require_dual_over_wlu(pair: Pairing) -> None:
    if not has_weak_local_units(pair.semigroup):
        raise PreconditionFailed("the base semigroup lacks weak local units")
    if not is_dual_pair(pair):
        raise PreconditionFailed("the pair is not dual")


@dataclass(frozen=True)
class DualPairIsoReport:
    tensor_order: int
    bracket_order: int
    injective: bool

    @property
    def isomorphism(self) -> bool:
        return self.injective


def check_dual_pair_isomorphism(pair: Pairing) -> DualPairIsoReport:
    """For a dual pair over a semigroup with weak local units, the bracket
    cover must be injective, hence an isomorphism."""
    _require_dual_over_wlu(pair)
    cover = bracket_cover(pair)
    return DualPairIsoReport(
        tensor_order=cover.morita.semigroup.order,
        bracket_order=cover.brackets.semigroup.order,
        injective=cover.morphism.is_injective(),
    )


@dataclass(frozen=True)
class RankOneReport:
    monoid_enumerated: bool
    equal: bool | None
    brackets_rank_one: bool
    witness: str | None = None


def check_rank_one_brackets(pair: Pairing,
                            max_candidates: int | None = None) -> RankOneReport:
    """For a dual pair over a semigroup with weak local units, the brackets
    must be exactly the rank-one adjoint pairs.

    Degrades gracefully when the endomorphism guard trips: only the inclusion
    of brackets among rank-one pairs is then certified.
    """
    _require_dual_over_wlu(pair)
    A, B, S = pair.left_act, pair.right_act, pair.semigroup
    sigma = bracket_semigroup(pair)
    down_sets = [frozenset(A.action[s][a1] for s in S.elements)
                 for a1 in range(A.carrier_size)]
    up_sets = [frozenset(B.action[b1][s] for s in S.elements)
               for b1 in range(B.carrier_size)]
    brackets_rank_one = all(
        any(set(m.rho) <= d for d in down_sets)
        and any(set(m.sigma) <= u for u in up_sets)
        for m in sigma.members)
    try:
        monoid = adjoint_monoid(pair, max_candidates)
    except SearchSpaceTooLarge:
        return RankOneReport(False, None, brackets_rank_one)
    rank_one = {monoid.members[i] for i in rank_one_ideal(monoid)}
    bracket_keys = {(m.rho, m.sigma) for m in sigma.members}
    equal = rank_one == bracket_keys
    witness = None
    if not equal:
        difference = sorted(rank_one ^ bracket_keys)
        witness = f"symmetric difference of size {len(difference)}: {difference[0]}"
    return RankOneReport(True, equal, brackets_rank_one, witness)


@dataclass(frozen=True)
class TensorUnitsReport:
    weak_local_units: bool
    base_has_local_units: bool
    local_units: bool | None

    @property
    def passed(self) -> bool:
        if not self.weak_local_units:
            return False
        if self.base_has_local_units:
            return bool(self.local_units)
        return True


def check_tensor_units(pair: Pairing) -> TensorUnitsReport:
    """For a dual pair over a semigroup with weak local units, the induced
    Morita semigroup must keep them; local units likewise transfer."""
    _require_dual_over_wlu(pair)
    mor = morita_semigroup(pair)
    base_lu = has_local_units(pair.semigroup)
    return TensorUnitsReport(
        weak_local_units=has_weak_local_units(mor.semigroup),
        base_has_local_units=base_lu,
        local_units=has_local_units(mor.semigroup) if base_lu else None,
    )
