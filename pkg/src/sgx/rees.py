"""Rees matrix semigroups over a base semigroup, and their tensor covers.

M(S, U, V, p) has elements (u, s, v) with product
(u, s, v)(u', s', v') = (u, s·p(v, u')·s', v').  For factorizable S the
cover construction builds the Morita semigroup over Q = U×S and P = S×V with
pairing ⟨(s, v), (u, s')⟩ = s·p(v, u)·s' and the surjection
ψ : (u, s)⊗(t, v) ↦ (u, st, v).
"""

from __future__ import annotations

from dataclasses import dataclass

from .acts import LeftAct, RightAct
from .errors import (
    CoverMissing,
    NotFactorizable,
    OutOfRange,
    TheoremViolation,
)
from .morita import MoritaSemigroup, build_morita_semigroup, morita_semigroup, multiplication_pairing
from .morphisms import MorphismQuality, SemigroupMorphism, morphism_quality
from .semigroups import FiniteSemigroup, Table, _as_table, is_factorizable
from .tensor import induced_map, is_firm, replay_tossing, tossing_witness


@dataclass(frozen=True)
class ReesMatrixSemigroup:
    """Triples (u, s, v) with a sandwich matrix p : V×U → S.

    Elements are encoded by the lexicographic index of (u, s, v).
    """

    base: FiniteSemigroup
    num_u: int
    num_v: int
    sandwich: Table  # indexed [v][u]
    semigroup: FiniteSemigroup

    def encode(self, u: int, s: int, v: int) -> int:
        return (u * self.base.order + s) * self.num_v + v

    def decode(self, idx: int) -> tuple[int, int, int]:
        idx, v = divmod(idx, self.num_v)
        u, s = divmod(idx, self.base.order)
        return u, s, v


def rees_construct(S: FiniteSemigroup, num_u: int, num_v: int, sandwich) -> ReesMatrixSemigroup:
    """Build and validate M(S, U, V, p)."""
    p = _as_table(sandwich)
    if num_u < 1 or num_v < 1:
        raise OutOfRange("index sets must be non-empty")
    if len(p) != num_v:
        raise OutOfRange(f"sandwich matrix has {len(p)} rows, expected {num_v}")
    for i, row in enumerate(p):
        if len(row) != num_u:
            raise OutOfRange(f"sandwich row {i} has {len(row)} entries, expected {num_u}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < S.order:
                raise OutOfRange(f"sandwich entry {v!r} is not an element of the base")
    n = S.order
    order = num_u * n * num_v

    def encode(u, s, v):
        return (u * n + s) * num_v + v

    table = [[0] * order for _ in range(order)]
    for u in range(num_u):
        for s in range(n):
            for v in range(num_v):
                row = table[encode(u, s, v)]
                for u2 in range(num_u):
                    left = S.mul(s, p[v][u2])
                    for s2 in range(n):
                        prod = S.mul(left, s2)
                        for v2 in range(num_v):
                            row[encode(u2, s2, v2)] = encode(u, prod, v2)
    sgp = FiniteSemigroup(tuple(tuple(r) for r in table))
    return ReesMatrixSemigroup(S, num_u, num_v, p, sgp)


def rees_factorizable(M: ReesMatrixSemigroup) -> bool:
    """S = S·im(p)·S, cross-checked against factorizability of M itself."""
    S = M.base
    image = {v for row in M.sandwich for v in row}
    spanned = {S.mul(S.mul(x, m), y)
               for x in S.elements for m in image for y in S.elements}
    by_sandwich = len(spanned) == S.order
    direct = is_factorizable(M.semigroup)
    if by_sandwich != direct:
        raise TheoremViolation(
            f"S=S·im(p)·S is {by_sandwich} but M factorizable is {direct}")
    return by_sandwich


@dataclass(frozen=True)
class ReesCover:
    """The Morita semigroup over Q = U×S, P = S×V and the covering morphism ψ."""

    rees: ReesMatrixSemigroup
    morita: MoritaSemigroup
    psi: SemigroupMorphism
    quality: MorphismQuality


def rees_cover(M: ReesMatrixSemigroup) -> ReesCover:
    """Cover a Rees matrix semigroup over factorizable S by a Morita semigroup.

    ψ is verified to be a surjective, almost injective semigroup morphism
    along which idempotents lift; all flags are recorded in the result.
    """
    S = M.base
    if not is_factorizable(S):
        raise NotFactorizable("the cover construction needs a factorizable base")
    n = S.order
    # Q = (U×S) with (u, s)·s' = (u, ss'); P = (S×V) with s'·(s, v) = (s's, v).
    q_action = tuple(tuple(u * n + S.mul(s, s2) for s2 in range(n))
                     for u in range(M.num_u) for s in range(n))
    Q = RightAct(S, q_action)
    p_action = tuple(tuple(S.mul(s2, s) * M.num_v + v
                           for s in range(n) for v in range(M.num_v))
                     for s2 in range(n))
    P = LeftAct(S, p_action)
    pairing = tuple(tuple(S.mul(S.mul(s, M.sandwich[v][u]), s2)
                          for u in range(M.num_u) for s2 in range(n))
                    for s in range(n) for v in range(M.num_v))
    mor = build_morita_semigroup(P, Q, pairing)

    def image(q_idx: int, p_idx: int) -> int:
        u, s = divmod(q_idx, n)
        t, v = divmod(p_idx, M.num_v)
        return M.encode(u, S.mul(s, t), v)

    psi_values = induced_map(mor.tensor, image)
    psi = SemigroupMorphism(mor.semigroup, M.semigroup, psi_values)
    quality = morphism_quality(psi)
    if not quality.surjective:
        raise TheoremViolation("rees cover morphism is not surjective")
    if not quality.almost_injective:
        raise TheoremViolation("rees cover morphism is not almost injective")
    if not quality.idempotents_lift:
        raise TheoremViolation("idempotents do not lift along the rees cover morphism")
    return ReesCover(M, mor, psi, quality)


def cover_injectivity(cover: ReesCover) -> bool:
    """True iff ψ is injective.

    When the base is firm, every pair of raw tensor pairs with the same
    ψ-image is additionally connected by an explicit tossing witness, which
    is replayed step by step.
    """
    if cover is None:
        raise CoverMissing("build the cover first")
    psi = cover.psi
    injective = psi.is_injective()
    if is_firm(cover.rees.base):
        t = cover.morita.tensor
        by_image: dict[int, list[tuple[int, int]]] = {}
        for a in range(t.carrier_a):
            for b in range(t.carrier_b):
                by_image.setdefault(psi.mapping[t.class_of(a, b)], []).append((a, b))
        for pairs in by_image.values():
            anchor = pairs[0]
            for other in pairs[1:]:
                witness = tossing_witness(t, anchor, other)
                if witness is None or not replay_tossing(t, witness):
                    raise TheoremViolation(
                        f"no replayable tossing connects {anchor} and {other} "
                        "over a firm base")
    return injective


@dataclass(frozen=True)
class TensorBaseCoverReport:
    """Cover diagnostics for a Rees matrix semigroup over S⊗S."""

    tensor_square_order: int
    tensor_square_firm: bool
    psi_injective: bool
    morita_unitary: bool
    rees_factorizable: bool
    surjectively_defined: bool

    @property
    def passed(self) -> bool:
        ok = self.tensor_square_firm and self.psi_injective and self.morita_unitary
        if self.rees_factorizable:
            ok = ok and self.surjectively_defined
        return ok


def tensor_base_cover(S: FiniteSemigroup, num_u: int, num_v: int,
                      sandwich) -> TensorBaseCoverReport:
    """Cover M(S⊗S, U, V, p) for factorizable S; sandwich entries index S⊗S classes.

    The tensor square is rebuilt, checked firm, and the cover over it must be
    an isomorphism; when M is factorizable the cover must also be
    surjectively defined.
    """
    if not is_factorizable(S):
        raise NotFactorizable("the tensor-square cover needs a factorizable semigroup")
    T = morita_semigroup(multiplication_pairing(S)).semigroup
    firm_T = is_firm(T)
    M = rees_construct(T, num_u, num_v, sandwich)
    cover = rees_cover(M)
    injective = cover_injectivity(cover)
    m_fact = rees_factorizable(M)
    if m_fact != cover.morita.surjectively_defined:
        raise TheoremViolation(
            "M factorizable disagrees with the pairing being surjective")
    return TensorBaseCoverReport(
        tensor_square_order=T.order,
        tensor_square_firm=firm_T,
        psi_injective=injective,
        morita_unitary=cover.morita.unitary,
        rees_factorizable=m_fact,
        surjectively_defined=cover.morita.surjectively_defined,
    )
