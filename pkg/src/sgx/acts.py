"""Finite one- and two-sided semigroup acts, act morphisms, endomorphism enumeration."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass

from .errors import (
    CompatibilityViolation,
    EquivarianceViolation,
    OutOfRange,
    SearchSpaceTooLarge,
    SemigroupMismatch,
)
from .semigroups import FiniteSemigroup, Table, _as_table

DEFAULT_MAX_CANDIDATES = 10 ** 6
GUARD_ENV_VAR = "SGX_MAX_CANDIDATES"


def _check_table(action: Table, rows: int, cols: int, bound: int) -> None:
    if len(action) != rows:
        raise OutOfRange(f"action table has {len(action)} rows, expected {rows}")
    for i, row in enumerate(action):
        if len(row) != cols:
            raise OutOfRange(f"action row {i} has {len(row)} entries, expected {cols}")
        for v in row:
            if not isinstance(v, int) or not 0 <= v < bound:
                raise OutOfRange(f"action entry {v!r} in row {i} is not in 0..{bound - 1}")


@dataclass(frozen=True)
class RightAct:
    """A finite right act: ``action[a][s]`` is a·s, with (a·s)·s' = a·(ss')."""

    semigroup: FiniteSemigroup
    action: Table

    def __post_init__(self):
        n = self.semigroup.order
        m = len(self.action)
        _check_table(self.action, m, n, m)
        for a in range(m):
            for s in range(n):
                a_s = self.action[a][s]
                for s2 in range(n):
                    if self.action[a_s][s2] != self.action[a][self.semigroup.mul(s, s2)]:
                        raise CompatibilityViolation(a, s, s2, "right")

    @property
    def carrier_size(self) -> int:
        return len(self.action)

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]


@dataclass(frozen=True)
class LeftAct:
    """A finite left act: ``action[s][a]`` is s·a, with s·(s'·a) = (ss')·a."""

    semigroup: FiniteSemigroup
    action: Table

    def __post_init__(self):
        n = self.semigroup.order
        if len(self.action) != n:
            raise OutOfRange(f"action table has {len(self.action)} rows, expected {n}")
        m = len(self.action[0]) if self.action else 0
        _check_table(self.action, n, m, m)
        for s in range(n):
            for s2 in range(n):
                ss2 = self.semigroup.mul(s, s2)
                for a in range(m):
                    if self.action[s][self.action[s2][a]] != self.action[ss2][a]:
                        raise CompatibilityViolation(a, s, s2, "left")

    @property
    def carrier_size(self) -> int:
        return len(self.action[0])

    def act(self, s: int, a: int) -> int:
        return self.action[s][a]


@dataclass(frozen=True)
class Biact:
    """Simultaneous left and right acts whose actions commute."""

    left_semigroup: FiniteSemigroup
    right_semigroup: FiniteSemigroup
    left_action: Table
    right_action: Table

    def __post_init__(self):
        left = LeftAct(self.left_semigroup, self.left_action)
        right = RightAct(self.right_semigroup, self.right_action)
        if left.carrier_size != right.carrier_size:
            raise OutOfRange("left and right action tables disagree on the carrier size")
        for s in self.left_semigroup.elements:
            for a in range(left.carrier_size):
                sa = self.left_action[s][a]
                for t in self.right_semigroup.elements:
                    if self.right_action[sa][t] != self.left_action[s][self.right_action[a][t]]:
                        raise CompatibilityViolation(a, s, t, "biact")

    @property
    def carrier_size(self) -> int:
        return len(self.right_action)

    def left_view(self) -> LeftAct:
        return LeftAct(self.left_semigroup, self.left_action)

    def right_view(self) -> RightAct:
        return RightAct(self.right_semigroup, self.right_action)


def make_right_act(S: FiniteSemigroup, size: int, action) -> RightAct:
    rows = _as_table(action)
    if len(rows) != size:
        raise OutOfRange(f"action table has {len(rows)} rows, expected {size}")
    return RightAct(S, rows)


def make_left_act(S: FiniteSemigroup, size: int, action) -> LeftAct:
    rows = _as_table(action)
    if rows and len(rows[0]) != size:
        raise OutOfRange(f"action rows have {len(rows[0])} entries, expected {size}")
    return LeftAct(S, rows)


def make_biact(left_s: FiniteSemigroup, right_s: FiniteSemigroup, size: int,
               left_action, right_action) -> Biact:
    la = _as_table(left_action)
    ra = _as_table(right_action)
    if len(ra) != size:
        raise OutOfRange(f"right action table has {len(ra)} rows, expected {size}")
    return Biact(left_s, right_s, la, ra)


def regular_right_act(S: FiniteSemigroup) -> RightAct:
    """S acting on itself by right multiplication."""
    return RightAct(S, S.table)


def regular_left_act(S: FiniteSemigroup) -> LeftAct:
    """S acting on itself by left multiplication."""
    return LeftAct(S, S.table)


def regular_biact(S: FiniteSemigroup) -> Biact:
    return Biact(S, S, S.table, S.table)


def is_unitary(act) -> bool:
    """A·S = A (right), S·A = A (left), or both for a biact."""
    if isinstance(act, Biact):
        return is_unitary(act.left_view()) and is_unitary(act.right_view())
    m = act.carrier_size
    if isinstance(act, RightAct):
        image = {act.action[a][s] for a in range(m) for s in act.semigroup.elements}
    else:
        image = {act.action[s][a] for a in range(m) for s in act.semigroup.elements}
    return len(image) == m


@dataclass(frozen=True)
class ActMorphism:
    """An equivariant map between two acts over the same semigroup(s)."""

    source: RightAct | LeftAct | Biact
    target: RightAct | LeftAct | Biact
    mapping: tuple[int, ...]

    def __post_init__(self):
        src, dst = self.source, self.target
        if type(src) is not type(dst):
            raise SemigroupMismatch("source and target acts have different kinds")
        if len(self.mapping) != src.carrier_size:
            raise OutOfRange(
                f"map has {len(self.mapping)} entries, expected {src.carrier_size}")
        for v in self.mapping:
            if not isinstance(v, int) or not 0 <= v < dst.carrier_size:
                raise OutOfRange(f"map value {v!r} is outside the target carrier")
        f = self.mapping
        if isinstance(src, RightAct):
            if src.semigroup != dst.semigroup:
                raise SemigroupMismatch("acts are over different semigroups")
            for a in range(src.carrier_size):
                for s in src.semigroup.elements:
                    if f[src.action[a][s]] != dst.action[f[a]][s]:
                        raise EquivarianceViolation(a, s)
        elif isinstance(src, LeftAct):
            if src.semigroup != dst.semigroup:
                raise SemigroupMismatch("acts are over different semigroups")
            for a in range(src.carrier_size):
                for s in src.semigroup.elements:
                    if f[src.action[s][a]] != dst.action[s][f[a]]:
                        raise EquivarianceViolation(a, s)
        else:
            if (src.left_semigroup != dst.left_semigroup
                    or src.right_semigroup != dst.right_semigroup):
                raise SemigroupMismatch("biacts are over different semigroups")
            for a in range(src.carrier_size):
                for s in src.left_semigroup.elements:
                    if f[src.left_action[s][a]] != dst.left_action[s][f[a]]:
                        raise EquivarianceViolation(a, s)
                for t in src.right_semigroup.elements:
                    if f[src.right_action[a][t]] != dst.right_action[f[a]][t]:
                        raise EquivarianceViolation(a, t)

    def __call__(self, a: int) -> int:
        return self.mapping[a]


def check_morphism(mapping, source, target) -> ActMorphism:
    """Validate a candidate carrier map as an act morphism."""
    return ActMorphism(source, target, tuple(mapping))


def _candidate_guard(carrier: int, max_candidates: int | None) -> None:
    if max_candidates is None:
        max_candidates = int(os.environ.get(GUARD_ENV_VAR, DEFAULT_MAX_CANDIDATES))
    if carrier ** carrier > max_candidates:
        raise SearchSpaceTooLarge(
            f"{carrier}^{carrier} candidate maps exceed the guard of {max_candidates}")


def _is_equivariant(act, f: tuple[int, ...]) -> bool:
    if isinstance(act, RightAct):
        return all(f[act.action[a][s]] == act.action[f[a]][s]
                   for a in range(act.carrier_size) for s in act.semigroup.elements)
    if isinstance(act, LeftAct):
        return all(f[act.action[s][a]] == act.action[s][f[a]]
                   for a in range(act.carrier_size) for s in act.semigroup.elements)
    return (_is_equivariant(act.left_view(), f)
            and _is_equivariant(act.right_view(), f))


def enumerate_endomorphisms(act, max_candidates: int | None = None) -> tuple[ActMorphism, ...]:
    """All equivariant self-maps of the act, in ascending map order.

    Guarded by a candidate count limit (``SGX_MAX_CANDIDATES`` overrides the
    default of 10^6) since the search space is carrier^carrier.
    """
    m = act.carrier_size
    _candidate_guard(m, max_candidates)
    found = []
    for f in itertools.product(range(m), repeat=m):
        if _is_equivariant(act, f):
            found.append(ActMorphism(act, act, f))
    return tuple(found)
