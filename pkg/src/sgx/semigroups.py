"""Finite semigroups given by Cayley tables, and the unit/firmness class predicates.

Elements are dense 0-based indices; ``table[x][y]`` is the product xy
(row = left factor).  Every structure is validated exhaustively at
construction and immutable afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AssociativityViolation, EmptyGenerators, OutOfRange

Table = tuple[tuple[int, ...], ...]


def _as_table(rows) -> Table:
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup on {0, ..., n-1} with an associative Cayley table."""

    table: Table

    def __post_init__(self):
        n = len(self.table)
        if n == 0:
            raise OutOfRange("a semigroup must have at least one element")
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise OutOfRange(f"row {i} has {len(row)} entries, expected {n}")
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise OutOfRange(f"entry {v!r} in row {i} is not in 0..{n - 1}")
        for x in range(n):
            row_x = self.table[x]
            for y in range(n):
                xy = row_x[y]
                row_y = self.table[y]
                for z in range(n):
                    if self.table[xy][z] != row_x[row_y[z]]:
                        raise AssociativityViolation(x, y, z)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def __repr__(self) -> str:
        rows = ",".join("".join(str(v) for v in row) for row in self.table)
        return f"FiniteSemigroup({rows})"


def make_semigroup(order: int, table) -> FiniteSemigroup:
    """Validate and build a semigroup of the given order from a Cayley table."""
    rows = _as_table(table)
    if len(rows) != order:
        raise OutOfRange(f"table has {len(rows)} rows, expected {order}")
    return FiniteSemigroup(rows)


# Small named semigroups used throughout tests and examples.

def trivial() -> FiniteSemigroup:
    return FiniteSemigroup(((0,),))


def left_zero(n: int) -> FiniteSemigroup:
    """xy = x on n elements."""
    return FiniteSemigroup(tuple(tuple(x for _ in range(n)) for x in range(n)))


def right_zero(n: int) -> FiniteSemigroup:
    """xy = y on n elements."""
    return FiniteSemigroup(tuple(tuple(range(n)) for _ in range(n)))


def null_semigroup(n: int) -> FiniteSemigroup:
    """xy = 0 on n elements."""
    return FiniteSemigroup(tuple(tuple(0 for _ in range(n)) for _ in range(n)))


def cyclic_group(n: int) -> FiniteSemigroup:
    """Addition modulo n."""
    return FiniteSemigroup(tuple(tuple((x + y) % n for y in range(n)) for x in range(n)))


def idempotents(S: FiniteSemigroup) -> frozenset[int]:
    """The set {e | ee = e}."""
    return frozenset(e for e in S.elements if S.mul(e, e) == e)


def has_local_units(S: FiniteSemigroup) -> bool:
    """Every s admits idempotents f, e with fs = s = se."""
    E = idempotents(S)
    for s in S.elements:
        if not any(S.mul(f, s) == s for f in E):
            return False
        if not any(S.mul(s, e) == s for e in E):
            return False
    return True


def has_weak_local_units(S: FiniteSemigroup) -> bool:
    """Every s admits u, v with us = s = sv."""
    for s in S.elements:
        if not any(S.mul(u, s) == s for u in S.elements):
            return False
        if not any(S.mul(s, v) == s for v in S.elements):
            return False
    return True


def has_common_weak_local_units(S: FiniteSemigroup) -> bool:
    """Every pair s, s' admits a shared left unit and a shared right unit."""
    for s in S.elements:
        for s2 in S.elements:
            if not any(S.mul(u, s) == s and S.mul(u, s2) == s2 for u in S.elements):
                return False
            if not any(S.mul(s, v) == s and S.mul(s2, v) == s2 for v in S.elements):
                return False
    return True


def is_factorizable(S: FiniteSemigroup) -> bool:
    """SS = S: every element is a product of two elements."""
    products = {S.mul(x, y) for x in S.elements for y in S.elements}
    return len(products) == S.order


@dataclass(frozen=True)
class ClassReport:
    """Membership in the unit/firmness class hierarchy."""

    local_units: bool
    weak_local_units: bool
    common_weak_local_units: bool
    firm: bool
    factorizable: bool


def classify(S: FiniteSemigroup) -> ClassReport:
    """Evaluate all five class predicates (firmness via the tensor quotient)."""
    from .tensor import is_firm  # deferred: tensor builds on acts on semigroups

    return ClassReport(
        local_units=has_local_units(S),
        weak_local_units=has_weak_local_units(S),
        common_weak_local_units=has_common_weak_local_units(S),
        firm=is_firm(S),
        factorizable=is_factorizable(S),
    )


def subsemigroup_closure(S: FiniteSemigroup, generators) -> frozenset[int]:
    """Least subset of S closed under the product and containing the generators."""
    gens = set(generators)
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    for g in gens:
        if not 0 <= g < S.order:
            raise OutOfRange(f"generator {g} is not an element of S")
    closed = set(gens)
    frontier = list(gens)
    while frontier:
        x = frontier.pop()
        for y in tuple(closed):
            for p in (S.mul(x, y), S.mul(y, x)):
                if p not in closed:
                    closed.add(p)
                    frontier.append(p)
    return frozenset(closed)
