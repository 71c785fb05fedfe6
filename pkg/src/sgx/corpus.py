"""Enumeration of all small semigroups, canonical forms, counterexample search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import OrderTooLarge
from .semigroups import ClassReport, FiniteSemigroup, Table, classify

HARD_ORDER_CAP = 4
# 4^16 candidate tables make naive order-4 enumeration hopeless; the pruned
# generator handles it but stays behind an explicit opt-in.
UNGATED_ORDER = 3


def _relabel(table: Table, perm: tuple[int, ...]) -> Table:
    n = len(table)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[perm[i]][perm[j]] = perm[table[i][j]]
    return tuple(tuple(row) for row in out)


def canonical_form(table: Table) -> Table:
    """Lexicographically least Cayley table over all element relabelings."""
    return min(_relabel(table, perm)
               for perm in itertools.permutations(range(len(table))))


def are_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup) -> bool:
    return S.order == T.order and canonical_form(S.table) == canonical_form(T.table)


def _associative_tables(n: int):
    """Yield every associative n×n table in lexicographic order.

    Cells are filled row-major; after each assignment only the triples whose
    evaluation the new cell could complete are re-checked, which prunes the
    search enough to handle n = 4.
    """
    table = [[-1] * n for _ in range(n)]
    rng = range(n)

    def consistent(i: int, j: int) -> bool:
        v = table[i][j]
        for z in rng:  # triple (i, j, z)
            jz = table[j][z]
            lhs = table[v][z]
            if jz >= 0 and lhs >= 0:
                rhs = table[i][jz]
                if rhs >= 0 and lhs != rhs:
                    return False
        for x in rng:  # triple (x, i, j)
            xi = table[x][i]
            if xi >= 0:
                lhs = table[xi][j]
                rhs = table[x][v]
                if lhs >= 0 and rhs >= 0 and lhs != rhs:
                    return False
        for x in rng:  # triples with table[x][y] == i, z == j
            row = table[x]
            for y in rng:
                if row[y] == i:
                    yj = table[y][j]
                    if yj >= 0:
                        rhs = row[yj]
                        if rhs >= 0 and rhs != v:
                            return False
        for y in rng:  # triples with x == i, table[y][z] == j
            row = table[y]
            for z in rng:
                if row[z] == j:
                    iy = table[i][y]
                    if iy >= 0:
                        lhs = table[iy][z]
                        if lhs >= 0 and lhs != v:
                            return False
        return True

    cells = [(i, j) for i in rng for j in rng]

    def fill(k: int):
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[k]
        for v in rng:
            table[i][j] = v
            if consistent(i, j):
                yield from fill(k + 1)
        table[i][j] = -1

    yield from fill(0)


def count_semigroups_naive(n: int) -> int:
    """Independent recount: sweep all n^(n²) tables with a direct triple check."""
    if n > UNGATED_ORDER:
        raise OrderTooLarge(f"naive recount is limited to order {UNGATED_ORDER}")
    rng = range(n)
    count = 0
    for flat in itertools.product(rng, repeat=n * n):
        rows = [flat[i * n:(i + 1) * n] for i in rng]
        if all(rows[rows[x][y]][z] == rows[x][rows[y][z]]
               for x in rng for y in rng for z in rng):
            count += 1
    return count


@dataclass(frozen=True)
class Corpus:
    order: int
    dedup: str  # "labeled" | "canonical"
    members: tuple[FiniteSemigroup, ...]


def enumerate_semigroups(n: int, dedup: str = "labeled",
                         allow_slow: bool = False) -> Corpus:
    """All semigroups of order n, labeled or up to isomorphism.

    Order 4 is accepted only with allow_slow=True; orders above the hard cap
    are rejected.
    """
    if n < 1 or n > HARD_ORDER_CAP:
        raise OrderTooLarge(f"order must be between 1 and {HARD_ORDER_CAP}")
    if n > UNGATED_ORDER and not allow_slow:
        raise OrderTooLarge(
            f"order {n} enumeration needs the explicit slow opt-in")
    if dedup not in ("labeled", "canonical"):
        raise ValueError(f"unknown dedup mode {dedup!r}")
    tables = list(_associative_tables(n))
    if dedup == "canonical":
        tables = sorted({canonical_form(t) for t in tables})
    return Corpus(n, dedup, tuple(FiniteSemigroup(t) for t in tables))


def corpus_up_to(n: int, dedup: str = "labeled",
                 allow_slow: bool = False) -> tuple[FiniteSemigroup, ...]:
    members: list[FiniteSemigroup] = []
    for order in range(1, n + 1):
        members.extend(enumerate_semigroups(order, dedup, allow_slow).members)
    return tuple(members)


COUNTEREXAMPLE_PREDICATES = {
    "factorizable-not-firm": lambda r: r.factorizable and not r.firm,
    "wlu-not-lu": lambda r: r.weak_local_units and not r.local_units,
    "lu-not-cwlu": lambda r: r.local_units and not r.common_weak_local_units,
    "firm-not-wlu": lambda r: r.firm and not r.weak_local_units,
    "firm-not-factorizable": lambda r: r.firm and not r.factorizable,
    "cwlu-not-lu": lambda r: r.common_weak_local_units and not r.local_units,
    "factorizable-not-wlu": lambda r: r.factorizable and not r.weak_local_units,
}


def find_counterexample(predicate: str, max_order: int,
                        allow_slow: bool = False) -> FiniteSemigroup | None:
    """Least semigroup (orders ascending, canonical representatives in
    lexicographic order) whose class report satisfies the named predicate."""
    try:
        test = COUNTEREXAMPLE_PREDICATES[predicate]
    except KeyError:
        raise ValueError(
            f"unknown predicate {predicate!r}; choose from "
            + ", ".join(sorted(COUNTEREXAMPLE_PREDICATES))) from None
    for n in range(1, max_order + 1):
        for S in enumerate_semigroups(n, "canonical", allow_slow).members:
            if test(classify(S)):
                return S
    return None
