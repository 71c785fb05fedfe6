"""Tensor products of finite acts as quotients by the balanced congruence.

The tensor product A⊗B of a right act A and a left act B over the same
semigroup S is the quotient of A×B by the least equivalence identifying
(a·s, b) with (a, s·b).  Classes are computed with a disjoint-set closure
over all |A|·|S|·|B| generating identifications and canonicalized so that
class ids follow the least member pair.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable

from .acts import Biact, LeftAct, RightAct, regular_left_act, regular_right_act
from .errors import NotBalanced, SemigroupMismatch, WellDefinednessViolation
from .semigroups import FiniteSemigroup


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x, p[x] = p[x], p[p[x]]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def _right_structure(act) -> RightAct:
    if isinstance(act, Biact):
        return act.right_view()
    if isinstance(act, RightAct):
        return act
    raise SemigroupMismatch("left tensor factor must be a right act or a biact")


def _left_structure(act) -> LeftAct:
    if isinstance(act, Biact):
        return act.left_view()
    if isinstance(act, LeftAct):
        return act
    raise SemigroupMismatch("right tensor factor must be a left act or a biact")


@dataclass(frozen=True)
class TensorProduct:
    """The quotient of A×B with class lookup and optional residual actions.

    ``classes[c]`` lists the member pairs (a, b) of class c, sorted; classes
    are ordered by their least member.  When a factor is a biact, the leftover
    action descends to classes and is stored in ``left_action`` (indexed
    [s][c]) or ``right_action`` (indexed [c][t]).
    """

    left_factor: RightAct | Biact
    right_factor: LeftAct | Biact
    over: FiniteSemigroup
    carrier_a: int
    carrier_b: int
    classes: tuple[tuple[tuple[int, int], ...], ...]
    index: tuple[int, ...]
    left_action: tuple[tuple[int, ...], ...] | None
    right_action: tuple[tuple[int, ...], ...] | None

    @property
    def size(self) -> int:
        return len(self.classes)

    def class_of(self, a: int, b: int) -> int:
        return self.index[a * self.carrier_b + b]

    def representative(self, c: int) -> tuple[int, int]:
        return self.classes[c][0]


def tensor_product(A, B) -> TensorProduct:
    """Quotient A×B by all identifications (a·s, b) ~ (a, s·b)."""
    ra = _right_structure(A)
    lb = _left_structure(B)
    if ra.semigroup != lb.semigroup:
        raise SemigroupMismatch("tensor factors act over different semigroups")
    S = ra.semigroup
    na, nb = ra.carrier_size, lb.carrier_size
    uf = _UnionFind(na * nb)
    for a in range(na):
        row = ra.action[a]
        for s in S.elements:
            a_s = row[s]
            s_row = lb.action[s]
            for b in range(nb):
                uf.union(a_s * nb + b, a * nb + s_row[b])
    buckets: dict[int, list[tuple[int, int]]] = {}
    for a in range(na):
        for b in range(nb):
            buckets.setdefault(uf.find(a * nb + b), []).append((a, b))
    classes = tuple(tuple(sorted(members)) for members in
                    sorted(buckets.values(), key=lambda ms: min(ms)))
    index = [0] * (na * nb)
    for cid, members in enumerate(classes):
        for a, b in members:
            index[a * nb + b] = cid
    left_action = None
    if isinstance(A, Biact):
        left_action = _residual_left(A, nb, classes, index)
    right_action = None
    if isinstance(B, Biact):
        right_action = _residual_right(B, nb, classes, index)
    return TensorProduct(A, B, S, na, nb, classes, tuple(index), left_action, right_action)


def _residual_left(A: Biact, nb: int, classes, index):
    """Descend s·(a⊗b) := (s·a)⊗b to classes, checking representative independence."""
    rows = []
    for s in A.left_semigroup.elements:
        row = []
        for members in classes:
            targets = {index[A.left_action[s][a] * nb + b] for a, b in members}
            if len(targets) != 1:
                raise WellDefinednessViolation(
                    f"residual left action is not constant on a class at s={s}")
            row.append(targets.pop())
        rows.append(tuple(row))
    return tuple(rows)


def _residual_right(B: Biact, nb: int, classes, index):
    cols = []
    for members in classes:
        row = []
        for t in B.right_semigroup.elements:
            targets = {index[a * nb + B.right_action[b][t]] for a, b in members}
            if len(targets) != 1:
                raise WellDefinednessViolation(
                    f"residual right action is not constant on a class at t={t}")
            row.append(targets.pop())
        cols.append(tuple(row))
    return tuple(cols)


def induced_map(t: TensorProduct, f: Callable[[int, int], int]) -> tuple[int, ...]:
    """Factor an S-balanced map f : A×B → X through the tensor classes.

    Balancedness f(a·s, b) = f(a, s·b) is verified exhaustively before the
    factorization is returned.
    """
    ra = _right_structure(t.left_factor)
    lb = _left_structure(t.right_factor)
    S = t.over
    for a in range(ra.carrier_size):
        for s in S.elements:
            for b in range(lb.carrier_size):
                if f(ra.action[a][s], b) != f(a, lb.action[s][b]):
                    raise NotBalanced(a, s, b)
    return tuple(f(*members[0]) for members in t.classes)


@dataclass(frozen=True)
class TossingStep:
    """One elementary identification, licensed by the triple (a, s, b).

    ``moved == "right"`` applies (a·s, b) → (a, s·b); ``moved == "left"``
    applies the reverse, (a, s·b) → (a·s, b).
    """

    moved: str
    a: int
    s: int
    b: int


@dataclass(frozen=True)
class TossingWitness:
    start: tuple[int, int]
    end: tuple[int, int]
    steps: tuple[TossingStep, ...]


def tossing_witness(t: TensorProduct, start: tuple[int, int],
                    end: tuple[int, int]) -> TossingWitness | None:
    """Shortest chain of elementary identifications from start to end, or None.

    Breadth-first search over the generating relation; neighbor expansion is
    in ascending element order, so witnesses are reproducible.
    """
    start = tuple(start)
    end = tuple(end)
    if t.class_of(*start) != t.class_of(*end):
        return None
    if start == end:
        return TossingWitness(start, end, ())
    ra = _right_structure(t.left_factor)
    lb = _left_structure(t.right_factor)
    S = t.over
    parents: dict[tuple[int, int], tuple[tuple[int, int], TossingStep]] = {start: None}
    queue = deque([start])
    while queue:
        x, y = queue.popleft()
        moves = []
        for a in range(ra.carrier_size):
            for s in S.elements:
                if ra.action[a][s] == x:
                    moves.append(((a, lb.action[s][y]), TossingStep("right", a, s, y)))
        for s in S.elements:
            for b in range(lb.carrier_size):
                if lb.action[s][b] == y:
                    moves.append(((ra.action[x][s], b), TossingStep("left", x, s, b)))
        for nxt, step in moves:
            if nxt in parents:
                continue
            parents[nxt] = ((x, y), step)
            if nxt == end:
                chain = []
                cur = nxt
                while parents[cur] is not None:
                    prev, st = parents[cur]
                    chain.append(st)
                    cur = prev
                return TossingWitness(start, end, tuple(reversed(chain)))
            queue.append(nxt)
    return None


def replay_tossing(t: TensorProduct, witness: TossingWitness) -> bool:
    """Re-run a witness against the action tables; True iff every step is licit."""
    ra = _right_structure(t.left_factor)
    lb = _left_structure(t.right_factor)
    current = witness.start
    for step in witness.steps:
        if step.moved == "right":
            expected = (ra.action[step.a][step.s], step.b)
            if current != expected:
                return False
            current = (step.a, lb.action[step.s][step.b])
        elif step.moved == "left":
            expected = (step.a, lb.action[step.s][step.b])
            if current != expected:
                return False
            current = (ra.action[step.a][step.s], step.b)
        else:
            return False
    return current == witness.end


def is_firm(S: FiniteSemigroup) -> bool:
    """True iff the multiplication map S⊗S → S, s⊗s' ↦ ss', is bijective."""
    t = tensor_product(regular_right_act(S), regular_left_act(S))
    mu = induced_map(t, S.mul)
    return len(mu) == S.order and len(set(mu)) == S.order
