"""Text formats for semigroups, acts, morphisms, pairings and Rees descriptors.

All formats are line oriented and strict: wrong counts or out-of-range
entries raise :class:`~sgx.errors.ParseError` naming the file and line.
"""

from __future__ import annotations

import os

from .acts import Biact, LeftAct, RightAct
from .errors import ParseError, SgxError
from .morita import Pairing
from .morphisms import SemigroupMorphism
from .semigroups import FiniteSemigroup, make_semigroup


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read().splitlines()
    except OSError as exc:
        raise ParseError(path, 0, f"cannot read file: {exc}") from exc


def _ints(path: str, lineno: int, line: str, count: int, bound: int) -> tuple[int, ...]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(path, lineno, f"expected {count} entries, found {len(parts)}")
    values = []
    for part in parts:
        try:
            value = int(part)
        except ValueError:
            raise ParseError(path, lineno, f"{part!r} is not an integer") from None
        if not 0 <= value < bound:
            raise ParseError(path, lineno, f"entry {value} is not in 0..{bound - 1}")
        values.append(value)
    return tuple(values)


def _header(path: str, lines: list[str], keyword: str) -> list[str]:
    if not lines:
        raise ParseError(path, 1, "empty file")
    parts = lines[0].split()
    if not parts or parts[0] != keyword:
        raise ParseError(path, 1, f"expected a {keyword!r} header")
    return parts


def _exact_length(path: str, lines: list[str], expected: int) -> None:
    if len(lines) != expected:
        raise ParseError(path, len(lines) if len(lines) > expected else expected,
                         f"expected {expected} lines, found {len(lines)}")


def parse_semigroup(path: str) -> FiniteSemigroup:
    """``semigroup <n>`` followed by n rows of n entries (row = left factor)."""
    lines = _read_lines(path)
    parts = _header(path, lines, "semigroup")
    if len(parts) != 2:
        raise ParseError(path, 1, "header must be 'semigroup <n>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(path, 1, f"{parts[1]!r} is not an integer") from None
    if n < 1:
        raise ParseError(path, 1, "order must be at least 1")
    _exact_length(path, lines, 1 + n)
    table = [_ints(path, i + 2, lines[i + 1], n, n) for i in range(n)]
    try:
        return make_semigroup(n, table)
    except SgxError as exc:
        raise ParseError(path, 1, str(exc)) from exc


def parse_act(path: str, semigroup: FiniteSemigroup | None = None,
              left_semigroup: FiniteSemigroup | None = None,
              right_semigroup: FiniteSemigroup | None = None):
    """``act <left|right|bi> <carrier_size>`` followed by the action table(s).

    Right acts list carrier_size rows of order entries, left acts order rows
    of carrier_size entries; biacts list the left table then the right table.
    """
    lines = _read_lines(path)
    parts = _header(path, lines, "act")
    if len(parts) != 3 or parts[1] not in ("left", "right", "bi"):
        raise ParseError(path, 1, "header must be 'act <left|right|bi> <carrier_size>'")
    kind = parts[1]
    try:
        size = int(parts[2])
    except ValueError:
        raise ParseError(path, 1, f"{parts[2]!r} is not an integer") from None
    if size < 1:
        raise ParseError(path, 1, "carrier size must be at least 1")
    try:
        if kind == "right":
            if semigroup is None:
                raise ParseError(path, 1, "a semigroup is required for a right act")
            n = semigroup.order
            _exact_length(path, lines, 1 + size)
            rows = [_ints(path, i + 2, lines[i + 1], n, size) for i in range(size)]
            return RightAct(semigroup, tuple(rows))
        if kind == "left":
            if semigroup is None:
                raise ParseError(path, 1, "a semigroup is required for a left act")
            n = semigroup.order
            _exact_length(path, lines, 1 + n)
            rows = [_ints(path, i + 2, lines[i + 1], size, size) for i in range(n)]
            return LeftAct(semigroup, tuple(rows))
        if left_semigroup is None or right_semigroup is None:
            raise ParseError(path, 1, "a biact needs both semigroups")
        nl, nr = left_semigroup.order, right_semigroup.order
        _exact_length(path, lines, 1 + nl + size)
        left_rows = [_ints(path, i + 2, lines[i + 1], size, size) for i in range(nl)]
        right_rows = [_ints(path, nl + i + 2, lines[nl + i + 1], nr, size)
                      for i in range(size)]
        return Biact(left_semigroup, right_semigroup, tuple(left_rows), tuple(right_rows))
    except ParseError:
        raise
    except SgxError as exc:
        raise ParseError(path, 1, str(exc)) from exc


def parse_morphism(path: str, source: FiniteSemigroup,
                   target: FiniteSemigroup) -> SemigroupMorphism:
    """``morphism <n>`` followed by n entries mapping source i to a target index."""
    lines = _read_lines(path)
    parts = _header(path, lines, "morphism")
    if len(parts) != 2:
        raise ParseError(path, 1, "header must be 'morphism <n>'")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(path, 1, f"{parts[1]!r} is not an integer") from None
    if n != source.order:
        raise ParseError(path, 1, f"morphism size {n} does not match the source order")
    entries: list[int] = []
    for i, line in enumerate(lines[1:], start=2):
        for part in line.split():
            try:
                value = int(part)
            except ValueError:
                raise ParseError(path, i, f"{part!r} is not an integer") from None
            entries.append(value)
    if len(entries) != n:
        raise ParseError(path, len(lines), f"expected {n} entries, found {len(entries)}")
    try:
        return SemigroupMorphism(source, target, tuple(entries))
    except SgxError as exc:
        raise ParseError(path, 1, str(exc)) from exc


def parse_pairing_table(path: str, p_size: int, q_size: int, order: int):
    """``pairing <|P|> <|Q|>`` followed by |P| rows of |Q| entries into S."""
    lines = _read_lines(path)
    parts = _header(path, lines, "pairing")
    if len(parts) != 3:
        raise ParseError(path, 1, "header must be 'pairing <|P|> <|Q|>'")
    try:
        rows, cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(path, 1, "pairing sizes must be integers") from None
    if rows != p_size or cols != q_size:
        raise ParseError(path, 1,
                         f"pairing is {rows}x{cols}, expected {p_size}x{q_size}")
    _exact_length(path, lines, 1 + rows)
    return tuple(_ints(path, i + 2, lines[i + 1], cols, order) for i in range(rows))


def parse_rees(path: str, order: int) -> tuple[int, int, tuple]:
    """``rees <|U|> <|V|>`` followed by |V| rows of |U| sandwich entries."""
    lines = _read_lines(path)
    parts = _header(path, lines, "rees")
    if len(parts) != 3:
        raise ParseError(path, 1, "header must be 'rees <|U|> <|V|>'")
    try:
        num_u, num_v = int(parts[1]), int(parts[2])
    except ValueError:
        raise ParseError(path, 1, "index set sizes must be integers") from None
    if num_u < 1 or num_v < 1:
        raise ParseError(path, 1, "index sets must be non-empty")
    _exact_length(path, lines, 1 + num_v)
    sandwich = tuple(_ints(path, i + 2, lines[i + 1], num_u, order)
                     for i in range(num_v))
    return num_u, num_v, sandwich


def parse_pair_descriptor(path: str) -> Pairing:
    """A pair descriptor referencing a semigroup file, two act files and an
    inline A×B pairing table; referenced paths are relative to the descriptor."""
    lines = _read_lines(path)
    _header(path, lines, "pair")
    refs: dict[str, str] = {}
    lineno = 1
    for lineno, line in enumerate(lines[1:4], start=2):
        parts = line.split(None, 1)
        if len(parts) != 2 or parts[0] not in ("semigroup", "left-act", "right-act"):
            raise ParseError(path, lineno,
                             "expected 'semigroup|left-act|right-act <path>'")
        refs[parts[0]] = parts[1]
    if set(refs) != {"semigroup", "left-act", "right-act"}:
        raise ParseError(path, lineno, "descriptor must reference all three files")
    if len(lines) <= 4 or lines[4] != "pairing":
        raise ParseError(path, 5, "expected a 'pairing' section")
    base = os.path.dirname(os.path.abspath(path))

    def resolve(ref: str) -> str:
        return ref if os.path.isabs(ref) else os.path.join(base, ref)

    S = parse_semigroup(resolve(refs["semigroup"]))
    left = parse_act(resolve(refs["left-act"]), semigroup=S)
    right = parse_act(resolve(refs["right-act"]), semigroup=S)
    if not isinstance(left, LeftAct):
        raise ParseError(path, 3, "left-act file does not contain a left act")
    if not isinstance(right, RightAct):
        raise ParseError(path, 4, "right-act file does not contain a right act")
    _exact_length(path, lines, 5 + left.carrier_size)
    table = tuple(_ints(path, i + 6, lines[i + 5], right.carrier_size, S.order)
                  for i in range(left.carrier_size))
    try:
        return Pairing(left, right, table)
    except SgxError as exc:
        raise ParseError(path, 6, str(exc)) from exc


def write_semigroup(path: str, S: FiniteSemigroup) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"semigroup {S.order}\n")
        for row in S.table:
            handle.write(" ".join(str(v) for v in row) + "\n")


def write_act(path: str, act) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        if isinstance(act, RightAct):
            handle.write(f"act right {act.carrier_size}\n")
            tables = (act.action,)
        elif isinstance(act, LeftAct):
            handle.write(f"act left {act.carrier_size}\n")
            tables = (act.action,)
        else:
            handle.write(f"act bi {act.carrier_size}\n")
            tables = (act.left_action, act.right_action)
        for table in tables:
            for row in table:
                handle.write(" ".join(str(v) for v in row) + "\n")


def write_morphism(path: str, f: SemigroupMorphism) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"morphism {f.source.order}\n")
        handle.write(" ".join(str(v) for v in f.mapping) + "\n")


def write_pairing(path: str, table) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"pairing {len(table)} {len(table[0])}\n")
        for row in table:
            handle.write(" ".join(str(v) for v in row) + "\n")


def write_rees(path: str, num_u: int, num_v: int, sandwich) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(f"rees {num_u} {num_v}\n")
        for row in sandwich:
            handle.write(" ".join(str(v) for v in row) + "\n")
