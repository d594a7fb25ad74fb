"""Finite abelian groups, operation tables, and subset utilities.

Elements are indices 0..n-1 and the additive zero is pinned to index 0,
so subsets and witnesses are stable across tools and file round-trips.
Tables are row-major tuples of tuples; partial tables use SENTINEL (-1)
for undefined entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError, ValidationFailure, Violation

SENTINEL = -1

Table = tuple[tuple[int, ...], ...]
Subset = frozenset[int]


def freeze_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(x) for x in row) for row in rows)


def check_table_shape(rows: Sequence[Sequence[int]], *, allow_sentinel: bool = False) -> Table:
    """Shape/range discipline for an n-by-n table; raises InputError."""
    n = len(rows)
    if n == 0:
        raise InputError("non-square-table", "table has no rows")
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InputError("non-square-table", f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if x == SENTINEL and allow_sentinel:
                continue
            if not isinstance(x, int) or isinstance(x, bool) or not (0 <= x < n):
                raise InputError("table-entry-out-of-range", f"entry ({i},{j}) is {x!r}")
    return freeze_table(rows)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Additive group on indices 0..order-1 with zero at index 0."""

    order: int
    add: Table

    @property
    def zero(self) -> int:
        return 0

    def elements(self) -> range:
        return range(self.order)

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def neg(self, a: int) -> int:
        row = self.add[a]
        for b in range(self.order):
            if row[b] == 0:
                return b
        raise InputError("no-additive-inverse", f"element {a} has no inverse")

    def minus(self, a: int, b: int) -> int:
        return self.add[a][self.neg(b)]

    def sum(self, items: Iterable[int]) -> int:
        total = 0
        for x in items:
            total = self.add[total][x]
        return total


GROUP_CHECKS = (
    "zero-not-at-index-zero",
    "add-not-commutative",
    "add-not-associative",
    "missing-additive-inverse",
)


def group_violations(add: Sequence[Sequence[int]]) -> list[Violation]:
    """All failed abelian-group axioms, one violation per axiom.

    Each axiom scan stops at the first failing tuple in row-major order.
    """
    table = check_table_shape(add)
    n = len(table)
    out: list[Violation] = []

    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            out.append(
                Violation("zero-not-at-index-zero", (i,), f"index 0 does not act as zero on {i}")
            )
            break

    done = False
    for i in range(n):
        for j in range(n):
            if table[i][j] != table[j][i]:
                out.append(Violation("add-not-commutative", (i, j), "not commutative"))
                done = True
                break
        if done:
            break

    done = False
    for x in range(n):
        rx = table[x]
        for y in range(n):
            rxy = table[rx[y]]
            ry = table[y]
            for z in range(n):
                if rxy[z] != rx[ry[z]]:
                    out.append(Violation("add-not-associative", (x, y, z), "not associative"))
                    done = True
                    break
            if done:
                break
        if done:
            break

    for a in range(n):
        if 0 not in table[a]:
            out.append(Violation("missing-additive-inverse", (a,), f"{a} has no inverse"))
            break

    return out


def validate_group(add: Sequence[Sequence[int]]) -> FiniteAbelianGroup:
    violations = group_violations(add)
    if violations:
        raise ValidationFailure(violations)
    table = freeze_table(add)
    return FiniteAbelianGroup(order=len(table), add=table)


def subgroup_closure(group: FiniteAbelianGroup, seed: Iterable[int]) -> Subset:
    """Smallest subgroup containing the seed (idempotent, monotone)."""
    members = {0}
    frontier = [0]
    for s in seed:
        if not (0 <= s < group.order):
            raise InputError("subset-out-of-range", f"index {s} not in carrier")
        if s not in members:
            members.add(s)
            frontier.append(s)
    add = group.add
    while frontier:
        x = frontier.pop()
        neg_x = group.neg(x)
        if neg_x not in members:
            members.add(neg_x)
            frontier.append(neg_x)
        for y in list(members):
            z = add[x][y]
            if z not in members:
                members.add(z)
                frontier.append(z)
    return frozenset(members)


def subset_key(subset: Subset) -> tuple[int, tuple[int, ...]]:
    """Canonical ordering key: cardinality, then lexicographic membership."""
    return (len(subset), tuple(sorted(subset)))


def format_subset(subset: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(subset))


def parse_subset(text: str, order: int | None = None) -> Subset:
    try:
        items = frozenset(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise InputError("bad-subset", f"cannot parse subset {text!r}") from exc
    if order is not None:
        for i in items:
            if not (0 <= i < order):
                raise InputError("subset-out-of-range", f"index {i} not in 0..{order - 1}")
    return items


def enumerate_subgroups(group: FiniteAbelianGroup) -> list[Subset]:
    """All subgroups, each once, sorted by size then membership.

    Works by closing generator sets rather than scanning all 2^n subsets;
    the subset scan survives as the test oracle for small orders.
    """
    trivial = frozenset({0})
    seen = {trivial}
    frontier = [trivial]
    while frontier:
        base = frontier.pop()
        for x in range(group.order):
            if x in base:
                continue
            bigger = subgroup_closure(group, base | {x})
            if bigger not in seen:
                seen.add(bigger)
                frontier.append(bigger)
    return sorted(seen, key=subset_key)


def generating_sequence(group: FiniteAbelianGroup, carrier: Subset) -> list[int]:
    """Greedy generator list for a subgroup (used by census machinery)."""
    gens: list[int] = []
    closed = frozenset({0})
    for x in sorted(carrier):
        if x not in closed:
            gens.append(x)
            closed = subgroup_closure(group, closed | {x})
    if closed != frozenset(carrier):
        raise InputError("not-a-subgroup", f"{format_subset(carrier)} is not a subgroup")
    return gens


def element_orders(group: FiniteAbelianGroup) -> tuple[int, ...]:
    orders = []
    for x in group.elements():
        k, acc = 1, x
        while acc != 0:
            acc = group.add[acc][x]
            k += 1
        orders.append(k)
    return tuple(orders)


def direct_sum_group(orders: Sequence[int]) -> FiniteAbelianGroup:
    """Z_{n1} x ... x Z_{nk} with mixed-radix indexing, first factor fastest."""
    if not orders or any(n < 1 for n in orders):
        raise InputError("bad-group-spec", f"bad cyclic orders {orders!r}")
    total = 1
    for n in orders:
        total *= n

    def decode(x: int) -> tuple[int, ...]:
        parts = []
        for n in orders:
            x, r = divmod(x, n)
            parts.append(r)
        return tuple(parts)

    def encode(parts: Sequence[int]) -> int:
        x = 0
        for n, p in zip(reversed(orders), reversed(list(parts))):
            x = x * n + p
        return x

    add = [
        [
            encode([(a + b) % n for a, b, n in zip(decode(x), decode(y), orders)])
            for y in range(total)
        ]
        for x in range(total)
    ]
    return validate_group(add)


