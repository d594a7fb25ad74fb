"""Builders and searches that populate the catalog of concrete structures.

The canonical example family is the null left action A ⋉ B: carrier A ⊕ B
with (a,b)·(a',b') = (a·a', φ(a)#b') for commutative unital rings A, B (B
nonzero) and a unital hom φ: A → B.  The census enumerates all structures
on a given abelian group by enumerating decompositions, component ring
structures, and homs — the parametrization the axioms force — and
re-validates every result exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import InputError, TheoremAlarm, ValidationFailure, Violation
from .kernel import (
    SENTINEL,
    FiniteAbelianGroup,
    Subset,
    Table,
    check_table_shape,
    element_orders,
    enumerate_subgroups,
    generating_sequence,
    group_violations,
)
from .lcrng import (
    LcRng,
    Metadata,
    RawLcRng,
    lcrng_violations,
    left_identities,
    validate_lcrng,
)


@dataclass(frozen=True)
class FiniteCommRing:
    group: FiniteAbelianGroup
    mul: Table
    one: int
    name: str = ""
    metadata: Metadata = ()

    @property
    def order(self) -> int:
        return self.group.order

    def plus(self, a: int, b: int) -> int:
        return self.group.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]


@dataclass(frozen=True)
class RingHom:
    """Unital ring homomorphism as an index map, validated at construction."""

    source: FiniteCommRing
    target: FiniteCommRing
    mapping: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.mapping[a]


RING_CHECKS = (
    "ring-left-distributive",
    "ring-right-distributive",
    "ring-not-associative",
    "ring-not-commutative",
    "ring-identity-fails",
)


def comm_ring_violations(ring: FiniteCommRing) -> list[Violation]:
    n = ring.group.order
    add = check_table_shape(ring.group.add)
    mul = check_table_shape(ring.mul)
    if len(mul) != n:
        raise InputError("table-shape-mismatch", "mul table does not match group order")
    if not (0 <= ring.one < n):
        raise InputError("identity-out-of-range", f"identity index {ring.one}")
    out = group_violations(add)
    if out:
        return out
    rng = range(n)

    def scan3(code: str, message: str, law) -> None:
        for x in rng:
            for y in rng:
                for z in rng:
                    if not law(x, y, z):
                        out.append(Violation(code, (x, y, z), message))
                        return

    scan3(
        "ring-left-distributive",
        "x(y+z) != xy+xz",
        lambda x, y, z: mul[x][add[y][z]] == add[mul[x][y]][mul[x][z]],
    )
    scan3(
        "ring-right-distributive",
        "(x+y)z != xz+yz",
        lambda x, y, z: mul[add[x][y]][z] == add[mul[x][z]][mul[y][z]],
    )
    scan3(
        "ring-not-associative",
        "(xy)z != x(yz)",
        lambda x, y, z: mul[mul[x][y]][z] == mul[x][mul[y][z]],
    )
    for x in rng:
        for y in rng:
            if mul[x][y] != mul[y][x]:
                out.append(Violation("ring-not-commutative", (x, y), "xy != yx"))
                break
        else:
            continue
        break
    for x in rng:
        if mul[ring.one][x] != x:
            out.append(Violation("ring-identity-fails", (x,), "designated identity fails"))
            break
    return out


def validate_comm_ring(ring: FiniteCommRing) -> FiniteCommRing:
    violations = comm_ring_violations(ring)
    if violations:
        raise ValidationFailure(violations)
    return ring


def zmod(n: int) -> FiniteCommRing:
    """Integers mod n with canonical indexing; zmod(1) is the zero ring."""
    if n < 1:
        raise InputError("bad-order", f"zmod needs n >= 1, got {n}")
    add = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    mul = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return FiniteCommRing(
        group=FiniteAbelianGroup(order=n, add=add), mul=mul, one=1 % n, name=f"Z{n}"
    )


def ring_product(a: FiniteCommRing, b: FiniteCommRing) -> FiniteCommRing:
    """Componentwise product ring; index (x, y) -> x + |A|·y."""
    na, nb = a.order, b.order
    n = na * nb

    def enc(x: int, y: int) -> int:
        return x + na * y

    def dec(v: int) -> tuple[int, int]:
        return v % na, v // na

    add = tuple(
        tuple(
            enc(a.plus(dec(u)[0], dec(v)[0]), b.plus(dec(u)[1], dec(v)[1])) for v in range(n)
        )
        for u in range(n)
    )
    mul = tuple(
        tuple(
            enc(a.times(dec(u)[0], dec(v)[0]), b.times(dec(u)[1], dec(v)[1]))
            for v in range(n)
        )
        for u in range(n)
    )
    return FiniteCommRing(
        group=FiniteAbelianGroup(order=n, add=add),
        mul=mul,
        one=enc(a.one, b.one),
        name=f"{a.name}x{b.name}" if a.name and b.name else "",
    )


def ring_hom(source: FiniteCommRing, target: FiniteCommRing, mapping) -> RingHom:
    m = tuple(int(x) for x in mapping)
    if len(m) != source.order:
        raise InputError("hom-shape-mismatch", "mapping length differs from source order")
    for v in m:
        if not (0 <= v < target.order):
            raise InputError("hom-value-out-of-range", f"image {v} outside target")
    if m[source.one] != target.one:
        raise InputError("non-unital-hom", "hom does not send identity to identity")
    for x in range(source.order):
        for y in range(source.order):
            if m[source.plus(x, y)] != target.plus(m[x], m[y]):
                raise InputError("hom-not-additive", f"fails at ({x},{y})")
            if m[source.times(x, y)] != target.times(m[x], m[y]):
                raise InputError("hom-not-multiplicative", f"fails at ({x},{y})")
    return RingHom(source=source, target=target, mapping=m)


def identity_hom(ring: FiniteCommRing) -> RingHom:
    return ring_hom(ring, ring, tuple(range(ring.order)))


def reduction_hom(source: FiniteCommRing, target: FiniteCommRing) -> RingHom:
    """x -> x mod |target| between canonical zmod rings (needs |target| | |source|)."""
    if source.order % target.order != 0:
        raise InputError(
            "no-canonical-hom", f"{target.order} does not divide {source.order}"
        )
    return ring_hom(source, target, tuple(x % target.order for x in range(source.order)))


def projection_hom(
    product: FiniteCommRing, first: FiniteCommRing, second: FiniteCommRing, which: int
) -> RingHom:
    """Projection of a ring_product(first, second) onto one factor."""
    na = first.order
    if product.order != na * second.order:
        raise InputError("hom-shape-mismatch", "product ring order does not match factors")
    if which == 0:
        mapping = tuple(v % na for v in range(product.order))
        return ring_hom(product, first, mapping)
    if which == 1:
        mapping = tuple(v // na for v in range(product.order))
        return ring_hom(product, second, mapping)
    raise InputError("bad-factor", "which must be 0 or 1")


def semidirect_null(
    a: FiniteCommRing, b: FiniteCommRing, phi: RingHom, name: str = ""
) -> RawLcRng:
    """The null left action structure on A ⊕ B; re-verified on every build."""
    if b.order == 1:
        raise InputError("zero-b", "component B must be a nonzero ring")
    if phi.source != a or phi.target != b:
        raise InputError("hom-mismatch", "phi must map A to B")
    if phi.mapping[a.one] != b.one:
        raise InputError("non-unital-hom", "phi does not send identity to identity")
    na, nb = a.order, b.order
    n = na * nb

    def enc(x: int, y: int) -> int:
        return x + na * y

    add = tuple(
        tuple(
            enc(a.plus(u % na, v % na), b.plus(u // na, v // na)) for v in range(n)
        )
        for u in range(n)
    )
    mul = tuple(
        tuple(
            enc(a.times(u % na, v % na), b.times(phi(u % na), v // na)) for v in range(n)
        )
        for u in range(n)
    )
    loc = tuple(
        tuple(
            enc(0, b.times(u // na, v // na))
            if u % na == 0 and v % na == 0
            else SENTINEL
            for v in range(n)
        )
        for u in range(n)
    )
    raw = RawLcRng(
        group=FiniteAbelianGroup(order=n, add=add),
        mul=mul,
        left_identity=enc(a.one, 0),
        local_mul=loc,
        name=name or (f"null({a.name},{b.name})" if a.name and b.name else ""),
    )
    violations = lcrng_violations(raw)
    if violations:
        raise TheoremAlarm(
            "construction-invalid",
            "null construction failed validation",
            dump="\n".join(str(v) for v in violations),
        )
    return raw


def _expressions(group: FiniteAbelianGroup, gens: list[int]) -> dict[int, list[int]]:
    """Each reachable element as a multiset of generator indices summing to it."""
    expr: dict[int, list[int]] = {0: []}
    frontier = [0]
    while frontier:
        x = frontier.pop(0)
        for gi, g in enumerate(gens):
            y = group.add[x][g]
            if y not in expr:
                expr[y] = expr[x] + [gi]
                frontier.append(y)
    return expr


def _ring_structures(
    group: FiniteAbelianGroup, carrier: Subset
) -> Iterator[tuple[dict[tuple[int, int], int], int]]:
    """All commutative unital ring structures on a subgroup, as (table, one).

    Products are additive in each argument, so they are determined by the
    generator-pair values; every candidate is then checked for bilinearity,
    associativity, and an identity.
    """
    members = sorted(carrier)
    gens = generating_sequence(group, carrier)
    expr = _expressions(group, gens)
    add = group.add
    k = len(gens)
    pair_index = [(i, j) for i in range(k) for j in range(i, k)]

    for values in itertools.product(members, repeat=len(pair_index)):
        gen_prod = {}
        for (i, j), v in zip(pair_index, values):
            gen_prod[(i, j)] = v
            gen_prod[(j, i)] = v
        table: dict[tuple[int, int], int] = {}
        for x in members:
            px = expr[x]
            for y in members:
                acc = 0
                for gi in px:
                    for gj in expr[y]:
                        acc = add[acc][gen_prod[(gi, gj)]]
                table[(x, y)] = acc
        ok = all(table[(x, y)] in carrier for x in members for y in members)
        if not ok:
            continue
        ok = all(
            table[(add[x][y], z)] == add[table[(x, z)]][table[(y, z)]]
            and table[(x, add[y][z])] == add[table[(x, y)]][table[(x, z)]]
            for x in members
            for y in members
            for z in members
        )
        if not ok:
            continue
        ok = all(
            table[(table[(x, y)], z)] == table[(x, table[(y, z)])]
            for x in members
            for y in members
            for z in members
        )
        if not ok:
            continue
        one = next((e for e in members if all(table[(e, x)] == x for x in members)), None)
        if one is None:
            continue
        yield table, one


def _hom_maps(
    group: FiniteAbelianGroup,
    a_table: dict[tuple[int, int], int],
    a_one: int,
    a_carrier: Subset,
    b_table: dict[tuple[int, int], int],
    b_one: int,
    b_carrier: Subset,
) -> Iterator[dict[int, int]]:
    """All unital ring homs between subgroup rings living inside one group."""
    members_a = sorted(a_carrier)
    gens = generating_sequence(group, a_carrier)
    expr = _expressions(group, gens)
    add = group.add
    for images in itertools.product(sorted(b_carrier), repeat=len(gens)):
        phi = {}
        for x in members_a:
            acc = 0
            for gi in expr[x]:
                acc = add[acc][images[gi]]
            phi[x] = acc
        if phi[a_one] != b_one:
            continue
        if any(
            phi.get(add[x][y]) != add[phi[x]][phi[y]]
            or phi.get(a_table[(x, y)]) != b_table[(phi[x], phi[y])]
            for x in members_a
            for y in members_a
        ):
            continue
        yield phi


def enumerate_lcrngs(
    group: FiniteAbelianGroup,
    max_candidates: int | None = None,
    dedup: bool = True,
) -> list[LcRng]:
    """Census of all structures on a group (order <= 16), optionally up to
    isomorphism by permutations fixing 0 and respecting left identities."""
    n = group.order
    if n > 16:
        raise InputError("order-too-large", f"census is capped at order 16, got {n}")
    if max_candidates is not None and max_candidates <= 0:
        return []

    subgroups = enumerate_subgroups(group)
    found: list[LcRng] = []
    for a_carrier in subgroups:
        for b_carrier in subgroups:
            if len(b_carrier) < 2:
                continue
            if a_carrier & b_carrier != {0}:
                continue
            if len(a_carrier) * len(b_carrier) != n:
                continue
            for a_table, a_one in _ring_structures(group, a_carrier):
                for b_table, b_one in _ring_structures(group, b_carrier):
                    for phi in _hom_maps(
                        group, a_table, a_one, a_carrier, b_table, b_one, b_carrier
                    ):
                        raw = _assemble(
                            group, a_carrier, a_table, a_one, b_carrier, b_table, phi
                        )
                        structure = validate_lcrng(raw)
                        found.append(structure)
                        if max_candidates is not None and len(found) >= max_candidates:
                            return _dedup(found) if dedup else found
    return _dedup(found) if dedup else found


def _assemble(
    group: FiniteAbelianGroup,
    a_carrier: Subset,
    a_table: dict[tuple[int, int], int],
    a_one: int,
    b_carrier: Subset,
    b_table: dict[tuple[int, int], int],
    phi: dict[int, int],
) -> RawLcRng:
    n = group.order
    add = group.add
    split: dict[int, tuple[int, int]] = {}
    for a in a_carrier:
        for b in b_carrier:
            split[add[a][b]] = (a, b)
    mul_rows = []
    for x in range(n):
        ax, _ = split[x]
        row = []
        for y in range(n):
            ay, by = split[y]
            row.append(add[a_table[(ax, ay)]][b_table[(phi[ax], by)]])
        mul_rows.append(tuple(row))
    loc_rows = []
    for x in range(n):
        row = []
        for y in range(n):
            if x in b_carrier and y in b_carrier:
                row.append(b_table[(x, y)])
            else:
                row.append(SENTINEL)
        loc_rows.append(tuple(row))
    return RawLcRng(
        group=group,
        mul=tuple(mul_rows),
        left_identity=a_one,
        local_mul=tuple(loc_rows),
    )


def _dedup(structures: list[LcRng]) -> list[LcRng]:
    kept: list[LcRng] = []
    for s in structures:
        if not any(lcrng_isomorphic(s, t) for t in kept):
            kept.append(s)
    return kept


def lcrng_isomorphic(r1: LcRng, r2: LcRng) -> bool:
    """Brute-force isomorphism search over additive bijections fixing 0 that
    carry ·, #, and the designated left identity to a left identity."""
    if r1.order != r2.order:
        return False
    n = r1.order
    g1, g2 = r1.group, r2.group
    orders1 = element_orders(g1)
    orders2 = element_orders(g2)
    if sorted(orders1) != sorted(orders2):
        return False
    gens = generating_sequence(g1, frozenset(range(n)))
    expr = _expressions(g1, gens)
    lids2 = left_identities(r2)
    halo1 = sorted(r1.halo)
    candidates = [
        [y for y in range(n) if orders2[y] == orders1[g]] for g in gens
    ]
    for images in itertools.product(*candidates):
        sigma = [0] * n
        ok = True
        for x in range(n):
            acc = 0
            for gi in expr[x]:
                acc = g2.add[acc][images[gi]]
            sigma[x] = acc
        if len(set(sigma)) != n:
            continue
        for x in range(n):
            for y in range(n):
                if sigma[g1.add[x][y]] != g2.add[sigma[x]][sigma[y]]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        if sigma[r1.left_identity] not in lids2:
            continue
        if frozenset(sigma[x] for x in r1.halo) != r2.halo:
            continue
        for x in range(n):
            for y in range(n):
                if sigma[r1.mul[x][y]] != r2.mul[sigma[x]][sigma[y]]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        for a in halo1:
            for b in halo1:
                if sigma[r1.local_mul[a][b]] != r2.local_mul[sigma[a]][sigma[b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def catalog() -> dict[str, LcRng]:
    """The concrete structures used throughout the tests and demos."""
    z2, z4, z6, z3 = zmod(2), zmod(4), zmod(6), zmod(3)
    z2xz2 = ring_product(z2, z2)
    return {
        "r4": validate_lcrng(semidirect_null(z2, z2, identity_hom(z2), name="r4")),
        "r8": validate_lcrng(semidirect_null(z4, z2, reduction_hom(z4, z2), name="r8")),
        "u8": validate_lcrng(
            semidirect_null(z2xz2, z2, projection_hom(z2xz2, z2, z2, 0), name="u8")
        ),
        "r18": validate_lcrng(semidirect_null(z6, z3, reduction_hom(z6, z3), name="r18")),
    }


def catalog_pairs() -> list[tuple[str, LcRng, Subset]]:
    """Strict subrng pairs used by the integrality and lying-over suites:
    the identity pair of each catalog structure plus the diagonal pair."""
    structures = catalog()
    pairs = [
        (f"{name}-identity", s, frozenset(range(s.order))) for name, s in structures.items()
    ]
    pairs.append(("u8-diagonal", structures["u8"], frozenset({0, 3, 4, 7})))
    return pairs
