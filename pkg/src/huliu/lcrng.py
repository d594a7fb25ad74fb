"""Left commutative rngs: validation, grading, and the induced product.

A structure is a finite rng (R, +, ·) whose associative product satisfies
x·y·z = y·x·z, together with a designated left identity e (e·x = x), and a
second product # making the additive halo {x : x·e = 0} a commutative ring
with local identity, linked to · by (x·a)#b = x·(a#b).  Validation checks
every axiom exhaustively over the tables and reports each failed axiom with
its first failing tuple in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, TheoremAlarm, ValidationFailure, Violation
from .kernel import (
    SENTINEL,
    FiniteAbelianGroup,
    Subset,
    Table,
    check_table_shape,
    group_violations,
)

Metadata = tuple[tuple[str, object], ...]


@dataclass(frozen=True)
class RawLcRng:
    """Unvalidated tables: addition (via group), ·, designated e, and #.

    local_mul is a full n-by-n table with SENTINEL outside halo-by-halo.
    """

    group: FiniteAbelianGroup
    mul: Table
    left_identity: int
    local_mul: Table
    name: str = ""
    metadata: Metadata = ()


@dataclass(frozen=True)
class LcRng:
    """A validated left commutative rng with its computed grading data."""

    group: FiniteAbelianGroup
    mul: Table
    left_identity: int
    local_mul: Table
    halo: Subset
    local_identity: int
    r0: Subset
    r1: Subset
    name: str = ""
    metadata: Metadata = ()

    @property
    def order(self) -> int:
        return self.group.order

    def elements(self) -> range:
        return range(self.group.order)

    def plus(self, a: int, b: int) -> int:
        return self.group.add[a][b]

    def neg(self, a: int) -> int:
        return self.group.neg(a)

    def minus(self, a: int, b: int) -> int:
        return self.group.minus(a, b)

    def times(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def local(self, a: int, b: int) -> int:
        v = self.local_mul[a][b]
        if v == SENTINEL:
            raise InputError("local-product-undefined", f"# undefined at ({a},{b})")
        return v

    def comp0(self, a: int) -> int:
        return self.mul[a][self.left_identity]

    def comp1(self, a: int) -> int:
        return self.minus(a, self.comp0(a))

    def raw(self) -> RawLcRng:
        return RawLcRng(
            group=self.group,
            mul=self.mul,
            left_identity=self.left_identity,
            local_mul=self.local_mul,
            name=self.name,
            metadata=self.metadata,
        )


@dataclass(frozen=True)
class Decomposition:
    """The grading R = R0 + R1 with per-element components a0 = a·e, a1 = a - a·e."""

    r0: Subset
    r1: Subset
    comp0: tuple[int, ...]
    comp1: tuple[int, ...]


LCRNG_CHECKS = (
    "mul-left-distributive",
    "mul-right-distributive",
    "mul-not-associative",
    "not-left-commutative",
    "left-identity-fails",
    "two-sided-identity",
    "empty-halo",
    "halo-not-subgroup",
    "local-mul-outside-halo",
    "local-mul-missing",
    "local-mul-not-closed",
    "local-mul-not-commutative",
    "local-mul-not-associative",
    "local-mul-not-distributive",
    "no-local-identity",
    "local-triassociativity",
    "grading-not-direct",
)


def compute_halo(raw: RawLcRng) -> Subset:
    e = raw.left_identity
    return frozenset(x for x in range(raw.group.order) if raw.mul[x][e] == 0)


def lcrng_violations(raw: RawLcRng) -> list[Violation]:
    """Every failed axiom (one violation per axiom, first witness each).

    Group axiom failures short-circuit the rest: sums and negations are
    meaningless over a broken addition table.
    """
    n = raw.group.order
    add = check_table_shape(raw.group.add)
    mul = check_table_shape(raw.mul)
    if len(mul) != n:
        raise InputError("table-shape-mismatch", "mul table does not match group order")
    loc = check_table_shape(raw.local_mul, allow_sentinel=True)
    if len(loc) != n:
        raise InputError("table-shape-mismatch", "local_mul table does not match group order")
    e = raw.left_identity
    if not (0 <= e < n):
        raise InputError("left-identity-out-of-range", f"designated left identity {e}")

    out = group_violations(add)
    if out:
        return out
    rng = range(n)

    def first(code: str, witness: tuple[int, ...], message: str) -> None:
        out.append(Violation(code, witness, message))

    found = False
    for x in rng:
        mx = mul[x]
        for y in rng:
            ay = add[y]
            for z in rng:
                if mul[x][ay[z]] != add[mx[y]][mx[z]]:
                    first("mul-left-distributive", (x, y, z), "x(y+z) != xy+xz")
                    found = True
                    break
            if found:
                break
        if found:
            break

    found = False
    for x in rng:
        ax = add[x]
        for y in rng:
            for z in rng:
                if mul[ax[y]][z] != add[mul[x][z]][mul[y][z]]:
                    first("mul-right-distributive", (x, y, z), "(x+y)z != xz+yz")
                    found = True
                    break
            if found:
                break
        if found:
            break

    found = False
    for x in rng:
        mx = mul[x]
        for y in rng:
            rxy = mul[mx[y]]
            my = mul[y]
            for z in rng:
                if rxy[z] != mx[my[z]]:
                    first("mul-not-associative", (x, y, z), "(xy)z != x(yz)")
                    found = True
                    break
            if found:
                break
        if found:
            break

    found = False
    for x in rng:
        mx = mul[x]
        for y in rng:
            rxy = mul[mx[y]]
            ryx = mul[mul[y][x]]
            if rxy is ryx:
                continue
            for z in rng:
                if rxy[z] != ryx[z]:
                    first("not-left-commutative", (x, y, z), "xyz != yxz")
                    found = True
                    break
            if found:
                break
        if found:
            break

    for x in rng:
        if mul[e][x] != x:
            first("left-identity-fails", (x,), f"designated left identity does not fix {x}")
            break

    for cand in rng:
        if all(mul[cand][x] == x and mul[x][cand] == x for x in rng):
            first("two-sided-identity", (cand,), f"{cand} is a two-sided identity; not a rng")
            break

    halo = frozenset(x for x in rng if mul[x][e] == 0)
    hs = sorted(halo)
    if halo <= {0}:
        first("empty-halo", (0,), "the additive halo is trivial")

    halo_ok = True
    for a in hs:
        bad = next((b for b in hs if add[a][b] not in halo), None)
        if bad is not None:
            first("halo-not-subgroup", (a, bad), "halo not closed under addition")
            halo_ok = False
            break

    found = False
    for a in rng:
        for b in rng:
            if loc[a][b] != SENTINEL and not (a in halo and b in halo):
                first("local-mul-outside-halo", (a, b), "# defined off the halo")
                found = True
                break
        if found:
            break

    local_total = True
    found = False
    for a in hs:
        for b in hs:
            if loc[a][b] == SENTINEL:
                first("local-mul-missing", (a, b), "# undefined on a halo pair")
                local_total = False
                found = True
                break
        if found:
            break

    local_identity = None
    if local_total:
        found = False
        for a in hs:
            for b in hs:
                if loc[a][b] not in halo:
                    first("local-mul-not-closed", (a, b), "# leaves the halo")
                    found = True
                    break
            if found:
                break

        found = False
        for a in hs:
            for b in hs:
                if loc[a][b] != loc[b][a]:
                    first("local-mul-not-commutative", (a, b), "# not commutative")
                    found = True
                    break
            if found:
                break

        found = False
        for a in hs:
            for b in hs:
                ab = loc[a][b]
                if ab not in halo:
                    continue
                for c in hs:
                    bc = loc[b][c]
                    if bc not in halo:
                        continue
                    if loc[ab][c] != loc[a][bc]:
                        first("local-mul-not-associative", (a, b, c), "# not associative")
                        found = True
                        break
                if found:
                    break
            if found:
                break

        if halo_ok:
            found = False
            for a in hs:
                for b in hs:
                    for c in hs:
                        if loc[a][add[b][c]] != add[loc[a][b]][loc[a][c]]:
                            first("local-mul-not-distributive", (a, b, c), "a#(b+c) != a#b+a#c")
                            found = True
                            break
                    if found:
                        break
                if found:
                    break

        for cand in hs:
            if all(loc[cand][a] == a for a in hs):
                local_identity = cand
                break
        if local_identity is None:
            first("no-local-identity", (), "the halo ring has no identity")

        found = False
        for x in rng:
            for a in hs:
                xa = mul[x][a]
                for b in hs:
                    ab = loc[a][b]
                    if xa not in halo or ab not in halo or loc[xa][b] != mul[x][ab]:
                        first("local-triassociativity", (x, a, b), "(xa)#b != x(a#b)")
                        found = True
                        break
                if found:
                    break
            if found:
                break

    r0 = frozenset(mul[x][e] for x in rng)
    if r0 & halo != {0} or len(r0) * len(halo) != n:
        first("grading-not-direct", (), "carrier is not the direct sum of R0 and the halo")
    else:
        neg = [add[a].index(0) for a in rng]
        for a in rng:
            a0 = mul[a][e]
            a1 = add[a][neg[a0]]
            if a1 not in halo or add[a0][a1] != a:
                first("grading-not-direct", (a,), "element does not split as a0 + a1")
                break

    return out


def validate_lcrng(raw: RawLcRng) -> LcRng:
    """Fully validated structure, or ValidationFailure with every failed axiom."""
    violations = lcrng_violations(raw)
    if violations:
        raise ValidationFailure(violations)
    n = raw.group.order
    e = raw.left_identity
    halo = compute_halo(raw)
    hs = sorted(halo)
    local_identity = next(c for c in hs if all(raw.local_mul[c][a] == a for a in hs))
    r0 = frozenset(raw.mul[x][e] for x in range(n))
    return LcRng(
        group=raw.group,
        mul=raw.mul,
        left_identity=e,
        local_mul=raw.local_mul,
        halo=halo,
        local_identity=local_identity,
        r0=r0,
        r1=halo,
        name=raw.name,
        metadata=raw.metadata,
    )


def left_identities(structure: LcRng) -> Subset:
    """All e' with e'·x = x; always contains the designated one."""
    n = structure.order
    mul = structure.mul
    return frozenset(c for c in range(n) if all(mul[c][x] == x for x in range(n)))


def decompose(structure: LcRng) -> Decomposition:
    """Per-element split a = a0 + a1 along R = R0 + halo, verified direct."""
    n = structure.order
    comp0 = tuple(structure.comp0(a) for a in range(n))
    comp1 = tuple(structure.comp1(a) for a in range(n))
    seen: dict[tuple[int, int], int] = {}
    for a in range(n):
        if comp0[a] not in structure.r0 or comp1[a] not in structure.r1:
            raise TheoremAlarm(
                "decomposition-not-direct",
                f"component of {a} escapes its part",
                dump=f"comp0={comp0} comp1={comp1}",
            )
        if structure.plus(comp0[a], comp1[a]) != a:
            raise TheoremAlarm("decomposition-not-direct", f"{a} != a0 + a1")
        key = (comp0[a], comp1[a])
        if key in seen:
            raise TheoremAlarm(
                "decomposition-not-direct", f"{a} and {seen[key]} share components {key}"
            )
        seen[key] = a
    return Decomposition(r0=structure.r0, r1=structure.r1, comp0=comp0, comp1=comp1)


def induced_product(structure: LcRng, x: int, y: int) -> int:
    """The commutative product x*y = xy + yx - (yx)e tied to the designated e."""
    xy = structure.times(x, y)
    yx = structure.times(y, x)
    return structure.plus(xy, structure.minus(yx, structure.times(yx, structure.left_identity)))


def induced_table(structure: LcRng) -> Table:
    n = structure.order
    return tuple(
        tuple(induced_product(structure, x, y) for y in range(n)) for x in range(n)
    )
