"""Rings with the Hu-Liu product, and the bridge from left commutative rngs.

A ring (R, +, •) with identity sigma carries a Hu-Liu product when two
auxiliary products ⇀ (rarrow) and ↼ (larrow) decompose it as
x•y = x⇀y + x↼y - (x↼σ)⇀y and satisfy the strong triassociative laws
(x⇀y)•z = x•(y↼z), x⇀(y•z) = (x⇀y)⇀z, (x•y)↼z = (x↼y)↼z together with
distributivity.  Associativity of each arrow is a consequence, so the
validator checks it and classifies a failure as an inconsistent input.
The ring is Hu-Liu commutative when x⇀y - y↼x always lands in the halo
{x : σ⇀x = 0}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import InputError, TheoremAlarm, ValidationFailure, Violation
from .kernel import FiniteAbelianGroup, Subset, Table, check_table_shape, group_violations
from .lcrng import LcRng, Metadata, induced_table


@dataclass(frozen=True)
class RawHlRing:
    group: FiniteAbelianGroup
    bullet: Table
    rarrow: Table
    larrow: Table
    sigma: int
    name: str = ""
    metadata: Metadata = ()


@dataclass(frozen=True)
class HlRing:
    group: FiniteAbelianGroup
    bullet: Table
    rarrow: Table
    larrow: Table
    sigma: int
    halo: Subset
    name: str = ""
    metadata: Metadata = ()

    @property
    def order(self) -> int:
        return self.group.order

    def elements(self) -> range:
        return range(self.group.order)

    def plus(self, a: int, b: int) -> int:
        return self.group.add[a][b]

    def minus(self, a: int, b: int) -> int:
        return self.group.minus(a, b)

    def raw(self) -> RawHlRing:
        return RawHlRing(
            group=self.group,
            bullet=self.bullet,
            rarrow=self.rarrow,
            larrow=self.larrow,
            sigma=self.sigma,
            name=self.name,
            metadata=self.metadata,
        )


HLRING_CHECKS = (
    "bullet-left-distributive",
    "bullet-right-distributive",
    "bullet-not-associative",
    "bullet-identity-fails",
    "product-decomposition",
    "strong-law-bullet-link",
    "strong-law-rarrow",
    "strong-law-larrow",
    "rarrow-left-distributive",
    "rarrow-right-distributive",
    "larrow-left-distributive",
    "larrow-right-distributive",
    "rarrow-not-associative",
    "larrow-not-associative",
)


def hlring_violations(raw: RawHlRing) -> list[Violation]:
    """Every failed axiom, first witness each, in a fixed check order."""
    n = raw.group.order
    add = check_table_shape(raw.group.add)
    bullet = check_table_shape(raw.bullet)
    ra = check_table_shape(raw.rarrow)
    la = check_table_shape(raw.larrow)
    if len(bullet) != n or len(ra) != n or len(la) != n:
        raise InputError("table-shape-mismatch", "product tables do not match group order")
    if not (0 <= raw.sigma < n):
        raise InputError("identity-out-of-range", f"identity index {raw.sigma}")

    out = group_violations(add)
    if out:
        return out
    rng = range(n)

    def scan3(code: str, message: str, law: Callable[[int, int, int], bool]) -> None:
        for x in rng:
            for y in rng:
                for z in rng:
                    if not law(x, y, z):
                        out.append(Violation(code, (x, y, z), message))
                        return

    scan3(
        "bullet-left-distributive",
        "x•(y+z) != x•y + x•z",
        lambda x, y, z: bullet[x][add[y][z]] == add[bullet[x][y]][bullet[x][z]],
    )
    scan3(
        "bullet-right-distributive",
        "(x+y)•z != x•z + y•z",
        lambda x, y, z: bullet[add[x][y]][z] == add[bullet[x][z]][bullet[y][z]],
    )
    scan3(
        "bullet-not-associative",
        "(x•y)•z != x•(y•z)",
        lambda x, y, z: bullet[bullet[x][y]][z] == bullet[x][bullet[y][z]],
    )
    s = raw.sigma
    for x in rng:
        if bullet[s][x] != x or bullet[x][s] != x:
            out.append(Violation("bullet-identity-fails", (x,), "σ is not a •-identity"))
            break
    neg = [add[a].index(0) for a in rng]
    found = False
    for x in rng:
        xs = ra[la[x][s]]
        for y in rng:
            if bullet[x][y] != add[ra[x][y]][add[la[x][y]][neg[xs[y]]]]:
                out.append(
                    Violation(
                        "product-decomposition", (x, y), "x•y != x⇀y + x↼y - (x↼σ)⇀y"
                    )
                )
                found = True
                break
        if found:
            break
    scan3(
        "strong-law-bullet-link",
        "(x⇀y)•z != x•(y↼z)",
        lambda x, y, z: bullet[ra[x][y]][z] == bullet[x][la[y][z]],
    )
    scan3(
        "strong-law-rarrow",
        "x⇀(y•z) != (x⇀y)⇀z",
        lambda x, y, z: ra[x][bullet[y][z]] == ra[ra[x][y]][z],
    )
    scan3(
        "strong-law-larrow",
        "(x•y)↼z != (x↼y)↼z",
        lambda x, y, z: la[bullet[x][y]][z] == la[la[x][y]][z],
    )
    scan3(
        "rarrow-left-distributive",
        "x⇀(y+z) != x⇀y + x⇀z",
        lambda x, y, z: ra[x][add[y][z]] == add[ra[x][y]][ra[x][z]],
    )
    scan3(
        "rarrow-right-distributive",
        "(x+y)⇀z != x⇀z + y⇀z",
        lambda x, y, z: ra[add[x][y]][z] == add[ra[x][z]][ra[y][z]],
    )
    scan3(
        "larrow-left-distributive",
        "x↼(y+z) != x↼y + x↼z",
        lambda x, y, z: la[x][add[y][z]] == add[la[x][y]][la[x][z]],
    )
    scan3(
        "larrow-right-distributive",
        "(x+y)↼z != x↼z + y↼z",
        lambda x, y, z: la[add[x][y]][z] == add[la[x][z]][la[y][z]],
    )
    scan3(
        "rarrow-not-associative",
        "⇀ is not associative (inconsistent input: this must follow)",
        lambda x, y, z: ra[ra[x][y]][z] == ra[x][ra[y][z]],
    )
    scan3(
        "larrow-not-associative",
        "↼ is not associative (inconsistent input: this must follow)",
        lambda x, y, z: la[la[x][y]][z] == la[x][la[y][z]],
    )
    return out


def validate_hlring(raw: RawHlRing) -> HlRing:
    violations = hlring_violations(raw)
    if violations:
        raise ValidationFailure(violations)
    halo = frozenset(x for x in range(raw.group.order) if raw.rarrow[raw.sigma][x] == 0)
    return HlRing(
        group=raw.group,
        bullet=raw.bullet,
        rarrow=raw.rarrow,
        larrow=raw.larrow,
        sigma=raw.sigma,
        halo=halo,
        name=raw.name,
        metadata=raw.metadata,
    )


def hl_halo(ring: HlRing) -> Subset:
    """{x : σ⇀x = 0}, recomputed from the tables."""
    return frozenset(x for x in ring.elements() if ring.rarrow[ring.sigma][x] == 0)


def hl_commutativity_violation(ring: HlRing) -> Violation | None:
    for x in ring.elements():
        for y in ring.elements():
            diff = ring.minus(ring.rarrow[x][y], ring.larrow[y][x])
            if diff not in ring.halo:
                return Violation(
                    "not-hl-commutative", (x, y), "x⇀y - y↼x is outside the halo"
                )
    return None


def is_hl_commutative(ring: HlRing) -> bool:
    return hl_commutativity_violation(ring) is None


def from_lcrng(structure: LcRng) -> HlRing:
    """Bridge: σ = the designated left identity, x⇀y = y·x, x↼y = x·y,
    • = the induced product.  Validated at runtime rather than trusted."""
    n = structure.order
    mul = structure.mul
    rarrow = tuple(tuple(mul[y][x] for y in range(n)) for x in range(n))
    raw = RawHlRing(
        group=structure.group,
        bullet=induced_table(structure),
        rarrow=rarrow,
        larrow=mul,
        sigma=structure.left_identity,
        name=f"hl({structure.name})" if structure.name else "",
        metadata=structure.metadata,
    )
    violations = hlring_violations(raw)
    if violations:
        raise TheoremAlarm(
            "bridge-axiom-failure",
            "bridge output failed validation on a validated input",
            dump="\n".join(str(v) for v in violations),
        )
    ring = validate_hlring(raw)
    if ring.halo != structure.halo:
        raise TheoremAlarm(
            "bridge-axiom-failure",
            f"bridge halo {sorted(ring.halo)} differs from {sorted(structure.halo)}",
        )
    if not is_hl_commutative(ring):
        raise TheoremAlarm("bridge-axiom-failure", "bridge output is not Hu-Liu commutative")
    return ring


DialgebraIdentity = tuple[str, Callable[[HlRing, int, int, int], tuple[int, int]]]

DIALGEBRA_IDENTITIES: tuple[DialgebraIdentity, ...] = (
    (
        "(x<y)<z == x<(y<z)",
        lambda H, x, y, z: (H.larrow[H.larrow[x][y]][z], H.larrow[x][H.larrow[y][z]]),
    ),
    (
        "x<(y<z) == x<(y>z)",
        lambda H, x, y, z: (H.larrow[x][H.larrow[y][z]], H.larrow[x][H.rarrow[y][z]]),
    ),
    (
        "(x>y)<z == x>(y<z)",
        lambda H, x, y, z: (H.larrow[H.rarrow[x][y]][z], H.rarrow[x][H.larrow[y][z]]),
    ),
    (
        "(x<y)>z == (x>y)>z",
        lambda H, x, y, z: (H.rarrow[H.larrow[x][y]][z], H.rarrow[H.rarrow[x][y]][z]),
    ),
    (
        "x>(y>z) == (x>y)>z",
        lambda H, x, y, z: (H.rarrow[x][H.rarrow[y][z]], H.rarrow[H.rarrow[x][y]][z]),
    ),
)


def diassociativity_report(
    ring: HlRing, identities: Sequence[DialgebraIdentity] | None = None
) -> dict[str, bool]:
    """Which of the two-product identities hold (< is ↼, > is ⇀).

    The default set is the five standard associative-dialgebra identities.
    This is a report, never a validation gate.
    """
    chosen = DIALGEBRA_IDENTITIES if identities is None else tuple(identities)
    out: dict[str, bool] = {}
    rng = ring.elements()
    for name, law in chosen:
        holds = True
        for x in rng:
            for y in rng:
                for z in rng:
                    lhs, rhs = law(ring, x, y, z)
                    if lhs != rhs:
                        holds = False
                        break
                if not holds:
                    break
            if not holds:
                break
        out[name] = holds
    return out
