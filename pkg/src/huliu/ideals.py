"""Ideals, subrngs, Hu-Liu prime ideals, and the spectrum of a structure.

An ideal must absorb · on both sides and meet the halo in a #-ideal; a
subrng must contain the designated left identity, be ·-closed, and meet the
halo in a subring (strict mode additionally demands the local identity, so
component rings stay unital for the integrality machinery).  Primality is
the componentwise condition: products landing in the ideal force a factor
into the matching component, for · on the 0-part against everything and
for # on the halo.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InputError, Violation
from .kernel import Subset, format_subset, subset_key, enumerate_subgroups
from .lcrng import LcRng


@dataclass(frozen=True)
class GradedIdeal:
    """A subset with its grading split; is_prime is tri-state (None = unknown)."""

    carrier: Subset
    i0: Subset
    i1: Subset
    kind: str  # "ideal" | "subrng"
    is_prime: bool | None = None


@dataclass(frozen=True)
class Spectrum:
    primes: tuple[GradedIdeal, ...]

    def carriers(self) -> list[Subset]:
        return [p.carrier for p in self.primes]


def _subgroup_violation(structure: LcRng, subset: Subset) -> Violation | None:
    for i in subset:
        if not (0 <= i < structure.order):
            raise InputError("subset-out-of-range", f"index {i} not in carrier")
    if 0 not in subset:
        return Violation("not-a-subgroup", (0,), "subset misses the additive zero")
    for a in sorted(subset):
        for b in sorted(subset):
            if structure.plus(a, b) not in subset:
                return Violation("not-a-subgroup", (a, b), "subset not closed under +")
    return None


def ideal_violation(structure: LcRng, subset: Subset) -> Violation | None:
    """None iff subset is an ideal; otherwise the violated clause + witness."""
    bad = _subgroup_violation(structure, subset)
    if bad is not None:
        return bad
    members = sorted(subset)
    n = structure.order
    for i in members:
        row = structure.mul[i]
        for r in range(n):
            if row[r] not in subset:
                return Violation("ideal-right-absorb", (i, r), "IR escapes the subset")
    for r in range(n):
        row = structure.mul[r]
        for i in members:
            if row[i] not in subset:
                return Violation("ideal-left-absorb", (r, i), "RI escapes the subset")
    halo_part = sorted(subset & structure.halo)
    for s in halo_part:
        for a in sorted(structure.halo):
            if structure.local(s, a) not in subset:
                return Violation("halo-ideal-absorb", (s, a), "halo part is not a #-ideal")
    return None


def is_ideal(structure: LcRng, subset: Subset) -> bool:
    return ideal_violation(structure, subset) is None


def subrng_violation(structure: LcRng, subset: Subset, strict: bool = True) -> Violation | None:
    """None iff subset is a left commutative subrng (strict: local identity too)."""
    bad = _subgroup_violation(structure, subset)
    if bad is not None:
        return bad
    e = structure.left_identity
    if e not in subset:
        return Violation("missing-left-identity", (e,), "designated left identity not in subset")
    members = sorted(subset)
    for a in members:
        for b in members:
            if structure.times(a, b) not in subset:
                return Violation("not-multiplicatively-closed", (a, b), "II escapes the subset")
    halo_part = sorted(subset & structure.halo)
    for a in halo_part:
        for b in halo_part:
            if structure.local(a, b) not in subset:
                return Violation(
                    "halo-not-multiplicatively-closed", (a, b), "halo part is not #-closed"
                )
    if strict and structure.local_identity not in subset:
        return Violation(
            "missing-local-identity",
            (structure.local_identity,),
            "halo part does not contain the local identity (strict mode)",
        )
    return None


def is_subrng(structure: LcRng, subset: Subset, strict: bool = True) -> bool:
    return subrng_violation(structure, subset, strict=strict) is None


def ideal_components(structure: LcRng, subset: Subset) -> tuple[Subset, Subset]:
    """(I ∩ R0, I ∩ halo), verifying every member splits inside the subset."""
    for a in sorted(subset):
        if structure.comp0(a) not in subset or structure.comp1(a) not in subset:
            raise InputError(
                "grading-violation",
                f"element {a} of {{{format_subset(subset)}}} has a component outside it; "
                "the subset is not an ideal or subrng",
            )
    return (subset & structure.r0, subset & structure.r1)


def as_graded_ideal(
    structure: LcRng,
    subset: Subset,
    kind: str = "ideal",
    strict: bool = True,
) -> GradedIdeal:
    if kind == "ideal":
        bad = ideal_violation(structure, subset)
        code = "not-an-ideal"
    elif kind == "subrng":
        bad = subrng_violation(structure, subset, strict=strict)
        code = "not-a-subrng"
    else:
        raise InputError("bad-kind", f"unknown graded subset kind {kind!r}")
    if bad is not None:
        raise InputError(code, str(bad))
    i0, i1 = ideal_components(structure, subset)
    return GradedIdeal(carrier=subset, i0=i0, i1=i1, kind=kind)


def prime_violation(structure: LcRng, ideal: GradedIdeal) -> Violation | None:
    """Direct test of the componentwise primality conditions."""
    carrier = ideal.carrier
    if len(carrier) == structure.order:
        return Violation("prime-requires-proper", (), "the whole rng is never prime")
    parts = (sorted(structure.r0), sorted(structure.halo))
    comp_parts = (ideal.i0, ideal.i1)
    mul = structure.mul
    for eps in (0, 1):
        for x0 in parts[0]:
            if x0 in ideal.i0:
                continue
            row = mul[x0]
            for y in parts[eps]:
                if row[y] in carrier and y not in comp_parts[eps]:
                    return Violation(
                        "prime-product-condition",
                        (eps, x0, y),
                        "x0·y lands in the ideal with neither factor in its component",
                    )
    halo = sorted(structure.halo)
    for x1 in halo:
        if x1 in ideal.i1:
            continue
        for y1 in halo:
            if y1 in ideal.i1:
                continue
            if structure.local(x1, y1) in ideal.i1:
                return Violation(
                    "prime-local-condition",
                    (x1, y1),
                    "x1#y1 lands in the halo part with neither factor in it",
                )
    return None


def is_huliu_prime(structure: LcRng, ideal: GradedIdeal | Subset) -> bool:
    if not isinstance(ideal, GradedIdeal):
        ideal = as_graded_ideal(structure, ideal, kind="ideal")
    return prime_violation(structure, ideal) is None


def complement_closure_violation(structure: LcRng, ideal: GradedIdeal) -> Violation | None:
    """Independent primality route: the complement is closed under products.

    Proper ideal, plus: products of 0-part elements outside the ideal stay
    outside; a 0-part element outside times a halo element outside stays
    outside; #-products of halo elements outside the halo part stay outside.
    """
    if len(ideal.carrier) == structure.order:
        return Violation("prime-requires-proper", (), "the whole rng is never prime")
    outside0 = [x for x in sorted(structure.r0) if x not in ideal.carrier]
    outside1 = [x for x in sorted(structure.halo) if x not in ideal.carrier]
    for x0 in outside0:
        for y0 in outside0:
            if structure.times(x0, y0) in ideal.carrier:
                return Violation("complement-closure-00", (x0, y0), "x0·y0 fell into the ideal")
    for x0 in outside0:
        for y1 in outside1:
            if structure.times(x0, y1) in ideal.carrier:
                return Violation("complement-closure-01", (x0, y1), "x0·y1 fell into the ideal")
    for x1 in outside1:
        for y1 in outside1:
            if structure.local(x1, y1) in ideal.i1:
                return Violation("complement-closure-11", (x1, y1), "x1#y1 fell into the ideal")
    return None


def complement_closure_prime(structure: LcRng, ideal: GradedIdeal) -> bool:
    return complement_closure_violation(structure, ideal) is None


def enumerate_ideals(structure: LcRng) -> list[GradedIdeal]:
    """Every ideal, canonically ordered by size then membership."""
    out = []
    for subgroup in enumerate_subgroups(structure.group):
        if ideal_violation(structure, subgroup) is None:
            out.append(as_graded_ideal(structure, subgroup, kind="ideal"))
    out.sort(key=lambda ideal: subset_key(ideal.carrier))
    return out


def spectrum(structure: LcRng) -> Spectrum:
    """All Hu-Liu prime ideals, deduplicated and canonically ordered."""
    primes = []
    for ideal in enumerate_ideals(structure):
        if prime_violation(structure, ideal) is None:
            primes.append(replace(ideal, is_prime=True))
    return Spectrum(primes=tuple(primes))
