"""Finite replay of the lying-over theorem.

For a subrng R of a structure U with U graded integral over R, every
Hu-Liu prime p of R is the trace q ∩ R of some Hu-Liu prime q of U.  The
classical proof picks a maximal element of T = {ideals J of U with
J ∩ R ⊆ p} by Zorn's Lemma; here the ideal lattice is finite, so maximal
elements are found by exhaustive search and both proof targets — the
maximal element meets R exactly in p, and it is prime — become runnable
checks.  A missing witness would falsify the theorem and raises an alarm
with a full diagnostic dump rather than a normal error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, TheoremAlarm
from .ideals import (
    GradedIdeal,
    as_graded_ideal,
    enumerate_ideals,
    is_huliu_prime,
    prime_violation,
    spectrum,
    subrng_violation,
)
from .integrality import component_ring, component_subrings, integral_witness
from .kernel import SENTINEL, FiniteAbelianGroup, Subset, format_subset
from .lcrng import LcRng, RawLcRng, validate_lcrng


@dataclass(frozen=True)
class SubrngPair:
    """A subrng embedded in an ambient structure, with the re-indexed copy."""

    ambient: LcRng
    sub: Subset
    restricted: LcRng
    from_sub: tuple[int, ...]
    to_sub: tuple[int, ...]

    def to_ambient(self, subset: Subset) -> Subset:
        return frozenset(self.from_sub[i] for i in subset)

    def to_restricted(self, subset: Subset) -> Subset:
        out = set()
        for a in subset:
            i = self.to_sub[a]
            if i == SENTINEL:
                raise InputError("subset-outside-subrng", f"{a} is not in the subrng")
            out.add(i)
        return frozenset(out)


@dataclass(frozen=True)
class LyingOverRow:
    """One prime of the subrng with its witnesses and maximal-element data."""

    p: Subset
    witnesses: tuple[Subset, ...]
    maximal: tuple[Subset, ...]
    maximal_meets_p: bool
    maximal_all_prime: bool


@dataclass(frozen=True)
class LyingOverReport:
    rows: tuple[LyingOverRow, ...]
    passed: bool


def embed_check(structure: LcRng, subset: Subset, strict: bool = True) -> SubrngPair:
    """Verified pair: subrng axioms, graded integrality of the extension,
    and validation of the re-indexed sub-structure."""
    bad = subrng_violation(structure, subset, strict=strict)
    if bad is not None:
        raise InputError("not-a-subrng", str(bad))

    s0, s1 = component_subrings(structure, subset)
    ring0 = component_ring(structure, 0)
    ring1 = component_ring(structure, 1)
    bound = structure.order
    for u in structure.elements():
        w0 = integral_witness(ring0, s0, structure.comp0(u), bound, require_unital=False)
        w1 = integral_witness(ring1, s1, structure.comp1(u), bound, require_unital=False)
        if w0 is None or w1 is None:
            part = 0 if w0 is None else 1
            raise InputError(
                "not-graded-integral",
                f"component {part} of element {u} has no monic relation over the "
                f"subrng part (searched degrees up to {bound})",
            )

    from_sub = tuple(sorted(subset))
    to_sub_list = [SENTINEL] * structure.order
    for i, a in enumerate(from_sub):
        to_sub_list[a] = i
    to_sub = tuple(to_sub_list)

    m = len(from_sub)
    add = tuple(
        tuple(to_sub[structure.plus(from_sub[i], from_sub[j])] for j in range(m))
        for i in range(m)
    )
    mul = tuple(
        tuple(to_sub[structure.times(from_sub[i], from_sub[j])] for j in range(m))
        for i in range(m)
    )
    sub_halo = subset & structure.halo
    loc = tuple(
        tuple(
            to_sub[structure.local(from_sub[i], from_sub[j])]
            if from_sub[i] in sub_halo and from_sub[j] in sub_halo
            else SENTINEL
            for j in range(m)
        )
        for i in range(m)
    )
    raw = RawLcRng(
        group=FiniteAbelianGroup(order=m, add=add),
        mul=mul,
        left_identity=to_sub[structure.left_identity],
        local_mul=loc,
        name=f"{structure.name}[{format_subset(subset)}]" if structure.name else "",
    )
    try:
        restricted = validate_lcrng(raw)
    except Exception as exc:
        raise InputError(
            "not-a-subrng", f"the restriction to {{{format_subset(subset)}}} is not a valid "
            f"structure: {exc}"
        ) from exc
    return SubrngPair(
        ambient=structure, sub=subset, restricted=restricted, from_sub=from_sub, to_sub=to_sub
    )


def sub_primes(pair: SubrngPair) -> list[Subset]:
    """spec# of the sub-structure, reported in ambient indices."""
    return [pair.to_ambient(p.carrier) for p in spectrum(pair.restricted).primes]


def _require_prime(pair: SubrngPair, p: Subset) -> None:
    if not p <= pair.sub:
        raise InputError("p-not-prime", "p is not contained in the subrng")
    p_res = pair.to_restricted(p)
    try:
        ideal = as_graded_ideal(pair.restricted, p_res, kind="ideal")
    except InputError as exc:
        raise InputError("p-not-prime", f"p is not an ideal of the subrng: {exc}") from exc
    bad = prime_violation(pair.restricted, ideal)
    if bad is not None:
        raise InputError("p-not-prime", f"p is not Hu-Liu prime in the subrng: {bad}")


def t_set(pair: SubrngPair, p: Subset) -> list[GradedIdeal]:
    """All ideals J of the ambient structure with J ∩ R ⊆ p, canonically ordered."""
    _require_prime(pair, p)
    return [j for j in enumerate_ideals(pair.ambient) if (j.carrier & pair.sub) <= p]


def maximal_in_t(pair: SubrngPair, p: Subset) -> list[GradedIdeal]:
    """Inclusion-maximal members of the T-set (the finite stand-in for Zorn)."""
    candidates = t_set(pair, p)
    out = []
    for j in candidates:
        if not any(j is not k and j.carrier < k.carrier for k in candidates):
            out.append(j)
    return out


def lying_over(pair: SubrngPair, p: Subset) -> GradedIdeal:
    """Some prime q of the ambient structure with q ∩ R = p (canonically least).

    Witnesses come from intersecting the ambient spectrum; the maximal
    elements of T are cross-checked against both proof targets.  Finding no
    witness on a valid pair contradicts the theorem, so it raises an alarm
    with a diagnostic dump instead of returning an error value.
    """
    _require_prime(pair, p)
    ambient_spectrum = spectrum(pair.ambient).primes
    candidates = [q for q in ambient_spectrum if q.carrier & pair.sub == p]
    for q in maximal_in_t(pair, p):
        if q.carrier & pair.sub != p or not is_huliu_prime(pair.ambient, q):
            raise TheoremAlarm(
                "maximal-element-failed",
                f"maximal element {{{format_subset(q.carrier)}}} of T violates a proof target",
                dump=_dump(pair, p),
            )
    if not candidates:
        raise TheoremAlarm(
            "no-witness",
            f"no ambient prime meets the subrng in {{{format_subset(p)}}}",
            dump=_dump(pair, p),
        )
    return candidates[0]


def _dump(pair: SubrngPair, p: Subset) -> str:
    lines = [
        f"sub = {format_subset(pair.sub)}",
        f"p = {format_subset(p)}",
        f"ambient mul = {pair.ambient.mul}",
        f"ambient local_mul = {pair.ambient.local_mul}",
        "ambient spectrum = "
        + "; ".join(format_subset(q.carrier) for q in spectrum(pair.ambient).primes),
    ]
    return "\n".join(lines)


def verify_lying_over_all(pair: SubrngPair) -> LyingOverReport:
    """One row per prime of the subrng; failures are recorded, never raised."""
    ambient_spectrum = spectrum(pair.ambient).primes
    rows = []
    for p in sub_primes(pair):
        witnesses = tuple(q.carrier for q in ambient_spectrum if q.carrier & pair.sub == p)
        maximal = maximal_in_t(pair, p)
        meets = all(q.carrier & pair.sub == p for q in maximal)
        all_prime = all(prime_violation(pair.ambient, q) is None for q in maximal)
        rows.append(
            LyingOverRow(
                p=p,
                witnesses=witnesses,
                maximal=tuple(q.carrier for q in maximal),
                maximal_meets_p=meets,
                maximal_all_prime=all_prime,
            )
        )
    return LyingOverReport(rows=tuple(rows), passed=all(row.witnesses for row in rows))
