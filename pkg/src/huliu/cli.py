"""Command-line surface: structure files in, reports and exit codes out.

Exit codes partition outcomes: 0 = verdict pass, 1 = algebraic
failure/violation (including theorem alarms), 2 = input or usage error.
Reports have a human text form and a machine CSV form (--format csv);
CSV rows use ';' between fields, ',' inside subsets, and '|' between
subsets in a list field.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .constructions import (
    FiniteCommRing,
    RING_CHECKS,
    comm_ring_violations,
    enumerate_lcrngs,
    identity_hom,
    projection_hom,
    reduction_hom,
    ring_product,
    semidirect_null,
    zmod,
)
from .errors import InputError, TheoremAlarm, ValidationFailure, Violation
from .files import emit_structure, parse_structure
from .hlring import (
    HLRING_CHECKS,
    RawHlRing,
    diassociativity_report,
    from_lcrng,
    hlring_violations,
    is_hl_commutative,
    validate_hlring,
)
from .ideals import enumerate_ideals, is_huliu_prime, spectrum
from .integrality import graded_witnesses
from .kernel import GROUP_CHECKS, format_subset, parse_subset
from .lcrng import LCRNG_CHECKS, RawLcRng, decompose, lcrng_violations, validate_lcrng
from .lyingover import embed_check, verify_lying_over_all


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError("missing-file", f"cannot read {path}: {exc}") from exc


def _emit_report(
    args: argparse.Namespace,
    command: str,
    lines: list[str],
    rows: list[str],
    verdict: str,
    text_rows: bool = True,
) -> int:
    if getattr(args, "format", "text") == "csv":
        for row in rows:
            print(row)
    else:
        print(command)
        for line in lines:
            print(line)
        if text_rows:
            for row in rows:
                print(row)
        print(f"verdict: {verdict}")
    return 0 if verdict == "pass" else 1


def _axiom_lines(
    checks: Sequence[str], violations: list[Violation]
) -> tuple[list[str], list[str], bool]:
    by_code = {v.code: v for v in violations}
    lines, rows = [], []

    def witness_field(v: Violation) -> str:
        return ",".join(str(i) for i in v.witness)

    for code in (*GROUP_CHECKS, *checks):
        v = by_code.get(code)
        if v is None:
            lines.append(f"ok {code}")
            rows.append(f"{code};ok;")
        else:
            lines.append(f"violation {v}")
            rows.append(f"{code};fail;{witness_field(v)}")
    for v in violations:
        if v.code not in GROUP_CHECKS and v.code not in checks:
            lines.append(f"violation {v}")
            rows.append(f"{v.code};fail;{witness_field(v)}")
    return lines, rows, not violations


def _parse_lcrng_file(path: str) -> RawLcRng:
    structure = parse_structure(_read_file(path))
    if not isinstance(structure, RawLcRng):
        raise InputError("kind-mismatch", f"{path} does not hold an lcrng document")
    return structure


def _cmd_verify(args: argparse.Namespace) -> int:
    structure = parse_structure(_read_file(args.file))
    if isinstance(structure, RawLcRng):
        checks, violations = LCRNG_CHECKS, lcrng_violations(structure)
    elif isinstance(structure, RawHlRing):
        checks, violations = HLRING_CHECKS, hlring_violations(structure)
    else:
        checks, violations = RING_CHECKS, comm_ring_violations(structure)
    lines, rows, ok = _axiom_lines(checks, violations)
    return _emit_report(
        args, f"verify {args.file}", lines, rows, "pass" if ok else "fail", text_rows=False
    )


def _cmd_decompose(args: argparse.Namespace) -> int:
    structure = validate_lcrng(_parse_lcrng_file(args.file))
    split = decompose(structure)
    lines = [
        f"r0 = {format_subset(split.r0)}",
        f"r1 = {format_subset(split.r1)}",
    ]
    rows = [f"{a};{split.comp0[a]};{split.comp1[a]}" for a in structure.elements()]
    return _emit_report(args, f"decompose {args.file}", lines, rows, "pass")


def _ideal_row(structure, ideal) -> str:
    prime = "yes" if is_huliu_prime(structure, ideal) else "no"
    return (
        f"{format_subset(ideal.carrier)};{prime};"
        f"{format_subset(ideal.i0)}|{format_subset(ideal.i1)}"
    )


def _cmd_ideals(args: argparse.Namespace) -> int:
    structure = validate_lcrng(_parse_lcrng_file(args.file))
    rows = [_ideal_row(structure, ideal) for ideal in enumerate_ideals(structure)]
    lines = [f"{len(rows)} ideals"]
    return _emit_report(args, f"ideals {args.file}", lines, rows, "pass")


def _cmd_spectrum(args: argparse.Namespace) -> int:
    structure = validate_lcrng(_parse_lcrng_file(args.file))
    primes = spectrum(structure).primes
    rows = [
        f"{format_subset(p.carrier)};yes;{format_subset(p.i0)}|{format_subset(p.i1)}"
        for p in primes
    ]
    lines = [f"{len(rows)} Hu-Liu prime ideals"]
    return _emit_report(args, f"spectrum {args.file}", lines, rows, "pass")


def _cmd_integral(args: argparse.Namespace) -> int:
    structure = validate_lcrng(_parse_lcrng_file(args.file))
    subset = (
        parse_subset(args.subset, structure.order)
        if args.subset
        else frozenset(range(structure.order))
    )
    rows = []
    all_found = True
    for u in structure.elements():
        w0, w1 = graded_witnesses(
            structure, subset, u, max_degree=args.max_degree, strict=not args.lenient
        )
        d0 = str(w0.degree) if w0 else "-"
        d1 = str(w1.degree) if w1 else "-"
        all_found = all_found and w0 is not None and w1 is not None
        rows.append(f"{u};{d0};{d1}")
    lines = [f"subrng = {format_subset(subset)}"]
    verdict = "pass" if all_found else "fail"
    return _emit_report(args, f"integral {args.file}", lines, rows, verdict)


def _cmd_lying_over(args: argparse.Namespace) -> int:
    structure = validate_lcrng(_parse_lcrng_file(args.file))
    subset = (
        parse_subset(args.subset, structure.order)
        if args.subset
        else frozenset(range(structure.order))
    )
    pair = embed_check(structure, subset, strict=not args.lenient)
    report = verify_lying_over_all(pair)
    rows = []
    for row in report.rows:
        ok = bool(row.witnesses) and row.maximal_meets_p and row.maximal_all_prime
        rows.append(
            f"{format_subset(row.p)};"
            f"{'|'.join(format_subset(w) for w in row.witnesses)};"
            f"{'|'.join(format_subset(m) for m in row.maximal)};"
            f"{'yes' if ok else 'no'}"
        )
    lines = [f"subrng = {format_subset(subset)}", f"{len(report.rows)} primes checked"]
    return _emit_report(
        args, f"lying-over {args.file}", lines, rows, "pass" if report.passed else "fail"
    )


def _ring_from_spec(spec: str) -> FiniteCommRing:
    if not spec.startswith("zmod:"):
        raise InputError("bad-ring-spec", f"expected zmod:N or zmod:NxM..., got {spec!r}")
    try:
        orders = [int(p) for p in spec.split(":", 1)[1].split("x")]
    except ValueError as exc:
        raise InputError("bad-ring-spec", f"cannot parse {spec!r}") from exc
    rings = [zmod(n) for n in orders]
    ring = rings[0]
    for other in rings[1:]:
        ring = ring_product(ring, other)
    return ring


def _resolve_hom(a_spec: str, b_spec: str, hom: str):
    a = _ring_from_spec(a_spec)
    b = _ring_from_spec(b_spec)
    a_orders = a_spec.split(":", 1)[1].split("x")
    if hom == "auto":
        hom = "reduction" if len(a_orders) == 1 else ""
        if not hom:
            raise InputError("bad-hom-spec", "product ring A needs an explicit --hom p1/p2")
    if hom == "id":
        if a != b:
            raise InputError("bad-hom-spec", "--hom id needs identical rings")
        return a, b, identity_hom(a)
    if hom == "reduction":
        return a, b, reduction_hom(a, b)
    if hom in ("p1", "p2"):
        if len(a_orders) != 2:
            raise InputError("bad-hom-spec", "--hom p1/p2 needs a two-factor product ring A")
        first, second = zmod(int(a_orders[0])), zmod(int(a_orders[1]))
        which = 0 if hom == "p1" else 1
        phi = projection_hom(a, first, second, which)
        if phi.target != b:
            raise InputError("bad-hom-spec", "projection target does not match --b")
        return a, b, phi
    raise InputError("bad-hom-spec", f"unknown hom {hom!r}")


def _cmd_construct(args: argparse.Namespace) -> int:
    if args.family != "semidirect":
        raise InputError("bad-family", f"unknown family {args.family!r}")
    a, b, phi = _resolve_hom(args.a, args.b, args.hom)
    raw = semidirect_null(a, b, phi, name=args.name or "")
    structure = validate_lcrng(raw)
    sys.stdout.write(emit_structure(structure))
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    group = _ring_from_spec(args.group).group
    structures = enumerate_lcrngs(
        group, max_candidates=args.max_candidates, dedup=not args.no_dedup
    )
    rows = [
        f"{i};{s.left_identity};{format_subset(s.halo)}" for i, s in enumerate(structures)
    ]
    lines = [f"{len(structures)} structures on a group of order {group.order}"]
    code = _emit_report(args, f"enumerate {args.group}", lines, rows, "pass")
    if args.emit:
        for s in structures:
            sys.stdout.write(emit_structure(s))
    return code


def _cmd_bridge(args: argparse.Namespace) -> int:
    structure = validate_lcrng(_parse_lcrng_file(args.file))
    sys.stdout.write(emit_structure(from_lcrng(structure)))
    return 0


def _cmd_hl_verify(args: argparse.Namespace) -> int:
    structure = parse_structure(_read_file(args.file))
    if not isinstance(structure, RawHlRing):
        raise InputError("kind-mismatch", f"{args.file} does not hold an hlring document")
    violations = hlring_violations(structure)
    lines, rows, ok = _axiom_lines(HLRING_CHECKS, violations)
    if ok:
        ring = validate_hlring(structure)
        lines.append(f"halo = {format_subset(ring.halo)}")
        lines.append(f"hl-commutative: {'yes' if is_hl_commutative(ring) else 'no'}")
        for name, holds in diassociativity_report(ring).items():
            flag = "yes" if holds else "no"
            lines.append(f"diassociativity {name}: {flag}")
            rows.append(f"{name};{flag}")
    return _emit_report(
        args, f"hl-verify {args.file}", lines, rows, "pass" if ok else "fail", text_rows=False
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="huliu",
        description="Workbench for left commutative rngs and rings with the Hu-Liu product.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("text", "csv"), default="text")
        return p

    for name, func, helptext in (
        ("verify", _cmd_verify, "validate a structure file against every axiom"),
        ("decompose", _cmd_decompose, "print the grading and per-element components"),
        ("ideals", _cmd_ideals, "enumerate ideals with primality flags"),
        ("spectrum", _cmd_spectrum, "list the Hu-Liu prime ideals"),
        ("bridge", _cmd_bridge, "emit the Hu-Liu ring built from an lcrng file"),
        ("hl-verify", _cmd_hl_verify, "validate a Hu-Liu ring file"),
    ):
        p = add(name, func, help=helptext)
        p.add_argument("file")

    p = add("integral", _cmd_integral, help="minimal monic witness degrees over a subrng")
    p.add_argument("file")
    p.add_argument("--subset", default="", help="subrng as comma-separated indices")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--lenient", action="store_true", help="relaxed subrng reading")

    p = add("lying-over", _cmd_lying_over, help="replay the lying-over theorem on a pair")
    p.add_argument("file")
    p.add_argument("--subset", default="", help="subrng as comma-separated indices")
    p.add_argument("--lenient", action="store_true")

    p = add("construct", _cmd_construct, help="build a structure from a family recipe")
    p.add_argument("--family", default="semidirect")
    p.add_argument("--a", required=True, help="ring spec, e.g. zmod:4 or zmod:2x2")
    p.add_argument("--b", required=True, help="ring spec, e.g. zmod:2")
    p.add_argument("--hom", default="auto", help="auto | id | reduction | p1 | p2")
    p.add_argument("--name", default="")

    p = add("enumerate", _cmd_enumerate, help="census of structures on an abelian group")
    p.add_argument("--group", required=True, help="group spec, e.g. zmod:2x2")
    p.add_argument("--max-candidates", type=int, default=None)
    p.add_argument("--no-dedup", action="store_true")
    p.add_argument("--emit", action="store_true", help="also print each structure document")

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationFailure as exc:
        for v in exc.violations:
            print(f"violation {v}")
        print("verdict: fail")
        return 1
    except TheoremAlarm as exc:
        print(f"alarm: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())
