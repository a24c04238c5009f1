"""Command-line frontend for the arithmetic pipelines.

Subcommands mirror the library layers: ``bernoulli`` prints the exact
B_2 value of a real quadratic field, ``search`` runs the bounded
classification over real quadratic fields, ``surface`` produces the full
admissibility report for a congruence subgroup over a quadratic base,
``quotient`` prints the numerical invariants of an involution quotient,
``curve`` the Euler characteristic and genus of a quotient curve, and
``quartic`` the admissibility report over a totally real quartic base
(where the Euler number rests on a Dedekind zeta Euler-product estimate).

All output is deterministic.  Text mode prints ``key = value`` report
lines; ``--format csv`` prints comma-separated rows with a header, stable
column order, and ``\\n`` line endings, so emitted CSV re-serializes
byte-identically.  Exit codes: 0 on success, 2 on invalid input (with a
diagnostic on standard error), 1 on an internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import sys
from enum import Enum
from fractions import Fraction

from .exact import is_prime
from .geometry import (
    QuotientInvariants,
    quotient_invariants,
    quotient_table,
    shimura_curve_genus,
)
from .quadfield import field_from_disc, primes_above, quad_field
from .quartic import choose_level_prime, quartic_new, zeta2_euler_product
from .search import DEFAULT_TYPES, RowStatus, run_pipeline
from .shimura import (
    AdmissibilityReport,
    SubgroupKind,
    SubgroupSpec,
    admissibility_report,
    euler_number_quadratic,
    quadratic_algebra,
    quartic_algebra,
)
from .torsion import Verdict


class OutputFormat(Enum):
    TEXT = "text"
    CSV = "csv"


# ---------------------------------------------------------------------------
# small parsing helpers (all raise ValueError -> exit code 2)


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated integers, got {text!r}") from None


def _parse_primes(text: str, flag: str) -> list[int]:
    values = _parse_int_list(text, flag)
    for p in values:
        if not is_prime(p):
            raise ValueError(f"{flag} entries must be rational primes, got {p}")
    return values


def _parse_subgroup(text: str) -> tuple[SubgroupKind, int | None]:
    """``full`` or ``<kind>:<rational prime>`` for borel/unipotent/principal."""
    kind_name, _, level_text = text.partition(":")
    try:
        kind = SubgroupKind(kind_name)
    except ValueError:
        raise ValueError(
            f"unknown subgroup {text!r}; expected full, borel:<p>, "
            "unipotent:<p>, or principal:<p>"
        ) from None
    if kind is SubgroupKind.FULL:
        if level_text:
            raise ValueError("the full unit group takes no level prime")
        return kind, None
    if not level_text:
        raise ValueError(f"subgroup kind {kind.value!r} needs a level prime, e.g. {kind.value}:11")
    p = int(level_text) if level_text.lstrip("-").isdigit() else None
    if p is None or not is_prime(p):
        raise ValueError(f"the level must be a rational prime, got {level_text!r}")
    return kind, p


def _csv_writer() -> csv.writer:
    return csv.writer(sys.stdout, lineterminator="\n")


# ---------------------------------------------------------------------------
# shared rendering


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _general_type_text(flag: bool | None) -> str:
    if flag is None:
        return "undetermined by the sufficient bound"
    return _yes_no(flag)


def _general_type_csv(flag: bool | None) -> str:
    return "undetermined" if flag is None else _yes_no(flag)


def _quotient_line(inv: QuotientInvariants) -> str:
    return (
        f"K² = {inv.Ksq}, c₂ = {inv.c2}, p_g = {inv.pg}, q = {inv.q}, "
        f"general type: {_general_type_text(inv.general_type)}"
    )


def _check_line(label: str, check) -> str:
    return f"{label} = {_yes_no(check.ok)} ({check.reason})"


def _subgroup_line(spec: SubgroupSpec) -> str:
    if spec.kind is SubgroupKind.FULL:
        return "subgroup = full unit group"
    q = spec.level
    splitting = getattr(q, "splitting", None)
    if splitting is not None:
        detail = splitting.value
    else:
        detail = f"residue degree {q.residue_degree}, ramification index {q.ramification_index}"
    return f"subgroup = {spec.kind.value}, level over {q.p} (norm {q.norm}, {detail})"


def _failure_summary(report: AdmissibilityReport) -> str:
    parts = []
    if not report.involution_ok:
        parts.append("no involution of second kind")
    if not report.invariant_order_ok:
        parts.append("no conjugation-invariant maximal order")
    if not report.level_invariance_ok:
        parts.append("level not invariant under conjugation")
    if report.torsion.verdict is Verdict.TORSION:
        parts.append(f"torsion of order {report.torsion.order}")
    elif report.torsion.verdict is Verdict.UNKNOWN:
        parts.append("torsion undecided")
    e = report.euler
    if e is None:
        parts.append("Euler number not recognized as a rational")
    elif not (e.denominator == 1 and e > 0 and e % 4 == 0):
        parts.append(f"Euler number {e} is not a positive integer divisible by 4")
    return "; ".join(parts)


def _report_tail_lines(report: AdmissibilityReport, with_quotients: bool) -> list[str]:
    """Torsion, surface invariants, and the final verdict line."""
    lines = [f"torsion = {report.torsion.verdict.value} ({report.torsion.reason})"]
    if report.admissible_type is not None:
        s = report.surface
        lines.append(f"surface: c₁² = {s.c1sq}, c₂ = {s.e}, χ = {s.chi}, p_g = {s.pg}, q = {s.q}")
        if with_quotients:
            lines.append(f"quotient invariants for e = {s.e}:")
            for g, inv in quotient_table(s.e):
                lines.append(f"  g = {g}: {_quotient_line(inv)}")
            lines.append("π₁(X/σ) finite")
        lines.append(f"ADMISSIBLE of type {report.admissible_type}; p_g(X) = {s.pg}")
    else:
        lines.append(f"NOT ADMISSIBLE ({_failure_summary(report)})")
    return lines


# ---------------------------------------------------------------------------
# subcommands


def _cmd_bernoulli(args: argparse.Namespace) -> int:
    field = quad_field(args.d)
    print(field.bernoulli2())
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    e_values = tuple(_parse_int_list(args.e, "--e")) if args.e else DEFAULT_TYPES
    rows, report = run_pipeline(e_values)
    if OutputFormat(args.format) is OutputFormat.CSV:
        writer = _csv_writer()
        writer.writerow(
            ["D", "d", "B2_num", "B2_den", "e", "ram_primes", "index", "status", "reason"]
        )
        for r in rows:
            writer.writerow(
                [
                    r.D,
                    field_from_disc(r.D).d,
                    r.B2.numerator,
                    r.B2.denominator,
                    r.e,
                    ";".join(str(p) for p in r.ram_primes),
                    r.index,
                    r.status.value,
                    r.reason,
                ]
            )
        return 0
    for r in rows:
        ram = ";".join(str(p) for p in r.ram_primes)
        print(
            f"D={r.D} d={field_from_disc(r.D).d} B2={r.B2} e={r.e} "
            f"ram={ram} index={r.index} {r.status.value}: {r.reason}"
        )
    n_candidates = sum(1 for r in rows if r.status is RowStatus.CANDIDATE)
    print(f"rows: {len(rows)} ({n_candidates} candidates, {len(rows) - n_candidates} pruned)")
    matched, missing, extras = report.counts
    print(f"reference classification: {matched} matched, {missing} missing, {extras} beyond")
    return 0


def _build_quadratic_report(args: argparse.Namespace) -> tuple:
    field = quad_field(args.d)
    ram = _parse_primes(args.ram, "--ram")
    algebra = quadratic_algebra(field, ram)
    kind, level_p = _parse_subgroup(args.subgroup)
    if kind is SubgroupKind.FULL:
        spec = SubgroupSpec(kind, None)
    else:
        spec = SubgroupSpec(kind, primes_above(field, level_p)[0])
    return field, algebra, admissibility_report(algebra, spec)


def _cmd_surface(args: argparse.Namespace) -> int:
    field, algebra, report = _build_quadratic_report(args)
    euler_full = euler_number_quadratic(algebra, 1)
    if OutputFormat(args.format) is OutputFormat.CSV:
        s = report.surface
        writer = _csv_writer()
        writer.writerow(
            [
                "d", "disc", "ram_primes", "subgroup", "level_norm", "index",
                "involution", "invariant_order", "level_invariance",
                "euler_num", "euler_den", "torsion", "torsion_order",
                "admissible_type", "c1sq", "c2", "chi", "pg", "q",
            ]
        )
        writer.writerow(
            [
                field.d,
                field.disc,
                ";".join(str(p) for p in algebra.ram_rational_primes),
                report.spec.kind.value,
                "" if report.spec.level is None else report.spec.level.norm,
                report.index,
                _yes_no(report.involution_ok.ok),
                _yes_no(report.invariant_order_ok.ok),
                _yes_no(report.level_invariance_ok.ok),
                report.euler.numerator,
                report.euler.denominator,
                report.torsion.verdict.value,
                "" if report.torsion.order is None else report.torsion.order,
                "" if report.admissible_type is None else report.admissible_type,
                "" if s is None else s.c1sq,
                "" if s is None else s.e,
                "" if s is None else s.chi,
                "" if s is None else s.pg,
                "" if s is None else s.q,
            ]
        )
        return 0
    ram = ", ".join(str(p) for p in report.algebra.ram_rational_primes)
    lines = [
        f"field = Q(sqrt({field.d}))",
        f"discriminant = {field.disc}",
        f"ramification = conjugate pairs over {ram}",
        _subgroup_line(report.spec),
        f"index = {report.index}",
        _check_line("involution of second kind", report.involution_ok),
        _check_line("invariant maximal order", report.invariant_order_ok),
        _check_line("level invariance", report.level_invariance_ok),
        f"euler number of the full group = {euler_full}",
        f"euler number = {report.euler}",
    ]
    lines.extend(_report_tail_lines(report, with_quotients=True))
    print("\n".join(lines))
    return 0


def _cmd_quotient(args: argparse.Namespace) -> int:
    if args.g is not None:
        table = [(args.g, quotient_invariants(args.e, args.g))]
    else:
        table = quotient_table(args.e)
    if OutputFormat(args.format) is OutputFormat.CSV:
        writer = _csv_writer()
        writer.writerow(["e", "g", "Ksq", "c2", "pg", "q", "general_type"])
        for g, inv in table:
            writer.writerow(
                [args.e, g, inv.Ksq, inv.c2, inv.pg, inv.q, _general_type_csv(inv.general_type)]
            )
        return 0
    if args.g is not None:
        print(_quotient_line(table[0][1]))
        return 0
    print(f"fixed-curve genera and quotient invariants for e = {args.e}:")
    for g, inv in table:
        print(f"g = {g}: {_quotient_line(inv)}")
    return 0


def _cmd_curve(args: argparse.Namespace) -> int:
    primes = _parse_primes(args.ram, "--ram")
    result = shimura_curve_genus(primes, args.index)
    print(f"chi = {result.chi}")
    print(f"genus = {'undefined' if result.genus is None else result.genus}")
    print(f"note: {result.note}")
    return 0


def _cmd_quartic(args: argparse.Namespace) -> int:
    coeffs = _parse_int_list(args.poly, "--poly")
    if len(coeffs) != 5:
        raise ValueError("--poly takes five comma-separated coefficients c4,c3,c2,c1,c0")
    K = quartic_new(tuple(coeffs), args.subfield)
    algebra = quartic_algebra(K, infinite_conjugate_asserted=args.infinite_conjugate_assert)
    kind, level_p = _parse_subgroup(args.subgroup)
    if kind is SubgroupKind.FULL:
        spec = SubgroupSpec(kind, None)
    else:
        spec = SubgroupSpec(kind, choose_level_prime(K, level_p))
    zeta2, zeta2_error = zeta2_euler_product(K, args.zeta_bound)
    report = admissibility_report(algebra, spec, zeta2=zeta2, zeta2_error=zeta2_error)
    est = report.euler_estimate
    lines = [
        f"polynomial = {_poly_str(coeffs)}",
        f"polynomial discriminant = {K.disc_poly}",
        f"field discriminant = {K.disc}",
        f"subfield = Q(sqrt({K.subfield.d})), discriminant {K.subfield.disc}",
        _subgroup_line(report.spec),
        f"index = {report.index}",
        _check_line("involution of second kind", report.involution_ok),
        _check_line("invariant maximal order", report.invariant_order_ok),
        _check_line("level invariance", report.level_invariance_ok),
        f"zeta_k(2) = {zeta2:.8f} (error bound {zeta2_error:.2e}, "
        f"Euler product over primes < {args.zeta_bound})",
    ]
    if report.euler is not None:
        lines.append(f"euler number of the full group = {report.euler / report.index}")
        lines.append(f"euler number = {report.euler} ({est.note})")
    else:
        lines.append(f"euler number = unrecognized (float {est.value:.8g}; {est.note})")
    lines.extend(_report_tail_lines(report, with_quotients=False))
    print("\n".join(lines))
    return 0


def _poly_str(coeffs: list[int]) -> str:
    degree = len(coeffs) - 1
    terms: list[str] = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        k = degree - i
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        else:
            power = "x" if k == 1 else f"x^{k}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# parser and entry points


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shimsurf",
        description="Arithmetic of quaternionic surfaces with involutions: "
        "exact Bernoulli values, admissibility reports, quotient invariants, "
        "and the bounded classification search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="exact B_2 value of a real quadratic field")
    p.add_argument("--d", type=int, required=True, help="squarefree radicand of Q(sqrt(d))")
    p.set_defaults(func=_cmd_bernoulli)

    p = sub.add_parser("search", help="bounded classification search over quadratic fields")
    p.add_argument("--e", help="comma-separated surface types, multiples of 4 in [12, 36]")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("surface", help="admissibility report over a real quadratic field")
    p.add_argument("--d", type=int, required=True, help="squarefree radicand of Q(sqrt(d))")
    p.add_argument(
        "--ram",
        required=True,
        help="comma-separated rational primes under the ramified conjugate pairs",
    )
    p.add_argument(
        "--subgroup",
        required=True,
        help="full, borel:<p>, unipotent:<p>, or principal:<p>",
    )
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=_cmd_surface)

    p = sub.add_parser("quotient", help="numerical invariants of the involution quotient")
    p.add_argument("--e", type=int, required=True, help="Euler number of the covering surface")
    p.add_argument("--g", type=int, help="arithmetic genus of the fixed curve")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("curve", help="Euler characteristic and genus of a quotient curve")
    p.add_argument("--ram", required=True, help="comma-separated ramified rational primes")
    p.add_argument("--index", type=int, required=True, help="subgroup index in the unit group")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("quartic", help="admissibility report over a totally real quartic field")
    p.add_argument(
        "--poly",
        required=True,
        help="five comma-separated integer coefficients c4,c3,c2,c1,c0 of a monic quartic",
    )
    p.add_argument("--subfield", type=int, required=True, help="radicand of the real quadratic subfield")
    p.add_argument(
        "--subgroup",
        required=True,
        help="full, borel:<p>, unipotent:<p>, or principal:<p> (level = smallest-norm prime over p)",
    )
    p.add_argument("--zeta-bound", type=int, default=100_000, help="Euler product prime bound")
    p.add_argument(
        "--infinite-conjugate-assert",
        action="store_true",
        help="assert that the two ramified infinite places are swapped by conjugation",
    )
    p.set_defaults(func=_cmd_quartic)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return 0 if exc.code in (None, 0) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
