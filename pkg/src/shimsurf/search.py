"""Bounded classification search over real quadratic base fields.

For each admissible surface type e in {12, 16, ..., 36} the exact Euler
number identity  e = I * (B/12) * prod (p - 1)^2  (B the weight-2
generalized Bernoulli number of the field character, one factor per
rational prime under a conjugate pair of ramified places, I the subgroup
index) bounds everything: B/12 <= 36 caps the field discriminant at 372,
and (p - 1)^2 <= 12 e / B caps the usable split primes.  Enumeration
emits every (discriminant, type, ramification, index) solution; pruning
then discards rows whose index is not divisible by the order of some
torsion element certified in the full unit group, since a torsion-free
subgroup's index must be divisible by every such order.  The survivors
are diffed against the embedded fourteen-row classification table.

The necessary conditions implemented here are not complete: a handful of
rows (at discriminants 21, 33, 41, 57, 65) pass all of them yet admit no
torsion-free group; they are reported as extras rather than suppressed.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from itertools import combinations
from math import isqrt

from .exact import primes_up_to
from .quadfield import (
    Splitting,
    bernoulli2,
    field_from_disc,
    fundamental_discriminants,
    primes_above,
    splitting_type,
)
from .torsion import gamma1_torsion_orders

__all__ = [
    "DEFAULT_TYPES",
    "DISCRIMINANT_BOUND",
    "RowStatus",
    "CandidateRow",
    "enumerate_candidates",
    "prune_by_torsion",
    "REFERENCE_ROWS",
    "DiffReport",
    "compare_to_reference",
    "run_pipeline",
]

DEFAULT_TYPES = (12, 16, 20, 24, 28, 32, 36)

# Analytic cutoff: B >= 3 d^(3/2) / 50 forces B/12 > 36 for every
# fundamental discriminant beyond this, so no type in range survives
# (the largest discriminant actually attaining B/12 <= 36 is 317).
DISCRIMINANT_BOUND = 372


class RowStatus(Enum):
    CANDIDATE = "Candidate"
    PRUNED = "Pruned"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class CandidateRow:
    """One solution of the Euler number identity: a field (by fundamental
    discriminant), a surface type, the rational primes under the ramified
    conjugate pairs, and the subgroup index."""

    D: int
    B2: Fraction
    e: int
    ram_primes: tuple[int, ...]
    index: int
    status: RowStatus = RowStatus.CANDIDATE
    reason: str = ""

    def __post_init__(self) -> None:
        product = 1
        for p in self.ram_primes:
            product *= (p - 1) ** 2
        assert Fraction(self.e) == self.index * self.B2 / 12 * product, (
            "row violates the exact Euler number identity"
        )

    @property
    def key(self) -> tuple[int, int, tuple[int, ...], int]:
        return (self.e, self.D, self.ram_primes, self.index)


def enumerate_candidates(e_values: tuple[int, ...] = DEFAULT_TYPES) -> list[CandidateRow]:
    """All exact solutions of the identity over fundamental discriminants
    5 <= D <= 372, nonempty sets of split rational primes, and positive
    integer indices, for the requested types; sorted by (e, D, index)."""
    types = sorted(set(e_values))
    if not types or any(e % 4 != 0 or not 12 <= e <= 36 for e in types):
        raise ValueError(f"surface types must be multiples of 4 in [12, 36], got {e_values}")
    rows: list[CandidateRow] = []
    e_max = max(types)
    for disc in fundamental_discriminants(5, DISCRIMINANT_BOUND):
        bern = bernoulli2(disc)
        if bern / 12 > 36:
            continue
        field = field_from_disc(disc)
        # any usable prime satisfies (p - 1)^2 <= 12 e_max / B
        r_max = Fraction(12 * e_max) / bern
        prime_cap = 1 + isqrt(int(r_max))
        split = [p for p in primes_up_to(prime_cap) if splitting_type(field, p) is Splitting.SPLIT]
        for e in types:
            ratio = Fraction(12 * e) / bern
            for size in range(1, len(split) + 1):
                for subset in combinations(split, size):
                    product = 1
                    for p in subset:
                        product *= (p - 1) ** 2
                    index = ratio / product
                    if index >= 1 and index.denominator == 1:
                        rows.append(
                            CandidateRow(D=disc, B2=bern, e=e, ram_primes=subset, index=int(index))
                        )
    rows.sort(key=lambda r: (r.e, r.D, r.index, r.ram_primes))
    return rows


def prune_by_torsion(rows: list[CandidateRow]) -> list[CandidateRow]:
    """Keep a row Candidate exactly when every certified torsion order of
    the full unit group divides its index; otherwise mark it Pruned with
    the smallest failing order."""
    orders_cache: dict[tuple[int, tuple[int, ...]], frozenset[int]] = {}
    out: list[CandidateRow] = []
    for row in rows:
        cache_key = (row.D, row.ram_primes)
        orders = orders_cache.get(cache_key)
        if orders is None:
            field = field_from_disc(row.D)
            ram = [q for p in row.ram_primes for q in primes_above(field, p)]
            orders = gamma1_torsion_orders(field, ram)
            orders_cache[cache_key] = orders
        failing = sorted(m for m in orders if row.index % m != 0)
        if failing:
            m = failing[0]
            out.append(
                replace(
                    row,
                    status=RowStatus.PRUNED,
                    reason=f"order {m} torsion, {m} does not divide index {row.index}",
                )
            )
        else:
            out.append(row)
    return out


# The fourteen classification rows: (e, D, rational primes under the
# ramification, index).
REFERENCE_ROWS: tuple[tuple[int, int, tuple[int, ...], int], ...] = (
    (12, 17, (2,), 18),
    (16, 13, (3,), 12),
    (16, 17, (2,), 24),
    (20, 17, (2,), 30),
    (24, 8, (7,), 4),
    (24, 13, (3,), 18),
    (24, 17, (2,), 36),
    (24, 33, (2,), 12),
    (28, 17, (2,), 42),
    (32, 13, (3,), 24),
    (32, 17, (2,), 48),
    (32, 28, (3,), 6),
    (36, 17, (2,), 54),
    (36, 33, (2,), 18),
)


@dataclass(frozen=True)
class DiffReport:
    """Surviving rows classified against the embedded reference table.
    Extras carry the caveat that only necessary conditions are checked."""

    matched: tuple[CandidateRow, ...]
    missing: tuple[tuple[int, int, tuple[int, ...], int], ...]
    extras: tuple[CandidateRow, ...]

    @property
    def counts(self) -> tuple[int, int, int]:
        return (len(self.matched), len(self.missing), len(self.extras))


def compare_to_reference(rows: list[CandidateRow]) -> DiffReport:
    """Diff the Candidate rows against the embedded reference table."""
    reference = set(REFERENCE_ROWS)
    candidates = [r for r in rows if r.status is RowStatus.CANDIDATE]
    found = {r.key for r in candidates}
    matched = tuple(
        replace(r, reason="matches the reference classification")
        for r in candidates
        if r.key in reference
    )
    extras = tuple(
        replace(r, reason="beyond the reference classification: passes the documented necessary conditions only")
        for r in candidates
        if r.key not in reference
    )
    missing = tuple(t for t in REFERENCE_ROWS if t not in found)
    return DiffReport(matched=matched, missing=missing, extras=extras)


def run_pipeline(
    e_values: tuple[int, ...] = DEFAULT_TYPES,
) -> tuple[list[CandidateRow], DiffReport]:
    """Enumerate, prune, and diff; returns every row (pruned ones carry
    their pruning reason, surviving ones their classification against the
    reference) together with the diff report."""
    pruned = prune_by_torsion(enumerate_candidates(e_values))
    report = compare_to_reference(pruned)
    annotated_reason = {r.key: r.reason for r in report.matched + report.extras}
    rows = [
        replace(r, reason=annotated_reason[r.key]) if r.status is RowStatus.CANDIDATE else r
        for r in pruned
    ]
    return rows, report
