#!/usr/bin/env python3
"""Run the bounded classification search and print the annotated table.

Enumerates every (field, ramification, subgroup-index) combination that
could produce a smooth quotient surface of one of the requested types,
prunes rows with certified torsion, and diffs the survivors against the
reference classification.  Equivalent to `shimsurf search` but kept as a
plain script so the pipeline can be tweaked interactively.

Usage:
    python3 scripts/run_search.py            # all types 12..36
    python3 scripts/run_search.py 24 28      # restrict the surface types
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from shimsurf.search import DEFAULT_TYPES, RowStatus, run_pipeline


def main(argv: list[str]) -> int:
    types = tuple(int(a) for a in argv) or DEFAULT_TYPES
    rows, report = run_pipeline(types)

    print(f"{'e':>3} {'D':>4} {'ram':>6} {'index':>5} {'B2':>8} {'status':<9} reason")
    for row in rows:
        ram = ",".join(str(p) for p in row.ram_primes)
        print(
            f"{row.e:>3} {row.D:>4} {ram:>6} {row.index:>5} "
            f"{str(row.B2):>8} {row.status.value:<9} {row.reason}"
        )

    candidates = sum(1 for r in rows if r.status is RowStatus.CANDIDATE)
    matched, missing, extras = report.counts
    print()
    print(f"rows examined : {len(rows)}")
    print(f"candidates    : {candidates}")
    print(f"matched       : {matched}")
    print(f"missing       : {missing}")
    print(f"extra         : {extras}")
    if report.extras:
        print()
        print("rows passing the necessary conditions but absent from the reference:")
        for row in report.extras:
            ram = ",".join(str(p) for p in row.ram_primes)
            print(f"  e={row.e} D={row.D} ram=({ram}) index={row.index}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv[1:]))
