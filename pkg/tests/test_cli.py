"""Command-line frontend: golden invocations, exit codes, output formats.

Every invocation runs in-process through ``run(argv)``; stdout/stderr are
captured with capsys.  The golden set pins exit codes for well-formed and
malformed calls, the headline report lines, CSV round-tripping, and the
agreement of numeric facts between text and CSV modes.
"""

import csv
import io

import pytest

from shimsurf.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# bernoulli


def test_bernoulli_integer(capsys):
    code, out, _ = invoke(capsys, "bernoulli", "--d", "6")
    assert code == 0 and out == "12\n"


def test_bernoulli_fractional(capsys):
    code, out, _ = invoke(capsys, "bernoulli", "--d", "5")
    assert code == 0 and out == "4/5\n"


def test_bernoulli_rejects_non_squarefree(capsys):
    code, out, err = invoke(capsys, "bernoulli", "--d", "12")
    assert code == 2 and out == "" and "squarefree" in err


# ---------------------------------------------------------------------------
# surface


def test_surface_golden_admissible(capsys):
    code, out, _ = invoke(capsys, "surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "ADMISSIBLE of type 24; p_g(X) = 5"
    assert "π₁(X/σ) finite" in lines
    assert "index = 12" in lines
    assert "euler number = 24" in lines
    assert "g = 5: K² = 4, c₂ = 8, p_g = 0, q = 0, general type: yes" in out


def test_surface_torsion_control(capsys):
    code, out, _ = invoke(capsys, "surface", "--d", "17", "--ram", "2", "--subgroup", "borel:17")
    assert code == 0
    assert "index = 18" in out
    assert "euler number = 12" in out
    assert out.splitlines()[-1] == "NOT ADMISSIBLE (torsion of order 2)"


def test_surface_principal_control(capsys):
    code, out, _ = invoke(capsys, "surface", "--d", "7", "--ram", "3", "--subgroup", "principal:2")
    assert code == 0
    assert "index = 6" in out and "euler number = 32" in out
    assert "NOT ADMISSIBLE" in out.splitlines()[-1]


def test_surface_full_group(capsys):
    code, out, _ = invoke(capsys, "surface", "--d", "33", "--ram", "2", "--subgroup", "full")
    assert code == 0
    assert "index = 1" in out
    assert "euler number = 2" in out
    assert "NOT ADMISSIBLE" in out.splitlines()[-1]


def test_surface_rejects_nonsplit_ram(capsys):
    code, out, err = invoke(capsys, "surface", "--d", "33", "--ram", "3", "--subgroup", "full")
    assert code == 2 and out == ""
    assert "does not split" in err


def test_surface_rejects_level_over_ramification(capsys):
    code, _, err = invoke(capsys, "surface", "--d", "33", "--ram", "2", "--subgroup", "borel:2")
    assert code == 2 and "ramification" in err


def test_surface_rejects_composite_level(capsys):
    code, _, err = invoke(capsys, "surface", "--d", "33", "--ram", "2", "--subgroup", "borel:9")
    assert code == 2 and "prime" in err


def test_surface_rejects_unknown_subgroup(capsys):
    code, _, err = invoke(capsys, "surface", "--d", "33", "--ram", "2", "--subgroup", "parabolic:3")
    assert code == 2 and "unknown subgroup" in err


def test_surface_csv_round_trip_and_parity(capsys):
    code, text_out, _ = invoke(capsys, "surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11")
    assert code == 0
    code, csv_out, _ = invoke(
        capsys, "surface", "--d", "33", "--ram", "2", "--subgroup", "borel:11", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(csv_out)))
    assert len(rows) == 2
    record = dict(zip(rows[0], rows[1]))
    assert record["index"] == "12"
    assert record["euler_num"] == "24" and record["euler_den"] == "1"
    assert record["admissible_type"] == "24"
    assert record["torsion"] == "free"
    assert record["pg"] == "5"
    # the same numeric facts appear in the text report
    assert "index = 12" in text_out and "euler number = 24" in text_out
    assert "p_g = 5" in text_out
    # byte-identical re-serialization
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    assert buffer.getvalue() == csv_out


# ---------------------------------------------------------------------------
# quotient


def test_quotient_golden_line(capsys):
    code, out, _ = invoke(capsys, "quotient", "--e", "24", "--g", "5")
    assert code == 0
    assert out == "K² = 4, c₂ = 8, p_g = 0, q = 0, general type: yes\n"


def test_quotient_table(capsys):
    code, out, _ = invoke(capsys, "quotient", "--e", "24")
    assert code == 0
    assert "g = 3: K² = 14, c₂ = 10, p_g = 1, q = 0, general type: yes" in out
    assert "g = 5: K² = 4, c₂ = 8, p_g = 0, q = 0, general type: yes" in out


def test_quotient_undetermined_beyond_bound(capsys):
    code, out, _ = invoke(capsys, "quotient", "--e", "40", "--g", "9")
    assert code == 0
    assert "general type: undetermined by the sufficient bound" in out


def test_quotient_invalid_genus(capsys):
    code, _, err = invoke(capsys, "quotient", "--e", "24", "--g", "4")
    assert code == 2 and "non-integral geometric genus" in err


def test_quotient_csv(capsys):
    code, out, _ = invoke(capsys, "quotient", "--e", "24", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["e", "g", "Ksq", "c2", "pg", "q", "general_type"]
    assert rows[1:] == [
        ["24", "3", "14", "10", "1", "0", "yes"],
        ["24", "5", "4", "8", "0", "0", "yes"],
    ]


# ---------------------------------------------------------------------------
# curve


def test_curve_golden(capsys):
    code, out, _ = invoke(capsys, "curve", "--ram", "2,5", "--index", "12")
    assert code == 0
    assert out.splitlines()[:2] == ["chi = -8", "genus = 5"]


def test_curve_orbifold_case(capsys):
    code, out, _ = invoke(capsys, "curve", "--ram", "2,3", "--index", "1")
    assert code == 0
    assert "chi = -1/3" in out and "genus = undefined" in out


def test_curve_invalid_ram(capsys):
    code, _, err = invoke(capsys, "curve", "--ram", "2", "--index", "3")
    assert code == 2 and err != ""


# ---------------------------------------------------------------------------
# search


def test_search_text_summary(capsys):
    code, out, _ = invoke(capsys, "search")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "rows: 51 (20 candidates, 31 pruned)"
    assert lines[-1] == "reference classification: 14 matched, 0 missing, 6 beyond"


def test_search_csv_round_trip(capsys):
    code, out, _ = invoke(capsys, "search", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == [
        "D", "d", "B2_num", "B2_den", "e", "ram_primes", "index", "status", "reason",
    ]
    assert len(rows) == 52
    body = rows[1:]
    assert sum(1 for r in body if r[7] == "Candidate") == 20
    matched = [r for r in body if r[8] == "matches the reference classification"]
    assert len(matched) == 14
    # spot anchors: first matched row and the fractional-Bernoulli prune
    assert ["17", "17", "8", "1", "12", "2", "18", "Candidate"] == matched[0][:8]
    prune = [r for r in body if r[0] == "5"]
    assert prune == [
        ["5", "5", "4", "5", "20", "11", "3", "Pruned",
         "order 2 torsion, 2 does not divide index 3"]
    ]
    buffer = io.StringIO()
    csv.writer(buffer, lineterminator="\n").writerows(rows)
    assert buffer.getvalue() == out


def test_search_type_filter_and_parity(capsys):
    code, csv_out, _ = invoke(capsys, "search", "--e", "24", "--format", "csv")
    assert code == 0
    body = list(csv.reader(io.StringIO(csv_out)))[1:]
    code, text_out, _ = invoke(capsys, "search", "--e", "24")
    assert code == 0
    text_rows = [line for line in text_out.splitlines() if line.startswith("D=")]
    assert len(body) == len(text_rows) == 8
    for row in body:
        assert f"D={row[0]} " in text_out
        assert f"index={row[6]} " in text_out


def test_search_rejects_bad_types(capsys):
    code, _, err = invoke(capsys, "search", "--e", "10")
    assert code == 2 and "multiples of 4" in err
    code, _, err = invoke(capsys, "search", "--e", "12,x")
    assert code == 2 and "comma-separated integers" in err


# ---------------------------------------------------------------------------
# quartic


def test_quartic_golden_admissible(capsys):
    code, out, _ = invoke(
        capsys,
        "quartic", "--poly", "1,-1,-3,1,1", "--subfield", "5",
        "--subgroup", "unipotent:29", "--zeta-bound", "1000",
        "--infinite-conjugate-assert",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "polynomial = x^4 - x^3 - 3*x^2 + x + 1"
    assert "field discriminant = 725" in lines
    assert "index = 420" in lines
    assert "euler number of the full group = 1/15" in lines
    assert lines[-1] == "ADMISSIBLE of type 28; p_g(X) = 6"


def test_quartic_full_group_not_admissible(capsys):
    code, out, _ = invoke(
        capsys,
        "quartic", "--poly", "1,-1,-3,1,1", "--subfield", "5",
        "--subgroup", "full", "--zeta-bound", "1000",
        "--infinite-conjugate-assert",
    )
    assert code == 0
    assert "NOT ADMISSIBLE" in out.splitlines()[-1]
    assert "torsion of order 2" in out.splitlines()[-1]


def test_quartic_without_assertion_fails_involution(capsys):
    code, out, _ = invoke(
        capsys,
        "quartic", "--poly", "1,-1,-3,1,1", "--subfield", "5",
        "--subgroup", "unipotent:29", "--zeta-bound", "1000",
    )
    assert code == 0
    assert "involution of second kind = no" in out
    assert "NOT ADMISSIBLE" in out.splitlines()[-1]


def test_quartic_rejects_reducible_poly(capsys):
    code, _, err = invoke(
        capsys, "quartic", "--poly", "1,0,0,0,-1", "--subfield", "5", "--subgroup", "full"
    )
    assert code == 2 and "reducible" in err


def test_quartic_rejects_wrong_coefficient_count(capsys):
    code, _, err = invoke(
        capsys, "quartic", "--poly", "1,2,3", "--subfield", "5", "--subgroup", "full"
    )
    assert code == 2 and "five comma-separated" in err


# ---------------------------------------------------------------------------
# global behaviors


def test_unknown_subcommand_and_missing_args(capsys):
    assert invoke(capsys, "nosuch")[0] == 2
    assert invoke(capsys, "bernoulli")[0] == 2  # missing --d
    assert invoke(capsys, "surface", "--d", "33")[0] == 2  # missing flags
    assert invoke(capsys, "quotient", "--e", "not-a-number")[0] == 2


def test_help_exits_zero(capsys):
    assert invoke(capsys, "--help")[0] == 0
    assert invoke(capsys, "search", "--help")[0] == 0
