"""Command-line interface: exit codes, output formats, config handling."""

import csv
import io
import json

import pytest

from supercon.cli import main


def run_cli(capsys, *argv):
    try:
        rc = main(list(argv))
    except SystemExit as exc:  # argparse rejections exit directly
        rc = exc.code
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_list_contains_catalogue_row(capsys):
    rc, out, _ = run_cli(capsys, "list")
    assert rc == 0
    assert "eq1.0 | van Hamme 1997 | all odd p | p² | PROVED" in out


def test_list_single_id_and_status_filter(capsys):
    rc, out, _ = run_cli(capsys, "list", "--id", "eq1.0")
    assert rc == 0 and out.count("\n") == 1
    rc, out, _ = run_cli(capsys, "list", "--status", "conjectural")
    assert rc == 0
    assert "conj4.1.iii" in out and "eq1.0" not in out
    for line in out.strip().splitlines():
        assert line.endswith("CONJECTURAL")


def test_list_unknown_id_exit_2(capsys):
    rc, _, err = run_cli(capsys, "list", "--id", "nosuch")
    assert rc == 2 and "nosuch" in err


def test_sum_examples(capsys):
    rc, out, _ = run_cli(
        capsys, "sum", "--h", "3", "--m", "64", "--poly", "1", "--e", "2", "-p", "13"
    )
    assert rc == 0 and out.strip() == "10 (mod 169)"
    rc, out, _ = run_cli(
        capsys, "sum", "--h", "3", "--m", "64", "--poly", "4,1", "--e", "2", "-p", "13"
    )
    assert rc == 0 and out.strip() == "0 (mod 169)"
    # at p = 3 (mod 4) the (4k+1) sum does not vanish; regression-pin it
    rc, out, _ = run_cli(
        capsys, "sum", "--h", "3", "--m", "64", "--poly", "4,1", "--e", "2", "-p", "11"
    )
    assert rc == 0 and out.strip() == "54 (mod 121)"
    rc, out, _ = run_cli(
        capsys, "sum", "--weight", "harmonic_gap", "--h", "3", "--m", "1",
        "--e", "1", "-p", "11", "--range", "half",
    )
    assert rc == 0 and out.strip() == "0 (mod 11)"


def test_sum_fraction_m_and_errors(capsys):
    rc, out, _ = run_cli(
        capsys, "sum", "--h", "2", "--m", "256/3", "--poly", "1", "--e", "1",
        "-p", "7",
    )
    assert rc == 0 and "(mod 7)" in out
    # p | m is a domain failure, not a crash
    rc, _, err = run_cli(
        capsys, "sum", "--h", "3", "--m", "26", "--poly", "1", "--e", "2", "-p", "13"
    )
    assert rc == 1 and "DenominatorDivisible" in err
    rc, _, err = run_cli(
        capsys, "sum", "--h", "3", "--m", "64", "--poly", "1", "--e", "2", "-p", "9"
    )
    assert rc == 2


def test_represent_examples(capsys):
    rc, out, _ = run_cli(capsys, "represent", "13", "3")
    assert rc == 0 and "(x, y) = (1, 2)" in out
    rc, out, _ = run_cli(
        capsys, "represent", "23", "7", "--convention", "xplusy1mod4"
    )
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert "(4, 1)" in out and "(-4, 1)" in out


def test_represent_failures(capsys):
    rc, _, err = run_cli(capsys, "represent", "5", "7")
    assert rc == 1 and "NotRepresentable" in err
    rc, _, err = run_cli(capsys, "represent", "7", "7")
    assert rc == 1 and "RamifiedPrime" in err
    rc, _, err = run_cli(capsys, "represent", "9", "7")
    assert rc == 2
    rc, _, err = run_cli(capsys, "represent", "17", "2", "--convention", "y1mod4")
    assert rc == 1 and "ConventionUnachievable" in err


def test_verify_no_primes_exit_2(capsys):
    rc, _, err = run_cli(capsys, "verify", "--primes", "4..4")
    assert rc == 2 and "no primes" in err


def test_verify_bad_inputs_exit_2(capsys):
    rc, _, err = run_cli(capsys, "verify", "--checks", "bogus", "--primes", "5..7")
    assert rc == 2
    rc, _, err = run_cli(capsys, "verify", "--primes", "5,6,7")
    assert rc == 2
    rc, _, err = run_cli(
        capsys, "verify", "--checks", "eq1.0", "--primes", "5..7",
        "--override", "eq1.0=9",
    )
    assert rc == 2
    rc, _, err = run_cli(
        capsys, "verify", "--checks", "eq1.0", "--primes", "5..7",
        "--format", "xml",
    )
    assert rc == 2


def test_verify_json_csv_identical_records(capsys):
    argv = ["verify", "--checks", "eq1.0,gauss", "--primes", "5..40"]
    rc, out_json, _ = run_cli(capsys, *argv, "--format", "json")
    assert rc == 0
    doc = json.loads(out_json)
    assert doc["schema"] == 1
    rc, out_csv, _ = run_cli(capsys, *argv, "--format", "csv")
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out_csv)))
    assert len(rows) == len(doc["records"])
    for rec, row in zip(doc["records"], rows):
        for key in ("check", "p", "verdict", "lhs", "rhs", "modulus"):
            want = rec[key]
            got = row[key]
            assert got == ("" if want is None else str(want))


def test_verify_json_summary_roundtrip(capsys):
    rc, out_json, _ = run_cli(
        capsys, "verify", "--checks", "eq1.0,cde,thm1.2.ii.b3",
        "--primes", "5..60", "--format", "json",
    )
    assert rc == 0
    doc = json.loads(out_json)
    recomputed: dict = {}
    for rec in doc["records"]:
        recomputed.setdefault(rec["check"], {})
        verdict = rec["verdict"]
        recomputed[rec["check"]][verdict] = (
            recomputed[rec["check"]].get(verdict, 0) + 1
        )
    assert recomputed == doc["summary"]


def test_verify_exit_codes_for_conjectures(capsys):
    argv = ["verify", "--checks", "thm1.2.ii.b3", "--primes", "5..60"]
    rc, out, _ = run_cli(capsys, *argv)
    assert rc == 0 and "COUNTEREXAMPLE" in out
    rc, _, _ = run_cli(capsys, *argv, "--strict-conjectures")
    assert rc == 1


def test_verify_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    rc, out, _ = run_cli(
        capsys, "verify", "--checks", "gauss", "--primes", "5..30",
        "--format", "json", "--output", str(target),
    )
    assert rc == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["schema"] == 1 and doc["records"]


def test_verify_config_file_and_flag_precedence(tmp_path, capsys):
    conf = tmp_path / "suite.conf"
    conf.write_text(
        "# comment line\n"
        "checks = gauss\n"
        "primes = 5..30   # inline comment\n"
        "format = csv\n"
        "workers = 2\n"
    )
    rc, out, _ = run_cli(capsys, "verify", "--config", str(conf))
    assert rc == 0 and out.startswith("check,p,verdict")
    rc, out, _ = run_cli(
        capsys, "verify", "--config", str(conf), "--format", "json",
        "--primes", "13..13",
    )
    assert rc == 0
    doc = json.loads(out)
    assert [rec["p"] for rec in doc["records"]] == [13]
    rc, _, err = run_cli(capsys, "verify", "--config", str(tmp_path / "absent.conf"))
    assert rc == 2


def test_verify_workers_env(monkeypatch, capsys):
    monkeypatch.setenv("SUPERCON_WORKERS", "2")
    rc, out, _ = run_cli(
        capsys, "verify", "--checks", "eq1.0", "--primes", "5..20",
        "--format", "csv",
    )
    assert rc == 0
    assert out.strip().splitlines()[1:] == [
        "eq1.0,5,PASS,19,19,25",
        "eq1.0,7,PASS,0,0,49",
        "eq1.0,11,PASS,0,0,121",
        "eq1.0,13,PASS,10,10,169",
        "eq1.0,17,PASS,259,259,289",
        "eq1.0,19,PASS,0,0,361",
    ]


def test_verify_human_shows_signed_form(capsys):
    rc, out, _ = run_cli(
        capsys, "verify", "--checks", "eq1.0", "--primes", "5..5"
    )
    assert rc == 0
    # 19 = -6 (mod 25): the signed rendering accompanies the residue
    assert "19 (= -6)" in out


def test_deterministic_output_across_worker_counts(capsys):
    argv = [
        "verify", "--checks", "proved", "--primes", "5..30", "--format", "csv",
    ]
    rc1, out1, _ = run_cli(capsys, *argv)
    rc2, out2, _ = run_cli(capsys, *argv, "--workers", "3")
    assert rc1 == rc2 == 0 and out1 == out2
