import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from opnlab import screener
from opnlab.cli import decimal_str, main, parse_factorization
from opnlab.errors import ParseError

GOLDEN = Path(__file__).parent / "golden" / "table_m9_m20_alpha1.csv"


def run_cli(*args, env_extra=None):
    env = os.environ.copy()
    env.pop("OPNLAB_PRIME_CAP", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "opnlab.cli", *args], capture_output=True, env=env
    )


def test_decimal_str_is_exact_long_division():
    assert decimal_str(Fraction(128, 63), 12) == "2.031746031746"
    assert decimal_str(Fraction(2), 12) == "2.000000000000"
    assert decimal_str(Fraction(1, 3), 4) == "0.3333"
    assert decimal_str(Fraction(-1, 8), 2) == "-0.12"
    assert decimal_str(Fraction(7, 2), 0) == "3"


def test_parse_factorization():
    assert parse_factorization("945").factors == ((3, 3), (5, 1), (7, 1))
    assert parse_factorization("3^3*5*7").factors == ((3, 3), (5, 1), (7, 1))
    assert parse_factorization(" 3^3 * 5*7 ").factors == ((3, 3), (5, 1), (7, 1))
    with pytest.raises(ParseError):
        parse_factorization("")
    with pytest.raises(ParseError):
        parse_factorization("3^^2")
    with pytest.raises(ParseError):
        parse_factorization("pi")


def test_sigma_command_human():
    proc = run_cli("sigma", "3^3*5*7")
    assert proc.returncode == 0
    out = proc.stdout.decode()
    assert "sigma: 1920" in out
    assert "sigma_minus_one: 128/63 (~2.031746031746)" in out
    assert "classification: Abundant" in out


def test_sigma_command_perfect_number():
    proc = run_cli("sigma", "28", "--format", "csv")
    assert proc.returncode == 0
    lines = proc.stdout.decode().splitlines()
    assert lines[0] == "n,factorization,sigma,sigma_minus_one,sigma_minus_one_decimal,classification"
    assert lines[1] == "28,2^2*7,56,2/1,2.000000000000,Perfect"


def test_sigma_command_unit():
    proc = run_cli("sigma", "1")
    assert proc.returncode == 0
    out = proc.stdout.decode()
    assert "sigma: 1" in out
    assert "sigma_minus_one: 1/1" in out
    assert "classification: Deficient" in out


def test_sigma_output_round_trips_through_parser():
    proc = run_cli("sigma", "496")
    line = next(
        l for l in proc.stdout.decode().splitlines() if l.startswith("factorization:")
    )
    text = line.split(":", 1)[1].strip()
    assert parse_factorization(text).n == 496


def test_screen_exit_codes():
    assert run_cli("screen", "3^2*7^2*11^2*13").returncode == 1
    assert run_cli("screen", "2*3").returncode == 1
    assert run_cli("screen", "3^^2").returncode == 2
    assert run_cli("screen", "3^2*4").returncode == 2


def test_screen_reports_each_check():
    proc = run_cli("screen", "3^2*5^3*7^2")
    out = proc.stdout.decode().splitlines()
    assert out[0] == "eulerian_form: Violates[EulerianForm]"
    assert out[1].startswith("perfect: Violates[NotPerfect] witness=")
    assert out[2] == "radical: Violates[TooFewPrimeFactors]"


def test_screen_not_odd():
    proc = run_cli("screen", "2*3")
    assert "eulerian_form: Violates[NotOdd]" in proc.stdout.decode()


def test_screen_all_consistent_exit_zero(monkeypatch, capsys):
    clean = [screener.ScreenVerdict(screener.Outcome.CONSISTENT_SO_FAR)] * 3
    monkeypatch.setattr(screener, "full_screen", lambda f: clean)
    code = main(["screen", "945"])
    assert code == 0
    assert "ConsistentSoFar" in capsys.readouterr().out


def test_radical_alpha2_report():
    proc = run_cli("radical", "3", "5", "7", "--mode", "alpha2")
    assert proc.returncode == 1
    out = proc.stdout.decode()
    assert "outcome: Violates[TripleExclusion357]" in out
    assert "case2: 7657/3675" in out
    assert "case1[q=5]: 494/245" in out


def test_radical_alpha1_consistent_exit_zero():
    proc = run_cli("radical", "3", "5", "7", "--mode", "alpha1")
    assert proc.returncode == 0
    assert "ConsistentSoFar" in proc.stdout.decode()


def test_radical_auto_gates_small_sets():
    proc = run_cli("radical", "3", "5")
    assert proc.returncode == 1
    assert "TooFewPrimeFactors" in proc.stdout.decode()


def test_radical_rejects_bad_primes():
    assert run_cli("radical", "4", "5").returncode == 2
    assert run_cli("radical", "2", "3").returncode == 2
    assert run_cli("radical", "3", "3").returncode == 2


def test_radical_jsonl_carries_cases():
    proc = run_cli("radical", "3", "5", "7", "--mode", "alpha2", "--format", "jsonl")
    record = json.loads(proc.stdout.decode())
    assert record["violated_condition"] == "TripleExclusion357"
    assert record["witness"] == "7657/3675"
    assert record["cases"] == {"case2": "7657/3675", "case1[q=5]": "494/245"}


def test_table_csv_matches_golden_bytes():
    proc = run_cli("table", "--m-min", "9", "--m-max", "20", "--format", "csv")
    assert proc.returncode == 0
    assert proc.stdout == GOLDEN.read_bytes()


def test_table_default_range_is_9_to_20():
    assert run_cli("table", "--format", "csv").stdout == GOLDEN.read_bytes()


def test_table_jsonl_shape():
    proc = run_cli("table", "--m-min", "9", "--m-max", "9", "--format", "jsonl")
    record = json.loads(proc.stdout.decode())
    assert record == {"m": 9, "p_I1": 11, "p_I2": 31, "p_I3": 509, "perisastri": 9}
    assert list(record) == ["m", "p_I1", "p_I2", "p_I3", "perisastri"]


def test_table_rejects_bad_ranges():
    assert run_cli("table", "--m-min", "10", "--m-max", "9").returncode == 2
    assert run_cli("table", "--m-min", "8", "--m-max", "9").returncode == 2


def test_machine_formats_are_byte_deterministic():
    for args in (
        ("table", "--format", "csv"),
        ("table", "--format", "jsonl"),
        ("radical", "3", "5", "7", "--mode", "alpha2", "--format", "csv"),
        ("screen", "945", "--format", "jsonl"),
        ("constants", "--alpha", "1", "--width", "1e-10", "--format", "csv"),
    ):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode


def test_constants_alpha1():
    proc = run_cli("constants", "--alpha", "1", "--width", "1e-10")
    assert proc.returncode == 0
    out = proc.stdout.decode()
    assert "value: ~1.62113893827" in out
    lines = dict(l.split(": ", 1) for l in out.splitlines())
    lo = Fraction(lines["lo"])
    hi = Fraction(lines["hi"])
    # the constant to 19 digits sits inside even this tight bracket
    assert lo < Fraction("1.6211389382774043431") < hi
    assert hi - lo <= Fraction(1, 10**10)


def test_constants_alpha2():
    proc = run_cli("constants", "--alpha", "2", "--width", "1e-10", "--format", "csv")
    assert proc.returncode == 0
    row = proc.stdout.decode().splitlines()[1].split(",")
    assert row[0] == "2"
    assert Fraction(row[1]) < Fraction("1.9015025658987599284") < Fraction(row[2])
    assert row[4].startswith("1.9015025658")


def test_constants_zeta_default_width_is_out_of_reach():
    proc = run_cli("constants", "--alpha", "2")
    assert proc.returncode == 2
    assert b"terms" in proc.stderr


def test_constants_rejects_bad_width():
    assert run_cli("constants", "--width", "0").returncode == 2
    assert run_cli("constants", "--width", "nope").returncode == 2


def test_prime_cap_env_is_honored():
    tight = run_cli("table", env_extra={"OPNLAB_PRIME_CAP": "50"})
    assert tight.returncode == 2
    assert b"cap" in tight.stderr
    loose = run_cli("sigma", "945", env_extra={"OPNLAB_PRIME_CAP": "50"})
    assert loose.returncode == 0
    assert run_cli("sigma", "945", env_extra={"OPNLAB_PRIME_CAP": "junk"}).returncode == 2


def test_unknown_subcommand_is_usage_error():
    assert run_cli("frobnicate").returncode == 2
