import random
import subprocess
import sys

import pytest

from cachesieve import bench, classical_sieve
from cachesieve.cli import main
from oracles import is_prime_td, primes_td


def run_cli(*argv):
    """Invoke the console entry point in-process, capturing the exit code."""
    return main(list(argv))


class TestPrimes:
    def test_print_mode_emits_exactly_the_primes(self, capsys):
        assert run_cli("primes", "--limit", "1e5", "--mode", "print") == 0
        lines = capsys.readouterr().out.split()
        values = [int(v) for v in lines]
        assert values == sorted(values)
        assert len(values) == 9592
        assert values[0] == 2
        assert values[-1] == 99991
        assert values == classical_sieve(10**5)
        rng = random.Random(1729)
        for v in rng.sample(values, 50):
            assert is_prime_td(v)

    def test_count_mode_prints_bare_integer(self, capsys):
        assert run_cli("primes", "--limit", "1000") == 0
        assert capsys.readouterr().out == "168\n"

    def test_limit_one_counts_zero(self, capsys):
        assert run_cli("primes", "--limit", "1", "--mode", "count") == 0
        assert capsys.readouterr().out == "0\n"

    def test_limit_zero_prints_nothing_in_print_mode(self, capsys):
        assert run_cli("primes", "--limit", "0", "--mode", "print") == 0
        assert capsys.readouterr().out == ""

    def test_checksum_mode_format(self, capsys):
        assert run_cli("primes", "--limit", "1000", "--mode", "checksum") == 0
        expected = sum(primes_td(1000)) % 2**64
        assert capsys.readouterr().out == f"count=168\nchecksum={expected}\n"

    def test_scientific_notation_limit(self, capsys):
        assert run_cli("primes", "--limit", "1e3") == 0
        assert capsys.readouterr().out == "168\n"

    def test_engines_agree_via_cli(self, capsys):
        outs = []
        for engine in ("classical", "segmented", "hybrid"):
            assert run_cli("primes", "--limit", "1e4", "--engine", engine) == 0
            outs.append(capsys.readouterr().out)
        assert outs == ["1229\n"] * 3

    def test_custom_block_bits(self, capsys):
        assert run_cli("primes", "--limit", "1e4", "--block-bits", "64") == 0
        assert capsys.readouterr().out == "1229\n"

    def test_fractional_limit_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run_cli("primes", "--limit", "2.5")
        assert exc.value.code == 2

    def test_garbage_limit_rejected(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("primes", "--limit", "banana")
        assert exc.value.code == 2

    def test_unknown_engine_rejected(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("primes", "--limit", "10", "--engine", "wheel")
        assert exc.value.code == 2

    def test_negative_limit_is_usage_error(self, capsys):
        assert run_cli("primes", "--limit", "-5") == 2
        assert "error" in capsys.readouterr().err

    def test_non_power_of_two_l1_is_usage_error(self, capsys):
        assert run_cli("primes", "--limit", "100", "--l1-bytes", "1000") == 2
        assert "power of two" in capsys.readouterr().err


class TestBench:
    def test_table_and_csvs(self, capsys, tmp_path):
        runtime = tmp_path / "runtime.csv"
        speedup = tmp_path / "speedup.csv"
        code = run_cli(
            "bench",
            "--limits", "1e4,1e3",
            "--engines", "classical,hybrid",
            "--repeats", "2",
            "--csv", str(runtime),
            "--speedup-csv", str(speedup),
        )
        assert code == 0
        out = capsys.readouterr().out
        header, *rows = [l for l in out.splitlines() if l and "CSV" not in l]
        assert header.split() == ["N", "classical", "hybrid"]
        assert [r.split()[0] for r in rows] == ["1,000", "10,000"]

        records = bench.read_runtime_csv(runtime)
        assert [(r.engine, r.n) for r in records] == [
            ("classical", 10**3),
            ("classical", 10**4),
            ("hybrid", 10**3),
            ("hybrid", 10**4),
        ]
        assert all(r.repeats == 2 for r in records)

        ratios = bench.read_speedup_csv(speedup)
        assert [(s.baseline, s.n) for s in ratios] == [("classical", 10**3), ("classical", 10**4)]
        assert all(s.ratio > 0 for s in ratios)

    def test_all_engines_default(self, capsys):
        assert run_cli("bench", "--limits", "1e3", "--repeats", "1") == 0
        out = capsys.readouterr().out
        assert out.splitlines()[0].split() == ["N", "classical", "segmented", "hybrid"]

    def test_corrupt_engine_fails_with_exit_1(self, capsys):
        code = run_cli(
            "bench", "--limits", "1e3", "--repeats", "1", "--corrupt-engine", "hybrid"
        )
        assert code == 1
        err = capsys.readouterr().err
        assert "correctness" in err
        assert "hybrid" in err

    def test_bad_limit_list_rejected(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("bench", "--limits", "banana")
        assert exc.value.code == 2

    def test_unknown_engine_in_list_rejected(self):
        with pytest.raises(SystemExit) as exc:
            run_cli("bench", "--limits", "100", "--engines", "classical,wheel")
        assert exc.value.code == 2

    def test_zero_repeats_is_usage_error(self, capsys):
        assert run_cli("bench", "--limits", "100", "--repeats", "0") == 2
        assert "repeats" in capsys.readouterr().err

    def test_unwritable_csv_is_runtime_error(self, capsys):
        code = run_cli(
            "bench", "--limits", "100", "--repeats", "1",
            "--csv", "/nonexistent-dir/out.csv",
        )
        assert code == 1
        assert "error" in capsys.readouterr().err


class TestModel:
    def test_billion_table(self, capsys):
        assert run_cli("model", "--limit", "1e9") == 0
        out = capsys.readouterr().out
        assert "62,500,000" in out          # hybrid bytes touched
        assert "1,000,000,000" in out       # classical bytes touched
        assert "15,625,000" in out          # classical cache lines
        assert "16.00" in out               # classical/hybrid footprint ratio
        assert "8x per stored number" in out

    def test_csv_export(self, capsys, tmp_path):
        path = tmp_path / "model.csv"
        assert run_cli("model", "--limit", "1e6", "--csv", str(path)) == 0
        lines = path.read_text().splitlines()
        assert lines[0] == "engine,n,bytes_touched,resident_bytes,cache_lines_touched,padding_bytes"
        assert lines[1] == "classical,1000000,1000000,1000000,15625,0"
        assert lines[3] == "hybrid,1000000,62500,33768,977,0"
        assert len(lines) == 4

    def test_limit_below_two_is_usage_error(self, capsys):
        assert run_cli("model", "--limit", "1") == 2
        assert "limit" in capsys.readouterr().err

    def test_non_power_of_two_line_is_usage_error(self, capsys):
        assert run_cli("model", "--limit", "100", "--line-bytes", "48") == 2
        assert "power of two" in capsys.readouterr().err


class TestSubprocess:
    """End-to-end through a real process: entry point, exit codes, pipes."""

    def run(self, *argv):
        return subprocess.run(
            [sys.executable, "-m", "cachesieve", *argv],
            capture_output=True,
            text=True,
            timeout=120,
        )

    def test_count(self):
        proc = self.run("primes", "--limit", "1e6")
        assert proc.returncode == 0
        assert proc.stdout == "78498\n"

    def test_usage_error_exit_code(self):
        proc = self.run("primes", "--limit", "nope")
        assert proc.returncode == 2
        assert proc.stdout == ""

    def test_correctness_gate_exit_code(self):
        proc = self.run("bench", "--limits", "1e3", "--repeats", "1",
                        "--corrupt-engine", "segmented")
        assert proc.returncode == 1
        assert "segmented" in proc.stderr

    def test_missing_subcommand(self):
        proc = self.run()
        assert proc.returncode == 2
