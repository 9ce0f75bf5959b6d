import json
import subprocess
import sys

from reference_data import CASE_I_TABLE_LEFT, CASE_I_TABLE_RIGHT, Y_KNOWN


def run_cli(*args, expect: int = 0) -> subprocess.CompletedProcess:
    result = subprocess.run(
        [sys.executable, "-m", "truthcensus", *args],
        capture_output=True,
        text=True,
    )
    assert result.returncode == expect, (
        f"exit {result.returncode} != {expect}\nstdout: {result.stdout}\nstderr: {result.stderr}"
    )
    return result


class TestSeq:
    def test_json_y_column(self):
        result = run_cli("seq", "--max-n", "22", "--columns", "y", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["y"] == ["0"] + [str(v) for v in Y_KNOWN]
        assert payload["y"][-1] == "37623611703611452"

    def test_d_row(self):
        result = run_cli("seq", "--max-n", "10", "--columns", "d", "--format", "csv")
        assert result.stdout.strip().split("\n")[-1] == "10,3159450"

    def test_max_n_zero(self):
        result = run_cli("seq", "--max-n", "0", "--columns", "y", "--format", "csv")
        assert result.stdout.strip().split("\n") == ["n,y", "0,0"]

    def test_bad_column_is_usage_error(self):
        run_cli("seq", "--columns", "bogus", expect=2)


class TestOracle:
    def test_case_i_three(self):
        result = run_cli("oracle", "--n", "3", "--connective", "case-i")
        assert "false_total: 6" in result.stdout
        assert "match: True" in result.stdout

    def test_case_ii_eight(self):
        result = run_cli("oracle", "--n", "8", "--connective", "case-ii")
        assert "false_total: 429" in result.stdout

    def test_tables_flag_emits_example_table(self):
        result = run_cli("oracle", "--n", "3", "--connective", "case-i", "--tables",
                         "--format", "csv")
        lines = result.stdout.strip().split("\n")
        assert lines[0].startswith("p_1,p_2,p_3,")
        left = tuple(int(line.split(",")[3]) for line in lines[1:])
        right = tuple(int(line.split(",")[4]) for line in lines[1:])
        assert left == CASE_I_TABLE_LEFT
        assert right == CASE_I_TABLE_RIGHT

    def test_out_of_range_is_usage_error(self):
        run_cli("oracle", "--n", "20", "--connective", "case-i", expect=2)

    def test_jobs_do_not_change_output(self):
        solo = run_cli("oracle", "--n", "7", "--connective", "case-iii", "--format", "csv")
        multi = run_cli("oracle", "--n", "7", "--connective", "case-iii", "--format", "csv",
                        "--jobs", "2")
        assert solo.stdout == multi.stdout


class TestSeries:
    def test_y_coefficients(self):
        result = run_cli("series", "--which", "Y", "--order", "22", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["coeffs"] == ["0"] + [str(v) for v in Y_KNOWN]

    def test_g_coefficients(self):
        result = run_cli("series", "--which", "g", "--order", "10", "--format", "csv")
        assert result.stdout.strip().split("\n")[-1] == "10,4978688"


class TestRatio:
    def test_reproduces_table(self):
        result = run_cli("ratio", "--ns", "1..10,100", "--digits", "11", "--format", "csv")
        assert "0.36735248210" in result.stdout
        assert "5,162,448,0.36160714286" in result.stdout

    def test_json_payload(self):
        result = run_cli("ratio", "--ns", "8", "--digits", "11", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["rows"][0]["ratio"] == "0.36477454837"

    def test_bad_range_is_usage_error(self):
        run_cli("ratio", "--ns", "5..2", expect=2)


class TestParity:
    def test_patterns_hold(self):
        result = run_cli("parity", "--max-n", "64", "--format", "csv")
        lines = result.stdout.strip().split("\n")
        assert len(lines) == 65
        assert all(line.endswith(",1") for line in lines[1:])


class TestTree:
    def test_dot_contains_component_count(self):
        result = run_cli("tree", "--n", "5", "--kind", "y", "--format", "dot")
        assert result.stdout.startswith("digraph")
        assert "components=181" in result.stdout

    def test_json_round_trip(self):
        result = run_cli("tree", "--n", "4", "--kind", "d", "--format", "json")
        payload = json.loads(result.stdout)
        assert payload["component_count"] == "60"

    def test_rejects_n_one(self):
        run_cli("tree", "--n", "1", "--kind", "y", expect=2)


class TestVerify:
    def test_reduced_run_passes(self):
        result = run_cli("verify", "--oracle-n", "6", "--table-n", "5",
                         "--series-order", "40", "--parity-n", "128", "--max-n", "60")
        assert "FAIL" not in result.stdout
        assert result.stdout.count("PASS") >= 10

    def test_default_run_passes(self):
        result = run_cli("verify")
        assert "FAIL" not in result.stdout
        assert result.stdout.strip().endswith("OK: all checks passed")

    def test_injected_fault_fails(self):
        result = run_cli("verify", "--oracle-n", "6", "--table-n", "4",
                         "--series-order", "20", "--parity-n", "64", "--max-n", "30",
                         "--inject-fault", expect=1)
        assert "FAIL  oracle census equals y recurrence" in result.stdout


class TestOutputContract:
    def test_deterministic_output(self):
        first = run_cli("seq", "--max-n", "30", "--format", "json")
        second = run_cli("seq", "--max-n", "30", "--format", "json")
        assert first.stdout == second.stdout

    def test_output_file(self, tmp_path):
        target = tmp_path / "seq.csv"
        run_cli("seq", "--max-n", "5", "--columns", "y", "--format", "csv",
                "--output", str(target))
        assert target.read_text(encoding="utf-8").strip().split("\n")[-1] == "5,162"

    def test_unknown_subcommand(self):
        run_cli("nonsense", expect=2)
