import json
import subprocess
import sys

import pytest

from chebdens.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSpl:
    def test_gaussian_scan(self, capsys):
        code, out, _ = run_cli(
            capsys, "spl", "--poly", "1,0,1", "--galois-order", "2", "--hi", "30"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["ramified"] == [2]
        split_at = [rec["p"] for rec in payload["records"] if rec["splits"]]
        assert split_at == [5, 13, 17, 29]
        assert [rec["p"] for rec in payload["records"]] == [3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_empty_range_header_only(self, capsys):
        code, out, _ = run_cli(
            capsys, "spl", "--poly", "1,0,1", "--galois-order", "2", "--lo", "2", "--hi", "2"
        )
        assert code == 0
        assert json.loads(out)["records"] == []

    def test_invalid_residue_model_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "spl", "--modulus", "8", "--residues", "1,3,5", "--hi", "30"
        )
        assert code == 1
        assert "not closed" in err

    def test_abelian_inline_model(self, capsys):
        code, out, _ = run_cli(
            capsys, "spl", "--modulus", "4", "--residues", "1", "--hi", "30"
        )
        assert code == 0
        payload = json.loads(out)
        assert [rec["p"] for rec in payload["records"] if rec["splits"]] == [5, 13, 17, 29]

    def test_model_file(self, capsys, tmp_path):
        path = tmp_path / "model.json"
        path.write_text(
            json.dumps({"variant": "splitting_field", "poly": [-2, 0, 0, 1], "galois_order": 6})
        )
        code, out, _ = run_cli(capsys, "spl", "--model", str(path), "--hi", "40")
        assert code == 0
        payload = json.loads(out)
        assert payload["ramified"] == [2, 3]
        assert [rec["p"] for rec in payload["records"] if rec["splits"]] == [31]


class TestFrob:
    def test_cycle_types(self, capsys):
        code, out, _ = run_cli(
            capsys, "frob", "--poly=-2,0,0,1", "--galois-order", "6", "--hi", "12"
        )
        assert code == 0
        records = {rec["p"]: rec["cycle_type"] for rec in json.loads(out)["records"]}
        assert records == {5: [1, 2], 7: [3], 11: [1, 2]}

    def test_abelian_model_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "frob", "--modulus", "4", "--residues", "1", "--hi", "12"
        )
        assert code == 1
        assert "splitting_field" in err


class TestDensity:
    def test_natural_table_trends_to_half(self, capsys):
        code, out, _ = run_cli(
            capsys, "density", "--poly", "1,0,1", "--galois-order", "2",
            "--kind", "natural", "--cutoffs", "10000,100000",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["reference"] == "1/2"
        gaps = [abs(row["estimate"] - 0.5) for row in payload["rows"]]
        assert gaps[1] < gaps[0] < 0.01

    def test_cubic_natural_density_row_near_reference(self, capsys):
        code, out, _ = run_cli(
            capsys, "density", "--poly=-2,0,0,1", "--galois-order", "6",
            "--kind", "natural", "--cutoffs", "1000000",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["reference"] == "1/6"
        assert abs(payload["rows"][-1]["estimate"] - 1 / 6) < 0.01

    def test_all_primes_pseudo_model_rows_are_one(self, capsys):
        code, out, _ = run_cli(
            capsys, "density", "--modulus", "1", "--residues", "1",
            "--kind", "natural", "--cutoffs", "1000,10000",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["reference"] == "1/1"
        assert all(row["estimate"] == 1.0 for row in payload["rows"])

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "density", "--poly", "1,0,1", "--galois-order", "2",
            "--kind", "dirichlet", "--cutoffs", "10000", "--s-grid", "1.2,1.1",
            "--format", "csv",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "cutoff,s,xi,ratio,reference"
        assert len(lines) == 3


class TestCalculus:
    def test_disjoint_union(self, capsys):
        code, out, _ = run_cli(capsys, "calculus", "disjoint-union", "1", "2", "3")
        assert code == 0
        assert json.loads(out)["result"] == "7/8"

    def test_tower_theta(self, capsys):
        code, out, _ = run_cli(capsys, "calculus", "tower-theta", "1/2", "1", "2", "3")
        assert code == 0
        result = json.loads(out)["result"]
        assert result == {"theta": "3/8", "bound": "1/8", "vacuous": False}

    def test_inclusion_exclusion(self, capsys):
        code, out, _ = run_cli(
            capsys, "calculus", "inclusion-exclusion",
            "--densities", "1:1/2;2:1/2;1,2:1/4",
        )
        assert code == 0
        assert json.loads(out)["result"] == "3/4"

    def test_ie_check(self, capsys):
        code, out, _ = run_cli(
            capsys, "calculus", "ie-check", "--sets", "2,3,5;3,5,7", "--s", "2"
        )
        assert code == 0
        assert json.loads(out)["result"] == {"equal": True, "residual": "0/1"}

    def test_lift_density(self, capsys):
        code, out, _ = run_cli(capsys, "calculus", "lift-density", "1/10", "3")
        assert code == 0
        assert json.loads(out)["result"] == "3/10"

    def test_union_and_pigeonhole_and_compositum(self, capsys):
        code, out, _ = run_cli(capsys, "calculus", "union-bound", "1/3", "1/4")
        assert code == 0 and json.loads(out)["result"] == "7/12"
        code, out, _ = run_cli(capsys, "calculus", "pigeonhole", "1/2", "5")
        assert code == 0 and json.loads(out)["result"] == "1/10"
        code, out, _ = run_cli(capsys, "calculus", "compositum-degree", "2", "6", "3", "3")
        assert code == 0 and json.loads(out)["result"] == 432

    def test_containment_error_exits_nonzero(self, capsys):
        code, _, err = run_cli(capsys, "calculus", "intersection-bound", "3/4", "1/4", "1/2")
        assert code == 1
        assert "ambient" in err


class TestWeyl:
    def test_table_output(self, capsys):
        code, out, _ = run_cli(capsys, "weyl", "D4")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"type": "D4", "d": 4, "w": 192, "c": 13, "degrees": [2, 4, 6, 4]}

    def test_enumerate_flag(self, capsys):
        code, out, _ = run_cli(capsys, "weyl", "B2", "--enumerate")
        assert code == 0
        assert json.loads(out)["enumerated"] == {"w": 8, "c": 5}

    def test_invalid_type(self, capsys):
        code, _, err = run_cli(capsys, "weyl", "G3")
        assert code == 1
        assert "invalid" in err


class TestBounds:
    def test_a1_report(self, capsys):
        code, out, err = run_cli(capsys, "bounds", "--type", "A1", "--m", "1", "--omega", "1/2")
        assert code == 0
        payload = json.loads(out)
        assert payload["r"] == 3
        assert payload["delta"] == "1/12"
        assert payload["n_exact"] == "6227020800"
        assert "rho(d)" in err  # default-rho warning goes to the diagnostic channel

    def test_omega_zero_fails_with_hypothesis_message(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--type", "A1", "--m", "1", "--omega", "0")
        assert code == 1
        assert "Spl(M/K)) > 0" in err

    def test_invalid_type_is_an_error(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--type", "G3", "--m", "1", "--omega", "1/2")
        assert code == 1
        assert "invalid" in err


class TestDeterminism:
    def test_byte_identical_json(self, capsys):
        _, first, _ = run_cli(capsys, "bounds", "--type", "A1", "--m", "1", "--omega", "1/2")
        _, second, _ = run_cli(capsys, "bounds", "--type", "A1", "--m", "1", "--omega", "1/2")
        assert first == second
        _, d1, _ = run_cli(capsys, "density", "--modulus", "4", "--residues", "1",
                           "--cutoffs", "10000")
        _, d2, _ = run_cli(capsys, "density", "--modulus", "4", "--residues", "1",
                           "--cutoffs", "10000")
        assert d1 == d2

    def test_unknown_flags_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["weyl", "A1", "--frobnicate"])


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chebdens.cli", "weyl", "A1"],
        capture_output=True, text=True, timeout=120,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["w"] == 2


def test_env_var_sets_default_cutoff(capsys, monkeypatch):
    monkeypatch.setenv("CHEBDENS_CUTOFF", "10000")
    code = main(["density", "--modulus", "4", "--residues", "1"])
    out = capsys.readouterr().out
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [row["cutoff"] for row in rows] == [10000]


def test_verify_subcommand_runs_all_criteria(capsys):
    code = main(["verify", "--cutoff", "100000", "--seed", "3"])
    out = capsys.readouterr().out
    assert code == 0
    lines = [line for line in out.splitlines() if line.startswith(("PASS", "FAIL"))]
    assert len(lines) == 8
    assert all(line.startswith("PASS") for line in lines)
