import json
import subprocess
import sys

import pytest

from mocktheta.cli import main, parse_complex
from mocktheta.suites import SUITES


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "mocktheta", *args],
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


class TestParsing:
    @pytest.mark.parametrize(
        "text,want",
        [("i", 1j), ("-i", -1j), ("0.5", 0.5), ("1+2i", 1 + 2j),
         ("-0.3-0.8i", -0.3 - 0.8j), ("0+1i", 1j)],
    )
    def test_complex(self, text, want):
        assert parse_complex(text) == want


class TestEval:
    def test_phi_matches_library(self):
        rc, out, _ = run_cli(
            "eval", "phi", "--m", "1", "--s", "0", "--tau", "i",
            "--z1", "0.23", "--z2", "0.41",
        )
        assert rc == 0
        doc = json.loads(out)
        from mocktheta.mock import MockIndex, phi

        want = phi(MockIndex(1, 0), 1j, 0.23, 0.41)
        assert abs(complex(doc["value"]["re"], doc["value"]["im"]) - want.value) < 1e-15
        assert doc["err_bound"] <= 1e-12

    def test_eta(self):
        rc, out, _ = run_cli("eval", "eta", "--tau", "2i")
        assert rc == 0 and json.loads(out)["value"]["re"] > 0

    def test_low_tau_rejected(self):
        rc, _, err = run_cli("eval", "eta", "--tau", "0.01i")
        assert rc == 2

    def test_unknown_function(self):
        rc, _, err = run_cli("eval", "zeta", "--tau", "i")
        assert rc == 2 and "unknown function" in err

    def test_pole_reported(self):
        rc, out, _ = run_cli(
            "eval", "phi", "--m", "1", "--s", "0", "--tau", "i",
            "--z1", "0", "--z2", "0.41",
        )
        assert rc == 1 and "PoleAtZ1" in out


class TestVerify:
    def test_pass_exit_zero(self):
        rc, out, err = run_cli("verify", "cor1.2")
        assert rc == 0
        doc = json.loads(out)
        assert doc["pass"] and doc["anchor"] == "cor1.2"

    def test_unknown_suite_exit_two(self):
        rc, _, err = run_cli("verify", "does-not-exist")
        assert rc == 2 and "valid ids" in err

    def test_catalog_contains_required_ids(self):
        rc, out, _ = run_cli("list-suites")
        ids = {row["suite"] for row in json.loads(out)}
        assert {"eq1.20", "prop3.3b", "osp-level1-S"} <= ids

    def test_catalog_ids_unique_and_dispatchable(self):
        rc, out, _ = run_cli("list-suites")
        rows = json.loads(out)
        ids = [row["suite"] for row in rows]
        assert len(ids) == len(set(ids))
        assert set(ids) == set(SUITES)

    def test_byte_stability(self):
        rc1, out1, _ = run_cli("verify", "theta-quasi", "--seed", "5")
        rc2, out2, _ = run_cli("verify", "theta-quasi", "--seed", "5")
        assert out1 == out2


class TestTables:
    def test_omega_table(self):
        rc, out, _ = run_cli("table", "omega", "--case", "sl21", "--k", "2")
        assert rc == 0
        rows = json.loads(out)
        assert [r["labels"] for r in rows] == ["0", "1", "2"]
        assert all(r["integrable"] for r in rows)

    def test_smatrix_csv(self):
        rc, out, err = run_cli(
            "smatrix", "--case", "d21a", "--p", "1", "--q", "1", "--n", "1",
            "--output", "csv",
        )
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "col,im,re,row"
        assert len(lines) == 1 + 16
        assert "unitarity_defect" in err

    def test_smatrix_json(self):
        rc, out, _ = run_cli("smatrix", "--case", "osp42", "--k", "1")
        doc = json.loads(out)
        assert doc["unitarity_defect"] < 1e-12
        assert len(doc["labels"]) == 4


class TestMainEntry:
    def test_in_process_call(self, capsys):
        rc = main(["list-suites"])
        assert rc == 0
        assert "eq1.20" in capsys.readouterr().out


class TestCharTable:
    def test_rows_and_schema(self):
        rc, out, _ = run_cli(
            "chartable", "--case", "sl21", "--k", "1", "--points", "3",
        )
        assert rc == 0
        lines = out.strip().splitlines()
        assert lines[0] == "err_bound,im,re,t,tau,z"
        assert len(lines) == 4

    def test_preset_export(self):
        rc, out, _ = run_cli("table", "preset", "--case", "sl21")
        assert rc == 0
        doc = json.loads(out)
        assert doc["h_dual"] == "1" and doc["defect"] == 1
        assert doc["simple_roots"][0]["odd"] is True
