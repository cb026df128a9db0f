import json

import numpy as np
import pytest

from wghz.cli import main
from wghz.robustness import closed_form_error_fidelity


def run(args):
    return main(list(args))


class TestOptimizeCommand:
    def test_json_document(self, tmp_path):
        out = tmp_path / "opt.json"
        assert run(["optimize", "--phi", "0", "--direction", "w2ghz",
                    "--seed", "3", "--restarts", "6", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert list(doc)[:4] == ["phi", "direction", "seed", "restarts"]
        assert doc["direction"] == "w2ghz"
        assert doc["results"]
        for r in doc["results"]:
            for key in ("xi", "alpha1", "phi1", "alpha2", "phi2",
                        "fidelity", "branch", "converged"):
                assert key in r
            for angle in ("alpha1", "phi1", "alpha2", "phi2"):
                assert 0 <= r[angle] < 2 * np.pi
            assert 0 <= r["fidelity"] <= 1 + 1e-12

    def test_rejects_csv_format(self, capsys):
        assert run(["optimize", "--format", "csv"]) == 2
        assert "JSON" in capsys.readouterr().err

    def test_degrees_flag(self, tmp_path):
        out_rad = tmp_path / "rad.json"
        out_deg = tmp_path / "deg.json"
        run(["optimize", "--phi", "1.0471975511965976", "--seed", "2",
             "--restarts", "4", "--out", str(out_rad)])
        run(["optimize", "--phi", "60", "--degrees", "--seed", "2",
             "--restarts", "4", "--out", str(out_deg)])
        assert json.loads(out_rad.read_text())["results"] == \
               json.loads(out_deg.read_text())["results"]


class TestSweepCommand:
    def test_csv_shape_and_format(self, tmp_path):
        out = tmp_path / "sweep.csv"
        assert run(["sweep", "--axes", "phi1,phi2", "--range", "-0.05:0.05",
                    "--count", "5", "--out", str(out)]) == 0
        raw = out.read_bytes()
        assert b"\r" not in raw
        lines = raw.decode().splitlines()
        assert lines[0] == "eps_phi1,eps_phi2,infidelity"
        assert len(lines) == 1 + 25
        assert not any(line.endswith(",") for line in lines)
        first = lines[1].split(",")
        assert float(first[0]) == -0.05
        assert float(first[1]) == -0.05

    def test_values_match_closed_form(self, tmp_path):
        out = tmp_path / "xi.csv"
        run(["sweep", "--axes", "xi", "--range", "-0.2:0.2",
             "--count", "11", "--out", str(out)])
        for line in out.read_text().splitlines()[1:]:
            eps, infid = (float(v) for v in line.split(","))
            # CSV carries 12 significant digits
            assert abs(infid - (1 - closed_form_error_fidelity("xi", eps))) < 1e-11

    def test_tied_axis_accepted(self, tmp_path):
        out = tmp_path / "tied.csv"
        assert run(["sweep", "--axes", "xi,alpha_tied", "--range", "-0.1:0.1",
                    "--count", "3", "--out", str(out)]) == 0
        assert out.read_text().splitlines()[0] == "eps_xi,eps_alpha_tied,infidelity"

    def test_usage_errors(self, capsys):
        assert run(["sweep", "--range", "-0.1:0.1", "--count", "3"]) == 2
        assert run(["sweep", "--axes", "xi"]) == 2
        assert run(["sweep", "--axes", "xi", "--range", "0.1:-0.1",
                    "--count", "3"]) == 2
        assert run(["sweep", "--axes", "xi", "--range", "-0.1:0.1",
                    "--count", "1"]) == 2
        capsys.readouterr()

    def test_unwritable_output(self, capsys):
        code = run(["sweep", "--axes", "xi", "--range", "-0.1:0.1",
                    "--count", "3", "--out", "/nonexistent/dir/out.csv"])
        assert code == 1
        capsys.readouterr()


class TestBranchLawCommand:
    def test_csv_and_summary(self, tmp_path, capsys):
        out = tmp_path / "law.csv"
        code = run(["branch-law", "--direction", "w2ghz", "--count", "10",
                    "--seed", "0", "--restarts", "16", "--out", str(out)])
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "phi,branch,phi1_opt,phi2_opt,fidelity"
        assert all(float(line.split(",")[4]) >= 1 - 1e-9 for line in lines[1:])
        summary = json.loads(capsys.readouterr().out)
        assert summary["direction"] == "w2ghz"
        assert abs(summary["slope_phi1"] - 1 / 3) < 1e-6

    def test_requires_out(self, capsys):
        assert run(["branch-law", "--count", "10"]) == 2
        capsys.readouterr()


class TestLiealgCommand:
    def test_document(self, tmp_path):
        out = tmp_path / "lie.json"
        assert run(["liealg", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["u_s3_dim"] == 20
        assert doc["sector_dims"] == [4, 2, 2]
        assert 3 < doc["dynamical_dim"] <= 20


class TestJobFile:
    def test_merge_and_precedence(self, tmp_path):
        job = tmp_path / "job.json"
        job.write_text(json.dumps({"phi": 0.5, "seed": 9, "restarts": 4}))
        out_a = tmp_path / "a.json"
        out_b = tmp_path / "b.json"
        run(["optimize", "--job", str(job), "--out", str(out_a)])
        doc_a = json.loads(out_a.read_text())
        assert doc_a["phi"] == 0.5
        assert doc_a["seed"] == 9
        # explicit flag wins over the job file
        run(["optimize", "--job", str(job), "--seed", "1", "--out", str(out_b)])
        assert json.loads(out_b.read_text())["seed"] == 1

    def test_bad_job_file(self, tmp_path, capsys):
        job = tmp_path / "job.json"
        job.write_text("[1, 2]")
        assert run(["optimize", "--job", str(job)]) == 2
        capsys.readouterr()


class TestVerifyCommand:
    def test_clean_build_passes(self, capsys):
        assert run(["verify"]) == 0
        out = capsys.readouterr().out
        assert "FAIL" not in out
        assert "u_s3_dimension: 20 == 20 PASS" in out
        assert "branch_recovery" in out


def test_unknown_command_exits_2():
    with pytest.raises(SystemExit) as err:
        run(["frobnicate"])
    assert err.value.code == 2
