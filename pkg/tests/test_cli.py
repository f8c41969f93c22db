import json
import math
import subprocess
import sys

import pytest

from pairsqueeze.cli import CSV_HEADER, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_kv(text):
    out = {}
    for line in text.splitlines():
        key, _, rest = line.partition(" ")
        out[key] = rest.strip()
    return out


class TestAnalyze:
    def test_fock_state_record(self, capsys):
        code, out, _ = run_cli(capsys, "analyze", "--re", "0", "--im", "0", "--q", "2")
        assert code == 0
        rec = parse_kv(out)
        assert rec["e_down"] == "0.5"
        assert rec["squeezed"] == "false"
        assert rec["psi_star"] == "nan"
        assert rec["consistent"] == "true"

    def test_small_amplitude_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--re", "0.1", "--im", "0", "--q", "0", "--json"
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["squeezed"] is True
        # n2 = 0.1 I1(0.2)/I0(0.2), frozen from an independent evaluation
        assert rec["n2"] == pytest.approx(0.009950331057391263, abs=1e-9)
        assert rec["e_down"] == pytest.approx(0.4 + rec["n2"], abs=1e-9)

    def test_self_check_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "analyze", "--re", "1", "--im", "1", "--q", "1", "--json"
        )
        assert code == 0
        rec = json.loads(out)
        assert rec["consistent"] is True
        assert rec["psi_star"] == pytest.approx(math.pi / 4 + math.pi, abs=1e-6)
        assert len(rec["variance"]) == 4

    def test_domain_error_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--re", "0.5", "--q", "-1")
        assert code == 2
        assert "error" in err

    def test_amplitude_guard_exit_code(self, capsys):
        code, _, _ = run_cli(capsys, "analyze", "--re", "2000", "--q", "0")
        assert code == 2

    def test_overflow_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "analyze", "--re", "600", "--q", "0")
        assert code == 3
        assert "error" in err

    def test_text_and_json_agree(self, capsys):
        args = ("analyze", "--re", "0.4", "--im", "-0.2", "--q", "1")
        _, text_out, _ = run_cli(capsys, *args)
        _, json_out, _ = run_cli(capsys, *args, "--json")
        rec_text = parse_kv(text_out)
        rec_json = json.loads(json_out)
        for key in ("n1", "n2", "e_down", "e_up", "theta", "phi", "psi_star"):
            assert float(rec_text[key]) == pytest.approx(rec_json[key], abs=1e-12)


class TestScan:
    def test_header_and_ordering(self, capsys, tmp_path):
        out_path = tmp_path / "scan.csv"
        code, _, _ = run_cli(
            capsys, "scan", "--q", "1,0", "--zeta-min", "0.1", "--zeta-max", "2",
            "--steps", "5", "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text(encoding="utf-8").splitlines()
        assert lines[0] == CSV_HEADER
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == 10
        keys = [(int(r[2]), float(r[0])) for r in rows]
        assert keys == sorted(keys)
        for row in rows:
            if row[2] == "0":
                assert row[7] == "true"  # q=0 squeezed across the grid

    def test_deterministic_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ("scan", "--q", "0,2", "--zeta-min", "0.01", "--zeta-max", "3",
                "--steps", "7")
        assert run_cli(capsys, *args, "--out", str(a))[0] == 0
        assert run_cli(capsys, *args, "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_phase_constant_does_not_move_spectrum(self, capsys, tmp_path):
        base, phased = tmp_path / "p0.csv", tmp_path / "p1.csv"
        args = ("scan", "--q", "1", "--zeta-min", "0.5", "--zeta-max", "1.5",
                "--steps", "3")
        run_cli(capsys, *args, "--out", str(base))
        run_cli(capsys, *args, "--phase", "0.9", "--out", str(phased))
        rows0 = [l.split(",") for l in base.read_text().splitlines()[1:]]
        rows1 = [l.split(",") for l in phased.read_text().splitlines()[1:]]
        for r0, r1 in zip(rows0, rows1):
            assert r1[1] == "0.9" and r0[1] == "0"
            assert float(r0[5]) == pytest.approx(float(r1[5]), abs=1e-12)
            assert float(r0[6]) == pytest.approx(float(r1[6]), abs=1e-12)

    def test_phase_sweep_rows(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            capsys, "scan", "--q", "0", "--zeta-min", "0.5", "--zeta-max", "1",
            "--steps", "2", "--phase-sweep", "4", "--out", str(out_path),
        )
        assert code == 0
        rows = [l.split(",") for l in out_path.read_text().splitlines()[1:]]
        assert len(rows) == 8
        by_point = {}
        for row in rows:
            by_point.setdefault(row[0], set()).add(row[5])
        for e_downs in by_point.values():
            assert len(e_downs) == 1  # spectrum phase-independent

    @pytest.mark.parametrize(
        "args",
        [
            ("--q", "0", "--zeta-min", "0", "--zeta-max", "0", "--steps", "2"),
            ("--q", "0", "--zeta-min", "0.1", "--zeta-max", "1", "--steps", "1"),
            ("--q", "-1", "--zeta-min", "0.1", "--zeta-max", "1", "--steps", "2"),
            ("--q", "x", "--zeta-min", "0.1", "--zeta-max", "1", "--steps", "2"),
            ("--q", "0", "--zeta-min", "-1", "--zeta-max", "1", "--steps", "2"),
        ],
    )
    def test_validation_errors(self, capsys, tmp_path, args):
        code, _, err = run_cli(
            capsys, "scan", *args, "--out", str(tmp_path / "x.csv")
        )
        assert code == 2
        assert "error" in err

    def test_unwritable_path(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "scan", "--q", "0", "--zeta-min", "0.1", "--zeta-max", "1",
            "--steps", "2", "--out", str(tmp_path / "missing" / "x.csv"),
        )
        assert code == 4
        assert "error" in err


class TestVerify:
    def test_small_grid_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--q-max", "0", "--zeta-max", "0.5")
        assert code == 0
        assert "verify: PASS" in out
        assert out.count(" pass") == 4
        assert "mixer offset" in out

    def test_deterministic_output(self, capsys):
        _, out1, _ = run_cli(capsys, "verify", "--q-max", "0", "--zeta-max", "0.1")
        _, out2, _ = run_cli(capsys, "verify", "--q-max", "0", "--zeta-max", "0.1")
        assert out1 == out2

    def test_guards(self, capsys):
        assert run_cli(capsys, "verify", "--q-max", "7", "--zeta-max", "1")[0] == 2
        assert run_cli(capsys, "verify", "--q-max", "3", "--zeta-max", "6")[0] == 2

    def test_missing_arguments_usage_error(self):
        with pytest.raises(SystemExit) as excinfo:
            main(["verify"])
        assert excinfo.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pairsqueeze", "analyze", "--re", "0", "--im", "0",
         "--q", "0", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["e_down"] == 0.5
