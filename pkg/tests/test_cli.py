import csv
import io
import json
import math
import subprocess
import sys

import pytest

from liemarkov import cli
from liemarkov.core import ComponentClass, MarkovMatrix, classify

LN2 = repr(math.log(2.0))


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert err == ""
    return json.loads(out)


class TestConvert:
    def test_from_ab(self, capsys):
        rec = run_json(capsys, "convert", "--from-ab", 0.3, 0.1)
        assert set(rec) == {"a", "b", "det", "lambda", "t", "s", "component", "stochastic"}
        assert rec["a"] == 0.3 and rec["b"] == 0.1
        assert rec["lambda"] == pytest.approx(0.6, abs=1e-15)
        assert rec["t"] == pytest.approx(0.5108256237659907, abs=1e-15)
        assert rec["s"] == pytest.approx(1 / 6, abs=1e-15)

    def test_from_ts_identity(self, capsys):
        rec = run_json(capsys, "convert", "--from-ts", 0, 0)
        assert (rec["a"], rec["b"], rec["det"], rec["t"], rec["s"]) == (0.0, 0.0, 1.0, 0.0, 0.0)
        assert rec["component"] == "identity-component" and rec["stochastic"] is True

    def test_reflected_is_error(self, capsys):
        code, out, err = run(capsys, "convert", "--from-ab", 1, 1)
        assert code == 1 and out == ""
        assert "reflected-component" in err and "not decomposable" in err and "parity" in err

    def test_singular_is_error(self, capsys):
        code, _, err = run(capsys, "convert", "--from-ab", 0.5, 0.5)
        assert code == 1 and "singular" in err

    def test_from_ls_requires_positive_lambda(self, capsys):
        code, _, err = run(capsys, "convert", "--from-ls", 0, 0.1)
        assert code == 2 and "lambda" in err

    def test_modes_exclusive(self, capsys):
        with pytest.raises(SystemExit) as info:
            cli.main(["convert", "--from-ab", "0.1", "0.2", "--from-ts", "0", "0"])
        assert info.value.code == 2

    def test_golden(self, capsys, data_dir):
        for line in (data_dir / "convert_golden.jsonl").read_text().splitlines():
            case = json.loads(line)
            assert run_json(capsys, "convert", *case["args"]) == case["record"], case["args"]

    @pytest.mark.parametrize("a, b", [(0.3, 0.1), (-1.5, 0.25), (0.05, 0.9), (2.0, -4.5), (1e-9, -3e-9)])
    def test_self_inverse(self, capsys, a, b):
        rec = run_json(capsys, "convert", "--from-ab", a, b)
        back = run_json(capsys, "convert", "--from-ts", repr(rec["t"]), repr(rec["s"]))
        assert back["a"] == pytest.approx(a, abs=1e-12)
        assert back["b"] == pytest.approx(b, abs=1e-12)
        via_ls = run_json(capsys, "convert", "--from-ls", repr(rec["lambda"]), repr(rec["s"]))
        assert via_ls["a"] == pytest.approx(a, abs=1e-12)
        assert via_ls["b"] == pytest.approx(b, abs=1e-12)


class TestClassify:
    def test_identity(self, capsys):
        rec = run_json(capsys, "classify", 0, 0)
        assert rec["component"] == "identity-component" and rec["det"] == 1.0 and rec["parity"] == 1

    def test_p(self, capsys):
        rec = run_json(capsys, "classify", 1, 1)
        assert rec["component"] == "reflected-component" and rec["parity"] == -1
        assert rec["factor"] == {"a": 0.0, "b": 0.0}

    def test_singular(self, capsys):
        rec = run_json(capsys, "classify", 0.4, 0.6)
        assert rec["component"] == "singular" and rec["parity"] is None

    def test_negative_arguments(self, capsys):
        rec = run_json(capsys, "classify", -0.5, 2)
        assert rec["det"] == pytest.approx(-0.5)


class TestLogExp:
    def test_log(self, capsys):
        rec = run_json(capsys, "log", 0.25, 0.25)
        assert rec["alpha"] == pytest.approx(0.346574, abs=1e-6)
        assert rec["beta"] == rec["alpha"]

    def test_log_reflected(self, capsys):
        code, _, err = run(capsys, "log", 0.9, 0.4)
        assert code == 1 and "reflected-component" in err

    def test_exp_zero_time(self, capsys):
        rec = run_json(capsys, "exp", 0.5, 0.5, 0)
        assert rec["a"] == 0.0 and rec["b"] == 0.0

    def test_exp_binary_symmetric(self, capsys):
        rec = run_json(capsys, "exp", 0.5, 0.5, LN2)
        assert rec["a"] == pytest.approx(0.25, abs=1e-15)
        assert rec["t"] == pytest.approx(math.log(2), abs=1e-15)
        assert rec["s"] == pytest.approx(0.0, abs=1e-15)


class TestBounds:
    def test_zero(self, capsys):
        rec = run_json(capsys, "bounds", 0)
        assert rec["s_min"] == 0.0 and rec["s_max"] == 0.0

    def test_ln2(self, capsys):
        rec = run_json(capsys, "bounds", LN2)
        assert rec["s_min"] == pytest.approx(-0.5) and rec["s_max"] == pytest.approx(0.5)
        assert rec["at_s_max"]["b"] == pytest.approx(0.0, abs=1e-15)
        assert rec["at_s_min"]["a"] == pytest.approx(0.0, abs=1e-15)

    def test_negative(self, capsys):
        code, out, err = run(capsys, "bounds", -1)
        assert code == 1 and out == "" and err


class TestRegion:
    def rows(self, capsys, *argv):
        code, out, err = run(capsys, "region", *argv)
        assert code == 0, err
        return list(csv.DictReader(io.StringIO(out)))

    def test_header_and_small_grid(self, capsys):
        code, out, _ = run(capsys, "region", "--a-range", 0, 1, "--b-range", 0, 1, "--step", 0.5)
        assert out.splitlines()[0] == "a,b,det,component,stochastic,t,s"
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 9
        by_point = {(float(r["a"]), float(r["b"])): r for r in rows}
        origin = by_point[(0.0, 0.0)]
        assert origin["det"] == "1.0" and origin["component"] == "identity-component"
        assert origin["stochastic"] == "true" and float(origin["t"]) == 0.0 and float(origin["s"]) == 0.0
        corner = by_point[(1.0, 1.0)]
        assert corner["det"] == "-1.0" and corner["component"] == "reflected-component"
        assert corner["t"] == "" and corner["s"] == ""
        assert by_point[(0.5, 0.5)]["component"] == "singular"

    def test_default_grid_row_count_and_classification(self, capsys):
        rows = self.rows(capsys)
        assert len(rows) == 101 * 101
        for r in rows:
            assert classify(MarkovMatrix(float(r["a"]), float(r["b"]))).value == r["component"]

    def test_golden(self, capsys, data_dir):
        code, out, _ = run(capsys, "region")
        assert code == 0
        assert out == (data_dir / "region_default.csv").read_text()

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "grid.csv"
        code, out, _ = run(capsys, "region", "--step", 1, "--out", path)
        assert code == 0 and out == ""
        assert len(path.read_text().splitlines()) == 1 + 6 * 6

    @pytest.mark.parametrize("argv", [
        ("--step", 0),
        ("--step", -0.1),
        ("--a-range", 1, 0),
    ])
    def test_empty_grid_rejected(self, capsys, tmp_path, argv):
        path = tmp_path / "never.csv"
        code, _, err = run(capsys, "region", *argv, "--out", path)
        assert code == 2 and err
        assert not path.exists()


class TestSimulate:
    def test_zero_horizon(self, capsys):
        rec = run_json(capsys, "simulate", 0.5, 0.5, 0, "--n", 500, "--seed", 1)
        assert rec["empirical"] == {"a": 0.0, "b": 0.0} == rec["analytic"]
        assert rec["mean_jumps"]["mean"] == 0.0

    @pytest.mark.statistical
    def test_binary_symmetric(self, capsys):
        rec = run_json(capsys, "simulate", 0.5, 0.5, LN2, "--n", 100000, "--seed", 42)
        for k in "ab":
            assert abs(rec["empirical"][k] - 0.25) <= 4 * rec["std_err"][k]
        assert rec["within_4sigma"] == {"a": True, "b": True}
        assert rec["analytic"]["a"] == pytest.approx(0.25, abs=1e-15)

    def test_negative_rate(self, capsys):
        code, out, err = run(capsys, "simulate", -1, 0.5, 1)
        assert code == 2 and out == "" and "nonnegative" in err

    def test_deterministic(self, capsys):
        args = ("simulate", 1.2, 0.3, 2.0, "--n", 3000, "--seed", 9)
        assert run_json(capsys, *args) == run_json(capsys, *args, "--workers", 2)


class TestEvolve:
    def test_zero_time(self, capsys):
        rec = run_json(capsys, "evolve", 0.7, 0.2, 0, "--p0", 0.3, 0.7)
        assert rec["p"] == [0.3, 0.7]

    def test_relaxes_to_uniform(self, capsys):
        rec = run_json(capsys, "evolve", 0.5, 0.5, 10, "--p0", 1, 0)
        assert rec["p"][0] == pytest.approx(0.5, abs=1e-4)
        assert rec["p"][1] == pytest.approx(0.5, abs=1e-4)
        assert rec["p"][0] == pytest.approx(0.5 * (1 + math.exp(-10)), abs=1e-15)
        assert rec["norm1"] == pytest.approx(1.0, abs=1e-15)

    def test_invalid_distribution(self, capsys):
        code, _, err = run(capsys, "evolve", 0.5, 0.5, 1, "--p0", 0.6, 0.5)
        assert code == 2 and "distribution" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "liemarkov", "classify", "0.3", "0.1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["component"] == ComponentClass.IDENTITY.value
