import io
import json
import math
import subprocess
import sys

import pytest

from mvfunc.cli import main


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestEval:
    def test_j_pow_j(self):
        code, out, _ = run(["eval", "j^j", "--dim", "3"])
        assert code == 0
        assert out.startswith("0.20787957635")
        assert math.isclose(float(out), math.exp(-math.pi / 2), rel_tol=1e-15)

    def test_parse_error(self):
        code, out, err = run(["eval", "oops("])
        assert code == 2 and out == "" and "parse error" in err

    def test_eval_error(self):
        code, _, err = run(["eval", "(1+e1)/(1-e1)", "--dim", "2"])
        assert code == 1 and "NullAmplitude" in err

    def test_json(self):
        code, out, _ = run(["eval", "e12", "--dim", "2", "--json"])
        assert code == 0 and json.loads(out) == {"dim": 2, "coeffs": [0, 0, 0, 1]}

    def test_usage_error(self):
        assert run(["eval", "1", "--dim", "7"])[0] == 2
        assert run([])[0] == 2
        assert run(["frobnicate"])[0] == 2

    def test_help(self):
        assert run(["--help"])[0] == 0

    def test_power_side(self):
        _, right, _ = run(["eval", "e1^(e2/2)"])
        _, left, _ = run(["eval", "e1^(e2/2)", "--power-side", "left"])
        assert right != left

    def test_tol(self):
        assert run(["eval", "inv(1+0.9999999*e1)", "--dim", "2", "--tol", "1e-3"])[0] == 1


class TestRepl:
    def test_let_and_use(self):
        code, out, _ = run(["repl", "--dim", "2"], "let z = 3+4*i\nsqrt(z)\n")
        assert code == 0
        assert out.splitlines() == ["z = 3.0 + 4.0 e12", "2.0 + e12"]

    def test_errors_do_not_stop_session(self):
        code, out, err = run(["repl"], "1+*2\n# comment\n\ninv(0)\nj*j\nquit\ne1\n")
        assert code == 0
        assert out.splitlines() == ["-1.0"]
        assert "parse error" in err and "error" in err

    def test_reserved_binding(self):
        code, out, err = run(["repl"], "let exp = 1\nlet e1 = 2\n")
        assert code == 0 and out == "" and err.count("parse error") == 2


class TestCheckRelations:
    def test_rosetta(self):
        code, out, _ = run(["check-relations", "--filter", "rosetta*"])
        assert code == 0 and out.rstrip().endswith("1/1 relations passed")

    def test_json(self):
        code, out, _ = run(["check-relations", "--filter", "j_pow_*", "--json", "--samples", "5"])
        reports = json.loads(out)
        assert code == 0 and [r["name"] for r in reports] == ["j_pow_j", "j_pow_vhat"]

    def test_no_match(self):
        assert run(["check-relations", "--filter", "zzz*"])[0] == 2

    def test_bad_samples(self):
        assert run(["check-relations", "--samples", "0"])[0] == 2

    def test_list(self):
        code, out, _ = run(["check-relations", "--list"])
        assert code == 0 and "rosetta_stone" in out.split()

    def test_deterministic(self):
        argv = ["check-relations", "--filter", "*sqrt*", "--samples", "30", "--seed", "4"]
        assert run(argv) == run(argv)
        assert run(argv)[1] == run(argv + ["--workers", "1"])[1]


class TestSylvester:
    def test_scalar(self):
        code, out, _ = run(["solve-sylvester", "--a", '{"dim":1,"coeffs":[2,0]}',
                            "--b", '{"dim":1,"coeffs":[3,0]}', "--y", '{"dim":1,"coeffs":[10,0]}'])
        assert code == 0 and out.splitlines()[0] == "M = 2.0"

    def test_json_output(self):
        code, out, _ = run(["solve-sylvester", "--a", "2+e1", "--b", "e12", "--y", "e3", "--dim", "3", "--json"])
        obj = json.loads(out)
        assert code == 0 and obj["m"]["dim"] == 3 and obj["residual"] < 1e-12

    def test_null_a(self):
        args = ["solve-sylvester", "--a", "1+e1", "--b", "2", "--y", "e2", "--dim", "2"]
        code, _, err = run(args)
        assert code == 1 and "NullAmplitude" in err
        assert run(args + ["--mirror"])[0] == 0

    def test_dim_mismatch(self):
        code, _, _ = run(["solve-sylvester", "--a", '{"dim":2,"coeffs":[1,0,0,0]}',
                          "--b", '{"dim":3,"coeffs":[1,0,0,0,0,0,0,0]}', "--y", "1"])
        assert code == 2

    def test_malformed(self):
        assert run(["solve-sylvester", "--a", "{", "--b", "1", "--y", "1"])[0] == 2


@pytest.mark.parametrize("argv,code", [(["eval", "e1*e2"], 0), (["eval", "1+"], 2)])
def test_module_entry_point(argv, code):
    proc = subprocess.run([sys.executable, "-m", "mvfunc", *argv], capture_output=True, text=True)
    assert proc.returncode == code
