import io
import json
import math
import pathlib
import subprocess
import sys

import pandas as pd
import pytest

from umbralab.cli import build_parser, main

REPO_ROOT = pathlib.Path(__file__).resolve().parents[1]


@pytest.mark.parametrize("argv, first_line", [
    (["eval", "--fn", "wright", "--args", "alpha=0,beta=1,x=1"], "2.71828182845905"),
    (["eval", "--fn", "hermite2", "--args", "n=2,x=3,y=1"], "11"),
    (["eval", "--fn", "bessel_j", "--args", "nu=1,x=0"], "0"),
])
def test_eval(capsys, argv, first_line):
    assert main(argv) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == first_line
    assert lines[1].startswith("terms_used=")
    assert lines[2] == "truncation_flag=false"


def test_eval_rejects_bad_arguments(capsys):
    assert main(["eval", "--fn", "bessel_j", "--args", "nu=1"]) == 2
    assert "missing x" in capsys.readouterr().err
    assert main(["eval", "--fn", "bessel_j", "--args", "nu=-2,x=1"]) == 2
    assert main(["eval", "--fn", "sph_bessel", "--args", "n=1.5,x=1"]) == 2
    assert main(["eval", "--fn", "gamma", "--args", "x"]) == 2
    assert "error:" in capsys.readouterr().err


def test_verify_text(capsys):
    assert main(["verify", "--identity", "sph-bessel-integral", "--params", "n=0"]) == 0
    out = capsys.readouterr().out
    assert "status: passed" in out
    assert "closed_value: 3.14159265358979" in out


def test_verify_struve_json(capsys):
    assert main(["verify", "--identity", "struve-mellin", "--params", "mu=-1,nu=0", "--format", "json"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["status"] == "passed"
    assert record["passed"] is True
    assert record["closed_value"] == pytest.approx(math.pi / 2.0, rel=1e-13)
    assert record["route"] == "semi_infinite_oscillatory"


def test_verify_constraint_violation(capsys):
    assert main(["verify", "--identity", "struve-mellin", "--params", "mu=1,nu=1"]) == 2
    captured = capsys.readouterr()
    assert "mu+nu is an even integer" in captured.err
    assert "status: constraint_violation" in captured.out


def test_verify_unknown_identity(capsys):
    assert main(["verify", "--identity", "no-such-identity"]) == 2
    assert "unknown identity" in capsys.readouterr().err


def test_table_sph_bessel(capsys):
    assert main(["table", "--identity", "sph-bessel-integral", "--range", "n=0..6"]) == 0
    frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
    assert list(frame["n"]) == list(range(7))
    assert list(frame.columns[1:]) == ["closed_value", "oracle_value", "abs_err", "rel_err", "status", "evaluations"]
    assert (frame.loc[frame["n"] % 2 == 1, "closed_value"] == 0.0).all()
    assert (frame["status"] == "passed").all()


def test_table_bessel_j0_json(capsys):
    assert main(["table", "--identity", "bessel-j0-integral", "--list", "alpha=0.5,1,2,4", "--format", "json"]) == 0
    rows = json.loads(capsys.readouterr().out)
    closed = [row["closed_value"] for row in rows]
    assert closed == pytest.approx([2.0 * math.sqrt(2.0), 2.0, math.sqrt(2.0), 1.0], rel=1e-14)


def test_table_gaussian_moment_to_file(tmp_path):
    out = tmp_path / "moments.csv"
    argv = ["table", "--identity", "gaussian-moment", "--range", "n=0..4", "--fixed", "a=1,b=1,alpha=2",
            "--tol-abs", "1e-8", "--tol-rel", "1e-8", "--out", str(out)]
    assert main(argv) == 0
    frame = pd.read_csv(out)
    assert len(frame) == 5
    assert list(frame.columns[:4]) == ["n", "a", "b", "alpha"]
    assert (frame["status"] == "passed").all()


def test_table_rejects_overlapping_axes(capsys):
    argv = ["table", "--identity", "gaussian-moment", "--range", "n=0..2", "--fixed", "n=1,a=1,b=1,alpha=2"]
    assert main(argv) == 2
    assert "both swept and fixed" in capsys.readouterr().err


def test_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    for identity in ("gaussian-moment", "struve-mellin", "wright-laplace"):
        assert identity in out


def test_parser_requires_a_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])
    with pytest.raises(SystemExit):
        build_parser().parse_args(["verify", "--identity", "x", "--tol-abs", "-1"])


def test_run_script():
    result = subprocess.run(
        [sys.executable, "run.py", "eval", "--fn", "hermite2", "--args", "n=2,x=3,y=1"],
        cwd=REPO_ROOT, capture_output=True, text=True, check=False,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "11"
