import math

import numpy as np
import pytest
from click.testing import CliRunner

from causalfrac.cli import cli, main
from causalfrac.verify import closed_form_power


def run(args):
    return CliRunner().invoke(cli, args)


def rows(text):
    lines = text.splitlines()
    return lines[0], [list(map(float, line.split(","))) for line in lines[1:]]


def test_eval_power_matches_closed_form():
    res = run(["eval", "--fn", "power:a=0,p=1", "--order", "0.5", "--grid", "0.1,2,20"])
    assert res.exit_code == 0
    header, body = rows(res.output)
    assert header == "x,re,im,err_estimate"
    assert len(body) == 20
    x = np.array([r[0] for r in body])
    ref = closed_form_power(0.5, 1.0, 0.0, x)
    assert np.allclose([r[1] for r in body], ref.real, rtol=1e-12)


def test_eval_right_derivative_of_constant():
    res = run(["eval", "--fn", "const:a=0,c=1", "--order", "-0.5", "--grid", "1,1,2"])
    assert res.exit_code == 0
    _, body = rows(res.output)
    assert body == [[1.0, 0.0, 0.0, 0.0]] * 2


def test_eval_identity():
    res = run(["eval", "--fn", "power:a=0,p=1", "--order", "0", "--grid", "1,2,2"])
    _, body = rows(res.output)
    assert [r[1] for r in body] == [1.0, 2.0]


def test_eval_complex_order():
    res = run(["eval", "--fn", "power:a=0,p=1", "--order", "0.5+0.5i", "--grid", "1,2,2"])
    _, body = rows(res.output)
    want = closed_form_power(0.5 + 0.5j, 1.0, 0.0, 1.0)
    assert body[0][1] == pytest.approx(want.real, rel=1e-12)
    assert body[0][2] == pytest.approx(want.imag, rel=1e-12)


def test_csv_format_stable(tmp_path):
    args = ["eval", "--fn", "power:a=0,p=2", "--order", "0.3", "--grid", "0.5,1,3"]
    a, b = run(args).output, run(args).output
    assert a == b
    assert "\r" not in a
    # 17 significant digits reproduce the double exactly
    _, body = rows(a)
    assert repr(body[0][1]) in a or f"{body[0][1]:.17g}" in a


def test_out_file(tmp_path):
    out = tmp_path / "o.csv"
    assert main(["eval", "--fn", "power:a=0,p=1", "--order", "0.5", "--grid", "1,2,2", "--out", str(out)]) == 0
    assert out.read_text().startswith("x,re,im,err_estimate\n")


@pytest.mark.parametrize(
    "args",
    [
        ["eval", "--fn", "sin", "--order", "0.5", "--grid", "1,2,2"],
        ["eval", "--fn", "power:a=0,p=1", "--order", "1 + 2i", "--grid", "1,2,2"],
        ["eval", "--fn", "power:a=0,p=1", "--order", "0.5", "--grid", "1,2,1"],
        ["eval", "--fn", "power:a=0,p=1", "--order", "0.5"],
        ["verify", "--suite", "unknown"],
        ["bogus"],
    ],
)
def test_usage_errors_exit_2(args, capsys):
    assert main(args) == 2
    err = capsys.readouterr().err
    assert err.count("\n") == 1


def test_numeric_error_exit_3_no_partial_file(tmp_path, capsys):
    out = tmp_path / "o.csv"
    code = main(["eval", "--fn", "power:a=0,p=1", "--order", "2i", "--grid", "1,2,2", "--out", str(out)])
    assert code == 3
    assert not out.exists()
    assert list(tmp_path.iterdir()) == []
    assert "Re(s)" in capsys.readouterr().err


def test_verify_semigroup():
    res = run(["verify", "--suite", "semigroup", "--tol", "1e-8"])
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert lines[0] == "name,residual,tolerance,passed"
    assert all(line.endswith("True") for line in lines[1:])


def test_verify_constants_contrast():
    res = run(["verify", "--suite", "constants"])
    assert res.exit_code == 0
    assert "constants:left!=right" in res.output


def test_verify_failure_exit_nonzero():
    assert main(["verify", "--suite", "semigroup", "--tol", "1e-30"]) == 1


def test_compare_constant():
    res = run(["compare", "--fn", "const:a=0,c=1", "--order", "-0.5",
               "--conventions", "riemann,caputo", "--grid", "0.5,2,4"])
    assert res.exit_code == 0
    header, body = rows(res.output)
    assert header == "x,riemann_re,riemann_im,caputo_re,caputo_im"
    for x, rre, _, cre, _ in body:
        assert rre == pytest.approx(x**-0.5 / math.sqrt(math.pi), rel=1e-6)
        assert cre == 0


def test_compare_general_identical():
    res = run(["compare", "--fn", "power:a=0,p=1", "--order", "0.5",
               "--conventions", "riemann,general(a=0)", "--grid", "0.1,2,5"])
    _, body = rows(res.output)
    assert all(r[1] == r[3] for r in body)


def test_compare_liouville():
    res = run(["compare", "--fn", "exp", "--order", "0.5", "--conventions", "liouville", "--grid", "-1,1,3"])
    _, body = rows(res.output)
    for x, re, im in body:
        assert re == pytest.approx(math.exp(x), rel=1e-8)


def test_compare_incompatible_exit_3():
    assert main(["compare", "--fn", "power:a=0,p=1", "--order", "0.5", "--conventions", "liouville",
                 "--grid", "1,2,2"]) == 3


def test_expand():
    res = run(["expand", "--log-a", "0"])
    assert res.exit_code == 0
    vals = dict(line.split(",") for line in res.output.splitlines())
    assert float(vals["c1"]) == pytest.approx(0.5772156649, abs=1e-10)
    assert float(vals["c2"]) == pytest.approx(-1.3117561430, abs=1e-10)
    assert float(vals["err(eps=0.001)"]) <= 1e-9
    res = run(["expand", "--log-a", "0.6931471806"])
    vals = dict(line.split(",") for line in res.output.splitlines())
    assert float(vals["c1"]) == pytest.approx(0.5772156649015329 + 0.6931471806, abs=1e-12)
