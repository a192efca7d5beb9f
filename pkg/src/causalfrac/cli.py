"""Command-line front end.

Usage:
    causalfrac eval --fn power:a=0,p=1 --order 0.5 --grid 0.1,2,20
    causalfrac verify --suite semigroup --tol 1e-8
    causalfrac compare --fn const:a=0,c=1 --order -0.5 --conventions riemann,caputo --grid 0.5,2,4
    causalfrac expand --log-a 0

Exit codes: 0 success, 2 usage or parse error, 3 numeric or domain error.
"""

from __future__ import annotations

import io
import math
import os
import sys
import tempfile

import click
import numpy as np

from .exceptions import FracError, SpecParseError
from .fracint import QuadratureConfig, frac_integral_grid
from .fracderiv import unified_apply
from .funcspace import Grid, parse_function
from .parsing import parse_order
from .special import phi, phi_expansion
from .verify import SUITES, Convention, compare_conventions, run_suite

__all__ = ["cli", "main"]

EXIT_USAGE = 2
EXIT_NUMERIC = 3


class NumericFailure(click.ClickException):
    exit_code = EXIT_NUMERIC


def _num(v: float) -> str:
    return f"{v:.17g}"


def _parse_grid(text: str) -> Grid:
    parts = text.split(",")
    if len(parts) != 3:
        raise click.BadParameter(f"expected x0,x1,n, got {text!r}", param_hint="--grid")
    try:
        x0, x1 = float(parts[0]), float(parts[1])
        n = int(parts[2])
        return Grid(x0, x1, n)
    except (ValueError, FracError) as exc:
        raise click.BadParameter(str(exc), param_hint="--grid") from None


def _parse_fn(text: str):
    try:
        return parse_function(text)
    except SpecParseError as exc:
        raise click.BadParameter(str(exc), param_hint="--fn") from None


def _parse_order(text: str) -> complex:
    try:
        return parse_order(text)
    except SpecParseError as exc:
        raise click.BadParameter(str(exc), param_hint="--order") from None


def _config(nodes: int, k: str, tail_T: float) -> QuadratureConfig:
    try:
        reg = None if k == "auto" else int(k)
        return QuadratureConfig(nodes=nodes, regularization_k=reg, tail_T=tail_T)
    except (ValueError, FracError) as exc:
        raise click.UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        click.echo(text, nl=False)
        return
    # write-then-rename so a failed run never leaves a partial file
    target = os.path.abspath(out)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".causalfrac-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        os.unlink(tmp)
        raise


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_num(v) for v in row) + "\n")
    return buf.getvalue()


_cfg_options = [
    click.option("--nodes", type=int, default=64, show_default=True, help="Quadrature nodes."),
    click.option("--k", "k", default="auto", show_default=True, help="Regularization depth or 'auto'."),
    click.option("--tail-T", "tail_T", type=float, default=40.0, show_default=True,
                 help="Truncation length for a = -inf."),
]


def _with_cfg(fn):
    for opt in reversed(_cfg_options):
        fn = opt(fn)
    return fn


@click.group()
def cli():
    """Real and complex order fractional integrals and derivatives of causal functions."""


@cli.command("eval")
@click.option("--fn", "fn_spec", required=True, help="power:a=,p= | exp | const:a=,c= | poly:a=,coeffs=")
@click.option("--order", "order_text", required=True, help="Order as <re>[+<im>i]; negative real part = derivative.")
@click.option("--grid", "grid_text", required=True, help="x0,x1,n")
@_with_cfg
@click.option("--out", default=None, help="Output CSV path (default stdout).")
def eval_cmd(fn_spec, order_text, grid_text, nodes, k, tail_T, out):
    """Evaluate the unified operator of the given order on a grid."""
    f = _parse_fn(fn_spec)
    s = _parse_order(order_text)
    grid = _parse_grid(grid_text)
    cfg = _config(nodes, k, tail_T)
    xs = grid.points()
    try:
        if s.real > 0:
            res = frac_integral_grid(f, s, xs, cfg)
            vals, err = res.values, res.err_estimate
        else:
            vals = np.asarray(unified_apply(f, s, xs, cfg), dtype=complex)
            fine = np.asarray(unified_apply(f, s, xs, cfg.doubled()), dtype=complex)
            err = float(np.max(np.abs(vals - fine), initial=0.0))
    except FracError as exc:
        raise NumericFailure(str(exc)) from None
    if not np.all(np.isfinite(vals)):
        raise NumericFailure("non-finite operator value on the grid")
    rows = [(x, v.real, v.imag, err) for x, v in zip(xs, vals)]
    _emit(_csv(["x", "re", "im", "err_estimate"], rows), out)


@cli.command("verify")
@click.option("--suite", default="all", show_default=True, help="all or one of: " + ", ".join(SUITES))
@click.option("--tol", type=float, default=None, help="Override the per-check tolerance where supported.")
@_with_cfg
def verify_cmd(suite, tol, nodes, k, tail_T):
    """Run a verification suite; one CSV line per property."""
    if suite != "all" and suite not in SUITES:
        raise click.BadParameter(f"unknown suite {suite!r}", param_hint="--suite")
    cfg = _config(nodes, k, tail_T)
    try:
        reports = run_suite(suite, cfg, tol)
    except FracError as exc:
        raise NumericFailure(str(exc)) from None
    click.echo("name,residual,tolerance,passed")
    ok = True
    for rep in reports:
        for line in rep.flatten():
            click.echo(line.to_csv_line())
        ok = ok and rep.passed
    if not ok:
        sys.exit(1)


@cli.command("compare")
@click.option("--fn", "fn_spec", required=True)
@click.option("--order", "order_text", required=True)
@click.option("--conventions", required=True, help="Comma list: liouville, riemann, caputo, liouville_caputo, general(a=r).")
@click.option("--grid", "grid_text", required=True, help="x0,x1,n")
@_with_cfg
@click.option("--out", default=None)
def compare_cmd(fn_spec, order_text, conventions, grid_text, nodes, k, tail_T, out):
    """Tabulate the operator under several conventions, re/im column pair each."""
    f = _parse_fn(fn_spec)
    s = _parse_order(order_text)
    grid = _parse_grid(grid_text)
    cfg = _config(nodes, k, tail_T)
    try:
        convs = [Convention.parse(c) for c in _split_conventions(conventions)]
    except (FracError, ValueError) as exc:
        raise click.BadParameter(str(exc), param_hint="--conventions") from None
    xs = grid.points()
    header, columns = ["x"], []
    try:
        for conv in convs:
            vals = np.asarray(compare_conventions(f, s, conv, xs, cfg), dtype=complex)
            header += [f"{conv.label}_re", f"{conv.label}_im"]
            columns += [vals.real, vals.imag]
    except FracError as exc:
        raise NumericFailure(str(exc)) from None
    rows = zip(xs, *columns)
    _emit(_csv(header, rows), out)


def _split_conventions(text: str) -> list[str]:
    # commas inside general(a=...) do not separate entries
    out, depth, cur = [], 0, ""
    for ch in text:
        depth += ch == "("
        depth -= ch == ")"
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    out.append(cur)
    return [c for c in (c.strip() for c in out) if c]


@cli.command("expand")
@click.option("--log-a", "log_a", type=float, default=0.0, show_default=True)
def expand_cmd(log_a):
    """Coefficients of a**eps / Gamma(1 + eps) in powers of eps and truncation errors."""
    if not math.isfinite(log_a):
        raise click.BadParameter("log_a must be finite", param_hint="--log-a")
    coeffs = phi_expansion(log_a, 2)
    for i, c in enumerate(coeffs.c):
        click.echo(f"c{i},{_num(c)}")
    for eps in (1e-1, 1e-2, 1e-3):
        click.echo(f"err(eps={eps:g}),{_num(abs(phi(eps, log_a) - coeffs.evaluate(eps)))}")


def main(argv=None) -> int:
    """Entry point; every failure ends in a single-line message on stderr."""
    try:
        cli.main(args=argv, prog_name="causalfrac", standalone_mode=False)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("error: aborted", err=True)
        return 1
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    except FracError as exc:
        click.echo(f"error: {exc}", err=True)
        return EXIT_NUMERIC
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
