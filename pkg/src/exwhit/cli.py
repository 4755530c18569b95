"""Command-line interface.

Four commands: ``eval`` (one function at one point), ``table`` (values
on a parameter grid, CSV), ``verify`` (run identity suites, write
JSON + CSV reports), and the transform inspectors ``mellin`` /
``laplace`` (direct quadrature next to the closed forms).

Exit codes: 0 success/converged, 2 domain error or unknown name,
3 result not certified (non-convergence or overflow).  All numbers
print with 17 significant digits, enough to round-trip a double.
"""

from __future__ import annotations

import json
import os
import sys

import click
import numpy as np

from . import __version__
from ._core import BACKEND
from .errors import DomainError, IntegrandError
from .ext_beta import beta_p, beta_pq, beta_v
from .ext_hyp import (
    f_p,
    f_pq,
    f_pv_series,
    phi_p,
    phi_pq,
    phi_pv_series,
)
from .harness import SUITE_IDS, run_suite
from .kernels import EvalResult, bessel_k, beta, gauss_2f1, kummer_phi, rel_dev
from .quadrature import QuadratureSpec
from .whittaker import (
    MellinQuery,
    WhittakerParams,
    laplace_closed_form,
    laplace_numeric,
    m_classical,
    m_p,
    m_pq,
    m_pv,
    mellin_closed_form,
    mellin_numeric,
)

_ENV_CONFIG = "WHITTAKER_EXT_CONFIG"

EXIT_OK = 0
EXIT_DOMAIN = 2
EXIT_UNCERTIFIED = 3


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _load_config(path: str | None) -> dict[str, str]:
    """key=value lines; --config wins over the environment variable."""
    if path is None:
        path = os.environ.get(_ENV_CONFIG)
    if not path:
        return {}
    cfg: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise DomainError(
                        f"config line is not key=value: {line!r}"
                    )
                key, _, value = line.partition("=")
                cfg[key.strip()] = value.strip()
    except OSError as exc:
        raise DomainError(f"cannot read config file {path!r}: {exc}") from exc
    return cfg


def _quad_spec(cfg: dict[str, str]) -> QuadratureSpec | None:
    keys = ("rel_tol", "abs_tol", "max_level", "max_nodes")
    if not any(k in cfg for k in keys):
        return None
    base = QuadratureSpec()
    return QuadratureSpec(
        rel_tol=float(cfg.get("rel_tol", base.rel_tol)),
        abs_tol=float(cfg.get("abs_tol", base.abs_tol)),
        max_level=int(cfg.get("max_level", base.max_level)),
        max_nodes=int(cfg.get("max_nodes", base.max_nodes)),
    )


def _series_tol(cfg: dict[str, str]) -> float | None:
    if "series_rel_tol" in cfg:
        return float(cfg["series_rel_tol"])
    return None


def _need(vals: dict, names: tuple[str, ...]) -> list[float]:
    out = []
    for name in names:
        if vals.get(name) is None:
            flag = "--lambda" if name == "lam" else f"--{name}"
            raise DomainError(f"missing required parameter {flag}")
        out.append(vals[name])
    return out


def _tol_kw(rtol: float | None) -> dict:
    return {} if rtol is None else {"rel_tol": rtol}


# function id -> (parameter order, evaluator(vals, spec, rtol))
_FUNCTIONS = {
    "beta": (("a", "b"), lambda v, s, t: _exact(beta(*_need(v, ("a", "b"))))),
    "beta_p": (("a", "b", "p"),
               lambda v, s, t: beta_p(*_need(v, ("a", "b", "p")), spec=s)),
    "beta_pq": (("a", "b", "p", "q"),
                lambda v, s, t: beta_pq(*_need(v, ("a", "b", "p", "q")),
                                        spec=s)),
    "beta_v": (("a", "b", "p", "v"),
               lambda v, s, t: beta_v(*_need(v, ("a", "b", "p", "v")),
                                      spec=s)),
    "phi": (("b", "c", "z"),
            lambda v, s, t: kummer_phi(*_need(v, ("b", "c", "z")),
                                       **_tol_kw(t))),
    "2f1": (("a", "b", "c", "z"),
            lambda v, s, t: gauss_2f1(*_need(v, ("a", "b", "c", "z")),
                                      **_tol_kw(t))),
    "phi_p": (("b", "c", "p", "z"),
              lambda v, s, t: phi_p(*_need(v, ("b", "c", "p", "z")),
                                    coef_spec=s, **_tol_kw(t))),
    "phi_pq": (("b", "c", "p", "q", "z"),
               lambda v, s, t: phi_pq(*_need(v, ("b", "c", "p", "q", "z")),
                                      coef_spec=s, **_tol_kw(t))),
    "phi_pv": (("b", "c", "p", "v", "z"),
               lambda v, s, t: phi_pv_series(
                   *_need(v, ("b", "c", "p", "v", "z")),
                   coef_spec=s, **_tol_kw(t))),
    "f_p": (("a", "b", "c", "p", "z"),
            lambda v, s, t: f_p(*_need(v, ("a", "b", "c", "p", "z")),
                                coef_spec=s, **_tol_kw(t))),
    "f_pq": (("a", "b", "c", "p", "q", "z"),
             lambda v, s, t: f_pq(*_need(v, ("a", "b", "c", "p", "q", "z")),
                                  coef_spec=s, **_tol_kw(t))),
    "f_pv": (("a", "b", "c", "p", "v", "z"),
             lambda v, s, t: f_pv_series(
                 *_need(v, ("a", "b", "c", "p", "v", "z")),
                 coef_spec=s, **_tol_kw(t))),
    "m": (("lam", "rho", "z"),
          lambda v, s, t: m_classical(*_need(v, ("lam", "rho", "z")),
                                      **_tol_kw(t))),
    "m_p": (("p", "lam", "rho", "z"),
            lambda v, s, t: m_p(*_need(v, ("p", "lam", "rho", "z")),
                                coef_spec=s, **_tol_kw(t))),
    "m_pq": (("p", "q", "lam", "rho", "z"),
             lambda v, s, t: m_pq(*_need(v, ("p", "q", "lam", "rho", "z")),
                                  coef_spec=s, **_tol_kw(t))),
    "m_pv": (("p", "v", "lam", "rho", "z"),
             lambda v, s, t: _m_pv_eval(v, s, t)),
    "bessel_k": (("v", "z"),
                 lambda v, s, t: bessel_k(*_need(v, ("v", "z")))),
}


def _exact(value: float) -> EvalResult:
    return EvalResult(value, 4e-16 * abs(value), True, 0)


def _m_pv_eval(v, s, t) -> EvalResult:
    p, vv, lam, rho, z = _need(v, ("p", "v", "lam", "rho", "z"))
    return m_pv(WhittakerParams(p, vv, lam, rho), z, coef_spec=s,
                **_tol_kw(t))


def _param_options(fn):
    """The union of parameter flags; each command validates per id."""
    for name in ("z", "rho", "q", "v", "p", "c", "b", "a"):
        fn = click.option(f"--{name}", name, type=str, default=None,
                          help=f"parameter {name}")(fn)
    fn = click.option("--lambda", "lam", type=str, default=None,
                      help="parameter lambda (first Whittaker index)")(fn)
    return fn


def _scalar_params(raw: dict) -> dict:
    out = {}
    for key, sval in raw.items():
        if sval is None:
            out[key] = None
            continue
        try:
            out[key] = float(sval)
        except ValueError as exc:
            raise DomainError(
                f"parameter --{key} must be a number, got {sval!r}"
            ) from exc
    return out


@click.group()
@click.version_option(version=__version__, message="%(version)s")
def main():
    """Extended Whittaker function calculator (backend: see `backend`)."""


@main.command()
def backend():
    """Print which numerical backend is active (compiled or pure)."""
    click.echo(BACKEND)


@main.command("eval")
@click.argument("function_id")
@_param_options
@click.option("--rel-tol", type=float, default=None,
              help="series truncation tolerance override")
@click.option("--config", "config_path", type=str, default=None,
              help=f"key=value config file (or ${_ENV_CONFIG})")
def eval_command(function_id, lam, a, b, c, p, q, v, z, rho, rel_tol,
                 config_path):
    """Evaluate FUNCTION_ID at one point.

    Exit status: 0 when the result is certified (converged), 2 on a
    domain error, 3 when the result is printed but not certified.
    """
    try:
        if function_id not in _FUNCTIONS:
            raise DomainError(
                f"unknown function {function_id!r}; known: "
                + " ".join(sorted(_FUNCTIONS)))
        cfg = _load_config(config_path)
        spec = _quad_spec(cfg)
        rtol = rel_tol if rel_tol is not None else _series_tol(cfg)
        vals = _scalar_params({"a": a, "b": b, "c": c, "p": p, "q": q,
                               "v": v, "z": z, "lam": lam, "rho": rho})
        result = _FUNCTIONS[function_id][1](vals, spec, rtol)
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    except (OverflowError, IntegrandError) as exc:
        click.echo(f"evaluation failed: {exc}", err=True)
        sys.exit(EXIT_UNCERTIFIED)
    click.echo(f"value = {_fmt(result.value)}")
    click.echo(f"abs_error_estimate = {_fmt(result.abs_error_estimate)}")
    click.echo(f"converged = {'true' if result.converged else 'false'}")
    click.echo(f"work = {result.work}")
    sys.exit(EXIT_OK if result.converged else EXIT_UNCERTIFIED)


def _parse_axis(name: str, sval: str) -> np.ndarray:
    if ":" in sval:
        parts = sval.split(":")
        if len(parts) != 3:
            raise DomainError(
                f"--{name} grid must be start:stop:count, got {sval!r}"
            )
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
        if count < 1:
            raise DomainError(f"--{name} grid count must be >= 1")
        return np.linspace(start, stop, count)
    return np.array([float(sval)])


@main.command("table")
@click.argument("function_id")
@_param_options
@click.option("--rel-tol", type=float, default=None)
@click.option("--config", "config_path", type=str, default=None)
@click.option("--output", type=str, default=None,
              help="CSV file (default: stdout)")
def table_command(function_id, lam, a, b, c, p, q, v, z, rho, rel_tol,
                  config_path, output):
    """Tabulate FUNCTION_ID on a grid.

    Each parameter accepts a scalar or an inclusive grid
    ``start:stop:count``.  Rows are emitted in lexicographic order of
    the grid axes (the function's canonical parameter order); every
    value is printed with 17 significant digits so the CSV re-parses
    to bit-identical doubles.
    """
    try:
        if function_id not in _FUNCTIONS:
            raise DomainError(
                f"unknown function {function_id!r}; known: "
                + " ".join(sorted(_FUNCTIONS)))
        cfg = _load_config(config_path)
        spec = _quad_spec(cfg)
        rtol = rel_tol if rel_tol is not None else _series_tol(cfg)
        order, evaluator = _FUNCTIONS[function_id]
        raw = {"a": a, "b": b, "c": c, "p": p, "q": q, "v": v, "z": z,
               "lam": lam, "rho": rho}
        axes = []
        for name in order:
            if raw.get(name) is None:
                flag = "--lambda" if name == "lam" else f"--{name}"
                raise DomainError(f"missing required parameter {flag}")
            axes.append(_parse_axis(name, raw[name]))
        header = ["lambda" if n == "lam" else n for n in order]
        lines = [",".join(header + ["value", "abs_error_estimate"])]
        grid_index = np.ndindex(*[len(ax) for ax in axes])
        for multi in grid_index:
            vals = dict.fromkeys(raw)
            row = []
            for name, ax, j in zip(order, axes, multi):
                vals[name] = float(ax[j])
                row.append(_fmt(vals[name]))
            res = evaluator(vals, spec, rtol)
            row.append(_fmt(res.value))
            row.append(_fmt(res.abs_error_estimate))
            lines.append(",".join(row))
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    except (OverflowError, IntegrandError) as exc:
        click.echo(f"evaluation failed: {exc}", err=True)
        sys.exit(EXIT_UNCERTIFIED)
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("verify")
@click.argument("suite")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=None,
              help="override the per-suite sample count")
@click.option("--output", "output_base", type=str, default="verify-report",
              show_default=True, help="basename for the .json/.csv reports")
@click.option("--rel-tol", type=float, default=None,
              help="outer quadrature tolerance override")
@click.option("--paper-literal", is_flag=True,
              help="diagnostic: test the uncorrected Mellin closed form "
                   "(mellin-theorem suite only; expected to fail)")
def verify_command(suite, seed, samples, output_base, rel_tol, paper_literal):
    """Run one identity suite, or ``all``.

    Writes <output>.json and <output>.csv; both are byte-identical
    across reruns with the same seed and options.  Exit status 0 iff
    every executed suite passed; 2 for an unknown suite name.
    """
    if suite != "all" and suite not in SUITE_IDS:
        click.echo(f"unknown suite {suite!r}; known: all "
                   + " ".join(SUITE_IDS), err=True)
        sys.exit(EXIT_DOMAIN)
    spec = QuadratureSpec(rel_tol=rel_tol) if rel_tol is not None else None
    suite_ids = list(SUITE_IDS) if suite == "all" else [suite]
    reports = []
    for sid in suite_ids:
        rep = run_suite(sid, n_samples=samples, seed=seed, spec=spec,
                        paper_literal=paper_literal)
        reports.append(rep)
        status = "PASS" if rep.passed else "FAIL"
        click.echo(
            f"{sid}: {status} max_rel_dev={rep.max_rel_dev:.3e} "
            f"tolerance={rep.tolerance:.0e} n={rep.n_samples} "
            f"({rep.runtime_ms:.0f} ms)"
        )
    payload = json.dumps([r.to_json_dict() for r in reports], indent=2)
    with open(output_base + ".json", "w", encoding="utf-8") as fh:
        fh.write(payload + "\n")
    with open(output_base + ".csv", "w", encoding="utf-8", newline="") as fh:
        fh.write("suite,seed,tolerance,index,point,lhs,rhs,rel_dev\n")
        for rep in reports:
            body = rep.to_csv().split("\n", 1)[1]
            fh.write(body)
    sys.exit(EXIT_OK if all(r.passed for r in reports) else 1)


@main.command("mellin")
@click.option("--v", type=float, required=True)
@click.option("--lambda", "lam", type=float, required=True)
@click.option("--rho", type=float, required=True)
@click.option("--r", type=float, required=True)
@click.option("--z", type=float, required=True)
@click.option("--rel-tol", type=float, default=1e-7, show_default=True,
              help="outer quadrature tolerance")
def mellin_command(v, lam, rho, r, z, rel_tol):
    """Mellin transform in p of M_{p,v,lambda,rho}(z), three ways.

    Prints the direct quadrature, the corrected closed form, and the
    uncorrected (paper-literal) closed form, with all three pairwise
    relative deviations; the paper-literal value is the diagnostic
    that demonstrates why the correction is needed.
    """
    try:
        query = MellinQuery(WhittakerParams(0.0, v, lam, rho), r, z)
        numeric = mellin_numeric(query, QuadratureSpec(rel_tol=rel_tol)).value
        corrected = mellin_closed_form(query).value
        literal = mellin_closed_form(query, paper_literal=True).value
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    click.echo(f"numeric       = {_fmt(numeric)}")
    click.echo(f"corrected     = {_fmt(corrected)}")
    click.echo(f"paper_literal = {_fmt(literal)}")
    click.echo(f"dev(numeric, corrected)      = {_fmt(rel_dev(numeric, corrected))}")
    click.echo(f"dev(numeric, paper_literal)  = {_fmt(rel_dev(numeric, literal))}")
    click.echo(f"dev(corrected, paper_literal) = {_fmt(rel_dev(corrected, literal))}")


@main.command("laplace")
@click.option("--p", type=float, required=True)
@click.option("--v", type=float, required=True)
@click.option("--lambda", "lam", type=float, required=True)
@click.option("--rho", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.option("--alpha", type=float, required=True)
@click.option("--mu", type=float, required=True)
@click.option("--rel-tol", type=float, default=1e-7, show_default=True,
              help="outer quadrature tolerance")
def laplace_command(p, v, lam, rho, delta, alpha, mu, rel_tol):
    """Laplace transform of x^{delta-1} M_{p,v,lambda,rho}(mu x), both ways.

    Prints the direct quadrature and the F_{p,v} closed form.  The
    printed formula needs no correction, so the paper-literal line
    repeats the closed form; it is kept for symmetry with ``mellin``.
    """
    try:
        params = WhittakerParams(p, v, lam, rho)
        numeric = laplace_numeric(params, delta, alpha, mu,
                                  QuadratureSpec(rel_tol=rel_tol)).value
        closed = laplace_closed_form(params, delta, alpha, mu).value
    except DomainError as exc:
        click.echo(f"domain error: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    click.echo(f"numeric       = {_fmt(numeric)}")
    click.echo(f"closed_form   = {_fmt(closed)}")
    click.echo(f"paper_literal = {_fmt(closed)}")
    click.echo(f"dev(numeric, closed_form)    = {_fmt(rel_dev(numeric, closed))}")
    click.echo(f"dev(numeric, paper_literal)  = {_fmt(rel_dev(numeric, closed))}")
    click.echo(f"dev(closed_form, paper_literal) = {_fmt(0.0)}")


if __name__ == "__main__":
    main()
