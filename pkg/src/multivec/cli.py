"""Command-line front end: fit, eval, sample, check, grid.

Families are exposed under flat name->value parameter maps (scalar blocks;
the library API handles general block structures).  All numeric output is
deterministic given the flags: JSON uses canonical key order with
17-significant-digit decimals, CSV uses fixed headers and '.' decimals, and
no timestamps or locale-dependent formatting appear anywhere.

Exit codes: 0 success, 1 input error, 2 non-convergence, 3 check failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence

import numpy as np

from . import __version__
from .core import ExtendedShape, MvEllipticalParams, Partition, ScaleShapeParams, SampleMatrix
from .densities import (
    BetaParams,
    GammaLogGammaParams,
    JointScaleParams,
    MvTParams,
    logpdf_gengamma_beta1,
    logpdf_gengamma_beta2,
    logpdf_gengamma_pearson2,
    logpdf_gengamma_pearson7,
    logpdf_mv_beta1,
    logpdf_mv_beta2,
    logpdf_mv_elliptical,
    logpdf_mv_gengamma,
    logpdf_mv_log_elliptical,
    logpdf_mv_pearson2,
    logpdf_mv_t,
)
from .errors import MultivecError, NonPositiveInput
from .generators import Kotz
from .mle import fit_dependent, fit_independent
from .sampling import (
    make_rng,
    sample_gengamma_beta1,
    sample_gengamma_beta2,
    sample_gengamma_pearson2,
    sample_gengamma_pearson7,
    sample_mv_beta1,
    sample_mv_beta2,
    sample_mv_elliptical,
    sample_mv_gengamma,
    sample_mv_log_elliptical,
    sample_mv_pearson2,
    sample_mv_t,
)
from .validation import (
    CheckReport,
    quad_normalization,
    run_identity_suite,
    run_normalization_suite,
    run_pushforward_suite,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NO_CONVERGENCE = 2
EXIT_CHECK_FAILED = 3


class _CliError(Exception):
    """Input-level failure; message goes to stderr, exit code 1."""


class _Parser(argparse.ArgumentParser):
    # the exit-code contract reserves 2 for non-convergence, so flag errors
    # must exit 1 rather than argparse's default 2
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    """17-significant-digit decimal, the lossless double round-trip encoding."""
    return format(float(x), ".17g")


def _canonical_json(obj) -> str:
    """Canonical document encoding: sorted keys, 2-space indent, .17g floats."""

    def enc(o, indent: int) -> str:
        pad, pad_in = " " * indent, " " * (indent + 2)
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [
                f'{pad_in}"{k}": {enc(o[k], indent + 2)}' for k in sorted(o)
            ]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            items = [f"{pad_in}{enc(v, indent + 2)}" for v in o]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        if isinstance(o, bool):
            return "true" if o else "false"
        if isinstance(o, (int, np.integer)):
            return str(int(o))
        if isinstance(o, (float, np.floating)):
            if not math.isfinite(o):
                raise _CliError(f"cannot encode non-finite number {o}")
            return _fmt(o)
        if o is None:
            return "null"
        if isinstance(o, str):
            return json.dumps(o)
        raise _CliError(f"cannot encode {type(o).__name__}")

    return enc(obj, 0) + "\n"


# ---------------------------------------------------------------------------
# Flat-parameter model registry


def _need(params: dict[str, float], key: str) -> float:
    if key not in params:
        raise _CliError(f"params missing key '{key}'")
    v = params[key]
    if not isinstance(v, (int, float)) or not math.isfinite(float(v)):
        raise _CliError(f"params key '{key}' must be a finite number, got {v!r}")
    return float(v)


def _indexed(params: dict[str, float], prefix: str, k: int, start: int = 1) -> list[float]:
    return [_need(params, f"{prefix}{i}") for i in range(start, start + k)]


def _count(params: dict[str, float], prefix: str, start: int = 1) -> int:
    """Number of consecutive prefixN keys from N=start; gaps name the missing key."""
    indices = sorted(
        int(key[len(prefix):])
        for key in params
        if key.startswith(prefix) and key[len(prefix):].isdigit()
    )
    indices = [i for i in indices if i >= start]
    if not indices:
        raise _CliError(f"params missing key '{prefix}{start}'")
    for want, got in zip(range(start, start + len(indices)), indices):
        if want != got:
            raise _CliError(f"params missing key '{prefix}{want}'")
    return len(indices)


def _kotz(params: dict[str, float]) -> Kotz:
    return Kotz(q=_need(params, "q"), r=_need(params, "r"), s=_need(params, "s"))


class _Model:
    """One CLI family: flat params -> density over d columns and a sampler."""

    def __init__(self, name, infer_k, dim, columns, logpdf, sampler):
        self.name = name
        self.infer_k = infer_k          # params -> k          (for sample)
        self.dim = dim                  # (params, k) -> columns
        self.columns = columns          # d -> header names
        self.logpdf = logpdf            # (params, k, x[m,d]) -> [m]
        self.sampler = sampler          # (params, k, rng, n) -> [n, d]

    def k_from_dim(self, params: dict[str, float], d: int) -> int:
        for k in range(1, d + 1):
            if self.dim(params, k) == d:
                return k
        raise _CliError(
            f"model '{self.name}' has no block count matching a {d}-dimensional point"
        )


def _pair_columns(d: int) -> list[str]:
    if d == 1:
        return ["u"]
    if d == 2:
        return ["u", "v"]
    return [f"x{i}" for i in range(1, d + 1)]


def _kotz_gamma_build(params: dict[str, float], k: int) -> tuple[ScaleShapeParams, Kotz]:
    if k == 1:
        shapes = (_need(params, "alpha"),)
        scales = (_need(params, "sigma") ** 2,)
    elif k == 2:
        shapes = (_need(params, "alpha"), _need(params, "beta"))
        scales = (_need(params, "sigma1") ** 2, _need(params, "sigma2") ** 2)
    else:
        raise _CliError("kotz-gamma supports 1 or 2 columns; use mv-gengamma beyond")
    return ScaleShapeParams(shapes=shapes, scales=scales), _kotz(params)


def _kotz_gamma_sample(params: dict[str, float], k: int, rng, n: int) -> np.ndarray:
    # a sample of n pairs is ONE draw of the 2n-block law with per-column
    # shapes and scales repeated: that is the dependence structure the
    # paired fit maximizes
    if k != 2:
        raise _CliError("kotz-gamma sampling emits pairs; provide alpha/beta params")
    alpha, beta = _need(params, "alpha"), _need(params, "beta")
    s1, s2 = _need(params, "sigma1") ** 2, _need(params, "sigma2") ** 2
    spec = _kotz(params)
    if n == 0:
        return np.zeros((0, 2))
    base = ScaleShapeParams(shapes=(alpha,) * n + (beta,) * n, scales=(s1,) * n + (s2,) * n)
    flat = np.asarray(sample_mv_gengamma(base, spec, rng))
    return np.column_stack([flat[:n], flat[n:]])


def _registry() -> dict[str, _Model]:
    models: dict[str, _Model] = {}

    def kg_infer(params):
        return 2 if "sigma2" in params or "beta" in params else 1

    models["kotz-gamma"] = _Model(
        "kotz-gamma",
        infer_k=kg_infer,
        dim=lambda p, k: k,
        columns=_pair_columns,
        logpdf=lambda p, k, x: logpdf_mv_gengamma(*_kotz_gamma_build(p, k), x),
        sampler=_kotz_gamma_sample,
    )

    def gg_build(p, k):
        return (
            ScaleShapeParams(
                shapes=tuple(_indexed(p, "alpha", k)),
                scales=tuple(v**2 for v in _indexed(p, "sigma", k)),
            ),
            _kotz(p),
        )

    models["mv-gengamma"] = _Model(
        "mv-gengamma",
        infer_k=lambda p: _count(p, "alpha"),
        dim=lambda p, k: k,
        columns=_pair_columns,
        logpdf=lambda p, k, x: logpdf_mv_gengamma(*gg_build(p, k), x),
        sampler=lambda p, k, rng, n: np.atleast_2d(
            sample_mv_gengamma(*gg_build(p, k), rng, size=n)
        ),
    )

    def ell_build(p, k):
        return (
            MvEllipticalParams.scalar_blocks(
                mus=_indexed(p, "mu", k), sigma2s=[v**2 for v in _indexed(p, "sigma", k)]
            ),
            _kotz(p),
        )

    models["mv-elliptical"] = _Model(
        "mv-elliptical",
        infer_k=lambda p: _count(p, "mu"),
        dim=lambda p, k: k,
        columns=_pair_columns,
        logpdf=lambda p, k, x: logpdf_mv_elliptical(*ell_build(p, k), x),
        sampler=lambda p, k, rng, n: np.atleast_2d(
            sample_mv_elliptical(*ell_build(p, k), rng, size=n)
        ),
    )
    models["log-elliptical"] = _Model(
        "log-elliptical",
        infer_k=lambda p: _count(p, "mu"),
        dim=lambda p, k: k,
        columns=_pair_columns,
        logpdf=lambda p, k, x: logpdf_mv_log_elliptical(*ell_build(p, k), x),
        sampler=lambda p, k, rng, n: np.atleast_2d(
            sample_mv_log_elliptical(*ell_build(p, k), rng, size=n)
        ),
    )

    def t_build(p, k):
        return MvTParams(
            dims=(1,) * k, alpha0=_need(p, "alpha0"), betas=tuple(_indexed(p, "beta", k))
        )

    models["mv-t"] = _Model(
        "mv-t",
        infer_k=lambda p: _count(p, "beta"),
        dim=lambda p, k: k,
        columns=_pair_columns,
        logpdf=lambda p, k, x: logpdf_mv_t(t_build(p, k), x),
        sampler=lambda p, k, rng, n: np.atleast_2d(sample_mv_t(t_build(p, k), rng, size=n)),
    )
    models["mv-pearson2"] = _Model(
        "mv-pearson2",
        infer_k=lambda p: _count(p, "beta"),
        dim=lambda p, k: k,
        columns=_pair_columns,
        logpdf=lambda p, k, x: logpdf_mv_pearson2(t_build(p, k), x),
        sampler=lambda p, k, rng, n: np.atleast_2d(
            sample_mv_pearson2(t_build(p, k), rng, size=n)
        ),
    )

    def beta_build(p, k):
        return BetaParams(
            shape=ExtendedShape(
                alphas=tuple(_indexed(p, "alpha", k)), alpha0=_need(p, "alpha0")
            ),
            betas=tuple(_indexed(p, "beta", k)),
        )

    for name, dens, samp in (
        ("mv-beta1", logpdf_mv_beta1, sample_mv_beta1),
        ("mv-beta2", logpdf_mv_beta2, sample_mv_beta2),
    ):
        models[name] = _Model(
            name,
            infer_k=lambda p: _count(p, "alpha"),
            dim=lambda p, k: k,
            columns=_pair_columns,
            logpdf=lambda p, k, x, dens=dens: dens(beta_build(p, k), x),
            sampler=lambda p, k, rng, n, samp=samp: np.atleast_2d(
                samp(beta_build(p, k), rng, size=n)
            ),
        )

    def joint_vec_build(p, k):
        sig = [v**2 for v in _indexed(p, "sigma", k + 1, start=0)]
        return JointScaleParams(
            spec=_kotz(p), alpha0=_need(p, "alpha0"), sigma2s=tuple(sig), dims=(1,) * k
        )

    def joint_scalar_build(p, k):
        sig = [v**2 for v in _indexed(p, "sigma", k + 1, start=0)]
        return JointScaleParams(
            spec=_kotz(p),
            alpha0=_need(p, "alpha0"),
            sigma2s=tuple(sig),
            alphas=tuple(_indexed(p, "alpha", k)),
        )

    def joint_columns(d):
        return ["s0"] + _pair_columns(d - 1)

    def joint_sampler(samp, build):
        def run(p, k, rng, n):
            s0, blocks = samp(build(p, k), rng, size=n)
            return np.column_stack([np.asarray(s0), np.atleast_2d(blocks)])

        return run

    def joint_logpdf(dens, build):
        def run(p, k, x):
            x = np.atleast_2d(x)
            return dens(build(p, k), x[:, 0], x[:, 1:])

        return run

    for name, dens, samp, build, infer in (
        ("gengamma-pearson7", logpdf_gengamma_pearson7, sample_gengamma_pearson7,
         joint_vec_build, lambda p: _count(p, "sigma", start=0) - 1),
        ("gengamma-pearson2", logpdf_gengamma_pearson2, sample_gengamma_pearson2,
         joint_vec_build, lambda p: _count(p, "sigma", start=0) - 1),
        ("gengamma-beta1", logpdf_gengamma_beta1, sample_gengamma_beta1,
         joint_scalar_build, lambda p: _count(p, "alpha")),
        ("gengamma-beta2", logpdf_gengamma_beta2, sample_gengamma_beta2,
         joint_scalar_build, lambda p: _count(p, "alpha")),
    ):
        models[name] = _Model(
            name,
            infer_k=infer,
            dim=lambda p, k: k + 1,
            columns=joint_columns,
            logpdf=joint_logpdf(dens, build),
            sampler=joint_sampler(samp, build),
        )

    return models


_MODELS = _registry()


def _get_model(name: str) -> _Model:
    if name not in _MODELS:
        known = ", ".join(sorted(_MODELS))
        raise _CliError(f"unknown model '{name}'; known models: {known}")
    return _MODELS[name]


# ---------------------------------------------------------------------------
# Params documents and CSV plumbing


def _load_params(path: str) -> dict[str, float]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise _CliError(f"cannot read params file: {exc}")
    except json.JSONDecodeError as exc:
        raise _CliError(f"params file is not valid JSON: {exc}")
    if not isinstance(doc, dict):
        raise _CliError("params file must contain a JSON object")
    params = doc.get("params", doc)
    if not isinstance(params, dict):
        raise _CliError("'params' must be a JSON object of name -> number")
    return params


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise _CliError(f"cannot write {path}: {exc}")


def _write_csv(path: str, header: Sequence[str], rows: np.ndarray) -> None:
    lines = [",".join(header)]
    for row in np.atleast_2d(rows):
        lines.append(",".join(_fmt(v) for v in row))
    _write_text(path, "\n".join(lines) + "\n")


def _read_pairs_csv(path: str) -> SampleMatrix:
    try:
        fh = open(path, "r", encoding="utf-8-sig", newline="")
    except OSError as exc:
        raise _CliError(f"cannot read input file: {exc}")
    with fh:
        reader = csv.reader(fh)
        rows: list[tuple[float, float]] = []
        header = next(reader, None)
        if header is None:
            raise _CliError("line 1: empty file; expected header 'u,v'")
        if [c.strip() for c in header] != ["u", "v"]:
            raise _CliError(f"line 1: expected header 'u,v', got {','.join(header)!r}")
        for lineno, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise _CliError(f"line {lineno}: expected 2 columns, got {len(row)}")
            vals = []
            for col, cell in zip("uv", row):
                try:
                    v = float(cell)
                except ValueError:
                    raise _CliError(
                        f"line {lineno}: column {col} is not a decimal: {cell!r}"
                    )
                if not math.isfinite(v) or v <= 0:
                    raise _CliError(
                        f"line {lineno}: column {col} must be a positive decimal, got {cell.strip()}"
                    )
                vals.append(v)
            rows.append((vals[0], vals[1]))
    if len(rows) < 3:
        raise _CliError(f"need at least 3 data rows, got {len(rows)}")
    return SampleMatrix(np.asarray(rows, dtype=float))


def _threads() -> int:
    raw = os.environ.get("MULTIVEC_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise _CliError(f"MULTIVEC_THREADS must be an integer, got {raw!r}")


# ---------------------------------------------------------------------------
# Subcommands


def cmd_fit(args) -> int:
    data = _read_pairs_csv(args.input)
    fit = fit_dependent if args.mode == "dependent" else fit_independent
    result = fit(data, max_iter=args.max_iters, restarts=args.restarts)
    doc = {
        "loglik": result.loglik,
        "meta": {
            "converged": result.converged,
            "iterations": result.iterations,
            "restarts": len(result.restarts),
            "seed": None,
            "version": __version__,
        },
        "mode": result.mode,
        "model": "kotz-gamma",
        "params": dict(result.params),
    }
    _write_text(args.out, _canonical_json(doc))
    return EXIT_OK if result.converged else EXIT_NO_CONVERGENCE


def cmd_eval(args) -> int:
    model = _get_model(args.model)
    params = _load_params(args.params)
    try:
        point = [float(tok) for tok in args.point.split(",") if tok.strip() != ""]
    except ValueError:
        raise _CliError(f"--point must be comma-separated decimals, got {args.point!r}")
    if not point:
        raise _CliError("--point is empty")
    if not all(math.isfinite(v) for v in point):
        raise _CliError("--point values must be finite")
    k = model.k_from_dim(params, len(point))
    x = np.asarray([point], dtype=float)
    try:
        value = float(np.asarray(model.logpdf(params, k, x)).reshape(-1)[0])
    except NonPositiveInput:
        value = -math.inf  # outside the positive support the density is zero
    print("-inf" if value == -math.inf else format(value, ".12g"))
    return EXIT_OK


def cmd_sample(args) -> int:
    model = _get_model(args.model)
    params = _load_params(args.params)
    if args.n < 0:
        raise _CliError(f"-n must be >= 0, got {args.n}")
    k = model.infer_k(params)
    d = model.dim(params, k)
    header = model.columns(d)
    if args.n == 0:
        _write_csv(args.out, header, np.zeros((0, d)))
        return EXIT_OK
    rng = make_rng(args.seed)
    rows = np.atleast_2d(np.asarray(model.sampler(params, k, rng, args.n), dtype=float))
    if rows.shape != (args.n, d):
        raise _CliError(
            f"internal: sampler produced shape {rows.shape}, expected {(args.n, d)}"
        )
    _write_csv(args.out, header, rows)
    return EXIT_OK


def _corrupted_report() -> CheckReport:
    """Hidden hook: run the quadrature oracle against a mis-scaled density."""
    base = ScaleShapeParams(shapes=(2.0,), scales=(1.0,))
    spec = Kotz(q=1.0, r=2.0, s=1.5)

    def broken(x):
        return math.log(2.0) + logpdf_mv_gengamma(base, spec, x)

    return quad_normalization(
        broken, [(0.0, math.inf)], 1e-6, name="corrupt-hook-mis-scaled-density"
    )


def cmd_check(args) -> int:
    suites: dict[str, Callable[[], list[CheckReport]]] = {
        "normalization": lambda: run_normalization_suite(args.seed),
        "identities": lambda: run_identity_suite(args.seed, n_draws=args.n_draws),
        "pushforward": lambda: run_pushforward_suite(args.seed, n_draws=args.n_draws),
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    with ThreadPoolExecutor(max_workers=min(_threads(), len(names))) as pool:
        futures = [pool.submit(suites[name]) for name in names]
        reports = [r for fut in futures for r in fut.result()]
    if args.corrupt:
        reports.append(_corrupted_report())
    for rep in reports:
        print(rep.to_json())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def cmd_grid(args) -> int:
    if args.model != "kotz-gamma-2d":
        raise _CliError("grid supports --model kotz-gamma-2d")
    params = _load_params(args.params)
    base, spec = _kotz_gamma_build(params, 2)
    try:
        bounds = [float(tok) for tok in args.range.split(",")]
    except ValueError:
        raise _CliError(f"--range must be four decimals, got {args.range!r}")
    if len(bounds) != 4:
        raise _CliError(f"--range must be 'umin,umax,vmin,vmax', got {args.range!r}")
    umin, umax, vmin, vmax = bounds
    if not all(math.isfinite(b) for b in bounds) or umin <= 0 or vmin <= 0:
        raise _CliError("--range bounds must be finite and positive")
    if args.steps < 1:
        raise _CliError(f"--steps must be >= 1, got {args.steps}")
    if args.steps > 1 and (umin >= umax or vmin >= vmax):
        raise _CliError("--range needs umin < umax and vmin < vmax")
    us = np.linspace(umin, umax, args.steps)
    vs = np.linspace(vmin, vmax, args.steps)
    uu, vv = np.meshgrid(us, vs, indexing="ij")
    pts = np.column_stack([uu.ravel(), vv.ravel()])
    logpdf = np.asarray(logpdf_mv_gengamma(base, spec, pts), dtype=float)
    with np.errstate(under="ignore"):
        pdf = np.exp(logpdf)  # underflow flushes to exactly 0
    rows = np.column_stack([pts, pdf])
    _write_csv(args.out, ["u", "v", "pdf"], rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point


def _build_parser() -> _Parser:
    parser = _Parser(prog="multivec", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"multivec {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_fit = sub.add_parser("fit", help="fit the paired kotz-gamma model to a u,v CSV")
    p_fit.add_argument("--model", required=True, choices=["kotz-gamma"])
    p_fit.add_argument("--mode", required=True, choices=["dependent", "independent"])
    p_fit.add_argument("--input", required=True, help="CSV with header u,v")
    p_fit.add_argument("--out", required=True, help="output params JSON")
    p_fit.add_argument("--restarts", type=int, default=3)
    p_fit.add_argument("--max-iters", type=int, default=10_000)
    p_fit.set_defaults(func=cmd_fit)

    p_eval = sub.add_parser("eval", help="print the log-density at a point")
    p_eval.add_argument("--model", required=True)
    p_eval.add_argument("--params", required=True, help="params JSON file")
    p_eval.add_argument(
        "--point", required=True,
        help='comma-separated point "v1,v2,..." (write --point=-1,2 when v1 is negative)',
    )
    p_eval.set_defaults(func=cmd_eval)

    p_sample = sub.add_parser("sample", help="write N draws to CSV")
    p_sample.add_argument("--model", required=True)
    p_sample.add_argument("--params", required=True, help="params JSON file")
    p_sample.add_argument("-n", type=int, required=True, help="number of rows")
    p_sample.add_argument("--seed", type=int, required=True)
    p_sample.add_argument("--out", required=True, help="output CSV")
    p_sample.set_defaults(func=cmd_sample)

    p_check = sub.add_parser("check", help="run validation suites, emit JSON lines")
    p_check.add_argument(
        "--suite", required=True,
        choices=["normalization", "identities", "pushforward", "all"],
    )
    p_check.add_argument("--seed", type=int, default=0)
    p_check.add_argument("--n-draws", type=int, default=100_000)
    p_check.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p_check.set_defaults(func=cmd_check)

    p_grid = sub.add_parser("grid", help="emit a density surface as u,v,pdf rows")
    p_grid.add_argument("--model", required=True)
    p_grid.add_argument("--params", required=True, help="params JSON file")
    p_grid.add_argument("--range", required=True, help='"umin,umax,vmin,vmax"')
    p_grid.add_argument("--steps", type=int, required=True)
    p_grid.add_argument("--out", required=True, help="output CSV")
    p_grid.set_defaults(func=cmd_grid)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MultivecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
