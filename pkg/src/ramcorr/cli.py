"""Command-line front end: ``nt <compute|verify|experiment> ...``.

compute prints a single object (sums, coefficients, correlations,
deviations), verify runs the library's identity suites and exits
nonzero on the first counterexample, experiment writes CSV or JSON
reports (plus a rendered figure unless --no-plot) for the
density-comparison, deviation-trend, and majorant runs.

Configuration comes from flags, falling back to an optional JSON config
file (--config), then to NT_SIEVE_LIMIT for the sieve bound, then to
per-command defaults; flags win.  Exit codes: 0 success, 1 verification
failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .characters import character_group, primitive_sum, toth_sum, upsilon
from .correlation import (corr_lambda_lambda, corr_lambda_lambdaN,
                          corr_tail, d_n_sum, delta_direct, delta_form1,
                          delta_form2, delta_trend, delta_via_corr,
                          deviation, expansion_rhs, hl_experiment, phi_sum,
                          psi_apc, remainder_r, singular_series_euler,
                          singular_series_truncated, t_sum)
from .errors import DegreeError, DomainError, NumericError, SieveRangeError
from .expansion import (delange_partial_sums, lambda_incomplete,
                        wintner_coeff_coprime, wintner_lambda_coeff)
from .logforms import LogForm
from .ramanujan import (brauer_rademacher, cohen_mean, crt_solution,
                        ramanujan_sum, ramanujan_sum_bruteforce, s_sum,
                        s_sum_closed)
from .sieve import build_sieve
from .verify import SUITES, run_suites

_USAGE_ERRORS = (DomainError, SieveRangeError, DegreeError, NumericError,
                 ValueError, KeyError, IndexError)


@dataclass
class RunConfig:
    sieve_limit: int = 2
    mode: str = "float"
    float_tolerance: float = 1e-9
    output_format: str = "csv"
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        if self.sieve_limit < 2:
            raise ValueError(f"sieve_limit must be >= 2, "
                             f"got {self.sieve_limit}")
        if self.float_tolerance <= 0:
            raise ValueError(f"float_tolerance must be > 0, "
                             f"got {self.float_tolerance}")
        if self.mode not in ("exact", "float"):
            raise ValueError(f"mode must be exact or float, got {self.mode}")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, "
                             f"got {self.output_format}")


def _parser() -> argparse.ArgumentParser:
    S = argparse.SUPPRESS
    common = argparse.ArgumentParser(add_help=False, argument_default=S)
    common.add_argument("--sieve-limit", type=int, dest="sieve_limit")
    common.add_argument("--mode", choices=("exact", "float"))
    common.add_argument("--tolerance", type=float, dest="tolerance")
    common.add_argument("--format", choices=("csv", "json"), dest="format")
    common.add_argument("--out")
    common.add_argument("--threads", type=int)
    common.add_argument("--seed", type=int)
    common.add_argument("--config", dest="config_file")

    p = argparse.ArgumentParser(
        prog="nt",
        description="number-theoretic sums, expansions, and correlation "
                    "deviation reports")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", parents=[common],
                        argument_default=S,
                        help="print one value")
    pc.add_argument("object", choices=sorted(_COMPUTE))
    for flag, typ in (
            ("--q", int), ("--n", int), ("--N", int), ("--h", int),
            ("--k", int), ("--r", int), ("--d", int), ("--m", int),
            ("--a", int), ("--t", int), ("--Q", int), ("--M", int),
            ("--chi", int), ("--prime-bound", int), ("--route", str)):
        pc.add_argument(flag, type=typ,
                        dest=flag.lstrip("-").replace("-", "_"))

    pv = sub.add_parser("verify", parents=[common],
                        argument_default=S,
                        help="run identity suites")
    pv.add_argument("suite", choices=sorted(SUITES) + ["all"])
    pv.add_argument("--N", type=int, dest="N")
    pv.add_argument("--hmax", type=int)
    pv.add_argument("--qmax", type=int)
    pv.add_argument("--pairmax", type=int)

    pe = sub.add_parser("experiment", parents=[common],
                        argument_default=S,
                        help="write a report file")
    pe.add_argument("kind", choices=("hl", "delta-trend", "delange"))
    pe.add_argument("--N", type=int, dest="N")
    pe.add_argument("--k", type=int)
    pe.add_argument("--Q", type=int)
    pe.add_argument("--prime-bound", type=int, dest="prime_bound")
    pe.add_argument("--grid")
    pe.add_argument("--h", type=int)
    pe.add_argument("--M", type=int)
    pe.add_argument("--no-plot", action="store_true", dest="no_plot")
    return p


def _settings(args: argparse.Namespace) -> dict:
    """flags > config file > environment; unset keys absent."""
    given = {k: v for k, v in vars(args).items()
             if k not in ("command",) and v is not None}
    merged: dict = {}
    path = given.pop("config_file", None)
    if path:
        with open(path) as f:
            loaded = json.load(f)
        if not isinstance(loaded, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
        merged.update(loaded)
    merged.update(given)
    if "sieve_limit" not in merged and os.environ.get("NT_SIEVE_LIMIT"):
        merged["sieve_limit"] = int(os.environ["NT_SIEVE_LIMIT"])
    return merged


def _config(cfg: dict, auto_limit: int) -> RunConfig:
    return RunConfig(
        sieve_limit=int(cfg.get("sieve_limit", max(auto_limit, 2))),
        mode=cfg.get("mode", "float"),
        float_tolerance=float(cfg.get("tolerance", 1e-9)),
        output_format=cfg.get("format", cfg.get("_default_format", "csv")),
        seed=int(cfg.get("seed", 0)),
        threads=int(cfg.get("threads", 1)),
    )


def _print_value(v, mode: str) -> None:
    if isinstance(v, LogForm):
        print(f"form {v}")
        print(f"value {v.evaluate():.17g}")
    elif isinstance(v, float):
        print(f"{v:.17g}")
    elif isinstance(v, Fraction):
        print(v)
    elif hasattr(v, "coeffs"):  # cyclotomic
        print(f"order {v.order} coeffs {list(v.coeffs)}")
        z = v.to_complex()
        print(f"value {z.real:.17g}{z.imag:+.17g}j")
    else:
        print(v)


def _need(cfg: dict, *names: str) -> list[int]:
    out = []
    for name in names:
        if name not in cfg:
            raise ValueError(f"missing required flag --{name}")
        out.append(cfg[name])
    return out


# object name -> (required params, sieve need fn, compute fn)
_COMPUTE = {
    "ramsum": ("q n", lambda c: c["q"],
               lambda t, c, m: ramanujan_sum(t, c["q"], c["n"])),
    "ramsum_brute": ("q n", lambda c: c["q"],
                     lambda t, c, m: ramanujan_sum_bruteforce(
                         t, c["q"], c["n"])),
    "lambda_n": ("N n", lambda c: max(c["N"], c["n"]),
                 lambda t, c, m: lambda_incomplete(t, c["N"], c["n"], m)),
    "wintner": ("N q", lambda c: c["N"],
                lambda t, c, m: wintner_lambda_coeff(t, c["N"], c["q"], m)),
    "wintner_coprime": ("N q r", lambda c: max(c["N"], c["q"], c["r"]),
                        lambda t, c, m: wintner_coeff_coprime(
                            t, c["N"], c["q"], c["r"], m)),
    "psi": ("N q k", lambda c: max(c["N"], c["q"]),
            lambda t, c, m: psi_apc(t, c["N"], c["q"], c["k"], m)),
    "deviation": ("h q k", lambda c: c["q"] + abs(c["h"]),
                  lambda t, c, m: deviation(t, c["h"], c["q"], c["k"])),
    "delta": ("N h", lambda c: c["N"] + abs(c["h"]) + 1,
              lambda t, c, m: _delta_route(t, c, m)),
    "corr": ("N h", lambda c: c["N"] + c["h"],
             lambda t, c, m: corr_lambda_lambdaN(t, c["N"], c["h"], m)),
    "corr_auto": ("N h", lambda c: c["N"] + c["h"],
                  lambda t, c, m: corr_lambda_lambda(t, c["N"], c["h"], m)),
    "corr_tail": ("N h", lambda c: c["N"] + c["h"],
                  lambda t, c, m: corr_tail(t, c["N"], c["h"], m)),
    "expansion_rhs": ("N h", lambda c: c["N"] + c["h"],
                      lambda t, c, m: expansion_rhs(t, c["N"], c["h"], m)),
    "remainder": ("N h", lambda c: c["N"] + c["h"],
                  lambda t, c, m: remainder_r(t, c["N"], c["h"], m)),
    "singular": ("h Q", lambda c: c["Q"],
                 lambda t, c, m: singular_series_truncated(
                     t, c["h"], c["Q"])),
    "singular_euler": ("k", lambda c: c["k"],
                       lambda t, c, m: singular_series_euler(
                           c["k"], c.get("prime_bound", 10 ** 6))),
    "s_sum": ("N q k r", lambda c: max(c["N"], c["q"], c["r"]),
              lambda t, c, m: s_sum(t, c["N"], c["q"], c["k"], c["r"])),
    "s_sum_closed": ("N q k r", lambda c: max(c["N"], c["q"], c["r"]),
                     lambda t, c, m: s_sum_closed(
                         t, c["N"], c["q"], c["k"], c["r"])),
    "crt": ("k t q r", lambda c: max(c["q"], c["r"]),
            lambda t, c, m: crt_solution(c["k"], c["t"], c["q"], c["r"])),
    "cohen": ("q h", lambda c: c["q"] + abs(c["h"]),
              lambda t, c, m: cohen_mean(t, c["q"], c["h"])),
    "brauer": ("q d n", lambda c: c["q"] + c["n"],
               lambda t, c, m: brauer_rademacher(t, c["q"], c["d"], c["n"])),
    "toth": ("q chi n", lambda c: 2 * c["q"] + c["n"],
             lambda t, c, m: toth_sum(
                 t, character_group(t, c["q"])[c["chi"]], c["n"])),
    "upsilon": ("q chi r N", lambda c: max(c["N"], c["q"], c["r"]),
                lambda t, c, m: upsilon(
                    t, character_group(t, c["q"])[c["chi"]],
                    c["r"], c["N"])),
    "primsum": ("d a", lambda c: c["d"],
                lambda t, c, m: primitive_sum(t, c["d"], c["a"])),
    "phi_sum": ("N h q r", lambda c: c["N"] + c["h"] + c["q"],
                lambda t, c, m: phi_sum(t, c["N"], c["h"], c["q"], c["r"],
                                        c.get("route", "both"))),
    "d_n_sum": ("N h q r", lambda c: c["N"] + c["h"] + c["q"],
                lambda t, c, m: d_n_sum(t, c["N"], c["h"], c["q"], c["r"])),
    "t_sum": ("N h m q r", lambda c: c["N"] + c["h"],
              lambda t, c, m: t_sum(t, c["N"], c["h"], c["m"],
                                    c["q"], c["r"])),
    "delange": ("N M", lambda c: c["N"] + c["M"],
                lambda t, c, m: delange_partial_sums(
                    t, c["N"], c["M"], m)[-1]),
}


def _delta_route(table, c, mode):
    route = c.get("route", "direct")
    fns = {"direct": delta_direct, "corr": delta_via_corr,
           "form1": delta_form1, "form2": delta_form2}
    if route not in fns:
        raise ValueError(f"unknown delta route {route!r}")
    return fns[route](table, c["N"], c["h"], mode)


def _cmd_compute(args: argparse.Namespace) -> int:
    cfg = _settings(args)
    obj = args.object
    req, limit_fn, fn = _COMPUTE[obj]
    _need(cfg, *req.split())
    config = _config(cfg, limit_fn(cfg) + 1)
    table = build_sieve(config.sieve_limit)
    _print_value(fn(table, cfg, config.mode), config.mode)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _settings(args)
    names = [args.suite]
    n_top = cfg.get("N")
    h_max = cfg.get("hmax")
    auto = 2048
    if n_top or h_max:
        auto = max(auto, (n_top or 200) + (h_max or 12) + 16)
    config = _config(cfg, auto)
    table = build_sieve(config.sieve_limit)
    results = run_suites(
        table, names,
        mode=cfg.get("mode"), seed=cfg.get("seed"),
        tolerance=cfg.get("tolerance"), n_top=n_top, h_max=h_max,
        q_max=cfg.get("qmax"), pair_max=cfg.get("pairmax"))
    failed = [r for r in results if not r.passed]
    for r in results:
        print(r.line())
    npass = sum(1 for r in results if r.passed and not r.observational)
    total = sum(1 for r in results if not r.observational)
    print(f"{npass}/{total} checks passed")
    return 1 if failed else 0


def _experiment_paths(cfg: dict, kind: str, fmt: str) -> tuple[str, str]:
    stem = kind.replace("-", "_")
    out = cfg.get("out") or f"{stem}.{fmt}"
    root, ext = os.path.splitext(out)
    if not ext:
        out = f"{out}.{fmt}"
        root = os.path.splitext(out)[0]
    return out, root + ".png"


def _cmd_experiment(args: argparse.Namespace) -> int:
    from . import figures, reports
    cfg = _settings(args)
    kind = args.kind

    if kind == "hl":
        cfg.setdefault("_default_format", "json")
        n = int(cfg.get("N", 10 ** 5))
        k = int(cfg.get("k", 1))
        q_trunc = int(cfg.get("Q", 10 ** 4))
        prime_bound = int(cfg.get("prime_bound", 10 ** 6))
        config = _config(cfg, max(n + 2 * k + 1, q_trunc))
        table = build_sieve(config.sieve_limit)
        rep = hl_experiment(table, n, k, q_trunc, prime_bound)
        data = rep
        used = {"N": n, "k": k, "Q": q_trunc, "prime_bound": prime_bound}
        header, rows = reports.hl_table(rep)
        plot = lambda path: figures.save_hl(rep, path)  # noqa: E731
    elif kind == "delta-trend":
        grid_text = str(cfg.get("grid", "50,100,200"))
        grid = [int(x) for x in grid_text.replace(" ", "").split(",") if x]
        if not grid:
            raise ValueError(f"empty grid {grid_text!r}")
        h = int(cfg.get("h", 2))
        config = _config(cfg, max(grid) + abs(h) + 1)
        table = build_sieve(config.sieve_limit)
        points = delta_trend(table, grid, h, config.mode)
        data = points
        used = {"grid": grid, "h": h, "mode": config.mode}
        header, rows = reports.trend_table(points)
        plot = lambda path: figures.save_delta_trend(points, path)  # noqa: E731
    else:  # delange
        n = int(cfg.get("N", 20))
        m_terms = int(cfg.get("M", 200))
        config = _config(cfg, n + m_terms + 1)
        table = build_sieve(config.sieve_limit)
        values = delange_partial_sums(table, n, m_terms, config.mode)
        data = [{"M": i + 1, "partial_sum": v}
                for i, v in enumerate(values)]
        used = {"N": n, "M": m_terms, "mode": config.mode}
        header, rows = reports.delange_table(values)
        plot = lambda path: figures.save_delange(values, path, n)  # noqa: E731

    fmt = config.output_format
    out, png = _experiment_paths(cfg, kind, fmt)
    meta_cfg = {"sieve_limit": config.sieve_limit, "mode": config.mode,
                "float_tolerance": config.float_tolerance,
                "output_format": fmt, "seed": config.seed,
                "threads": config.threads, **used}
    if fmt == "json":
        reports.write_json(out, reports.report_payload(kind, data, meta_cfg))
    else:
        reports.write_csv(out, header, rows)
    wrote = [out]
    if not cfg.get("no_plot"):
        plot(png)
        wrote.append(png)
    for path in wrote:
        print(f"wrote {path}")
    return 0


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_experiment(args)
    except _USAGE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
