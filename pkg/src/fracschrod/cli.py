"""Command-line front end: ``fracschrod <subcommand> [--config FILE] [--out DIR] [flags]``.

Every subcommand computes all of its outputs in memory first and then writes
them; if a write fails, files already written by the run are removed.  The
exit status is 0 on success, 1 on solver or I/O failure and 2 on bad input.
Discrepant report rows do not affect the exit status.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import box, fracderiv, free_particle, ladder, oracle, oscillator, report
from .params import Convention, derive_scales
from .svg import Axes, Curve, emit_svg

__all__ = ["build_parser", "main"]


class _Fail(Exception):
    """Solver or I/O failure (exit status 1)."""


def _fmt(v) -> str:
    return report._fmt(v)


def table(columns, rows, config: report.RunConfig | None = None) -> str:
    buf = io.StringIO()
    if config is not None:
        for key, val in config.as_dict().items():
            buf.write(f"# {key} = {val}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([c if isinstance(c, str) else _fmt(c) for c in row])
    return buf.getvalue()


def write_outputs(out_dir: Path, files: dict[str, str]) -> list[Path]:
    """Write ``files`` atomically (temp file + rename); remove everything on failure."""
    written: list[Path] = []
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for name in sorted(files):
            target = out_dir / name
            fd, tmp = tempfile.mkstemp(dir=out_dir, prefix=f".{name}.", suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                    fh.write(files[name])
                os.replace(tmp, target)
            except BaseException:
                Path(tmp).unlink(missing_ok=True)
                raise
            written.append(target)
    except OSError as exc:
        for path in written:
            path.unlink(missing_ok=True)
        raise _Fail(f"cannot write outputs: {exc}") from exc
    return written


# ------------------------------------------------------------- subcommands


def run_free(cfg: report.RunConfig, args) -> dict[str, str]:
    p = cfg.params
    E = args.energy if args.energy is not None else p.hbar**2 * (p.xi**2 + 1.0) / (2.0 * p.m)
    roots = free_particle.characteristic_roots(p, E)
    wave = free_particle.DampedPlaneWave.from_energy(p, E)
    x = np.linspace(args.x_min, args.x_max, args.points)
    psi = free_particle.sample_damped_wave(wave, x)
    rows = [(xi, v.real, v.imag, abs(v) ** 2) for xi, v in zip(x, psi.values)]
    files = {
        "free.csv": table(["x", "re_psi", "im_psi", "abs2"], rows, cfg),
        "free_roots.csv": table(
            ["energy", "lambda1_re", "lambda1_im", "lambda2_re", "lambda2_im", "discriminant", "regime"],
            [(E, roots.lambda1.real, roots.lambda1.imag, roots.lambda2.real, roots.lambda2.imag,
              roots.discriminant, roots.regime.value)],
            cfg,
        ),
    }
    if args.svg:
        files["free.svg"] = emit_svg([Curve("|psi|^2", x, psi.density())], Axes("damped plane wave", "x", "|psi|^2"))
    return files


def run_box(cfg: report.RunConfig, args) -> dict[str, str]:
    p = cfg.params
    spec = box.quantize_box(p, cfg.levels)
    numeric = oracle.solve(p, oracle.BOX, oracle.box_grid(p, cfg.grid_points), cfg.levels)
    rows = [(lv.n, lv.k, lv.E, e, abs(lv.E - e)) for lv, e in zip(spec.levels, numeric.values)]
    x = np.linspace(-p.L / 2.0, p.L / 2.0, 401)
    states = [box.box_eigenfunction(p, n, x) for n in range(1, cfg.levels + 1)]
    wave_rows = [(xv, *(s.values[i] for s in states)) for i, xv in enumerate(x)]
    return {
        "box_spectrum.csv": table(["n", "k_n", "E_n", "E_oracle", "deviation"], rows, cfg),
        "box_wavefunctions.csv": table(["x"] + [f"psi_{n}" for n in range(1, cfg.levels + 1)], wave_rows, cfg),
        "box_density.svg": emit_svg([Curve("|psi_1|^2", x, states[0].density())], Axes("damped box, n = 1", "x", "|psi|^2")),
        "box_spectrum.svg": emit_svg(
            [Curve("E_n", np.arange(1, cfg.levels + 1, dtype=float), spec.energies, step=True)],
            Axes("damped box spectrum", "n", "E"),
        ),
    }


def run_osc(cfg: report.RunConfig, args) -> dict[str, str]:
    p, conv = cfg.params, cfg.convention
    n_max = cfg.levels - 1
    scales = derive_scales(p, conv)
    spec = oscillator.quantize_oscillator(p, conv, n_max)
    numeric = oracle.solve(p, oracle.HARMONIC, oracle.harmonic_grid(scales.mu, cfg.grid_points), cfg.levels, conv)
    rows = [(lv.n, lv.eps, lv.E, e, abs(lv.eps - e)) for lv, e in zip(spec.levels, numeric.values)]
    pn_rows = [(n, k, str(c)) for n in range(n_max + 1) for k, c in enumerate(oscillator.pn_polynomial(n).coeffs)]
    y = np.linspace(-scales.mu - 6.0, 6.0, 601)
    states = [oscillator.osc_state(p, n, conv).in_y(y) for n in range(n_max + 1)]
    wave_rows = [(yv, *(s[i] for s in states)) for i, yv in enumerate(y)]
    plain = oscillator.osc_state(p, 0, conv, mu=0.0).in_y(y)
    return {
        "osc_spectrum.csv": table(["n", "eps_n", "E_n", "eps_oracle", "deviation"], rows, cfg),
        "osc_pn.csv": table(["n", "k", "G_n_2k"], pn_rows, cfg),
        "osc_wavefunctions.csv": table(["y"] + [f"psi_{n}" for n in range(n_max + 1)], wave_rows, cfg),
        "osc_ground.svg": emit_svg(
            [Curve("damped psi_0", y, states[0]), Curve("undamped psi_0", y, plain)],
            Axes(f"ground state, peak at y = -{scales.mu:.6g}", "y", "psi"),
        ),
    }


def _expectation_rows(reports):
    return [
        (r.quantity, r.paper_formula_value.real, r.paper_formula_value.imag,
         r.quadrature_value.real, r.quadrature_value.imag, r.deviation)
        for r in reports
    ]


def run_ladder(cfg: report.RunConfig, args) -> dict[str, str]:
    import json

    p = cfg.params
    n = args.n
    reports = [ladder.fractionary_energy_paper(n, p), ladder.momentum_expectation_paper(p, n)]
    mu = derive_scales(p, Convention.PAPER_OSCILLATOR).mu
    ratios = [("create", n, ladder.ladder_ratio(n, mu, ladder.LadderKind.CREATE),
               ladder.measured_ratio(p, n, ladder.LadderKind.CREATE))]
    if n >= 1:
        ratios.append(("destroy", n, ladder.ladder_ratio(n, mu), ladder.measured_ratio(p, n, ladder.LadderKind.DESTROY)))
    doc = {
        "config": cfg.as_dict(),
        "expectations": [
            {"quantity": r.quantity,
             "paper": [r.paper_formula_value.real + 0.0, r.paper_formula_value.imag + 0.0],
             "quadrature": [r.quadrature_value.real + 0.0, r.quadrature_value.imag + 0.0],
             "deviation": r.deviation}
            for r in reports
        ],
        "ratios": [{"kind": k, "n": m, "tabulated": a, "measured": b} for k, m, a, b in ratios],
    }
    return {
        "ladder.csv": table(["quantity", "paper_re", "paper_im", "quadrature_re", "quadrature_im", "deviation"],
                            _expectation_rows(reports), cfg),
        "ladder_ratios.csv": table(["kind", "n", "tabulated", "measured"], ratios, cfg),
        "ladder.json": json.dumps(doc, indent=2, sort_keys=True) + "\n",
    }


def run_frac(cfg: report.RunConfig, args) -> dict[str, str]:
    header = [f"{k} = {v}" for k, v in cfg.as_dict().items()] + [f"alpha = {args.alpha:.17g}"]
    if args.input:
        f = fracderiv.read_sampled_csv(args.input)
        return {"frac.csv": fracderiv.derivative_table(f, args.alpha, header_lines=header)}
    if not args.demo:
        raise ValueError("frac needs --demo or --input FILE")
    f = fracderiv.SampledFunction.from_callable(lambda x: x, 0.0, 1.0, args.dx)
    return {
        "frac.csv": fracderiv.derivative_table(
            f, args.alpha, oracle=lambda x: fracderiv.power_rule_oracle(1.0, args.alpha, x), header_lines=header
        )
    }


def run_verify(cfg: report.RunConfig, args) -> dict[str, str]:
    rows = report.claim_suite(cfg)
    return {"report.csv": report.emit_csv(rows, cfg), "report.json": report.emit_json(rows, cfg)}


RUNNERS = {
    "free": run_free,
    "box": run_box,
    "osc": run_osc,
    "ladder": run_ladder,
    "frac": run_frac,
    "verify": run_verify,
}


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key = value file")
    common.add_argument("--out", type=Path, help="output directory (beats $FRACSCHROD_OUT)")
    for key in ("m", "c", "hbar", "omega", "L"):
        common.add_argument(f"--{key}", type=float)
    common.add_argument("--B", help="damping coefficient: number or m/sqrt2, m/sqrt8, inf")
    common.add_argument("--convention", choices=[c.value for c in Convention])
    common.add_argument("--levels", type=int)
    common.add_argument("--grid-points", type=int, dest="grid_points")

    parser = argparse.ArgumentParser(prog="fracschrod", description="Fractional-damping quantum mechanics workbench")
    sub = parser.add_subparsers(dest="command", required=True)
    free = sub.add_parser("free", parents=[common], help="damped plane wave samples")
    free.add_argument("--energy", type=float)
    free.add_argument("--x-min", type=float, default=0.0, dest="x_min")
    free.add_argument("--x-max", type=float, default=5.0, dest="x_max")
    free.add_argument("--points", type=int, default=501)
    free.add_argument("--svg", action="store_true")
    sub.add_parser("box", parents=[common], help="infinite well spectrum and states")
    sub.add_parser("osc", parents=[common], help="damped oscillator spectrum, P_n table, states")
    lad = sub.add_parser("ladder", parents=[common], help="ladder ratios and expectation rows")
    lad.add_argument("--n", type=int, default=0)
    frac = sub.add_parser("frac", parents=[common], help="Grunwald-Letnikov derivative table")
    frac.add_argument("--demo", action="store_true", help="half-derivative of f(x) = x")
    frac.add_argument("--input", type=Path, help="CSV with columns x,value")
    frac.add_argument("--alpha", type=float, default=0.5)
    frac.add_argument("--dx", type=float, default=1e-2)
    sub.add_parser("verify", parents=[common], help="full claim suite -> report.csv, report.json")
    return parser


def _overrides(args) -> dict:
    keys = ("m", "c", "hbar", "omega", "L", "B", "convention", "levels", "grid_points")
    return {k: getattr(args, k) for k in keys if getattr(args, k, None) is not None}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = report.load_run_config(args.config, _overrides(args), out=args.out)
    except (OSError, ValueError) as exc:
        print(f"fracschrod: bad configuration: {exc}", file=sys.stderr)
        return 2
    try:
        files = RUNNERS[args.command](cfg, args)
        written = write_outputs(cfg.out_dir, files)
    except _Fail as exc:
        print(f"fracschrod: {exc}", file=sys.stderr)
        return 1
    except (oracle.EigensolverError, ArithmeticError, OSError) as exc:
        print(f"fracschrod: {args.command} failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"fracschrod: {args.command}: {exc}", file=sys.stderr)
        return 2
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
