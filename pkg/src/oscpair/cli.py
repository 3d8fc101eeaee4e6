"""Command-line interface: spectra, moments, Wigner grids, scans, verification.

Sweep output is deterministic and byte-stable: rows are generated in
sorted order and floats are printed with 17 significant digits. Rows
whose coupling violates ``epsilon < omega_x*omega_y`` are skipped with a
warning on stderr instead of aborting the sweep.

Exit codes: 0 success, 1 validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Iterable

import numpy as np

from .model import QuantumNumbers, SystemParams, cutoff_angle, diagonalize, energy
from .moments import second_and_fourth_moments
from .oracle import run_verification
from .purity import makarov_entropy, purity_exact
from .steering import steering
from .wigner import PhasePoint, wigner_lab

STEERING_PRESETS = ("0.99", "0.8", "0.6")


def _parse_range(text: str) -> np.ndarray:
    """Parse ``start:stop:steps`` into a linspace."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"range must look like start:stop:steps, got {text!r}")
    start, stop = float(parts[0]), float(parts[1])
    steps = int(parts[2])
    if steps < 1:
        raise ValueError(f"range needs at least one step, got {steps}")
    return np.linspace(start, stop, steps)


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".17g")


def _write_rows(rows: list[dict], fieldnames: list[str], fmt: str, output: str | None) -> None:
    if fmt == "json":
        payload = json.dumps(rows, indent=2)
        if output:
            with open(output, "w") as fh:
                fh.write(payload + "\n")
        else:
            sys.stdout.write(payload + "\n")
        return

    def emit(fh) -> None:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_fmt(row[name]) for name in fieldnames])

    if output:
        with open(output, "w", newline="") as fh:
            emit(fh)
    else:
        emit(sys.stdout)


def _valid_epsilons(omega_x: float, omega_y: float, values: Iterable[float]) -> list[float]:
    bound = omega_x * omega_y
    kept = []
    for eps in values:
        if 0.0 <= eps < bound:
            kept.append(float(eps))
        else:
            print(
                f"warning: skipping epsilon={eps:g} "
                f"(requires 0 <= epsilon < omega_x*omega_y = {bound:g})",
                file=sys.stderr,
            )
    return kept


def _state_grid(n_max: int, m_max: int) -> list[QuantumNumbers]:
    return [QuantumNumbers(n, m) for n in range(n_max + 1) for m in range(m_max + 1)]


def cmd_spectrum(args) -> int:
    if args.r_scan:
        rows = []
        for r in _parse_range(args.r_scan):
            if r <= 0:
                print(f"warning: skipping r={r:g} (resonance rate must be positive)",
                      file=sys.stderr)
                continue
            rows.append({"r": float(r), "theta_c": cutoff_angle(float(r))})
        _write_rows(rows, ["r", "theta_c"], args.format, args.output)
        return 0

    eps_values = _valid_epsilons(args.omega_x, args.omega_y, _parse_range(args.epsilon))
    rows = []
    for eps in eps_values:
        params = SystemParams(args.omega_x, args.omega_y, eps)
        for nm in _state_grid(args.n_max, args.m_max):
            rows.append({
                "omega_x": args.omega_x, "omega_y": args.omega_y, "epsilon": eps,
                "n": nm.n, "m": nm.m, "energy": energy(params, nm),
            })
    _write_rows(rows, ["omega_x", "omega_y", "epsilon", "n", "m", "energy"],
                args.format, args.output)
    return 0


def cmd_moments(args) -> int:
    params = SystemParams(args.omega_x, args.omega_y, args.epsilon)
    ms = second_and_fourth_moments(params, QuantumNumbers(args.n, args.m))
    payload = {
        "omega_x": args.omega_x, "omega_y": args.omega_y, "epsilon": args.epsilon,
        "n": args.n, "m": args.m,
        "xx": ms.xx, "yy": ms.yy, "pp": ms.pp, "qq": ms.qq, "xy": ms.xy, "pq": ms.pq,
        "xxyy": ms.xxyy, "ppqq": ms.ppqq, "xxqq": ms.xxqq, "yypp": ms.yypp,
    }
    text = json.dumps(payload, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_wigner_eval(args) -> int:
    params = SystemParams(args.omega_x, args.omega_y, args.epsilon)
    modes = diagonalize(params)
    nm = QuantumNumbers(args.n, args.m)
    rows = []
    for x in _parse_range(args.x):
        for p in _parse_range(args.p):
            for y in _parse_range(args.y):
                for q in _parse_range(args.q):
                    value = wigner_lab(modes, nm, PhasePoint(x, p, y, q))
                    rows.append({"x": x, "p": p, "y": y, "q": q, "W": value})
    _write_rows(rows, ["x", "p", "y", "q", "W"], args.format, args.output)
    return 0


def cmd_purity_scan(args) -> int:
    eps_values = _valid_epsilons(args.omega_x, args.omega_y, _parse_range(args.epsilon))
    rows = []
    for eps in eps_values:
        params = SystemParams(args.omega_x, args.omega_y, eps)
        mu = diagonalize(params).mu
        for nm in _state_grid(args.n_max, args.m_max):
            res = purity_exact(params, nm)
            slm = makarov_entropy(nm, mu)
            rows.append({
                "omega_x": args.omega_x, "omega_y": args.omega_y, "epsilon": eps,
                "n": nm.n, "m": nm.m,
                "purity": res.purity, "S_L": res.linear_entropy,
                "S_L_makarov": slm, "delta_S_L": res.linear_entropy - slm,
            })
    _write_rows(rows, ["omega_x", "omega_y", "epsilon", "n", "m",
                       "purity", "S_L", "S_L_makarov", "delta_S_L"],
                args.format, args.output)
    return 0


def steering_preset_rows(omega_y: float, n_max: int = 6, steps: int = 161) -> list[dict]:
    """Detuned steering sweep over the ``(n, 0)`` and ``(0, m)`` families.

    ``omega_x = 1`` and ``epsilon`` runs over ``[0, omega_y]``; rows at or
    beyond the stability bound are dropped.
    """
    omega_x = 1.0
    eps_values = [float(e) for e in np.linspace(0.0, omega_y, steps)
                  if 0.0 <= e < omega_x * omega_y]
    states = [QuantumNumbers(n, 0) for n in range(1, n_max + 1)]
    states += [QuantumNumbers(0, m) for m in range(1, n_max + 1)]
    rows = []
    for eps in eps_values:
        params = SystemParams(omega_x, omega_y, eps)
        for nm in states:
            res = steering(params, nm)
            rows.append({
                "omega_x": omega_x, "omega_y": omega_y, "epsilon": eps,
                "n": nm.n, "m": nm.m,
                "s_xy": res.s_xy, "s_yx": res.s_yx, "delta": res.delta,
                "s_xy_raw": res.s_xy_raw, "s_yx_raw": res.s_yx_raw,
            })
    return rows


_STEERING_FIELDS = ["omega_x", "omega_y", "epsilon", "n", "m",
                    "s_xy", "s_yx", "delta", "s_xy_raw", "s_yx_raw"]


def cmd_steering_scan(args) -> int:
    if args.preset:
        rows = steering_preset_rows(float(args.preset), n_max=args.n_max, steps=args.steps)
        _write_rows(rows, _STEERING_FIELDS, args.format, args.output)
        return 0

    eps_values = _valid_epsilons(args.omega_x, args.omega_y, _parse_range(args.epsilon))
    rows = []
    for eps in eps_values:
        params = SystemParams(args.omega_x, args.omega_y, eps)
        for nm in _state_grid(args.n_max, args.m_max):
            res = steering(params, nm)
            rows.append({
                "omega_x": args.omega_x, "omega_y": args.omega_y, "epsilon": eps,
                "n": nm.n, "m": nm.m,
                "s_xy": res.s_xy, "s_yx": res.s_yx, "delta": res.delta,
                "s_xy_raw": res.s_xy_raw, "s_yx_raw": res.s_yx_raw,
            })
    _write_rows(rows, _STEERING_FIELDS, args.format, args.output)
    return 0


def cmd_verify(args) -> int:
    report = run_verification()
    if args.json:
        sys.stdout.write(json.dumps(report.as_dict(), indent=2) + "\n")
    else:
        for check in report.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{status} {check.name}: max deviation {check.max_deviation:.3e} "
                  f"(tolerance {check.tolerance:.1e}) - {check.detail}")
        print(f"{'all checks passed' if report.passed else 'VERIFICATION FAILED'} "
              f"in {report.elapsed_seconds:.1f} s")
    return 0 if report.passed else 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscpair",
        description="Spectra, Wigner functions, moments, purity and steering "
                    "of two bilinearly coupled harmonic oscillators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, sweep: bool = True) -> None:
        p.add_argument("--output", default=None, help="write to this path instead of stdout")
        if sweep:
            p.add_argument("--format", choices=("csv", "json"), default="csv")

    def physical(p: argparse.ArgumentParser) -> None:
        p.add_argument("--omega-x", type=float, default=1.0)
        p.add_argument("--omega-y", type=float, default=1.0)

    p = sub.add_parser("spectrum", help="cutoff-angle scan or eigenenergy table")
    physical(p)
    p.add_argument("--r-scan", default=None, metavar="A:B:STEPS",
                   help="emit (r, theta_c) rows over this resonance-rate range")
    p.add_argument("--epsilon", default="0:0:1", metavar="A:B:STEPS")
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--m-max", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("moments", help="moment table of one state as JSON")
    physical(p)
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    common(p, sweep=False)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("wigner-eval", help="Wigner function on a phase-space grid")
    physical(p)
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    for axis in ("x", "p", "y", "q"):
        p.add_argument(f"--{axis}", default="0:0:1", metavar="A:B:STEPS")
    common(p)
    p.set_defaults(func=cmd_wigner_eval)

    p = sub.add_parser("purity-scan", help="purity / linear entropy sweep")
    physical(p)
    p.add_argument("--epsilon", default="0:0.9:10", metavar="A:B:STEPS")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--m-max", type=int, default=3)
    common(p)
    p.set_defaults(func=cmd_purity_scan)

    p = sub.add_parser("steering-scan", help="directional steering sweep")
    physical(p)
    p.add_argument("--epsilon", default="0:0.9:10", metavar="A:B:STEPS")
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--m-max", type=int, default=6)
    p.add_argument("--preset", choices=STEERING_PRESETS, default=None,
                   help="detuned sweep with omega_x=1, omega_y=PRESET over the "
                        "(n,0) and (0,m) families")
    p.add_argument("--steps", type=int, default=161,
                   help="epsilon steps for --preset sweeps")
    common(p)
    p.set_defaults(func=cmd_steering_scan)

    p = sub.add_parser("verify", help="run the oracle verification suite")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
