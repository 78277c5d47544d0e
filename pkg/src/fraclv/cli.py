"""Command-line interface: simulation, analysis and reproduction harness.

Subcommands
    simulate          integrate one run config, write trajectory.csv + manifest.json
    equilibria        print the five fixed points with admissibility audit
    stability         print the full per-equilibrium verdict report
    classify          region class A-D for one complex number and order
    reproduce-table2  re-derive the bundled reference matrix, PASS/FAIL per cell

Exit codes: 0 success, 1 usage or configuration error, 2 numerical
divergence (the partial trajectory is still written).

The run config is a single JSON object; unknown keys are rejected so a typo
cannot silently change a run.  Schema (cf_mode and normalization optional):

    {
      "operator": "caputo" | "cf",
      "alpha": 0.98,
      "params": {"a1": 3, "a2": 0.5, "a3": 4, "a4": 3, "a5": 4, "a6": 9, "a7": 4},
      "initial": [0.5, 0.9, 0.1],
      "horizon": 50.0,
      "step": 0.01,
      "cf_mode": "paper" | "corrected",
      "normalization": 1.0
    }
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from dataclasses import dataclass

from . import __version__
from .model import ModelParams, equilibria, jacobian, vector_field
from .presets import KNOWN_DISCREPANCIES, PRESETS, TABLE2
from .solvers import DivergenceError, SolverConfig, Trajectory, integrate_caputo, integrate_cf
from .spectral import characteristic_cubic, cubic_roots
from .stability import (
    caputo_stable,
    cf_stable_disk,
    cf_stable_theorem,
    classify_region,
    equilibrium_report,
)

__all__ = ["ConfigError", "RunConfig", "load_config", "main", "console_main"]

_REQUIRED_KEYS = {"operator", "alpha", "params", "initial", "horizon", "step"}
_OPTIONAL_KEYS = {"cf_mode", "normalization"}
_PARAM_KEYS = {f"a{i}" for i in range(1, 8)}

#: Comparison tolerance for the reference-matrix value cells (printed data
#: carries 2-3 decimals).
TABLE_VALUE_TOL = 1e-2


class ConfigError(ValueError):
    """Malformed run configuration; message carries a file/field diagnostic."""


@dataclass(frozen=True)
class RunConfig:
    operator: str
    alpha: float
    params: ModelParams
    initial: tuple[float, float, float]
    horizon: float
    step: float
    cf_mode: str = "paper"
    normalization: float = 1.0

    def solver_config(self) -> SolverConfig:
        return SolverConfig(
            step=self.step,
            horizon=self.horizon,
            normalization=self.normalization,
            cf_mode=self.cf_mode,
        )

    def as_dict(self) -> dict:
        return {
            "operator": self.operator,
            "alpha": self.alpha,
            "params": self.params.as_dict(),
            "initial": list(self.initial),
            "horizon": self.horizon,
            "step": self.step,
            "cf_mode": self.cf_mode,
            "normalization": self.normalization,
        }


def _finite_number(raw, where: str) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {raw!r}")
    value = float(raw)
    if not math.isfinite(value):
        raise ConfigError(f"{where}: value must be finite, got {value}")
    return value


def parse_config(data: dict, where: str = "config") -> RunConfig:
    """Validate a decoded config object; rejects unknown or missing fields."""
    if not isinstance(data, dict):
        raise ConfigError(f"{where}: expected a JSON object at top level")
    unknown = set(data) - _REQUIRED_KEYS - _OPTIONAL_KEYS
    if unknown:
        raise ConfigError(f"{where}: unknown field(s) {sorted(unknown)}")
    missing = _REQUIRED_KEYS - set(data)
    if missing:
        raise ConfigError(f"{where}: missing field(s) {sorted(missing)}")

    operator = data["operator"]
    if operator not in ("caputo", "cf"):
        raise ConfigError(f"{where}.operator: must be 'caputo' or 'cf', got {operator!r}")

    alpha = _finite_number(data["alpha"], f"{where}.alpha")
    if not (0.0 < alpha <= 1.0):
        raise ConfigError(f"{where}.alpha: must be in (0, 1], got {alpha}")

    raw_params = data["params"]
    if not isinstance(raw_params, dict):
        raise ConfigError(f"{where}.params: expected an object with keys a1..a7")
    bad = set(raw_params) ^ _PARAM_KEYS
    if bad:
        raise ConfigError(f"{where}.params: keys must be exactly a1..a7 (mismatch: {sorted(bad)})")
    values = {k: _finite_number(v, f"{where}.params.{k}") for k, v in raw_params.items()}
    for key, value in values.items():
        if not value > 0.0:
            raise ConfigError(f"{where}.params.{key}: must be positive, got {value}")
    params = ModelParams(**values)

    initial = data["initial"]
    if not isinstance(initial, (list, tuple)) or len(initial) != 3:
        raise ConfigError(f"{where}.initial: expected a list of 3 numbers")
    initial = tuple(_finite_number(v, f"{where}.initial[{i}]") for i, v in enumerate(initial))

    horizon = _finite_number(data["horizon"], f"{where}.horizon")
    step = _finite_number(data["step"], f"{where}.step")
    if not step > 0.0:
        raise ConfigError(f"{where}.step: must be positive, got {step}")
    if not horizon >= step:
        raise ConfigError(f"{where}.horizon: must be >= step, got {horizon}")

    cf_mode = data.get("cf_mode", "paper")
    if cf_mode not in ("paper", "corrected"):
        raise ConfigError(f"{where}.cf_mode: must be 'paper' or 'corrected', got {cf_mode!r}")
    normalization = _finite_number(data.get("normalization", 1.0), f"{where}.normalization")
    if not normalization > 0.0:
        raise ConfigError(f"{where}.normalization: must be positive, got {normalization}")

    return RunConfig(
        operator=operator,
        alpha=alpha,
        params=params,
        initial=initial,
        horizon=horizon,
        step=step,
        cf_mode=cf_mode,
        normalization=normalization,
    )


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
    return parse_config(data, where=path)


# ---------------------------------------------------------------------------
# output helpers


def _write_atomic(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _trajectory_csv(traj: Trajectory) -> str:
    # 17 significant digits: parses back to the exact same double
    lines = ["t,x,y,z"]
    for t, row in zip(traj.times, traj.states):
        lines.append(f"{t:.16e},{row[0]:.16e},{row[1]:.16e},{row[2]:.16e}")
    return "\n".join(lines) + "\n"


def _complex_pair(w: complex) -> list[float]:
    return [w.real, w.imag]


def _verdict_dict(verdict) -> dict:
    return {
        "operator": verdict.operator,
        "stable": verdict.stable,
        "per_eigenvalue": [
            {"eigenvalue": _complex_pair(w), "condition": tag}
            for w, tag in verdict.per_eigenvalue
        ],
    }


def _equilibrium_dict(eq) -> dict:
    return {
        "kind": eq.kind,
        "point": [float(v) for v in eq.point],
        "admissible": eq.admissible,
        "conditions": [[name, ok] for name, ok in eq.conditions],
    }


# ---------------------------------------------------------------------------
# subcommands


def _integrate(config: RunConfig) -> Trajectory:
    field = vector_field(config.params)
    solver = config.solver_config()
    if config.operator == "caputo":
        return integrate_caputo(field, config.initial, config.alpha, solver)
    return integrate_cf(field, config.initial, config.alpha, solver)


def cmd_simulate(config_path: str, out_dir: str, alpha=None, cf_mode=None) -> int:
    try:
        config = load_config(config_path)
        config = _apply_overrides(config, alpha, cf_mode)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    os.makedirs(out_dir, exist_ok=True)

    started = time.perf_counter()
    diverged_at = None
    try:
        traj = _integrate(config)
    except DivergenceError as exc:
        traj = exc.partial
        diverged_at = exc.step_index
        print(f"warning: {exc}", file=sys.stderr)
    duration = time.perf_counter() - started

    csv_path = os.path.join(out_dir, "trajectory.csv")
    _write_atomic(csv_path, _trajectory_csv(traj))
    manifest = {
        "config": config.as_dict(),
        "version": __version__,
        "outputs": ["trajectory.csv"],
        "duration_seconds": duration,
        "diverged": diverged_at is not None,
        "divergence_step": diverged_at,
    }
    _write_atomic(os.path.join(out_dir, "manifest.json"),
                  json.dumps(manifest, indent=2) + "\n")
    return 2 if diverged_at is not None else 0


def cmd_equilibria(config_path: str) -> int:
    try:
        config = load_config(config_path)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    records = [_equilibrium_dict(eq) for eq in equilibria(config.params)]
    print(json.dumps(records, indent=2))
    return 0


def cmd_stability(config_path: str, out_dir=None, alpha=None) -> int:
    try:
        config = load_config(config_path)
        config = _apply_overrides(config, alpha, None)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    reports = equilibrium_report(config.params, config.alpha)
    payload = {
        "alpha": config.alpha,
        "params": config.params.as_dict(),
        "cf_applicable": config.alpha < 1.0,
        "equilibria": [],
    }
    for rep in reports:
        entry = _equilibrium_dict(rep.equilibrium)
        entry["eigenvalues"] = [_complex_pair(w) for w in rep.spectrum.eigenvalues]
        entry["cubic"] = {
            "p": rep.spectrum.analysis.p,
            "q": rep.spectrum.analysis.q,
            "delta": rep.spectrum.analysis.delta,
            "branch": rep.spectrum.analysis.branch,
        }
        entry["verdicts"] = {
            "caputo": _verdict_dict(rep.caputo),
            "cf_theorem": _verdict_dict(rep.cf_theorem) if rep.cf_theorem else "not applicable",
            "cf_disk": _verdict_dict(rep.cf_disk) if rep.cf_disk else "not applicable",
        }
        entry["table1_conditions"] = [[name, ok] for name, ok in rep.table1]
        entry["regions"] = list(rep.regions) if rep.regions is not None else "not applicable"
        payload["equilibria"].append(entry)
    text = json.dumps(payload, indent=2)
    print(text)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
        _write_atomic(os.path.join(out_dir, "stability_report.json"), text + "\n")
    return 0


def cmd_classify(lam_real: float, lam_imag: float, alpha: float) -> int:
    if not (0.0 < alpha < 1.0):
        print(f"error: alpha must be in (0, 1), got {alpha}", file=sys.stderr)
        return 1
    lam = complex(lam_real, lam_imag)
    verdict = caputo_stable([lam], alpha)
    theorem = cf_stable_theorem([lam], alpha)
    print(json.dumps({
        "lambda": _complex_pair(lam),
        "alpha": alpha,
        "region": classify_region(lam, alpha),
        "caputo_stable": verdict.stable,
        "cf_disk_stable": cf_stable_disk(lam, alpha),
        "cf_theorem_pass": theorem.stable,
    }, indent=2))
    return 0


def _multiset_distance(computed, printed) -> float:
    xs = sorted(computed, key=lambda w: (w.real, w.imag))
    ys = sorted((complex(v) for v in printed), key=lambda w: (w.real, w.imag))
    return max(abs(u - v) for u, v in zip(xs, ys))


def cmd_reproduce_table2() -> int:
    """Re-derive every reference cell; exit 0 iff nothing FAILs.

    Verdict cells compare the computed stability verdict (cone test for
    caputo, any-of-four test for cf) against the published mark, across every
    published order regime of the example.  Value cells compare points and
    spectra within TABLE_VALUE_TOL.
    """
    n_pass = n_known = n_fail = 0
    v_pass = v_fail = 0
    for name, preset in PRESETS.items():
        rows = TABLE2[name]
        eqs = {eq.kind: eq for eq in equilibria(preset.params)}
        for kind, row in rows.items():
            eq = eqs[kind]
            spectrum = cubic_roots(characteristic_cubic(jacobian(preset.params, eq.point)))

            point_err = max(abs(float(a) - b) for a, b in zip(eq.point, row["point"]))
            point_ok = point_err <= TABLE_VALUE_TOL and eq.admissible == row["admissible"]
            v_pass, v_fail = v_pass + point_ok, v_fail + (not point_ok)
            print(f"{name} {kind} point: {'PASS' if point_ok else 'FAIL'} "
                  f"(max component error {point_err:.2e}, admissible={eq.admissible})")

            eig_err = _multiset_distance(spectrum.eigenvalues, row["eigenvalues"])
            eig_ok = eig_err <= TABLE_VALUE_TOL
            v_pass, v_fail = v_pass + eig_ok, v_fail + (not eig_ok)
            print(f"{name} {kind} eigenvalues: {'PASS' if eig_ok else 'FAIL'} "
                  f"(multiset error {eig_err:.2e})")

            for operator in ("caputo", "cf"):
                cells = []
                for alpha in preset.alphas:
                    if operator == "caputo":
                        got = caputo_stable(spectrum, alpha).stable
                    else:
                        got = cf_stable_theorem(spectrum, alpha).stable
                    cells.append((alpha, got, row["marks"][(operator, alpha)]))
                agree = all(got == want for _, got, want in cells)
                detail = ", ".join(
                    f"alpha={a:g}: computed={'stable' if g else 'unstable'} "
                    f"published={'stable' if w else 'unstable'}" for a, g, w in cells
                )
                if agree:
                    n_pass += 1
                    print(f"{name} {kind} {operator}: PASS ({detail})")
                elif (name, kind, operator) in KNOWN_DISCREPANCIES:
                    n_known += 1
                    print(f"{name} {kind} {operator}: KNOWN-DISCREPANCY ({detail})")
                else:
                    n_fail += 1
                    print(f"{name} {kind} {operator}: FAIL ({detail})")

    total = n_pass + n_known + n_fail
    print(f"stability cells: {total} total, {n_pass} PASS, "
          f"{n_known} KNOWN-DISCREPANCY, {n_fail} FAIL")
    print(f"value cells: {v_pass + v_fail} total, {v_pass} PASS, {v_fail} FAIL")
    return 0 if n_fail == 0 and v_fail == 0 else 1


# ---------------------------------------------------------------------------
# argument parsing


def _apply_overrides(config: RunConfig, alpha, cf_mode) -> RunConfig:
    data = config.as_dict()
    if alpha is not None:
        data["alpha"] = alpha
    if cf_mode is not None:
        data["cf_mode"] = cf_mode
    return parse_config(data, where="config(overridden)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fraclv",
        description="Fractional-order three-species Lotka-Volterra toolkit",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="integrate a run config to CSV")
    p.add_argument("--config", required=True, help="path to JSON run config")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--alpha", type=float, default=None, help="override config alpha")
    p.add_argument("--mode", choices=("paper", "corrected"), default=None,
                   help="override cf_mode")

    p = sub.add_parser("equilibria", help="print the five fixed points")
    p.add_argument("--config", required=True)

    p = sub.add_parser("stability", help="print the per-equilibrium verdict report")
    p.add_argument("--config", required=True)
    p.add_argument("--out", default=None, help="also write stability_report.json here")
    p.add_argument("--alpha", type=float, default=None, help="override config alpha")

    p = sub.add_parser("classify", help="region class of one eigenvalue")
    p.add_argument("real", type=float)
    p.add_argument("imag", type=float)
    p.add_argument("alpha", type=float)

    sub.add_parser("reproduce-table2", help="re-derive the bundled reference matrix")
    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to the documented code 1
        code = exc.code if isinstance(exc.code, int) else 0
        return 0 if code == 0 else 1
    if args.command == "simulate":
        return cmd_simulate(args.config, args.out, alpha=args.alpha, cf_mode=args.mode)
    if args.command == "equilibria":
        return cmd_equilibria(args.config)
    if args.command == "stability":
        return cmd_stability(args.config, out_dir=args.out, alpha=args.alpha)
    if args.command == "classify":
        return cmd_classify(args.real, args.imag, args.alpha)
    if args.command == "reproduce-table2":
        return cmd_reproduce_table2()
    raise AssertionError(f"unhandled command {args.command!r}")


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
