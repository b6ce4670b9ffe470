"""Command-line front end: config parsing, orchestration, CSV emission.

Two modes reproduce the paper-style experiments:
  sweep  - summary statistics per strategy over a distance grid
  cdf    - empirical spectral-efficiency CDF per strategy at one distance

Configuration comes from defaults, overridden by an optional
`key = value` file (# comments allowed), overridden by flags.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass, fields, replace

from .montecarlo import SweepSpec, run_cdf, run_sweep
from .scenario import ScenarioConfig
from .strategies import ALL_STRATEGIES, StrategyKind


class CliError(Exception):
    """Validation or I/O failure reported as a single-line diagnostic."""


def _parse_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1", "on"):
        return True
    if t in ("false", "no", "0", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _parse_strategies(text: str) -> tuple[StrategyKind, ...]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise ValueError("empty strategy list")
    try:
        return tuple(StrategyKind(name) for name in names)
    except ValueError:
        valid = ", ".join(k.value for k in StrategyKind)
        raise ValueError(f"unknown strategy in {text!r}; valid: {valid}") \
            from None


@dataclass(frozen=True)
class Settings:
    """Fully resolved run settings (scenario + experiment + output)."""

    mode: str = "sweep"
    distance_m: float = 70.0
    lmin: float = 10.0
    lmax: float = 100.0
    lstep: float = 10.0
    trials: int = 10_000
    seed: int = 0
    blocked_direct: bool = False
    strategies: tuple[StrategyKind, ...] = ALL_STRATEGIES
    tx_power_dbm: float = 0.0
    interferer_power_dbm: float = 3.0
    antenna_gain_db: float = 2.5
    noise_power_dbm: float = -110.0
    bandwidth_hz: float = 2e6
    path_loss_coeff_db_per_decade: float = 28.0
    interferer_min: int = 1
    interferer_max: int = 3
    workers: int = 1
    out: str = ""

    def scenario_config(self, distance_m: float | None = None,
                        ) -> ScenarioConfig:
        return ScenarioConfig(
            distance_m=self.distance_m if distance_m is None else distance_m,
            tx_power_dbm=self.tx_power_dbm,
            interferer_power_dbm=self.interferer_power_dbm,
            antenna_gain_db=self.antenna_gain_db,
            noise_power_dbm=self.noise_power_dbm,
            bandwidth_hz=self.bandwidth_hz,
            path_loss_coeff_db_per_decade=self.path_loss_coeff_db_per_decade,
            direct_blocked=self.blocked_direct,
            interferer_count_range=(self.interferer_min, self.interferer_max),
            master_seed=self.seed,
        )

    def sweep_distances(self) -> tuple[float, ...]:
        if self.lstep <= 0:
            raise CliError("lstep must be positive")
        if self.lmin > self.lmax:
            raise CliError("lmin must not exceed lmax")
        out = []
        d = self.lmin
        while d <= self.lmax + 1e-9:
            out.append(round(d, 9))
            d += self.lstep
        return tuple(out)


# key -> parser for the `key = value` config file grammar; every key also
# has the same meaning in --dump-config output.
_FILE_KEYS = {
    "mode": str,
    "distance_m": float,
    "lmin": float,
    "lmax": float,
    "lstep": float,
    "trials": int,
    "seed": int,
    "blocked_direct": _parse_bool,
    "strategies": _parse_strategies,
    "tx_power_dbm": float,
    "interferer_power_dbm": float,
    "antenna_gain_db": float,
    "noise_power_dbm": float,
    "bandwidth_hz": float,
    "path_loss_coeff_db_per_decade": float,
    "interferer_min": int,
    "interferer_max": int,
    "workers": int,
    "out": str,
}


def parse_config_file(path: str) -> dict:
    """Parse a line-oriented `key = value` config file."""
    values: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise CliError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _FILE_KEYS:
            raise CliError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            values[key] = _FILE_KEYS[key](value.strip())
        except ValueError as exc:
            raise CliError(f"{path}:{lineno}: bad value for {key}: {exc}") \
                from None
    return values


def dump_config(settings: Settings) -> str:
    """Render settings in the config-file grammar; re-parses to equality."""
    lines = []
    for key in _FILE_KEYS:
        value = getattr(settings, key)
        if key == "strategies":
            value = ",".join(k.value for k in value)
        elif isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, float):
            value = repr(value)
        lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="relaysim",
        description="Monte Carlo simulator for cooperative relaying "
                    "strategies in a smart-grid NAN.")
    p.add_argument("--mode", choices=("sweep", "cdf"))
    p.add_argument("--distance", type=float, dest="distance_m",
                   help="end-to-end distance in meters (cdf mode)")
    p.add_argument("--lmin", type=float)
    p.add_argument("--lmax", type=float)
    p.add_argument("--lstep", type=float)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--blocked-direct", action="store_true", default=None,
                   dest="blocked_direct")
    p.add_argument("--strategies", type=str,
                   help="comma-separated strategy names")
    p.add_argument("--workers", type=int)
    p.add_argument("--config", type=str, help="key = value config file")
    p.add_argument("--out", type=str, help="output CSV path")
    p.add_argument("--dump-config", action="store_true")
    return p


def resolve_settings(argv: list[str]) -> tuple[Settings, bool]:
    """Merge defaults <- config file <- flags into validated Settings."""
    args = _build_parser().parse_args(argv)
    merged: dict = {}
    if args.config:
        merged.update(parse_config_file(args.config))
    for key in _FILE_KEYS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    valid = {f.name for f in fields(Settings)}
    try:
        if isinstance(merged.get("strategies"), str):
            merged["strategies"] = _parse_strategies(merged["strategies"])
        settings = Settings(**{k: v for k, v in merged.items()
                               if k in valid})
        settings.scenario_config()  # surfaces scenario invariant violations
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if settings.trials < 1:
        raise CliError("trials must be >= 1")
    if settings.workers < 1:
        raise CliError("workers must be >= 1")
    if settings.mode == "sweep":
        settings.sweep_distances()
    return settings, bool(args.dump_config)


def _atomic_write(path: str, text: str) -> None:
    """Write to a temp file in the target directory, rename on success."""
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            os.unlink(tmp)
            raise
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc}") from None


def format_sweep_csv(results) -> str:
    lines = ["strategy,distance_m,mean_se,p10_se,p50_se,p90_se"]
    keys = sorted(results, key=lambda kd: (kd[0].value, kd[1]))
    for kind, distance in keys:
        s = results[(kind, distance)]
        lines.append(f"{kind.value},{distance:g},{s.mean:.6f},"
                     f"{s.p10:.6f},{s.p50:.6f},{s.p90:.6f}")
    return "\n".join(lines) + "\n"


def format_cdf_csv(cdfs) -> str:
    lines = ["strategy,spectral_efficiency,cdf"]
    for kind in sorted(cdfs, key=lambda k: k.value):
        cdf = cdfs[kind]
        for i, value in enumerate(cdf.sorted_samples, start=1):
            lines.append(f"{kind.value},{value:.6f},{i / cdf.n:.6f}")
    return "\n".join(lines) + "\n"


def run(settings: Settings) -> str:
    """Execute the configured experiment and return the CSV text."""
    if settings.mode == "sweep":
        spec = SweepSpec(
            base_config=settings.scenario_config(),
            distances_m=settings.sweep_distances(),
            strategies=settings.strategies,
            trials_per_point=settings.trials,
        )
        return format_sweep_csv(run_sweep(spec, workers=settings.workers))
    cdfs = run_cdf(settings.scenario_config(), settings.trials,
                   settings.strategies, workers=settings.workers)
    return format_cdf_csv(cdfs)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        settings, dump_only = resolve_settings(argv)
        if dump_only:
            sys.stdout.write(dump_config(settings))
            return 0
        out = settings.out or f"{settings.mode}.csv"
        settings = replace(settings, out=out)
        _atomic_write(out, run(settings))
    except CliError as exc:
        print(f"relaysim: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"relaysim: error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
