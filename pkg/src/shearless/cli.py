"""Command-line interface.

Each subcommand loads the optional config file, applies flag overrides,
runs one experiment and writes its CSV tables, a standalone plot script
per figure, and the rendered PNG into the output directory.  Exit codes:
0 success, 1 configuration or usage error, 2 violated numerical contract.
"""

import argparse
import math
import os
import sys

from . import experiments
from .config import apply_overrides, default_config, load_config
from .errors import ConfigError, InvalidValue, NumericsError, ShearlessError
from .output import write_table
from .plots import emit_plot_script, render_figure
from .version import __version__

# --periods means the per-experiment duration knob, which differs by name.
_PERIOD_KEYS = {
    "sos": ("sos.periods",),
    "evolve": ("evolve.periods",),
    "concurrence": ("concurrence.periods",),
    "ensemble": ("ensemble.periods",),
    "rotation": ("rotation.iterations",),
    "report": (
        "sos.periods",
        "evolve.periods",
        "concurrence.periods",
        "ensemble.periods",
    ),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="shearless", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"shearless {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a key = value config file")
    common.add_argument("--out", help="output directory (default from config)")
    common.add_argument("--omega", type=float, help="drive angular frequency")
    common.add_argument("--j0", type=int, help="packet centre site")
    common.add_argument("--k0", type=float, help="packet mean momentum")
    common.add_argument("--sigma", type=float, help="spectral smoothing width")
    common.add_argument("--periods", type=int, help="run length in drive periods")
    common.add_argument("--seed", type=int, help="ensemble rng seed")
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "sos": "stroboscopic phase portrait of the classical drive",
        "evolve": "wavepacket distribution and spread diagnostics",
        "floquet": "local quasienergy spectrum, smoothed density and peaks",
        "concurrence": "pairwise concurrence traces at the probe pairs",
        "rotation": "rotation-number profile and extremum search",
        "ensemble": "circular spread of a matched classical cloud",
        "report": "run the full battery at the reference parameter points",
    }
    for name, text in descriptions.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def _overrides_from_flags(args) -> dict:
    overrides = {}
    for flag, key in (("omega", "omega"), ("j0", "j0"), ("k0", "k0")):
        value = getattr(args, flag)
        if value is not None:
            overrides[key] = value
    if args.sigma is not None:
        overrides["floquet.sigma"] = args.sigma
    if args.seed is not None:
        overrides["ensemble.rng_seed"] = args.seed
    if args.periods is not None:
        keys = _PERIOD_KEYS.get(args.command)
        if not keys:
            raise InvalidValue(f"--periods does not apply to '{args.command}'")
        for key in keys:
            overrides[key] = args.periods
    return overrides


def _load(args):
    config = load_config(args.config) if args.config else default_config()
    config = apply_overrides(config, _overrides_from_flags(args))
    out_dir = args.out if args.out else config.out_dir
    os.makedirs(out_dir, exist_ok=True)
    return config, out_dir


def _emit(out_dir: str, stem: str, table, kind=None) -> None:
    csv_path = os.path.join(out_dir, f"{stem}.csv")
    write_table(table, csv_path)
    print(f"wrote {csv_path}")
    if kind is not None:
        script_path = os.path.join(out_dir, f"{stem}_plot.py")
        png_path = os.path.join(out_dir, f"{stem}.png")
        emit_plot_script(csv_path, kind, script_path, png_path)
        render_figure(csv_path, kind, png_path)
        print(f"wrote {script_path}")
        print(f"wrote {png_path}")


def _run_one(command: str, config, out_dir: str, stem=None) -> None:
    stem = stem or command
    if command == "sos":
        _emit(out_dir, stem, experiments.run_sos(config), "sos")
    elif command == "evolve":
        tables = experiments.run_evolve(config)
        _emit(out_dir, f"{stem}_distribution", tables["distribution"], "heatmap")
        _emit(out_dir, f"{stem}_diagnostics", tables["diagnostics"], "series")
    elif command == "floquet":
        tables = experiments.run_floquet(config)
        _emit(out_dir, f"{stem}_spectrum", tables["spectrum"], "spectrum")
        _emit(out_dir, f"{stem}_smoothed", tables["smoothed"], "series")
        _emit(out_dir, f"{stem}_peaks", tables["peaks"])
    elif command == "concurrence":
        _emit(out_dir, stem, experiments.run_concurrence(config), "concurrence")
    elif command == "rotation":
        _emit(out_dir, stem, experiments.run_rotation(config), "rotation")
    elif command == "ensemble":
        _emit(out_dir, stem, experiments.run_ensemble(config), "series")
    else:
        raise ConfigError(f"unknown command {command!r}")


# Reference parameter points: three drive frequencies for the portraits and
# packets, the near-integrable ladder packet at k0 = pi / 2, and the probe
# pairs for the concurrence contrast.
_REPORT_JOBS = (
    ("sos_w020", "sos", {"omega": 0.20}),
    ("sos_w016", "sos", {"omega": 0.16}),
    ("sos_w012", "sos", {"omega": 0.12}),
    ("evolve_w020_k10", "evolve", {"omega": 0.20, "k0": 1.0, "evolve.stride": 5}),
    ("evolve_w020_k00", "evolve", {"omega": 0.20, "k0": 0.0, "evolve.stride": 5}),
    ("evolve_w012_k00", "evolve", {"omega": 0.12, "k0": 0.0, "evolve.stride": 5}),
    ("floquet_w100", "floquet", {"omega": 1.0, "k0": math.pi / 2}),
    ("floquet_w012", "floquet", {"omega": 0.12}),
    ("floquet_w020", "floquet", {"omega": 0.20}),
    ("concurrence_w012", "concurrence", {"omega": 0.12}),
    ("concurrence_w020", "concurrence", {"omega": 0.20}),
    ("rotation_w100", "rotation", {"omega": 1.0}),
    ("ensemble_w012", "ensemble", {"omega": 0.12}),
    ("ensemble_w020", "ensemble", {"omega": 0.20}),
)


def _run_report(config, out_dir: str) -> None:
    for stem, command, overrides in _REPORT_JOBS:
        job_config = apply_overrides(config, overrides)
        _run_one(command, job_config, out_dir, stem=stem)


def _dispatch(argv) -> int:
    args = build_parser().parse_args(argv)
    config, out_dir = _load(args)
    if args.command == "report":
        _run_report(config, out_dir)
    else:
        _run_one(args.command, config, out_dir)
    return 0


def main(argv=None) -> int:
    try:
        return _dispatch(argv)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericsError as exc:
        print(f"numerical contract violated: {exc}", file=sys.stderr)
        return 2
    except ShearlessError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
