"""Command-line front end.

    fuzzy-sphere spectrum --N 2,3
    fuzzy-sphere sweep --N 4 --standard --lambda-min 0.5 --points 100
    fuzzy-sphere peak --N 2,4,8,16 --which area
    fuzzy-sphere verify-algebra --N 1..50
    fuzzy-sphere figures --N 2,4,8 --out figdata

Exit status: 0 success, 1 invalid input, 2 algebra verification failed.
The thread count for sweeps comes from FUZZY_SPHERE_THREADS (default 1).
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import __version__
from .algebra import casimir_residual, commutator_residual, fuzzy_coordinates
from .heat_kernel import heat_trace, heat_trace_derivative
from .io import atomic_write, curve_to_csv, curve_to_json, rows_to_csv, sha256_file, write_curve
from .observables import (
    EnergyGrid,
    PeakBracketError,
    default_workers,
    find_peak,
    suggest_bracket,
    sweep,
)
from .spectrum import FuzzySphereParams, fuzzy_dirac_spectrum, spectrum_table, standard_dirac_spectrum

EXIT_OK, EXIT_INVALID, EXIT_VERIFY_FAILED = 0, 1, 2
ALGEBRA_TOLERANCE = 1e-10

COMMANDS = ("spectrum", "trace", "area", "dimension", "sweep", "peak", "verify-algebra", "figures")


class UsageError(ValueError):
    pass


@dataclasses.dataclass
class RunConfig:
    command: str
    n_list: list[int] = dataclasses.field(default_factory=list)
    n_max: int = 40
    standard: bool = False
    grid: EnergyGrid = dataclasses.field(default_factory=EnergyGrid.default)
    include_zero_modes: bool = False
    radius: float = 1.0
    normalize_area: bool = False
    output_path: str | None = None
    format: str = "csv"
    which: str = "area"
    bracket: tuple[float, float] | None = None
    x3_fault_scale: float = 1.0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if any(n < 1 for n in self.n_list):
            raise UsageError("every N must be >= 1")
        if self.n_max < 1:
            raise UsageError("--nmax must be >= 1")
        if not self.radius > 0:
            raise UsageError("--radius must be positive")
        if self.format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.format!r}")

    def fuzzy_params(self, n: int) -> FuzzySphereParams:
        return FuzzySphereParams(n, self.radius, self.include_zero_modes)

    def spectra(self, with_standard: bool | None = None):
        specs = [fuzzy_dirac_spectrum(self.fuzzy_params(n)) for n in self.n_list]
        if self.standard if with_standard is None else with_standard:
            specs.append(standard_dirac_spectrum(self.n_max))
        if not specs:
            raise UsageError("no spectra requested")
        return specs


def parse_n_list(tokens) -> list[int]:
    """'2,4,8' / '1..20' / several tokens -> list of ints, order kept."""
    out = []
    for token in tokens or ():
        for part in str(token).split(","):
            part = part.strip()
            if not part:
                continue
            try:
                if ".." in part:
                    a, b = part.split("..")
                    out.extend(range(int(a), int(b) + 1))
                else:
                    out.append(int(part))
            except ValueError:
                raise UsageError(f"bad N value {part!r}") from None
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--N", dest="n_list", nargs="+", default=[], metavar="LIST",
                        help="fuzzy-sphere truncations, e.g. 2,4,8 or 1..20")
    common.add_argument("--nmax", type=int, default=40, help="round-sphere truncation (default 40)")
    common.add_argument("--standard", action="store_true", help="include the truncated round sphere")
    common.add_argument("--include-zero-modes", action="store_true")
    common.add_argument("--radius", type=float, default=1.0)
    common.add_argument("--lambda-min", type=float, default=0.1)
    common.add_argument("--lambda-max", type=float, default=100.0)
    common.add_argument("--points", type=int, default=200)
    common.add_argument("--linear", action="store_true", help="linear instead of log spacing")
    common.add_argument("--lambda", dest="lambdas", type=float, nargs="+",
                        help="explicit energy values instead of a grid")
    common.add_argument("--normalize-area", action="store_true", help="add an area/(4 pi) column")
    common.add_argument("--out", help="output directory (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")

    parser = _Parser(prog="fuzzy-sphere", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("spectrum", parents=[common], help="Dirac eigenvalues per mode")
    sub.add_parser("trace", parents=[common], help="heat trace and its t-derivative")
    sub.add_parser("area", parents=[common], help="area function on a grid")
    sub.add_parser("dimension", parents=[common], help="spectral dimension on a grid")
    sub.add_parser("sweep", parents=[common], help="full geometry curve")
    p = sub.add_parser("peak", parents=[common], help="locate the area or dimension maximum")
    p.add_argument("--which", choices=("area", "dimension"), default="area")
    p.add_argument("--bracket", type=float, nargs=2, metavar=("LO", "HI"))
    v = sub.add_parser("verify-algebra", parents=[common], help="check commutator and Casimir relations")
    v.add_argument("--x3-fault-scale", type=float, default=1.0, help=argparse.SUPPRESS)
    sub.add_parser("figures", parents=[common], help="curve files for the area and dimension figures")
    return parser


def config_from_args(args) -> RunConfig:
    if args.lambdas:
        grid = EnergyGrid(tuple(args.lambdas))
    elif args.linear:
        grid = EnergyGrid.linear(args.lambda_min, args.lambda_max, args.points)
    else:
        grid = EnergyGrid.log(args.lambda_min, args.lambda_max, args.points)
    return RunConfig(
        command=args.command,
        n_list=parse_n_list(args.n_list),
        n_max=args.nmax,
        standard=args.standard,
        grid=grid,
        include_zero_modes=args.include_zero_modes,
        radius=args.radius,
        normalize_area=args.normalize_area,
        output_path=args.out,
        format=args.format,
        which=getattr(args, "which", "area"),
        bracket=tuple(args.bracket) if getattr(args, "bracket", None) else None,
        x3_fault_scale=getattr(args, "x3_fault_scale", 1.0),
    )


def _slug(spectrum) -> str:
    meta = spectrum.metadata
    if meta.get("kind") == "standard":
        return f"standard_nmax{meta['n_max']}"
    return f"fuzzy_N{meta['n']}"


def _emit(config: RunConfig, name: str, text: str, out=None) -> Path | None:
    if config.output_path is None:
        (out or sys.stdout).write(text)
        return None
    directory = Path(config.output_path)
    directory.mkdir(parents=True, exist_ok=True)
    return atomic_write(directory / name, text)


def _emit_blocks(config, blocks, out):
    # blocks separated by blank lines when going to stdout (gnuplot "index")
    for i, (name, text) in enumerate(blocks):
        if config.output_path is None and i:
            (out or sys.stdout).write("\n\n")
        _emit(config, name, text, out)


def run_spectrum(config: RunConfig, out=None) -> int:
    blocks = []
    for n in config.n_list:
        params = config.fuzzy_params(n)
        meta = {"kind": "fuzzy", "n": n, "radius": params.radius,
                "include_zero_modes": params.include_zero_modes}
        blocks.append((f"spectrum_fuzzy_N{n}.csv", rows_to_csv(
            ("l", "j", "eigenvalue_sq", "degeneracy"), spectrum_table(params), meta)))
    if config.standard:
        meta = {"kind": "standard", "n_max": config.n_max}
        blocks.append((f"spectrum_standard_nmax{config.n_max}.csv", rows_to_csv(
            ("l", "j", "eigenvalue_sq", "degeneracy"), spectrum_table(n_max=config.n_max), meta)))
    if not blocks:
        raise UsageError("no spectra requested")
    _emit_blocks(config, blocks, out)
    return EXIT_OK


def run_trace(config: RunConfig, out=None) -> int:
    blocks = []
    for spec in config.spectra():
        rows = []
        for lam in config.grid:
            t = 1.0 / (lam * lam)
            rows.append((t, lam, heat_trace(spec, t), heat_trace_derivative(spec, t)))
        meta = dict(spec.metadata, label=spec.label, grid=config.grid.spec)
        blocks.append((f"trace_{_slug(spec)}.csv",
                       rows_to_csv(("t", "lambda", "trace", "trace_t_derivative"), rows, meta)))
    _emit_blocks(config, blocks, out)
    return EXIT_OK


def run_observable(config: RunConfig, out=None) -> int:
    """``area`` / ``dimension`` / ``sweep``: curves on the configured grid."""
    blocks = []
    for spec in config.spectra():
        curve = sweep(spec, config.grid)
        name = f"{config.command}_{_slug(spec)}.{config.format}"
        if config.format == "json":
            text = curve_to_json(curve, config.normalize_area)
        elif config.command == "sweep":
            text = curve_to_csv(curve, config.normalize_area)
        else:
            cols = ["lambda", "t", "trace", config.command]
            if config.command == "area" and config.normalize_area:
                cols.append("area_over_4pi")
            rows = []
            for p in curve.points:
                rec = {"lambda": p.lambda_, "t": p.t, "trace": p.trace, "area": p.area,
                       "dimension": p.dimension, "area_over_4pi": p.area / (4 * np.pi)}
                rows.append(tuple(rec[c] for c in cols))
            text = rows_to_csv(cols, rows, curve.metadata)
        blocks.append((name, text))
    _emit_blocks(config, blocks, out)
    return EXIT_OK


def run_peak(config: RunConfig, out=None) -> int:
    rows = []
    for spec in config.spectra():
        lo, hi = config.grid.values[0], config.grid.values[-1]
        bracket = config.bracket or suggest_bracket(spec, config.which, lo, hi)
        res = find_peak(spec, config.which, bracket)
        rows.append((spec.label, config.which, res.lambda_star, res.value, *res.bracket))
    text = rows_to_csv(("label", "which", "lambda_star", "value", "lo", "hi"), rows)
    _emit(config, f"peak_{config.which}.csv", text, out)
    return EXIT_OK


def run_verify_algebra(config: RunConfig, out=None) -> int:
    """Print commutator and Casimir residuals per N; exit 2 if any exceeds 1e-10."""
    out = out or sys.stdout
    if not config.n_list:
        raise UsageError("verify-algebra needs --N")
    ok = True
    out.write("N,commutator_residual,casimir_residual,status\n")
    for n in config.n_list:
        coords = fuzzy_coordinates(config.fuzzy_params(n))
        if config.x3_fault_scale != 1.0:
            coords = dataclasses.replace(coords, x3=coords.x3 * config.x3_fault_scale)
        comm, cas = commutator_residual(coords), casimir_residual(coords)
        good = comm <= ALGEBRA_TOLERANCE and cas <= ALGEBRA_TOLERANCE
        ok &= good
        out.write(f"{n},{comm:.3e},{cas:.3e},{'ok' if good else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def run_figures(config: RunConfig, out=None) -> list[Path]:
    """Write one curve per N plus the truncated round sphere, and a manifest.

    Output files and manifest are deterministic: the same configuration gives
    byte-identical files for any thread count.
    """
    if not config.n_list:
        raise UsageError("no spectra requested")
    if config.output_path is None:
        raise UsageError("figures needs --out")
    directory = Path(config.output_path)
    directory.mkdir(parents=True, exist_ok=True)
    spectra = config.spectra(with_standard=True)
    workers = default_workers()

    def one(spec):
        path = directory / f"{_slug(spec)}.{config.format}"
        return write_curve(sweep(spec, config.grid, workers=1), path, config.format, config.normalize_area)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            paths = list(pool.map(one, spectra))
    else:
        paths = [one(s) for s in spectra]

    manifest = {
        "package": "fuzzy_sphere",
        "version": __version__,
        "numpy": np.__version__,
        "inputs": {
            "N": config.n_list,
            "n_max": config.n_max,
            "radius": config.radius,
            "include_zero_modes": config.include_zero_modes,
            "normalize_area": config.normalize_area,
            "format": config.format,
            "grid": config.grid.spec,
        },
        "outputs": [{"file": p.name, "sha256": sha256_file(p)} for p in paths],
    }
    paths.append(atomic_write(directory / "manifest.json", json.dumps(manifest, indent=1, sort_keys=True) + "\n"))
    if out is not None:
        for p in paths:
            out.write(f"{p}\n")
    return paths


_RUNNERS = {
    "spectrum": run_spectrum,
    "trace": run_trace,
    "area": run_observable,
    "dimension": run_observable,
    "sweep": run_observable,
    "peak": run_peak,
    "verify-algebra": run_verify_algebra,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        config = config_from_args(args)
        default_workers()
        if config.command == "figures":
            run_figures(config, sys.stdout)
            return EXIT_OK
        return _RUNNERS[config.command](config)
    except PeakBracketError as exc:
        print(f"fuzzy-sphere: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (UsageError, ValueError, OSError) as exc:
        print(f"fuzzy-sphere: error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
