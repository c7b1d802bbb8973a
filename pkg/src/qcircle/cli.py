"""Command-line front end: figure data, expectation time series and jump reports.

    qcircle density --figure1
    qcircle angle-mean --t-start 0 --t-end 4pi --dt 0.05
    qcircle classical-angle --dt 0.01 --format json
    qcircle jumps --case fermion --l 0.5 --t-end 2pi

Angles and times accept multiples of pi such as ``0.75pi``, ``3pi/4`` or
``-pi``.  Exit status is 0 on success, 2 for bad flags and 3 when a
requested number cannot be computed.
"""

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from . import evolution
from .evolution import AngleGrid
from .params import CoherentParams, LambdaCase

EXIT_FLAGS = 2
EXIT_NUMERIC = 3

NA = "NA"

_PI_RE = re.compile(
    r"^(?P<sign>[+-])?(?P<coef>(?:\d+\.?\d*|\.\d+)(?:e[+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*(?P<den>\d+\.?\d*))?$"
)


class NumericalFailure(Exception):
    pass


def parse_angle(text: str) -> float:
    """Parse ``2.5``, ``0.75pi``, ``3*pi/4``, ``-pi`` and the like."""
    s = text.strip().lower()
    m = _PI_RE.match(s)
    if m:
        value = math.pi * (float(m.group("coef")) if m.group("coef") else 1.0)
        if m.group("den"):
            value /= float(m.group("den"))
        return -value if m.group("sign") == "-" else value
    try:
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number or multiple of pi: {text!r}") from None


@dataclass(frozen=True)
class RunConfig:
    case: LambdaCase = LambdaCase.BOSON
    l: float = 1.0
    alpha: float = 0.75 * math.pi
    t: float = math.pi
    t_start: float = 0.0
    t_end: float = 4.0 * math.pi
    dt: float = 0.01
    grid_points: int = 512
    output_format: str = "csv"
    tol: float = 1e-12

    @property
    def params(self) -> CoherentParams:
        return CoherentParams(self.case, self.l, self.alpha)


def _fmt(x) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return NA
    return f"{x:.12g}"


def _json_value(x):
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return None
    return float(_fmt(x))


def _check_finite(values, what: str):
    if not np.all(np.isfinite(values)):
        raise NumericalFailure(f"non-finite {what}")


def render_table(header: Sequence[str], rows: List[Sequence[float]], output_format: str, footer: Optional[dict] = None) -> str:
    if output_format == "json":
        records = [{h: _json_value(float(v)) for h, v in zip(header, row)} for row in rows]
        if footer is None:
            return json.dumps(records, indent=1) + "\n"
        return json.dumps({"rows": records, **footer}, indent=1) + "\n"
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(float(v)) for v in row) for row in rows)
    if footer is not None:
        lines.extend(f"# {k}: {v}" for k, v in footer.items())
    return "\n".join(lines) + "\n"


def cmd_density(cfg: RunConfig, figure1: bool = False) -> str:
    p = cfg.params
    phi = AngleGrid(cfg.grid_points).points
    if figure1:
        times = [("p_0.9pi", 0.9 * math.pi), ("p_pi", math.pi), ("p_1.1pi", 1.1 * math.pi)]
    else:
        times = [("p", cfg.t)]
    columns = [evolution.probability_density(p, phi, t, cfg.tol) for _, t in times]
    _check_finite(columns, "density")
    header = ["phi"] + [name for name, _ in times]
    return render_table(header, list(zip(phi, *columns)), cfg.output_format)


def cmd_angle_mean(cfg: RunConfig) -> str:
    p = cfg.params
    grid = AngleGrid(cfg.grid_points)
    ts = evolution.time_grid(cfg.t_start, cfg.t_end, cfg.dt)
    means = [evolution.expectation_angle_t(p, t, grid, cfg.tol) for t in ts]
    _check_finite(means, "angle mean")
    return render_table(["t", "phi_mean"], list(zip(ts, means)), cfg.output_format)


def cmd_classical_angle(cfg: RunConfig) -> str:
    p = cfg.params
    ts = evolution.time_grid(cfg.t_start, cfg.t_end, cfg.dt)
    angle, mag = evolution.classical_angle_series(p, ts, cfg.tol)
    _check_finite(mag, "|<U(t)>|")
    if ts.size == 1 and np.isnan(angle[0]):
        raise NumericalFailure(f"classical angle undefined at t = {ts[0]}: |<U(t)>| = {mag[0]:.3g}")
    return render_table(["t", "angle", "magnitude"], list(zip(ts, angle, mag)), cfg.output_format)


def cmd_jumps(cfg: RunConfig) -> str:
    p = cfg.params
    t_range = (cfg.t_start, cfg.t_end)
    events = evolution.detect_jumps(p, t_range, cfg.dt, tol=cfg.tol)
    matched = evolution.matches_odd_pi_pattern(events, t_range)
    rows = [(e.t_star, e.left_angle, e.right_angle, e.gap) for e in events]
    footer = {"events": len(events), "odd_pi_pattern": matched}
    if cfg.output_format == "csv":
        footer = {"events": len(events), "odd_pi_pattern": "matched" if matched else "not matched"}
    return render_table(["t_star", "left", "right", "gap"], rows, cfg.output_format, footer)


SUBCOMMAND_DT = {"density": 0.01, "angle-mean": 0.05, "classical-angle": 0.01, "jumps": 1e-3}


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--case", choices=["boson", "fermion"], default="boson")
    shared.add_argument("--l", type=float, default=1.0, help="classical angular momentum")
    shared.add_argument("--alpha", type=parse_angle, default=0.75 * math.pi, help="classical angle (radians, e.g. 0.75pi)")
    shared.add_argument("--t", type=parse_angle, default=math.pi, help="time for single-time output")
    shared.add_argument("--t-start", type=parse_angle, default=0.0)
    shared.add_argument("--t-end", type=parse_angle, default=4.0 * math.pi)
    shared.add_argument("--dt", type=parse_angle, default=None)
    shared.add_argument("--grid", type=int, default=512, help="number of angle grid points")
    shared.add_argument("--format", choices=["csv", "json"], default="csv")
    shared.add_argument("--tol", type=float, default=1e-12, help="theta series truncation tolerance")
    shared.add_argument("--out", default=None, help="output file (default: stdout)")

    parser = argparse.ArgumentParser(prog="qcircle", description="Coherent states and quantum jumps on a circle.")
    sub = parser.add_subparsers(dest="command", required=True)
    dens = sub.add_parser("density", parents=[shared], help="probability density over the angle grid")
    dens.add_argument("--figure1", action="store_true", help="emit t = 0.9pi, pi, 1.1pi as columns")
    sub.add_parser("angle-mean", parents=[shared], help="<phi_hat(t)> time series")
    sub.add_parser("classical-angle", parents=[shared], help="Arg <U(t)> time series")
    sub.add_parser("jumps", parents=[shared], help="discontinuities of the classical angle")
    return parser


def config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    dt = SUBCOMMAND_DT[args.command] if args.dt is None else args.dt
    if args.grid < 8:
        parser.error("--grid must be at least 8")
    if not dt > 0:
        parser.error("--dt must be positive")
    if not args.tol > 0:
        parser.error("--tol must be positive")
    if args.t_end < args.t_start:
        parser.error("--t-end must not precede --t-start")
    if args.command == "jumps" and args.t_end == args.t_start:
        parser.error("jumps needs --t-end > --t-start")
    for name in ("l", "alpha", "t", "t_start", "t_end", "tol"):
        if not math.isfinite(getattr(args, name)):
            parser.error(f"--{name.replace('_', '-')} must be finite")
    return RunConfig(
        case=LambdaCase.parse(args.case),
        l=args.l,
        alpha=args.alpha,
        t=args.t,
        t_start=args.t_start,
        t_end=args.t_end,
        dt=dt,
        grid_points=args.grid,
        output_format=args.format,
        tol=args.tol,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(parser, args)
    try:
        if args.command == "density":
            text = cmd_density(cfg, figure1=args.figure1)
        elif args.command == "angle-mean":
            text = cmd_angle_mean(cfg)
        elif args.command == "classical-angle":
            text = cmd_classical_angle(cfg)
        else:
            text = cmd_jumps(cfg)
    except (NumericalFailure, ArithmeticError, ValueError) as exc:
        print(f"qcircle: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
