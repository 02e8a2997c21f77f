"""Command-line entry point: build, verify, integral, symmetry, render, sangaku."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .checks import run_checks
from .fabric import DEFAULT_WINDOW, build_fabric, verify_integral
from .grid import GridSpec, classify_symmetry
from .render import RenderStyle, render_svg
from .sangaku import verify_gumma, verify_menuma
from .tables import table_csv

DEFAULTS = {"d": 1.0, "r": 1.0, "ax": 0.0, "ay": 0.0, "window": DEFAULT_WINDOW[1]}


def read_config(path: str) -> dict[str, str]:
    """Flat ``key = value`` file; blank lines and ``#`` comments are skipped."""
    cfg = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        key, value = line.split("=", 1)
        cfg[key.strip()] = value.strip()
    return cfg


def _viewport(text: str) -> tuple[float, float, float, float]:
    parts = [float(p) for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("viewport is x0,y0,x1,y1")
    return tuple(parts)


def _spec_flags(p: argparse.ArgumentParser, window: bool = True) -> None:
    p.add_argument("--config", help="key=value file with defaults for the flags")
    p.add_argument("--d", type=float, help="grid spacing")
    p.add_argument("--r", type=float, help="reference circle radius")
    p.add_argument("--ax", type=float, help="carrier x offset within a cell")
    p.add_argument("--ay", type=float, help="carrier y offset within a cell")
    if window:
        p.add_argument("--window", type=int, help="indices run over [-N, N]")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kissfabric", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a fabric and export its curvature table")
    _spec_flags(p)
    p.add_argument("--out", help="CSV path (default: stdout)")

    p = sub.add_parser("verify", help="run the invariant suite")
    _spec_flags(p)
    p.add_argument("--tol", type=float, help="geometric tolerance (default 1e-8)")

    p = sub.add_parser("integral", help="check that every curvature is an integer")
    _spec_flags(p)
    p.add_argument("--tol", type=float, help="distance to nearest integer (default 1e-6)")

    p = sub.add_parser("symmetry", help="print the symmetry group D4|D2|D1|C1")
    _spec_flags(p, window=False)

    p = sub.add_parser("render", help="write an SVG drawing")
    _spec_flags(p)
    p.add_argument("--out", required=True, help="SVG path")
    p.add_argument("--width", type=int)
    p.add_argument("--height", type=int)
    p.add_argument("--viewport", type=_viewport, help="x0,y0,x1,y1 in plane units")

    p = sub.add_parser("sangaku", help="check one of the two tablet problems")
    p.add_argument("--problem", type=int, choices=(1, 2), required=True)
    p.add_argument("--r", type=float, default=1.0, help="problem 2: chain radius r")
    p.add_argument("--kappa0", type=float, default=2.0, help="problem 1: anchor curvature")
    p.add_argument("--kappa1", type=float, help="problem 1: second anchor (default kappa0)")
    p.add_argument("--delta", type=float, default=2.0, help="problem 1: frame difference")
    return parser


def _resolve(parser, args, key, default, cast=float):
    """Explicit flag, else config value, else default."""
    value = getattr(args, key, None)
    if value is not None:
        return value
    if key in args.cfg:
        try:
            return cast(args.cfg[key])
        except ValueError:
            parser.error(f"config value {key}={args.cfg[key]!r} is not valid")
    return default


def _spec(parser, args) -> GridSpec:
    vals = {k: _resolve(parser, args, k, DEFAULTS[k]) for k in ("d", "r", "ax", "ay")}
    try:
        return GridSpec(**vals)
    except ValueError as exc:
        parser.error(str(exc))


def _window(parser, args) -> tuple[int, int]:
    n = _resolve(parser, args, "window", DEFAULTS["window"], int)
    if n < 0:
        parser.error("--window must be non-negative")
    return (-n, n)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.cfg = {}
    if getattr(args, "config", None):
        try:
            args.cfg = read_config(args.config)
        except (OSError, ValueError) as exc:
            parser.error(str(exc))

    if args.command == "sangaku":
        if args.problem == 1:
            if args.delta < 0:
                parser.error("--delta must be non-negative")
            report = verify_gumma(args.kappa0, args.delta, args.kappa1)
        else:
            if args.r <= 0:
                parser.error("--r must be positive")
            report = verify_menuma(args.r)
        print(report.to_text())
        return 0 if report.passed else 1

    spec = _spec(parser, args)
    if args.command == "symmetry":
        print(classify_symmetry(spec).value)
        return 0

    fabric = build_fabric(spec, _window(parser, args))
    if args.command == "build":
        text = table_csv(fabric)
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0
    if args.command == "verify":
        results = run_checks(fabric, _resolve(parser, args, "tol", 1e-8))
        for res in results:
            print(res.line())
        return 0 if all(r.passed for r in results) else 1
    if args.command == "integral":
        report = verify_integral(fabric, _resolve(parser, args, "tol", 1e-6))
        print(report.to_text())
        return 0 if report.integral else 1
    if args.command == "render":
        try:
            style = RenderStyle(
                width=_resolve(parser, args, "width", 800, int),
                height=_resolve(parser, args, "height", 800, int),
                viewport=_resolve(parser, args, "viewport", None, _viewport),
            )
        except (ValueError, argparse.ArgumentTypeError) as exc:
            parser.error(str(exc))
        Path(args.out).write_text(render_svg(fabric, style))
        return 0
    parser.error(f"unknown command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
