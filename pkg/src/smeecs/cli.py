"""Command line front end.

Three subcommands: ``sweep`` streams concurrence curves as CSV, ``eval``
reports every quantity for a single state, and ``check`` runs the claims
battery from :mod:`smeecs.checks`.  Output is deterministic byte for byte
for a given command line, so sweeps can be diffed across versions.
"""

from __future__ import annotations

import argparse
import cmath
import math
import sys
from dataclasses import dataclass
from typing import IO, Iterator

from .checks import CHECK_NAMES, run_checks
from .entanglement import concurrence_closed
from .errors import DegenerateStateError, TruncationTooSmallError
from .fock_oracle import concurrence_oracle, default_truncation
from .states import (
    Sign,
    StateSpec,
    normalization_M,
    normalization_N,
    overlap_p1,
    overlap_p2,
)

__all__ = ["SweepConfig", "main"]

CSV_HEADER = "x,m,sign,c_closed,c_oracle,abs_err,degenerate"

# Preset curve families: (sign selection, excitation list).
_PRESETS = {
    "fig1": ("plus", (0, 1, 3, 5, 20)),
    "fig2": ("minus", (0, 3, 5, 10, 20)),
}

_SIGN_CHOICES = {"plus": (Sign.PLUS,), "minus": (Sign.MINUS,), "both": (Sign.PLUS, Sign.MINUS)}


@dataclass
class SweepConfig:
    """Validated parameters of one sweep run."""

    x_min: float = 0.0
    x_max: float = 6.0
    steps: int = 121
    m_list: tuple[int, ...] = (0,)
    signs: tuple[Sign, ...] = (Sign.PLUS,)
    phase: float = 0.0
    with_oracle: bool = False
    trunc: int | None = None

    def validate(self) -> None:
        if not 0.0 <= self.x_min < self.x_max:
            raise ValueError("need 0 <= x-min < x-max")
        if self.steps < 2:
            raise ValueError("need at least 2 steps")
        if any(m < 0 for m in self.m_list):
            raise ValueError("excitation numbers must be >= 0")
        if self.trunc is not None and self.trunc < 2:
            raise ValueError("truncation must be >= 2")

    def grid(self) -> list[float]:
        span = self.x_max - self.x_min
        return [self.x_min + i * span / (self.steps - 1) for i in range(self.steps)]


def _alpha(x: float, phase: float) -> complex:
    if phase == 0.0:
        return complex(math.sqrt(x))
    return math.sqrt(x) * cmath.exp(1j * phase)


def _fmt(value: float) -> str:
    return f"{value:.16e}"


def _sweep_lines(config: SweepConfig) -> Iterator[str]:
    yield CSV_HEADER
    xs = config.grid()
    for m in sorted(set(config.m_list)):
        for sign in sorted(config.signs, key=lambda s: s.value):
            for x in xs:
                spec = StateSpec(alpha=_alpha(x, config.phase), m=m, sign=sign)
                try:
                    closed = _fmt(concurrence_closed(spec).value)
                    degenerate = "0"
                except DegenerateStateError:
                    closed = ""
                    degenerate = "1"
                oracle = err = ""
                if config.with_oracle and degenerate == "0":
                    try:
                        o = concurrence_oracle(spec, config.trunc).value
                        oracle = _fmt(o)
                        err = _fmt(abs(o - float(closed)))
                    except (TruncationTooSmallError, ValueError):
                        pass  # row stays, oracle fields stay empty
                yield f"{_fmt(x)},{m},{sign.value},{closed},{oracle},{err},{degenerate}"


def cmd_sweep(args: argparse.Namespace, out: IO[str]) -> int:
    signs_key = args.sign
    m_list = args.m
    x_min, x_max, steps = args.x_min, args.x_max, args.steps
    if args.preset is not None:
        preset_sign, preset_ms = _PRESETS[args.preset]
        if signs_key is None:
            signs_key = preset_sign
        if m_list is None:
            m_list = list(preset_ms)
    if signs_key is None:
        signs_key = "both"
    if m_list is None:
        m_list = [0]
    config = SweepConfig(
        x_min=0.0 if x_min is None else x_min,
        x_max=6.0 if x_max is None else x_max,
        steps=121 if steps is None else steps,
        m_list=tuple(m_list),
        signs=_SIGN_CHOICES[signs_key],
        phase=args.phase,
        with_oracle=args.with_oracle,
        trunc=args.trunc,
    )
    config.validate()
    for line in _sweep_lines(config):
        out.write(line + "\n")
    return 0


def cmd_eval(args: argparse.Namespace, out: IO[str]) -> int:
    sign = Sign.PLUS if args.sign == "plus" else Sign.MINUS
    spec = StateSpec(alpha=_alpha(args.x, args.phase), m=args.m, sign=sign)
    out.write(f"x = {_fmt(spec.x)}\n")
    out.write(f"m = {spec.m}\n")
    out.write(f"sign = {sign.value}\n")
    try:
        closed = concurrence_closed(spec)
    except DegenerateStateError:
        out.write("degenerate = 1\n")
        return 0
    out.write("degenerate = 0\n")
    out.write(f"p1 = {_fmt(overlap_p1(spec.alpha, spec.m))}\n")
    out.write(f"p2 = {_fmt(overlap_p2(spec.alpha))}\n")
    out.write(f"N = {_fmt(normalization_N(spec))}\n")
    out.write(f"M = {_fmt(normalization_M(spec))}\n")
    out.write(f"c_closed = {_fmt(closed.value)}\n")
    out.write(f"path = {closed.path.value}\n")
    if args.with_oracle:
        trunc = args.trunc if args.trunc is not None else default_truncation(spec.x, spec.m)
        oracle = concurrence_oracle(spec, trunc)
        out.write(f"trunc = {trunc}\n")
        out.write(f"c_oracle = {_fmt(oracle.value)}\n")
        out.write(f"abs_err = {_fmt(abs(oracle.value - closed.value))}\n")
    return 0


def cmd_check(args: argparse.Namespace, out: IO[str]) -> int:
    names = args.criterion if args.criterion else None
    overrides = dict(args.tol) if args.tol else None
    results = run_checks(names, overrides)
    all_passed = True
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        all_passed = all_passed and r.passed
        out.write(
            f"{status} {r.name}: worst {r.worst:.3e} vs tol {r.tolerance:.1e} "
            f"in {r.seconds:.2f}s ({r.detail})\n"
        )
    out.write(f"{'OK' if all_passed else 'FAILED'} ({len(results)} checks)\n")
    return 0 if all_passed else 1


def _tol_pair(text: str) -> tuple[str, float]:
    name, _, value = text.partition("=")
    if not value:
        raise argparse.ArgumentTypeError("expected NAME=VALUE")
    return name, float(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="smeecs",
        description="Concurrence of photon-excited entangled coherent states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="curve family as CSV on stdout")
    sweep.add_argument("--x-min", type=float, default=None, help="first field intensity |alpha|^2")
    sweep.add_argument("--x-max", type=float, default=None, help="last field intensity (default 6)")
    sweep.add_argument("--steps", type=int, default=None, help="grid points, endpoints included (default 121)")
    sweep.add_argument("--m", type=int, action="append", default=None,
                       help="excitation number; repeat for several curves")
    sweep.add_argument("--sign", choices=sorted(_SIGN_CHOICES), default=None,
                       help="branch sign selection (default both)")
    sweep.add_argument("--phase", type=float, default=0.0,
                       help="phase of alpha in radians (results are phase-independent)")
    sweep.add_argument("--with-oracle", action="store_true",
                       help="add brute-force values and errors per row")
    sweep.add_argument("--trunc", type=int, default=None, help="explicit Fock cutoff for the oracle")
    sweep.add_argument("--preset", choices=sorted(_PRESETS), default=None,
                       help="named curve family (sign and m-list)")
    sweep.add_argument("--format", choices=("csv",), default="csv", help="output format")
    sweep.set_defaults(func=cmd_sweep)

    ev = sub.add_parser("eval", help="every quantity for a single state")
    ev.add_argument("--x", type=float, required=True, help="field intensity |alpha|^2")
    ev.add_argument("--m", type=int, default=0, help="excitation number")
    ev.add_argument("--sign", choices=("plus", "minus"), required=True)
    ev.add_argument("--phase", type=float, default=0.0)
    ev.add_argument("--with-oracle", action="store_true")
    ev.add_argument("--trunc", type=int, default=None)
    ev.set_defaults(func=cmd_eval)

    check = sub.add_parser("check", help="run the claims battery")
    check.add_argument("--criterion", action="append", default=None, metavar="NAME",
                       help=f"run only this check (repeatable); known: {', '.join(CHECK_NAMES)}")
    check.add_argument("--tol", action="append", default=None, type=_tol_pair,
                       metavar="NAME=VALUE", help="override one check's tolerance")
    check.set_defaults(func=cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
