"""Command-line front end.

Commands:
    suite                       run the built-in identity suite
    check FILE                  check each identity line in FILE
    decompose U1 U2 U3          decompose one concrete triple product
    table                       print the basis multiplication table

Exit codes: 0 all checks passed, 1 at least one identity failed, 2 I/O error,
3 malformed input (bad coefficients, parse errors, inconsistent options).
Output is byte-identical across runs with the same configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import decomp
from .core import (
    BACKENDS,
    BINARY64,
    DIMS,
    EXACT,
    HNum,
    coeff_str,
    hnum,
    inner,
    norm_sq,
    scalar_str,
)
from .dsl import FAIL, PARSE_ERROR, check_identity, report_json_obj, report_text
from .oracle import build_table, format_table
from .suite import builtin_lines

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by all commands; tolerance only with binary64."""

    command: str
    dim: int = 8
    backend: str = EXACT
    trials: int = 1000
    seed: int = 42
    coeff_range: int = 9
    tolerance: float | None = None
    fmt: str = "text"

    def __post_init__(self):
        if self.dim not in DIMS:
            raise ValueError(f"dim must be one of {DIMS}")
        if self.backend not in BACKENDS:
            raise ValueError(f"backend must be one of {BACKENDS}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.coeff_range < 1:
            raise ValueError("coeff-range must be >= 1")
        if self.backend == BINARY64 and self.tolerance is None:
            object.__setattr__(self, "tolerance", DEFAULT_TOLERANCE)
        if self.backend == EXACT and self.tolerance is not None:
            raise ValueError("--tolerance only applies to the binary64 backend")
        if self.fmt not in ("text", "json"):
            raise ValueError("format must be text or json")


def _emit(report, cfg: RunConfig, out, prefix: str = ""):
    if cfg.fmt == "json":
        out.write(json.dumps(report_json_obj(report)) + "\n")
    else:
        out.write(prefix + report_text(report) + "\n")


def _check_lines(lines, cfg: RunConfig, out, numbered: bool = False):
    """Check lines in order; returns (any_parse_error, any_failure)."""
    any_parse = False
    any_fail = False
    for lineno, line in lines:
        report = check_identity(
            line, dim=cfg.dim, backend=cfg.backend, trials=cfg.trials,
            seed=cfg.seed, coeff_range=cfg.coeff_range, tolerance=cfg.tolerance,
        )
        prefix = f"line {lineno}: " if numbered else ""
        _emit(report, cfg, out, prefix)
        if report.status == PARSE_ERROR:
            any_parse = True
        elif report.status == FAIL:
            any_fail = True
    return any_parse, any_fail


def run_suite(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    lines = [(i + 1, line) for i, line in enumerate(builtin_lines(cfg.dim))]
    any_parse, any_fail = _check_lines(lines, cfg, out)
    return 1 if (any_parse or any_fail) else 0


def run_check(cfg: RunConfig, path: str, out=None) -> int:
    out = out or sys.stdout
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    any_parse, any_fail = _check_lines(lines, cfg, out, numbered=True)
    if any_parse:
        return 3
    return 1 if any_fail else 0


def _parse_coeffs(text: str, cfg: RunConfig) -> HNum:
    parts = text.split(",")
    if len(parts) != cfg.dim:
        raise ValueError(f"expected {cfg.dim} comma-separated coefficients, got {len(parts)}")
    values = []
    for part in parts:
        part = part.strip()
        try:
            values.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"bad coefficient {part!r}") from None
    return hnum(values, cfg.backend)


def run_decompose(cfg: RunConfig, raw1: str, raw2: str, raw3: str, out=None) -> int:
    out = out or sys.stdout
    try:
        u1 = _parse_coeffs(raw1, cfg)
        u2 = _parse_coeffs(raw2, cfg)
        u3 = _parse_coeffs(raw3, cfg)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    parts = decomp.decompose_triple(u1, u2, u3)
    lengths = (
        norm_sq(parts.anticommutator),
        norm_sq(parts.cross),
        norm_sq(parts.associator),
    )
    norm_product = norm_sq(u1) * norm_sq(u2) * norm_sq(u3)
    inners = (
        inner(parts.anticommutator, parts.cross),
        inner(parts.anticommutator, parts.associator),
        inner(parts.cross, parts.associator),
    )
    if cfg.fmt == "json":
        obj = {
            "dim": cfg.dim,
            "backend": cfg.backend,
            "u1": [scalar_str(c) for c in u1.coeffs],
            "u2": [scalar_str(c) for c in u2.coeffs],
            "u3": [scalar_str(c) for c in u3.coeffs],
            "product": [scalar_str(c) for c in parts.product.coeffs],
            "anticommutator": [scalar_str(c) for c in parts.anticommutator.coeffs],
            "cross": [scalar_str(c) for c in parts.cross.coeffs],
            "associator": [scalar_str(c) for c in parts.associator.coeffs],
            "inner_products": {
                "anticommutator_cross": scalar_str(inners[0]),
                "anticommutator_associator": scalar_str(inners[1]),
                "cross_associator": scalar_str(inners[2]),
            },
            "squared_lengths": {
                "anticommutator": scalar_str(lengths[0]),
                "cross": scalar_str(lengths[1]),
                "associator": scalar_str(lengths[2]),
            },
            "squared_length_sum": scalar_str(sum(lengths)),
            "norm_product": scalar_str(norm_product),
        }
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(f"u1             = {coeff_str(u1)}\n")
        out.write(f"u2             = {coeff_str(u2)}\n")
        out.write(f"u3             = {coeff_str(u3)}\n")
        out.write(f"(u1*conj(u2))*u3 = {coeff_str(parts.product)}\n")
        out.write(f"anticommutator = {coeff_str(parts.anticommutator)}\n")
        out.write(f"cross          = {coeff_str(parts.cross)}\n")
        out.write(f"associator     = {coeff_str(parts.associator)}\n")
        out.write(f"inner(anticommutator, cross)      = {scalar_str(inners[0])}\n")
        out.write(f"inner(anticommutator, associator) = {scalar_str(inners[1])}\n")
        out.write(f"inner(cross, associator)          = {scalar_str(inners[2])}\n")
        out.write(f"|anticommutator|^2 = {scalar_str(lengths[0])}\n")
        out.write(f"|cross|^2          = {scalar_str(lengths[1])}\n")
        out.write(f"|associator|^2     = {scalar_str(lengths[2])}\n")
        out.write(f"sum of squared lengths            = {scalar_str(sum(lengths))}\n")
        out.write(f"normsq(u1)*normsq(u2)*normsq(u3)  = {scalar_str(norm_product)}\n")
    return 0


def run_table(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    out.write(format_table(build_table(cfg.dim)) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, choices=list(DIMS), default=8,
                        help="algebra dimension (default 8)")
    common.add_argument("--backend", choices=list(BACKENDS), default=EXACT,
                        help="scalar backend (default exact)")
    common.add_argument("--trials", type=int, default=1000,
                        help="random trials per identity (default 1000)")
    common.add_argument("--seed", type=int, default=42,
                        help="random seed (default 42)")
    common.add_argument("--coeff-range", type=int, default=9,
                        help="sample coefficients in [-N, N] (default 9)")
    common.add_argument("--tolerance", type=float, default=None,
                        help="binary64 relative tolerance (default 1e-9)")
    common.add_argument("--format", dest="fmt", choices=["text", "json"], default="text",
                        help="output format (default text)")

    parser = argparse.ArgumentParser(
        prog="triprod",
        description="Check hypercomplex identities and decompose triple products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("suite", parents=[common],
                   help="run the built-in identity suite")
    p_check = sub.add_parser("check", parents=[common],
                             help="check identities from a file, one per line")
    p_check.add_argument("file")
    p_dec = sub.add_parser("decompose", parents=[common],
                           help="decompose (u1*conj(u2))*u3 for concrete coefficients")
    p_dec.add_argument("u1", help="comma-separated coefficients, e.g. 0,1,0,0,0,0,0,0")
    p_dec.add_argument("u2")
    p_dec.add_argument("u3")
    sub.add_parser("table", parents=[common],
                   help="print the basis multiplication table")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command, dim=args.dim, backend=args.backend,
            trials=args.trials, seed=args.seed, coeff_range=args.coeff_range,
            tolerance=args.tolerance, fmt=args.fmt,
        )
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    if cfg.command == "suite":
        return run_suite(cfg)
    if cfg.command == "check":
        return run_check(cfg, args.file)
    if cfg.command == "decompose":
        return run_decompose(cfg, args.u1, args.u2, args.u3)
    return run_table(cfg)


if __name__ == "__main__":
    sys.exit(main())
