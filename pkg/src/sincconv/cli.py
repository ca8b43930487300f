"""Command-line front end: ``bench``, ``eval``, ``spectrum`` and ``selftest``.

Exit codes: 0 success, 1 usage error, 2 computational failure.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import os
import subprocess
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench, spectra
from .conv import build_convolution
from .errors import DomainError, ParameterError, SincConvError
from .matfun import METHODS
from .transform import TransformKind, make_grid

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _g17(x: float) -> str:
    return format(x, ".17g")


def parse_int_list(text: str) -> list[int]:
    """``"5"``, ``"1,3,9"`` or ``"start:stop:step"`` (stop included when aligned)."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            raise argparse.ArgumentTypeError(f"empty item in {text!r}")
        try:
            if ":" in part:
                fields = [int(f) for f in part.split(":")]
                if len(fields) == 2:
                    fields.append(1)
                if len(fields) != 3:
                    raise ValueError
                start, stop, step = fields
                if step <= 0 or stop < start:
                    raise argparse.ArgumentTypeError(f"bad range {part!r}")
                out.extend(range(start, stop + 1, step))
            else:
                out.append(int(part))
        except ValueError:
            raise argparse.ArgumentTypeError(f"cannot parse integer list {text!r}") from None
    return out


def _positive_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(x) and x > 0):
        raise argparse.ArgumentTypeError(f"expected a positive finite number, got {text!r}")
    return x


def _finite_float(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError(f"expected a finite number, got {text!r}")
    return x


def _default_workers() -> int:
    raw = os.environ.get("SINCCONV_WORKERS", "1")
    try:
        w = int(raw)
    except ValueError:
        raise UsageError(f"SINCCONV_WORKERS must be an integer, got {raw!r}") from None
    if w < 1:
        raise UsageError(f"SINCCONV_WORKERS must be >= 1, got {w}")
    return w


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sincconv", description="Sinc convolution benchmarks and diagnostics.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("bench", help="error sweep over n, CSV output")
    b.add_argument("--example", type=parse_int_list, default=list(bench.EXAMPLE_IDS))
    b.add_argument("--method", choices=["se", "de", "both"], default="both")
    b.add_argument("--n", type=parse_int_list, required=True)
    b.add_argument("--d-se", type=_positive_float)
    b.add_argument("--d-de", type=_positive_float)
    b.add_argument("--out")
    b.add_argument("--workers", type=int)
    b.add_argument("--matfun", choices=METHODS, default="auto")
    b.add_argument("--no-timings", action="store_true", help="write zero timings for byte-stable output")

    e = sub.add_parser("eval", help="approximant, reference and error at one point")
    e.add_argument("--example", type=int, required=True)
    e.add_argument("--method", choices=["se", "de"], required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--x", type=_finite_float, required=True)
    e.add_argument("--d", type=_positive_float)
    e.add_argument("--matfun", choices=METHODS, default="auto")

    s = sub.add_parser("spectrum", help="eigenvalues of I^(-1)_m or A_m, CSV output")
    s.add_argument("--kind", choices=["im1", "se", "de"], required=True)
    s.add_argument("--m", type=parse_int_list, help="orders for --kind im1")
    s.add_argument("--n", type=parse_int_list, help="grid sizes for --kind se/de")
    s.add_argument("--d", type=_positive_float)
    s.add_argument("--out")
    s.add_argument("--summary", help="also write the per-report summary CSV here")
    s.add_argument("--workers", type=int)

    t = sub.add_parser("selftest", help="run the test suite")
    t.add_argument("--tests-dir")
    t.add_argument("--include-acceptance", action="store_true")
    t.add_argument("pytest_args", nargs=argparse.REMAINDER)
    return p


@contextlib.contextmanager
def _output(path: Optional[str]):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _workers(args) -> int:
    w = _default_workers() if args.workers is None else args.workers
    if w < 1:
        raise UsageError("--workers must be >= 1")
    return w


def _cmd_bench(args) -> int:
    for i in args.example:
        if i not in bench.EXAMPLE_IDS:
            raise UsageError(f"--example ids must be in 1..9, got {i}")
    if any(n < 1 for n in args.n):
        raise UsageError("--n values must be positive")
    methods = ["se", "de"] if args.method == "both" else [args.method]
    overrides = {k: v for k, v in (("se", args.d_se), ("de", args.d_de)) if v is not None}
    # reject bad (d, n) combinations before any sweep work starts
    for i in args.example:
        prob = bench.example(i)
        for m in methods:
            for n in args.n:
                make_grid(m, prob.interval, overrides.get(m, prob.d(m)), n)
    records = bench.run_sweep(
        args.example, methods, args.n, d_overrides=overrides, matfun_method=args.matfun, workers=_workers(args)
    )
    with _output(args.out) as fh:
        bench.write_csv(records, fh, timings=not args.no_timings)
    return EXIT_OK


def _cmd_eval(args) -> int:
    if args.example not in bench.EXAMPLE_IDS:
        raise UsageError(f"--example must be in 1..9, got {args.example}")
    prob = bench.example(args.example)
    kind = TransformKind.parse(args.method)
    d = prob.d(kind) if args.d is None else args.d
    if not prob.interval.a <= args.x <= prob.interval.b:
        raise UsageError(f"--x must lie in [{prob.interval.a:g}, {prob.interval.b:g}]")
    make_grid(kind, prob.interval, d, args.n)
    approx = build_convolution(kind, prob.interval, d, args.n, prob.symbol, prob.g, args.matfun)
    value = float(approx.eval(args.x))
    ref = float(prob.reference(args.x))
    print(f"approx {_g17(value)}")
    print(f"reference {_g17(ref)}")
    print(f"abs_error {_g17(abs(value - ref))}")
    print(f"matfun {approx.method_used}")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    if args.kind == "im1":
        if args.m is None or args.n is not None:
            raise UsageError("--kind im1 takes --m (and not --n)")
        if any(m < 1 for m in args.m):
            raise UsageError("--m values must be positive")
        reports = [spectra.spectrum_im1(m) for m in args.m]
    else:
        if args.n is None or args.m is not None:
            raise UsageError(f"--kind {args.kind} takes --n (and not --m)")
        d = args.d if args.d is not None else (3.14 if args.kind == "se" else 1.57)
        for n in args.n:
            make_grid(args.kind, bench.INTERVAL, d, n)
        reports = spectra.contraction_sweep(args.kind, bench.INTERVAL, d, args.n, workers=_workers(args))
    with _output(args.out) as fh:
        spectra.write_eigenvalues_csv(reports, fh)
    if args.summary:
        with open(args.summary, "w", newline="") as fh:
            spectra.write_summary_csv(reports, fh)
    stream = sys.stderr if args.out is None else sys.stdout
    for r in reports:
        n = "" if r.n is None else f" n={r.n}"
        print(
            f"summary kind={r.kind}{n} m={r.m} spectral_radius={_g17(r.spectral_radius)} "
            f"min_real_part={_g17(r.min_real_part)} positive={r.min_real_part > 0}",
            file=stream,
        )
    return EXIT_OK


def default_tests_dir() -> Path:
    return Path(__file__).resolve().parents[2] / "tests"


def _cmd_selftest(args) -> int:
    tests = Path(args.tests_dir) if args.tests_dir else default_tests_dir()
    if not tests.is_dir():
        raise UsageError(f"tests directory not found: {tests}")
    cmd = [sys.executable, "-m", "pytest", str(tests), "-q"]
    if not args.include_acceptance:
        cmd += ["--ignore", str(tests / "test_acceptance.py")]
    cmd += list(args.pytest_args)
    rc = subprocess.call(cmd)
    return EXIT_OK if rc == 0 else EXIT_FAILURE


_COMMANDS = {"bench": _cmd_bench, "eval": _cmd_eval, "spectrum": _cmd_spectrum, "selftest": _cmd_selftest}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ParameterError, DomainError) as exc:
        print(f"sincconv: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SincConvError, ValueError) as exc:
        print(f"sincconv: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
