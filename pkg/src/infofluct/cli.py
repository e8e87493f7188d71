"""Command-line interface.

Every subcommand writes one JSON document (or CSV where noted) to stdout or
``--output``.  Floats are rounded to 9 significant digits so that reruns
with the same arguments produce byte-identical files.

Exit status: 0 success, 1 usage/validation error, 2 I/O error, 3 numerical
failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import warnings
from fractions import Fraction
from typing import List, Optional

import numpy as np

from . import __version__
from .binary import compute_constants, curve_csv, curve_table
from .coding import average_length, extend, huffman
from .core import Distribution, entropy, fluctuation
from .errors import InfoFluctError, NumericError
from .estimation import (BoundExceedsCapacityWarning, EntropyEstimate,
                         coding_efficiency, counts_from_sequence,
                         entropy_upper_bound_known_f, exceeds_capacity,
                         plug_in_estimates, practical_entropy,
                         typicality_interval)
from .simulation import (DEFAULT_SEED, aep_enumeration,
                         atypical_rate_experiment, ci_coverage_experiment)

EXIT_USAGE = 1
EXIT_IO = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _round(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if not math.isfinite(x):
            return None
        return float(format(x, ".9g"))
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def _dump_json(obj) -> str:
    return json.dumps(_round(obj), indent=2) + "\n"


def parse_distribution(text: str) -> Distribution:
    """Inline ``p1,p2,...`` (fractions like ``1/3`` allowed), or a file path.

    Files hold either a JSON array or one probability per line.
    """
    if os.path.isfile(text):
        with open(text) as fh:
            body = fh.read()
        stripped = body.strip()
        if stripped.startswith("["):
            try:
                values = json.loads(stripped)
            except json.JSONDecodeError as exc:
                raise UsageError(f"bad JSON distribution in {text}: {exc}") from exc
            if not isinstance(values, list) or not all(
                    isinstance(v, (int, float)) and not isinstance(v, bool) for v in values):
                raise UsageError(f"{text}: expected a JSON array of numbers")
            return Distribution(values)
        tokens = [ln.strip() for ln in body.splitlines() if ln.strip()]
    else:
        tokens = [t.strip() for t in text.split(",") if t.strip()]
    if not tokens:
        raise UsageError("empty distribution")
    try:
        values = [float(Fraction(t)) for t in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse probability list {text!r}") from exc
    return Distribution(values)


def _int_list(text: str) -> List[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError("lengths must be positive integers")
    return out


def read_symbols(path: str, fmt: str, K: Optional[int], mapping: Optional[str]):
    """Load a symbol sequence; returns (indices, K)."""
    if fmt == "bytes":
        with open(path, "rb") as fh:
            data = fh.read()
        if K is not None and K != 256:
            raise UsageError("byte input always has K = 256")
        return np.frombuffer(data, dtype=np.uint8).astype(np.int64), 256
    with open(path) as fh:
        text = fh.read()
    if fmt == "01":
        bits = "".join(text.split())
        if set(bits) - {"0", "1"}:
            raise UsageError("binary input may only contain 0 and 1")
        K = 2 if K is None else K
        if K < 2:
            raise UsageError("binary input needs K >= 2")
        return np.frombuffer(bits.encode(), dtype=np.uint8).astype(np.int64) - ord("0"), K
    # tokens
    if mapping is None:
        raise UsageError("token input needs --mapping (symbol -> index JSON object)")
    with open(mapping) as fh:
        table = json.load(fh)
    if not isinstance(table, dict) or not all(
            isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in table.values()):
        raise UsageError("mapping must be a JSON object of symbol -> nonnegative index")
    declared = max(table.values()) + 1 if K is None else K
    try:
        idx = [table[tok] for tok in text.split()]
    except KeyError as exc:
        raise UsageError(f"token {exc.args[0]!r} missing from mapping") from exc
    return np.asarray(idx, dtype=np.int64), declared


def cmd_analyze(args) -> str:
    symbols, K = read_symbols(args.file, args.input_format, args.K, args.mapping)
    counts = counts_from_sequence(symbols, K)
    est = plug_in_estimates(counts)
    f_used = est.f_hat if args.f_known is None else args.f_known
    ci = typicality_interval(est, args.alpha)
    bounds = {
        "upper_normal": entropy_upper_bound_known_f(est.h_hat, f_used, est.L, args.alpha),
        "upper_normal_f": f_used,
        "upper_normal_f_source": "plug-in" if args.f_known is None else "known",
        "practical_entropy": None,
        "exceeds_log2K": None,
        "typicality_lower": ci.lower,
        "typicality_upper": ci.upper,
    }
    coding = None
    if est.L >= 2:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", BoundExceedsCapacityWarning)
            hp = practical_entropy(est, args.alpha)
        bounds["practical_entropy"] = hp
        bounds["exceeds_log2K"] = exceeds_capacity(hp, K)
        empirical = Distribution(np.asarray(counts.counts, dtype=float) / counts.L)
        l_bar = average_length(huffman(empirical), empirical)
        eta, eta_alpha = coding_efficiency(est, args.alpha, l_bar)
        coding = {"coder": "huffman-empirical", "l_bar": l_bar, "eta": eta, "eta_alpha": eta_alpha}
    report = {
        "command": "analyze",
        "input": args.file,
        "input_format": args.input_format,
        "K": K,
        "L": est.L,
        "alpha": args.alpha,
        "counts": list(counts.counts),
        "h_hat": est.h_hat,
        "f_hat": est.f_hat,
        "bounds": bounds,
        "coding": coding,
    }
    return _dump_json(report)


def cmd_constants(args) -> str:
    c = compute_constants()
    return _dump_json({"command": "constants", **c.as_dict()})


def cmd_binary_curves(args) -> str:
    return curve_csv(curve_table(args.grid))


def cmd_typicality(args) -> str:
    d = parse_distribution(args.dist)
    reports = atypical_rate_experiment(d, args.epsilon, args.L, args.reps, args.seed)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["L", "observed", "theoretical", "std_error", "theoretical_std_error"])
        for r in reports:
            w.writerow([r.parameters["L"], format(r.observed, ".9g"), format(r.theoretical, ".9g"),
                        format(r.std_error, ".9g"), format(r.extra["theoretical_std_error"], ".9g")])
        return buf.getvalue()
    return _dump_json({
        "command": "typicality",
        "dist": list(d.probs),
        "epsilon": args.epsilon,
        "entropy": entropy(d),
        "fluctuation": fluctuation(d),
        "reps": args.reps,
        "seed": args.seed,
        "reports": [r.as_dict() for r in reports],
    })


def cmd_aep(args) -> str:
    d = parse_distribution(args.dist)
    rep = aep_enumeration(d, args.L, args.epsilon)
    return _dump_json({"command": "aep", "dist": list(d.probs), **rep.as_dict()})


def cmd_coverage(args) -> str:
    d = parse_distribution(args.dist)
    rep = ci_coverage_experiment(d, args.L, args.alpha, args.reps, args.seed)
    return _dump_json({"command": "coverage", **rep.as_dict()})


def cmd_code(args) -> str:
    d = parse_distribution(args.dist)
    ext = extend(d, args.ext)
    block = ext.as_distribution()
    code = huffman(block)
    l_block = average_length(code, block)
    l_letter = l_block / args.ext
    H, F = entropy(d), fluctuation(d)
    est = EntropyEstimate(H, F, args.length, d.K)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundExceedsCapacityWarning)
        hp = practical_entropy(est, args.alpha)
    eta, eta_alpha = coding_efficiency(est, args.alpha, l_letter)
    return _dump_json({
        "command": "code",
        "dist": list(d.probs),
        "ext": args.ext,
        "alpha": args.alpha,
        "length": args.length,
        "entropy": H,
        "fluctuation": F,
        "practical_entropy": hp,
        "l_bar_block": l_block,
        "l_bar": l_letter,
        "eta": eta,
        "eta_alpha": eta_alpha,
        "kraft_sum": code.kraft_sum(),
        "codebook": {",".join(map(str, ext.ngram(i))): w for i, w in enumerate(code.words)},
    })


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="infofluct", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-o", "--output", help="write to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="plug-in estimates, entropy bounds and coding efficiency")
    p.add_argument("file")
    p.add_argument("--input-format", choices=("01", "bytes", "tokens"), default="01")
    p.add_argument("--K", type=int, help="alphabet size (default: 2 for 01, 256 for bytes)")
    p.add_argument("--mapping", help="JSON object token -> index, for token input")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--f-known", type=float, help="known fluctuation for the normal bound")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("constants", help="binary-source landmark constants")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("binary-curves", help="CSV of p, H2, F2, dF2/dp, CV")
    p.add_argument("--grid", type=int, default=1001)
    p.set_defaults(func=cmd_binary_curves)

    p = sub.add_parser("typicality", help="Monte Carlo rate of epsilon-atypical sequences")
    p.add_argument("--dist", required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--L", type=_int_list, required=True)
    p.add_argument("--reps", type=int, default=10000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_typicality)

    p = sub.add_parser("aep", help="exhaustive epsilon-typical set of the L-th extension")
    p.add_argument("--dist", required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.set_defaults(func=cmd_aep)

    p = sub.add_parser("coverage", help="Monte Carlo coverage of the typicality interval")
    p.add_argument("--dist", required=True)
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--reps", type=int, default=10000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("code", help="Huffman code of an extension and its efficiencies")
    p.add_argument("--dist", required=True)
    p.add_argument("--ext", type=int, default=1)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--length", type=int, default=64,
                   help="sequence length used for the practical-entropy benchmark")
    p.set_defaults(func=cmd_code)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text = args.func(args)
        if args.output:
            with open(args.output, "w", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"infofluct: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NumericError as exc:
        print(f"infofluct: computation error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (UsageError, InfoFluctError, ValueError) as exc:
        print(f"infofluct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
