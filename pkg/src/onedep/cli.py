"""Command-line surface: every computation as a reproducible table.

Rationals go over the wire as canonical "num/den" strings; `--decimal`
adds a lossy 15-significant-digit float column.  Identical invocations
(including seeds) produce byte-identical output.  Exit codes: 0 on
success, 1 when a verify suite fails, 2 on usage errors, 3 when a
request exceeds an exact-enumeration depth or asks to sample a model
with no sampler.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import models, verify
from .detpp import kernel_from_one_runs
from .enumeration import PairSet, pattern_count_table
from .errors import DepthExceeded, SamplerUnavailable, ValidationError
from .series import extract
from .transforms import bgf_from_zero_runs

DEFAULT_ORDER = 20

MODEL_NAMES = ("eulerian", "iid", "onepair", "carries", "flipping", "non2bf")

# fixed CSV header per command; the verify header carries no rationals
HEADERS = {
    "dist": ("j", "k", "probability"),
    "runs": ("n", "kind", "value"),
    "kernel": ("lag", "value"),
    "enumerate": ("n", "k", "count"),
    "verify": ("suite", "check", "ok", "detail"),
}


def _default_order() -> int:
    raw = os.environ.get("ONEDEP_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError(f"ONEDEP_ORDER must be an integer, got {raw!r}")
    if n < 1:
        raise ValidationError(f"ONEDEP_ORDER must be >= 1, got {n}")
    return n


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _pairs(text: str) -> list[tuple[int, int]]:
    """Parse "x,y;x,y;..." (empty string means no pairs)."""
    text = text.strip()
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"bad pair {chunk!r}, want x,y")
        try:
            out.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad pair {chunk!r}, want integers")
    return out


def _rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _decimal_str(x: Fraction) -> str:
    return format(float(x), ".15g")


def build_model(args: argparse.Namespace) -> models.ModelSpec:
    name = args.model
    if name == "eulerian":
        return models.Eulerian()
    if name == "iid":
        return models.Iid(args.p)
    if name == "onepair":
        return models.OnePair(args.p)
    if name == "carries":
        return models.Carries(args.b)
    if name == "flipping":
        return models.Flipping(args.p)
    if name == "non2bf":
        if args.alpha is None or args.beta is None:
            raise ValidationError("non2bf needs --alpha and --beta")
        return models.NonTwoBlock(args.alpha, args.beta)
    raise ValidationError(f"unknown model {name!r}")


def _model_params(args: argparse.Namespace) -> dict:
    params: dict = {"model": args.model}
    if args.model in ("iid", "onepair", "flipping"):
        params["p"] = _rat_str(args.p)
    elif args.model == "carries":
        params["b"] = args.b
    elif args.model == "non2bf":
        params["alpha"] = _rat_str(args.alpha)
        params["beta"] = _rat_str(args.beta)
    return params


def cmd_dist(args: argparse.Namespace) -> tuple[dict, list[dict]]:
    n = args.n if args.n is not None else _default_order()
    if n < 0:
        raise ValidationError("--n must be >= 0")
    model = build_model(args)
    Q = bgf_from_zero_runs(models.zero_runs(model, n))
    records = []
    for j in range(n + 1):
        for k in range(j + 1):
            rec = {"j": j, "k": k, "probability": _rat_str(extract(Q, k, j))}
            if args.decimal:
                rec["decimal"] = _decimal_str(extract(Q, k, j))
            records.append(rec)
    params = _model_params(args)
    params["n"] = n
    return params, records


def cmd_runs(args: argparse.Namespace) -> tuple[dict, list[dict]]:
    N = args.N if args.N is not None else _default_order()
    if N < 0:
        raise ValidationError("--N must be >= 0")
    model = build_model(args)
    fetch = models.zero_runs if args.kind == "zero" else models.one_runs
    runs = fetch(model, N)
    records = []
    for n, value in enumerate(runs.series.coeffs):
        rec = {"n": n, "kind": args.kind, "value": _rat_str(value)}
        if args.decimal:
            rec["decimal"] = _decimal_str(value)
        records.append(rec)
    params = _model_params(args)
    params["N"] = N
    params["kind"] = args.kind
    return params, records


def cmd_kernel(args: argparse.Namespace) -> tuple[dict, list[dict]]:
    hi = args.hi if args.hi is not None else _default_order() - 2
    if hi < -1:
        raise ValidationError("--hi must be >= -1")
    model = build_model(args)
    band = kernel_from_one_runs(models.one_runs(model, hi + 2), hi)
    records = []
    for lag in range(-1, hi + 1):
        value = band.value(lag)
        rec = {"lag": lag, "value": _rat_str(value)}
        if args.decimal:
            rec["decimal"] = _decimal_str(value)
        records.append(rec)
    params = _model_params(args)
    params["hi"] = hi
    return params, records


def cmd_enumerate(args: argparse.Namespace) -> tuple[dict, list[dict]]:
    N = args.N if args.N is not None else _default_order()
    ps = PairSet(args.alphabet, args.pairs)
    table = pattern_count_table(ps, N)
    records = []
    for n in range(1, N + 1):
        for k, count in enumerate(table.row(n)):
            records.append({"n": n, "k": k, "count": count})
    params = {
        "alphabet": ps.m,
        "pairs": ";".join(f"{x},{y}" for x, y in ps.sorted_pairs()),
        "N": N,
    }
    return params, records


def cmd_verify(args: argparse.Namespace) -> tuple[dict, list[dict]]:
    checks = verify.run_suite(args.suite, seed=args.seed)
    records = [
        {"suite": c.suite, "check": c.name, "ok": c.ok, "detail": c.detail}
        for c in checks
    ]
    return {"suite": args.suite, "seed": args.seed}, records


def render_csv(command: str, records: list[dict], decimal: bool) -> str:
    header = list(HEADERS[command])
    if decimal and command not in ("enumerate", "verify"):
        header.append("decimal")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in records:
        writer.writerow([rec[col] for col in header])
    return buf.getvalue()


def render_json(command: str, params: dict, records: list[dict]) -> str:
    doc = {"command": command, "params": params, "records": records}
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onedep",
        description="Exact count distributions of stationary 1-dependent 0/1 processes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", metavar="FILE", default=None,
                       help="write output here instead of stdout")

    def add_model(p: argparse.ArgumentParser) -> None:
        p.add_argument("--model", choices=MODEL_NAMES, required=True)
        p.add_argument("--p", type=_fraction, default=Fraction(1, 2),
                       help="success probability for iid/onepair/flipping (rational)")
        p.add_argument("--b", type=int, default=10, help="base for the carries model")
        p.add_argument("--alpha", type=_fraction, default=None,
                       help="p_1 for the non-2-block model")
        p.add_argument("--beta", type=_fraction, default=None,
                       help="p_2 for the non-2-block model")
        p.add_argument("--decimal", action="store_true",
                       help="add a lossy 15-significant-digit decimal column")

    p_dist = sub.add_parser("dist", help="P(S_j = k) for all j <= n")
    add_model(p_dist)
    p_dist.add_argument("--n", type=int, default=None,
                        help="largest horizon (default ONEDEP_ORDER or 20)")
    add_output(p_dist)

    p_runs = sub.add_parser("runs", help="zero-run or one-run probabilities up to N")
    add_model(p_runs)
    p_runs.add_argument("--kind", choices=("zero", "one"), default="zero")
    p_runs.add_argument("--N", type=int, default=None,
                        help="largest run length (default ONEDEP_ORDER or 20)")
    add_output(p_runs)

    p_kernel = sub.add_parser("kernel", help="correlation kernel band k(-1)..k(hi)")
    add_model(p_kernel)
    p_kernel.add_argument("--hi", type=int, default=None,
                          help="largest lag (default ONEDEP_ORDER - 2)")
    add_output(p_kernel)

    p_enum = sub.add_parser("enumerate", help="pattern-count table over an alphabet")
    p_enum.add_argument("--alphabet", type=int, required=True, metavar="M",
                        help="alphabet size")
    p_enum.add_argument("--pairs", type=_pairs, default=[],
                        help='allowed pairs as "x,y;x,y" (empty for none)')
    p_enum.add_argument("--N", type=int, default=None,
                        help="largest string length (default ONEDEP_ORDER or 20)")
    add_output(p_enum)

    p_verify = sub.add_parser("verify", help="run a named check suite")
    p_verify.add_argument("--suite", choices=verify.suite_names(), default="all")
    p_verify.add_argument("--seed", type=int, default=0)
    add_output(p_verify)

    return parser


_COMMANDS = {
    "dist": cmd_dist,
    "runs": cmd_runs,
    "kernel": cmd_kernel,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        params, records = _COMMANDS[args.command](args)
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DepthExceeded, SamplerUnavailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3

    if args.format == "json":
        text = render_json(args.command, params, records)
    else:
        text = render_csv(args.command, records, getattr(args, "decimal", False))

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.command == "verify" and any(not rec["ok"] for rec in records):
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
