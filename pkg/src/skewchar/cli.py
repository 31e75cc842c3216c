"""Command line interface.

Subcommands: expand, eval, classify, witness, certify, probe, selftest.
All output is deterministic plain text; seeded commands print their seed in
a header so runs can be reproduced exactly.

Exit codes: 0 success, 1 selftest or contract failure, 2 input error,
3 dimension cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analyzer import (
    NotIndefinite,
    WitnessSearchExhausted,
    classify,
    sign_probe,
)
from .engine import (
    DEFAULT_MAX_DIM,
    ExpansionTooLarge,
    NotPositiveDefinite,
    certify_positive,
    eval_skewchar,
    expand_skewchar,
)
from .matrices import MatrixParseError, SkewMatrix, SymmetricMatrix
from .selftest import run_selftest


class _InputError(Exception):
    pass


def _read_symmetric(path: str) -> SymmetricMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    try:
        return SymmetricMatrix.from_text(text)
    except MatrixParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _read_skew(path: str) -> SkewMatrix:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    try:
        return SkewMatrix.from_text(text)
    except MatrixParseError as exc:
        raise _InputError(f"{path}: {exc}") from exc


def _cmd_expand(args: argparse.Namespace) -> int:
    a = _read_symmetric(args.matrix)
    print(expand_skewchar(a, max_dim=args.max_dim))
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    a = _read_symmetric(args.matrix)
    l = _read_skew(args.skew)
    if a.n != l.n:
        raise _InputError(f"dimension mismatch: form has n={a.n}, skew has n={l.n}")
    print(eval_skewchar(a, l))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    a = _read_symmetric(args.matrix)
    print(classify(a).to_text(), end="")
    return 0


def _cmd_witness(args: argparse.Namespace) -> int:
    a = _read_symmetric(args.matrix)
    report = classify(a)
    if report.witness is None:
        raise _InputError(
            f"form is {report.verdict.value}: det(A - L) is sign-definite, "
            "no sign-change witness exists")
    print(report.to_text(), end="")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    a = _read_symmetric(args.matrix)
    try:
        cert = certify_positive(a, max_dim=args.max_dim)
    except NotPositiveDefinite as exc:
        raise _InputError(f"not positive definite: {exc}") from exc
    print(cert.to_text(), end="")
    return 0


def _cmd_probe(args: argparse.Namespace) -> int:
    a = _read_symmetric(args.matrix)
    report = sign_probe(a, trials=args.trials, seed=args.seed, bound=args.bound)
    print("command: probe")
    print(f"seed: {args.seed}")
    print(f"trials: {args.trials}")
    print(f"bound: {args.bound}")
    print(f"positives: {report.positives}")
    print(f"negatives: {report.negatives}")
    print(f"zeros: {report.zeros}")
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    failures = run_selftest()
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewchar",
        description=(
            "Exact analysis of det(A - L): expansion, evaluation, definiteness "
            "classification, sign witnesses, and positivity certificates."),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="expand det(A - L) symbolically")
    p.add_argument("matrix", help="symmetric matrix file")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                   help="dimension cap for symbolic expansion (default 7)")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("eval", help="evaluate det(A - L) at a concrete skew matrix")
    p.add_argument("matrix", help="symmetric matrix file")
    p.add_argument("skew", help="skew matrix file")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("classify", help="classify the quadratic form")
    p.add_argument("matrix", help="symmetric matrix file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("witness", help="sign-change witnesses for a non-definite form")
    p.add_argument("matrix", help="symmetric matrix file")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("certify", help="sum-of-squares certificate for a positive form")
    p.add_argument("matrix", help="symmetric matrix file")
    p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                   help="dimension cap for certificate construction (default 7)")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("probe", help="tally exact signs over random skew matrices")
    p.add_argument("matrix", help="symmetric matrix file")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=10)
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("selftest", help="run the embedded deterministic checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ExpansionTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NotIndefinite, NotPositiveDefinite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except WitnessSearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
