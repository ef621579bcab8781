"""Command-line interface: `dstfuse fuse` and `dstfuse synth`."""

from __future__ import annotations

import argparse
import sys

from .errors import DstFuseError, IoError
from .evidence import BuildPolicy
from .pipeline import emit_report, evaluate, render_json, render_table
from .scores_io import load_labels, load_scores
from .synth import generate_fixture


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dstfuse", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    fuse = sub.add_parser("fuse", help="fuse per-model score files and report accuracies")
    fuse.add_argument("--scores", nargs="+", required=True, metavar="FILE",
                      help="one score file per model")
    fuse.add_argument("--labels", required=True, metavar="FILE", help="ground-truth labels CSV")
    fuse.add_argument("--format", choices=["csv", "jsonl"], default="csv",
                      help="score file format (default csv)")
    fuse.add_argument("--policy", choices=["literal", "residual-theta"], default="literal",
                      help="mass construction mode (default literal)")
    fuse.add_argument("--theta-floor", type=float, default=1e-3,
                      help="minimum mass reserved on the full frame (default 1e-3)")
    fuse.add_argument("--per-sample", action="store_true",
                      help="include per-sample fusion traces in the report")
    fuse.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    fuse.add_argument("--report-format", choices=["json", "table"], default="json")

    synth = sub.add_parser("synth", help="generate a seeded synthetic fixture")
    synth.add_argument("--classes", type=int, required=True)
    synth.add_argument("--models", type=int, required=True)
    synth.add_argument("--samples", type=int, required=True)
    synth.add_argument("--seed", type=int, required=True)
    synth.add_argument("--out", required=True, metavar="DIR")
    return parser


def _run_fuse(args: argparse.Namespace) -> int:
    policy = BuildPolicy(mode=args.policy.replace("-", "_"), theta_floor=args.theta_floor)
    models = [load_scores(path, format=args.format) for path in args.scores]
    labels = load_labels(args.labels)
    report = evaluate(models, labels, policy)
    if args.report_format == "table":
        text = render_table(report)
        if args.out:
            _write_text(args.out, text)
        else:
            sys.stdout.write(text)
    elif args.out:
        emit_report(report, args.out, include_per_sample=args.per_sample)
    else:
        sys.stdout.write(render_json(report, include_per_sample=args.per_sample))
    return 0


def _write_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _run_synth(args: argparse.Namespace) -> int:
    score_paths, labels_path = generate_fixture(
        args.classes, args.models, args.samples, args.seed, args.out
    )
    for path in score_paths:
        print(f"wrote {path}")
    print(f"wrote {labels_path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; map those to the validation code.
        return 0 if exc.code == 0 else 1
    try:
        if args.command == "fuse":
            return _run_fuse(args)
        return _run_synth(args)
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DstFuseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
