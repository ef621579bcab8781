#!/usr/bin/env python3
"""Sweep seeds and model counts: ensemble gain vs observed Dempster conflict.

High mean conflict signals disagreeing evidence; this sweep shows how the
fused-minus-best-single accuracy gap and the mean per-step K move together as
the ensemble grows.
"""

import argparse
import tempfile
from pathlib import Path

from dstfuse import BuildPolicy, evaluate, generate_fixture, load_labels, load_scores


def run_once(classes, models, samples, seed, policy, workdir):
    score_paths, labels_path = generate_fixture(classes, models, samples, seed, workdir)
    loaded = [load_scores(p) for p in score_paths]
    labels = load_labels(labels_path)
    report = evaluate(loaded, labels, policy)
    best = max(report.per_model_accuracy.values())
    return report.fused_accuracy - best, report.mean_conflict, report.tie_count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--classes", type=int, default=10)
    parser.add_argument("--samples", type=int, default=300)
    parser.add_argument("--model-counts", type=int, nargs="+", default=[2, 3, 5, 8])
    parser.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2, 3, 4])
    parser.add_argument("--policy", choices=["literal", "residual_theta"],
                        default="residual_theta")
    args = parser.parse_args()

    policy = BuildPolicy(args.policy, 1e-3)
    print(f"policy={args.policy}  classes={args.classes}  samples={args.samples}")
    print(f"{'models':>6}  {'mean gain':>10}  {'mean K':>8}  {'ties/run':>8}")
    with tempfile.TemporaryDirectory(prefix="dstfuse-sweep-") as tmp:
        for count in args.model_counts:
            gains, conflicts, ties = [], [], []
            for seed in args.seeds:
                workdir = Path(tmp) / f"m{count}-s{seed}"
                gain, mean_k, tie_count = run_once(
                    args.classes, count, args.samples, seed, policy, workdir
                )
                gains.append(gain)
                conflicts.append(mean_k)
                ties.append(tie_count)
            print(
                f"{count:>6}  {sum(gains) / len(gains):>+10.4f}  "
                f"{sum(conflicts) / len(conflicts):>8.4f}  "
                f"{sum(ties) / len(ties):>8.1f}"
            )


if __name__ == "__main__":
    main()
