"""Synthetic end-to-end run: generate corpora, build datasets, evaluate models.

    python3 scripts/synthetic_experiment.py --seeds 10 --out runs/synthetic

For every generator seed this writes a corpus with a saturating (sigmoid)
timing law, runs ``build-dataset`` and ``evaluate`` through the CLI and
collects the relative MAE of all six models.  A summary CSV and a chart of
the first seed are written to ``--out``.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import time
from pathlib import Path

from perfimpact.cli import format_table, main as cli
from perfimpact.regress import MODEL_KINDS
from perfimpact.synth import generate_corpus


def run_seed(seed: int, root: Path, k: int = 10) -> dict:
    corpus = root / f"seed{seed}" / "corpus"
    work = root / f"seed{seed}"
    generate_corpus(seed).write(corpus)
    start = time.perf_counter()
    with contextlib.redirect_stdout(io.StringIO()):
        if cli(["build-dataset", str(corpus), "--out", str(work)]) != 0:
            raise RuntimeError(f"build-dataset failed for seed {seed}")
        if cli(["evaluate", str(work / "dataset.csv"), "--k", str(k), "--out", str(work)]) != 0:
            raise RuntimeError(f"evaluate failed for seed {seed}")
    elapsed = time.perf_counter() - start
    report = json.loads((work / "report.json").read_text(encoding="utf-8"))
    rel = {m["kind"]: m["relative_mae_percent"] for m in report["models"]}
    return {"seed": seed, "seconds": elapsed, **rel}


def main() -> None:
    parser = argparse.ArgumentParser(description="synthetic end-to-end experiment")
    parser.add_argument("--seeds", type=int, default=10)
    parser.add_argument("--k", type=int, default=10)
    parser.add_argument("--out", default="runs/synthetic")
    args = parser.parse_args()
    root = Path(args.out)
    root.mkdir(parents=True, exist_ok=True)
    results = [run_seed(s, root, args.k) for s in range(args.seeds)]
    wins = sum(r["random_forest"] < r["linear"] for r in results)
    header = ["seed", *MODEL_KINDS, "seconds"]
    rows = [[str(r["seed"]), *(f"{r[k]:.2f}" for k in MODEL_KINDS), f"{r['seconds']:.1f}"] for r in results]
    print(format_table(header, rows), end="")
    print(f"random_forest below linear in {wins}/{len(results)} seeds")
    lines = [",".join(header)] + [",".join(r) for r in rows]
    (root / "summary.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    cli(["plot", str(root / "seed0" / "report.json"), "--out", str(root)])


if __name__ == "__main__":
    main()
