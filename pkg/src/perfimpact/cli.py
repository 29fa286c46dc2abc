"""Command-line driver: ``perfimpact <subcommand> [flags]``.

Exit status is 0 on success, 1 on an operational error (the error class and
its context go to standard error) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import subprocess
import sys
import warnings
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from . import dataset as ds
from .chart import render_chart
from .errors import ConfigError, PerfImpactError, UnknownSnapshot
from .harness import (TimingRecord, load_run_config, preflight, read_timing_csv, time_tests, walk_history,
                      write_timing_csv)
from .javaast import dump_ast
from .javaparse import parse_java
from .regress import EvalReport, ModelSpec, TrainedModel, evaluate, fit, predict
from .stylometry import CorpusContext, extract_file, extract_snapshots, make_schema

log = logging.getLogger("perfimpact")

MODEL_FORMAT = "perfimpact-predictor/1"


# -- console helpers -------------------------------------------------------------

def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def format_table(headers: Sequence[str], rows: Sequence[Sequence[str]], color: bool = False) -> str:
    """Fixed-width table: first column left-aligned, the rest right-aligned."""
    widths = [max(len(str(c)) for c in col) for col in zip(headers, *rows)]

    def line(cells):
        parts = [str(c).ljust(w) if i == 0 else str(c).rjust(w) for i, (c, w) in enumerate(zip(cells, widths))]
        return "  ".join(parts).rstrip()

    head = line(headers)
    if color:
        head = f"\033[1m{head}\033[0m"
    return "\n".join([head, "  ".join("-" * w for w in widths), *(line(r) for r in rows)]) + "\n"


def _print_table(headers, rows) -> None:
    sys.stdout.write(format_table(headers, rows, _use_color(sys.stdout)))


# -- source discovery --------------------------------------------------------------

def java_sources(root: Path) -> list[tuple[str, str]]:
    """All ``*.java`` files under ``root`` as (posix relative path, text), sorted by path."""
    if root.is_file():
        return [(root.name, root.read_text(encoding="utf-8", errors="replace"))]
    out = []
    for path in sorted(root.rglob("*.java")):
        if ".git" in path.relative_to(root).parts:
            continue
        out.append((path.relative_to(root).as_posix(), path.read_text(encoding="utf-8", errors="replace")))
    return out


def snapshot_dirs(corpus: Path) -> dict[str, list[tuple[str, str]]]:
    """A corpus directory holds one sub-directory of sources per snapshot."""
    dirs = sorted(p for p in corpus.iterdir() if p.is_dir() and not p.name.startswith("."))
    if not dirs:
        raise ConfigError(f"{corpus}: no snapshot directories found")
    return {d.name: java_sources(d) for d in dirs}


def _report_skipped(skipped) -> None:
    for snap, path, reason in skipped:
        where = f"{snap}/{path}" if snap else path
        print(f"skipped {where}: {reason}", file=sys.stderr)


def _write_context(context: CorpusContext, path: Path) -> None:
    path.write_text(json.dumps(context.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


# -- subcommands --------------------------------------------------------------------

def cmd_preflight(args) -> int:
    config = load_run_config(args.config)
    results = preflight(config)
    _print_table(["filter", "status", "detail"], [(r.name, "pass" if r.passed else "FAIL", r.detail) for r in results])
    return 0 if all(r.passed for r in results) else 1


def cmd_extract(args) -> int:
    schema = make_schema(args.schema)
    root = Path(args.path)
    if not root.exists():
        raise ConfigError(f"{root}: no such file or directory")
    files = java_sources(root)
    if args.dump_ast:
        for path, source in files:
            sys.stdout.write(f"# {path}\n")
            sys.stdout.write(dump_ast(parse_java(source, path)))
        return 0
    snap = args.snapshot or "-"
    result = extract_snapshots({snap: files}, schema)
    _report_skipped(result.skipped)
    out = _out_dir(args)
    ds.write_features_csv(result.vectors, schema, out / "features.csv")
    _write_context(result.context, out / "context.json")
    print(f"wrote {len(result.vectors[snap])} rows to {out / 'features.csv'}")
    return 0


def cmd_collect(args) -> int:
    config = load_run_config(args.config)
    schema = make_schema(args.schema)
    if args.snapshot:
        wanted = set(args.snapshot)
        config.snapshots = [s for s in config.snapshots if s.id in wanted or s.label in wanted]
        if not config.snapshots:
            raise UnknownSnapshot(f"none of {sorted(wanted)} is configured")
    sources: dict[str, list[tuple[str, str]]] = {}

    def visit(snapshot):
        sources[snapshot.id] = java_sources(config.repo_path)
        return time_tests(config, snapshot.id)

    results = walk_history(config, visit)
    timings: list[TimingRecord] = []
    for res in results:
        if res.ok:
            timings.append(res.value)
        else:
            print(f"snapshot {res.snapshot.id} failed: {type(res.error).__name__}: {res.error}", file=sys.stderr)
            sources.pop(res.snapshot.id, None)
    out = _out_dir(args)
    write_timing_csv(timings, out / "timings.csv")
    if sources:
        extraction = extract_snapshots(sources, schema)
        _report_skipped(extraction.skipped)
        ds.write_features_csv(extraction.vectors, schema, out / "features.csv")
        _write_context(extraction.context, out / "context.json")
    _print_table(["snapshot", "build_s", "test_s", "exit"],
                 [(t.snapshot, f"{t.build_seconds:.3f}", f"{t.test_seconds:.3f}", str(t.exit_status)) for t in timings])
    return 0 if all(r.ok for r in results) else 1


def cmd_build_dataset(args) -> int:
    source = Path(args.source)
    out = _out_dir(args)
    provenance = {"source": source.name}
    context = None
    if source.is_dir():
        timing_path = Path(args.timings) if args.timings else source / "timings.csv"
        schema = make_schema(args.schema)
        extraction = extract_snapshots(snapshot_dirs(source), schema)
        _report_skipped(extraction.skipped)
        features, context = extraction.vectors, extraction.context
    else:
        if not args.timings:
            raise ConfigError("--timings is required when building from a features CSV")
        timing_path = Path(args.timings)
        schema, features = ds.read_features_csv(source)
        ctx_file = source.parent / "context.json"
        if ctx_file.exists():
            context = CorpusContext.from_dict(json.loads(ctx_file.read_text(encoding="utf-8")))
    timings = read_timing_csv(timing_path)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        dataset = ds.assemble(features, timings, schema)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if args.group_by == "snapshot":
        dataset = ds.group_by_snapshot(dataset)
    dataset.provenance.update(provenance)
    if context is not None:
        _write_context(context, out / "dataset.context.json")
        dataset.provenance["context"] = "dataset.context.json"
    ds.write_csv(dataset, out / "dataset.csv")
    print(f"wrote {len(dataset)} rows x {len(schema.columns)} features to {out / 'dataset.csv'}")
    return 0


def _load_dataset(path: Path):
    dataset = ds.read_csv(path)
    context = CorpusContext()
    ctx_name = dataset.provenance.get("context")
    if ctx_name and (path.parent / ctx_name).exists():
        context = CorpusContext.from_dict(json.loads((path.parent / ctx_name).read_text(encoding="utf-8")))
    return dataset, context


def cmd_evaluate(args) -> int:
    dataset_path = Path(args.dataset)
    dataset, context = _load_dataset(dataset_path)
    if args.group_split == "snapshot":
        plan = ds.kfold_grouped(dataset, args.k, args.seed)
    else:
        plan = ds.kfold_stratified(dataset, args.k, args.seed)
    X, y = dataset.X, dataset.y
    report = evaluate(X, y, plan, seed=args.seed, dataset_digest=dataset.digest())
    out = _out_dir(args)
    (out / "report.json").write_text(report.to_json(), encoding="utf-8")
    best = report.best()
    model = fit(ModelSpec(best.kind, {}, args.seed), X, y)
    document = {
        "format": MODEL_FORMAT,
        "schema": {"name": dataset.schema.name, "embedding_dim": dataset.schema.embedding_dim},
        "baseline_seconds": float(y.mean()),
        "dataset_digest": report.dataset_digest,
        "context": context.to_dict(),
        "model": model.to_dict(),
    }
    (out / "model.json").write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
    rows = []
    for m in report.models:
        rel = "n/a" if m.relative_mae_percent is None else f"{m.relative_mae_percent:.2f}"
        rows.append((m.kind, f"{m.mean_mae_seconds:.4f}", rel, "*" if m.kind == best.kind else ""))
    _print_table(["model", "mae_s", "rel_mae_%", "best"], rows)
    return 0


def _load_predictor(path: Path):
    document = json.loads(path.read_text(encoding="utf-8"))
    if document.get("format") != MODEL_FORMAT:
        raise ConfigError(f"{path}: not a model file written by evaluate")
    schema = make_schema(document["schema"]["name"], document["schema"].get("embedding_dim") or 16)
    context = CorpusContext.from_dict(document.get("context", {}))
    return schema, context, TrainedModel.from_dict(document["model"]), float(document["baseline_seconds"])


def _git_lines(repo: Path, *argv: str) -> list[str]:
    proc = subprocess.run(["git", *argv], cwd=repo, capture_output=True, text=True)
    if proc.returncode != 0:
        raise UnknownSnapshot(proc.stderr.strip() or f"git {' '.join(argv)} failed")
    return [line for line in proc.stdout.splitlines() if line]


def _is_git_tree(path: Path) -> bool:
    proc = subprocess.run(["git", "rev-parse", "--is-inside-work-tree"], cwd=path, capture_output=True, text=True)
    return proc.returncode == 0 and proc.stdout.strip() == "true"


def changed_java_files(root: Path, base: str) -> list[tuple[str, str, Optional[str]]]:
    """(path, working text, base text or None) for each changed ``.java`` file under ``root``."""
    names = set(_git_lines(root, "diff", "--name-only", "--relative", base, "--", "*.java"))
    names.update(_git_lines(root, "ls-files", "--others", "--exclude-standard", "--", "*.java"))
    out = []
    for name in sorted(names):
        path = root / name
        if not path.exists():
            continue  # deleted in the working tree
        shown = subprocess.run(["git", "show", f"{base}:./{name}"], cwd=root, capture_output=True, text=True)
        out.append((name, path.read_text(encoding="utf-8", errors="replace"),
                    shown.stdout if shown.returncode == 0 else None))
    return out


def cmd_predict(args) -> int:
    schema, context, model, training_mean = _load_predictor(Path(args.model))
    target = Path(args.path)
    if target.is_dir() and _is_git_tree(target):
        candidates = changed_java_files(target, args.snapshot or "HEAD")
    else:
        candidates = [(p, text, None) for p, text in java_sources(target)]

    def score(text: str, name: str) -> float:
        fv = extract_file(text, schema, context, name)
        return float(predict(model, np.asarray(fv.values).reshape(1, -1))[0])

    rows = []
    for name, text, base_text in candidates:
        try:
            predicted = score(text, name)
            baseline = score(base_text, name) if base_text else training_mean
        except PerfImpactError as exc:
            print(f"skipped {name}: {type(exc).__name__}: {exc}", file=sys.stderr)
            continue
        delta = predicted - baseline
        pct = delta / baseline * 100.0 if baseline != 0 else math.nan
        rows.append((name, predicted, baseline, delta, pct))
    out = _out_dir(args)
    lines = ["file,predicted_seconds,baseline_seconds,delta_seconds,delta_percent"]
    lines += [",".join([n, *(repr(float(v)) for v in vals)]) for n, *vals in rows]
    (out / "predictions.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    _print_table(["file", "predicted_s", "baseline_s", "delta_s", "delta_%"],
                 [(n, f"{p:.3f}", f"{b:.3f}", f"{d:+.3f}", f"{q:+.2f}") for n, p, b, d, q in rows])
    return 0


def cmd_plot(args) -> int:
    report = EvalReport.from_json(Path(args.report).read_text(encoding="utf-8"))
    out = _out_dir(args)
    (out / "chart.svg").write_text(render_chart(report), encoding="utf-8")
    print(f"wrote {out / 'chart.svg'}")
    return 0


# -- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="perfimpact",
                                     description="Predict test-suite runtime impact from code stylometry.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.set_defaults(func=func)
        return p

    p = add("preflight", cmd_preflight, "check the four repository filters")
    p.add_argument("--config", required=True, help="run configuration file")

    p = add("extract", cmd_extract, "write a features CSV for a file or directory")
    p.add_argument("path", help="a .java file or a directory searched recursively")
    p.add_argument("--schema", default="paper13", choices=["paper13", "full"])
    p.add_argument("--snapshot", default=None, help="snapshot label for the rows (default '-')")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--dump-ast", action="store_true", help="print syntax trees instead of features")

    p = add("collect", cmd_collect, "walk the configured snapshots, timing tests and extracting features")
    p.add_argument("--config", required=True)
    p.add_argument("--schema", default="paper13", choices=["paper13", "full"])
    p.add_argument("--snapshot", action="append", help="restrict to this snapshot id (repeatable)")
    p.add_argument("--out", default=".")

    p = add("build-dataset", cmd_build_dataset, "join features with timings into a dataset CSV")
    p.add_argument("source", help="corpus directory (one sub-directory per snapshot) or features CSV")
    p.add_argument("--timings", help="timing CSV (default: <corpus>/timings.csv)")
    p.add_argument("--schema", default="paper13", choices=["paper13", "full"])
    p.add_argument("--group-by", choices=["snapshot"], default=None, help="collapse rows to one per snapshot")
    p.add_argument("--out", default=".")

    p = add("evaluate", cmd_evaluate, "cross-validate the six models and persist the best")
    p.add_argument("dataset", help="dataset CSV written by build-dataset")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--group-split", choices=["row", "snapshot"], default="row")
    p.add_argument("--out", default=".")

    p = add("predict", cmd_predict, "predict the runtime impact of pending changes")
    p.add_argument("path", nargs="?", default=".", help="git working tree, directory or .java file")
    p.add_argument("--model", required=True, help="model.json written by evaluate")
    p.add_argument("--snapshot", default=None, help="base revision for a git working tree (default HEAD)")
    p.add_argument("--out", default=".")

    p = add("plot", cmd_plot, "render an SVG bar chart from report.json")
    p.add_argument("report")
    p.add_argument("--out", default=".")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "k", 2) < 2:
        parser.error("--k must be at least 2")
    try:
        return args.func(args)
    except PerfImpactError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
