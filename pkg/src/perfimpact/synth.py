"""Seeded generator of Java snapshot corpora with a known timing law.

Every snapshot carries a latent style vector ``z`` (loop, conditional,
comment and literal propensity).  Successive snapshots drift along one
random direction ``u`` with a little per-snapshot jitter, the way a code
base's habits shift over a series of updates.  Each snapshot's 42 files are
rendered from the same per-file skeletons, so files keep their identity
while their style follows ``z``.  The snapshot's test time is

    30 + 40 * sigmoid(w . z) + Normal(0, noise_sd)

with ``w = gain * u``, so the time saturates at both ends of the drift.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .harness import TimingRecord, write_timing_csv

N_LATENT = 4
_IDENTS = ["count", "total", "index", "value", "buffer", "result", "item", "limit", "offset", "cursor",
           "width", "height", "score", "weight", "delta", "node", "entry", "token", "state", "flag"]
_TYPES = ["int", "long", "double", "String", "boolean"]
_CALLS = ["process", "update", "validate", "compute", "render", "flush", "load", "store"]
_IMPORTS = ["java.util.List", "java.util.Map", "java.util.ArrayList", "java.util.HashMap", "java.io.File",
            "java.io.IOException", "java.util.Set", "java.util.Optional", "java.time.Instant", "java.util.Objects"]


@dataclass
class SyntheticCorpus:
    snapshots: list[str]
    files: dict[str, list[tuple[str, str]]]  # snapshot -> [(relative path, source)]
    timings: dict[str, TimingRecord]
    latent: np.ndarray
    weights: np.ndarray

    def write(self, root: str | Path) -> None:
        """Write ``<root>/<snapshot>/*.java`` and ``<root>/timings.csv``."""
        root = Path(root)
        for snap in self.snapshots:
            for rel, source in self.files[snap]:
                path = root / snap / rel
                path.parent.mkdir(parents=True, exist_ok=True)
                path.write_text(source, encoding="utf-8", newline="")
        write_timing_csv([self.timings[s] for s in self.snapshots], root / "timings.csv")


def _sigmoid(x: float) -> float:
    return 1.0 / (1.0 + math.exp(-x))


class _Writer:
    def __init__(self, rng: np.random.Generator, knobs: dict[str, float], indent: str):
        self.rng = rng
        self.k = knobs
        self.indent = indent
        self.lines: list[str] = []

    def chance(self, p: float) -> bool:
        return bool(self.rng.random() < p)

    def pick(self, seq):
        return seq[int(self.rng.integers(len(seq)))]

    def emit(self, depth: int, text: str) -> None:
        self.lines.append(self.indent * depth + text)

    def literal(self) -> str:
        r = self.rng.random()
        if r < 0.5:
            return str(int(self.rng.integers(0, 100)))
        if r < 0.7:
            return f"{self.rng.random() * 10:.2f}"
        if r < 0.85:
            return '"' + self.pick(_IDENTS) + '"'
        return self.pick(["true", "false"])

    def operand(self, names: list[str]) -> str:
        return self.literal() if self.chance(self.k["literal"]) else self.pick(names)

    def comment(self, depth: int) -> None:
        r = self.rng.random()
        if r < 0.6:
            self.emit(depth, "// " + " ".join(self.pick(_IDENTS) for _ in range(3)))
        elif r < 0.85:
            self.emit(depth, "/* " + self.pick(_IDENTS) + " " + self.pick(_IDENTS) + " */")
        else:
            self.emit(depth, "/**")
            self.emit(depth, " * " + " ".join(self.pick(_IDENTS) for _ in range(4)))
            self.emit(depth, " */")

    def statement(self, depth: int, names: list[str], budget: int) -> None:
        if self.chance(self.k["comment"]):
            self.comment(depth)
        r = self.rng.random()
        nested = budget > 0
        if nested and r < self.k["loop"]:
            kind = self.rng.integers(3)
            v = self.pick(names)
            if kind == 0:
                self.emit(depth, f"for (int i{depth} = 0; i{depth} < {self.rng.integers(2, 50)}; i{depth}++) {{")
            elif kind == 1:
                self.emit(depth, f"while ({v} < {self.operand(names)}) {{")
            else:
                self.emit(depth, f"for (int x{depth} : new int[] {{1, 2, 3}}) {{")
            for _ in range(int(self.rng.integers(1, 3))):
                self.statement(depth + 1, names, budget - 1)
            self.emit(depth, "}")
        elif nested and r < self.k["loop"] + self.k["cond"]:
            v = self.pick(names)
            self.emit(depth, f"if ({v} > {self.operand(names)}) {{")
            self.statement(depth + 1, names, budget - 1)
            if self.chance(0.4):
                self.emit(depth, "} else {")
                self.statement(depth + 1, names, budget - 1)
            self.emit(depth, "}")
        elif r < 0.85:
            v = self.pick(names)
            self.emit(depth, f"{v} = {v} + {self.operand(names)};")
        else:
            self.emit(depth, f"{self.pick(_CALLS)}({self.operand(names)});")
        if self.chance(self.k["blank"]):
            self.lines.append("")


def render_file(class_name: str, skeleton: np.random.Generator, style: np.random.Generator,
                knobs: dict[str, float]) -> str:
    """Render one class.  ``skeleton`` fixes the shape (method count, names);
    ``style`` drives the knob-dependent choices."""
    n_methods = int(skeleton.integers(2, 7))
    n_imports = int(skeleton.integers(0, 5))
    method_names = [f"{_CALLS[int(skeleton.integers(len(_CALLS)))]}{i}" for i in range(n_methods)]
    lengths = skeleton.integers(6, 16, size=n_methods)
    indent = "\t" if skeleton.random() < 0.15 else "    "
    w = _Writer(style, knobs, indent)
    w.emit(0, "package demo.app;")
    w.lines.append("")
    for imp in sorted(set(_IMPORTS[int(i)] for i in skeleton.integers(len(_IMPORTS), size=n_imports))):
        w.emit(0, f"import {imp};")
    w.lines.append("")
    if w.chance(knobs["comment"]):
        w.comment(0)
    w.emit(0, f"public class {class_name} {{")
    fields = [_IDENTS[int(i)] for i in skeleton.choice(len(_IDENTS), size=4, replace=False)]
    for f in fields:
        w.emit(1, f"private int {f} = {int(style.integers(0, 10))};")
    w.lines.append("")
    for name, length in zip(method_names, lengths):
        if w.chance(knobs["comment"]):
            w.comment(1)
        param = w.pick(_IDENTS[10:])
        w.emit(1, f"public int {name}(int {param}) {{")
        names = fields + [param]
        for _ in range(int(length)):
            w.statement(2, names, budget=2)
        w.emit(2, f"return {w.pick(names)};")
        w.emit(1, "}")
        w.lines.append("")
    w.emit(0, "}")
    return "\n".join(w.lines) + "\n"


def knobs_from_latent(z: np.ndarray, sharpness: float = 2.5) -> dict[str, float]:
    """Map the latent style vector to per-statement probabilities."""
    z = sharpness * np.asarray(z, dtype=float)
    return {
        "loop": 0.03 + 0.35 * _sigmoid(z[0]),
        "cond": 0.03 + 0.30 * _sigmoid(z[1]),
        "comment": 0.02 + 0.50 * _sigmoid(z[2]),
        "literal": 0.05 + 0.85 * _sigmoid(z[3]),
        "blank": 0.02 + 0.30 * _sigmoid(z[2] - z[0]),
    }


def generate_corpus(seed: int, n_snapshots: int = 5, n_files: int = 42, noise_sd: float = 0.5,
                    drift: float = 2.0, jitter: float = 0.15, gain: float = 4.0) -> SyntheticCorpus:
    """Build a corpus of ``n_snapshots`` x ``n_files`` Java files with known test times."""
    rng = np.random.default_rng(seed)
    direction = rng.choice([-1.0, 1.0], size=N_LATENT) * rng.uniform(0.5, 1.0, size=N_LATENT)
    direction /= np.linalg.norm(direction)
    weights = gain * direction
    steps = np.linspace(-drift, drift, n_snapshots)
    latent = steps[:, None] * direction[None, :] + rng.normal(0.0, jitter, size=(n_snapshots, N_LATENT))
    skeleton_seeds = rng.integers(0, 2**31, size=n_files)
    snapshots = [f"snap{i}" for i in range(n_snapshots)]
    files: dict[str, list[tuple[str, str]]] = {}
    timings: dict[str, TimingRecord] = {}
    for s, snap in enumerate(snapshots):
        knobs = knobs_from_latent(latent[s])
        style = np.random.default_rng([seed, s])
        files[snap] = [
            (f"src/Module{f:02d}.java",
             render_file(f"Module{f:02d}", np.random.default_rng(int(skeleton_seeds[f])), style, knobs))
            for f in range(n_files)
        ]
        t = 30.0 + 40.0 * _sigmoid(float(weights @ latent[s])) + float(rng.normal(0.0, noise_sd))
        timings[snap] = TimingRecord(snap, build_seconds=1.0, test_seconds=t, repetition_values=[t], exit_status=0)
    return SyntheticCorpus(snapshots, files, timings, latent, weights)
