"""Local replacement for a hosted CI: check out snapshots, time builds and tests.

Git is driven through its command line.  Commands run through the shell
in the repository directory, timed with a monotonic clock.
"""
from __future__ import annotations

import csv
import glob
import io
import logging
import os
import signal
import statistics
import subprocess
import time
import warnings
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional

from .errors import ConfigError, DirtyWorkingTree, MalformedReport, Timeout, UnknownSnapshot

log = logging.getLogger(__name__)

TIMING_HEADER = ["snapshot", "build_seconds", "test_seconds", "exit_status", "rep_values"]


@dataclass(frozen=True)
class Snapshot:
    id: str
    label: str = ""
    checkout_order: int = 0


@dataclass
class RunConfig:
    repo_path: Path
    snapshots: list[Snapshot] = field(default_factory=list)
    build_command: str = "true"
    test_command: str = "true"
    repetitions: int = 3
    warmup_runs: int = 1
    timeout_seconds: float = 600.0
    report_glob: Optional[str] = None
    min_history_depth: int = 2

    def __post_init__(self) -> None:
        self.repo_path = Path(self.repo_path)
        if self.repetitions < 1:
            raise ConfigError("repetitions must be >= 1")
        if self.warmup_runs < 0:
            raise ConfigError("warmup_runs must be >= 0")
        if not self.timeout_seconds > 0:
            raise ConfigError("timeout_seconds must be > 0")
        ids = [s.id for s in self.snapshots]
        if len(set(ids)) != len(ids):
            raise ConfigError("snapshot ids must be unique")


@dataclass
class TimingRecord:
    snapshot: str
    build_seconds: float
    test_seconds: float
    repetition_values: list[float]
    exit_status: int = 0
    per_test_seconds: dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.exit_status == 0


@dataclass
class SnapshotResult:
    snapshot: Snapshot
    value: Any = None
    error: Optional[BaseException] = None

    @property
    def ok(self) -> bool:
        return self.error is None


# -- configuration file ------------------------------------------------------

_INT_KEYS = {"repetitions", "warmup_runs", "min_history_depth"}
_FLOAT_KEYS = {"timeout_seconds"}
_TEXT_KEYS = {"repo_path", "build_command", "test_command", "report_glob"}


def parse_run_config(text: str, base_dir: Path = Path(".")) -> RunConfig:
    """Parse ``key = value`` lines with repeated ``[snapshot]`` sections.

    Top-level keys are the :class:`RunConfig` fields; each ``[snapshot]``
    section takes ``id`` and optional ``label``.  ``#`` and ``;`` start
    comment lines.  A relative ``repo_path`` is resolved against
    ``base_dir``.
    """
    values: dict[str, Any] = {}
    snapshots: list[dict[str, str]] = []
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(("#", ";")):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section != "snapshot":
                raise ConfigError(f"line {lineno}: unknown section [{section}]")
            snapshots.append({})
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        if section == "snapshot":
            if key not in ("id", "label"):
                raise ConfigError(f"line {lineno}: unknown snapshot key {key!r}")
            snapshots[-1][key] = value
            continue
        try:
            if key in _INT_KEYS:
                values[key] = int(value)
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            elif key in _TEXT_KEYS:
                values[key] = value
            else:
                raise ConfigError(f"line {lineno}: unknown key {key!r}")
        except ValueError:
            raise ConfigError(f"line {lineno}: bad value for {key!r}: {value!r}") from None
    if "repo_path" not in values:
        raise ConfigError("repo_path is required")
    repo = Path(values["repo_path"])
    values["repo_path"] = repo if repo.is_absolute() else (base_dir / repo)
    snaps = []
    for order, entry in enumerate(snapshots):
        if "id" not in entry:
            raise ConfigError(f"snapshot section {order + 1} has no id")
        snaps.append(Snapshot(entry["id"], entry.get("label", entry["id"]), order))
    return RunConfig(snapshots=snaps, **values)


def load_run_config(path: str | os.PathLike) -> RunConfig:
    path = Path(path)
    return parse_run_config(path.read_text(encoding="utf-8"), path.parent)


# -- git ----------------------------------------------------------------------

def _git(repo: Path, *args: str, check: bool = True) -> subprocess.CompletedProcess:
    proc = subprocess.run(["git", *args], cwd=repo, capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise RuntimeError(f"git {' '.join(args)} failed: {proc.stderr.strip()}")
    return proc


def head_commit(repo: Path) -> str:
    return _git(repo, "rev-parse", "HEAD").stdout.strip()


def current_ref(repo: Path) -> str:
    """Branch name when attached, otherwise the commit hash."""
    proc = _git(repo, "symbolic-ref", "--quiet", "--short", "HEAD", check=False)
    return proc.stdout.strip() if proc.returncode == 0 else head_commit(repo)


def is_dirty(repo: Path) -> bool:
    """True when tracked files differ from HEAD (untracked files are ignored)."""
    return bool(_git(repo, "status", "--porcelain", "--untracked-files=no").stdout.strip())


def resolve_snapshot(repo: Path, snapshot_id: str) -> str:
    proc = _git(repo, "rev-parse", "--verify", "--quiet", f"{snapshot_id}^{{commit}}", check=False)
    if proc.returncode != 0:
        raise UnknownSnapshot(f"cannot resolve snapshot {snapshot_id!r}")
    return proc.stdout.strip()


def history_depth(repo: Path) -> int:
    return int(_git(repo, "rev-list", "--count", "HEAD").stdout.strip())


def walk_history(config: RunConfig, visitor: Callable[[Snapshot], Any]) -> list[SnapshotResult]:
    """Check out each snapshot in order and call ``visitor`` on it.

    Per-snapshot failures (unresolvable ids, checkout problems, visitor
    exceptions) are captured in the result list.  The original checkout is
    restored afterwards no matter what.
    """
    repo = config.repo_path
    if _git(repo, "rev-parse", "--is-inside-work-tree", check=False).returncode != 0:
        raise DirtyWorkingTree(f"{repo} is not a git working tree")
    if is_dirty(repo):
        raise DirtyWorkingTree(f"{repo} has uncommitted changes")
    results: list[SnapshotResult] = []
    if not config.snapshots:
        return results
    original = current_ref(repo)
    try:
        for snap in sorted(config.snapshots, key=lambda s: s.checkout_order):
            try:
                commit = resolve_snapshot(repo, snap.id)
                _git(repo, "checkout", "--quiet", "--detach", commit)
                results.append(SnapshotResult(snap, visitor(snap)))
            except Exception as exc:  # captured per snapshot by contract
                log.warning("snapshot %s failed: %s", snap.id, exc)
                results.append(SnapshotResult(snap, error=exc))
    finally:
        if is_dirty(repo):
            _git(repo, "checkout", "--quiet", "--", ".", check=False)
        _git(repo, "checkout", "--quiet", original)
    return results


# -- timing -------------------------------------------------------------------

def run_timed(command: str, cwd: Path, timeout: float) -> tuple[float, int]:
    """Run a shell command; return (wall seconds, exit status)."""
    start = time.perf_counter()
    proc = subprocess.Popen(command, shell=True, cwd=cwd, stdout=subprocess.DEVNULL,
                            stderr=subprocess.DEVNULL, start_new_session=True)
    try:
        status = proc.wait(timeout=timeout)
    except subprocess.TimeoutExpired:
        os.killpg(proc.pid, signal.SIGKILL)
        proc.wait()
        raise Timeout(f"{command!r} exceeded {timeout} s") from None
    return time.perf_counter() - start, status


def time_tests(config: RunConfig, snapshot_id: str = "") -> TimingRecord:
    """Time one build, then the test command ``repetitions`` times.

    Warm-up runs are discarded.  ``test_seconds`` is the median of the
    timed repetitions; the exit status is the build's when the build fails,
    otherwise that of the last repetition.
    """
    repo = config.repo_path
    build_seconds, build_status = run_timed(config.build_command, repo, config.timeout_seconds)
    for _ in range(config.warmup_runs):
        run_timed(config.test_command, repo, config.timeout_seconds)
    reps = []
    status = 0
    for _ in range(config.repetitions):
        seconds, status = run_timed(config.test_command, repo, config.timeout_seconds)
        reps.append(seconds)
    record = TimingRecord(
        snapshot=snapshot_id,
        build_seconds=build_seconds,
        test_seconds=statistics.median(reps),
        repetition_values=reps,
        exit_status=build_status if build_status != 0 else status,
    )
    if config.report_glob:
        for path in sorted(glob.glob(str(repo / config.report_glob), recursive=True)):
            record.per_test_seconds.update(parse_test_report(path))
        total = sum(record.per_test_seconds.values())
        if total > record.test_seconds * 1.5:
            warnings.warn(f"per-test times sum to {total:.3f} s, above 1.5x the measured "
                          f"{record.test_seconds:.3f} s", stacklevel=2)
    return record


def parse_test_report(path: str | os.PathLike) -> dict[str, float]:
    """Map ``classname.name`` (or ``name``) to seconds from a JUnit-style XML report."""
    try:
        root = ET.parse(path).getroot()
    except ET.ParseError as exc:
        warnings.warn(f"{path}: not well-formed XML ({exc})", MalformedReport, stacklevel=2)
        return {}
    cases = list(root.iter("testcase"))
    if not cases:
        warnings.warn(f"{path}: no testcase elements", MalformedReport, stacklevel=2)
        return {}
    times = {}
    for case in cases:
        name = case.get("name", "")
        classname = case.get("classname")
        key = f"{classname}.{name}" if classname else name
        try:
            seconds = float(case.get("time", "0").replace(",", ""))
        except ValueError:
            seconds = 0.0
        times[key] = seconds
    return times


def timings_to_csv(records: list[TimingRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(TIMING_HEADER)
    for r in records:
        writer.writerow([r.snapshot, repr(r.build_seconds), repr(r.test_seconds), r.exit_status,
                         ";".join(repr(v) for v in r.repetition_values)])
    return buf.getvalue()


def write_timing_csv(records: list[TimingRecord], path: str | os.PathLike) -> None:
    Path(path).write_text(timings_to_csv(records), encoding="utf-8", newline="")


def read_timing_csv(path: str | os.PathLike) -> dict[str, TimingRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != TIMING_HEADER:
            raise ConfigError(f"{path}: unexpected timing header {header}")
        out = {}
        for row in reader:
            reps = [float(v) for v in row[4].split(";") if v]
            out[row[0]] = TimingRecord(row[0], float(row[1]), float(row[2]), reps, int(row[3]))
    return out


# -- preflight ------------------------------------------------------------------

SOURCE_EXTENSIONS = frozenset(
    ".java .kt .scala .groovy .py .js .ts .c .cc .cpp .h .hpp .cs .go .rb .rs .php .swift".split()
)


@dataclass(frozen=True)
class FilterResult:
    name: str
    passed: bool
    detail: str


def extension_census(repo: Path) -> Counter:
    census: Counter = Counter()
    for dirpath, dirnames, filenames in os.walk(repo):
        dirnames[:] = [d for d in dirnames if d != ".git"]
        for name in filenames:
            ext = os.path.splitext(name)[1].lower()
            if ext in SOURCE_EXTENSIONS:
                census[ext] += 1
    return census


def preflight(config: RunConfig) -> list[FilterResult]:
    """Check the four repository-selection filters locally.

    1. language: ``.java`` is the most common source extension;
    2. compilable: the build command exits 0;
    3. has tests: the test command exits 0 and finds at least one test,
       counted from reports when ``report_glob`` is set, otherwise from
       ``*Test*.java`` files;
    4. history: at least ``min_history_depth`` commits reachable from HEAD.
    """
    repo = config.repo_path
    results = []
    census = extension_census(repo)
    top = census.most_common(1)
    java_ok = bool(top) and top[0][0] == ".java"
    results.append(FilterResult("language", java_ok, ", ".join(f"{e}:{n}" for e, n in census.most_common()) or "no source files"))

    try:
        seconds, status = run_timed(config.build_command, repo, config.timeout_seconds)
        results.append(FilterResult("compilable", status == 0, f"exit {status} in {seconds:.2f} s"))
    except Timeout as exc:
        results.append(FilterResult("compilable", False, str(exc)))

    try:
        seconds, status = run_timed(config.test_command, repo, config.timeout_seconds)
        if config.report_glob:
            n_tests = sum(len(parse_test_report(p)) for p in glob.glob(str(repo / config.report_glob), recursive=True))
            source = "report testcases"
        else:
            n_tests = sum(1 for p in repo.rglob("*Test*.java") if ".git" not in p.parts)
            source = "test source files"
        results.append(FilterResult("has_tests", status == 0 and n_tests >= 1,
                                    f"exit {status}, {n_tests} {source}"))
    except Timeout as exc:
        results.append(FilterResult("has_tests", False, str(exc)))

    try:
        depth = history_depth(repo)
        results.append(FilterResult("history", depth >= config.min_history_depth,
                                    f"{depth} commits (minimum {config.min_history_depth})"))
    except RuntimeError as exc:
        results.append(FilterResult("history", False, str(exc)))
    return results
