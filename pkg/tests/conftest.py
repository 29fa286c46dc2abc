import os
import subprocess
from pathlib import Path

import pytest
from hypothesis import settings

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def check_positive_source() -> str:
    return (FIXTURES / "check_positive.java").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return FIXTURES / "corpus"


def _git(repo: Path, *args: str) -> str:
    env = {**os.environ, "GIT_AUTHOR_NAME": "fixture", "GIT_AUTHOR_EMAIL": "fixture@example.com",
           "GIT_COMMITTER_NAME": "fixture", "GIT_COMMITTER_EMAIL": "fixture@example.com",
           "GIT_CONFIG_GLOBAL": os.devnull, "GIT_CONFIG_NOSYSTEM": "1"}
    proc = subprocess.run(["git", *args], cwd=repo, env=env, capture_output=True, text=True, check=True)
    return proc.stdout.strip()


@pytest.fixture
def git_repo(tmp_path) -> Path:
    """A two-commit Java repository on branch ``main`` with tags ``v1`` and ``v2``."""
    repo = tmp_path / "repo"
    (repo / "src").mkdir(parents=True)
    _git(repo, "init", "--quiet", "--initial-branch=main")
    (repo / "src" / "App.java").write_text("class App {\n  int f() { return 1; }\n}\n", encoding="utf-8")
    (repo / "src" / "AppTest.java").write_text("class AppTest {\n  void t() { }\n}\n", encoding="utf-8")
    _git(repo, "add", ".")
    _git(repo, "commit", "--quiet", "-m", "first")
    _git(repo, "tag", "v1")
    (repo / "src" / "App.java").write_text(
        "class App {\n  int f() { for (int i = 0; i < 3; i++) { g(i); } return 2; }\n  void g(int i) { }\n}\n",
        encoding="utf-8")
    _git(repo, "commit", "--quiet", "-am", "second")
    _git(repo, "tag", "v2")
    return repo


git = _git


# -- acceptance summary: one PASS/FAIL line per criterion ------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        number = int(name.split("_")[2])
        _ACCEPTANCE[number] = (name, "PASS" if report.outcome == "passed" else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        name, outcome = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {outcome}  ({name})")
