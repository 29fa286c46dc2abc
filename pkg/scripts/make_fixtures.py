"""Regenerate the bundled test fixtures under tests/fixtures/.

    python3 scripts/make_fixtures.py

Writes a 5-snapshot x 42-file synthetic corpus with its timing CSV, the
checkPositive sample class and a three-testcase JUnit report.
"""
from __future__ import annotations

import argparse
import shutil
from pathlib import Path

from perfimpact.synth import generate_corpus

FIXTURE_SEED = 2024

CHECK_POSITIVE = """public class Sample {
    public boolean checkPositive(int integer) {
        if (integer > 0)
            return true;
        else
            return false;
    }
}
"""

JUNIT_REPORT = """<?xml version="1.0" encoding="UTF-8"?>
<testsuite name="demo.app.ModuleTest" tests="3" failures="0" errors="0" time="0.600">
  <testcase classname="demo.app.ModuleTest" name="addsNumbers" time="0.100"/>
  <testcase classname="demo.app.ModuleTest" name="parsesInput" time="0.200"/>
  <testcase classname="demo.app.ModuleTest" name="rendersOutput" time="0.300"/>
</testsuite>
"""


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "fixtures"))
    args = parser.parse_args()
    out = Path(args.out)
    corpus_dir = out / "corpus"
    if corpus_dir.exists():
        shutil.rmtree(corpus_dir)
    generate_corpus(FIXTURE_SEED).write(corpus_dir)
    (out / "check_positive.java").write_text(CHECK_POSITIVE, encoding="utf-8")
    (out / "junit_three.xml").write_text(JUNIT_REPORT, encoding="utf-8")
    print(f"fixtures written to {out}")


if __name__ == "__main__":
    main()
