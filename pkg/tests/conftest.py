"""Shared fixtures and the acceptance-suite pass/fail reporter."""

from __future__ import annotations

import os
import re
from importlib import resources
from pathlib import Path

import pytest

DATA = resources.files("lexstat") / "data"

# Optional real datasets; the bundled fixtures stand in when unset.
MOBY_ENV = "LEXSTAT_MOBY_WORDLIST"
CAROL_ENV = "LEXSTAT_CAROL_TEXT"
BIRTHDAY_ENV = "LEXSTAT_BIRTHDAY_FILE"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return Path(str(DATA))


@pytest.fixture(scope="session")
def wordlist_path() -> Path:
    """The Moby crossword list if provided, else the bundled excerpt."""
    return Path(os.environ.get(MOBY_ENV, str(DATA / "wordlist_excerpt.txt")))


@pytest.fixture(scope="session")
def carol_freqs_path() -> Path:
    return Path(str(DATA / "carol_letter_freqs.csv"))


@pytest.fixture(scope="session")
def quote_path() -> Path:
    return Path(str(DATA / "pangram_quote.txt"))


@pytest.fixture(scope="session")
def birthday_path() -> Path:
    """The 1978 day-count file if provided, else the calibrated stand-in."""
    return Path(os.environ.get(BIRTHDAY_ENV, str(DATA / "birthdays_1978_synthetic.csv")))


@pytest.fixture(scope="session")
def carol_text_path() -> Path | None:
    p = os.environ.get(CAROL_ENV)
    return Path(p) if p else None


# ---- acceptance criterion reporting -----------------------------------

_CRITERION_RE = re.compile(r"test_criterion_(\d+)")
_results: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    m = _CRITERION_RE.search(report.nodeid)
    if not m:
        return
    num = int(m.group(1))
    if report.when == "call":
        if report.passed:
            _results[num] = ("PASS", "")
        elif report.failed:
            _results[num] = ("FAIL", report.longreprtext.splitlines()[-1] if report.longreprtext else "")
    if report.skipped:
        reason = ""
        if isinstance(report.longrepr, tuple):
            reason = report.longrepr[2]
        _results[num] = ("SKIP", reason)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_results):
        status, detail = _results[num]
        line = f"criterion {num:>2}: {status}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
