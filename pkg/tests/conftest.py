from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = Path(__file__).resolve().parent / "fixtures"


def data_dir() -> Path:
    return Path(os.environ.get("SPARSECLIQUE_DATA", REPO_ROOT / "data"))


def dataset(filename: str) -> Path:
    """Path of a benchmark dataset, skipping the test when it is not on disk."""
    p = data_dir() / filename
    if not p.exists():
        pytest.skip(f"dataset {filename} not present under {data_dir()} (see README)")
    return p


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
