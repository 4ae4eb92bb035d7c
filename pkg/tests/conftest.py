from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"

# Filled by the decorator in test_acceptance.py; printed after the run.
ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def sample_text() -> str:
    return (DATA_DIR / "sample_en.txt").read_text(encoding="utf-8")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number, title, status in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"criterion {number} [{status}] {title}")
