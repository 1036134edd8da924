import os
from pathlib import Path

import pytest

from flatsem.lexicon import default_lexicon


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


def dataset_dir() -> Path | None:
    """Directory with the ReCOGS_pos tsv splits, if one was provided."""
    root = os.environ.get("RR_DATA")
    if not root:
        return None
    path = Path(root)
    return path if path.is_dir() else None


needs_dataset = pytest.mark.skipif(
    dataset_dir() is None,
    reason="set RR_DATA to a directory containing the ReCOGS_pos tsv splits",
)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one status line per acceptance test at the end of the run."""
    lines = []
    for status in ("passed", "failed", "error", "skipped"):
        for rep in terminalreporter.stats.get(status, []):
            if "test_acceptance.py" in rep.nodeid and rep.when in ("call", "setup"):
                lines.append((rep.nodeid.split("::")[-1], status.upper()))
    if lines:
        terminalreporter.write_sep("-", "acceptance")
        for name, status in sorted(lines):
            terminalreporter.write_line(f"{name}: {status}")
