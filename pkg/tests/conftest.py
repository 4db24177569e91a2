import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from starlab.recognition import census  # noqa: E402

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def census_dir(tmp_path_factory):
    """Level files shared by every census and recognition run in the session.

    Set STARLAB_TEST_CACHE to keep them between sessions.
    """
    cached = os.environ.get("STARLAB_TEST_CACHE")
    if cached:
        Path(cached).mkdir(parents=True, exist_ok=True)
        return Path(cached)
    return tmp_path_factory.mktemp("census")


@pytest.fixture(scope="session")
def censuses(census_dir):
    results = {}

    def get(k):
        if k not in results:
            results[k] = census(k, checkpoint_dir=census_dir)
        return results[k]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")
