import random

import pytest

# one line per acceptance criterion, filled in by test_acceptance
VERDICTS: dict[str, str] = {}


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(VERDICTS, key=lambda k: int(k.split()[0])):
        terminalreporter.write_line(VERDICTS[key])
