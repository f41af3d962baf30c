import contextlib

import pytest

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def criterion():
    @contextlib.contextmanager
    def record(number: int, title: str):
        try:
            yield
        except BaseException:
            ACCEPTANCE[number] = (False, title)
            print(f"[FAIL] criterion {number}: {title}")
            raise
        ACCEPTANCE[number] = (True, title)
        print(f"[PASS] criterion {number}: {title}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, title = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {number:>2}  {title}")
