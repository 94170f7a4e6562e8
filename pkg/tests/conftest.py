import sys

import pytest

from ffappell.ff_core import field_of_order


@pytest.fixture(params=[3, 4, 5, 7, 8, 9])
def small_field(request):
    return field_of_order(request.param)


def pytest_terminal_summary(terminalreporter):
    results = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in results.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
