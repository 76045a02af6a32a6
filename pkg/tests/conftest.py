import os
import re
import sys

import pytest


def pytest_addoption(parser):
    parser.addoption("--stretch", action="store_true", default=False,
                     help="also run the larger stretch instances (or set MBDOM_STRETCH=1)")


@pytest.fixture
def stretch(request):
    if not (request.config.getoption("--stretch") or os.environ.get("MBDOM_STRETCH") == "1"):
        pytest.skip("stretch instance: pass --stretch to run")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    RESULTS = getattr(mod, "RESULTS", None)
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: (int(re.match(r"\d+", k).group()), k)):
        r = RESULTS[key]
        line = f"criterion {key:<4} {'PASS' if r['passed'] else 'FAIL'}  {r['title']}  [{r['elapsed']:.2f} s"
        line += f" / limit {r['limit']:g} s]" if r["limit"] else "]"
        if r["note"]:
            line += f"  ({r['note']})"
        terminalreporter.write_line(line)
