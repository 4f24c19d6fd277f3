"""Acceptance criteria 1-10, one test and one printed PASS/FAIL line each.

Run directly (``python3 tests/test_acceptance.py``) for just the summary.
"""
import sys

import pytest

from bollobas.acceptance import CRITERIA


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    result = CRITERIA[number - 1]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    failed = 0
    for fn in CRITERIA:
        res = fn()
        print(res.line(), flush=True)
        failed += not res.passed
    sys.exit(1 if failed else 0)
