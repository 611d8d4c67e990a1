"""The acceptance gate: every criterion at its stated tolerance.

Each test prints its PASS/FAIL line (run pytest with -s or check the
captured output); the assertion carries the violation details.
"""

import pytest

from gridlab.acceptance import CRITERIA, DEFAULT_SEED


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result = CRITERIA[number](DEFAULT_SEED)
    print(result.line())
    for detail in result.details:
        print("   ", detail)
    assert result.passed, "; ".join(result.details)
