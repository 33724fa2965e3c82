"""Acceptance gate: every criterion at full scale, one PASS/FAIL line each."""

import pytest

from properindex import acceptance


@pytest.mark.slow
@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number, capsys):
    fn = acceptance.ALL[number - 1]
    result = fn()
    with capsys.disabled():
        print("\n" + result.line())
        for f in result.failures:
            print(f"    failure: {f}")
    assert result.passed, result.detail
