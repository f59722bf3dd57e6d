"""The acceptance gate: one test per criterion, printing a pass/fail line.

Every check is an exact integer identity; there are no tolerances to pin.
Bounds (dimensions, counts, random-input sizes) live inside
``steinerlab.acceptance``; the stated wall-clock budgets are asserted here.
"""

import time

import pytest

from steinerlab.acceptance import CRITERIA

TIME_BUDGETS = {
    "1 validity battery": 30.0,
    "5 retraction theorems": 60.0,
}


def _run(name, fn):
    start = time.monotonic()
    report = fn()
    elapsed = time.monotonic() - start
    status = "PASS" if report.passed else "FAIL"
    print(f"{status}  criterion {name}  ({len(report.checks)} checks, {elapsed:.1f}s)")
    if not report.passed:
        details = "; ".join(
            f"{item.name}" + (f" [{item.witness}]" if item.witness else "")
            for item in report.failures()[:10]
        )
        pytest.fail(f"criterion {name} failed: {details}")
    budget = TIME_BUDGETS.get(name)
    if budget is not None and elapsed > budget:
        pytest.fail(f"criterion {name} exceeded its {budget:.0f}s budget: {elapsed:.1f}s")
    return elapsed


@pytest.mark.parametrize("name,fn", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_acceptance_criterion(name, fn):
    _run(name, fn)


def test_full_battery_within_budget():
    start = time.monotonic()
    for name, fn in CRITERIA:
        assert fn().passed, name
    elapsed = time.monotonic() - start
    print(f"full battery: {elapsed:.1f}s")
    assert elapsed < 120.0
