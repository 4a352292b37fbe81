"""The twelve acceptance checks, each with a pass/fail line and a time budget."""

import time

import pytest

from g2spaces.acceptance import CRITERIA

BUDGET_SECONDS = {
    1: 5,
    2: 5,
    3: 30,
    4: 60,
    5: 30,
    6: 15,
    7: 5,
    8: 30,
    9: 10,
    10: 20,
    11: 5,
    12: 10,
}


@pytest.mark.parametrize(
    "number,slug,fn", CRITERIA, ids=[f"{n:02d}-{slug}" for n, slug, _ in CRITERIA]
)
def test_criterion(number, slug, fn):
    start = time.monotonic()
    ok, detail = fn()
    elapsed = time.monotonic() - start
    print(f"ACCEPTANCE {number} {slug}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {number} ({slug}): {detail}"
    budget = BUDGET_SECONDS[number]
    assert elapsed < budget, f"criterion {number} took {elapsed:.2f}s, budget {budget}s"
