"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line; the lines
are repeated in the terminal summary.  Run directly for just the lines:

    python3 tests/test_acceptance.py
"""

import json
import sys

import pytest

from sbk.sampling import make_rng
from sbk.suite import CRITERIA, DEFAULT_SAMPLES, criterion_7

SEED = 42
IDS = sorted(CRITERIA)


def run_check(cid):
    rng = make_rng(SEED)
    if cid == "criterion-7":
        return criterion_7(rng, samples=DEFAULT_SAMPLES, seed=SEED)
    return CRITERIA[cid](rng)


def line_for(check):
    return f"{check.verdict.upper():4} {check.id}: {check.claim}"


@pytest.mark.parametrize("cid", IDS)
def test_criterion(cid):
    from conftest import ACCEPTANCE_LINES

    check = run_check(cid)
    line = line_for(check)
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert check.verdict == "pass", json.dumps(check.details, indent=1)[:4000]


if __name__ == "__main__":
    failed = 0
    for cid in IDS:
        check = run_check(cid)
        print(line_for(check))
        failed += check.verdict == "fail"
    sys.exit(1 if failed else 0)
