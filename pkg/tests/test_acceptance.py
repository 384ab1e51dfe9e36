"""Acceptance battery: one line per criterion, each asserted exactly.

Run directly (``python3 tests/test_acceptance.py``) for just the summary.
"""

import pytest

from nhv import suite


@pytest.mark.parametrize("crit", suite.CRITERIA, ids=lambda c: f"criterion_{c.number:02d}")
def test_criterion(crit, capsys):
    rep = suite.run_criterion(crit)
    with capsys.disabled():
        print("\n" + suite.summary_line(crit, rep))
        if not rep.passed:
            for c in rep.failures()[:3]:
                print(f"    {c.name}: {c.lhs} != {c.rhs}")
    assert rep.passed, f"{len(rep.failures())} failing checks, first: {rep.failures()[0].name}"


def test_criterion_08_rescaled_relation_info(capsys):
    rep = suite.c8_rescaled()
    with capsys.disabled():
        print(f"\ncriterion  8 (info) K0 model with EF - FE = K - K^-1: "
              f"{'holds' if rep.passed else 'does not hold'} ({len(rep.checks)} checks)")
    assert rep.status == "info"


if __name__ == "__main__":
    results = suite.run_suite()
    for c, r in results:
        print(suite.summary_line(c, r))
