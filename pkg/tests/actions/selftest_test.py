import numpy as np
import pytest

from gg_cohomology.actions import run_selftest
from gg_cohomology.actions import selftest


def test_failing_check_is_reported(monkeypatch):
    def broken(rng):
        raise AssertionError("delta delta = 0.5")

    monkeypatch.setattr(selftest, "CHECKS", [("fine", lambda rng: "ok"), ("broken", broken)])
    result, ok = run_selftest(seed=1)
    assert not ok
    assert [row["passed"] for row in result.rows] == [True, False]
    assert result.rows[1]["detail"] == "AssertionError: delta delta = 0.5"


def test_cheap_checks():
    rng = np.random.default_rng(0)
    for check in (selftest.check_reduction, selftest.check_conjugacy, selftest.check_pure_rewriting,
                  selftest.check_double_coboundary, selftest.check_lambda):
        assert check(rng)


@pytest.mark.slow
def test_full_suite():
    result, ok = run_selftest(seed=0)
    assert ok, result.rows
    assert len(result.rows) == len(selftest.CHECKS)
