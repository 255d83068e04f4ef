from __future__ import annotations

import pytest

from eigenperm import InvalidInputError, run_suite
from eigenperm.verify import SUITES


def test_each_suite_passes_at_small_size():
    for suite in ("recurrences", "bijection", "fourpatterns"):
        results = run_suite(suite, 5)
        assert results
        assert all(r.ok for r in results), [r for r in results if not r.ok]


def test_all_suite_is_the_union():
    combined = run_suite("all", 5)
    parts = [
        r for s in ("recurrences", "bijection", "fourpatterns")
        for r in run_suite(s, 5)
    ]
    assert [r.name for r in combined] == [r.name for r in parts]


def test_unknown_suite_rejected():
    assert set(SUITES) == {"recurrences", "bijection", "fourpatterns", "all"}
    with pytest.raises(InvalidInputError):
        run_suite("everything", 4)
