import json

import pytest

from jacklab.verify import SUITES, SuiteReport, run_suite

FAST = [
    ("positivity", 2, 3, {}),
    ("b0", 2, 3, {"map_n_max": 3}),
    ("b1", 1, 3, {"map_n_max": 3}),
    ("marginal", 2, 3, {}),
    ("gelfand", 2, 3, {}),
    ("jack-axioms", 1, 5, {}),
    ("mult", 2, 3, {}),
    ("degrees", 2, 3, {}),
    ("somh", 2, 3, {}),
    ("bminus1", 2, 3, {}),
    ("topdeg", 2, 3, {}),
    ("duality", 2, 3, {}),
    ("lassalle-rect", 1, 3, {"jack_n_max": 4}),
    ("bijections", 2, 2, {}),
]


def test_every_suite_is_covered():
    assert sorted(SUITES) == sorted(name for name, *_ in FAST)


@pytest.mark.parametrize("name,k,n,extra", FAST, ids=[f[0] for f in FAST])
def test_suite_passes(name, k, n, extra):
    rep = run_suite(name, k, n, **extra)
    assert rep.checks > 0
    assert rep.passed, rep.dumps()


def test_reports_are_deterministic():
    a = run_suite("mult", 2, 3).dumps()
    b = run_suite("mult", 2, 3).dumps()
    assert a == b


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", 1, 1)


def test_failure_payload():
    rep = SuiteReport("demo", {"k_max": 1})
    rep.check(True, "a", 1, 1)
    rep.check(False, ("key", 2), [1], [2])
    data = json.loads(rep.dumps())
    assert data["checks"] == 2 and data["passed"] is False
    assert data["failures"] == [{"key": ["key", 2], "expected": [1], "actual": [2]}]
