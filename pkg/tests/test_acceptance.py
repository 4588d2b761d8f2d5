"""Acceptance gate: every criterion runs exhaustively over its full range with exact arithmetic.

Each test prints one ``PASS``/``FAIL`` line (visible without ``-s``).
"""

import time

import pytest

from jacklab.verify import SuiteReport, run_suite


def _merge(name, reports):
    total = SuiteReport(name, {"parts": [r.name + str(r.params) for r in reports]})
    for r in reports:
        total.checks += r.checks
        total.failures.extend(r.failures)
    return total


def _gate(capsys, label, runs):
    start = time.time()
    rep = _merge(label, [run_suite(*args, **kw) for args, kw in runs])
    line = f"{'PASS' if rep.passed else 'FAIL'}  {label}: {rep.checks} checks, {len(rep.failures)} failures, {time.time() - start:.1f}s"
    with capsys.disabled():
        print("\n" + line)
    assert rep.passed, rep.dumps()[:4000]


def test_1_jack_axioms(capsys):
    _gate(capsys, "1 jack axioms, n <= 8", [(("jack-axioms", 1, 8), {})])


def test_2_positivity(capsys):
    _gate(capsys, "2 positivity of c and h, k=1 n<=7 and k=2 n<=5", [
        (("positivity", 1, 7), {}),
        (("positivity", 2, 5), {}),
    ])


def test_3_matching_identities(capsys):
    _gate(capsys, "3 c(0) = |F~| and c(1) = |F|, k<=2 n<=4", [
        (("b0", 2, 4), {"map_n_max": 0}),
        (("b1", 2, 4), {"map_n_max": 0}),
    ])


def test_4_constellation_identities(capsys):
    _gate(capsys, "4 h(0), h(1) = rooted constellation counts, k=1 n<=4 and k=2 n<=3", [
        (("b0", 1, 4), {"map_n_max": 4}),
        (("b1", 1, 4), {"map_n_max": 4}),
        (("b0", 2, 3), {"map_n_max": 3}),
        (("b1", 2, 3), {"map_n_max": 3}),
    ])


def test_5_marginal(capsys):
    _gate(capsys, "5 marginal sums, k<=2 n<=4", [(("marginal", 2, 4), {})])


def test_6_gelfand(capsys):
    _gate(capsys, "6 character formula for |F|, k<=2 n<=4", [(("gelfand", 2, 4), {})])


@pytest.mark.parametrize("suite", ["mult", "duality", "degrees", "bminus1", "somh", "topdeg"])
def test_7_structural(capsys, suite):
    _gate(capsys, f"7 structural identity '{suite}', k<=2 n<=5", [((suite, 2, 5), {})])


def test_8_rectangular_lassalle(capsys):
    _gate(capsys, "8 rectangular Lassalle |mu|<=5, rectangles qr<=8, padding |mu|<=4", [
        (("lassalle-rect", 1, 5), {"jack_n_max": 8}),
    ])
