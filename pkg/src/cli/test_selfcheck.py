"""Tests for the embedded invariant suite."""
import pytest

from src.cli.selfcheck import run_selfcheck
from src.model.response import _response, compute_N


def flipped_N_response(params, x):
    eps, _ = _response(params, x, -compute_N(params))
    return eps


@pytest.fixture(scope="module")
def results():
    return {result.name: result for result in run_selfcheck(draws=200)}


def test_all_checks_pass(results):
    failed = [name for name, result in results.items() if not result.passed]
    assert failed == []


def test_measured_errors_are_reported(results):
    assert results["full-response equivalence"].measured < 1e-3
    assert results["derivative cross-check"].measured < 1e-6
    assert 3.0 < results["richardson ratio"].measured < 5.0


def test_sign_error_in_N_is_caught():
    mutated = {result.name: result for result in run_selfcheck(response=flipped_N_response, draws=20)}
    assert not mutated["full-response equivalence"].passed
    assert not mutated["pole transparency"].passed


def test_results_are_reproducible():
    first = run_selfcheck(draws=50, seed=7)
    second = run_selfcheck(draws=50, seed=7)
    assert [r.measured for r in first] == [r.measured for r in second]
