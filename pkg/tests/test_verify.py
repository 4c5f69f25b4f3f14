import pytest

from cycshift.formats import group
from cycshift.verify import SUITES, run_suite

FAST = ["A1", "A2", "A3", "B2", "G2"]


@pytest.mark.parametrize("name", sorted(SUITES))
@pytest.mark.parametrize("t", FAST)
def test_suite_passes(name, t):
    R = run_suite(name, group(t))
    assert R.ok, R.failures[:5]
    assert R.checks > 0 or t == "A1"


@pytest.mark.slow
@pytest.mark.parametrize("name", ["bruhat", "prop-w", "lemma-j-inf", "iota", "special-case", "broue-michel", "reduce"])
def test_suite_passes_d4(name):
    R = run_suite(name, group("D4"))
    assert R.ok, R.failures[:5]
