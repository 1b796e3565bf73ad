"""Every named corpus scenario passes in full."""

import pytest

from hopfcyc.corpus import SCENARIOS, run_scenario


@pytest.mark.parametrize("name", sorted(SCENARIOS))
def test_scenario(name):
    checks = run_scenario(name)
    assert checks, "scenario %s produced no checks" % name
    failures = [c for c in checks if not c.passed]
    assert not failures, "\n".join(c.describe() for c in failures)
