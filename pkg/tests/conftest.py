import time

import pytest

from latrefl import cubic4, vinberg


@pytest.fixture(scope="session")
def setup():
    return cubic4.build_setup()


class TimedRun:
    def __init__(self, run, elapsed):
        self.run = run
        self.elapsed = elapsed


@pytest.fixture(scope="session")
def l1_run(setup):
    """The full rank-20 hyperbolic run, computed once per session."""
    t0 = time.time()
    run = vinberg.run_vinberg(setup.lam1, setup.default_v0(),
                              budget=vinberg.RUN_BUDGET)
    return TimedRun(run, time.time() - t0)
