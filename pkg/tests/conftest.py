import math

import pytest
from hypothesis import settings

from tauli.zero_model import catalog_dirichlet, catalog_newform

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def dirichlet100():
    return catalog_dirichlet(100)


@pytest.fixture(scope="session")
def newform():
    return catalog_newform()[0]


def bisect_w(x, lo, hi, iters=200):
    """Solve w e^w = x on [lo, hi] by bisection (w e^w monotone there)."""
    f = lambda w: w * math.exp(w) - x
    flo = f(lo)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
        if hi - lo <= 1e-16 * max(1.0, abs(mid)):
            break
    return 0.5 * (lo + hi)
