# Lambert W on its two real branches.
# Both branches meet at x = -1/e where W = -1; the thresholds below use
# W_0 for the upper endpoint of an interval and W_-1 for the lower one.
import math

import numpy as np

from tauli import lambert_w0, lambert_wm1
from tauli.special_functions import BRANCH_POINT

print("branch point", BRANCH_POINT, "->", lambert_w0(BRANCH_POINT), lambert_wm1(BRANCH_POINT))

# Walk from the branch point towards 0 along both branches.
for x in [-0.36, -0.3, -0.1, -0.01, -1e-5]:
    w0, wm = lambert_w0(x), lambert_wm1(x)
    print(f"x={x:>9}  W0={w0: .12f}  W-1={wm: .12f}")

# The principal branch grows like log x - log log x.
print("W0(e) =", lambert_w0(math.e))
for x in [1e3, 1e10, 1e100]:
    w = lambert_w0(x)
    print(f"x={x:.3g}  W0={w:.12f}  log x - log log x = {math.log(x) - math.log(math.log(x)):.6f}")

# Residual check on a random sample.
rng = np.random.default_rng(0)
xs = 10.0 ** rng.uniform(-5, 5, 1000)
res = max(abs(lambert_w0(x) * math.exp(lambert_w0(x)) - x) / max(1, x) for x in xs)
print("worst scaled residual over 1000 points:", res)
