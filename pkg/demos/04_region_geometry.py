# The set |rho/(rho - tau)| >= R is a disk; inside the strip it is a lens
# hugging Re = tau.  Compare it with the classical zero-free curves for q = 100.
import numpy as np

from tauli.regions import boundary_curve, classify, comparison_curves, region, write_curve_csv

for R in ("1.1", "1.01", "1.001"):
    c = region(1.0, R)
    print(f"R={R:6s} centre={c.center:.6f} radius={c.radius:.6f} leftmost Re={c.strip_re_min:.9f} height<={c.strip_height_bound:.6f}")

# Sample the strip and count points in the region by both tests.
rng = np.random.default_rng(3)
c = region(1.0, "1.1")
pts = rng.uniform(0, 1, 5000) + 1j * rng.uniform(-3, 3, 5000)
by_modulus = sum(classify(p, 1.0, "1.1").value == "inside_region" for p in pts)
by_disk = sum(c.contains(p).value == "inside_region" for p in pts)
print("inside by modulus:", by_modulus, "inside by disk:", by_disk)

curve = boundary_curve(1.0, "1.1", samples=5)
print("boundary:", [(round(a, 6), round(b, 6)) for a, b in curve])

rows = comparison_curves(100, 1.0, ["1.01"], samples=5)
print(write_curve_csv(rows))
