# Truncated tau-Li coefficients over a finite zero list.
# Each zero rho is sent to w = rho/(rho - tau); the coefficient is the sum of
# 1 - w^n.  Zeros on Re = tau/2 land on the unit circle, so their terms stay
# bounded, while a zero to the right of the line gives |w| > 1 and a term
# that grows like |w|^n.
from tauli import ZeroSet, li_partial, mobius_map
from tauli.zero_model import catalog_dirichlet, synthesize_zeros

tau = 1.0
on_line = ZeroSet((0.5 + 14.134725j, 0.5 - 14.134725j), tau)
for n in (1, 2, 5, 10, 50):
    print(f"n={n:3d}  lambda={li_partial(on_line, n).real: .10f}")

# One zero nudged off the line.
rho = 0.52 + 3.0j
print("modulus of the image:", mobius_map(rho, tau).modulus)
off = ZeroSet(on_line.zeros + (rho, rho.conjugate()), tau)
for n in (10, 100, 1000, 5000):
    print(f"n={n:5d}  lambda={li_partial(off, n).real: .6g}")

# A synthetic zero set that respects the zero-count envelopes for q = 100.
model = catalog_dirichlet(100)
zs = synthesize_zeros(model, 200.0, 0.0, 2.0, tau, seed=1)
print(len(zs), "synthetic zeros up to height 200")
print("lambda(1..5):", [round(li_partial(zs, n).real, 6) for n in range(1, 6)])
