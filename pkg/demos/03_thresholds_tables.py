# Thresholds for the Dirichlet case q = 100 and the level 1 weight 12 newform,
# checked against the published tables.
from tauli import catalog_dirichlet, catalog_newform, constant_bundle
from tauli import theorem1_N, theorem2, theorem3_N
from tauli.tables import reproduce

model = catalog_dirichlet(100)
print(constant_bundle(model, 1.0).as_dict())

# R is passed as text so that 1.0001 means exactly 1.0001.
rep = theorem1_N(model, 1.0, "1.1")
print("N =", rep.N, "grid max =", rep.grid_max, "grid points =", len(rep.grid), "binding:", rep.binding)
print("detector N =", theorem3_N(model, 1.0, "1.1").N)

# The interval [n0, n1] from the direct scan, and why the closed form is empty here.
print(theorem2(model, 100, 1.0, "1.0001", direct=True).interval)
closed = theorem2(model, 100, 1.0, "1.0001")
print("closed form admissible:", closed.admissible, "-", closed.reason)

newform = catalog_newform()[0]
print("newform detector N at R = 1 + 1e-10:", theorem3_N(newform, 1.0, "1.0000000001").N)

for which in (1, 2, 3):
    rows = reproduce(which)
    print(f"table {which}: {sum(r.ok for r in rows)}/{len(rows)} rows match")
