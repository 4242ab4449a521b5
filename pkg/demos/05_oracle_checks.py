# Brute-force checks at toy scale.  The real thresholds are far beyond any
# finite zero list, so a small model with N below 150 is used instead.
import numpy as np

from tauli.oracle import (
    detector_check,
    detector_configuration,
    min20_witness,
    random_min20_instance,
    run_suite,
    toy_model,
)

rng = np.random.default_rng(5)
print([min20_witness(random_min20_instance(rng)) for _ in range(5)])

model = toy_model()
for present in (False, True):
    zs = detector_configuration(model, 1.0, 2.0, present, seed=2)
    v = detector_check(zs, model, 2.0)
    print(f"off-line zero {present!s:5}: tripped at n={v.witness}, |Re lambda|={v.lhs:.4g}, threshold={v.rhs:.4g}, ok={v.passed}")

for name in ("min20", "tail", "lambda1"):
    verdicts = run_suite(name, trials=20, seed=1)
    print(name, sum(v.passed for v in verdicts), "/", len(verdicts))
