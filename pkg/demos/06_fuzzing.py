"""Falsification sweep: throw random ideals at the main identity."""

from monolc import FieldSpec, format_ideal, random_ideal, verify_main_theorem

field = FieldSpec.gf(32003)
failures = 0
comparisons = 0
for seed in range(25):
    ideal = random_ideal(n=3, max_exp=3, max_gens=4, seed=1000 + seed)
    report = verify_main_theorem(ideal, field)
    comparisons += sum(c.indices_checked for c in report.checks)
    if not report.passed:
        failures += 1
        print(f"seed {1000 + seed}: FAIL")
        print(format_ideal(ideal))

print(f"25 ideals, {comparisons} comparisons over {field}: {failures} failures")
assert failures == 0
