"""
A reproducible benchmark sweep
==============================

The harness runs every algorithm on a seeded G(n, p) family, compares against
the exact optimum and marks whether each proven bound held. The CSV has no
timing column by default, so two runs give identical bytes.
"""

from kobcs.harness import ExperimentSpec, GnpFamily, records_to_csv, run_experiment, summarize

spec = ExperimentSpec(
    ks=(1, 2, 3),
    algorithms=("greedy", "dissociation", "local-ratio", "oracle"),
    gnp=GnpFamily(n=12, p=0.3, count=8, seed=2024),
    weighted=True,
)
records = run_experiment(spec)
print(summarize(records))
print(records_to_csv(records).splitlines()[1])
assert records_to_csv(records) == records_to_csv(run_experiment(spec))
