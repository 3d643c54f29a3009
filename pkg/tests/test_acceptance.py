"""Exit criteria. Each test logs one PASS/FAIL line, collected in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

from __future__ import annotations

import json
import math
import random
import subprocess
import sys
import time
from pathlib import Path

import networkx as nx
import pytest

from kobcs import (
    IncrementalComponents,
    components,
    double_graph,
    dumps_graph,
    exact_comp_k,
    exact_weighted,
    gen_gnp,
    greedy_dissociation,
    greedy_k,
    is_independent_set,
    is_k_component_set,
    lift_solution,
    local_ratio,
    metrics,
    random_weights,
    recover_solution,
    round_to_independent_set,
    truncate_components,
)
from kobcs.harness import ExperimentSpec, GnpFamily, records_to_csv, run_experiment

from conftest import record_criterion, to_nx

KS = (1, 2, 3, 4)
PS = (0.1, 0.25, 0.5)


def suite1():
    """200 seeded G(n, p): n cycles through 1..16, p through {0.1, 0.25, 0.5}."""
    return [gen_gnp(1 + i % 16, PS[i % 3], seed=10_000 + i) for i in range(200)]


@pytest.fixture(scope="module")
def suite():
    return suite1()


@pytest.fixture(scope="module")
def suite_outputs(suite):
    """Greedy, dissociation and local-ratio outputs on the whole suite, with elapsed time."""
    start = time.perf_counter()
    out = []
    for g in suite:
        row = {"greedy": {}, "local-ratio": {}}
        for k in KS:
            row["greedy"][k] = greedy_k(g, k)
            if k >= 2:
                row["local-ratio"][k] = local_ratio(g.unit_weighted(), k).solution
        row["dissociation"] = greedy_dissociation(g)
        out.append(row)
    return out, time.perf_counter() - start


def test_1_feasibility_suite(suite, suite_outputs):
    outputs, elapsed = suite_outputs
    failures = []
    checks = 0
    for idx, (g, row) in enumerate(zip(suite, outputs)):
        for k in KS:
            s, _ = row["greedy"][k]
            checks += 1
            if not is_k_component_set(g, s, k):
                failures.append(("greedy", idx, k))
            if k >= 2:
                checks += 1
                if not is_k_component_set(g, row["local-ratio"][k], k):
                    failures.append(("local-ratio", idx, k))
        checks += 1
        if not is_k_component_set(g, row["dissociation"][0], 2):
            failures.append(("dissociation", idx, 2))
    if elapsed >= 10:
        failures.append(f"took {elapsed:.2f} s >= 10 s")
    record_criterion(1, "feasibility suite", failures, f"{checks} outputs, {elapsed:.2f} s")
    assert not failures


def test_2_greedy_trace_inequalities(suite, suite_outputs):
    outputs, _ = suite_outputs
    failures = []
    checked = 0
    for idx, (g, row) in enumerate(zip(suite, outputs)):
        n, m = g.n, g.m
        traces = [(k, *row["greedy"][k]) for k in KS] + [(2, *row["dissociation"])]
        for k, s, trace in traces:
            d = trace.d_sequence
            s1 = sum(x + 1 for x in d)
            s2 = sum(x * (x + 1) for x in d)
            # written out independently of GreedyTrace.inequalities
            ok = (
                n <= s1 <= k * n
                and s2 * n <= (2 * k - 1) * 2 * m * n
                and len(s) * ((2 * k - 1) * 2 * m + k * n) >= n * n
                and len(s) == trace.q
            )
            checked += 1
            if not ok or not all(i.holds for i in trace.inequalities()):
                failures.append((idx, k, d))
    record_criterion(2, "greedy trace inequalities", failures, f"{checked} traces")
    assert not failures


def weighted_suite():
    """100 seeded instances, n cycles through 1..12, integer weights 1..10."""
    return [
        random_weights(gen_gnp(1 + i % 12, PS[i % 3], seed=20_000 + i), seed=30_000 + i)
        for i in range(100)
    ]


def test_3_local_ratio_guarantee():
    start = time.perf_counter()
    failures = []
    runs = 0
    for idx, g in enumerate(weighted_suite()):
        delta = metrics(g).max_degree
        for k in (2, 3):
            s = local_ratio(g, k).solution
            ws = g.total_weight(s)
            opt = exact_weighted(g, k).value
            runs += 1
            if not is_k_component_set(g, s, k):
                failures.append(("infeasible", idx, k))
            # Δ = 0: the local ratio keeps every vertex, which is optimal.
            if delta == 0 and ws != opt:
                failures.append(("edgeless not optimal", idx, k))
            if delta > 0 and not ws * delta >= opt:
                failures.append((idx, k, ws, delta, opt))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        failures.append(f"took {elapsed:.2f} s >= 60 s")
    record_criterion(3, "local-ratio Δ guarantee", failures, f"{runs} runs, {elapsed:.2f} s")
    assert not failures


def connected_small_instances():
    out = []
    for n in range(1, 9):
        for p in (0.3, 0.5, 0.8):
            for seed in range(5):
                g = gen_gnp(n, p, seed=40_000 + 100 * n + seed)
                if nx.is_connected(to_nx(g)):
                    out.append(g)
    return out


def test_4_reduction_equality():
    start = time.perf_counter()
    failures = []
    instances = connected_small_instances()
    for idx, g in enumerate(instances):
        rmap = double_graph(g)
        for k in (1, 2):
            opt = exact_comp_k(g, k)
            opt2 = exact_comp_k(rmap.target, 2 * k)
            if opt2.value != 2 * opt.value:
                failures.append(("equality", idx, k, opt.value, opt2.value))
            lifted = lift_solution(rmap, opt.best_set, k)
            if not is_k_component_set(rmap.target, lifted, 2 * k):
                failures.append(("lift infeasible", idx, k))
            back = recover_solution(rmap, opt2.best_set, k)
            if not is_k_component_set(g, back, k) or len(back) < math.ceil(len(opt2.best_set) / 2):
                failures.append(("recover", idx, k))
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        failures.append(f"took {elapsed:.2f} s >= 120 s")
    record_criterion(
        4, "reduction equality", failures, f"{len(instances)} connected instances, {elapsed:.2f} s"
    )
    assert not failures


def test_5_rounding_floors(suite, suite_outputs):
    outputs, _ = suite_outputs
    failures = []
    checked = 0
    for idx, (g, row) in enumerate(zip(suite, outputs)):
        sources = [(k, row["greedy"][k][0]) for k in KS]
        sources += [(2, row["dissociation"][0])]
        sources += [(k, exact_comp_k(g, k).best_set) for k in KS]
        for k, s in sources:
            out = round_to_independent_set(g, s, k)
            checked += 1
            if not (out <= s and is_independent_set(g, out) and len(out) >= math.ceil(len(s) / k)):
                failures.append((idx, k))
    record_criterion(5, "rounding floors", failures, f"{checked} roundings")
    assert not failures


def test_6_incremental_components_equivalence():
    rng = random.Random(6)
    divergences = []
    operations = 0
    for trial in range(10_000):
        n = rng.randint(1, 10)
        g = gen_gnp(n, rng.choice(PS + (0.75,)), seed=50_000 + trial)
        k = rng.randint(1, 4)
        state = IncrementalComponents(g)
        s: set[int] = set()
        outside = list(range(n))
        rng.shuffle(outside)
        while outside:
            p = outside[rng.randrange(len(outside))]
            operations += 1
            if rng.random() < 0.5:
                order = next(len(c) for c in components(g, s | {p}) if p in c)
                if state.would_exceed(p, k) != (order >= k + 1):
                    divergences.append((trial, "query", p))
            else:
                state.add(p)
                s.add(p)
                outside.remove(p)
                if sorted(state.root_sizes().values()) != sorted(components(g, s).sizes):
                    divergences.append((trial, "insert", p))
    record_criterion(
        6, "incremental components", divergences, f"10000 interleavings, {operations} operations"
    )
    assert not divergences


GOLDEN_DIMACS = "p edge 8 7\ne 1 4\ne 2 5\ne 3 7\ne 4 5\ne 4 6\ne 4 8\ne 7 8\n"


def golden_artifacts() -> dict[str, str]:
    g = gen_gnp(8, 0.3, seed=1)
    out = {"graph": dumps_graph(g)}
    for k in KS:
        s, trace = greedy_k(g, k)
        out[f"greedy-{k}"] = f"{sorted(s)} {trace.d_sequence} {sorted(trace.discarded)}"
    s, trace = greedy_dissociation(g)
    out["dissociation"] = f"{sorted(s)} {trace.d_sequence} {trace.report()}"
    out["local-ratio"] = str(sorted(local_ratio(g.unit_weighted(), 2).solution))
    out["oracle"] = str(sorted(exact_comp_k(g, 2).best_set))
    spec = ExperimentSpec(
        ks=(1, 2, 3), algorithms=("greedy", "dissociation", "local-ratio", "oracle"),
        gnp=GnpFamily(8, 0.3, 5, 1),
    )
    out["csv"] = records_to_csv(run_experiment(spec))
    return out


def test_7_golden_determinism():
    failures = []
    first = golden_artifacts()
    second = golden_artifacts()
    failures += [f"in-process {key}" for key in first if first[key] != second[key]]
    if first["graph"] != GOLDEN_DIMACS:
        failures.append("serialization differs from the frozen golden file")
    if first["greedy-2"] != "[0, 1, 2, 4, 5, 6] [1, 1, 1, 1, 0, 1] [3, 7]":
        failures.append(f"greedy k=2 golden: {first['greedy-2']}")
    script = (
        f"import sys, json; sys.path.insert(0, {str(Path(__file__).parent)!r}); "
        "import test_acceptance as t; print(json.dumps(t.golden_artifacts()))"
    )
    proc = subprocess.run([sys.executable, "-c", script], capture_output=True, text=True, check=True)
    third = json.loads(proc.stdout)
    failures += [f"cross-process {key}" for key in first if first[key] != third[key]]
    record_criterion(7, "golden determinism", failures, f"{len(first)} artifacts x 3 runs")
    assert not failures


def test_8_truncation_bound(suite, suite_outputs):
    outputs, _ = suite_outputs
    failures = []
    for idx, (g, row) in enumerate(zip(suite, outputs)):
        s, _ = row["greedy"][3]
        out = truncate_components(g, s, 3, 2)
        if not is_k_component_set(g, out, 2) or not len(out) * 2 >= len(s) * (4 - 3):
            failures.append((idx, len(s), len(out)))
    record_criterion(8, "truncation bound", failures, f"{len(outputs)} greedy k=3 outputs")
    assert not failures
