"""Experiment sweeps that certify the approximation guarantees on concrete instances.

A sweep produces one :class:`RunRecord` per (instance, k, algorithm). Each
record carries the bound the algorithm is proven to meet and whether it was
met, decided in exact rational arithmetic. Records are written to CSV in a
fixed column order so that a sweep is reproducible byte for byte.
"""

from __future__ import annotations

import csv
import io
import os
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import BoundViolation, ConfigurationError, DomainError, SizeGuardError
from .exact import DEFAULT_LIMIT, exact_comp_k, exact_weighted
from .feasibility import components
from .graph import Graph, gen_gnp, metrics, random_weights, read_graph
from .greedy import greedy_dissociation, greedy_k
from .local_ratio import local_ratio_k_obcs

ALGORITHMS = ("greedy", "dissociation", "local-ratio", "oracle")
WORKERS_ENV = "KOBCS_WORKERS"


class OracleGuardError(ConfigurationError, SizeGuardError):
    """The oracle was requested for an instance above the size guard."""


@dataclass(frozen=True)
class GnpFamily:
    n: int
    p: float
    count: int
    seed: int


@dataclass(frozen=True)
class ExperimentSpec:
    """What to run.

    ``gnp`` and ``files`` may both be given; generated instances come first.
    With ``weighted`` every instance gets integer weights in 1..10 (files keep
    their own weights if they have any). The oracle, when enabled, supplies
    the optimum each ratio is measured against and refuses instances with
    more than ``guard`` vertices.
    """

    ks: tuple[int, ...] = (2,)
    algorithms: tuple[str, ...] = ("greedy", "local-ratio", "oracle")
    gnp: GnpFamily | None = None
    files: tuple[str, ...] = ()
    file_format: str = "dimacs"
    seed: int = 0
    weighted: bool = False
    oracle: bool = True
    guard: int = DEFAULT_LIMIT
    output: str | None = None
    include_timing: bool = False

    def validate(self) -> None:
        if not self.algorithms:
            raise ConfigurationError("no algorithms requested")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ConfigurationError(f"unknown algorithms {unknown}; choose from {ALGORITHMS}")
        if not self.ks or any(k < 1 for k in self.ks):
            raise ConfigurationError(f"k values must be positive integers, got {self.ks}")
        if self.gnp is None and not self.files:
            raise ConfigurationError("no instances: give a G(n,p) family or graph files")
        if self.gnp is not None:
            if self.gnp.count < 0 or self.gnp.n < 0 or not 0 <= self.gnp.p <= 1:
                raise ConfigurationError(f"invalid G(n,p) family {self.gnp}")

    @property
    def uses_oracle(self) -> bool:
        return self.oracle or "oracle" in self.algorithms


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph


@dataclass
class RunRecord:
    instance: str
    n: int
    m: int
    max_degree: int
    avg_degree: str
    avg_degree_decimal: str
    k: int
    algorithm: str
    objective: str
    value: str
    oracle_value: str
    ratio: str
    bound: str
    certified: bool
    bound_ok: bool
    solution: str
    time_s: float = field(default=0.0, compare=False)


CSV_COLUMNS = [f.name for f in fields(RunRecord)]


def build_instances(spec: ExperimentSpec) -> list[Instance]:
    instances = []
    if spec.gnp is not None:
        fam = spec.gnp
        seeds = np.random.default_rng(fam.seed).integers(0, 2**63 - 1, size=(fam.count, 2))
        for j, (gseed, wseed) in enumerate(seeds.tolist()):
            g = gen_gnp(fam.n, fam.p, gseed)
            if spec.weighted:
                g = random_weights(g, wseed)
            instances.append(Instance(f"gnp-n{fam.n}-p{fam.p:g}-s{fam.seed}-{j:03d}", g))
    wrng = np.random.default_rng(spec.seed)
    for path in spec.files:
        g = read_graph(path, spec.file_format)
        if spec.weighted and not g.is_weighted:
            g = random_weights(g, int(wrng.integers(0, 2**63 - 1)))
        instances.append(Instance(Path(path).stem, g))
    return instances


def _fmt(x: float | Fraction) -> str:
    if isinstance(x, Fraction):
        return str(x)
    return str(int(x)) if float(x).is_integer() else repr(float(x))


def _supports(algorithm: str, k: int) -> bool:
    if algorithm == "dissociation":
        return k == 2
    if algorithm == "local-ratio":
        return k >= 2
    return True


def _run_instance(inst: Instance, spec: ExperimentSpec) -> list[RunRecord]:
    g = inst.graph
    gm = metrics(g)
    weighted_obj = spec.weighted or g.is_weighted
    records = []
    for k in spec.ks:
        size_opt: float | None = None
        weight_opt: float | None = None
        if spec.uses_oracle:
            size_opt = exact_comp_k(g, k, limit=spec.guard).value
            weight_opt = exact_weighted(g, k, limit=spec.guard).value if weighted_obj else size_opt
        for algo in spec.algorithms:
            if not _supports(algo, k):
                continue
            start = time.perf_counter()
            if algo == "greedy":
                s, trace = greedy_k(g, k)
                trace.check()
            elif algo == "dissociation":
                s, trace = greedy_dissociation(g)
                trace.check()
            elif algo == "local-ratio":
                s = local_ratio_k_obcs(g if g.is_weighted else g.unit_weighted(), k)
            else:
                res = exact_weighted(g, k, spec.guard) if weighted_obj else exact_comp_k(g, k, spec.guard)
                s = res.best_set
            elapsed = time.perf_counter() - start
            records.append(_record(inst, gm, k, algo, s, size_opt, weight_opt, weighted_obj, elapsed))
    return records


def _record(inst, gm, k, algo, s, size_opt, weight_opt, weighted_obj, elapsed) -> RunRecord:
    g = inst.graph
    n, m = gm.n, gm.m
    feasible = components(g, s).largest <= k
    by_weight = algo == "local-ratio" or (algo == "oracle" and weighted_obj)
    value = Fraction(g.total_weight(s)) if by_weight else Fraction(len(s))
    opt = weight_opt if by_weight else size_opt
    opt_frac = None if opt is None else Fraction(opt)

    certified = False
    ok = feasible
    if algo in ("greedy", "dissociation"):
        factor = Fraction((2 * k - 1) * 2 * m + k * n, n) if n else Fraction(k)
        # |S| >= n / factor holds without an optimum, and implies OPT/|S| <= factor.
        ok = ok and len(s) * factor >= n
        certified = True
        if opt_frac is not None:
            ok = ok and opt_frac <= factor * value
    elif algo == "local-ratio":
        factor = Fraction(max(gm.max_degree, 1))
        if opt_frac is not None:
            certified = True
            ok = ok and opt_frac <= factor * value
    else:
        factor = Fraction(1)
        certified = True
    if opt_frac is None:
        ratio = ""
    elif value == 0:
        ratio = "1" if opt_frac == 0 else "inf"
    else:
        ratio = f"{float(opt_frac / value):.6f}"

    return RunRecord(
        instance=inst.name,
        n=n,
        m=m,
        max_degree=gm.max_degree,
        avg_degree=gm.avg_degree_str(),
        avg_degree_decimal=f"{float(gm.avg_degree):.6f}",
        k=k,
        algorithm=algo,
        objective="weight" if by_weight else "size",
        value=_fmt(value if value.denominator != 1 else int(value)),
        oracle_value="" if opt is None else _fmt(opt),
        ratio=ratio,
        bound=_fmt(factor),
        certified=certified,
        bound_ok=bool(ok),
        solution=" ".join(str(v + 1) for v in sorted(s)),
        time_s=elapsed,
    )


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigurationError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


def run_experiment(spec: ExperimentSpec, workers: int | None = None) -> list[RunRecord]:
    """Run every (instance, k, algorithm) combination of ``spec``.

    Combinations an algorithm does not support (dissociation with k != 2,
    local ratio with k = 1) are skipped. If ``spec.output`` is set the CSV
    report is written there. Raises BoundViolation after writing the report
    if any record misses its bound.
    """
    spec.validate()
    instances = build_instances(spec)
    if spec.uses_oracle:
        too_big = [i.name for i in instances if i.graph.n > spec.guard]
        if too_big:
            raise OracleGuardError(
                f"oracle requested but {len(too_big)} instance(s) exceed the guard of "
                f"{spec.guard} vertices: {too_big[:3]}"
            )
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_instance, instances, [spec] * len(instances)))
    else:
        chunks = [_run_instance(inst, spec) for inst in instances]
    records = [r for chunk in chunks for r in chunk]

    if spec.output:
        with open(spec.output, "w", encoding="utf-8", newline="") as fp:
            fp.write(records_to_csv(records, spec.include_timing))
    failed = [r for r in records if not r.bound_ok]
    if failed:
        r = failed[0]
        exc = BoundViolation(
            f"{len(failed)} record(s) missed their bound, first: {r.instance} k={r.k} {r.algorithm}"
        )
        exc.records = records
        raise exc
    return records


def records_to_csv(records: Sequence[RunRecord], include_timing: bool = False) -> str:
    """CSV text with the fixed column order; wall time only on request (it is never reproducible)."""
    columns = CSV_COLUMNS if include_timing else [c for c in CSV_COLUMNS if c != "time_s"]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for r in records:
        row = asdict(r)
        if include_timing:
            row["time_s"] = f"{r.time_s:.6f}"
        writer.writerow(row)
    return buf.getvalue()


def summarize(records: Sequence[RunRecord]) -> str:
    """Per (algorithm, k): runs, largest observed ratio, and the smallest gap to the bound."""
    groups: dict[tuple[str, int], list[RunRecord]] = {}
    for r in records:
        groups.setdefault((r.algorithm, r.k), []).append(r)
    lines = [f"{'algorithm':<13} {'k':>2} {'runs':>5} {'max ratio':>10} {'min margin':>11} {'ok':>4}"]
    for (algo, k), rs in sorted(groups.items()):
        ratios = [float(r.ratio) for r in rs if r.ratio not in ("", "inf")]
        margins = [float(Fraction(r.bound)) - float(r.ratio) for r in rs if r.ratio not in ("", "inf")]
        max_ratio = f"{max(ratios):.4f}" if ratios else "-"
        min_margin = f"{min(margins):.4f}" if margins else "-"
        ok = sum(r.bound_ok for r in rs)
        lines.append(f"{algo:<13} {k:>2} {len(rs):>5} {max_ratio:>10} {min_margin:>11} {ok:>4}")
    return "\n".join(lines)


@dataclass(frozen=True)
class VerifyReport:
    k: int
    sizes: list[int]
    feasible: bool

    def __str__(self) -> str:
        sizes = " ".join(map(str, sorted(self.sizes, reverse=True))) or "-"
        verdict = "feasible" if self.feasible else "infeasible"
        return f"components: {len(self.sizes)}\nsizes: {sizes}\nk={self.k}: {verdict}"


def verify(g: Graph, s, k: int) -> VerifyReport:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    part = components(g, s)
    return VerifyReport(k, part.sizes, part.largest <= k)
