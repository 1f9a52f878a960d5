"""Brute-force cross-validation: enumerate attained values on coefficient
boxes, check them against the classifier, re-derive the smallest nontrivial
value, and replay the whole construction-identity catalog.

Enumeration is embarrassingly parallel over contiguous index shards; shards
share nothing and merge by set union, so results are independent of the
shard count and of worker scheduling.
"""
from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .classifier import lind_lehmer_constant, member
from .enumkernel import attained_block, family_value, kernel_plan
from .errors import BudgetExceeded, Inconclusive
from .groups import GroupSpec
from .measures import measure_for_spec
from .names import render_name
from .witness import achieve, catalog

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class EnumerationJob:
    spec: GroupSpec
    radius: int
    value_bound: int
    shards: int = 1
    budget: int = DEFAULT_BUDGET

    @property
    def total_vectors(self) -> int:
        return (2 * self.radius + 1) ** self.spec.order

    def check_budget(self) -> None:
        if self.total_vectors > self.budget:
            raise BudgetExceeded(
                f"{self.total_vectors} vectors exceed the budget {self.budget}"
            )


@dataclass
class VerificationReport:
    spec: GroupSpec
    attained: list[int] = field(default_factory=list)
    soundness_violations: list[tuple] = field(default_factory=list)
    completeness_misses: list[int] = field(default_factory=list)
    lambda_observed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.soundness_violations and not self.completeness_misses

    def to_json(self) -> str:
        return json.dumps(
            {
                "group": render_name(self.spec),
                "attained_count": len(self.attained),
                "attained_window_min": min(self.attained) if self.attained else None,
                "attained_window_max": max(self.attained) if self.attained else None,
                "soundness_violations": [list(map(str, v)) for v in self.soundness_violations],
                "completeness_misses": [str(v) for v in self.completeness_misses],
                "lambda_observed": self.lambda_observed,
            }
        )


def _shard_args(job: EnumerationJob):
    total = job.total_vectors
    count = max(1, job.shards)
    cuts = [total * i // count for i in range(count + 1)]
    return [
        (job.spec, job.radius, job.value_bound, cuts[i], cuts[i + 1])
        for i in range(count)
        if cuts[i] < cuts[i + 1]
    ]


def _run_shard(args):
    return attained_block(*args)


def enumerate_window(job: EnumerationJob, jobs: int | None = None) -> list[int]:
    """Sorted attained determinant values within [-B, B] on the box."""
    job.check_budget()
    shard_args = _shard_args(job)
    out: set[int] = set()
    if jobs is None:
        jobs = 1
    if jobs > 1 and len(shard_args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_shard, shard_args):
                out |= part
    else:
        for args in shard_args:
            out |= _run_shard(args)
    return sorted(out)


def soundness_check(job: EnumerationJob, jobs: int | None = None) -> VerificationReport:
    """Every attained value must satisfy the membership predicate."""
    report = VerificationReport(job.spec)
    report.attained = enumerate_window(job, jobs=jobs)
    for v in report.attained:
        cert = member(job.spec, v)
        if not cert.verdict:
            report.soundness_violations.append((v, cert.branch))
    nontrivial = [abs(v) for v in report.attained if abs(v) >= 2]
    report.lambda_observed = min(nontrivial) if nontrivial else None
    return report


def completeness_check(spec: GroupSpec, bound: int) -> VerificationReport:
    """Every accepted value in the window must receive a verified witness."""
    report = VerificationReport(spec)
    for v in range(-bound, bound + 1):
        if not member(spec, v).verdict:
            continue
        report.attained.append(v)
        try:
            w = achieve(spec, v)
        except Exception:
            report.completeness_misses.append(v)
            continue
        if w.value != v:
            report.completeness_misses.append(v)
    return report


def lambda_search(job: EnumerationJob, jobs: int | None = None) -> int:
    """Smallest attained |v| >= 2; must agree with the classifier."""
    report = soundness_check(job, jobs=jobs)
    expected = lind_lehmer_constant(job.spec)
    if report.lambda_observed is None or report.lambda_observed != expected:
        raise Inconclusive(
            f"enumeration at radius {job.radius} saw {report.lambda_observed}, "
            f"classifier says {expected}; radius too small"
        )
    return report.lambda_observed


def identity_suite(spec: GroupSpec | None = None, span: int = 5):
    """Replay every construction identity over parameters in [-span, span].

    Returns a list of (group name, identity, checked count, ok flag).
    """
    from .classifier import catalog_specs

    specs = [spec] if spec is not None else [
        s for s in catalog_specs() if s.order > 1
    ]
    results = []
    rng = range(-span, span + 1)
    for s in specs:
        plan = kernel_plan(s)
        if plan is not None:
            evaluate = lambda vec, plan=plan: family_value(plan, vec)
        else:
            evaluate = lambda vec, s=s: measure_for_spec(s, vec)
        for ident in catalog(s):
            checked, ok = 0, True
            for params in itertools.product(rng, repeat=ident.arity):
                checked += 1
                got = evaluate(ident.template(*params))
                if got != ident.claimed(*params):
                    ok = False
                    break
            results.append((render_name(s), ident.ident, checked, ok))
    return results


def default_jobs() -> int:
    return os.cpu_count() or 1
