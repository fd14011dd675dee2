"""Exhaustive check that every rule's expansion evaluates to the product it claims."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .harness import RULES, SUPER_RULES, RuleSelector, expand, lhs_product, render_poly
from .partitions import partitions_up_to

# hook and spo instances are capped separately (they carry y-variables)
SUPER_CAPS = {"max_partition_size": 5, "max_n": 2, "max_r": 4}


@dataclass(frozen=True)
class SweepConfig:
    max_partition_size: int = 6
    max_n: int = 3
    max_m: int = 2
    max_r: int = 6
    rules: tuple[str, ...] = ("classical", "hook", "sp", "oo", "oe", "spo")
    parallelism: Optional[int] = None
    super_caps: dict = field(default_factory=lambda: dict(SUPER_CAPS))

    def __post_init__(self):
        for name in ("max_partition_size", "max_n", "max_m", "max_r"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        unknown = set(self.rules) - set(RULES)
        if unknown:
            raise ValueError(f"unknown rules: {sorted(unknown)}")

    def bound(self, name: str, rule: str) -> int:
        value = getattr(self, name)
        if rule in SUPER_RULES and name in self.super_caps:
            return min(value, self.super_caps[name])
        return value


def instances(config: SweepConfig) -> Iterator[RuleSelector]:
    for rule in config.rules:
        size = config.bound("max_partition_size", rule)
        max_r = config.bound("max_r", rule)
        for n in range(1, config.bound("max_n", rule) + 1):
            ms = range(1, config.max_m + 1) if rule in SUPER_RULES else [None]
            for m in ms:
                for r in range(1, max_r + 1):
                    # hook rule holds for every shape; the others need at most n rows
                    for mu in partitions_up_to(size, None if rule == "hook" else n):
                        yield RuleSelector(rule, mu, r, n, m)


@dataclass(frozen=True)
class InstanceResult:
    selector: RuleSelector
    ok: bool
    detail: Optional[dict] = None


def check_instance(sel: RuleSelector) -> InstanceResult:
    lhs = lhs_product(sel)
    rhs = expand(sel).evaluate()
    if lhs == rhs:
        return InstanceResult(sel, True)
    return InstanceResult(sel, False, failure_record(sel, lhs, rhs))


def failure_record(sel: RuleSelector, lhs, rhs) -> dict:
    return {
        "rule": sel.rule,
        "n": sel.n,
        "m": sel.m,
        "r": sel.r,
        "mu": list(sel.mu),
        "lhs": render_poly(lhs, "text"),
        "rhs": render_poly(rhs, "text"),
        "difference": render_poly(lhs - rhs, "text"),
    }


@dataclass
class SweepReport:
    total: int = 0
    passed: int = 0
    failed: int = 0
    per_rule: dict = field(default_factory=dict)
    first_failure: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        lines = [f"{rule}: {c['passed']}/{c['total']} passed" for rule, c in self.per_rule.items()]
        lines.append(f"total: {self.passed}/{self.total} passed, {self.failed} failed")
        return "\n".join(lines)


def run_sweep(config: SweepConfig) -> SweepReport:
    todo = list(instances(config))
    jobs = config.parallelism or os.cpu_count() or 1
    if jobs <= 1 or len(todo) < 2:
        results = map(check_instance, todo)
    else:
        pool = ProcessPoolExecutor(max_workers=jobs)
        results = pool.map(check_instance, todo, chunksize=max(1, len(todo) // (8 * jobs)))
    report = SweepReport()
    try:
        for res in results:
            rule = res.selector.rule
            counts = report.per_rule.setdefault(rule, {"total": 0, "passed": 0})
            counts["total"] += 1
            report.total += 1
            if res.ok:
                counts["passed"] += 1
                report.passed += 1
            else:
                report.failed += 1
                if report.first_failure is None:
                    report.first_failure = res.detail
    finally:
        if jobs > 1 and len(todo) >= 2:
            pool.shutdown()
    return report
