"""Exhaustive verification over all labelled graphs of a given order."""

from __future__ import annotations

import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from .formats import to_graph6
from .oracles import check_enumeration_order, count_labeled, enumerate_labeled
from .spectral import graph_spectrum
from .verify import EQUALITY_TOL, SLACK_TOL, find_violations, full_report


class SweepError(RuntimeError):
    """A report raised while sweeping; ``graph6`` names the offending graph."""

    def __init__(self, graph6: str, cause: BaseException):
        self.graph6 = graph6
        super().__init__(f"sweep failed on graph {graph6}: {cause}")


@dataclass(frozen=True)
class SweepSummary:
    n: int
    graphs_checked: int
    violations: int
    min_strict_gap: Optional[float]  # None when every graph is an equality case
    equality_count: int
    equality_all_certified: bool
    failures: tuple[str, ...] = field(default=(), compare=False)

    def as_flat_dict(self) -> dict:
        return {
            "n": self.n,
            "graphs_checked": self.graphs_checked,
            "violations": self.violations,
            "min_strict_gap": self.min_strict_gap,
            "equality_count": self.equality_count,
            "equality_all_certified": self.equality_all_certified,
        }

    def to_json(self) -> str:
        from .serialize import dumps_flat
        return dumps_flat(self.as_flat_dict())

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.equality_all_certified


def _merge(a: SweepSummary, b: SweepSummary) -> SweepSummary:
    gaps = [x for x in (a.min_strict_gap, b.min_strict_gap) if x is not None]
    return SweepSummary(
        n=a.n,
        graphs_checked=a.graphs_checked + b.graphs_checked,
        violations=a.violations + b.violations,
        min_strict_gap=min(gaps) if gaps else None,
        equality_count=a.equality_count + b.equality_count,
        equality_all_certified=a.equality_all_certified and b.equality_all_certified,
        failures=a.failures + b.failures,
    )


def _sweep_range(n: int, start: int, stop: int, slack: float, eq_tol: float,
                 on_violation: Callable[[str], None] | None = None) -> SweepSummary:
    checked = bad = eq_count = 0
    certified = True
    min_gap = None
    failures = []
    for g in enumerate_labeled(n, start, stop):
        try:
            d = graph_spectrum(g)
            rep = full_report(g, slack, eq_tol, spectrum=d)
            msgs = find_violations(g, slack, eq_tol, report=rep, spectrum=d)
        except Exception as exc:
            raise SweepError(to_graph6(g), exc) from exc
        checked += 1
        if msgs:
            bad += 1
            failures.extend(msgs)
            if on_violation is not None:
                for msg in msgs:
                    on_violation(msg)
        if rep.numeric_equality:
            eq_count += 1
            certified = certified and rep.structural_equality
        if not rep.structural_equality and (min_gap is None or rep.gap < min_gap):
            min_gap = rep.gap
    return SweepSummary(n, checked, bad, min_gap, eq_count, certified, tuple(failures))


def _chunk_worker(args):
    return _sweep_range(*args)


def sweep(n: int, tol_pair: tuple[float, float] = (SLACK_TOL, EQUALITY_TOL), jobs: int = 1,
          on_violation: Callable[[str], None] | None = None) -> SweepSummary:
    """Run every check on all ``2^(n(n-1)/2)`` labelled graphs on ``n`` vertices.

    With ``jobs > 1`` the mask range is split into chunks handled by worker
    processes; the reduction (sums, minima, conjunctions) makes the summary
    independent of scheduling. Violations found by workers are reported via
    ``on_violation`` only after their chunk completes.
    """
    slack, eq_tol = tol_pair
    if not (slack > 0 and eq_tol > 0):
        raise ValueError("tolerances must be positive")
    check_enumeration_order(n)
    total = count_labeled(n)
    if jobs <= 1 or total < 1024:
        return _sweep_range(n, 0, total, slack, eq_tol, on_violation)
    nchunks = jobs * 4
    bounds = [total * i // nchunks for i in range(nchunks + 1)]
    tasks = [(n, lo, hi, slack, eq_tol) for lo, hi in zip(bounds, bounds[1:])]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_chunk_worker, tasks))
    summary = parts[0]
    for part in parts[1:]:
        summary = _merge(summary, part)
    if on_violation is not None:
        for msg in summary.failures:
            on_violation(msg)
    return summary


def print_violation(msg: str) -> None:
    print(msg, file=sys.stderr)
