"""Benchmark families and the scaling harness.

Two formula families stress the normalizer's cost profile:

* fig6 -- a right-nested disjunction chain ``x1 | (x2 | (... | x_{n+2}))``.
  Every join except the innermost has a nested join child, so an engine
  that codes each level and re-merges child lists does quadratic work.

* fig7 -- an alternating chain of negated joins where every other level
  carries a throwaway subterm ``z = !(v | !v)`` (a fresh v each time) that
  normalizes to 0.  Only once z is known to vanish does the nesting below
  become mergeable, so no static preprocessing helps; the smallest-first
  child schedule is what keeps it quasilinear.

Both families normalize to the flat join of their x-variables.

`run_bench` times the full pipeline (translate, intern, normalize) per
size and fits a slope to the log-log (size, median time) points; slope
near 1 means quasilinear, near 2 quadratic.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .dag import Arena
from .normalize import Session, Stats
from .syntax import Formula, Not, Or, Var, formula_nodes, to_internal

__all__ = ["FAMILIES", "gen_family", "family_scale", "BenchReport", "run_bench", "fit_exponent", "report_tsv"]

FAMILIES = ("fig6", "fig7")


def gen_family(family: str, n: int) -> Formula:
    """Instance n of a benchmark family (n >= 1)."""
    if n < 1:
        raise ValueError("family scale must be >= 1")
    if family == "fig6":
        # x1 | (x2 | (... | (x_{n+1} | x_{n+2})))
        f: Formula = Or((Var(f"x{n + 1}"), Var(f"x{n + 2}")))
        for i in range(n, 0, -1):
            f = Or((Var(f"x{i}"), f))
        return f
    if family == "fig7":
        # x-level and z-level joins alternate through negations; each z is
        # a fresh !(v | !v), so nothing collapses until z is normalized.
        f = Or((Var(f"x{n + 1}"), Var(f"x{n + 2}")))
        for i in range(n, 0, -1):
            v = Var(f"v{i}")
            z = Not(Or((v, Not(v))))
            f = Or((Var(f"x{i}"), Not(Or((z, Not(f))))))
        return f
    raise ValueError(f"unknown family {family!r}")


def family_scale(family: str, target_nodes: int) -> int:
    """Scale n whose instance has roughly target_nodes surface nodes."""
    if family == "fig6":
        return max(1, (target_nodes - 3) // 2)  # nodes = 2n + 3
    if family == "fig7":
        return max(1, (target_nodes - 3) // 10)  # nodes = 10n + 3
    raise ValueError(f"unknown family {family!r}")


@dataclass
class BenchReport:
    family: str
    sizes: list[int]  # surface node counts, strictly increasing
    times_ns: list[int]  # median wall-clock per size
    stats: list[Stats]  # session counters of the last repetition per size
    fitted_exponent: float
    size_scheduling: bool = True


def fit_exponent(sizes: list[int], times_ns: list[int]) -> float:
    """Least-squares slope of log(time) against log(size)."""
    if len(sizes) < 2:
        raise ValueError("need at least two points to fit a slope")
    slope, _ = np.polyfit(np.log(np.asarray(sizes, dtype=float)), np.log(np.asarray(times_ns, dtype=float)), 1)
    return float(slope)


def run_bench(
    family: str,
    exponents: range | list[int],
    reps: int = 5,
    size_scheduling: bool = True,
) -> BenchReport:
    """Time normalization of family instances sized near 2**e for each e.

    Each size is timed `reps` times on fresh arenas; the median damps
    allocator noise.  Formula construction is not timed.
    """
    if reps < 1:
        raise ValueError("reps must be >= 1")
    exponents = list(exponents)
    if len(exponents) < 5:
        raise ValueError("need at least five sizes for a meaningful fit")
    sizes: list[int] = []
    medians: list[int] = []
    stats: list[Stats] = []
    for e in exponents:
        f = gen_family(family, family_scale(family, 2**e))
        sizes.append(formula_nodes(f))
        laps = []
        session = None
        for _ in range(reps):
            arena = Arena()
            session = Session(arena, size_scheduling=size_scheduling)
            start = time.perf_counter_ns()
            session.normalize(to_internal(f, arena))
            laps.append(time.perf_counter_ns() - start)
        medians.append(int(statistics.median(laps)))
        stats.append(session.stats)
    return BenchReport(
        family=family,
        sizes=sizes,
        times_ns=medians,
        stats=stats,
        fitted_exponent=fit_exponent(sizes, medians),
        size_scheduling=size_scheduling,
    )


def report_tsv(report: BenchReport) -> str:
    """Line-oriented machine form: size, nanoseconds, codes allocated."""
    lines = [f"# family={report.family}"]
    for size, nanos, st in zip(report.sizes, report.times_ns, report.stats):
        lines.append(f"{size}\t{nanos}\t{st.codes_allocated}")
    lines.append(f"# fitted_exponent={report.fitted_exponent:.4f}")
    return "\n".join(lines) + "\n"
