"""Timing and work-accounting harness behind ``ssdgraph bench``."""

from __future__ import annotations

import gc
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Any

from .decomp import classify, maxpss_of_any_digraph
from .enumeration import EnumStats, iter_strong_subgraphs
from .graph import Digraph, is_strongly_connected
from .work import metered

DEFAULT_OUTPUTS = 1000


@dataclass
class DelayProfile:
    """Work and wall time spent before each of the first ``outputs`` solutions.

    ``work[i]`` is the number of vertices/arcs touched between output
    ``i - 1`` and output ``i`` (output ``-1`` being the start of the run).
    """

    work: list[int]
    seconds: list[float]
    frames: int
    max_oracle_calls_per_frame: int
    peak_depth: int

    @property
    def outputs(self) -> int:
        return len(self.work)


def enumeration_delays(g: Digraph, limit: int = DEFAULT_OUTPUTS) -> DelayProfile:
    stats = EnumStats()
    work: list[int] = []
    seconds: list[float] = []
    with metered() as meter:
        last_work = 0
        last_time = time.perf_counter()
        for _ in iter_strong_subgraphs(g, stats):
            now = time.perf_counter()
            work.append(meter.count - last_work)
            seconds.append(now - last_time)
            last_work = meter.count
            if len(work) >= limit:
                break
            last_time = time.perf_counter()
    return DelayProfile(work, seconds, stats.frames, stats.max_oracle_calls_per_frame, stats.peak_depth)


def percentile(values: list[float], q: float) -> float:
    """Nearest-rank percentile; ``q`` in ``[0, 100]``."""
    if not values:
        raise ValueError("percentile of an empty sample")
    ranked = sorted(values)
    rank = max(1, math.ceil(q / 100 * len(ranked)))
    return ranked[rank - 1]


def time_decompose(g: Digraph, repetitions: int) -> list[float]:
    """Wall time of each of ``repetitions`` decompositions, with the cyclic GC paused as in timeit."""
    out = []
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        for _ in range(repetitions):
            start = time.perf_counter()
            maxpss_of_any_digraph(g)
            out.append(time.perf_counter() - start)
    finally:
        if was_enabled:
            gc.enable()
    return out


@dataclass
class RunReport:
    command: str
    input: str | None
    n: int
    m: int
    repetitions: int
    classification: str | None = None
    maxpss_count: int | None = None
    minrs_count: int | None = None
    solutions_emitted: int | None = None
    peak_depth: int | None = None
    wall_seconds: float = 0.0
    decompose_seconds: list[float] = field(default_factory=list)
    delay: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def bench(g: Digraph, repetitions: int, *, outputs: int = DEFAULT_OUTPUTS, path: str | None = None) -> RunReport:
    """Decompose ``repetitions`` times and profile the first ``outputs`` enumeration outputs.

    ``repetitions == 0`` produces a report with no measurements.
    """
    if repetitions < 0:
        raise ValueError("repetitions must be non-negative")
    report = RunReport("bench", path, g.n, g.m, repetitions)
    if repetitions == 0:
        return report
    start = time.perf_counter()
    report.decompose_seconds = time_decompose(g, repetitions)
    if g.n >= 2:
        families = maxpss_of_any_digraph(g)
        report.maxpss_count = len(families)
        report.minrs_count = len(families)
        if is_strongly_connected(g):
            report.classification = classify(g, check=False).kind.value
    profile = enumeration_delays(g, outputs)
    report.solutions_emitted = profile.outputs
    report.peak_depth = profile.peak_depth
    if profile.outputs:
        report.delay = {
            "outputs": profile.outputs,
            "work_max": max(profile.work),
            "work_p99": percentile([float(w) for w in profile.work], 99),
            "seconds_max": max(profile.seconds),
            "seconds_p99": percentile(profile.seconds, 99),
            "work_max_per_size": max(profile.work) / (g.n + g.m),
            "max_oracle_calls_per_frame": profile.max_oracle_calls_per_frame,
        }
    report.wall_seconds = time.perf_counter() - start
    return report
