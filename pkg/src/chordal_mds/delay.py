"""Delay profiling for the enumerator.

A polynomial-delay enumerator bounds the time before the first output,
between consecutive outputs, and after the last one.  profile_delays runs
the enumeration under a monotonic clock with the garbage collector paused
and reports all of those gaps.
"""

from __future__ import annotations

import gc
import statistics
import time
from dataclasses import dataclass
from typing import Optional

from .graph import Graph
from .enumeration import iter_minimal_dominating_sets


@dataclass(frozen=True)
class DelayProfile:
    """Timing of one enumeration: `gaps` holds outputs + 1 durations in
    nanoseconds — the preprocessing gap, the inter-output gaps, and the
    post-last gap."""

    outputs: int
    gaps: tuple

    def __post_init__(self):
        if len(self.gaps) != self.outputs + 1:
            raise ValueError("gap count must be output count + 1")

    @property
    def pre_gap_ns(self) -> int:
        return self.gaps[0]

    @property
    def post_gap_ns(self) -> int:
        return self.gaps[-1]

    @property
    def inter_gaps(self) -> tuple:
        return self.gaps[1:-1]

    def _summarized(self) -> tuple:
        # the pre/post gaps are reported on their own; the aggregate
        # statistics describe the spacing between consecutive outputs
        return self.inter_gaps or self.gaps

    @property
    def max_gap_ns(self) -> int:
        return max(self._summarized())

    @property
    def median_gap_ns(self) -> float:
        return statistics.median(self._summarized())

    @property
    def p95_gap_ns(self) -> float:
        ordered = sorted(self._summarized())
        if len(ordered) == 1:
            return float(ordered[0])
        rank = 0.95 * (len(ordered) - 1)
        lo = int(rank)
        hi = min(lo + 1, len(ordered) - 1)
        return ordered[lo] + (rank - lo) * (ordered[hi] - ordered[lo])

    def summary(self) -> dict:
        return {
            "outputs": self.outputs,
            "max_gap_ns": self.max_gap_ns,
            "median_gap_ns": self.median_gap_ns,
            "p95_gap_ns": self.p95_gap_ns,
            "pre_gap_ns": self.pre_gap_ns,
            "post_gap_ns": self.post_gap_ns,
        }


def profile_delays(g: Graph, limit: Optional[int] = None) -> DelayProfile:
    """Enumerate (up to `limit` solutions) and time every gap.

    Collection is disabled during the run so allocator pauses do not show
    up as enumeration delay.
    """
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        stamps = [time.perf_counter_ns()]
        count = 0
        for _ in iter_minimal_dominating_sets(g):
            stamps.append(time.perf_counter_ns())
            count += 1
            if limit is not None and count >= limit:
                break
        stamps.append(time.perf_counter_ns())
    finally:
        if gc_was_enabled:
            gc.enable()
    gaps = tuple(stamps[i + 1] - stamps[i] for i in range(len(stamps) - 1))
    return DelayProfile(outputs=count, gaps=gaps)
