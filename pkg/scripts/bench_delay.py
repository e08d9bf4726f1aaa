#!/usr/bin/env python3
"""Profile inter-output delay on a generated instance family.

Examples:
    python scripts/bench_delay.py corona 20 --limit 5000
    python scripts/bench_delay.py random 40 --density 0.3 --seed 7
"""

import argparse
import json

from chordal_mds import profile_delays, random_chordal
from chordal_mds.graph import build_graph


def corona(k):
    edges = [(a, b) for a in range(k) for b in range(a + 1, k)]
    edges += [(v, k + v) for v in range(k)]
    return build_graph(2 * k, edges)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    sub = parser.add_subparsers(dest="family", required=True)

    p = sub.add_parser("corona", help="complete graph with one pendant per vertex (2^k solutions)")
    p.add_argument("k", type=int)

    p = sub.add_parser("random", help="random chordal graph")
    p.add_argument("n", type=int)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)

    parser.add_argument("--limit", type=int, default=None)
    parser.add_argument("--runs", type=int, default=1)
    args = parser.parse_args()

    g = corona(args.k) if args.family == "corona" else random_chordal(args.n, args.density, args.seed)
    for run in range(args.runs):
        profile = profile_delays(g, limit=args.limit)
        summary = profile.summary()
        gaps = profile.inter_gaps
        if len(gaps) >= 2:
            half = len(gaps) // 2
            summary["max_over_median"] = round(summary["max_gap_ns"] / summary["median_gap_ns"], 2)
            summary["second_half_over_first_half_max"] = round(
                max(gaps[half:]) / max(gaps[:half]), 2
            )
        print(json.dumps(summary))


if __name__ == "__main__":
    main()
