#!/usr/bin/env python3
"""Solve a DIMACS CNF by reduction to minimal-dominating-set enumeration.

Builds the chordal reduction gadget, enumerates its minimal dominating
sets, keeps the qualifying ones (containing S, avoiding X), and prints the
satisfying assignments they encode.  Exhaustive, so only sensible for tiny
formulas — this is a demonstration of the hardness reduction, not a solver.

Example:
    printf 'p cnf 2 2\\n1 2 0\\n-1 -2 0\\n' | python scripts/sat_demo.py -
"""

import argparse
import sys

from chordal_mds import assignments_from_solution, iter_minimal_dominating_sets, sat_gadget
from chordal_mds.files import parse_dimacs_cnf


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("cnf", help="DIMACS CNF file, or - for stdin")
    args = parser.parse_args()

    text = sys.stdin.read() if args.cnf == "-" else open(args.cnf, encoding="utf-8").read()
    formula = parse_dimacs_cnf(text)
    inst = sat_gadget(formula)
    print(f"gadget: {inst.graph.n} vertices, {len(inst.tree.cliques)} cliques", file=sys.stderr)

    assignments = set()
    qualifying = 0
    for d in iter_minimal_dominating_sets(inst.graph, tree=inst.tree):
        if inst.qualifies(d):
            qualifying += 1
            assignments |= assignments_from_solution(inst, d)
    print(f"qualifying minimal dominating sets: {qualifying}", file=sys.stderr)
    if not assignments:
        print("UNSATISFIABLE")
        return 1
    print("SATISFIABLE")
    for assignment in sorted(assignments):
        lits = [i + 1 if value else -(i + 1) for i, value in enumerate(assignment)]
        print(" ".join(str(l) for l in lits))
    return 0


if __name__ == "__main__":
    sys.exit(main())
