#!/usr/bin/env python3
"""Solve a DIMACS file with an external SAT solver and record the verdict.

    defcol gadget non1k --k 1 --out /tmp/n
    defcol solve --graph /tmp/n.edges --spec 1,1 --emit-cnf /tmp/n.cnf
    tools/record_cnf_verdict.py /tmp/n.cnf --instance non1k --spec 1,1 \
        > tests/data/non1k_k1_spec_1_1.verdict.json

The fnv1a64 field hashes the exact file bytes, so the test suite can tell
whether the recorded verdict still belongs to the CNF the exporter produces.
"""

import argparse
import json
import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def fnv1a64(data: bytes) -> int:
    h = 1469598103934665603
    for byte in data:
        h ^= byte
        h = (h * 1099511628211) & 0xFFFFFFFFFFFFFFFF
    return h


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("cnf")
    ap.add_argument("--instance", required=True)
    ap.add_argument("--spec", required=True)
    ap.add_argument("--solver", default="cadical153")
    args = ap.parse_args()

    with open(args.cnf, "rb") as f:
        raw = f.read()
    formula = CNF(from_string=raw.decode())
    with Solver(name=args.solver, bootstrap_with=formula.clauses) as s:
        sat = s.solve()
    json.dump(
        {
            "instance": args.instance,
            "spec": args.spec,
            "solver": "pysat " + args.solver,
            "result": "SAT" if sat else "UNSAT",
            "variables": formula.nv,
            "clauses": len(formula.clauses),
            "fnv1a64": format(fnv1a64(raw), "016x"),
        },
        sys.stdout,
        indent=2,
        sort_keys=True,
    )
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
