#!/usr/bin/env python3
"""Exhaustive oracle-vs-prover agreement sweep at a configurable scale.

Enumerates goals over a fixed atom set and compares the proof-search
verdict with the brute-force matrix oracle on every one of them.  Useful
for soaking a single logic harder than the test suite does, e.g.:

    python3 scripts/equivalence_sweep.py --logic L3 --conclusion-size 4
"""
from __future__ import annotations

import argparse
import time

from trivalent.formula import complexity, iter_formulas
from trivalent.logics import available_logics, lookup_logic
from trivalent.prover import designated_mode, goal_bisequent, prove_bisequent
from trivalent.semantics import matrix_consequence


def sweep(logic, atom_names, premiss_size, conclusion_size, solo_size):
    pool = list(iter_formulas(logic.signature, atom_names, max(conclusion_size, solo_size)))
    small = [f for f in pool if complexity(f) <= premiss_size]
    mid = [f for f in pool if complexity(f) <= conclusion_size]
    solo = [f for f in pool if complexity(f) <= solo_size]
    goals = [((), f) for f in solo]
    goals += [((g,), f) for g in small for f in mid]
    memo: dict = {}
    mode = designated_mode(logic)
    agree = 0
    for premisses, conclusion in goals:
        root = goal_bisequent(logic, mode, premisses, conclusion)
        verdict = prove_bisequent(logic, root, memo=memo).proved
        if verdict != matrix_consequence(logic, premisses, conclusion):
            print(f"  DISAGREEMENT: {premisses} |- {conclusion}")
        else:
            agree += 1
    return agree, len(goals)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--logic", help="one logic (default: all)")
    parser.add_argument("--atoms", default="p,q", help="comma-separated atom names")
    parser.add_argument("--premiss-size", type=int, default=1)
    parser.add_argument("--conclusion-size", type=int, default=2)
    parser.add_argument("--solo-size", type=int, default=3,
                        help="connective budget for premiss-free goals")
    args = parser.parse_args()

    atom_names = tuple(a for a in args.atoms.split(",") if a)
    names = [args.logic] if args.logic else list(available_logics())
    bad = 0
    for name in names:
        logic = lookup_logic(name)
        started = time.perf_counter()
        agree, total = sweep(
            logic, atom_names, args.premiss_size, args.conclusion_size, args.solo_size
        )
        bad += total - agree
        print(f"{name:14} {agree}/{total} agree   "
              f"({time.perf_counter() - started:.1f}s)")
    print("no disagreements" if bad == 0 else f"{bad} DISAGREEMENTS")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
