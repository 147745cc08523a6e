#!/usr/bin/env python3
"""Verify the whole rule catalog and compare it with synthesised rules.

For every registered logic every rule is checked for the finite
soundness-and-invertibility condition, and for every connective's table
each of the four principal positions is re-derived by the synthesiser;
the table at the end records where the synthesised premiss count differs
from the catalogued one (none is expected, but a difference would only
mean a different cover of the same region, not an error).
"""
from __future__ import annotations

import argparse

from trivalent.calculus import (
    AxiomSchema,
    catalog,
    synthesize_rules,
    verify_axiom_schema,
    verify_rule_schema,
)
from trivalent.logics import SLOTS, available_logics, lookup_logic, tables


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--logic", help="restrict to one logic")
    args = parser.parse_args()

    names = [args.logic] if args.logic else list(available_logics())
    failures = 0
    for name in names:
        logic = lookup_logic(name)
        cat = catalog(logic)
        print(f"== {name} ({len(cat.rules)} rules, "
              f"{len(cat.axiom_schemata)} axiom schemata)")
        for rule in cat.rules:
            verdict = verify_rule_schema(logic, rule)
            if not verdict.ok:
                failures += 1
            print(f"  {rule.name:16} {verdict}")
        for schema in cat.axiom_schemata:
            verdict = verify_axiom_schema(logic, schema)
            if not verdict.ok:
                failures += 1
            print(f"  axiom {schema.connective}@{schema.slot:8} {verdict}")

    print("\n== synthesis vs catalog (premiss counts)")
    host = {}
    for name in available_logics():
        for cid in lookup_logic(name).connectives:
            host.setdefault(cid, lookup_logic(name))
    for cid, table in sorted(tables().items()):
        if args.logic and cid not in lookup_logic(args.logic).signature:
            continue
        cells = []
        for slot in SLOTS:
            schema = synthesize_rules(table, slot)
            catalogued = catalog(host[cid]).rule_for(cid, slot)
            if isinstance(schema, AxiomSchema):
                cells.append(f"{slot}=axiom")
            else:
                got = len(schema.premisses)
                want = "-" if catalogued is None else len(catalogued.premisses)
                mark = "" if want == got else " <-- differs"
                cells.append(f"{slot}={got}/{want}{mark}")
        print(f"  {cid:10} {'  '.join(cells)}")
    print(f"\n{failures} verification failures")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
