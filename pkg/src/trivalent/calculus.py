"""Declarative bisequent rules: catalog, application, verification,
and synthesis of rules from truth tables.

A rule is identified by its principal slot and a list of premisses; a
premiss is a multiset of placements sending immediate subformulas of the
principal formula into slots.  Contexts are always copied unchanged, so a
rule is fully described by this data.

Verification reduces to a finite check: under falsification each slot
pins its formulas to a set of values (ant1: 1, suc1: not 1, ant2: not 0,
suc2: 0), so a rule is sound and invertible exactly when, for every tuple
of argument values, the principal formula meets its slot constraint iff
some premiss has all placements satisfied.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping

from .bisequent import Bisequent
from .formula import CONNECTIVES, Compound
from .logics import (
    SLOTS,
    LogicDef,
    TruthTable,
    Value,
    VALUES,
    slot_admits,
)

__all__ = [
    "AxiomSchema",
    "Catalog",
    "CatalogError",
    "OccurrenceError",
    "Placement",
    "PremissSchema",
    "RuleSchema",
    "RuleVerdict",
    "apply_rule",
    "catalog",
    "load_rules",
    "rule_for",
    "synthesize_rules",
    "verify_rule_schema",
]

_DATA_DIR = Path(__file__).parent / "data"


class CatalogError(ValueError):
    pass


class OccurrenceError(ValueError):
    pass


@dataclass(frozen=True)
class Placement:
    slot: str
    arg_index: int


@dataclass(frozen=True)
class PremissSchema:
    placements: tuple[Placement, ...]

    def __post_init__(self) -> None:
        if not self.placements:
            raise CatalogError("a premiss must place at least one side formula")


@dataclass(frozen=True)
class RuleSchema:
    name: str
    connective: str
    principal_slot: str
    premisses: tuple[PremissSchema, ...]

    def __post_init__(self) -> None:
        n = CONNECTIVES[self.connective]
        for p in self.premisses:
            for pl in p.placements:
                if pl.arg_index >= n:
                    raise CatalogError(
                        f"rule {self.name}: placement index {pl.arg_index} "
                        f"out of range for {self.connective!r}"
                    )


@dataclass(frozen=True)
class AxiomSchema:
    """Any bisequent with a ``connective`` formula in ``slot`` is axiomatic."""

    connective: str
    slot: str


@dataclass(frozen=True)
class RuleVerdict:
    ok: bool
    counterexample: tuple[Value, ...] | None = None

    def __str__(self) -> str:
        if self.ok:
            return "sound_and_invertible"
        vals = ",".join(v.value for v in self.counterexample)
        return f"counterexample({vals})"


@dataclass(frozen=True)
class Catalog:
    rules: tuple[RuleSchema, ...]
    axiom_schemata: tuple[AxiomSchema, ...]

    def rule_for(self, connective: str, slot: str) -> RuleSchema | None:
        return self._by_key.get((connective, slot))

    def __post_init__(self) -> None:
        object.__setattr__(
            self,
            "_by_key",
            {(r.connective, r.principal_slot): r for r in self.rules},
        )


# ---------------------------------------------------------------------------
# Catalog file loading

def _parse_premiss(text: str, rule_name: str) -> PremissSchema:
    placements = []
    for token in text.split():
        try:
            idx, slot = token.split("@")
            placement = Placement(slot, int(idx))
        except ValueError:
            raise CatalogError(f"rule {rule_name}: bad placement {token!r}")
        if placement.slot not in SLOTS:
            raise CatalogError(f"rule {rule_name}: bad slot {placement.slot!r}")
        placements.append(placement)
    return PremissSchema(tuple(placements))


def load_rules(path: Path) -> tuple[dict[tuple[str, str], RuleSchema], tuple[AxiomSchema, ...]]:
    """Parse a rule catalog file, resolving shared-structure links."""
    parsed: dict[str, tuple[str, str, str]] = {}  # name -> (conn, slot, rhs)
    order: list[str] = []
    axioms: list[AxiomSchema] = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 1)
        if parts[0] == "axiom":
            fields = parts[1].split()
            if len(fields) != 2 or fields[1] not in SLOTS:
                raise CatalogError(f"{path.name}:{lineno}: bad axiom line")
            axioms.append(AxiomSchema(fields[0], fields[1]))
            continue
        if parts[0] != "rule" or len(parts) < 2:
            raise CatalogError(f"{path.name}:{lineno}: unrecognised line")
        rest = parts[1]
        for sep in (" : ", " = "):
            if sep in rest:
                head, rhs = rest.split(sep, 1)
                break
        else:
            raise CatalogError(f"{path.name}:{lineno}: missing ':' or '='")
        fields = head.split()
        if len(fields) != 3 or fields[2] not in SLOTS:
            raise CatalogError(f"{path.name}:{lineno}: bad rule header")
        name = fields[0]
        if name in parsed:
            raise CatalogError(f"{path.name}:{lineno}: duplicate rule {name!r}")
        parsed[name] = (fields[1], fields[2], sep.strip() + rhs)
        order.append(name)

    rules: dict[str, RuleSchema] = {}

    def build(name: str, seen: tuple[str, ...] = ()) -> RuleSchema:
        if name in rules:
            return rules[name]
        if name in seen:
            raise CatalogError(f"rule {name}: circular '=' reference")
        conn, slot, rhs = parsed[name]
        if rhs.startswith("="):
            target = rhs[1:].strip()
            if target not in parsed:
                raise CatalogError(f"rule {name}: unknown reference {target!r}")
            premisses = build(target, seen + (name,)).premisses
        else:
            premisses = tuple(
                _parse_premiss(p, name) for p in rhs[1:].strip().split("|")
            )
        rules[name] = RuleSchema(name, conn, slot, premisses)
        return rules[name]

    by_key: dict[tuple[str, str], RuleSchema] = {}
    for name in order:
        rule = build(name)
        key = (rule.connective, rule.principal_slot)
        if key in by_key:
            raise CatalogError(f"two rules for {key}")
        by_key[key] = rule
    return by_key, tuple(axioms)


@lru_cache(maxsize=None)
def _rule_catalog() -> tuple[Mapping[tuple[str, str], RuleSchema], tuple[AxiomSchema, ...]]:
    return load_rules(_DATA_DIR / "rules.txt")


@lru_cache(maxsize=None)
def catalog(logic: LogicDef) -> Catalog:
    """The logic's rules and axiom schemata; every connective must be
    covered on all four slots by a rule or an axiom schema."""
    by_key, axioms = _rule_catalog()
    rules: list[RuleSchema] = []
    schemata = [
        AxiomSchema(cid, slot) for cid, slot in logic.extra_axiom_schemata
    ]
    declared = {(a.connective, a.slot) for a in axioms}
    for cid in logic.connectives:
        for slot in SLOTS:
            rule = by_key.get((cid, slot))
            if rule is not None:
                rules.append(rule)
            elif (cid, slot) in {(a.connective, a.slot) for a in schemata}:
                if (cid, slot) not in declared:
                    raise CatalogError(
                        f"{cid!r} needs a declared axiom schema at {slot}"
                    )
            else:
                raise CatalogError(
                    f"incomplete catalog: {cid!r} has no rule for slot {slot}"
                )
    return Catalog(tuple(rules), tuple(schemata))


def rule_for(logic: LogicDef, connective: str, slot: str) -> RuleSchema | None:
    return catalog(logic).rule_for(connective, slot)


# ---------------------------------------------------------------------------
# Rule application

def apply_rule(
    rule: RuleSchema, b: Bisequent, occurrence: tuple[str, int]
) -> list[Bisequent]:
    """One premiss bisequent per premiss schema: the principal occurrence
    is removed, placements insert its immediate subformulas, contexts are
    copied unchanged."""
    slot, index = occurrence
    if slot != rule.principal_slot:
        raise OccurrenceError(
            f"rule {rule.name} expects its principal formula in "
            f"{rule.principal_slot}, not {slot}"
        )
    fs = b.slot(slot)
    if not 0 <= index < len(fs):
        raise OccurrenceError(f"no formula at {slot}[{index}]")
    principal = fs[index]
    if not isinstance(principal, Compound) or principal.connective != rule.connective:
        raise OccurrenceError(
            f"formula at {slot}[{index}] is not a {rule.connective!r} compound"
        )
    base = b.remove_at(slot, index)
    out = []
    for premiss in rule.premisses:
        nb = base
        for pl in premiss.placements:
            nb = nb.add(pl.slot, principal.args[pl.arg_index])
        out.append(nb)
    return out


# ---------------------------------------------------------------------------
# Verification (finite, table-level)

def _premiss_admits(premiss: PremissSchema, args: tuple[Value, ...]) -> bool:
    return all(slot_admits(pl.slot, args[pl.arg_index]) for pl in premiss.placements)


def verify_rule_schema(logic: LogicDef, rule: RuleSchema) -> RuleVerdict:
    """Check, over all argument tuples, that the principal formula meets
    its slot constraint iff some premiss is fully satisfied.  This makes
    the rule validity-preserving and invertible at once: a falsifying
    homomorphism of the conclusion falsifies some premiss and conversely."""
    table = logic.table(rule.connective)
    for args in _arg_tuples(table.arity):
        lhs = slot_admits(rule.principal_slot, table(*args))
        rhs = any(_premiss_admits(p, args) for p in rule.premisses)
        if lhs != rhs:
            return RuleVerdict(False, args)
    return RuleVerdict(True)


def verify_axiom_schema(logic: LogicDef, schema: AxiomSchema) -> RuleVerdict:
    """An axiom schema is correct iff no argument tuple lets the operation
    meet the slot constraint (the slot's falsification value is never taken)."""
    table = logic.table(schema.connective)
    for args in _arg_tuples(table.arity):
        if slot_admits(schema.slot, table(*args)):
            return RuleVerdict(False, args)
    return RuleVerdict(True)


def _arg_tuples(arity: int) -> Iterable[tuple[Value, ...]]:
    return itertools.product(VALUES, repeat=arity)


# ---------------------------------------------------------------------------
# Synthesis from tables

# per-argument constraints a premiss can express, with the placements
# realising them; {u} needs the double placement suc1+ant2
_ARG_CONSTRAINTS: tuple[tuple[tuple[str, ...], frozenset[Value]], ...] = (
    ((), frozenset(VALUES)),
    (("ant1",), frozenset((Value.ONE,))),
    (("suc1",), frozenset((Value.ZERO, Value.UNDEF))),
    (("ant2",), frozenset((Value.UNDEF, Value.ONE))),
    (("suc2",), frozenset((Value.ZERO,))),
    (("suc1", "ant2"), frozenset((Value.UNDEF,))),
)


def _rectangles(arity: int):
    """Candidate premisses as (placements, cell set), smallest first."""
    out = []
    if arity == 1:
        combos = [(c,) for c in _ARG_CONSTRAINTS]
    else:
        combos = list(itertools.product(_ARG_CONSTRAINTS, repeat=2))
    for combo in combos:
        placements = tuple(
            Placement(slot, i)
            for i, (slots, _) in enumerate(combo)
            for slot in slots
        )
        if not placements:
            continue  # a premiss must be nonempty
        cells = frozenset(
            args
            for args in _arg_tuples(arity)
            if all(args[i] in vs for i, (_, vs) in enumerate(combo))
        )
        out.append((placements, cells))
    out.sort(key=lambda rc: (len(rc[0]), [(p.slot, p.arg_index) for p in rc[0]]))
    return out


def synthesize_rules(table: TruthTable, slot: str) -> RuleSchema | AxiomSchema:
    """Build a rule for the given table and principal slot by covering the
    satisfying region of the slot constraint with premiss-expressible
    rectangles (an axiom schema when the region is empty).  The cover is
    exact, so the result passes verification by construction; among covers
    it minimises the premiss count, then the total placement count."""
    region = frozenset(
        args for args in _arg_tuples(table.arity) if slot_admits(slot, table(*args))
    )
    if not region:
        return AxiomSchema(table.name, slot)
    candidates = [
        (placements, cells)
        for placements, cells in _rectangles(table.arity)
        if cells and cells <= region
    ]
    best_weight: int | None = None
    best_combo = None
    for k in range(1, len(region) + 1):
        for combo in itertools.combinations(candidates, k):
            union = frozenset().union(*(cells for _, cells in combo))
            if union != region:
                continue
            weight = sum(len(p) for p, _ in combo)
            if best_weight is None or weight < best_weight:
                best_weight = weight
                best_combo = combo
        if best_combo is not None:
            break
    if best_combo is None:  # unreachable: singletons always cover
        raise CatalogError(f"no premiss cover for {table.name} at {slot}")
    premisses = tuple(PremissSchema(p) for p, _ in best_combo)
    return RuleSchema(f"syn:{table.name}.{slot}", table.name, slot, premisses)
