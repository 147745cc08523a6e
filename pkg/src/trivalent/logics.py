"""Logic registry: truth values, truth tables, and logic definitions.

Tables and logics are loaded from the plain-text catalog files in
``data/`` so they can be audited cell by cell.  Logics that share a
connective share the table object.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping

from . import formula as fm
from .formula import Atom, Constant, Formula

__all__ = [
    "Value",
    "VALUES",
    "TruthTable",
    "LogicDef",
    "SLOTS",
    "slot_admits",
    "UnknownLogicError",
    "EvaluationError",
    "CatalogFileError",
    "available_logics",
    "evaluate",
    "load_logics",
    "load_tables",
    "lookup_logic",
    "tables",
]

_DATA_DIR = Path(__file__).parent / "data"


class Value(enum.Enum):
    """The three truth values."""

    ZERO = "0"
    UNDEF = "u"
    ONE = "1"

    def __repr__(self) -> str:  # keeps counterexample output short
        return self.value

    def __str__(self) -> str:
        return self.value


#: display/enumeration order 0 < u < 1 (no semantic weight)
VALUES = (Value.ZERO, Value.UNDEF, Value.ONE)

_VALUE_BY_SYMBOL = {v.value: v for v in VALUES}

#: the four formula positions of a bisequent
SLOTS = ("ant1", "suc1", "ant2", "suc2")


def slot_admits(slot: str, v: Value) -> bool:
    """Value condition a slot imposes under falsification: a homomorphism
    falsifying a bisequent makes every ant1 formula 1, every suc1 formula
    not 1, every ant2 formula not 0 and every suc2 formula 0."""
    if slot == "ant1":
        return v is Value.ONE
    if slot == "suc1":
        return v is not Value.ONE
    if slot == "ant2":
        return v is not Value.ZERO
    if slot == "suc2":
        return v is Value.ZERO
    raise ValueError(f"unknown slot {slot!r}")


class UnknownLogicError(KeyError):
    def __init__(self, name: str, known: Iterable[str]):
        super().__init__(
            f"unknown logic {name!r}; available: {', '.join(sorted(known))}"
        )
        self.name = name

    def __str__(self) -> str:  # KeyError quotes its message otherwise
        return self.args[0]


class EvaluationError(ValueError):
    pass


class CatalogFileError(ValueError):
    pass


@dataclass(frozen=True)
class TruthTable:
    """Total map from argument tuples to values."""

    name: str
    arity: int
    entries: Mapping[tuple[Value, ...], Value]

    def __post_init__(self) -> None:
        expected = {args for args in _tuples(self.arity)}
        if set(self.entries) != expected:
            raise CatalogFileError(f"table {self.name!r} is not total")

    def __call__(self, *args: Value) -> Value:
        return self.entries[args]


def _tuples(arity: int) -> Iterable[tuple[Value, ...]]:
    if arity == 1:
        return tuple((v,) for v in VALUES)
    return tuple((a, b) for a in VALUES for b in VALUES)


@dataclass(frozen=True)
class LogicDef:
    """A named logic: connective ids, designated values, constants flag.

    ``extra_axiom_schemata`` lists (connective, slot) pairs for operations
    that never take the slot's falsification value; bisequents carrying
    such a formula in that slot are axiomatic.  They are derived from the
    tables when the registry is built.
    """

    name: str
    connectives: tuple[str, ...]
    designated: frozenset[Value]
    constants_enabled: bool = False
    extra_axiom_schemata: tuple[tuple[str, str], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.designated not in (
            frozenset((Value.ONE,)),
            frozenset((Value.ONE, Value.UNDEF)),
        ):
            raise CatalogFileError(
                f"logic {self.name!r}: designated set must be 1 or 1,u"
            )
        for cid in self.connectives:
            if cid not in tables():
                raise CatalogFileError(f"logic {self.name!r}: no table for {cid!r}")

    @property
    def goal_mode(self) -> int:
        """1 if consequence goals live in the first sequent, 2 otherwise."""
        return 1 if self.designated == frozenset((Value.ONE,)) else 2

    @property
    def signature(self) -> frozenset[str]:
        return frozenset(self.connectives)

    def table(self, connective: str) -> TruthTable:
        if connective not in self.signature:
            raise EvaluationError(
                f"connective {connective!r} is not in logic {self.name}"
            )
        return tables()[connective]

    def parse(self, text: str) -> Formula:
        return fm.parse_formula(text, self.signature)

    def render(self, f: Formula) -> str:
        return fm.render(f, self.signature)

    def with_constants(self) -> "LogicDef":
        if self.constants_enabled:
            return self
        return LogicDef(
            name=f"{self.name}+c",
            connectives=self.connectives,
            designated=self.designated,
            constants_enabled=True,
            extra_axiom_schemata=self.extra_axiom_schemata,
        )

    def extended(self, extra: Iterable[str], name: str | None = None) -> "LogicDef":
        """The logic with extra connectives added to its signature."""
        added = tuple(c for c in extra if c not in self.signature)
        conns = self.connectives + added
        return LogicDef(
            name=name or (self.name + "".join(f"+{c}" for c in added)),
            connectives=conns,
            designated=self.designated,
            constants_enabled=self.constants_enabled,
            extra_axiom_schemata=_axiom_schemata(conns),
        )


# ---------------------------------------------------------------------------
# Catalog file loading

def load_tables(path: Path) -> dict[str, TruthTable]:
    """Parse a truth-table catalog file."""
    out: dict[str, TruthTable] = {}
    name: str | None = None
    arity = 0
    rows: dict[Value, tuple[Value, ...]] = {}

    def flush() -> None:
        nonlocal name
        if name is None:
            return
        if len(rows) != 3:
            raise CatalogFileError(f"table {name!r}: expected 3 rows")
        entries: dict[tuple[Value, ...], Value] = {}
        for row, cells in rows.items():
            if arity == 1:
                entries[(row,)] = cells[0]
            else:
                for col, v in zip(VALUES[::-1], cells):
                    entries[(row, col)] = v
        out[name] = TruthTable(name, arity, entries)
        name = None
        rows.clear()

    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "table":
            flush()
            if len(parts) != 3 or parts[2] not in ("unary", "binary"):
                raise CatalogFileError(f"{path.name}:{lineno}: bad table header")
            name = parts[1]
            arity = 1 if parts[2] == "unary" else 2
        elif name is not None and len(parts) >= 3 and parts[1] == ":":
            try:
                row = _VALUE_BY_SYMBOL[parts[0]]
                cells = tuple(_VALUE_BY_SYMBOL[c] for c in parts[2:])
            except KeyError as exc:
                raise CatalogFileError(f"{path.name}:{lineno}: bad value") from exc
            if len(cells) != (1 if arity == 1 else 3):
                raise CatalogFileError(f"{path.name}:{lineno}: wrong row width")
            rows[row] = cells
        else:
            raise CatalogFileError(f"{path.name}:{lineno}: unrecognised line")
    flush()
    return out


def _axiom_schemata(connectives: tuple[str, ...]) -> tuple[tuple[str, str], ...]:
    """(connective, slot) pairs whose slot constraint no table entry meets."""
    out = []
    for cid in connectives:
        table = tables()[cid]
        for slot in SLOTS:
            if not any(slot_admits(slot, v) for v in table.entries.values()):
                out.append((cid, slot))
    return tuple(out)


def load_logics(path: Path) -> dict[str, LogicDef]:
    """Parse a logic catalog file (requires tables to be loadable)."""
    out: dict[str, LogicDef] = {}
    name: str | None = None
    fields: dict[str, tuple[str, ...]] = {}

    def flush() -> None:
        nonlocal name
        if name is None:
            return
        missing = {"designated", "connectives"} - set(fields)
        if missing:
            raise CatalogFileError(f"logic {name!r}: missing {sorted(missing)}")
        designated = frozenset(_VALUE_BY_SYMBOL[s] for s in fields["designated"])
        conns = fields["connectives"]
        out[name] = LogicDef(
            name=name,
            connectives=conns,
            designated=designated,
            extra_axiom_schemata=_axiom_schemata(conns),
        )
        name = None
        fields.clear()

    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "logic":
            flush()
            if len(parts) != 2:
                raise CatalogFileError(f"{path.name}:{lineno}: bad logic header")
            name = parts[1]
        elif name is not None and parts[0] in ("designated", "connectives"):
            fields[parts[0]] = tuple(parts[1:])
        else:
            raise CatalogFileError(f"{path.name}:{lineno}: unrecognised line")
    flush()
    return out


@lru_cache(maxsize=None)
def tables() -> Mapping[str, TruthTable]:
    loaded = load_tables(_DATA_DIR / "tables.txt")
    for cid, table in loaded.items():
        declared = fm.CONNECTIVES.get(cid)
        if declared is not None and declared != table.arity:
            raise CatalogFileError(f"table {cid!r} contradicts declared arity")
        fm.CONNECTIVES.setdefault(cid, table.arity)
    return loaded


@lru_cache(maxsize=None)
def _registry() -> Mapping[str, LogicDef]:
    return load_logics(_DATA_DIR / "logics.txt")


def lookup_logic(name: str) -> LogicDef:
    reg = _registry()
    try:
        return reg[name]
    except KeyError:
        raise UnknownLogicError(name, reg) from None


def available_logics() -> tuple[str, ...]:
    return tuple(sorted(_registry()))


# ---------------------------------------------------------------------------
# Evaluation

_CONSTANT_VALUE = {
    "top": Value.ONE,
    "bottom": Value.ZERO,
    "undef": Value.UNDEF,
}


def evaluate(logic: LogicDef, assignment: Mapping[str, Value], f: Formula) -> Value:
    """Homomorphic extension of ``assignment`` to ``f`` under ``logic``."""
    if isinstance(f, Atom):
        try:
            return assignment[f.name]
        except KeyError:
            raise EvaluationError(f"assignment misses atom {f.name!r}") from None
    if isinstance(f, Constant):
        if not logic.constants_enabled:
            raise EvaluationError(
                f"constants are not enabled in logic {logic.name}"
            )
        return _CONSTANT_VALUE[f.kind]
    table = logic.table(f.connective)
    return table(*(evaluate(logic, assignment, a) for a in f.args))
