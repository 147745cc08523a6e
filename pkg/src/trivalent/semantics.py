"""Brute-force matrix-semantics oracle.

Everything here enumerates all 3^n assignments over the relevant atoms,
so it is slow but obviously correct; the proof-search machinery is
checked against it.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Mapping

from .bisequent import Bisequent, bisequent_atoms
from .formula import Formula, atoms
from .logics import VALUES, LogicDef, Value, evaluate, slot_admits

__all__ = [
    "DEFAULT_ATOM_CAP",
    "AtomLimitError",
    "assignments_over",
    "bisequent_valid",
    "falsifies",
    "falsifying_assignments",
    "matrix_consequence",
]

#: 3^12 assignments is the default exhaustive-search budget
DEFAULT_ATOM_CAP = 12


class AtomLimitError(ValueError):
    def __init__(self, n_atoms: int, cap: int):
        super().__init__(
            f"{n_atoms} atoms exceed the exhaustive-search cap of {cap}; "
            f"raise max_atoms to override"
        )


def assignments_over(
    atom_names: Iterable[str], max_atoms: int = DEFAULT_ATOM_CAP
) -> Iterator[dict[str, Value]]:
    """All assignments over the given atoms, atoms in sorted name order,
    values enumerated 0 < u < 1 (lexicographic, deterministic)."""
    names = sorted(set(atom_names))
    if len(names) > max_atoms:
        raise AtomLimitError(len(names), max_atoms)
    for combo in itertools.product(VALUES, repeat=len(names)):
        yield dict(zip(names, combo))


def falsifies(logic: LogicDef, assignment: Mapping[str, Value], b: Bisequent) -> bool:
    """True iff the assignment makes every ant1 formula 1, every suc1
    formula not 1, every ant2 formula not 0 and every suc2 formula 0."""
    return all(
        slot_admits(slot, evaluate(logic, assignment, f))
        for slot, _, f in b.formulas()
    )


def falsifying_assignments(
    logic: LogicDef, b: Bisequent, max_atoms: int = DEFAULT_ATOM_CAP
) -> list[dict[str, Value]]:
    return [
        h
        for h in assignments_over(bisequent_atoms(b), max_atoms)
        if falsifies(logic, h, b)
    ]


def bisequent_valid(
    logic: LogicDef, b: Bisequent, max_atoms: int = DEFAULT_ATOM_CAP
) -> bool:
    return not any(
        falsifies(logic, h, b)
        for h in assignments_over(bisequent_atoms(b), max_atoms)
    )


def matrix_consequence(
    logic: LogicDef,
    premisses: Iterable[Formula],
    conclusion: Formula,
    max_atoms: int = DEFAULT_ATOM_CAP,
) -> bool:
    """True iff every assignment making all premisses designated makes the
    conclusion designated.  For one designated value this coincides with
    validity of ``premisses => conclusion | =>``, for two with validity of
    ``=> | premisses => conclusion``."""
    premisses = tuple(premisses)
    names: frozenset[str] = atoms(conclusion)
    for p in premisses:
        names |= atoms(p)
    for h in assignments_over(names, max_atoms):
        if all(evaluate(logic, h, p) in logic.designated for p in premisses):
            if evaluate(logic, h, conclusion) not in logic.designated:
                return False
    return True
