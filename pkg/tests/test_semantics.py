from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from trivalent.bisequent import bisequent, parse_bisequent
from trivalent.formula import Atom, Constant
from trivalent.logics import Value, lookup_logic
from trivalent.semantics import (
    AtomLimitError,
    assignments_over,
    bisequent_valid,
    falsifies,
    falsifying_assignments,
    matrix_consequence,
)

from conftest import DATA_DIR, formulas

K3 = lookup_logic("K3")
LP = lookup_logic("LP")
ZERO, UNDEF, ONE = Value.ZERO, Value.UNDEF, Value.ONE


# --- independent reference evaluator, built from the audit transcription ---

def _audit_tables() -> dict[str, dict[tuple[str, ...], str]]:
    out: dict[str, dict[tuple[str, ...], str]] = {}
    for raw in (DATA_DIR / "tables_audit.txt").read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, *cells = line.split()
        out.setdefault(name, {})[tuple(cells[:-1])] = cells[-1]
    return out


AUDIT = _audit_tables()


def ref_eval(f, h: dict[str, str]) -> str:
    if isinstance(f, Atom):
        return h[f.name]
    if isinstance(f, Constant):
        return {"top": "1", "bottom": "0", "undef": "u"}[f.kind]
    return AUDIT[f.connective][tuple(ref_eval(a, h) for a in f.args)]


def ref_consequence(logic, premisses, conclusion) -> bool:
    names = sorted({a for f in premisses + (conclusion,) for a in _names(f)})
    designated = {v.value for v in logic.designated}
    for combo in itertools.product("0u1", repeat=len(names)):
        h = dict(zip(names, combo))
        if all(ref_eval(p, h) in designated for p in premisses):
            if ref_eval(conclusion, h) not in designated:
                return False
    return True


def _names(f):
    if isinstance(f, Atom):
        return {f.name}
    if isinstance(f, Constant):
        return set()
    return set().union(*(_names(a) for a in f.args))


# ---------------------------------------------------------------------------

class TestMatrixConsequence:
    def test_modus_ponens_holds_in_k3(self):
        prems = (K3.parse("p"), K3.parse("p -> q"))
        assert ref_consequence(K3, prems, K3.parse("q"))
        assert matrix_consequence(K3, prems, K3.parse("q"))

    def test_modus_ponens_fails_in_lp(self):
        prems = (LP.parse("p"), LP.parse("p -> q"))
        assert not ref_consequence(LP, prems, LP.parse("q"))
        assert not matrix_consequence(LP, prems, LP.parse("q"))

    def test_excluded_middle_fails_in_k3(self):
        f = K3.parse("p | ~p")
        assert not ref_consequence(K3, (), f)
        assert not matrix_consequence(K3, (), f)

    def test_atom_cap(self):
        f = K3.parse(" | ".join(f"x{i}" for i in range(13)))
        with pytest.raises(AtomLimitError):
            matrix_consequence(K3, (), f)
        assert not matrix_consequence(K3, (), f, max_atoms=13)


class TestBisequentValidity:
    def test_shared_atom_across_first_sequent(self):
        assert bisequent_valid(K3, parse_bisequent("p => p | =>", K3.signature))

    def test_undefined_falsifies_the_split_atom(self):
        b = parse_bisequent("=> p | p =>", K3.signature)
        assert not bisequent_valid(K3, b)
        assert falsifying_assignments(K3, b) == [{"p": UNDEF}]

    def test_true_contradicts_false(self):
        assert bisequent_valid(K3, parse_bisequent("p => | => p", K3.signature))

    def test_excluded_middle_witness(self):
        b = parse_bisequent("=> p | ~p | =>", K3.signature)
        assert falsifying_assignments(K3, b) == [{"p": UNDEF}]

    def test_falsifying_assignments_empty_iff_valid(self):
        for text in ("p => p | =>", "=> p | p =>", "p, q => r | =>"):
            b = parse_bisequent(text, K3.signature)
            assert bisequent_valid(K3, b) == (not falsifying_assignments(K3, b))

    def test_assignment_enumeration_is_lexicographic(self):
        got = list(assignments_over(("b", "a")))
        assert got[0] == {"a": ZERO, "b": ZERO}
        assert got[1] == {"a": ZERO, "b": UNDEF}
        assert got[-1] == {"a": ONE, "b": ONE}
        assert len(got) == 9


@pytest.mark.parametrize("name", ("K3", "LP", "PWK", "L3", "J3", "I1", "P1"))
def test_consequence_matches_goal_bisequent_validity(name):
    logic = lookup_logic(name)

    @given(
        formulas(logic.signature, atom_names=("p", "q"), max_leaves=4),
        formulas(logic.signature, atom_names=("p", "q"), max_leaves=4),
    )
    @settings(max_examples=60)
    def check(premiss, conclusion):
        if logic.goal_mode == 1:
            b = bisequent(ant1=(premiss,), suc1=(conclusion,))
        else:
            b = bisequent(ant2=(premiss,), suc2=(conclusion,))
        assert matrix_consequence(logic, (premiss,), conclusion) == bisequent_valid(
            logic, b
        )

    check()


@given(
    formulas(K3.signature, atom_names=("p", "q"), max_leaves=4),
    formulas(K3.signature, atom_names=("p", "q", "r"), max_leaves=3),
)
@settings(max_examples=60)
def test_validity_is_monotone_under_weakening(f, extra):
    b = bisequent(suc1=(f,), ant2=(f,))
    if not bisequent_valid(K3, b):
        return
    for slot in ("ant1", "suc1", "ant2", "suc2"):
        assert bisequent_valid(K3, b.add(slot, extra))


@given(formulas(LP.signature, atom_names=("p", "q"), max_leaves=5))
@settings(max_examples=60)
def test_oracle_agrees_with_reference_tables(f):
    # the production oracle and the audit-file evaluator agree on
    # designatedness everywhere
    for h in assignments_over(("p", "q")):
        ref = ref_eval(f, {k: v.value for k, v in h.items()})
        from trivalent.logics import evaluate

        assert evaluate(LP, h, f).value == ref


def test_falsifies_checks_all_four_slots(k3):
    b = parse_bisequent("p => q | r => s", k3.signature)
    good = {"p": ONE, "q": ZERO, "r": UNDEF, "s": ZERO}
    assert falsifies(k3, good, b)
    for name, bad in (("p", UNDEF), ("q", ONE), ("r", ZERO), ("s", ONE)):
        h = dict(good)
        h[name] = bad
        assert not falsifies(k3, h, b)
