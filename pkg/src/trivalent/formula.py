"""Formula syntax for three-valued propositional logics.

A formula is an atom, a constant, or a connective applied to arguments.
Connectives are identified by symbolic ids ("neg", "and_w", "impl_l", ...);
each logic declares which ids belong to its signature.  The ASCII surface
syntax is signature-relative:

* atoms are identifiers (``[a-zA-Z][a-zA-Z0-9_]*``, minus reserved words),
* ``~`` is the signature's primary negation, ``&``/``|``/``->`` its native
  conjunction/disjunction/implication,
* ``neg_h``/``neg_b``/``neg_p``/``neg_dp`` name the Heyting, Bochvar, Post
  and dual-Post negations explicitly, ``box``/``dia`` the modalities,
  ``o1``/``o2`` the two Palasinska operators, ``and_l``/``or_l`` the
  additive Lukasiewicz pair,
* ``T``/``F``/``U`` are the true/false/undefined constants,
* precedence: prefix operators bind tightest, then ``&``, then ``|``, then
  ``->``; ``->`` is right-associative, ``&`` and ``|`` left-associative.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

__all__ = [
    "Atom",
    "Compound",
    "Constant",
    "Formula",
    "ParseError",
    "RenderError",
    "UnknownConnectiveError",
    "CONNECTIVES",
    "arity",
    "atoms",
    "complexity",
    "connectives_of",
    "iter_formulas",
    "parse_formula",
    "render",
    "structural_key",
]

#: arity of every built-in connective id.
CONNECTIVES: dict[str, int] = {
    # negations
    "neg": 1, "neg_h": 1, "neg_b": 1, "neg_p": 1, "neg_dp": 1,
    # modalities
    "dia": 1, "box": 1,
    # strong Kleene pair plus implication
    "and": 2, "or": 2, "impl": 2,
    # weak variants
    "and_w": 2, "or_w": 2, "impl_w": 2,
    # left-sequential variants
    "and_mc": 2, "or_mc": 2, "impl_mc": 2,
    # right-sequential variants
    "and_k": 2, "or_k": 2, "impl_k": 2,
    # Lukasiewicz implication and additive pair
    "impl_l": 2, "and_l": 2, "or_l": 2,
    # further implications
    "impl_sl": 2, "impl_h": 2, "impl_j": 2, "impl_r": 2, "impl_t": 2,
    # Sobocinski connectives (impl_sp is his second implication)
    "and_s": 2, "or_s": 2, "impl_s": 2, "impl_sp": 2,
    # connectives with classical outputs, undefined acting as truth
    "and_se": 2, "or_se": 2, "impl_se": 2,
    # connectives with classical outputs, undefined acting as falsity
    "and_c": 2, "or_c": 2, "impl_c": 2,
    # Palasinska operators
    "circ1": 2, "circ2": 2,
}

_KEYWORD_TO_ID = {
    "neg_h": "neg_h",
    "neg_b": "neg_b",
    "neg_p": "neg_p",
    "neg_dp": "neg_dp",
    "box": "box",
    "dia": "dia",
    "o1": "circ1",
    "o2": "circ2",
    "and_l": "and_l",
    "or_l": "or_l",
}
_ID_TO_KEYWORD = {cid: tok for tok, cid in _KEYWORD_TO_ID.items()}

_CONSTANT_TOKENS = {"T": "top", "F": "bottom", "U": "undef"}
_CONSTANT_SYMBOL = {kind: tok for tok, kind in _CONSTANT_TOKENS.items()}

RESERVED_WORDS = frozenset(_KEYWORD_TO_ID) | frozenset(_CONSTANT_TOKENS)

_ATOM_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


class ParseError(ValueError):
    """Syntax error, carrying the character offset of the failure."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.message = message
        self.position = position


class UnknownConnectiveError(ParseError):
    """A connective token that the signature does not provide."""

    def __init__(self, token: str, position: int):
        super().__init__(f"connective {token!r} is not in the signature", position)
        self.token = token


class RenderError(ValueError):
    """A connective id with no surface form under the given signature."""


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self) -> None:
        if not _ATOM_RE.match(self.name) or self.name in RESERVED_WORDS:
            raise ValueError(f"invalid atom name {self.name!r}")


@dataclass(frozen=True)
class Constant:
    kind: str  # "top" | "bottom" | "undef"

    def __post_init__(self) -> None:
        if self.kind not in ("top", "bottom", "undef"):
            raise ValueError(f"invalid constant kind {self.kind!r}")


@dataclass(frozen=True)
class Compound:
    connective: str
    args: tuple["Formula", ...]

    def __post_init__(self) -> None:
        n = CONNECTIVES.get(self.connective)
        if n is None:
            raise ValueError(f"unknown connective id {self.connective!r}")
        if len(self.args) != n:
            raise ValueError(
                f"{self.connective!r} expects {n} argument(s), got {len(self.args)}"
            )


Formula = Union[Atom, Constant, Compound]


def arity(connective: str) -> int:
    return CONNECTIVES[connective]


def atoms(f: Formula) -> frozenset[str]:
    """Names of the atoms occurring in ``f``."""
    if isinstance(f, Atom):
        return frozenset((f.name,))
    if isinstance(f, Constant):
        return frozenset()
    out: frozenset[str] = frozenset()
    for a in f.args:
        out |= atoms(a)
    return out


def complexity(f: Formula) -> int:
    """Number of connective occurrences in ``f``."""
    if isinstance(f, Compound):
        return 1 + sum(complexity(a) for a in f.args)
    return 0


def connectives_of(f: Formula) -> frozenset[str]:
    if isinstance(f, Compound):
        out = frozenset((f.connective,))
        for a in f.args:
            out |= connectives_of(a)
        return out
    return frozenset()


def structural_key(f: Formula):
    """Deterministic total-order key on formulas (for canonical sorting)."""
    if isinstance(f, Atom):
        return ("0atom", f.name)
    if isinstance(f, Constant):
        return ("1const", f.kind)
    return ("2comp", f.connective) + tuple(structural_key(a) for a in f.args)


# ---------------------------------------------------------------------------
# Token resolution relative to a signature

_FAMILIES = {
    "~": tuple(c for c in CONNECTIVES if c.startswith("neg")),
    "&": tuple(c for c in CONNECTIVES if c.startswith("and")),
    "|": tuple(c for c in CONNECTIVES if c.startswith("or")),
    "->": tuple(c for c in CONNECTIVES if c.startswith("impl")),
}
_FAMILY_PRIMARY = {"~": "neg", "&": "and", "|": "or", "->": "impl"}


def _resolve_generic(token: str, signature: frozenset[str]) -> str | None:
    """Connective id a generic token denotes in ``signature`` (None if none)."""
    primary = _FAMILY_PRIMARY[token]
    if primary in signature:
        return primary
    members = [c for c in _FAMILIES[token] if c in signature]
    if len(members) == 1:
        return members[0]
    return None


def _token_map(signature: frozenset[str]) -> dict[str, str]:
    """Surface token for every connective id of the signature."""
    out: dict[str, str] = {}
    for tok in ("~", "&", "|", "->"):
        target = _resolve_generic(tok, signature)
        if target is not None:
            out[target] = tok
    for cid in signature:
        if cid not in out:
            kw = _ID_TO_KEYWORD.get(cid)
            if kw is not None:
                out[cid] = kw
    return out


# ---------------------------------------------------------------------------
# Parsing

_TOKEN_RE = re.compile(r"->|[~&|(),]|[a-zA-Z][a-zA-Z0-9_]*")
_WS_RE = re.compile(r"\s*")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens: list[tuple[str, int]] = []
    pos = 0
    while pos < len(text):
        pos = _WS_RE.match(text, pos).end()
        if pos >= len(text):
            break
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, signature: frozenset[str]):
        self.text = text
        self.signature = signature
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _here(self) -> int:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return len(self.text)

    def _next(self) -> tuple[str, int]:
        if self.pos >= len(self.tokens):
            raise ParseError("unexpected end of input", len(self.text))
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _generic(self, token: str, position: int) -> str:
        target = _resolve_generic(token, self.signature)
        if target is None:
            raise UnknownConnectiveError(token, position)
        return target

    def parse(self) -> Formula:
        f = self.parse_impl()
        if self.pos < len(self.tokens):
            tok, at = self.tokens[self.pos]
            raise ParseError(f"unexpected token {tok!r}", at)
        return f

    def parse_impl(self) -> Formula:
        left = self.parse_disj()
        if self._peek() == "->":
            _, at = self._next()
            cid = self._generic("->", at)
            right = self.parse_impl()  # right-associative
            return Compound(cid, (left, right))
        return left

    def parse_disj(self) -> Formula:
        left = self.parse_conj()
        while self._peek() in ("|", "or_l"):
            tok, at = self._next()
            cid = self._keyword_or_generic(tok, at)
            left = Compound(cid, (left, self.parse_conj()))
        return left

    def parse_conj(self) -> Formula:
        left = self.parse_prefix()
        while self._peek() in ("&", "and_l", "o1", "o2"):
            tok, at = self._next()
            cid = self._keyword_or_generic(tok, at)
            left = Compound(cid, (left, self.parse_prefix()))
        return left

    def _keyword_or_generic(self, token: str, position: int) -> str:
        if token in _KEYWORD_TO_ID:
            cid = _KEYWORD_TO_ID[token]
            if cid not in self.signature:
                raise UnknownConnectiveError(token, position)
            return cid
        return self._generic(token, position)

    def parse_prefix(self) -> Formula:
        tok = self._peek()
        if tok == "~":
            _, at = self._next()
            cid = self._generic("~", at)
            return Compound(cid, (self.parse_prefix(),))
        if tok in ("neg_h", "neg_b", "neg_p", "neg_dp", "box", "dia"):
            token, at = self._next()
            cid = self._keyword_or_generic(token, at)
            return Compound(cid, (self.parse_prefix(),))
        return self.parse_primary()

    def parse_primary(self) -> Formula:
        tok, at = self._next()
        if tok == "(":
            f = self.parse_impl()
            if self._peek() != ")":
                raise ParseError("expected ')'", self._here())
            self._next()
            return f
        if tok in _CONSTANT_TOKENS:
            return Constant(_CONSTANT_TOKENS[tok])
        if tok in _KEYWORD_TO_ID or not _ATOM_RE.match(tok):
            raise ParseError(f"unexpected token {tok!r}", at)
        return Atom(tok)


def parse_formula(text: str, signature) -> Formula:
    """Parse ``text`` over the given signature (an iterable of connective ids)."""
    return _Parser(text, frozenset(signature)).parse()


# ---------------------------------------------------------------------------
# Rendering

_PREC_IMPL, _PREC_DISJ, _PREC_CONJ, _PREC_PREFIX = 1, 2, 3, 4
_LEVEL_BY_TOKEN = {"->": _PREC_IMPL, "|": _PREC_DISJ, "or_l": _PREC_DISJ,
                   "&": _PREC_CONJ, "and_l": _PREC_CONJ, "o1": _PREC_CONJ,
                   "o2": _PREC_CONJ}


def _level(f: Formula, tokens: Mapping[str, str]) -> int:
    if not isinstance(f, Compound):
        return 5
    tok = tokens.get(f.connective)
    if tok is None:
        raise RenderError(f"no surface syntax for {f.connective!r}")
    if CONNECTIVES[f.connective] == 1:
        return _PREC_PREFIX
    return _LEVEL_BY_TOKEN[tok]


def _render(f: Formula, tokens: Mapping[str, str]) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Constant):
        return _CONSTANT_SYMBOL[f.kind]
    tok = tokens.get(f.connective)
    if tok is None:
        raise RenderError(f"no surface syntax for {f.connective!r}")
    if CONNECTIVES[f.connective] == 1:
        inner = _render(f.args[0], tokens)
        if _level(f.args[0], tokens) < _PREC_PREFIX:
            inner = f"({inner})"
        return f"~{inner}" if tok == "~" else f"{tok} {inner}"
    lvl = _LEVEL_BY_TOKEN[tok]
    left, right = f.args
    ls = _render(left, tokens)
    rs = _render(right, tokens)
    # implication associates right, the conjunction/disjunction levels left
    if _level(left, tokens) < lvl or (_level(left, tokens) == lvl and lvl == _PREC_IMPL):
        ls = f"({ls})"
    if _level(right, tokens) < lvl or (_level(right, tokens) == lvl and lvl != _PREC_IMPL):
        rs = f"({rs})"
    return f"{ls} {tok} {rs}"


def render(f: Formula, signature=None) -> str:
    """Render ``f`` so that it reparses to itself under the same signature.

    Without an explicit signature the connectives occurring in ``f`` are
    used, which gives the same tokens whenever ``f`` comes from a single
    logic's signature.
    """
    sig = frozenset(signature) if signature is not None else connectives_of(f)
    return _render(f, _token_map(sig))


# ---------------------------------------------------------------------------
# Exhaustive enumeration (used by sweeps and tests)

def iter_formulas(signature, atom_names: Sequence[str], max_connectives: int) -> Iterator[Formula]:
    """Yield every formula over ``atom_names`` with at most ``max_connectives``
    connective occurrences from ``signature``, in a deterministic order."""
    sig = sorted(frozenset(signature))
    unary = [c for c in sig if CONNECTIVES[c] == 1]
    binary = [c for c in sig if CONNECTIVES[c] == 2]
    by_count: list[list[Formula]] = [[Atom(a) for a in atom_names]]
    yield from by_count[0]
    for n in range(1, max_connectives + 1):
        layer: list[Formula] = []
        for c in unary:
            layer.extend(Compound(c, (g,)) for g in by_count[n - 1])
        for c in binary:
            for k in range(n):
                layer.extend(
                    Compound(c, (g, h))
                    for g in by_count[k]
                    for h in by_count[n - 1 - k]
                )
        by_count.append(layer)
        yield from layer
