"""Concrete text syntax for formulas.

Grammar (ASCII, recursive descent):

    formula := iff
    iff     := imp ("<->" imp)*
    imp     := or ("->" imp)?
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "~" unary | "forall" VAR "." unary | "exists" VAR "." unary | atom
    atom    := "false" | "(" formula ")" | PRED suffix? "(" term ("," term)* ")"
    suffix  := "^k" | "^p"

`->` is right-associative; `<->`, `|`, `&` associate left.  A quantifier body
is a unary, so `forall x.(P(x) -> Q(x))` needs its parentheses.  Identifiers
match [A-Za-z][A-Za-z0-9_]*; an identifier in term position is a variable when
it is bound by an enclosing quantifier or is one of the conventional free
variables x, y, z, u, v, w, and a constant otherwise.

In MIS mode every predicate must carry a `^k` or `^p` sort suffix.  Occurrence
indexes are displayed as `#n` after the suffix but are never accepted on
input; they are assigned by the controller.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityMismatch, FormulaSyntaxError, TypeSuffixRequired
from .syntax import (
    And,
    Atom,
    Bottom,
    Const,
    Exists,
    Forall,
    Formula,
    Iff,
    Imp,
    Not,
    Or,
    Term,
    Var,
)

FREE_VARIABLE_NAMES = frozenset("xyzuvw")

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<iff><->)
  | (?P<imp>->)
  | (?P<suffix>\^[kp])
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<punct>[~&|().,])
""", re.VERBOSE)

KEYWORDS = {"forall", "exists", "false"}


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    start: int
    end: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", (pos, pos + 1))
        pos = m.end()
        kind = m.lastgroup
        if kind == "ws":
            continue
        value = m.group()
        if kind == "ident" and value in KEYWORDS:
            kind = value
        out.append(Token(kind, value, m.start(), m.end()))
    out.append(Token("eof", "", len(text), len(text)))
    return out


class _Parser:
    def __init__(self, text: str, mode: str):
        if mode not in ("plain", "mis"):
            raise ValueError(f"unknown parse mode {mode!r}")
        self.text = text
        self.mode = mode
        self.tokens = tokenize(text)
        self.i = 0
        self.arities: dict[str, int] = {}

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str | None = None, value: str | None = None,
             what: str | None = None) -> Token:
        tok = self.tokens[self.i]
        expected = what or (repr(value) if value is not None else kind)
        if kind is not None and tok.kind != kind:
            raise FormulaSyntaxError(f"expected {expected}, found {tok.value or 'end of input'}",
                                     (tok.start, tok.end))
        if value is not None and tok.value != value:
            raise FormulaSyntaxError(f"expected {expected}, found {tok.value or 'end of input'}",
                                     (tok.start, tok.end))
        self.i += 1
        return tok

    def parse(self) -> Formula:
        f = self.formula(frozenset())
        tok = self.peek()
        if tok.kind != "eof":
            raise FormulaSyntaxError(f"unexpected trailing input {tok.value!r}",
                                     (tok.start, tok.end))
        return f

    def formula(self, bound: frozenset[str]) -> Formula:
        f = self.imp(bound)
        while self.peek().kind == "iff":
            self.take("iff")
            f = Iff(f, self.imp(bound))
        return f

    def imp(self, bound: frozenset[str]) -> Formula:
        left = self.or_(bound)
        if self.peek().kind == "imp":
            self.take("imp")
            return Imp(left, self.imp(bound))
        return left

    def or_(self, bound: frozenset[str]) -> Formula:
        f = self.and_(bound)
        while self.peek().kind == "punct" and self.peek().value == "|":
            self.take("punct")
            f = Or(f, self.and_(bound))
        return f

    def and_(self, bound: frozenset[str]) -> Formula:
        f = self.unary(bound)
        while self.peek().kind == "punct" and self.peek().value == "&":
            self.take("punct")
            f = And(f, self.unary(bound))
        return f

    def unary(self, bound: frozenset[str]) -> Formula:
        tok = self.peek()
        if tok.kind == "punct" and tok.value == "~":
            self.take("punct")
            return Not(self.unary(bound))
        if tok.kind in ("forall", "exists"):
            self.take(tok.kind)
            var = self.take("ident", what="a variable name")
            self.take("punct", ".")
            body = self.unary(bound | {var.value})
            cls = Forall if tok.kind == "forall" else Exists
            return cls(Var(var.value), body)
        return self.atom(bound)

    def atom(self, bound: frozenset[str]) -> Formula:
        tok = self.peek()
        if tok.kind == "false":
            self.take("false")
            return Bottom()
        if tok.kind == "punct" and tok.value == "(":
            self.take("punct")
            f = self.formula(bound)
            self.take("punct", ")")
            return f
        if tok.kind != "ident":
            raise FormulaSyntaxError(f"expected a formula, found {tok.value or 'end of input'}",
                                     (tok.start, tok.end))
        pred = self.take("ident")
        sort = None
        if self.peek().kind == "suffix":
            if self.mode == "plain":
                s = self.peek()
                raise FormulaSyntaxError("type suffixes are only used in MIS mode",
                                         (s.start, s.end))
            sort = self.take("suffix").value[1]
        elif self.mode == "mis":
            raise TypeSuffixRequired(f"predicate {pred.value} needs a ^k or ^p suffix",
                                     (pred.start, pred.end))
        self.take("punct", "(")
        args = [self.term(bound)]
        while self.peek().kind == "punct" and self.peek().value == ",":
            self.take("punct")
            args.append(self.term(bound))
        self.take("punct", ")")
        seen = self.arities.setdefault(pred.value, len(args))
        if seen != len(args):
            raise ArityMismatch(f"{pred.value} used with {len(args)} arguments after {seen}")
        return Atom(pred.value, tuple(args), sort=sort)

    def term(self, bound: frozenset[str]) -> Term:
        tok = self.take("ident", what="a term")
        if tok.value in bound or tok.value in FREE_VARIABLE_NAMES:
            return Var(tok.value)
        return Const(tok.value)


def parse(text: str, mode: str = "plain") -> Formula:
    """Parse one formula.  mode: "plain" or "mis"."""
    if not text.strip():
        raise FormulaSyntaxError("empty input", (0, len(text)))
    return _Parser(text, mode).parse()


# rendering levels mirror the grammar: iff=0 imp=1 or=2 and=3 unary=4
_LEVEL = {Iff: 0, Imp: 1, Or: 2, And: 3, Not: 4, Forall: 4, Exists: 4,
          Atom: 5, Bottom: 5}


def render(f: Formula, with_occurrence_indexes: bool = True) -> str:
    """Render with minimal parentheses; parse(render(f)) is f."""
    return _render(f, 0, with_occurrence_indexes)


def _render(f: Formula, need: int, occ: bool) -> str:
    level = _LEVEL[type(f)]
    if isinstance(f, Bottom):
        s = "false"
    elif isinstance(f, Atom):
        name = f.pred
        if f.sort:
            name += f"^{f.sort}"
        if occ and f.occ is not None:
            name += f"#{f.occ}"
        s = name + "(" + ", ".join(repr(a) for a in f.args) + ")"
    elif isinstance(f, Not):
        s = "~" + _render(f.body, 4, occ)
    elif isinstance(f, (Forall, Exists)):
        kw = "forall" if isinstance(f, Forall) else "exists"
        s = f"{kw} {f.var.name}.{_render(f.body, 4, occ)}"
    elif isinstance(f, And):
        s = _render(f.left, 3, occ) + " & " + _render(f.right, 4, occ)
    elif isinstance(f, Or):
        s = _render(f.left, 2, occ) + " | " + _render(f.right, 3, occ)
    elif isinstance(f, Imp):
        s = _render(f.left, 2, occ) + " -> " + _render(f.right, 1, occ)
    elif isinstance(f, Iff):
        s = _render(f.left, 0, occ) + " <-> " + _render(f.right, 1, occ)
    else:
        raise TypeError(f"not a formula: {f!r}")
    if level < need:
        return "(" + s + ")"
    return s
