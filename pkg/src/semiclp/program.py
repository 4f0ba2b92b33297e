"""Clause-language AST, parser and pretty-printer.

Surface syntax::

    solution(a) :- path(a,b).        % clause with one body atom
    bicycle(a)  :- 1, not rain(a).   % semiring constant and negated atom
    p.                               % empty body

Identifiers match ``[a-z][A-Za-z0-9_]*``; the only variables-free fragment is
supported (constants as arguments, no variables or function symbols).
Semiring literals in bodies are read by the active semiring: numerals, ``inf``,
``true``/``false``, fractions ``p/q`` and ``{a,b}`` sets.  ``%`` starts a
comment.  Programs are multisets: duplicate clauses are retained because the
additive operator need not be idempotent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Union

from .errors import ParseError, ValueNotInCarrier
from .semirings import SemiringSpec, Value

_IDENT = re.compile(r"[a-z][A-Za-z0-9_]*")


@dataclass(frozen=True, order=True)
class Atom:
    predicate: str
    args: tuple = ()

    def __str__(self):
        if not self.args:
            return self.predicate
        return f"{self.predicate}({','.join(self.args)})"


@dataclass(frozen=True)
class PositiveAtom:
    atom: Atom


@dataclass(frozen=True)
class NegatedAtom:
    atom: Atom


@dataclass(frozen=True)
class Constant:
    value: Value


GeneralizedAtom = Union[PositiveAtom, NegatedAtom, Constant]


@dataclass(frozen=True)
class Clause:
    head: Atom
    body: tuple = ()


@dataclass(frozen=True)
class Program:
    clauses: tuple
    semiring: SemiringSpec = field(compare=False)

    @cached_property
    def atoms(self) -> tuple:
        """All atoms occurring anywhere (heads and bodies), sorted."""
        seen = set()
        for clause in self.clauses:
            seen.add(clause.head)
            for g in clause.body:
                if isinstance(g, (PositiveAtom, NegatedAtom)):
                    seen.add(g.atom)
        return tuple(sorted(seen))

    @cached_property
    def is_positive(self) -> bool:
        return not any(
            isinstance(g, NegatedAtom) for clause in self.clauses for g in clause.body
        )

    @cached_property
    def constants(self) -> tuple:
        out = []
        for clause in self.clauses:
            for g in clause.body:
                if isinstance(g, Constant) and g.value not in out:
                    out.append(g.value)
        return tuple(out)

    def clauses_for(self, head: Atom) -> tuple:
        """Defining clauses of ``head`` in document order (duplicates kept)."""
        return tuple(c for c in self.clauses if c.head == head)

    def dedup(self) -> "Program":
        seen, kept = set(), []
        for clause in self.clauses:
            if clause not in seen:
                seen.add(clause)
                kept.append(clause)
        return Program(tuple(kept), self.semiring)


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>%[^\n]*)
  | (?P<arrow>:-)
  | (?P<set>\{[^}]*\})
  | (?P<number>-?\d+(?:/\d+)?)
  | (?P<neginf>-inf)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>[(),.])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError(line, pos - line_start + 1, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        tok_text = m.group()
        if kind not in ("ws", "comment"):
            tokens.append(_Token(kind, tok_text, line, m.start() - line_start + 1))
        newlines = tok_text.count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + tok_text.rfind("\n") + 1
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], spec: SemiringSpec):
        self.tokens = tokens
        self.spec = spec
        self.pos = 0

    def _peek(self) -> Optional[_Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _error(self, message: str, token: Optional[_Token] = None):
        token = token or self._peek()
        if token is None:
            last = self.tokens[-1] if self.tokens else _Token("", "", 1, 1)
            raise ParseError(last.line, last.col + len(last.text), message)
        raise ParseError(token.line, token.col, message)

    def _expect(self, kind: str, text: Optional[str] = None) -> _Token:
        token = self._peek()
        if token is None or token.kind != kind or (text is not None and token.text != text):
            want = text or kind
            self._error(f"expected {want!r}")
        self.pos += 1
        return token

    def _parse_literal_token(self, token: _Token) -> Constant:
        try:
            return Constant(self.spec.parse_literal(token.text))
        except ValueNotInCarrier:
            raise ParseError(
                token.line,
                token.col,
                f"literal {token.text!r} is not in the carrier of semiring '{self.spec.name}'",
            )

    def _parse_atom(self) -> Atom:
        token = self._expect("ident")
        if not _IDENT.fullmatch(token.text):
            self._error(f"identifier must match [a-z][A-Za-z0-9_]*, got {token.text!r}", token)
        args = []
        nxt = self._peek()
        if nxt is not None and nxt.kind == "punct" and nxt.text == "(":
            self.pos += 1
            while True:
                arg = self._expect("ident")
                if not _IDENT.fullmatch(arg.text):
                    self._error(f"constant must match [a-z][A-Za-z0-9_]*, got {arg.text!r}", arg)
                args.append(arg.text)
                sep = self._expect("punct")
                if sep.text == ")":
                    break
                if sep.text != ",":
                    self._error("expected ',' or ')'", sep)
        return Atom(token.text, tuple(args))

    def _parse_gatom(self) -> GeneralizedAtom:
        token = self._peek()
        if token is None:
            self._error("expected a body item")
        if token.kind == "ident" and token.text == "not":
            self.pos += 1
            nxt = self._peek()
            if nxt is None or nxt.kind != "ident" or nxt.text in self.spec.literal_words:
                self._error("negation applies only to atoms")
            return NegatedAtom(self._parse_atom())
        if token.kind in ("number", "neginf", "set"):
            self.pos += 1
            return self._parse_literal_token(token)
        if token.kind == "ident" and token.text in self.spec.literal_words:
            self.pos += 1
            return self._parse_literal_token(token)
        if token.kind == "ident":
            return PositiveAtom(self._parse_atom())
        self._error(f"unexpected token {token.text!r}")

    def _parse_clause(self) -> Clause:
        head_token = self._peek()
        if head_token is None:
            self._error("expected a clause")
        if head_token.kind != "ident" or head_token.text in self.spec.literal_words:
            self._error("clause head must be an atom")
        head = self._parse_atom()
        body = []
        token = self._peek()
        if token is not None and token.kind == "arrow":
            self.pos += 1
            while True:
                body.append(self._parse_gatom())
                sep = self._peek()
                if sep is None or sep.kind != "punct" or sep.text not in (",", "."):
                    self._error("expected ',' or '.'", sep)
                self.pos += 1
                if sep.text == ".":
                    break
        else:
            self._expect("punct", ".")
        return Clause(head, tuple(body))

    def parse_program(self) -> tuple:
        clauses = []
        while self._peek() is not None:
            clauses.append(self._parse_clause())
        return tuple(clauses)


def parse_program(text: str, semiring: SemiringSpec, dedup: bool = False) -> Program:
    tokens = _tokenize(text)
    program = Program(_Parser(tokens, semiring).parse_program(), semiring)
    return program.dedup() if dedup else program


# ---------------------------------------------------------------------------
# pretty-printer


def format_gatom(spec: SemiringSpec, g: GeneralizedAtom) -> str:
    if isinstance(g, PositiveAtom):
        return str(g.atom)
    if isinstance(g, NegatedAtom):
        return f"not {g.atom}"
    return spec.format_value(g.value)


def format_clause(spec: SemiringSpec, clause: Clause) -> str:
    if not clause.body:
        return f"{clause.head}."
    body = ", ".join(format_gatom(spec, g) for g in clause.body)
    return f"{clause.head} :- {body}."


def format_program(program: Program) -> str:
    return "\n".join(format_clause(program.semiring, c) for c in program.clauses) + (
        "\n" if program.clauses else ""
    )


def parse_atom_text(text: str) -> Atom:
    """Parse a standalone atom such as ``path(a,b)`` (used by serializations)."""
    m = re.fullmatch(r"([a-z][A-Za-z0-9_]*)(?:\(([^)]*)\))?", text.strip())
    if not m:
        raise ParseError(1, 1, f"bad atom {text!r}")
    args = tuple(s.strip() for s in m.group(2).split(",")) if m.group(2) else ()
    for a in args:
        if not _IDENT.fullmatch(a):
            raise ParseError(1, 1, f"bad constant {a!r} in atom {text!r}")
    return Atom(m.group(1), args)
