"""Formulas over letters built with negation and disjunction.

Concrete syntax (whitespace between tokens is ignored)::

    formula  := impl
    impl     := disj ( "->" impl )?      A -> B  is read as  !A | B
    disj     := neg ( "|" disj )?        right-associated
    neg      := "!" neg | atom
    atom     := LETTER | "(" formula ")"
    LETTER   := [A-Z][A-Za-z0-9_]*

``¬``, ``∨`` and ``⇒`` are accepted on input as aliases of ``!``, ``|`` and ``->``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

__all__ = [
    "Atom",
    "Not",
    "Or",
    "Formula",
    "FormulaSyntaxError",
    "EmptyInput",
    "EmptyDisjunction",
    "parse",
    "render",
    "letters",
    "score",
    "spine",
    "join",
    "is_literal",
    "subformulas",
]

LETTER_RE = re.compile(r"[A-Z][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not LETTER_RE.fullmatch(self.name):
            raise ValueError(f"invalid letter name: {self.name!r}")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Not:
    inner: "Formula"

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self):
        return render(self)


Formula = Union[Atom, Not, Or]


class FormulaSyntaxError(ValueError):
    """Malformed formula text. ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
        self.text = text

    def diagnostic(self) -> str:
        """Two-line caret diagnostic pointing at the offending character."""
        if not self.text:
            return str(self)
        return f"{self.text}\n{' ' * self.position}^ {self.message}"


class EmptyInput(FormulaSyntaxError):
    def __init__(self, text: str = ""):
        super().__init__("empty input", 0, text)


class EmptyDisjunction(ValueError):
    pass


# ---------------------------------------------------------------- parsing

_ALIASES = {"¬": "!", "∨": "|", "⇒": "->"}
_TOKEN_RE = re.compile(r"\s*(?:(?P<letter>[A-Z][A-Za-z0-9_]*)|(?P<op>->|[!|()]|[¬∨⇒]))")
_END = "end of input"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(self._tokenize(text))
        self.pos = 0

    def _tokenize(self, text):
        i = 0
        n = len(text)
        while i < n:
            m = _TOKEN_RE.match(text, i)
            if m is None:
                j = i
                while j < n and text[j].isspace():
                    j += 1
                if j == n:
                    return
                raise FormulaSyntaxError(f"unexpected character {text[j]!r}", j, text)
            if m.group("letter"):
                yield ("LETTER", m.group("letter"), m.start("letter"))
            else:
                op = m.group("op")
                yield (_ALIASES.get(op, op), op, m.start("op"))
            i = m.end()

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return (_END, _END, len(self.text))

    def advance(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, expected):
        kind, lexeme, at = self.peek()
        found = _END if kind == _END else repr(lexeme)
        raise FormulaSyntaxError(f"expected {expected}, found {found}", at, self.text)

    def parse(self) -> Formula:
        if not self.tokens:
            raise EmptyInput(self.text)
        f = self.impl()
        if self.peek()[0] != _END:
            self.fail("'|', '->' or end of input")
        return f

    def impl(self):
        left = self.disj()
        if self.peek()[0] == "->":
            self.advance()
            return Or(Not(left), self.impl())
        return left

    def disj(self):
        left = self.neg()
        if self.peek()[0] == "|":
            self.advance()
            return Or(left, self.disj())
        return left

    def neg(self):
        depth = 0
        while self.peek()[0] == "!":
            self.advance()
            depth += 1
        f = self.atom()
        for _ in range(depth):
            f = Not(f)
        return f

    def atom(self):
        kind, lexeme, _ = self.peek()
        if kind == "LETTER":
            self.advance()
            return Atom(lexeme)
        if kind == "(":
            self.advance()
            f = self.impl()
            if self.peek()[0] != ")":
                self.fail("')'")
            self.advance()
            return f
        self.fail("a letter, '!' or '('")


def parse(text: str) -> Formula:
    """Parse formula text; ``|`` chains associate to the right.

    >>> parse("!(L|M)|M|L")
    Or(left=Not(inner=Or(left=Atom(name='L'), right=Atom(name='M'))), right=Or(left=Atom(name='M'), right=Atom(name='L')))
    """
    return _Parser(text).parse()


# -------------------------------------------------------------- rendering

def render(f: Formula, unicode: bool = False) -> str:
    """Canonical text for ``f`` with the fewest parentheses that still round-trip."""
    neg, bar = ("¬", " ∨ ") if unicode else ("!", "|")

    def go(g, wrap_or):
        if isinstance(g, Atom):
            return g.name
        if isinstance(g, Not):
            return neg + go(g.inner, True)
        s = go(g.left, True) + bar + go(g.right, False)
        return f"({s})" if wrap_or else s

    return go(f, False)


# ------------------------------------------------------------- structure

def letters(f: Formula) -> list[str]:
    """Distinct letter names of ``f``, sorted ascending."""
    return sorted({g.name for g in subformulas(f) if isinstance(g, Atom)})


def subformulas(f: Formula) -> Iterator[Formula]:
    """All nodes of ``f`` in pre-order (with repetition)."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Not):
            stack.append(g.inner)
        elif isinstance(g, Or):
            stack.append(g.right)
            stack.append(g.left)


def score(f: Formula) -> int:
    """One point per disjunction, one per negation not sitting directly on a letter."""
    points = 0
    for g in subformulas(f):
        if isinstance(g, Or):
            points += 1
        elif isinstance(g, Not) and not isinstance(g.inner, Atom):
            points += 1
    return points


def is_literal(f: Formula) -> bool:
    return isinstance(f, Atom) or (isinstance(f, Not) and isinstance(f.inner, Atom))


def spine(f: Formula) -> list[Formula]:
    """Maximal right-spine reading of ``f`` as ``A1 | (A2 | (... | An))``."""
    items = []
    while isinstance(f, Or):
        items.append(f.left)
        f = f.right
    items.append(f)
    return items


def join(ds: Sequence[Formula]) -> Formula:
    """Right-associated disjunction of a nonempty list."""
    if not ds:
        raise EmptyDisjunction("cannot join an empty disjunct list")
    f = ds[-1]
    for g in reversed(ds[:-1]):
        f = Or(g, f)
    return f
