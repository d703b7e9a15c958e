"""Truth tables and the tautology test.

Rows of a table are listed with letters sorted ascending, ``V`` before ``F``,
and the leftmost letter varying slowest (VV, VF, FV, FF for two letters).
Evaluation works on whole truth-table columns at once: each letter's column is
packed into an int bitmask, bit ``r`` holding the value on row ``r``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .formula import Atom, EmptyDisjunction, Formula, Not, Or, join, letters, render

__all__ = [
    "TruthValue",
    "V",
    "F",
    "Assignment",
    "TruthTable",
    "Tautology",
    "Falsified",
    "Verdict",
    "UnboundLetter",
    "TooManyLetters",
    "MAX_LETTERS",
    "evaluate",
    "truth_table",
    "is_true",
    "is_true_list",
    "format_assignment",
    "format_table",
]

MAX_LETTERS = 24


class TruthValue(enum.Enum):
    V = True
    F = False

    def __bool__(self):
        return self.value

    def __invert__(self):
        return TruthValue(not self.value)

    def __str__(self):
        return self.name


V = TruthValue.V
F = TruthValue.F

# letter name -> truth value; plain bools are accepted wherever one is read
Assignment = Mapping[str, Union[TruthValue, bool]]


class UnboundLetter(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"letter {self.name} has no truth value"


class TooManyLetters(ValueError):
    def __init__(self, count: int):
        super().__init__(
            f"formula has {count} letters; truth tables are limited to {MAX_LETTERS}"
        )
        self.count = count


@dataclass(frozen=True)
class Tautology:
    def __str__(self):
        return "tautology"


@dataclass(frozen=True)
class Falsified:
    witness: dict[str, TruthValue]

    def __str__(self):
        return f"counterexample: {format_assignment(self.witness)}"


Verdict = Union[Tautology, Falsified]


@dataclass(frozen=True)
class TruthTable:
    letters: tuple[str, ...]
    formula: Formula
    rows: tuple[tuple[tuple[TruthValue, ...], TruthValue], ...]

    @property
    def column(self) -> tuple[TruthValue, ...]:
        """The formula's column, top to bottom."""
        return tuple(value for _, value in self.rows)

    def assignment(self, row: int) -> dict[str, TruthValue]:
        return dict(zip(self.letters, self.rows[row][0]))


def evaluate(f: Formula, a: Assignment) -> TruthValue:
    """Truth value of ``f`` under assignment ``a``."""

    def go(g):
        if isinstance(g, Atom):
            try:
                return bool(a[g.name])
            except KeyError:
                raise UnboundLetter(g.name) from None
        if isinstance(g, Not):
            return not go(g.inner)
        return go(g.left) or go(g.right)

    return TruthValue(go(f))


def _column(f: Formula, names: Sequence[str]) -> int:
    # letter i is true on row r iff bit (k-1-i) of r is clear
    k = len(names)
    nrows = 1 << k
    full = (1 << nrows) - 1
    cols = {}
    for i, name in enumerate(names):
        period = 1 << (k - 1 - i)
        mask = (1 << period) - 1
        width = 2 * period
        while width < nrows:
            mask |= mask << width
            width *= 2
        cols[name] = mask

    def go(g):
        if isinstance(g, Atom):
            return cols[g.name]
        if isinstance(g, Not):
            return full & ~go(g.inner)
        return go(g.left) | go(g.right)

    return go(f)


def _letters_checked(f: Formula) -> list[str]:
    names = letters(f)
    if len(names) > MAX_LETTERS:
        raise TooManyLetters(len(names))
    return names


def _row_values(r: int, k: int) -> tuple[TruthValue, ...]:
    return tuple(TruthValue(not (r >> (k - 1 - i)) & 1) for i in range(k))


def truth_table(f: Formula) -> TruthTable:
    names = _letters_checked(f)
    k = len(names)
    col = _column(f, names)
    rows = tuple(
        (_row_values(r, k), TruthValue(bool((col >> r) & 1))) for r in range(1 << k)
    )
    return TruthTable(tuple(names), f, rows)


def is_true(f: Formula) -> Verdict:
    """Tautology, or the first falsifying row of the truth table."""
    names = _letters_checked(f)
    k = len(names)
    full = (1 << (1 << k)) - 1
    falsifying = full & ~_column(f, names)
    if not falsifying:
        return Tautology()
    r = (falsifying & -falsifying).bit_length() - 1
    return Falsified(dict(zip(names, _row_values(r, k))))


def is_true_list(ds: Sequence[Formula]) -> Verdict:
    if not ds:
        raise EmptyDisjunction("an empty disjunct list has no truth table")
    return is_true(join(ds))


def format_assignment(a: Assignment) -> str:
    """``L=F M=V`` with letters sorted."""
    return " ".join(f"{name}={TruthValue(bool(a[name]))}" for name in sorted(a))


def format_table(table: TruthTable, unicode: bool = False) -> str:
    header = list(table.letters) + [render(table.formula, unicode=unicode)]
    widths = [len(h) for h in header]
    lines = [" | ".join(h.center(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("-+-".join("-" * w for w in widths))
    for values, result in table.rows:
        cells = [str(v) for v in values] + [str(result)]
        lines.append(" | ".join(c.center(w) for c, w in zip(cells, widths)).rstrip())
    return "\n".join(lines)
