"""Proof synthesis by induction on the total score of a disjunct list.

A goal is a nonempty list ``A1, ..., An`` read as ``A1 | ... | An``.  While
some item has positive score, the lowest-indexed such item is decomposed:

* ``B | C``        recurse on ``B, C, *rest``, then ``assoc``
* ``!!B``          recurse on ``B, *rest``, then ``dneg``
* ``!(B | C)``     recurse on ``!B, *rest`` and ``!C, *rest``, then ``demorgan``

followed by one ``perm`` step putting the item back in its original place.
When every item is a literal the goal closes with an axiom instance on the
first complementary pair (plus a ``perm``), or else the literals themselves
describe a falsifying assignment.

Each recursive goal has strictly smaller total score, which is what makes the
procedure terminate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .calculus import Assoc, AxiomA, DeMorgan, DNeg, Perm, Proof, ProofStep
from .formula import Atom, EmptyDisjunction, Formula, Not, Or, join, letters, score
from .semantics import Falsified, TruthValue, is_true

__all__ = ["Proved", "Refuted", "SynthesisResult", "measure", "prove", "prove_goal"]

Goal = Sequence[Formula]
RecurseHook = Callable[[tuple, tuple], None]


@dataclass(frozen=True)
class Proved:
    proof: Proof


@dataclass(frozen=True)
class Refuted:
    witness: dict[str, TruthValue]


SynthesisResult = Union[Proved, Refuted]


class _Refutation(Exception):
    def __init__(self, witness):
        self.witness = witness


def measure(goal: Goal) -> int:
    """Total score of the goal's items; the induction measure."""
    return sum(score(item) for item in goal)


def _restore(order, n):
    # fronted[m] == original[order[m]]; sigma maps original positions back into it
    sigma = [0] * n
    for m, k in enumerate(order):
        sigma[k] = m + 1
    return tuple(sigma)


class _Builder:
    def __init__(self, on_recurse):
        self.steps: list[ProofStep] = []
        self.on_recurse = on_recurse

    def emit(self, formula, just):
        self.steps.append(ProofStep(formula, just))
        return len(self.steps)

    def permute_back(self, fronted, order, premise, goal):
        sigma = _restore(order, len(goal))
        if sigma == tuple(range(1, len(goal) + 1)):
            return premise
        return self.emit(join(goal), Perm(tuple(fronted), sigma, premise))

    def recurse(self, parent, child):
        if self.on_recurse is not None:
            self.on_recurse(parent, child)
        return self.derive(child)

    def derive(self, goal: tuple) -> int:
        """Append a derivation of ``join(goal)``; return its step index."""
        i = next((k for k, item in enumerate(goal) if score(item) > 0), None)
        if i is None:
            return self.close(goal)

        item = goal[i]
        rest = goal[:i] + goal[i + 1:]
        if isinstance(item, Or):
            b, c = item.left, item.right
            p = self.recurse(goal, (b, c, *rest))
            top = self.emit(join([item, *rest]), Assoc(b, c, rest, p))
        elif isinstance(item.inner, Not):
            b = item.inner.inner
            p = self.recurse(goal, (b, *rest))
            top = self.emit(join([item, *rest]), DNeg(b, rest, p))
        else:
            b, c = item.inner.left, item.inner.right
            left = self.recurse(goal, (Not(b), *rest))
            right = self.recurse(goal, (Not(c), *rest))
            top = self.emit(join([item, *rest]), DeMorgan(b, c, rest, left, right))

        order = [i] + [k for k in range(len(goal)) if k != i]
        return self.permute_back((item, *rest), order, top, goal)

    def close(self, goal: tuple) -> int:
        n = len(goal)
        for i, item in enumerate(goal):
            if not isinstance(item, Atom):
                continue
            for j, other in enumerate(goal):
                if isinstance(other, Not) and other.inner == item:
                    rest = tuple(g for k, g in enumerate(goal) if k not in (i, j))
                    top = self.emit(join([item, other, *rest]), AxiomA(item, rest))
                    order = [i, j] + [k for k in range(n) if k not in (i, j)]
                    return self.permute_back((item, other, *rest), order, top, goal)

        witness = {}
        for item in goal:
            if isinstance(item, Atom):
                witness[item.name] = TruthValue.F
            else:
                witness[item.inner.name] = TruthValue.V
        raise _Refutation(witness)


def prove_goal(goal: Goal, on_recurse: Optional[RecurseHook] = None) -> SynthesisResult:
    """Derive ``join(goal)``, or return an assignment falsifying every item.

    ``on_recurse(parent, child)`` is called before each recursive subgoal is
    attempted; it exists for instrumentation and may raise to abort.
    """
    goal = tuple(goal)
    if not goal:
        raise EmptyDisjunction("a goal needs at least one disjunct")
    builder = _Builder(on_recurse)
    try:
        builder.derive(goal)
    except _Refutation as r:
        # letters dropped on the way down do not affect falsity of the parent
        witness = {name: TruthValue.F for name in letters(join(goal))}
        witness.update(r.witness)
        return Refuted(witness)
    return Proved(Proof(tuple(builder.steps)))


def prove(f: Formula, on_recurse: Optional[RecurseHook] = None) -> SynthesisResult:
    """Proof of ``f`` if it is a tautology, else its first falsifying row.

    Raises TooManyLetters when ``f`` has more letters than truth tables allow.
    """
    verdict = is_true(f)
    if isinstance(verdict, Falsified):
        return Refuted(verdict.witness)
    return prove_goal((f,), on_recurse)
