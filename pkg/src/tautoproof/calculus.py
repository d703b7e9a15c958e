"""Proof objects for the five-schema calculus and their checker.

The schemas, with ``*rest`` a possibly empty right-associated tail::

    axiom      A | !A | *rest
    perm       A1 | ... | An          =>  A_s(1) | ... | A_s(n)
    assoc      A | (B | *rest)        =>  (A | B) | *rest
    dneg       A | *rest              =>  !!A | *rest
    demorgan   !A | *rest, !B | *rest =>  !(A | B) | *rest

Every step carries its full instantiation (lists, permutation, premise
indices), so checking is a linear pass with no search.  Step and premise
indices are 1-based throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence, Union

from .formula import Formula, FormulaSyntaxError, Not, Or, join, parse, render

__all__ = [
    "AxiomA",
    "Perm",
    "Assoc",
    "DNeg",
    "DeMorgan",
    "Justification",
    "ProofStep",
    "Proof",
    "VerifiedProof",
    "StepError",
    "ForwardReference",
    "PremiseMismatch",
    "BadPermutation",
    "ConclusionMismatch",
    "InvalidProof",
    "EmptyProof",
    "ProofFormatError",
    "conclusion_of",
    "check",
    "verify",
    "proved_formula",
    "proof_to_json",
    "proof_from_json",
    "dumps",
    "loads",
    "format_proof",
]


def _check_index(name, value):
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive step index, got {value!r}")


def _freeze(obj, *names):
    for name in names:
        object.__setattr__(obj, name, tuple(getattr(obj, name)))


@dataclass(frozen=True)
class AxiomA:
    a: Formula
    rest: tuple[Formula, ...] = ()

    premises = ()

    def __post_init__(self):
        _freeze(self, "rest")


@dataclass(frozen=True)
class Perm:
    items: tuple[Formula, ...]
    sigma: tuple[int, ...]
    premise: int

    def __post_init__(self):
        _freeze(self, "items", "sigma")
        if not self.items:
            raise ValueError("perm needs at least one disjunct")
        _check_index("premise", self.premise)

    @property
    def premises(self):
        return (self.premise,)


@dataclass(frozen=True)
class Assoc:
    a: Formula
    b: Formula
    rest: tuple[Formula, ...]
    premise: int

    def __post_init__(self):
        _freeze(self, "rest")
        _check_index("premise", self.premise)

    @property
    def premises(self):
        return (self.premise,)


@dataclass(frozen=True)
class DNeg:
    a: Formula
    rest: tuple[Formula, ...]
    premise: int

    def __post_init__(self):
        _freeze(self, "rest")
        _check_index("premise", self.premise)

    @property
    def premises(self):
        return (self.premise,)


@dataclass(frozen=True)
class DeMorgan:
    a: Formula
    b: Formula
    rest: tuple[Formula, ...]
    premise_left: int
    premise_right: int

    def __post_init__(self):
        _freeze(self, "rest")
        _check_index("premise_left", self.premise_left)
        _check_index("premise_right", self.premise_right)

    @property
    def premises(self):
        return (self.premise_left, self.premise_right)


Justification = Union[AxiomA, Perm, Assoc, DNeg, DeMorgan]


@dataclass(frozen=True)
class ProofStep:
    formula: Formula
    just: Justification


class EmptyProof(ValueError):
    def __init__(self):
        super().__init__("empty proof")


@dataclass(frozen=True)
class Proof:
    steps: tuple[ProofStep, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise EmptyProof()

    def __len__(self):
        return len(self.steps)

    def __iter__(self) -> Iterator[ProofStep]:
        return iter(self.steps)

    def formula(self, index: int) -> Formula:
        """Formula on line ``index`` (1-based)."""
        return self.steps[index - 1].formula

    @property
    def final(self) -> Formula:
        return self.steps[-1].formula


# ----------------------------------------------------------------- errors

class StepError(Exception):
    """A defect found on one line of a proof; ``step`` is 1-based."""

    step: int | None = None

    def at(self, step):
        self.step = step
        return self

    def _prefix(self):
        return f"step {self.step}: " if self.step is not None else ""


class ForwardReference(StepError):
    def __init__(self, step: int, premise: int):
        super().__init__(step, premise)
        self.step = step
        self.premise = premise

    def __str__(self):
        return f"{self._prefix()}premise {self.premise} does not precede the step"


class PremiseMismatch(StepError):
    def __init__(self, which: str, expected: Formula, found: Formula):
        super().__init__(which, expected, found)
        self.which = which
        self.expected = expected
        self.found = found

    def __str__(self):
        return (
            f"{self._prefix()}{self.which} premise should be {render(self.expected)}"
            f" but line has {render(self.found)}"
        )


class BadPermutation(StepError):
    def __init__(self, sigma: Sequence[int], n: int):
        super().__init__(tuple(sigma), n)
        self.sigma = tuple(sigma)
        self.n = n

    def __str__(self):
        return f"{self._prefix()}{list(self.sigma)} is not a permutation of 1..{self.n}"


class ConclusionMismatch(StepError):
    def __init__(self, step: int, expected: Formula, stated: Formula):
        super().__init__(step, expected, stated)
        self.step = step
        self.expected = expected
        self.stated = stated

    def __str__(self):
        return (
            f"{self._prefix()}conclusion mismatch: rule yields {render(self.expected)}"
            f" but line states {render(self.stated)}"
        )


class InvalidProof(ValueError):
    def __init__(self, errors: list[StepError]):
        super().__init__("; ".join(str(e) for e in errors))
        self.errors = errors


# --------------------------------------------------------------- checking

def _expect(which, expected, found):
    if expected != found:
        raise PremiseMismatch(which, expected, found)


def conclusion_of(just: Justification, lookup: Callable[[int], Formula]) -> Formula:
    """Conclusion licensed by ``just``, after matching its premises via ``lookup``.

    Raises PremiseMismatch or BadPermutation when the instance does not apply.
    """
    if isinstance(just, AxiomA):
        return join([just.a, Not(just.a), *just.rest])
    if isinstance(just, Perm):
        n = len(just.items)
        if sorted(just.sigma) != list(range(1, n + 1)):
            raise BadPermutation(just.sigma, n)
        _expect("the", join(just.items), lookup(just.premise))
        return join([just.items[s - 1] for s in just.sigma])
    if isinstance(just, Assoc):
        _expect("the", join([just.a, join([just.b, *just.rest])]), lookup(just.premise))
        return join([Or(just.a, just.b), *just.rest])
    if isinstance(just, DNeg):
        _expect("the", join([just.a, *just.rest]), lookup(just.premise))
        return join([Not(Not(just.a)), *just.rest])
    if isinstance(just, DeMorgan):
        _expect("left", join([Not(just.a), *just.rest]), lookup(just.premise_left))
        _expect("right", join([Not(just.b), *just.rest]), lookup(just.premise_right))
        return join([Not(Or(just.a, just.b)), *just.rest])
    raise TypeError(f"not a justification: {just!r}")


def check(proof: Proof) -> list[StepError]:
    """Every defect in ``proof``, in step order; empty when the proof is valid."""
    errors: list[StepError] = []
    for i, step in enumerate(proof.steps, start=1):
        forward = [j for j in step.just.premises if j >= i]
        if forward:
            errors.extend(ForwardReference(i, j) for j in forward)
            continue
        try:
            expected = conclusion_of(step.just, proof.formula)
        except StepError as e:
            errors.append(e.at(i))
            continue
        if expected != step.formula:
            errors.append(ConclusionMismatch(i, expected, step.formula))
    return errors


@dataclass(frozen=True)
class VerifiedProof:
    proof: Proof = field(repr=False)

    @property
    def formula(self) -> Formula:
        return self.proof.final


def verify(proof: Proof) -> VerifiedProof:
    """Check ``proof``; raise InvalidProof listing every defect if it fails."""
    errors = check(proof)
    if errors:
        raise InvalidProof(errors)
    return VerifiedProof(proof)


def proved_formula(vp: VerifiedProof) -> Formula:
    return vp.proof.final


# ---------------------------------------------------------- serialization

class ProofFormatError(ValueError):
    pass


def _text(f):
    return render(f)


def _just_to_json(just):
    if isinstance(just, AxiomA):
        return {"kind": "axiom", "a": _text(just.a), "rest": [_text(g) for g in just.rest]}
    if isinstance(just, Perm):
        return {
            "kind": "perm",
            "list": [_text(g) for g in just.items],
            "sigma": list(just.sigma),
            "premise": just.premise,
        }
    if isinstance(just, Assoc):
        return {
            "kind": "assoc",
            "a": _text(just.a),
            "b": _text(just.b),
            "rest": [_text(g) for g in just.rest],
            "premise": just.premise,
        }
    if isinstance(just, DNeg):
        return {
            "kind": "dneg",
            "a": _text(just.a),
            "rest": [_text(g) for g in just.rest],
            "premise": just.premise,
        }
    return {
        "kind": "demorgan",
        "a": _text(just.a),
        "b": _text(just.b),
        "rest": [_text(g) for g in just.rest],
        "premiseLeft": just.premise_left,
        "premiseRight": just.premise_right,
    }


def proof_to_json(proof: Proof) -> list[dict]:
    return [{"formula": _text(s.formula), "rule": _just_to_json(s.just)} for s in proof]


_FIELDS = {
    "axiom": ("a", "rest"),
    "perm": ("list", "sigma", "premise"),
    "assoc": ("a", "b", "rest", "premise"),
    "dneg": ("a", "rest", "premise"),
    "demorgan": ("a", "b", "rest", "premiseLeft", "premiseRight"),
}


def _step_from_json(n, obj):
    where = f"step {n}"

    def formula(value, name):
        if not isinstance(value, str):
            raise ProofFormatError(f"{where}: {name} must be formula text")
        try:
            return parse(value)
        except FormulaSyntaxError as e:
            raise ProofFormatError(f"{where}: {name}: {e}") from None

    def formulas(value, name):
        if not isinstance(value, list):
            raise ProofFormatError(f"{where}: {name} must be a list of formula texts")
        return tuple(formula(v, f"{name}[{k}]") for k, v in enumerate(value))

    def index(value, name):
        if isinstance(value, bool) or not isinstance(value, int):
            raise ProofFormatError(f"{where}: {name} must be an integer")
        if value < 1:
            raise ProofFormatError(f"{where}: {name} must be at least 1")
        return value

    if not isinstance(obj, dict) or "formula" not in obj or "rule" not in obj:
        raise ProofFormatError(f"{where}: expected an object with 'formula' and 'rule'")
    rule = obj["rule"]
    if not isinstance(rule, dict):
        raise ProofFormatError(f"{where}: rule must be an object")
    kind = rule.get("kind")
    if kind not in _FIELDS:
        raise ProofFormatError(f"{where}: unknown rule kind {kind!r}")
    missing = [k for k in _FIELDS[kind] if k not in rule]
    if missing:
        raise ProofFormatError(f"{where}: {kind} rule lacks {', '.join(missing)}")

    if kind == "axiom":
        just = AxiomA(formula(rule["a"], "a"), formulas(rule["rest"], "rest"))
    elif kind == "perm":
        items = formulas(rule["list"], "list")
        if not items:
            raise ProofFormatError(f"{where}: perm list must be nonempty")
        sigma = rule["sigma"]
        if not isinstance(sigma, list) or not all(
            isinstance(s, int) and not isinstance(s, bool) for s in sigma
        ):
            raise ProofFormatError(f"{where}: sigma must be a list of integers")
        just = Perm(items, tuple(sigma), index(rule["premise"], "premise"))
    elif kind == "assoc":
        just = Assoc(
            formula(rule["a"], "a"),
            formula(rule["b"], "b"),
            formulas(rule["rest"], "rest"),
            index(rule["premise"], "premise"),
        )
    elif kind == "dneg":
        just = DNeg(
            formula(rule["a"], "a"),
            formulas(rule["rest"], "rest"),
            index(rule["premise"], "premise"),
        )
    else:
        just = DeMorgan(
            formula(rule["a"], "a"),
            formula(rule["b"], "b"),
            formulas(rule["rest"], "rest"),
            index(rule["premiseLeft"], "premiseLeft"),
            index(rule["premiseRight"], "premiseRight"),
        )
    return ProofStep(formula(obj["formula"], "formula"), just)


def proof_from_json(data) -> Proof:
    if not isinstance(data, list):
        raise ProofFormatError("a proof must be a JSON array of steps")
    if not data:
        raise EmptyProof()
    return Proof(tuple(_step_from_json(n, obj) for n, obj in enumerate(data, start=1)))


def dumps(proof: Proof, indent: int | None = 2) -> str:
    return json.dumps(proof_to_json(proof), indent=indent, ensure_ascii=False)


def loads(text: str) -> Proof:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProofFormatError(f"not valid JSON: {e}") from None
    return proof_from_json(data)


# -------------------------------------------------------------- plain text

def _tag(just, r):
    def lst(items):
        return "[" + ", ".join(r(g) for g in items) + "]"

    if isinstance(just, AxiomA):
        return f"axiom a={r(just.a)} rest={lst(just.rest)}"
    if isinstance(just, Perm):
        sigma = ",".join(map(str, just.sigma))
        return f"perm list={lst(just.items)} sigma=({sigma}) from {just.premise}"
    if isinstance(just, Assoc):
        return f"assoc a={r(just.a)} b={r(just.b)} rest={lst(just.rest)} from {just.premise}"
    if isinstance(just, DNeg):
        return f"dneg a={r(just.a)} rest={lst(just.rest)} from {just.premise}"
    return (
        f"demorgan a={r(just.a)} b={r(just.b)} rest={lst(just.rest)}"
        f" from {just.premise_left},{just.premise_right}"
    )


def format_proof(proof: Proof, unicode: bool = False) -> str:
    """One numbered line per step: index, formula, rule tag. Not re-parseable."""

    def r(f):
        return render(f, unicode=unicode)

    width = len(str(len(proof)))
    shown = [r(s.formula) for s in proof]
    col = max(len(s) for s in shown)
    return "\n".join(
        f"{i:>{width}}. {text:<{col}}  [{_tag(step.just, r)}]"
        for i, (text, step) in enumerate(zip(shown, proof), start=1)
    )
