"""Propositional formulas over negation and disjunction: truth tables, a
five-rule proof calculus with a checker, and a synthesizer that turns every
tautology into a checkable proof and every other formula into a counterexample.
"""

from .calculus import (
    Assoc,
    AxiomA,
    DeMorgan,
    DNeg,
    InvalidProof,
    Perm,
    Proof,
    ProofStep,
    VerifiedProof,
    check,
    conclusion_of,
    format_proof,
    proved_formula,
    verify,
)
from .completeness import Proved, Refuted, measure, prove, prove_goal
from .formula import (
    Atom,
    EmptyDisjunction,
    EmptyInput,
    Formula,
    FormulaSyntaxError,
    Not,
    Or,
    join,
    letters,
    parse,
    render,
    score,
    spine,
)
from .semantics import F, Falsified, Tautology, TruthValue, V, evaluate, is_true, is_true_list, truth_table

__version__ = "0.1.0"
