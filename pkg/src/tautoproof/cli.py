"""Command-line front end.

Exit status: 0 for a tautology or a valid proof, 1 for a counterexample or an
invalid proof, 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import calculus
from .completeness import Proved, prove
from .formula import FormulaSyntaxError, parse, render
from .semantics import Falsified, TooManyLetters, format_assignment, format_table, is_true, truth_table

OK, NEGATIVE, ERROR = 0, 1, 2


class _InputError(Exception):
    pass


def _read_formula(arg, stdin):
    text = stdin.read() if arg == "-" else arg
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise _InputError(f"parse error at position {e.position}\n{e.diagnostic()}")


def cmd_table(args, out, stdin):
    f = _read_formula(args.formula, stdin)
    print(format_table(truth_table(f), unicode=args.unicode), file=out)
    return OK


def cmd_check(args, out, stdin):
    verdict = is_true(_read_formula(args.formula, stdin))
    print(verdict, file=out)
    return NEGATIVE if isinstance(verdict, Falsified) else OK


def cmd_prove(args, out, stdin, err):
    f = _read_formula(args.formula, stdin)
    result = prove(f)
    if not isinstance(result, Proved):
        print(f"counterexample: {format_assignment(result.witness)}", file=out)
        return NEGATIVE
    proof = result.proof
    if args.self_check:
        errors = calculus.check(proof)
        if errors or proof.final != f:
            detail = "; ".join(str(e) for e in errors) or "final line differs from input"
            raise _InputError(f"self-check failed: {detail}")
    if args.format == "text":
        text = calculus.format_proof(proof, unicode=args.unicode)
    else:
        text = calculus.dumps(proof)
    if args.output and args.output != "-":
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as e:
            raise _InputError(f"cannot write {args.output}: {e.strerror}")
    else:
        print(text, file=out)
    print(f"proof of {render(f)}: {len(proof)} steps", file=err)
    return OK


def cmd_verify(args, out, stdin):
    if args.proof == "-":
        text = stdin.read()
    else:
        try:
            with open(args.proof, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise _InputError(f"cannot read {args.proof}: {e.strerror}")
    try:
        proof = calculus.loads(text)
    except (calculus.ProofFormatError, calculus.EmptyProof) as e:
        raise _InputError(str(e))
    errors = calculus.check(proof)
    if errors:
        print(f"invalid: {len(errors)} error{'s' if len(errors) > 1 else ''}", file=out)
        for e in errors:
            print(e, file=out)
        return NEGATIVE
    print(f"valid: proves {render(proof.final, unicode=args.unicode)}", file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unicode", action="store_true", help="render formulas with ¬ and ∨")

    parser = argparse.ArgumentParser(
        prog="tautoproof",
        description="Truth tables, tautology checking, proof synthesis and proof checking "
        "for propositional formulas over ! (not) and | (or).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="print the truth table of a formula")
    p.add_argument("formula", help="formula text, or - to read standard input")

    p = sub.add_parser("check", parents=[common], help="decide whether a formula is a tautology")
    p.add_argument("formula", help="formula text, or - to read standard input")

    p = sub.add_parser("prove", parents=[common], help="synthesize a proof of a tautology")
    p.add_argument("formula", help="formula text, or - to read standard input")
    p.add_argument("-o", "--output", metavar="PATH", help="write the proof here instead of stdout")
    p.add_argument("--self-check", action="store_true", help="verify the proof before writing it")
    p.add_argument(
        "--format", choices=("json", "text"), default="json",
        help="json (re-parseable, default) or numbered plain text",
    )

    p = sub.add_parser("verify", parents=[common], help="check a proof file in JSON format")
    p.add_argument("proof", help="proof file path, or - to read standard input")
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ERROR
    try:
        if args.command == "table":
            return cmd_table(args, out, stdin)
        if args.command == "check":
            return cmd_check(args, out, stdin)
        if args.command == "prove":
            return cmd_prove(args, out, stdin, err)
        return cmd_verify(args, out, stdin)
    except _InputError as e:
        print(f"error: {e}", file=err)
    except TooManyLetters as e:
        print(f"error: {e}", file=err)
    return ERROR


if __name__ == "__main__":
    sys.exit(main())
