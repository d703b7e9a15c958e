import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from tautoproof import calculus
from tautoproof.cli import main
from tautoproof.formula import parse

DATA = Path(__file__).parent / "data"


def run(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


class TestTable:
    def test_paper_table(self):
        code, out, _ = run("table", "!(L|M)|M|L")
        assert code == 0
        rows = out.splitlines()[2:]
        assert [r.split(" | ") for r in rows] == [
            ["V", "V", "    V"],
            ["V", "F", "    V"],
            ["F", "V", "    V"],
            ["F", "F", "    V"],
        ]

    def test_letter(self):
        code, out, _ = run("table", "L")
        assert code == 0
        assert out.splitlines() == ["L | L", "--+--", "V | V", "F | F"]

    def test_parse_error(self):
        code, out, err = run("table", "L !|")
        assert code == 2
        assert out == ""
        assert "position 2" in err and "^" in err

    def test_unicode(self):
        _, out, _ = run("table", "--unicode", "!(L|M)|M|L")
        assert out.splitlines()[0] == "L | M | ¬(L ∨ M) ∨ M ∨ L"

    def test_stdin(self):
        assert run("table", "-", stdin="!L\n")[1] == run("table", "!L")[1]


class TestCheck:
    def test_paper_statement(self):
        assert run("check", "!(L|M)|M|L")[:2] == (0, "tautology\n")

    def test_counterexample(self):
        assert run("check", "L|M")[:2] == (1, "counterexample: L=F M=F\n")

    def test_excluded_middle(self):
        assert run("check", "L|!L")[:2] == (0, "tautology\n")

    def test_parse_error(self):
        assert run("check", "")[0] == 2

    def test_too_many_letters(self):
        code, _, err = run("check", "|".join(f"P{i}" for i in range(25)))
        assert code == 2 and "24" in err


class TestProve:
    def test_paper_statement_verifies(self):
        code, out, err = run("prove", "!(L|M)|M|L")
        assert code == 0
        vp = calculus.verify(calculus.loads(out))
        assert calculus.proved_formula(vp) == parse("!(L|M)|M|L")
        assert "10 steps" in err

    def test_counterexample(self):
        assert run("prove", "M")[:2] == (1, "counterexample: M=F\n")

    def test_first_step_is_axiom(self):
        code, out, _ = run("prove", "L|!L")
        assert code == 0
        assert json.loads(out)[0]["rule"]["kind"] == "axiom"

    def test_output_file_and_self_check(self, tmp_path):
        target = tmp_path / "proof.json"
        code, out, _ = run("prove", "--self-check", "-o", str(target), "!!L|!L")
        assert code == 0 and out == ""
        assert calculus.verify(calculus.loads(target.read_text())).formula == parse("!!L|!L")

    def test_text_format(self):
        code, out, _ = run("prove", "--format", "text", "L|!L")
        assert code == 0
        assert out.splitlines()[0].startswith("1. L|!L")

    def test_deterministic(self):
        assert run("prove", "!(L|M|N)|N|M|L") == run("prove", "!(L|M|N)|N|M|L")

    def test_parse_error(self):
        assert run("prove", "(L")[0] == 2


class TestVerify:
    def test_paper_proof(self):
        code, out, _ = run("verify", str(DATA / "paper_proof.json"))
        assert (code, out) == (0, "valid: proves !(L|M)|M|L\n")

    def test_identity_sigma_rejected(self, tmp_path):
        data = json.loads((DATA / "paper_proof.json").read_text())
        data[1]["rule"]["sigma"] = [1, 2]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        code, out, _ = run("verify", str(bad))
        assert code == 1
        lines = out.splitlines()
        assert lines[0] == "invalid: 1 error"
        assert lines[1].startswith("step 2: conclusion mismatch")

    def test_empty_array(self):
        code, out, err = run("verify", "-", stdin="[]")
        assert code == 2
        assert err.strip() == "error: empty proof"

    @pytest.mark.parametrize("text", ["not json", "{}", '[{"formula": "L"}]'])
    def test_malformed(self, text):
        assert run("verify", "-", stdin=text)[0] == 2

    def test_missing_file(self, tmp_path):
        assert run("verify", str(tmp_path / "nope.json"))[0] == 2

    def test_pipeline(self):
        for t in ["!(L|M)|M|L", "L|!L", "!!L|!L", "!(L|!L)|M|!M"]:
            code, proof, _ = run("prove", t)
            assert code == 0
            code, out, _ = run("verify", "-", stdin=proof)
            assert (code, out) == (0, f"valid: proves {t}\n")


def test_usage_errors():
    assert run()[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("check")[0] == 2


def test_module_entry_point_pipeline():
    prove = subprocess.run(
        [sys.executable, "-m", "tautoproof", "prove", "!(L|M)|M|L"],
        capture_output=True, text=True, check=True,
    )
    verify = subprocess.run(
        [sys.executable, "-m", "tautoproof", "verify", "-"],
        input=prove.stdout, capture_output=True, text=True,
    )
    assert verify.returncode == 0
    assert verify.stdout == "valid: proves !(L|M)|M|L\n"
