"""
Tests for the .fol script parser and formatter.
"""

from pathlib import Path

import pytest

from src.errors import ScriptArityError, ScriptSyntaxError, UnboundName, UnknownCommand
from src.script.parser import (
    CommandStmt,
    ExprKind,
    FieldDecl,
    LetStmt,
    format_expr,
    format_script,
    parse,
    tokenize,
)

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


class TestTokenizer:
    """Test suite for tokenize."""

    def test_comments_and_positions(self):
        tokens = tokenize("# comment\nlet w = d(x1);")
        assert tokens[0].text == "let"
        assert (tokens[0].line, tokens[0].column) == (2, 1)
        assert tokens[-1].kind == "eof"

    def test_wedge_spellings(self):
        texts = [t.text for t in tokenize("a ∧ b ^^ c")]
        assert texts == ["a", "∧", "b", "^^", "c", ""]

    def test_bad_character(self):
        with pytest.raises(ScriptSyntaxError) as exc:
            tokenize("let w = x1 @ x2;")
        assert exc.value.column == 12


class TestParser:
    """Test suite for statements and expressions."""

    def test_statement_kinds(self):
        script = parse("field t: t^2 - 2;\nlet w = t*x1*d(x2);\ncheck-integrable w;")
        assert isinstance(script.statements[0], FieldDecl)
        assert isinstance(script.statements[1], LetStmt)
        assert isinstance(script.statements[2], CommandStmt)
        assert script.generator == "t"
        assert script.field_decl.generator == "t"
        assert [c.name for c in script.commands()] == ["check-integrable"]

    def test_variables_are_zero_based(self):
        script = parse("let f = x3;")
        value = script.statements[0].value
        assert value.kind == ExprKind.VAR
        assert value.value == 2

    def test_precedence(self):
        value = parse("let w = x1*d(x2) + x2 ∧ d(x3);").statements[0].value
        assert value.kind == ExprKind.BINOP and value.name == "+"
        right = value.args[1]
        assert right.name == "∧"

    def test_negative_exponent(self):
        value = parse("let f = x1^-2;").statements[0].value
        assert value.kind == ExprKind.POW
        assert value.value == -2

    def test_tuple(self):
        value = parse("let a = (1, 2, -3);").statements[0].value
        assert value.kind == ExprKind.TUPLE
        assert len(value.args) == 3

    def test_nvars_from_highest_variable(self):
        assert parse("let f = x1;").nvars == 3
        assert parse("let X = vf(x1, x2, x3, x4);").nvars == 4

    def test_command_options(self):
        script = parse("let w = d(x1);\npencil-sample w w --seed -3 --samples 40 --verbose;")
        cmd = script.commands()[0]
        assert cmd.option("seed") == -3
        assert cmd.option("samples") == 40
        assert cmd.flag("verbose")
        assert cmd.option("cap", 2) == 2

    def test_hyphenated_name_with_digits(self):
        cmd = parse("remove-codim1 d(x1);").commands()[0]
        assert cmd.name == "remove-codim1"

    def test_dangling_wedge(self):
        with pytest.raises(ScriptSyntaxError) as exc:
            parse("let w = d(x1 ∧;")
        assert exc.value.line == 1
        assert exc.value.column == 15

    def test_missing_semicolon(self):
        with pytest.raises(ScriptSyntaxError) as exc:
            parse("let w = d(x1)\ncheck-integrable w;")
        assert exc.value.line == 2

    def test_unbound_name(self):
        with pytest.raises(UnboundName):
            parse("check-integrable w;")

    def test_unknown_function(self):
        with pytest.raises(UnboundName):
            parse("let w = e(x1);")

    def test_unknown_command(self):
        with pytest.raises(UnknownCommand):
            parse("frobnicate x1;")

    def test_command_arity(self):
        with pytest.raises(ScriptArityError):
            parse("check-tangent radial();")

    def test_builtin_arity(self):
        with pytest.raises(ScriptArityError):
            parse("let X = vf(x1, x2);")
        with pytest.raises(ScriptArityError):
            parse("let w = ip(radial());")

    def test_field_must_come_first(self):
        with pytest.raises(ScriptSyntaxError):
            parse("let f = x1;\nfield t: t^2 - 2;")

    def test_generator_cannot_be_rebound(self):
        with pytest.raises(ScriptSyntaxError):
            parse("field t: t^2 - 2;\nlet t = x1;")


class TestFormatter:
    """Test suite for format_expr and format_script."""

    def _expr(self, text: str) -> str:
        return format_expr(parse(f"let e = {text};").statements[0].value)

    def test_minimal_parentheses(self):
        assert self._expr("(x1 + x2)*x3") == "(x1 + x2)*x3"
        assert self._expr("x1 - (x2 - x3)") == "x1 - (x2 - x3)"
        assert self._expr("(x1*x2)") == "x1*x2"
        assert self._expr("d(x1) ^^ d(x2)") == "d(x1) ∧ d(x2)"

    def test_powers_and_negation(self):
        assert self._expr("-x1^2") == "-x1^2"
        assert self._expr("(-x1)^2") == "(-x1)^2"
        assert self._expr("((x1)^2)^3") == "(x1^2)^3"
        assert self._expr("-(-x1)") == "-(-x1)"

    def test_command_arguments_keep_parentheses(self):
        script = parse("remove-codim1 (x3*d(x1));")
        assert format_script(script) == "remove-codim1 (x3*d(x1));\n"

    def test_corpus_scripts_round_trip(self):
        for path in sorted(CORPUS.glob("*.fol")):
            if path.name == "syntax_error.fol":
                continue
            once = format_script(parse(path.read_text(encoding="utf-8")))
            assert format_script(parse(once)) == once, path.name
