"""
Tests for the script interpreter and report rendering.
"""

from datetime import timezone

from src.models import RunOptions, StatementStatus
from src.script.interpreter import ScriptInterpreter, get_interpreter
from src.script.render import render_to_text


TANGENCY = """
let X = diag(1, 1, -2);
let w = x2*x3*d(x1) + x1*x3*d(x2) + x1*x2*d(x3);
check-tangent X w;
check-integrable w;
check-tangent X d(x1);
remove-codim1 (x3*(x2*d(x1) - x1*d(x2)));
"""


class TestScriptInterpreter:
    """Test suite for ScriptInterpreter."""

    def setup_method(self):
        self.interpreter = ScriptInterpreter()

    def test_commands_produce_verdicts(self):
        report = self.interpreter.run_source(TANGENCY, name="tangency")
        assert report.exit_code == 0
        assert report.verdicts() == ["true", "true", "false", "removed"]
        assert report.results[-1].data["factor"] == "x3"
        assert report.results[0].command == "check-tangent X w;"

    def test_failures_are_recorded_and_execution_continues(self):
        source = "let w = x2*d(x1) - x1*d(x2);\npencil-classify w w;\nnormal-form w (1, 2, 3);\ncheck-integrable w;\n"
        report = self.interpreter.run_source(source)
        assert report.exit_code == 2
        assert report.verdicts() == [None, None, "true"]
        assert report.results[0].error.kind == "DegeneratePencil"
        assert report.results[1].error.kind == "NotStronglyDiagonalizable"
        assert report.results[0].status == StatementStatus.FAILED
        assert report.results[0].line == 2

    def test_syntax_error_report(self):
        report = self.interpreter.run_source("let w = d(x1 ∧;")
        assert report.exit_code == 1
        error = report.results[0].error
        assert error.kind == "ScriptSyntaxError"
        assert (error.line, error.column) == (1, 15)

    def test_failed_let_leaves_name_unbound(self):
        report = self.interpreter.run_source("let a = d(x1) * d(x2);\ncheck-integrable a;")
        assert report.exit_code == 1
        assert [r.error.kind for r in report.results] == ["ScriptTypeError", "UnboundName"]

    def test_number_field_declaration(self):
        report = self.interpreter.run_source("field t: t^2 - 2;\nresonance (1, t, t + 2);")
        assert report.field != "Q"
        assert report.verdicts() == ["strongly-resonant"]
        assert report.results[0].data["relations"] == [[2, 1, -1]]

    def test_resonance_bound_from_options(self):
        source = "resonance (1, 1, -20) --nonneg;"
        report = self.interpreter.run_source(source, RunOptions(resonance_bound=5))
        assert report.verdicts() == ["none-within-bound"]
        assert report.results[0].bound == 5
        report = self.interpreter.run_source(source + "\nresonance (1, 1, -20) --nonneg --bound 20;")
        assert report.verdicts() == ["resonant", "resonant"]
        assert report.results[1].data["relation"] == [10, 10, 1]

    def test_blowup_in_one_chart(self):
        report = self.interpreter.run_source("blowup radial() --punctual --chart 1;")
        chart = report.results[0].data["charts"][0]
        assert report.verdicts() == ["dicritical"]
        assert chart["strict_transform"] == "vf(1, 0, 0)"
        assert chart["exceptional_multiplicity"] == 1

    def test_blowup_in_all_charts(self):
        report = self.interpreter.run_source("blowup diag(1, 2, 4);")
        assert report.verdicts() == ["non-dicritical"]
        assert len(report.results[0].data["charts"]) == 3

    def test_monoidal_chart_needs_axis(self):
        report = self.interpreter.run_source("blowup radial() --monoidal --chart 1;")
        assert report.exit_code == 1
        assert report.results[0].error.kind == "ScriptTypeError"

    def test_pencil_classification(self):
        source = "let v = d(x2) + x2^2*d(x1);\npencil-curvature d(x1) v;\npencil-classify d(x1) v;"
        report = self.interpreter.run_source(source)
        assert report.verdicts() == ["constant", "ConstantCurvatureFactor"]

    def test_pencil_theta_checks_members(self):
        report = self.interpreter.run_source("pencil-theta (x2*d(x1)) (x1*d(x2));", RunOptions(seed=3))
        entry = report.results[0]
        assert report.verdicts() == ["unique"]
        assert entry.data["members_checked"] == 10
        assert [c.name for c in entry.certificates] == ["theta", "theta on members"]

    def test_normal_form_lenient(self):
        source = "let u = (1 + x3)*(2*x2*d(x1) - x1*d(x2));\nnormal-form u (1, 2, 3) --lenient --order 4;"
        report = self.interpreter.run_source(source)
        assert report.verdicts() == ["I"]
        assert report.results[0].order == 4

    def test_more_variables(self):
        report = self.interpreter.run_source("let X = vf(x1, x2, x3, x4);\ncheck-integrable d(x4);")
        assert report.nvars == 4
        assert report.verdicts() == ["true"]

    def test_output_is_reproducible(self):
        first = self.interpreter.run_source(TANGENCY, name="tangency")
        second = self.interpreter.run_source(TANGENCY, name="tangency")
        assert first.to_json(include_timing=False) == second.to_json(include_timing=False)
        assert "elapsed_ms" not in first.to_json(include_timing=False)

    def test_timing_is_timezone_aware(self):
        report = self.interpreter.run_source("check-integrable d(x1);")
        assert report.results[0].timing.started_at.tzinfo == timezone.utc

    def test_shared_interpreter(self):
        assert get_interpreter() is get_interpreter()


class TestRender:
    """Test suite for the text report."""

    def test_render_contains_verdicts(self):
        report = ScriptInterpreter().run_source(TANGENCY, name="tangency")
        text = render_to_text(report)
        assert "tangency" in text
        assert "removed" in text
        assert "exit code 0" in text.lower()

    def test_render_error(self):
        report = ScriptInterpreter().run_source("frobnicate x1;", name="bad")
        text = render_to_text(report)
        assert "UnknownCommand" in text
