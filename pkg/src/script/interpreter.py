"""
Script interpreter.

Statements run in order against one environment. A failing statement is
recorded in the report with its error class and exit code, and execution
continues with the next statement; the report's exit code is the largest
one recorded.
"""

import time
from datetime import datetime, timezone
from typing import Any, Callable, Dict, List, Optional, Tuple

import structlog

from ..algebra.polyalg import Poly, RatFunc
from ..algebra.scalars import FieldElement, NumberField
from ..analysis.blowup import (
    axis_invariance,
    linear_diagonal,
    transform_form,
    transform_vector_field,
)
from ..analysis.charts import BlowupChart, BlowupKind, charts_for
from ..analysis.foliation import (
    invariant_hypersurface_candidates,
    invariant_hypersurface_check,
    jouanolou,
    jouanolou_field,
    recognize_normal_form,
    simple_ch_check,
    tangent_log_pencil,
)
from ..analysis.pencil import (
    Pencil,
    classify,
    connection_form,
    curvature_factor,
    decompose_over_pair,
    log_axis_formula,
    log_pencil,
    member,
    member_codim1_locus,
    pencil_condition,
    pencil_from_three,
    sample_exceptional_parameters,
    theta_is_unique,
    verify_axis_invariant_hypersurface,
    verify_theta_on_members,
)
from ..analysis.resonance import (
    Eigenvalues,
    blowup_eigenvalue_law,
    is_strongly_diagonalizable,
    nonneg_resonance_search,
    strong_resonances,
)
from ..errors import (
    CertificateFailure,
    DegeneratePencil,
    FoliationKitError,
    NotAPencil,
    NotCoplanar,
    ScriptTypeError,
    UnboundName,
    UnknownCommand,
)
from ..forms.exterior import (
    MeroForm,
    VectorField,
    differential,
    directional_derivative,
    ext_derivative,
    interior_product,
    is_first_integral,
    is_integrable,
    is_tangent,
    remove_codim1,
    wedge,
)
from ..models import (
    Certificate,
    CommandReport,
    ErrorInfo,
    Report,
    RunOptions,
    StatementStatus,
    Timing,
)
from .parser import CommandStmt, Expr, ExprKind, FieldDecl, LetStmt, Script, format_statement, parse

logger = structlog.get_logger()

Value = Any  # RatFunc | MeroForm | VectorField | tuple


def _bool(flag: bool) -> str:
    return "true" if flag else "false"


def _axis_name(i: int) -> str:
    return f"x{i + 1}"


class _Context:
    """Per-run state: field, variable count, bindings and effective options."""

    def __init__(self, script: Script, options: RunOptions):
        self.field = NumberField.rationals()
        self.nvars = script.nvars
        self.env: Dict[str, Value] = {}
        self.options = options


class ScriptInterpreter:
    """Evaluates parsed scripts and produces reports."""

    def __init__(self):
        self._command_handlers: Dict[str, Callable[[CommandStmt, List[Value], _Context, CommandReport], None]] = {
            "check-tangent": self._handle_check_tangent,
            "check-integrable": self._handle_check_integrable,
            "remove-codim1": self._handle_remove_codim1,
            "resonance": self._handle_resonance,
            "blowup": self._handle_blowup,
            "pencil-check": self._handle_pencil_check,
            "pencil-from-three": self._handle_pencil_from_three,
            "pencil-theta": self._handle_pencil_theta,
            "pencil-curvature": self._handle_pencil_curvature,
            "pencil-classify": self._handle_pencil_classify,
            "log-pencil": self._handle_log_pencil,
            "normal-form": self._handle_normal_form,
            "ch-check": self._handle_ch_check,
            "jouanolou": self._handle_jouanolou,
            "first-integral": self._handle_first_integral,
            "surface-check": self._handle_surface_check,
            "surface-search": self._handle_surface_search,
            "decompose": self._handle_decompose,
            "pencil-member": self._handle_pencil_member,
            "pencil-sample": self._handle_pencil_sample,
            "axis-surface": self._handle_axis_surface,
            "axis-invariance": self._handle_axis_invariance,
            "eigen-law": self._handle_eigen_law,
        }

    # ============ Entry points ============

    def run_source(self, source: str, options: Optional[RunOptions] = None, name: str = "<script>") -> Report:
        """Parse and run; a parse failure yields a one-entry report with exit code 1."""
        options = options or RunOptions()
        try:
            script = parse(source)
        except FoliationKitError as e:
            logger.warning("Script rejected", script=name, error=str(e))
            error = ErrorInfo(
                kind=e.kind,
                message=str(e),
                exit_code=e.exit_code,
                line=getattr(e, "line", None),
                column=getattr(e, "column", None),
            )
            entry = CommandReport(
                index=0,
                line=error.line or 0,
                command="",
                status=StatementStatus.FAILED,
                error=error,
            )
            return Report(script=name, options=options, results=[entry], exit_code=e.exit_code)
        return self.run(script, options, name)

    def run(self, script: Script, options: Optional[RunOptions] = None, name: str = "<script>") -> Report:
        options = options or RunOptions()
        ctx = _Context(script, options)
        started = datetime.now(timezone.utc)
        t0 = time.perf_counter()
        results: List[CommandReport] = []

        logger.info("Running script", script=name, statements=len(script.statements), nvars=ctx.nvars)

        for index, stmt in enumerate(script.statements):
            entry = CommandReport(index=index, line=stmt.line, command=format_statement(stmt))
            step_started = datetime.now(timezone.utc)
            s0 = time.perf_counter()
            try:
                if isinstance(stmt, FieldDecl):
                    ctx.field = self._declare_field(stmt)
                elif isinstance(stmt, LetStmt):
                    ctx.env[stmt.name] = self.evaluate(stmt.value, ctx)
                else:
                    self._execute_command(stmt, ctx, entry)
            except FoliationKitError as e:
                logger.warning("Statement failed", index=index, line=stmt.line, error=e.kind)
                entry.status = StatementStatus.FAILED
                entry.error = ErrorInfo(
                    kind=e.kind,
                    message=str(e),
                    exit_code=e.exit_code,
                    identity=e.identity if isinstance(e, CertificateFailure) else None,
                    line=stmt.line,
                )
            entry.timing = Timing(started_at=step_started, elapsed_ms=(time.perf_counter() - s0) * 1000)
            if isinstance(stmt, CommandStmt) or entry.status == StatementStatus.FAILED:
                results.append(entry)

        exit_code = max((r.error.exit_code for r in results if r.error), default=0)
        logger.info(
            "Script completed",
            script=name,
            commands=sum(1 for r in results if r.status == StatementStatus.COMPLETED),
            failed=sum(1 for r in results if r.status == StatementStatus.FAILED),
            exit_code=exit_code,
        )
        return Report(
            script=name,
            field=repr(ctx.field) if not ctx.field.is_rational else "Q",
            nvars=ctx.nvars,
            options=options,
            results=results,
            exit_code=exit_code,
            timing=Timing(started_at=started, elapsed_ms=(time.perf_counter() - t0) * 1000),
        )

    # ============ Field declaration ============

    def _declare_field(self, stmt: FieldDecl) -> NumberField:
        rationals = NumberField.rationals()
        m = self._evaluate_univariate(stmt.minpoly, rationals)
        degree = m.total_degree()
        coeffs = [m.coefficient((k,)).to_rational() for k in range(degree + 1)]
        field = NumberField(coeffs, generator=stmt.generator)
        logger.debug("Field declared", field=repr(field))
        return field

    def _evaluate_univariate(self, e: Expr, rationals: NumberField) -> Poly:
        """Minimal polynomials are built in the generator alone, over Q."""
        if e.kind == ExprKind.NUM:
            return Poly.constant(e.value, rationals, 1)
        if e.kind == ExprKind.GEN:
            return Poly.variable(0, rationals, 1)
        if e.kind == ExprKind.NEG:
            return -self._evaluate_univariate(e.args[0], rationals)
        if e.kind == ExprKind.POW and e.value >= 0:
            return self._evaluate_univariate(e.args[0], rationals) ** e.value
        if e.kind == ExprKind.BINOP and e.name in ("+", "-", "*", "/"):
            left = self._evaluate_univariate(e.args[0], rationals)
            right = self._evaluate_univariate(e.args[1], rationals)
            if e.name == "+":
                return left + right
            if e.name == "-":
                return left - right
            if e.name == "*":
                return left * right
            if right.is_constant() and not right.is_zero():
                return left.scale(right.constant_term().inverse())
        raise ScriptTypeError("a minimal polynomial is a polynomial in the generator with rational coefficients")

    # ============ Expressions ============

    def evaluate(self, e: Expr, ctx: _Context) -> Value:
        kind = e.kind
        if kind == ExprKind.NUM:
            return RatFunc.coerce(e.value, ctx.field, ctx.nvars)
        if kind == ExprKind.VAR:
            return RatFunc.from_poly(Poly.variable(e.value, ctx.field, ctx.nvars))
        if kind == ExprKind.GEN:
            return RatFunc.coerce(ctx.field.gen(), ctx.field, ctx.nvars)
        if kind == ExprKind.NAME:
            if e.name not in ctx.env:
                raise UnboundName(f"name {e.name!r} has no value")
            return ctx.env[e.name]
        if kind == ExprKind.TUPLE:
            return tuple(self.evaluate(a, ctx) for a in e.args)
        if kind == ExprKind.NEG:
            value = self.evaluate(e.args[0], ctx)
            if isinstance(value, tuple):
                raise ScriptTypeError("cannot negate a tuple")
            return -value
        if kind == ExprKind.POW:
            base = self.evaluate(e.args[0], ctx)
            if not isinstance(base, RatFunc):
                raise ScriptTypeError("only functions can be raised to a power")
            return base ** e.value
        if kind == ExprKind.BINOP:
            return self._binop(e.name, self.evaluate(e.args[0], ctx), self.evaluate(e.args[1], ctx))
        return self._call(e, ctx)

    def _binop(self, op: str, left: Value, right: Value) -> Value:
        if op == "∧":
            return wedge(self._as_form(left), self._as_form(right))
        if op in ("+", "-"):
            if isinstance(left, MeroForm) or isinstance(right, MeroForm):
                left, right = self._as_form(left), self._as_form(right)
            elif type(left) is not type(right) or isinstance(left, tuple):
                raise ScriptTypeError(f"cannot apply {op!r} to {self._kind(left)} and {self._kind(right)}")
            return left + right if op == "+" else left - right
        if op == "*":
            if isinstance(left, RatFunc) and isinstance(right, RatFunc):
                return left * right
            if isinstance(left, RatFunc) and isinstance(right, (MeroForm, VectorField)):
                return right.scale(left)
            if isinstance(right, RatFunc) and isinstance(left, (MeroForm, VectorField)):
                return left.scale(right)
            raise ScriptTypeError(f"cannot multiply {self._kind(left)} by {self._kind(right)}; use ∧ for forms")
        if isinstance(right, RatFunc) and isinstance(left, (RatFunc, MeroForm)):
            return left / right
        raise ScriptTypeError(f"cannot divide {self._kind(left)} by {self._kind(right)}")

    def _call(self, e: Expr, ctx: _Context) -> Value:
        name = e.name
        args = [self.evaluate(a, ctx) for a in e.args]
        if name == "d":
            (u,) = args
            if isinstance(u, RatFunc):
                return differential(u)
            return ext_derivative(self._as_form(u))
        if name == "ip":
            return interior_product(self._as_field(args[0]), self._as_form(args[1]))
        if name == "vf":
            return VectorField([self._as_function(a) for a in args], ctx.field)
        if name == "diag":
            return VectorField.diagonal([self._as_scalar(a) for a in args])
        if name == "radial":
            return VectorField.radial(ctx.field, ctx.nvars)
        if name == "jouanolou_field":
            return jouanolou_field(self._as_int(args[0]), ctx.field)
        if name == "jouanolou_form":
            return jouanolou(self._as_int(args[0]), ctx.field)[1]
        raise ScriptTypeError(f"unknown function {name!r}")

    # ============ Value coercions ============

    @staticmethod
    def _kind(value: Value) -> str:
        if isinstance(value, RatFunc):
            return "function"
        if isinstance(value, MeroForm):
            return f"{value.degree}-form"
        if isinstance(value, VectorField):
            return "vector field"
        return "tuple"

    def _as_form(self, value: Value, degree: Optional[int] = None) -> MeroForm:
        if isinstance(value, RatFunc):
            value = MeroForm.function(value)
        if not isinstance(value, MeroForm):
            raise ScriptTypeError(f"expected a form, got a {self._kind(value)}")
        if degree is not None and value.degree != degree:
            raise ScriptTypeError(f"expected a {degree}-form, got a {value.degree}-form")
        return value

    def _as_field(self, value: Value) -> VectorField:
        if not isinstance(value, VectorField):
            raise ScriptTypeError(f"expected a vector field, got a {self._kind(value)}")
        return value

    def _as_function(self, value: Value) -> RatFunc:
        if isinstance(value, MeroForm) and value.degree == 0:
            return value.function_value()
        if not isinstance(value, RatFunc):
            raise ScriptTypeError(f"expected a function, got a {self._kind(value)}")
        return value

    def _as_poly(self, value: Value) -> Poly:
        return self._as_function(value).as_poly()

    def _as_scalar(self, value: Value) -> FieldElement:
        f = self._as_function(value)
        if not f.is_constant():
            raise ScriptTypeError(f"expected a constant, got {f}")
        return f.constant_value()

    def _as_int(self, value: Value) -> int:
        c = self._as_scalar(value)
        if not c.is_rational() or c.to_rational().denominator != 1:
            raise ScriptTypeError(f"expected an integer, got {c}")
        return int(c.to_rational())

    def _as_tuple(self, value: Value) -> Tuple[Value, ...]:
        if not isinstance(value, tuple):
            raise ScriptTypeError(f"expected a tuple, got a {self._kind(value)}")
        return value

    def _as_eigenvalues(self, value: Value, ctx: _Context) -> Eigenvalues:
        """A tuple of constants, or a field whose linear part is diagonal."""
        if isinstance(value, VectorField):
            diagonal = linear_diagonal(value)
            if diagonal is None:
                raise ScriptTypeError(f"linear part of {value} is not diagonal")
            return Eigenvalues.of(diagonal, ctx.field)
        return Eigenvalues.of([self._as_scalar(v) for v in self._as_tuple(value)], ctx.field)

    def _pencil(self, args: List[Value]) -> Pencil:
        return Pencil(self._as_form(args[0], 1), self._as_form(args[1], 1))

    @staticmethod
    def _charts(stmt: CommandStmt) -> List[BlowupChart]:
        """Charts selected by --punctual/--monoidal, --axis and --chart (1-based); all of them without --chart."""
        kind = BlowupKind.MONOIDAL if stmt.flag("monoidal") else BlowupKind.PUNCTUAL
        axis = stmt.option("axis")
        chart = stmt.option("chart")
        for value in (axis, chart):
            if value is not None and not isinstance(value, int):
                raise ScriptTypeError("--axis and --chart take integers")
        axis = None if axis is None else axis - 1
        if chart is None:
            return charts_for(kind, axis)
        if kind == BlowupKind.MONOIDAL:
            if axis is None:
                raise ScriptTypeError("--monoidal --chart needs --axis")
            return [BlowupChart.monoidal(axis, chart - 1)]
        return [BlowupChart.punctual(chart - 1)]

    @staticmethod
    def _int_option(stmt: CommandStmt, name: str, default: int) -> int:
        value = stmt.option(name, default)
        if not isinstance(value, int):
            raise ScriptTypeError(f"--{name} takes an integer")
        return value

    # ============ Command dispatch ============

    def _execute_command(self, stmt: CommandStmt, ctx: _Context, entry: CommandReport) -> None:
        handler = self._command_handlers.get(stmt.name)
        if handler is None:
            raise UnknownCommand(f"no handler for {stmt.name!r}")
        logger.debug("Executing command", command=stmt.name, line=stmt.line)
        args = [self.evaluate(a, ctx) for a in stmt.args]
        handler(stmt, args, ctx, entry)

    # ============ Command handlers ============

    def _handle_check_tangent(self, stmt, args, ctx, entry) -> None:
        X, w = self._as_field(args[0]), self._as_form(args[1])
        contraction = interior_product(X, w)
        entry.verdict = _bool(is_tangent(X, w))
        entry.summary = "X is tangent to w" if entry.verdict == "true" else "X is not tangent to w"
        entry.certificates.append(Certificate(name="i_X(w)", value=str(contraction), identity="i_X(w) = 0"))

    def _handle_check_integrable(self, stmt, args, ctx, entry) -> None:
        w = self._as_form(args[0], 1)
        product = wedge(w, ext_derivative(w))
        entry.verdict = _bool(is_integrable(w))
        entry.summary = "w ∧ dw vanishes" if entry.verdict == "true" else "w ∧ dw does not vanish"
        entry.certificates.append(Certificate(name="w ∧ dw", value=str(product), identity="w ∧ dw = 0"))

    def _handle_remove_codim1(self, stmt, args, ctx, entry) -> None:
        w = self._as_form(args[0])
        reduced, g = remove_codim1(w)
        entry.verdict = "unit" if g.is_constant() else "removed"
        entry.summary = f"codimension-one factor {g}"
        entry.data = {"form": str(reduced), "factor": str(g)}
        entry.certificates.append(Certificate(name="reduced", value=str(reduced), identity=f"w = ({g}) * reduced"))

    def _handle_resonance(self, stmt, args, ctx, entry) -> None:
        a = self._as_eigenvalues(args[0], ctx)
        if stmt.flag("nonneg"):
            bound = self._int_option(stmt, "bound", ctx.options.resonance_bound)
            relation = nonneg_resonance_search(a, bound)
            entry.bound = bound
            if relation is None:
                entry.verdict = "none-within-bound"
                entry.summary = f"no nonnegative resonance with entries <= {bound}"
            else:
                entry.verdict = "resonant"
                entry.summary = f"nonnegative resonance {relation}"
                entry.data = {"relation": list(relation)}
                entry.certificates.append(Certificate(
                    name="relation", value=str(list(relation)), identity="sum(k_i a_i) = 0"
                ))
            return
        basis = strong_resonances(a)
        entry.verdict = "strongly-non-resonant" if basis.rank == 0 else "strongly-resonant"
        entry.summary = f"relation lattice of rank {basis.rank}"
        entry.data = {"relations": [list(r) for r in basis.relations], "rank": basis.rank}
        entry.certificates.append(Certificate(
            name="relation basis", value=str([list(r) for r in basis.relations]), identity="sum(l_i a_i) = 0"
        ))

    def _handle_blowup(self, stmt, args, ctx, entry) -> None:
        obj = args[0]
        if isinstance(obj, VectorField):
            transform = transform_vector_field
        else:
            obj = self._as_form(obj, 1)
            transform = transform_form
        results = [transform(obj, c) for c in self._charts(stmt)]
        dicritical = [r.chart.label for r in results if r.dicritical]
        entry.verdict = "dicritical" if dicritical else "non-dicritical"
        entry.summary = f"{len(results)} chart(s), dicritical in {', '.join(dicritical) or 'none'}"
        entry.data = {
            "charts": [
                {
                    "chart": r.chart.label,
                    "strict_transform": str(r.object),
                    "exceptional_multiplicity": r.exceptional_multiplicity,
                    "dicritical": r.dicritical,
                }
                for r in results
            ]
        }
        for r in results:
            entry.certificates.append(Certificate(
                name=f"strict transform {r.chart.label}",
                value=str(r.object),
                identity=f"exceptional multiplicity {r.exceptional_multiplicity}",
            ))

    def _handle_pencil_check(self, stmt, args, ctx, entry) -> None:
        w1, w2 = self._as_form(args[0], 1), self._as_form(args[1], 1)
        condition = pencil_condition(w1, w2)
        entry.certificates.append(Certificate(
            name="w1 ∧ dw2 + w2 ∧ dw1",
            value=str(wedge(w1, ext_derivative(w2)) + wedge(w2, ext_derivative(w1))),
            identity="w1 ∧ dw2 + w2 ∧ dw1 = 0",
        ))
        try:
            Pencil(w1, w2)
        except (NotAPencil, DegeneratePencil) as e:
            entry.verdict = "false"
            entry.summary = str(e)
        else:
            entry.verdict = "true"
            entry.summary = "generators span a pencil"
        entry.data = {"pencil_condition": condition}

    def _handle_pencil_from_three(self, stmt, args, ctx, entry) -> None:
        forms = [self._as_form(a, 1) for a in args[:3]]
        eta = self._as_form(args[3], 2)
        p = pencil_from_three(forms[0], forms[1], forms[2], eta)
        entry.verdict = "pencil"
        entry.summary = str(p)
        entry.data = {"gen1": str(p.gen1), "gen2": str(p.gen2), "theta": str(p.theta)}
        entry.certificates.append(Certificate(name="gen1", value=str(p.gen1), identity="eta ∧ gen1 = 0"))
        entry.certificates.append(Certificate(name="gen2", value=str(p.gen2), identity="eta ∧ gen2 = 0"))

    def _handle_pencil_theta(self, stmt, args, ctx, entry) -> None:
        p = self._pencil(args)
        unique = theta_is_unique(p)
        members = verify_theta_on_members(p, seed=ctx.options.seed, parameter_range=ctx.options.parameter_range)
        entry.verdict = "unique" if unique else "verified"
        entry.summary = f"theta = {p.theta}"
        entry.data = {"theta": str(p.theta), "unique": unique, "members_checked": len(members)}
        entry.certificates.append(Certificate(name="theta", value=str(p.theta), identity="dw = theta ∧ w"))
        entry.certificates.append(Certificate(
            name="theta on members",
            value=", ".join(f"({a} : {b})" for a, b in members),
            identity="d(a*w1 + b*w2) = theta ∧ (a*w1 + b*w2)",
        ))
        if not unique:
            entry.certificates.append(Certificate(
                name="theta (last variable)", value=str(connection_form(p, "last")), identity="dw = theta ∧ w"
            ))

    def _handle_pencil_curvature(self, stmt, args, ctx, entry) -> None:
        p = self._pencil(args)
        alpha = curvature_factor(p)
        if alpha.is_zero():
            entry.verdict = "flat"
        elif alpha.is_constant():
            entry.verdict = "constant"
        else:
            entry.verdict = "nonconstant"
        entry.summary = f"alpha = {alpha}"
        entry.data = {"alpha": str(alpha), "curvature": str(ext_derivative(p.theta))}
        entry.certificates.append(Certificate(name="alpha", value=str(alpha), identity="d(theta) = alpha * gen1 ∧ gen2"))

    def _handle_pencil_classify(self, stmt, args, ctx, entry) -> None:
        p = self._pencil(args)
        result = classify(p)
        entry.verdict = result.case.value
        data: Dict[str, Any] = {"theta": str(result.theta)}
        for key in ("theta_potential", "polar_locus", "alpha", "mu1", "mu2", "k1", "k2",
                    "axis_first_integral", "closed_member", "closed_member_potential"):
            value = getattr(result, key)
            if value is not None:
                data[key] = str(value)
        if result.closed_member_parameters is not None:
            data["closed_member_parameters"] = [str(v) for v in result.closed_member_parameters]
        entry.data = data
        if result.axis_first_integral is not None:
            entry.summary = f"first integral of the axis: {result.axis_first_integral}"
        elif result.closed_member is not None:
            entry.summary = f"closed member {result.closed_member}"
        else:
            entry.summary = f"theta = {result.theta}"
        entry.certificates.append(Certificate(name="theta", value=str(result.theta), identity="dw = theta ∧ w"))
        for identity in result.certificates:
            entry.certificates.append(Certificate(name="verified", value=identity, identity=identity))

    def _handle_log_pencil(self, stmt, args, ctx, entry) -> None:
        if len(args) == 1:
            a = self._as_eigenvalues(args[0], ctx)
            p = tangent_log_pencil(a)
            entry.verdict = "pencil"
            entry.summary = f"tangent to diag{a}"
            entry.data = {"gen1": str(p.gen1), "gen2": str(p.gen2), "theta": str(p.theta)}
            entry.certificates.append(Certificate(name="gen1", value=str(p.gen1), identity="i_X(gen1) = 0"))
            entry.certificates.append(Certificate(name="gen2", value=str(p.gen2), identity="i_X(gen2) = 0"))
            return
        if len(args) != 3:
            raise ScriptTypeError("log-pencil takes eigenvalues, or germs with two residue tuples")
        fs = [self._as_poly(f) for f in self._as_tuple(args[0])]
        lambdas = [self._as_scalar(v) for v in self._as_tuple(args[1])]
        mus = [self._as_scalar(v) for v in self._as_tuple(args[2])]
        p = log_pencil(fs, lambdas, mus)
        formula = log_axis_formula(fs, lambdas, mus)
        product = Poly.one(ctx.field, ctx.nvars)
        for f in fs:
            product = product * f
        if wedge(p.gen1, p.gen2) != formula.scale(product):
            raise CertificateFailure("axis formula disagrees with gen1 ∧ gen2", "gen1 ∧ gen2 = (prod f) * axis")
        entry.verdict = "pencil"
        entry.summary = str(p)
        entry.data = {"gen1": str(p.gen1), "gen2": str(p.gen2), "axis": str(formula), "theta": str(p.theta)}
        entry.certificates.append(Certificate(
            name="axis", value=str(formula), identity="gen1 ∧ gen2 = (prod f) * axis"
        ))

    def _handle_normal_form(self, stmt, args, ctx, entry) -> None:
        w = self._as_form(args[0], 1)
        a = self._as_eigenvalues(args[1], ctx)
        order = self._int_option(stmt, "order", ctx.options.truncation_order)
        report = recognize_normal_form(w, a, order, strict=not stmt.flag("lenient"))
        entry.order = order
        entry.verdict = report.matched_normal_form.value
        entry.data = {
            "variables": [_axis_name(i) for i in report.variables],
            "residues": [str(r) for r in report.residues],
            "strongly_diagonalizable": report.strongly_diagonalizable,
            "notes": report.notes,
        }
        if report.unit is not None:
            entry.data["unit"] = str(report.unit)
            entry.certificates.append(Certificate(
                name="unit", value=str(report.unit), identity=f"w = unit * normal form mod order {order}"
            ))
        entry.summary = f"normal form {entry.verdict} up to order {order}"

    def _handle_ch_check(self, stmt, args, ctx, entry) -> None:
        w = self._as_form(args[0], 1)
        bound = self._int_option(stmt, "bound", ctx.options.resonance_bound)
        report = simple_ch_check(w, bound)
        entry.bound = bound
        if report.complex_hyperbolic:
            entry.verdict = "complex-hyperbolic"
        elif report.resonance is not None:
            entry.verdict = "resonant"
        else:
            entry.verdict = "not-simple"
        entry.summary = f"dimensional type {report.dimensional_type}" if report.dimensional_type else "; ".join(report.notes)
        entry.data = {
            "dimensional_type": report.dimensional_type,
            "variables": [_axis_name(i) for i in report.variables],
            "residues": [str(r) for r in report.residues],
            "resonance": list(report.resonance) if report.resonance is not None else None,
        }
        if report.resonance is not None:
            entry.certificates.append(Certificate(
                name="resonance", value=str(list(report.resonance)), identity="sum(k_i residue_i) = 0"
            ))

    def _handle_jouanolou(self, stmt, args, ctx, entry) -> None:
        m = self._as_int(args[0])
        X, omega = jouanolou(m, ctx.field)
        entry.verdict = "verified"
        entry.summary = f"Jouanolou field of degree {m}"
        entry.data = {"field": str(X), "form": str(omega)}
        entry.certificates.append(Certificate(name="omega", value=str(omega), identity="i_X(omega) = 0"))
        entry.certificates.append(Certificate(name="omega", value=str(omega), identity="i_R(omega) = 0"))
        entry.certificates.append(Certificate(name="omega", value=str(omega), identity="omega ∧ d(omega) = 0"))

    def _handle_first_integral(self, stmt, args, ctx, entry) -> None:
        X, f = self._as_field(args[0]), self._as_function(args[1])
        entry.verdict = _bool(is_first_integral(X, f))
        entry.summary = f"X(f) = {directional_derivative(X, f)}"
        entry.certificates.append(Certificate(name="X(f)", value=str(directional_derivative(X, f)), identity="X(f) = 0"))

    def _handle_surface_check(self, stmt, args, ctx, entry) -> None:
        X, f = self._as_field(args[0]), self._as_poly(args[1])
        invariant = invariant_hypersurface_check(X, f)
        entry.verdict = _bool(invariant)
        Xf = directional_derivative(X, f).as_poly()
        if invariant:
            cofactor = Xf.exact_quotient(f)
            entry.summary = f"X(f) = ({cofactor}) * f"
            entry.certificates.append(Certificate(name="cofactor", value=str(cofactor), identity="X(f) = cofactor * f"))
        else:
            entry.summary = f"f does not divide X(f) = {Xf}"

    def _handle_surface_search(self, stmt, args, ctx, entry) -> None:
        X = self._as_field(args[0])
        cap = self._int_option(stmt, "cap", ctx.options.surface_degree_cap)
        found = invariant_hypersurface_candidates(X, cap)
        entry.bound = cap
        entry.verdict = "found" if found else "none"
        entry.summary = f"{len(found)} homogeneous invariant surface(s) of degree <= {cap}"
        entry.data = {
            "surfaces": [
                {"polynomial": str(h.polynomial), "cofactor": str(h.cofactor), "first_integral": h.first_integral}
                for h in found
            ]
        }
        for h in found:
            entry.certificates.append(Certificate(
                name=str(h.polynomial), value=str(h.cofactor), identity="X(f) = cofactor * f"
            ))

    def _handle_decompose(self, stmt, args, ctx, entry) -> None:
        w3, w1, w2 = (self._as_form(a, 1) for a in args)
        try:
            l1, l2 = decompose_over_pair(w3, w1, w2)
        except NotCoplanar as e:
            entry.verdict = "not-coplanar"
            entry.summary = str(e)
            return
        entry.verdict = "coplanar"
        entry.summary = f"w3 = ({l1}) * w1 + ({l2}) * w2"
        entry.data = {"l1": str(l1), "l2": str(l2)}
        entry.certificates.append(Certificate(name="l1", value=str(l1), identity="w3 = l1 * w1 + l2 * w2"))
        entry.certificates.append(Certificate(name="l2", value=str(l2), identity="w3 = l1 * w1 + l2 * w2"))

    def _handle_pencil_member(self, stmt, args, ctx, entry) -> None:
        p = self._pencil(args)
        a, b = self._as_scalar(args[2]), self._as_scalar(args[3])
        locus = member_codim1_locus(p, a, b)
        reduced = member(p, a, b)
        entry.verdict = "unit-locus" if locus.is_constant() else "exceptional"
        entry.summary = f"member {reduced}"
        entry.data = {"member": str(reduced), "codim1_locus": str(locus)}
        entry.certificates.append(Certificate(name="codim1 locus", value=str(locus), identity="gcd of a*gen1 + b*gen2"))

    def _handle_pencil_sample(self, stmt, args, ctx, entry) -> None:
        p = self._pencil(args)
        samples = self._int_option(stmt, "samples", ctx.options.sample_count)
        seed = self._int_option(stmt, "seed", ctx.options.seed)
        cap = self._int_option(stmt, "cap", ctx.options.exceptional_cap)
        result = sample_exceptional_parameters(p, samples, seed, ctx.options.parameter_range, cap)
        entry.bound = cap
        entry.verdict = "within-cap" if result.within_cap else "exceeds-cap"
        entry.summary = f"{len(result.exceptional)} exceptional parameter(s) among {samples} samples, seed {seed}"
        entry.data = {
            "samples": samples,
            "seed": seed,
            "exceptional": [list(pt) for pt in result.exceptional],
            "loci": result.loci,
        }

    def _handle_axis_surface(self, stmt, args, ctx, entry) -> None:
        p = self._pencil(args)
        f = self._as_poly(args[2])
        entry.verdict = _bool(verify_axis_invariant_hypersurface(p, f))
        entry.summary = "f = 0 is invariant by the axis" if entry.verdict == "true" else "f = 0 is not invariant by the axis"
        three = wedge(differential(f), wedge(p.gen1, p.gen2))
        entry.certificates.append(Certificate(name="df ∧ gen1 ∧ gen2", value=str(three), identity="f divides df ∧ axis"))

    def _handle_axis_invariance(self, stmt, args, ctx, entry) -> None:
        X = self._as_field(args[0])
        axes = [i for i in range(X.nvars) if axis_invariance(X, i)]
        entry.verdict = ",".join(_axis_name(i) for i in axes) or "none"
        entry.summary = f"{len(axes)} invariant coordinate axes"
        entry.data = {"axes": [_axis_name(i) for i in axes]}

    def _handle_eigen_law(self, stmt, args, ctx, entry) -> None:
        a = self._as_eigenvalues(args[0], ctx)
        laws = [(c, blowup_eigenvalue_law(a, c)) for c in self._charts(stmt)]
        preserved = all(is_strongly_diagonalizable(b) for _, b in laws)
        entry.verdict = "strongly-non-resonant" if preserved else "resonant-chart"
        entry.summary = "; ".join(f"{c.label}: {b}" for c, b in laws)
        entry.data = {"charts": {c.label: [str(v) for v in b.values] for c, b in laws}}


# Global interpreter instance
_interpreter: Optional[ScriptInterpreter] = None


def get_interpreter() -> ScriptInterpreter:
    """Get or create the interpreter instance."""
    global _interpreter
    if _interpreter is None:
        _interpreter = ScriptInterpreter()
    return _interpreter
