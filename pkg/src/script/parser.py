"""
Parser and formatter for .fol scripts.

    script    := statement*
    statement := 'field' NAME ':' expr ';'
               | 'let' NAME '=' expr ';'
               | COMMAND arg* option* ';'
    expr      := wedge (('+' | '-') wedge)*
    wedge     := product (('∧' | '^^') product)*
    product   := unary (('*' | '/') unary)*
    unary     := ('-' | '+') unary | power
    power     := atom ('^' ['-'] INT)?
    atom      := INT | NAME | NAME '(' [expr (',' expr)*] ')' | '(' expr (',' expr)* ')'

Command names may contain hyphens (`check-tangent`); options are
`--name [value]`; `#` starts a comment. Names, builtin arities and command
arities are resolved while parsing.
"""

import re
from enum import Enum
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field

from ..errors import ScriptArityError, ScriptSyntaxError, UnboundName, UnknownCommand

# (min, max) argument counts; None means "number of variables".
BUILTINS: Dict[str, Tuple[Optional[int], Optional[int]]] = {
    "d": (1, 1),
    "ip": (2, 2),
    "vf": (None, None),
    "diag": (None, None),
    "radial": (0, 0),
    "jouanolou_field": (1, 1),
    "jouanolou_form": (1, 1),
}

COMMANDS: Dict[str, Tuple[int, int]] = {
    "check-tangent": (2, 2),
    "check-integrable": (1, 1),
    "remove-codim1": (1, 1),
    "resonance": (1, 1),
    "blowup": (1, 1),
    "pencil-check": (2, 2),
    "pencil-from-three": (4, 4),
    "pencil-theta": (2, 2),
    "pencil-curvature": (2, 2),
    "pencil-classify": (2, 2),
    "log-pencil": (1, 3),
    "normal-form": (2, 2),
    "ch-check": (1, 1),
    "jouanolou": (1, 1),
    "first-integral": (2, 2),
    "surface-check": (2, 2),
    "surface-search": (1, 1),
    "decompose": (3, 3),
    "pencil-member": (4, 4),
    "pencil-sample": (2, 2),
    "axis-surface": (3, 3),
    "axis-invariance": (1, 1),
    "eigen-law": (1, 1),
}

KEYWORDS = {"field", "let"}
VARIABLE = re.compile(r"x([1-9][0-9]*)$")

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<option>--[A-Za-z][A-Za-z0-9_-]*)
  | (?P<int>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>\^\^|∧|[-+*/^(),;:=])
    """,
    re.VERBOSE,
)


class Token(BaseModel):
    kind: str
    text: str
    line: int
    column: int
    start: int
    end: int


def tokenize(source: str) -> List[Token]:
    tokens: List[Token] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ScriptSyntaxError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind=kind, text=m.group(), line=line, column=pos - line_start + 1,
                                start=pos, end=m.end()))
        pos = m.end()
    tokens.append(Token(kind="eof", text="", line=line, column=pos - line_start + 1, start=pos, end=pos))
    return tokens


# ============ AST ============

class ExprKind(str, Enum):
    NUM = "num"
    VAR = "var"
    GEN = "gen"
    NAME = "name"
    NEG = "neg"
    BINOP = "binop"
    POW = "pow"
    CALL = "call"
    TUPLE = "tuple"


class Expr(BaseModel):
    """Expression node; `value` holds the integer of NUM, VAR (0-based) and POW."""
    kind: ExprKind
    value: Optional[int] = None
    name: Optional[str] = None
    args: List["Expr"] = Field(default_factory=list)


Expr.model_rebuild()


class FieldDecl(BaseModel):
    kind: Literal["field"] = "field"
    line: int = 0
    generator: str
    minpoly: Expr


class LetStmt(BaseModel):
    kind: Literal["let"] = "let"
    line: int = 0
    name: str
    value: Expr


class CommandOption(BaseModel):
    name: str
    value: Optional[Union[int, str]] = None


class CommandStmt(BaseModel):
    kind: Literal["command"] = "command"
    line: int = 0
    name: str
    args: List[Expr] = Field(default_factory=list)
    options: List[CommandOption] = Field(default_factory=list)

    def option(self, name: str, default: Optional[Union[int, str]] = None) -> Optional[Union[int, str]]:
        for opt in self.options:
            if opt.name == name:
                return opt.value
        return default

    def flag(self, name: str) -> bool:
        return any(opt.name == name for opt in self.options)


Statement = Union[FieldDecl, LetStmt, CommandStmt]


class Script(BaseModel):
    statements: List[Statement] = Field(default_factory=list)
    nvars: int = 3
    generator: Optional[str] = None

    @property
    def field_decl(self) -> Optional[FieldDecl]:
        return next((s for s in self.statements if isinstance(s, FieldDecl)), None)

    def commands(self) -> List[CommandStmt]:
        return [s for s in self.statements if isinstance(s, CommandStmt)]


# ============ Parser ============

class _Parser:
    def __init__(self, source: str):
        self.tokens = tokenize(source)
        self.pos = 0
        self.generator: Optional[str] = None
        self.bound: set = set()
        self.max_var = 0
        self.nvar_calls: List[Tuple[Expr, Token]] = []

    # ---- token helpers ----

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def at(self, *texts: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in texts

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        return self.advance()

    def error(self, message: str, token: Optional[Token] = None) -> None:
        t = token or self.tok
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ScriptSyntaxError(f"{message}, found {found}", t.line, t.column)

    # ---- statements ----

    def script(self) -> Script:
        statements: List[Statement] = []
        while self.tok.kind != "eof":
            statements.append(self.statement(first=not statements))
        for call, token in self.nvar_calls:
            nvars = max(3, self.max_var)
            if len(call.args) != nvars:
                raise ScriptArityError(
                    f"{call.name} expects {nvars} arguments, got {len(call.args)} "
                    f"(line {token.line}, column {token.column})"
                )
        return Script(statements=statements, nvars=max(3, self.max_var), generator=self.generator)

    def statement(self, first: bool) -> Statement:
        t = self.tok
        if t.kind != "name":
            self.error("expected a statement")
        if t.text == "field":
            if not first:
                self.error("the field declaration must be the first statement", t)
            self.advance()
            gen = self.tok
            if gen.kind != "name" or gen.text in KEYWORDS or VARIABLE.match(gen.text) or gen.text in BUILTINS:
                self.error("expected a generator name")
            self.advance()
            self.generator = gen.text
            self.expect(":")
            minpoly = self.expr()
            self.expect(";")
            return FieldDecl(line=t.line, generator=gen.text, minpoly=minpoly)
        if t.text == "let":
            self.advance()
            name = self.tok
            if (name.kind != "name" or name.text in KEYWORDS or VARIABLE.match(name.text)
                    or name.text in BUILTINS or name.text == self.generator):
                self.error("expected a bindable name")
            self.advance()
            self.expect("=")
            value = self.expr()
            self.expect(";")
            self.bound.add(name.text)
            return LetStmt(line=t.line, name=name.text, value=value)
        return self.command()

    def command(self) -> CommandStmt:
        first = self.advance()
        parts = [first.text]
        end = first.end
        while (self.at("-") and self.tok.start == end
               and self.tokens[self.pos + 1].kind == "name" and self.tokens[self.pos + 1].start == self.tok.end):
            self.advance()
            part = self.advance()
            parts.append(part.text)
            end = part.end
        while self.tok.kind == "int" and self.tok.start == end:
            # names such as remove-codim1
            part = self.advance()
            parts[-1] += part.text
            end = part.end
        name = "-".join(parts)
        if name not in COMMANDS:
            raise UnknownCommand(f"unknown command {name!r} (line {first.line}, column {first.column})")
        args: List[Expr] = []
        while not self.at(";") and self.tok.kind not in ("option", "eof"):
            args.append(self.unary())
        options: List[CommandOption] = []
        while self.tok.kind == "option":
            opt = self.advance()
            value: Optional[Union[int, str]] = None
            if self.tok.kind == "int":
                value = int(self.advance().text)
            elif self.at("-") and self.tokens[self.pos + 1].kind == "int":
                self.advance()
                value = -int(self.advance().text)
            elif self.tok.kind == "name":
                value = self.advance().text
            options.append(CommandOption(name=opt.text[2:], value=value))
        self.expect(";")
        lo, hi = COMMANDS[name]
        if not lo <= len(args) <= hi:
            expected = str(lo) if lo == hi else f"{lo}..{hi}"
            raise ScriptArityError(
                f"{name} expects {expected} arguments, got {len(args)} (line {first.line}, column {first.column})"
            )
        return CommandStmt(line=first.line, name=name, args=args, options=options)

    # ---- expressions ----

    def expr(self) -> Expr:
        left = self.wedge()
        while self.at("+", "-"):
            op = self.advance().text
            left = Expr(kind=ExprKind.BINOP, name=op, args=[left, self.wedge()])
        return left

    def wedge(self) -> Expr:
        left = self.product()
        while self.at("∧", "^^"):
            self.advance()
            left = Expr(kind=ExprKind.BINOP, name="∧", args=[left, self.product()])
        return left

    def product(self) -> Expr:
        left = self.unary()
        while self.at("*", "/"):
            op = self.advance().text
            left = Expr(kind=ExprKind.BINOP, name=op, args=[left, self.unary()])
        return left

    def unary(self) -> Expr:
        if self.at("-"):
            self.advance()
            return Expr(kind=ExprKind.NEG, args=[self.unary()])
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.at("^"):
            self.advance()
            sign = 1
            if self.at("-"):
                self.advance()
                sign = -1
            if self.tok.kind != "int":
                self.error("expected an integer exponent")
            exponent = sign * int(self.advance().text)
            return Expr(kind=ExprKind.POW, value=exponent, args=[base])
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "int":
            self.advance()
            return Expr(kind=ExprKind.NUM, value=int(t.text))
        if self.at("("):
            self.advance()
            items = [self.expr()]
            while self.at(","):
                self.advance()
                items.append(self.expr())
            self.expect(")")
            if len(items) == 1:
                return items[0]
            return Expr(kind=ExprKind.TUPLE, args=items)
        if t.kind == "name":
            self.advance()
            if self.at("("):
                return self.call(t)
            m = VARIABLE.match(t.text)
            if m:
                k = int(m.group(1))
                self.max_var = max(self.max_var, k)
                return Expr(kind=ExprKind.VAR, value=k - 1)
            if t.text == self.generator:
                return Expr(kind=ExprKind.GEN, name=t.text)
            if t.text in self.bound:
                return Expr(kind=ExprKind.NAME, name=t.text)
            raise UnboundName(f"name {t.text!r} is not bound (line {t.line}, column {t.column})")
        self.error("expected an expression")
        raise AssertionError("unreachable")

    def call(self, name: Token) -> Expr:
        if name.text not in BUILTINS:
            raise UnboundName(f"unknown function {name.text!r} (line {name.line}, column {name.column})")
        self.expect("(")
        args: List[Expr] = []
        if not self.at(")"):
            args.append(self.expr())
            while self.at(","):
                self.advance()
                args.append(self.expr())
        self.expect(")")
        node = Expr(kind=ExprKind.CALL, name=name.text, args=args)
        lo, hi = BUILTINS[name.text]
        if lo is None:
            self.nvar_calls.append((node, name))
        elif not lo <= len(args) <= hi:
            raise ScriptArityError(
                f"{name.text} expects {lo} arguments, got {len(args)} (line {name.line}, column {name.column})"
            )
        return node


def parse(source: str) -> Script:
    """Parse script text; raises ScriptSyntaxError, UnboundName or ScriptArityError."""
    return _Parser(source).script()


# ============ Formatter ============

_PREC = {"+": 1, "-": 1, "∧": 2, "*": 3, "/": 3}


def format_expr(e: Expr, parent: int = 0) -> str:
    """Print with the minimal parentheses the grammar needs."""
    if e.kind == ExprKind.NUM:
        return str(e.value)
    if e.kind == ExprKind.VAR:
        return f"x{e.value + 1}"
    if e.kind in (ExprKind.GEN, ExprKind.NAME):
        return e.name
    if e.kind == ExprKind.TUPLE:
        return "(" + ", ".join(format_expr(a) for a in e.args) + ")"
    if e.kind == ExprKind.CALL:
        return f"{e.name}(" + ", ".join(format_expr(a) for a in e.args) + ")"
    if e.kind == ExprKind.POW:
        base = format_expr(e.args[0], 6)
        if e.args[0].kind == ExprKind.POW:
            base = f"({base})"
        return f"{base}^{e.value}"
    if e.kind == ExprKind.NEG:
        inner = format_expr(e.args[0], 4)
        if inner.startswith("-"):
            inner = f"({inner})"
        text = f"-{inner}"
        return f"({text})" if parent > 4 else text
    prec = _PREC[e.name]
    left = format_expr(e.args[0], prec)
    right = format_expr(e.args[1], prec + 1)
    sep = f" {e.name} " if e.name in ("+", "-", "∧") else e.name
    text = f"{left}{sep}{right}"
    return f"({text})" if parent > prec else text


def format_statement(s: Statement) -> str:
    if isinstance(s, FieldDecl):
        return f"field {s.generator}: {format_expr(s.minpoly)};"
    if isinstance(s, LetStmt):
        return f"let {s.name} = {format_expr(s.value)};"
    parts = [s.name] + [format_expr(a, 4) for a in s.args]
    for opt in s.options:
        parts.append(f"--{opt.name}" if opt.value is None else f"--{opt.name} {opt.value}")
    return " ".join(parts) + ";"


def format_script(script: Script) -> str:
    return "\n".join(format_statement(s) for s in script.statements) + "\n"
