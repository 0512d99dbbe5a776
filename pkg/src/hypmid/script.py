"""The .hgc construction language: parser, evaluator, canonical formatter.

A script is a line-oriented sequence of single-assignment bindings,
assertions and output directives; there is no control flow and no expression
arithmetic, so the evaluator is total on well-formed programs and a script is
exactly one compass-and-ruler construction.  ``#`` starts a comment; comments
survive formatting.

Statement forms::

    point NAME = (x, y)
    line NAME = line(A, B) | perp(L, P)
    circle NAME = circle(C, r) | circle(C, P) | circle_through(A, B, C)
                | circle_diameter(A, B) | ortho_circle(A, B)
    geodesic NAME = geodesic(h2|b2, A, B)
    NAME = intersect(A, B) select upper|in_disk|boundary|nearest P
    NAME = invert(P) | reflect_real(P) | midpoint_oracle(h2|b2, A, B)
    assert on(P, C) | orthogonal(A, B) | tangent(L, C) | collinear(P, Q, R)
         | equal_rho(h2|b2, A, B, C, D) | equals(P, Q)   [tol NUMBER]
    output NAME

The names ``unit`` (unit circle), ``axis`` (real axis) and ``origin`` are
predefined.  Selectors are mandatory on every intersection.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .errors import GeometryError
from .geom2d import (
    DEFAULT_TOL,
    IN_DISK,
    ON_BOUNDARY,
    ORIGIN,
    UPPER,
    Circle2,
    Line2,
    Point2,
    Selector,
    Tolerance,
    circle_on_diameter,
    circle_through,
    circles_orthogonal,
    collinear,
    invert_unit,
    is_on,
    line_circle_orthogonal,
    line_tangent_to_circle,
    line_through,
    lines_orthogonal,
    nearest_to,
    perpendicular_through,
    reflect_in_line,
)
from .hypmetric import Geodesic, Model, geodesic_of, midpoint_oracle, ortho_circle_through, rho
from .constructions.trace import _run_intersection

BUILTINS = {
    "unit": Circle2(ORIGIN, 1.0),
    "axis": Line2(Point2(0.0, 1.0), 0.0),
    "origin": ORIGIN,
}


class ScriptError(Exception):
    """Base class for .hgc language errors."""


class ScriptSyntaxError(ScriptError):
    def __init__(self, line: int, column: int, message: str, found: str = "", expected: tuple = ()):
        detail = f"line {line}, column {column}: {message}"
        if found:
            detail += f" (found {found!r})"
        if expected:
            detail += f"; expected one of {', '.join(expected)}"
        super().__init__(detail)
        self.line = line
        self.column = column
        self.found = found
        self.expected = expected


class DuplicateNameError(ScriptError):
    def __init__(self, line: int, name: str):
        super().__init__(f"line {line}: name {name!r} is already bound (single assignment)")
        self.line = line
        self.name = name


class UnknownNameError(ScriptError):
    def __init__(self, name: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}unknown name {name!r}")
        self.line = line
        self.name = name


class ArityError(ScriptError):
    def __init__(self, line: int, fn: str, expected: int, got: int):
        super().__init__(f"line {line}: {fn} takes {expected} argument(s), got {got}")
        self.line = line


class RuntimeGeometryError(ScriptError):
    """A geometry operation failed while evaluating a statement."""

    def __init__(self, line: int, text: str, cause: Exception):
        super().__init__(f"line {line} ({text}): {cause}")
        self.line = line
        self.statement = text
        self.cause = cause


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class PointLit:
    x: float
    y: float


@dataclass(frozen=True)
class Ref:
    name: str


@dataclass(frozen=True)
class SelectorNode:
    kind: str
    anchor: object = None  # Ref | PointLit | Call


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple  # Ref | PointLit | Call | float | str (model tag)


@dataclass(frozen=True)
class Binding:
    keyword: str | None  # point | line | circle | geodesic | None (point op)
    name: str
    expr: object
    comment: str | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Assertion:
    check: Call
    tolerance: float | None = None
    comment: str | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Output:
    name: str
    comment: str | None = None
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Comment:
    text: str
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Blank:
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Program:
    items: tuple

    def statements(self):
        for item in self.items:
            if isinstance(item, (Binding, Assertion, Output)):
                yield item


# valid argument counts; model-taking functions list the count incl. the tag
_FN_ARITY = {
    "line": 2,
    "perp": 2,
    "circle": 2,
    "circle_through": 3,
    "circle_diameter": 2,
    "ortho_circle": 2,
    "geodesic": 3,
    "invert": 1,
    "reflect_real": 1,
    "midpoint_oracle": 3,
    "intersect": 2,
    "on": 2,
    "orthogonal": 2,
    "tangent": 2,
    "collinear": 3,
    "equal_rho": 5,
    "equals": 2,
}
_MODEL_ARG = {"geodesic": 0, "midpoint_oracle": 0, "equal_rho": 0}
_LINE_FNS = ("line", "perp")
_CIRCLE_FNS = ("circle", "circle_through", "circle_diameter", "ortho_circle")
_POINT_FNS = ("invert", "reflect_real", "midpoint_oracle", "intersect")
_ASSERT_FNS = ("on", "orthogonal", "tangent", "collinear", "equal_rho", "equals")
_SELECTOR_KEYWORDS = ("upper", "in_disk", "boundary", "nearest")

_TOKEN_RE = re.compile(
    r"""\s*(?:(?P<number>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)
        |(?P<name>[A-Za-z_][A-Za-z0-9_]*)
        |(?P<punct>[(),=])
        )""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str  # number | name | punct | end
    text: str
    column: int


def _tokenize(line_text: str, lineno: int) -> tuple[list[_Token], str | None]:
    """Tokens of one line plus its comment text (without '#'), if any."""
    hash_pos = line_text.find("#")
    comment = None
    if hash_pos >= 0:
        comment = line_text[hash_pos + 1 :].rstrip("\n")
        line_text = line_text[:hash_pos]
    tokens: list[_Token] = []
    pos = 0
    while pos < len(line_text):
        if line_text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(line_text, pos)
        if not m or m.end() == pos:
            raise ScriptSyntaxError(lineno, pos + 1, "unexpected character", found=line_text[pos])
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()
    return tokens, comment


class _LineParser:
    def __init__(self, tokens: list[_Token], lineno: int, line_len: int):
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0
        self.line_len = line_len

    def peek(self) -> _Token:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return _Token("end", "", self.line_len + 1)

    def next(self) -> _Token:
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, message: str, expected: tuple = ()):
        tok = self.peek()
        raise ScriptSyntaxError(self.lineno, tok.column, message, found=tok.text or "end of line", expected=expected)

    def expect_punct(self, ch: str) -> None:
        tok = self.next()
        if tok.kind != "punct" or tok.text != ch:
            self.pos -= 1
            self.fail(f"expected {ch!r}", expected=(ch,))

    def expect_name(self, what: str = "name") -> str:
        tok = self.next()
        if tok.kind != "name":
            self.pos -= 1
            self.fail(f"expected {what}", expected=(what,))
        return tok.text

    def expect_number(self) -> float:
        tok = self.next()
        if tok.kind != "number":
            self.pos -= 1
            self.fail("expected number", expected=("number",))
        return float(tok.text)

    def at_end(self) -> bool:
        return self.pos >= len(self.tokens)


def _parse_point_literal(p: _LineParser) -> PointLit:
    p.expect_punct("(")
    x = p.expect_number()
    p.expect_punct(",")
    y = p.expect_number()
    p.expect_punct(")")
    return PointLit(x, y)


def _parse_arg(p: _LineParser, allow_number: bool = False):
    tok = p.peek()
    if tok.kind == "punct" and tok.text == "(":
        return _parse_point_literal(p)
    if tok.kind == "number":
        if not allow_number:
            p.fail("a bare number is only valid as a circle radius")
        p.next()
        return float(tok.text)
    if tok.kind == "name":
        nxt = p.tokens[p.pos + 1] if p.pos + 1 < len(p.tokens) else None
        if tok.text in _FN_ARITY and nxt is not None and nxt.kind == "punct" and nxt.text == "(":
            if tok.text == "intersect":
                p.fail("intersect(...) select ... cannot be nested; bind it to a name first")
            return _parse_call(p)
        p.next()
        return Ref(tok.text)
    p.fail("expected an argument", expected=("name", "number", "(", ")"))


def _parse_call(p: _LineParser) -> Call:
    fn = p.expect_name("function name")
    if fn not in _FN_ARITY:
        p.pos -= 1
        p.fail(f"unknown function {fn!r}", expected=tuple(sorted(_FN_ARITY)))
    p.expect_punct("(")
    args: list = []
    arity = _FN_ARITY[fn]
    for i in range(arity):
        if i > 0:
            p.expect_punct(",")
        if _MODEL_ARG.get(fn) == i:
            model = p.expect_name("model tag (h2 or b2)")
            if model not in ("h2", "b2"):
                p.pos -= 1
                p.fail("expected model tag", expected=("h2", "b2"))
            args.append(model)
        else:
            args.append(_parse_arg(p, allow_number=(fn == "circle" and i == 1)))
    p.expect_punct(")")
    return Call(fn, tuple(args))


def _parse_selector(p: _LineParser) -> SelectorNode:
    kw = p.expect_name("selector keyword")
    if kw not in _SELECTOR_KEYWORDS:
        p.pos -= 1
        p.fail("expected selector keyword", expected=_SELECTOR_KEYWORDS)
    if kw == "nearest":
        return SelectorNode("nearest", _parse_arg(p))
    return SelectorNode(kw)


class Parser:
    def __init__(self):
        self.names: set[str] = set(BUILTINS)

    def _check_refs(self, node, lineno: int):
        if isinstance(node, Ref) and node.name not in self.names:
            raise UnknownNameError(node.name, lineno)
        if isinstance(node, Call):
            for a in node.args:
                self._check_refs(a, lineno)
        if isinstance(node, SelectorNode) and node.anchor is not None:
            self._check_refs(node.anchor, lineno)

    def _bind(self, name: str, lineno: int) -> None:
        if name in self.names:
            raise DuplicateNameError(lineno, name)
        self.names.add(name)

    def parse_line(self, raw: str, lineno: int):
        tokens, comment = _tokenize(raw, lineno)
        if not tokens:
            if comment is not None:
                return Comment(comment, line=lineno)
            return Blank(line=lineno)
        p = _LineParser(tokens, lineno, len(raw))
        head = p.peek()
        if head.kind != "name":
            p.fail("expected a statement", expected=("point", "line", "circle", "geodesic", "assert", "output", "name"))

        if head.text == "assert":
            p.next()
            check = _parse_call(p)
            if check.fn not in _ASSERT_FNS:
                p.fail(f"{check.fn!r} is not an assertion kind", expected=_ASSERT_FNS)
            tolerance = None
            if not p.at_end() and p.peek().kind == "name" and p.peek().text == "tol":
                p.next()
                tolerance = p.expect_number()
            self._finish(p)
            self._check_refs(check, lineno)
            return Assertion(check, tolerance, comment, line=lineno)

        if head.text == "output":
            p.next()
            name = p.expect_name()
            self._finish(p)
            if name not in self.names:
                raise UnknownNameError(name, lineno)
            return Output(name, comment, line=lineno)

        if head.text in ("point", "line", "circle", "geodesic"):
            keyword = p.next().text
            name = p.expect_name()
            p.expect_punct("=")
            if keyword == "point":
                expr = _parse_point_literal(p)
            else:
                expr = _parse_call(p)
                allowed = {"line": _LINE_FNS, "circle": _CIRCLE_FNS, "geodesic": ("geodesic",)}[keyword]
                if expr.fn not in allowed:
                    p.fail(f"a {keyword} binding needs one of {allowed}")
            self._finish(p)
            self._check_refs(expr, lineno)
            self._bind(name, lineno)
            return Binding(keyword, name, expr, comment, line=lineno)

        # bare NAME = point-producing operation
        name = p.expect_name()
        p.expect_punct("=")
        expr = _parse_call(p)
        if expr.fn not in _POINT_FNS:
            p.fail(f"a bare binding needs one of {_POINT_FNS}")
        if expr.fn == "intersect":
            kw = p.expect_name("'select'")
            if kw != "select":
                p.pos -= 1
                p.fail("every intersection needs a selector", expected=("select",))
            selector = _parse_selector(p)
            expr = Call("intersect", expr.args + (selector,))
        self._finish(p)
        self._check_refs(expr, lineno)
        self._bind(name, lineno)
        return Binding(None, name, expr, comment, line=lineno)

    def _finish(self, p: _LineParser) -> None:
        if not p.at_end():
            p.fail("unexpected trailing input")


def parse(source: str) -> Program:
    """Parse .hgc text; errors carry line, column, offending token and expectations."""
    parser = Parser()
    items = []
    for lineno, raw in enumerate(source.splitlines(), start=1):
        items.append(parser.parse_line(raw, lineno))
    return Program(tuple(items))


# ---------------------------------------------------------------------------
# Formatting


def _fmt_float(v: float) -> str:
    return repr(v)


def _fmt_node(node) -> str:
    if isinstance(node, PointLit):
        return f"({_fmt_float(node.x)}, {_fmt_float(node.y)})"
    if isinstance(node, Ref):
        return node.name
    if isinstance(node, float):
        return _fmt_float(node)
    if isinstance(node, str):  # model tag
        return node
    if isinstance(node, SelectorNode):
        if node.kind == "nearest":
            return f"nearest {_fmt_node(node.anchor)}"
        return node.kind
    if isinstance(node, Call):
        if node.fn == "intersect" and len(node.args) == 3:
            a, b, sel = node.args
            return f"intersect({_fmt_node(a)}, {_fmt_node(b)}) select {_fmt_node(sel)}"
        return f"{node.fn}({', '.join(_fmt_node(a) for a in node.args)})"
    raise TypeError(f"cannot format {node!r}")


def _fmt_item(item) -> str:
    if isinstance(item, Blank):
        return ""
    if isinstance(item, Comment):
        return "#" + item.text
    if isinstance(item, Binding):
        head = f"{item.keyword} {item.name}" if item.keyword else item.name
        text = f"{head} = {_fmt_node(item.expr)}"
    elif isinstance(item, Assertion):
        text = f"assert {_fmt_node(item.check)}"
        if item.tolerance is not None:
            text += f" tol {_fmt_float(item.tolerance)}"
    elif isinstance(item, Output):
        text = f"output {item.name}"
    else:
        raise TypeError(f"cannot format {item!r}")
    if item.comment is not None:
        text += "  #" + item.comment
    return text


def format_program(p: Program) -> str:
    """Canonical pretty-print; parsing the output reproduces the program."""
    return "\n".join(_fmt_item(item) for item in p.items) + "\n"


# ---------------------------------------------------------------------------
# Evaluation


@dataclass(frozen=True)
class AssertionOutcome:
    line: int
    text: str
    residual: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class EvaluationResult:
    bindings: dict
    assertions: tuple[AssertionOutcome, ...]
    outputs: tuple[tuple[str, object], ...]

    def all_assertions_pass(self) -> bool:
        return all(a.passed for a in self.assertions)


def _carrier_of(value):
    if isinstance(value, Geodesic):
        return value.carrier
    return value


class _Evaluator:
    def __init__(self, tol: Tolerance):
        self.tol = tol
        self.env: dict[str, object] = dict(BUILTINS)

    def value(self, node, lineno: int):
        if isinstance(node, PointLit):
            return Point2(node.x, node.y)
        if isinstance(node, Ref):
            return self.env[node.name]
        if isinstance(node, float):
            return node
        if isinstance(node, Call):
            return self.call(node, lineno)
        raise TypeError(f"cannot evaluate {node!r}")

    def point(self, node, lineno: int) -> Point2:
        v = self.value(node, lineno)
        if not isinstance(v, Point2):
            raise RuntimeGeometryError(lineno, _fmt_node(node), GeometryError(f"expected a point, got {type(v).__name__}"))
        return v

    def _selector(self, node: SelectorNode, lineno: int) -> Selector:
        if node.kind == "upper":
            return UPPER
        if node.kind == "in_disk":
            return IN_DISK
        if node.kind == "boundary":
            return ON_BOUNDARY
        return nearest_to(self.point(node.anchor, lineno))

    def call(self, call: Call, lineno: int):
        fn, args = call.fn, call.args
        tol = self.tol
        if fn == "line":
            return line_through(self.point(args[0], lineno), self.point(args[1], lineno), tol)
        if fn == "perp":
            base = _carrier_of(self.value(args[0], lineno))
            if not isinstance(base, Line2):
                raise RuntimeGeometryError(lineno, _fmt_node(call), GeometryError("perp needs a line first"))
            return perpendicular_through(base, self.point(args[1], lineno))
        if fn == "circle":
            center = self.point(args[0], lineno)
            second = self.value(args[1], lineno)
            radius = second if isinstance(second, float) else (second - center).norm()
            return Circle2(center, radius)
        if fn == "circle_through":
            return circle_through(*(self.point(a, lineno) for a in args), tol)
        if fn == "circle_diameter":
            return circle_on_diameter(self.point(args[0], lineno), self.point(args[1], lineno), tol)
        if fn == "ortho_circle":
            return ortho_circle_through(self.point(args[0], lineno), self.point(args[1], lineno), tol).as_circle()
        if fn == "geodesic":
            model = Model(args[0])
            return geodesic_of(model, self.point(args[1], lineno), self.point(args[2], lineno), tol)
        if fn == "invert":
            return invert_unit(self.point(args[0], lineno), tol)
        if fn == "reflect_real":
            return reflect_in_line(self.point(args[0], lineno), Point2(0.0, 1.0), 0.0)
        if fn == "midpoint_oracle":
            model = Model(args[0])
            return midpoint_oracle(model, self.point(args[1], lineno), self.point(args[2], lineno), tol)
        if fn == "intersect":
            a = _carrier_of(self.value(args[0], lineno))
            b = _carrier_of(self.value(args[1], lineno))
            selector = self._selector(args[2], lineno)
            _, value = _run_intersection(a, b, selector, tol)
            return value
        raise TypeError(f"unknown function {fn!r}")

    def residual(self, check: Call, lineno: int) -> float:
        fn, args = check.fn, check.args
        tol = self.tol
        if fn == "on":
            carrier = _carrier_of(self.value(args[1], lineno))
            return is_on(self.point(args[0], lineno), carrier, tol).residual
        if fn == "orthogonal":
            a = _carrier_of(self.value(args[0], lineno))
            b = _carrier_of(self.value(args[1], lineno))
            if isinstance(a, Circle2) and isinstance(b, Circle2):
                return circles_orthogonal(a, b, tol).residual
            if isinstance(a, Line2) and isinstance(b, Line2):
                return lines_orthogonal(a, b, tol).residual
            line, circ = (a, b) if isinstance(a, Line2) else (b, a)
            return line_circle_orthogonal(line, circ, tol).residual
        if fn == "tangent":
            l = _carrier_of(self.value(args[0], lineno))
            c = _carrier_of(self.value(args[1], lineno))
            if not (isinstance(l, Line2) and isinstance(c, Circle2)):
                raise RuntimeGeometryError(lineno, _fmt_node(check), GeometryError("tangent needs (line, circle)"))
            return line_tangent_to_circle(l, c, tol).residual
        if fn == "collinear":
            return collinear(*(self.point(a, lineno) for a in args), tol).residual
        if fn == "equal_rho":
            model = Model(args[0])
            pts = [self.point(a, lineno) for a in args[1:]]
            return rho(model, pts[0], pts[1]) - rho(model, pts[2], pts[3])
        if fn == "equals":
            return (self.point(args[0], lineno) - self.point(args[1], lineno)).norm()
        raise TypeError(f"unknown assertion {fn!r}")


def evaluate(
    program: Program,
    tol: Tolerance = DEFAULT_TOL,
    bind: dict[str, Point2] | None = None,
) -> EvaluationResult:
    """Run a program: execute bindings in order, record assertion residuals.

    ``bind`` overrides the values of point-literal bindings by name; naming a
    binding the script does not define raises UnknownNameError.  Assertions
    are fail-soft (all residuals are reported); geometry failures in bindings
    abort with a RuntimeGeometryError carrying the statement location.
    """
    if bind:
        literal_points = {
            item.name for item in program.statements() if isinstance(item, Binding) and item.keyword == "point"
        }
        for name in bind:
            if name not in literal_points:
                raise UnknownNameError(name)
    ev = _Evaluator(tol)
    assertions: list[AssertionOutcome] = []
    outputs: list[tuple[str, object]] = []
    for item in program.items:
        if isinstance(item, Binding):
            try:
                if item.keyword == "point" and bind and item.name in bind:
                    value = bind[item.name]
                else:
                    value = ev.value(item.expr, item.line)
            except RuntimeGeometryError:
                raise
            except (GeometryError, ValueError) as exc:
                raise RuntimeGeometryError(item.line, _fmt_item(item), exc) from exc
            ev.env[item.name] = value
        elif isinstance(item, Assertion):
            try:
                residual = ev.residual(item.check, item.line)
            except RuntimeGeometryError:
                raise
            except (GeometryError, ValueError) as exc:
                raise RuntimeGeometryError(item.line, _fmt_item(item), exc) from exc
            tolerance = item.tolerance if item.tolerance is not None else tol.eps_incidence
            assertions.append(
                AssertionOutcome(
                    line=item.line,
                    text=_fmt_node(item.check),
                    residual=residual,
                    tolerance=tolerance,
                    passed=abs(residual) <= tolerance and math.isfinite(residual),
                )
            )
        elif isinstance(item, Output):
            outputs.append((item.name, ev.env[item.name]))
    return EvaluationResult(bindings=ev.env, assertions=tuple(assertions), outputs=tuple(outputs))
