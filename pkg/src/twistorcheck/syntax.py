"""Text syntax for scalars and forms.

Grammar (ASCII only)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := '(' expr ')' | FUNC '(' expr ')' | GEN | 'm' | 'mb' | 'i' | INT
    FUNC   := d | del | delbar | conj | star | astar
    GEN    := s1 | s2 | sb1 | sb2 | dm | dmb | dz1 | dz2 | dzb1 | dzb2

'*' is scalar multiplication or wedge depending on the operand grades.
Unary minus sits below '^', so ``-m^2`` is ``-(m^2)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Union

from .exterior import (
    DZ,
    SIGMA,
    BidegreeError,
    Form,
    conjugate_form,
    convert_frame,
    del_delbar,
    exterior_derivative,
    gen,
    scalar_form,
)
from .scalars import I, M, MB, ONE, RationalFunction, as_scalar, format_scalar

__all__ = [
    "Expr",
    "Num",
    "ImagUnit",
    "Var",
    "Gen",
    "Func",
    "Neg",
    "BinOp",
    "Pow",
    "ParseError",
    "ExprSyntaxError",
    "ExprTypeError",
    "EvaluationError",
    "parse",
    "type_of",
    "evaluate",
    "format_form",
    "format_value",
    "print_expr",
    "to_text",
]

FUNCTIONS = ("d", "del", "delbar", "conj", "star", "astar")
GENERATORS = SIGMA.generators + DZ.generators[:4]
VARIABLES = ("m", "mb")


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at column {pos + 1}")
        self.message = message
        self.pos = pos


class ExprSyntaxError(ParseError):
    pass


class ExprTypeError(ParseError):
    pass


class EvaluationError(ParseError):
    pass


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ImagUnit:
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Gen:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Func:
    name: str
    arg: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int = field(default=0, compare=False)


Expr = Union[Num, ImagUnit, Var, Gen, Func, Neg, BinOp, Pow]


# ---------------------------------------------------------------------------
# tokenizer and parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # 'int', 'name', 'op', 'end'
    text: str
    pos: int


def _tokenize(text: str) -> List[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if mt is None:  # only trailing whitespace left
            break
        num, name, op = mt.groups()
        start = mt.start(mt.lastindex)
        if num is not None:
            out.append(_Tok("int", num, start))
        elif name is not None:
            out.append(_Tok("name", name, start))
        elif op in "+-*/^()":
            out.append(_Tok("op", op, start))
        else:
            raise ExprSyntaxError(f"unexpected character {op!r}", start)
        pos = mt.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.k = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.k]

    def eat(self, text: str) -> bool:
        if self.cur.kind == "op" and self.cur.text == text:
            self.k += 1
            return True
        return False

    def expect(self, text: str):
        if not self.eat(text):
            raise ExprSyntaxError(f"expected {text!r}, found {self._describe()}", self.cur.pos)

    def _describe(self) -> str:
        return "end of input" if self.cur.kind == "end" else repr(self.cur.text)

    def parse(self) -> Expr:
        if self.cur.kind == "end":
            raise ExprSyntaxError("empty expression", 0)
        e = self.expr()
        if self.cur.kind != "end":
            raise ExprSyntaxError(f"unexpected {self._describe()}", self.cur.pos)
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            tok = self.cur
            self.k += 1
            left = BinOp(tok.text, left, self.term(), tok.pos)
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.cur.kind == "op" and self.cur.text in "*/":
            tok = self.cur
            self.k += 1
            left = BinOp(tok.text, left, self.factor(), tok.pos)
        return left

    def factor(self) -> Expr:
        tok = self.cur
        if self.eat("-"):
            return Neg(self.factor(), tok.pos)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        tok = self.cur
        if self.eat("^"):
            if self.cur.kind != "int":
                raise ExprSyntaxError(f"exponent must be a nonnegative integer, found {self._describe()}", self.cur.pos)
            n = int(self.cur.text)
            self.k += 1
            return Pow(base, n, tok.pos)
        return base

    def atom(self) -> Expr:
        tok = self.cur
        if self.eat("("):
            e = self.expr()
            self.expect(")")
            return e
        if tok.kind == "int":
            self.k += 1
            return Num(int(tok.text), tok.pos)
        if tok.kind == "name":
            self.k += 1
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Func(tok.text, arg, tok.pos)
            if tok.text in GENERATORS:
                return Gen(tok.text, tok.pos)
            if tok.text in VARIABLES:
                return Var(tok.text, tok.pos)
            if tok.text == "i":
                return ImagUnit(tok.pos)
            raise ExprSyntaxError(f"unknown name {tok.text!r}", tok.pos)
        raise ExprSyntaxError(f"unexpected {self._describe()}", tok.pos)


def type_of(e: Expr) -> str:
    """'scalar' or 'form'; raises ExprTypeError at the offending node."""
    if isinstance(e, (Num, ImagUnit, Var)):
        return "scalar"
    if isinstance(e, Gen):
        return "form"
    if isinstance(e, Neg):
        return type_of(e.arg)
    if isinstance(e, Func):
        t = type_of(e.arg)
        return t if e.name == "conj" else "form"
    if isinstance(e, Pow):
        if type_of(e.base) == "form":
            raise ExprTypeError("power of a form", e.pos)
        return "scalar"
    if isinstance(e, BinOp):
        lt, rt = type_of(e.left), type_of(e.right)
        if e.op == "/" and rt == "form":
            raise ExprTypeError("form in denominator", e.right.pos)
        return "form" if "form" in (lt, rt) else "scalar"
    raise TypeError(f"not an expression node: {e!r}")


def parse(text: str) -> Expr:
    """Parse and type-check ``text``."""
    e = _Parser(text).parse()
    type_of(e)
    return e


# ---------------------------------------------------------------------------
# evaluation

Value = Union[RationalFunction, Form]


def _rename_shared(a: Form, target) -> Optional[Form]:
    """``a`` re-read in ``target`` when it only uses dm, dmb (common to both
    frames, in the same relative order); None otherwise."""
    names = [[a.frame.generators[g] for g in mono] for mono in a.terms]
    if any(n not in ("dm", "dmb") for mono in names for n in mono):
        return None
    return Form({tuple(target.index(n) for n in mono): c for mono, c in zip(names, a.terms.values())}, target)


def _common(a: Form, b: Form):
    if a.frame is b.frame:
        return a, b
    # keep dz-frame text in the dz frame when the other operand is only dm, dmb
    if a.frame is DZ and (b2 := _rename_shared(b, DZ)) is not None:
        return a, b2
    if b.frame is DZ and (a2 := _rename_shared(a, DZ)) is not None:
        return a2, b
    return convert_frame(a, "sigma"), convert_frame(b, "sigma")


def _as_form(x: Value, frame=SIGMA) -> Form:
    return x if isinstance(x, Form) else scalar_form(x, frame)


def evaluate(e: Expr, metric=None) -> Value:
    """Evaluate to a RationalFunction (scalar expressions) or a Form.

    Mixed sigma/dz expressions are brought to the sigma frame.  ``star``
    and ``astar`` need ``metric``.
    """
    if isinstance(e, str):
        e = parse(e)
    return _eval(e, metric)


def _eval(e: Expr, metric) -> Value:
    if isinstance(e, Num):
        return as_scalar(e.value)
    if isinstance(e, ImagUnit):
        return I
    if isinstance(e, Var):
        return M if e.name == "m" else MB
    if isinstance(e, Gen):
        return gen(e.name)
    if isinstance(e, Neg):
        return -_eval(e.arg, metric)
    if isinstance(e, Pow):
        return _eval(e.base, metric) ** e.exponent
    if isinstance(e, BinOp):
        a, b = _eval(e.left, metric), _eval(e.right, metric)
        if isinstance(a, Form) or isinstance(b, Form):
            if e.op == "/":
                if not b:
                    raise EvaluationError("division by zero", e.pos)
                return a.scale(1 / b)
            frame = a.frame if isinstance(a, Form) else b.frame
            a, b = _common(_as_form(a, frame), _as_form(b, frame))
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            return a * b
        if e.op == "/" and not b:
            raise EvaluationError("division by zero", e.pos)
        return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__, "/": a.__truediv__}[e.op](b)
    if isinstance(e, Func):
        return _apply(e.name, _eval(e.arg, metric), metric, e.pos)
    raise TypeError(f"not an expression node: {e!r}")


def _apply(name: str, x: Value, metric, pos: int) -> Value:
    if name == "conj":
        return x.conjugate() if isinstance(x, RationalFunction) else conjugate_form(x)
    f = _as_form(x)
    try:
        if name == "d":
            return exterior_derivative(f)
        if name in ("del", "delbar"):
            return del_delbar(convert_frame(f, "sigma"))[0 if name == "del" else 1]
        if metric is None:
            raise EvaluationError(f"{name} needs a metric", pos)
        from .hodge import antilinear_star, linear_star

        op = antilinear_star if name == "astar" else linear_star
        return op(convert_frame(f, "sigma"), metric)
    except BidegreeError as exc:
        raise EvaluationError(f"{name}: {exc}", pos) from None


# ---------------------------------------------------------------------------
# printing

def _monomial_text(frame, mono) -> str:
    return "*".join(frame.generators[g] for g in mono)


def _term_text(frame, mono, c):
    """(negative, body): the term is ``body`` or its negation."""
    if not mono:
        text = format_scalar(c, factor=True)
        if text.startswith("-"):
            return True, format_scalar(-c, factor=True)
        return False, text
    body = _monomial_text(frame, mono)
    neg = format_scalar(c, factor=True).startswith("-")
    if neg:
        c = -c
    if c != ONE:
        body = f"{format_scalar(c, factor=True)} * {body}"
    return neg, body


def _join(frame, items) -> str:
    out = ""
    for k, (mono, c) in enumerate(items):
        neg, body = _term_text(frame, mono, c)
        if k == 0:
            if neg:
                wrap = len(mono) > 1 and body == _monomial_text(frame, mono)
                body = f"-({body})" if wrap else f"-{body}"
            out = body
        else:
            out += f" - {body}" if neg else f" + {body}"
    return out


def format_form(f: Form) -> str:
    """Canonical text for a form: terms by degree then monomial order.

    When every coefficient shares one nonconstant denominator it is pulled
    out as ``(1/den) * (...)``.
    """
    items = f.sorted_terms()
    if not items:
        return "0"
    dens = {c.den for _, c in items}
    if len(items) > 1 and len(dens) == 1:
        den = next(iter(dens))
        if not den.is_constant():
            scale = RationalFunction.from_polynomial(den)
            inner = _join(f.frame, [(mono, c * scale) for mono, c in items])
            return f"({format_scalar(1 / scale)}) * ({inner})"
    return _join(f.frame, items)


def format_value(v: Value) -> str:
    if isinstance(v, Form):
        return format_form(v)
    return format_scalar(v)


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def print_expr(e: Expr) -> str:
    return _pr(e, 0)


def _pr(e: Expr, ctx: int) -> str:
    """Render ``e`` in a context of binding strength ``ctx``
    (0 top, 1 sum, 2 product, 3 unary, 4 power base)."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, ImagUnit):
        return "i"
    if isinstance(e, (Var, Gen)):
        return e.name
    if isinstance(e, Func):
        return f"{e.name}({_pr(e.arg, 0)})"
    if isinstance(e, Pow):
        s = f"{_pr(e.base, 4)}^{e.exponent}"
        return f"({s})" if ctx >= 4 else s
    if isinstance(e, Neg):
        s = f"-{_pr(e.arg, 3)}"
        return f"({s})" if ctx >= 4 else s
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        s = f"{_pr(e.left, p)} {e.op} {_pr(e.right, p + 1)}"
        return f"({s})" if ctx > p else s
    raise TypeError(f"not an expression node: {e!r}")


def to_text(x: Union[Expr, Form, RationalFunction]) -> str:
    """Print an expression tree, a form or a scalar."""
    if isinstance(x, (Form, RationalFunction)):
        return format_value(x)
    return print_expr(x)
