"""Asymptotic complexity expressions: parsing, evaluation, comparison.

Expressions are single-variable runtime shapes such as ``n^2 log n`` or
the number-field-sieve cost ``exp((64/9)^(1/3) * n^(1/3) * log(n)^(2/3))``.
``log`` is the natural logarithm and ``exp`` is base e throughout.
Evaluation happens entirely in log10 space so that quantities like
10^434294 are ordinary values rather than overflows.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

LOG10E = math.log10(math.e)
LN10 = math.log(10.0)

# Domain floor: expressions are evaluated for n >= 2 only.
DOMAIN_FLOOR = math.log10(2.0)


class ExprError(ValueError):
    """Base class for expression errors."""


class ExprSyntaxError(ExprError):
    """Malformed expression text; offset is the failing character index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class NonPositiveConstantError(ExprSyntaxError):
    """Constants must be strictly positive."""


class DomainError(ExprError):
    """Evaluation outside the n >= 2 domain, or log of a value below 1."""


class InconclusiveComparisonError(ExprError):
    """The comparison ladder ended without a stable verdict."""


# ---------------------------------------------------------------------------
# AST


class Expr:
    """Base node. Subclasses are frozen dataclasses; trees are immutable."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True)
class Const(Expr):
    value: Fraction

    def __post_init__(self):
        if self.value <= 0:
            raise ExprError(f"constant must be positive, got {self.value}")


@dataclass(frozen=True)
class Var(Expr):
    pass


@dataclass(frozen=True)
class Log(Expr):
    child: Expr


@dataclass(frozen=True)
class Exp(Expr):
    child: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: Fraction


@dataclass(frozen=True)
class Mul(Expr):
    children: tuple[Expr, ...]


@dataclass(frozen=True)
class Add(Expr):
    children: tuple[Expr, ...]


N = Var()


def _mul(children: list[Expr]) -> Expr:
    """Build a multiplication, flattening nested Mul and collapsing singles."""
    flat: list[Expr] = []
    for child in children:
        if isinstance(child, Mul):
            flat.extend(child.children)
        else:
            flat.append(child)
    if len(flat) == 1:
        return flat[0]
    return Mul(tuple(flat))


def _add(children: list[Expr]) -> Expr:
    flat: list[Expr] = []
    for child in children:
        if isinstance(child, Add):
            flat.extend(child.children)
        else:
            flat.append(child)
    if len(flat) == 1:
        return flat[0]
    return Add(tuple(flat))


# ---------------------------------------------------------------------------
# Parser

_FUNCTIONS = ("log", "exp", "sqrt")


class _Token:
    __slots__ = ("kind", "text", "offset")

    def __init__(self, kind: str, text: str, offset: int):
        self.kind = kind
        self.text = text
        self.offset = offset


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j < len(text) and text[j] == ".":
                j += 1
                while j < len(text) and text[j].isdigit():
                    j += 1
            if j < len(text) and text[j] in "eE":
                k = j + 1
                if k < len(text) and text[k] in "+-":
                    k += 1
                if k < len(text) and text[k].isdigit():
                    j = k + 1
                    while j < len(text) and text[j].isdigit():
                        j += 1
            tokens.append(_Token("number", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in "+*/^()-":
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token stream.

    Grammar (whitespace-insensitive):
        expr    := term ('+' term)*
        term    := factor (('*' | '/')? factor)*     # adjacency multiplies
        factor  := primary ('^' exponent)?
        primary := number | 'n' | func | '(' expr ')'
        func    := ('log'|'exp'|'sqrt') ('(' expr ')' | factor)
        exponent:= rational | '(' rational ')'       # optional sign in parens

    Division is sugar: a '/' b parses as a * b^(-1), except that a pure
    constant quotient folds to an exact Fraction. sqrt(E) is Pow(E, 1/2).
    """

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ExprSyntaxError(
                f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                tok.offset,
            )
        return self.advance()

    def parse(self) -> Expr:
        expr = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"unexpected {tok.text!r}", tok.offset)
        return expr

    def expr(self) -> Expr:
        terms = [self.term()]
        while self.peek().kind == "+":
            self.advance()
            terms.append(self.term())
        return _add(terms)

    _FACTOR_START = ("number", "name", "(")

    def term(self) -> Expr:
        result = self.factor()
        while True:
            tok = self.peek()
            if tok.kind == "*":
                self.advance()
                result = _mul([result, self.factor()])
            elif tok.kind == "/":
                self.advance()
                result = _divide(result, self.factor())
            elif tok.kind in self._FACTOR_START:
                result = _mul([result, self.factor()])
            else:
                return result

    def factor(self) -> Expr:
        base = self.primary()
        if self.peek().kind == "^":
            self.advance()
            return Pow(base, self.exponent())
        return base

    def primary(self) -> Expr:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return self.constant(tok)
        if tok.kind == "name":
            if tok.text == "n":
                self.advance()
                return N
            if tok.text in _FUNCTIONS:
                self.advance()
                return self.call(tok.text)
            raise ExprSyntaxError(f"unknown name {tok.text!r}", tok.offset)
        if tok.kind == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        raise ExprSyntaxError(
            f"expected a value, found {tok.text or 'end of input'!r}", tok.offset
        )

    def call(self, name: str) -> Expr:
        if self.peek().kind == "(":
            self.advance()
            arg = self.expr()
            self.expect(")")
        else:
            # Bare-argument shorthand: "log n", "exp n", "log log n".
            arg = self.factor()
        if name == "log":
            return Log(arg)
        if name == "exp":
            return Exp(arg)
        return Pow(arg, Fraction(1, 2))  # sqrt

    def constant(self, tok: _Token) -> Const:
        value = Fraction(tok.text)
        if value <= 0:
            raise NonPositiveConstantError(
                f"constant must be positive, got {tok.text}", tok.offset
            )
        return Const(value)

    def exponent(self) -> Fraction:
        tok = self.peek()
        if tok.kind == "(":
            self.advance()
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            value = sign * self.rational()
            self.expect(")")
        else:
            value = self.rational()
        if value == 0:
            raise ExprSyntaxError("zero exponent is not allowed", tok.offset)
        return value

    def rational(self) -> Fraction:
        tok = self.expect("number")
        value = Fraction(tok.text)
        # "n^1/2" is the square root, but in "n^2/log(n)" the slash divides
        # the whole term, so only take it when a bare number follows.
        if self.peek().kind == "/" and self.tokens[self.pos + 1].kind == "number":
            self.advance()
            denom_tok = self.advance()
            denom = Fraction(denom_tok.text)
            if denom == 0:
                raise ExprSyntaxError("division by zero", denom_tok.offset)
            value /= denom
        return value


def _divide(num: Expr, denom: Expr) -> Expr:
    if isinstance(num, Const) and isinstance(denom, Const):
        return Const(num.value / denom.value)
    if isinstance(denom, Pow):
        return _mul([num, Pow(denom.base, -denom.exponent)])
    return _mul([num, Pow(denom, Fraction(-1))])


def parse(text: str) -> Expr:
    """Parse expression text into an AST.

    Raises ExprSyntaxError (with a character offset) on malformed input
    and NonPositiveConstantError for constants <= 0.
    """
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# Rendering

def render(expr: Expr) -> str:
    """Canonical text form; parse(render(e)) is structurally equal to e."""
    return _render(expr, 0)


# Precedence levels: 0 addition, 1 multiplication, 2 power base, 3 atom.
def _render(expr: Expr, context: int) -> str:
    if isinstance(expr, Var):
        return "n"
    if isinstance(expr, Const):
        if expr.value.denominator == 1:
            text = str(expr.value.numerator)
            return text
        text = f"{expr.value.numerator}/{expr.value.denominator}"
        return f"({text})" if context >= 1 else text
    if isinstance(expr, Log):
        return f"log({_render(expr.child, 0)})"
    if isinstance(expr, Exp):
        return f"exp({_render(expr.child, 0)})"
    if isinstance(expr, Pow):
        base = _render(expr.base, 2)
        if isinstance(expr.base, Pow):
            base = f"({base})"  # ^ does not chain in the grammar
        return f"{base}^{_render_exponent(expr.exponent)}"
    if isinstance(expr, Mul):
        text = " * ".join(_render(child, 1) for child in expr.children)
        return f"({text})" if context >= 2 else text
    if isinstance(expr, Add):
        text = " + ".join(_render(child, 0) for child in expr.children)
        return f"({text})" if context >= 1 else text
    raise TypeError(f"not an expression node: {expr!r}")


def _render_exponent(q: Fraction) -> str:
    if q.denominator == 1 and q >= 0:
        return str(q.numerator)
    if q.denominator == 1:
        return f"({q.numerator})"
    return f"({q.numerator}/{q.denominator})"


# ---------------------------------------------------------------------------
# Evaluation

def eval_log10_float(expr: Expr, x: float) -> float:
    """log10 of expr's value at n = 10^x, as a bare float.

    x must be at least log10(2). Inner log() of a value below 1 raises
    DomainError; log() of exactly 1 yields -inf (a zero factor), which
    stays representable in log space.
    """
    if x < DOMAIN_FLOOR - 1e-12:
        raise DomainError(f"n = 10^{x:g} is below the domain floor n >= 2")
    degree, excess = _eval_split(expr, x)
    return float(degree) * x + excess


def eval_log10_gap(f: Expr, g: Expr, x: float) -> float:
    """log10(f / g) at n = 10^x, with the polynomial parts cancelled exactly.

    Root finding needs this form: when f and g share their leading degree,
    plain subtraction of the two evaluations would bury the informative
    digits under the ulp of the dominant x term.
    """
    if x < DOMAIN_FLOOR - 1e-12:
        raise DomainError(f"n = 10^{x:g} is below the domain floor n >= 2")
    df, ef = _eval_split(f, x)
    dg, eg = _eval_split(g, x)
    return float(df - dg) * x + (ef - eg)


_ZERO = Fraction(0)
_ONE = Fraction(1)


def _eval_split(expr: Expr, x: float) -> tuple[Fraction, float]:
    """log10 of the value decomposed as degree * x + excess.

    The degree (the exact rational power of n the node contributes) stays
    symbolic so that callers can cancel it before any float rounding.
    """
    if isinstance(expr, Var):
        return _ONE, 0.0
    if isinstance(expr, Const):
        return _ZERO, math.log10(expr.value)
    if isinstance(expr, Pow):
        degree, excess = _eval_split(expr.base, x)
        return degree * expr.exponent, float(expr.exponent) * excess
    if isinstance(expr, Mul):
        degree, excess = _ZERO, 0.0
        for child in expr.children:
            d, e = _eval_split(child, x)
            degree += d
            excess += e
        return degree, excess
    if isinstance(expr, Add):
        return _log_sum_exp([_eval_split(child, x) for child in expr.children], x)
    if isinstance(expr, Log):
        degree, excess = _eval_split(expr.child, x)
        inner = float(degree) * x + excess  # log10 of the child's value
        if inner < 0:
            raise DomainError("log of a value below 1 is negative")
        if inner == 0:
            return _ZERO, -math.inf
        # value = ln(child) = inner * ln(10)
        return _ZERO, math.log10(inner) + math.log10(LN10)
    if isinstance(expr, Exp):
        degree, excess = _eval_split(expr.child, x)
        inner = float(degree) * x + excess
        try:
            child_value = 10.0 ** inner
        except OverflowError:
            child_value = math.inf
        return _ZERO, child_value * LOG10E
    raise TypeError(f"not an expression node: {expr!r}")


def _log_sum_exp(
    parts: list[tuple[Fraction, float]], x: float
) -> tuple[Fraction, float]:
    totals = [float(d) * x + e for d, e in parts]
    top = max(range(len(parts)), key=lambda i: totals[i])
    if math.isinf(totals[top]):
        return _ZERO, totals[top]
    top_degree, top_excess = parts[top]
    shifted = sum(
        10.0 ** (float(d - top_degree) * x + (e - top_excess)) for d, e in parts
    )
    return top_degree, top_excess + math.log10(shifted)


def eval_log10(expr: Expr, x: float):
    """Public evaluation: returns a LogMagnitude."""
    from .magnitude import LogMagnitude

    return LogMagnitude(eval_log10_float(expr, x))


# ---------------------------------------------------------------------------
# Asymptotic comparison

class Ordering(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


# Geometric ladder of x = log10(n). Small rungs keep pure exponentials
# comparable before their values overflow to inf. The top stops at 1e6:
# far enough that every expressible trend is monotone, small enough that
# float cancellation in the differences stays well under the equal band.
_LADDER = (1, 2, 4, 8, 16, 32, 64, 128, 256, 1e3, 1e4, 1e5, 1e6)

# Differences whose spread over the ladder tail stays inside this band are
# treated as converged to a constant (same asymptotic order).
_EQUAL_BAND = 1e-6


def asymptotic_compare(f: Expr, g: Expr) -> Ordering:
    """Sign of lim log f(n) - log g(n) as n grows without bound.

    Evaluates the log10 difference along a geometric ladder of x and reads
    the trend: a flat tail means the ratio converges to a constant (Equal);
    a tail that keeps moving in one direction gives the verdict by its
    direction. Raises InconclusiveComparisonError when the tail is unstable,
    which no grammar-expressible pair should trigger.
    """
    diffs: list[float] = []
    for x in _LADDER:
        try:
            df, ef = _eval_split(f, x)
            dg, eg = _eval_split(g, x)
            d = float(df - dg) * x + (ef - eg)
        except DomainError:
            continue
        if math.isnan(d):
            continue
        if math.isinf(d):
            return Ordering.GREATER if d > 0 else Ordering.LESS
        diffs.append(d)
    if len(diffs) < 4:
        raise InconclusiveComparisonError(
            "too few evaluable ladder points to compare"
        )
    tail = diffs[-4:]
    scale = max(1.0, max(abs(d) for d in tail))
    if max(tail) - min(tail) <= _EQUAL_BAND * scale:
        return Ordering.EQUAL
    if all(b > a for a, b in zip(tail, tail[1:])):
        return Ordering.GREATER
    if all(b < a for a, b in zip(tail, tail[1:])):
        return Ordering.LESS
    raise InconclusiveComparisonError(
        f"no stable trend across the ladder tail: {tail}"
    )
