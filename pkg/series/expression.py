"""
Expression front end: a recursive-descent parser and series evaluators.

Grammar (whitespace is ignored)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/")? unary)*      juxtaposition multiplies
    unary    := ("-" | "+") unary | factor
    factor   := atom ("^" exponent)?
    exponent := "(" signed-int ")" | signed-int
    atom     := rational | variable | "(" expr ")" | func "(" expr ")"
    func     := "exp" | "log" | "theta" | "D"
    rational := int ("/" posint)?                longest match
    variable := "z" | "w"

Negative powers are written z^(-1) or z^-1; a bare "z^-" is rejected.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from series.bracket import bracket
from series.errors import (
    CompositionValuationError,
    DivisionByZeroSeries,
    InsufficientPrecision,
    InvalidArgument,
    ParseError,
    UnsafeBracket,
    VariableMismatch,
)
from series.laurent import (
    LSeries,
    add,
    derivative,
    div,
    exp_series,
    log_series,
    mul,
    power,
    theta,
)
from utils.settings import get_max_precision_retries, get_precision_slack

logger = logging.getLogger(__name__)

FUNCTIONS = ("exp", "log", "theta", "D")
VARIABLES = ("z", "w")
_OPERATORS = "+-*/^()"


# ============================================================================
# SYNTAX TREE
# ============================================================================

@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Apply:
    func: str
    argument: "Expr"


Expr = Union[Number, Var, BinOp, Neg, Pow, Apply]


# ============================================================================
# PARSER
# ============================================================================

@dataclass(frozen=True)
class _Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", text[start:i], start))
        elif ch.isalpha():
            start = i
            while i < len(text) and text[i].isalpha():
                i += 1
            tokens.append(_Token("name", text[start:i], start))
        elif ch in _OPERATORS:
            tokens.append(_Token("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", len(text)))
    return tokens


_ATOM_START = ("number", "variable", "function", "(")


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _peek(self, offset: int = 1) -> _Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def _advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def _is_op(self, symbol: str) -> bool:
        return self.current.kind == "op" and self.current.text == symbol

    def _expect_op(self, symbol: str) -> None:
        if not self._is_op(symbol):
            raise ParseError(f"unexpected {self._describe(self.current)}", self.current.position, [symbol])
        self._advance()

    @staticmethod
    def _describe(token: _Token) -> str:
        return "end of input" if token.kind == "end" else repr(token.text)

    def _starts_atom(self) -> bool:
        token = self.current
        return token.kind in ("int", "name") or (token.kind == "op" and token.text == "(")

    def parse(self) -> Expr:
        node = self.expr()
        if self.current.kind != "end":
            raise ParseError(
                f"unexpected {self._describe(self.current)}",
                self.current.position,
                ["+", "-", "*", "/", "end of input"],
            )
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self._is_op("+") or self._is_op("-"):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while True:
            if self._is_op("*") or self._is_op("/"):
                op = self._advance().text
                node = BinOp(op, node, self.unary())
            elif self._starts_atom():
                node = BinOp("*", node, self.factor())
            else:
                return node

    def unary(self) -> Expr:
        if self._is_op("-"):
            self._advance()
            return Neg(self.unary())
        if self._is_op("+"):
            self._advance()
            return self.unary()
        return self.factor()

    def factor(self) -> Expr:
        base = self.atom()
        if self._is_op("^"):
            self._advance()
            return Pow(base, self.exponent())
        return base

    def _signed_int(self) -> int:
        sign = 1
        if self._is_op("-") or self._is_op("+"):
            sign = -1 if self._advance().text == "-" else 1
        if self.current.kind != "int":
            raise ParseError(
                f"unexpected {self._describe(self.current)} in exponent",
                self.current.position,
                ["integer"],
            )
        return sign * int(self._advance().text)

    def exponent(self) -> int:
        if self._is_op("("):
            self._advance()
            value = self._signed_int()
            self._expect_op(")")
            return value
        return self._signed_int()

    def atom(self) -> Expr:
        token = self.current
        if token.kind == "int":
            self._advance()
            numerator = int(token.text)
            if self._is_op("/") and self._peek().kind == "int":
                self._advance()
                denominator_token = self._advance()
                denominator = int(denominator_token.text)
                if denominator == 0:
                    raise ParseError("zero denominator in rational literal", denominator_token.position)
                return Number(Fraction(numerator, denominator))
            return Number(Fraction(numerator))
        if token.kind == "name":
            self._advance()
            if token.text in FUNCTIONS:
                self._expect_op("(")
                argument = self.expr()
                self._expect_op(")")
                return Apply(token.text, argument)
            if token.text in VARIABLES:
                return Var(token.text)
            raise ParseError(f"unknown name {token.text!r}", token.position, list(FUNCTIONS + VARIABLES))
        if self._is_op("("):
            self._advance()
            node = self.expr()
            self._expect_op(")")
            return node
        raise ParseError(f"unexpected {self._describe(token)}", token.position, _ATOM_START)


def parse(text: str) -> Expr:
    """
    Parse expression text into a syntax tree.

    Raises:
        ParseError: with the offending position and the expected tokens
    """
    return _Parser(text).parse()


# ============================================================================
# TREE QUERIES
# ============================================================================

def free_variables(node: Expr) -> FrozenSet[str]:
    if isinstance(node, Var):
        return frozenset([node.name])
    if isinstance(node, Number):
        return frozenset()
    if isinstance(node, BinOp):
        return free_variables(node.left) | free_variables(node.right)
    if isinstance(node, Neg):
        return free_variables(node.operand)
    if isinstance(node, Pow):
        return free_variables(node.base)
    return free_variables(node.argument)


def _resolve_variable(nodes: Tuple[Expr, ...], variable: Optional[str]) -> str:
    names = frozenset().union(*(free_variables(n) for n in nodes))
    if variable is not None:
        names = names | {variable}
    if len(names) > 1:
        raise VariableMismatch(f"expression mixes variables {sorted(names)}")
    return next(iter(names), "z")


def _constant(node: Expr) -> Optional[Fraction]:
    """Value of a variable-free subtree, or None."""
    if isinstance(node, Number):
        return node.value
    if isinstance(node, Neg):
        inner = _constant(node.operand)
        return None if inner is None else -inner
    if isinstance(node, Pow):
        base = _constant(node.base)
        if base is None or (base == 0 and node.exponent < 0):
            return None
        return base ** node.exponent
    if isinstance(node, BinOp):
        left, right = _constant(node.left), _constant(node.right)
        if left is None or right is None:
            return None
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return None if right == 0 else left / right
    return None


# ============================================================================
# EVALUATION
# ============================================================================

def _evaluate(node: Expr, variable: str, order: int, mirrored: bool) -> LSeries:
    value = _constant(node)
    if value is not None:
        return LSeries.constant(variable, value, order)
    if isinstance(node, Var):
        return LSeries.monomial(variable, -1 if mirrored else 1, order)
    if isinstance(node, Neg):
        return -_evaluate(node.operand, variable, order, mirrored)
    if isinstance(node, Pow):
        return power(_evaluate(node.base, variable, order, mirrored), node.exponent)
    if isinstance(node, Apply):
        inner = _evaluate(node.argument, variable, order, mirrored)
        if node.func == "exp":
            return exp_series(inner)
        if node.func == "log":
            return log_series(inner)
        if node.func == "theta":
            return -theta(inner) if mirrored else theta(inner)
        # D acts on the unmirrored variable: d/dz F(1/z) = -z^(-2) F'(1/z)
        if mirrored:
            return mul(LSeries.monomial(variable, 2, order + 2, -1), derivative(inner))
        return derivative(inner)

    left_const, right_const = _constant(node.left), _constant(node.right)
    if node.op == "*" and left_const is not None:
        return _evaluate(node.right, variable, order, mirrored) * left_const
    if node.op in "*/" and right_const is not None:
        left = _evaluate(node.left, variable, order, mirrored)
        if node.op == "*":
            return left * right_const
        return left / right_const
    left = _evaluate(node.left, variable, order, mirrored)
    right = _evaluate(node.right, variable, order, mirrored)
    if node.op == "+":
        return add(left, right)
    if node.op == "-":
        return add(left, -right)
    if node.op == "*":
        return mul(left, right)
    return div(left, right)


def eval_lseries(
    e: Expr,
    order: int,
    variable: Optional[str] = None,
    mirrored: bool = False,
    slack: Optional[int] = None,
    retries: Optional[int] = None,
) -> LSeries:
    """
    Expand an expression as an L-series known up to ``order``.

    Evaluation starts at order + slack and doubles the slack whenever
    divisions or negative powers eat more precision than that.

    Args:
        e: Parsed expression
        order: Required truncation order
        variable: Series variable; inferred from the expression by default
        mirrored: Expand F(1/z) instead of F(z)
        slack: Initial extra precision (BRACKET_PRECISION_SLACK by default)
        retries: Slack doublings allowed (BRACKET_MAX_PRECISION_RETRIES by default)

    Raises:
        InsufficientPrecision: when the retries run out
    """
    variable = _resolve_variable((e,), variable)
    extra = get_precision_slack() if slack is None else slack
    attempts = get_max_precision_retries() if retries is None else retries
    for attempt in range(attempts + 1):
        result = _evaluate(e, variable, order + extra, mirrored)
        if result.order >= order:
            return result.truncate(order)
        logger.debug(
            "precision shortfall: wanted order %d, got %d with slack %d (attempt %d)",
            order, result.order, extra, attempt + 1,
        )
        extra = max(2 * extra, 1)
    raise InsufficientPrecision(f"could not reach order {order} after {attempts} precision retries")


def eval_laurent_polynomial(e: Expr, variable: Optional[str] = None) -> Dict[int, Fraction]:
    """
    Exact coefficients of an expression that is a Laurent polynomial.

    Division is allowed only by constants and negative powers only of
    monomials.
    """
    variable = _resolve_variable((e,), variable)

    def walk(node: Expr) -> Dict[int, Fraction]:
        value = _constant(node)
        if value is not None:
            return {0: value} if value else {}
        if isinstance(node, Var):
            return {1: Fraction(1)}
        if isinstance(node, Neg):
            return {n: -c for n, c in walk(node.operand).items()}
        if isinstance(node, Pow):
            base = walk(node.base)
            if node.exponent < 0:
                if len(base) != 1:
                    raise InvalidArgument("only monomials may carry negative exponents in a polynomial")
                (n, c), = base.items()
                return {n * node.exponent: c ** node.exponent}
            result = {0: Fraction(1)}
            for _ in range(node.exponent):
                result = _poly_mul(result, base)
            return result
        if isinstance(node, BinOp):
            left = walk(node.left)
            if node.op == "/":
                divisor = _constant(node.right)
                if divisor is None or divisor == 0:
                    raise InvalidArgument("polynomial division is only by nonzero constants")
                return {n: c / divisor for n, c in left.items()}
            right = walk(node.right)
            if node.op == "*":
                return _poly_mul(left, right)
            sign = 1 if node.op == "+" else -1
            out = dict(left)
            for n, c in right.items():
                out[n] = out.get(n, Fraction(0)) + sign * c
            return {n: c for n, c in out.items() if c != 0}
        raise InvalidArgument(f"{node.func}(...) is not a polynomial")

    return walk(e)


def _poly_mul(a: Dict[int, Fraction], b: Dict[int, Fraction]) -> Dict[int, Fraction]:
    out: Dict[int, Fraction] = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, Fraction(0)) + x * y
    return {n: c for n, c in out.items() if c != 0}


# ============================================================================
# BRACKETS
# ============================================================================

def _summands(node: Expr) -> List[Expr]:
    if isinstance(node, BinOp) and node.op in "+-":
        return _summands(node.left) + _summands(node.right)
    if isinstance(node, Neg):
        return _summands(node.operand)
    return [node]


def _degree(node: Expr) -> Optional[int]:
    """Degree in the series variable, or None when it is not polynomial-like."""
    if isinstance(node, Number):
        return 0
    if isinstance(node, Var):
        return 1
    if isinstance(node, Neg):
        return _degree(node.operand)
    if isinstance(node, Pow):
        base = _degree(node.base)
        return None if base is None else base * node.exponent
    if isinstance(node, Apply):
        if node.func == "theta":
            return _degree(node.argument)
        if node.func == "D":
            inner = _degree(node.argument)
            return None if inner is None else inner - 1
        return None
    left, right = _degree(node.left), _degree(node.right)
    if left is None or right is None:
        return None
    if node.op in "+-":
        return max(left, right)
    if node.op == "*":
        return left + right
    return left - right


def _leads_with_top_degree(node: Expr) -> bool:
    terms = _summands(node)
    if len(terms) == 1:
        return True
    degrees = [_degree(t) for t in terms]
    if any(d is None for d in degrees):
        return False
    return degrees[0] >= max(degrees[1:])


_DENOMINATOR_MESSAGE = (
    "a denominator inside the bracket must lead with its highest power "
    "(write z - 1, not 1 - z) so it expands in powers of 1/z"
)


def _check_denominator(node: Expr, message: str) -> None:
    """Every sum reachable through products, quotients and positive powers of a denominator must lead high."""
    if isinstance(node, BinOp):
        if node.op in "+-":
            if not _leads_with_top_degree(node):
                raise UnsafeBracket(message)
            for term in _summands(node):
                _check_denominator(term, message)
        else:
            _check_denominator(node.left, message)
            _check_denominator(node.right, message)
    elif isinstance(node, Pow) and node.exponent > 0:
        _check_denominator(node.base, message)
    elif isinstance(node, Neg):
        _check_denominator(node.operand, message)


def check_bracket_safe(node: Expr) -> None:
    """
    Reject bracket arguments that are not written as R-series.

    Every sum that ends up in a denominator, directly or through products,
    quotients, positive powers and negation, must list its highest-degree
    term first: z - 1 = z(1 - 1/z) expands in powers of 1/z, while 1 - z
    does not. So 1/((z-1)(z-2)) passes and 1/((1-z)*2) or 1/(1-z)^1 fail.

    Raises:
        UnsafeBracket: naming the offending denominator
    """
    if isinstance(node, BinOp):
        if node.op == "/":
            _check_denominator(node.right, _DENOMINATOR_MESSAGE)
        check_bracket_safe(node.left)
        check_bracket_safe(node.right)
    elif isinstance(node, Pow):
        if node.exponent < 0:
            _check_denominator(
                node.base, "a negative power inside the bracket must lead with its highest power"
            )
        check_bracket_safe(node.base)
    elif isinstance(node, Neg):
        check_bracket_safe(node.operand)
    elif isinstance(node, Apply):
        check_bracket_safe(node.argument)


def eval_bracket(
    f_text: str,
    g_text: str,
    order: int,
    slack: Optional[int] = None,
    retries: Optional[int] = None,
) -> Fraction:
    """
    Evaluate [F(z)] G(z) from expression text.

    F is expanded as F(1/z) in ascending powers and mirrored into an
    R-series; G is expanded as an L-series to ``order`` (raised when F
    reaches higher).

    Raises:
        UnsafeBracket: when F has no R-series reading
        ParseError: on malformed text
    """
    f_ast, g_ast = parse(f_text), parse(g_text)
    check_bracket_safe(f_ast)
    variable = _resolve_variable((f_ast, g_ast), None)

    g = eval_lseries(g_ast, order, variable, slack=slack, retries=retries)
    f_order = max(order, -g.valuation)
    try:
        f_mirror = eval_lseries(f_ast, f_order, variable, mirrored=True, slack=slack, retries=retries)
    except (CompositionValuationError, DivisionByZeroSeries) as e:
        raise UnsafeBracket(f"{f_text!r} has no expansion in powers of 1/{variable}: {e}") from e
    f = f_mirror.mirror()
    if g.order < f.top:
        g = eval_lseries(g_ast, f.top, variable, slack=slack, retries=retries)
    return bracket(f, g)
