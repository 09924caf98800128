"""Expression grammar for the CLI: parsing, canonical rendering, evaluation.

Scalar expressions: integer literals, the index variable `n`, `+ - * /`
(division is quotient-algebra inversion, never pointwise), the wrappers
shift/ind/sum/st/class/eq/le/invert/limit, and `e except {n: v, ...}` for
declaring pointwise overrides.  Set expressions: `{3,5}`, `r mod m`,
`evens`/`odds`, complement `~S`, `S|T`, `S&T`, and `cofinite~{...}` sugar.

Rendering is canonical: parse(render(parse(text))) == parse(text), and a
rendered value re-evaluates to the same class under every filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Error, TypeMismatch
from .exactnum import Poly, RatFun, integer_roots_nonneg
from .quotient import (
    Scalar,
    classify,
    embed,
    leq,
    scalar_eq,
    standard_part,
    try_invert,
)
from .seqrep import RSeq, indicator, make_identity
from .series import partial_sums
from .sets_filters import FilterDescriptor, SetDescriptor


class SyntaxError(Error):
    """Position-annotated parse failure with the expected token set."""

    def __init__(self, message: str, line: int, column: int, expected=()):
        super().__init__(message)
        self.line = line
        self.column = column
        self.expected = tuple(expected)

    def __str__(self) -> str:
        base = f"{super().__str__()} at line {self.line}, column {self.column}"
        if self.expected:
            base += " (expected " + ", ".join(self.expected) + ")"
        return base


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: int


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Call:
    name: str  # shift sum st class invert limit eq le
    args: tuple


@dataclass(frozen=True)
class Ind:
    set_expr: object


@dataclass(frozen=True)
class Except:
    arg: object
    overrides: tuple  # ((index, Fraction), ...) sorted by index


@dataclass(frozen=True)
class SetLit:
    elements: tuple


@dataclass(frozen=True)
class SetMod:
    residue: int
    modulus: int


@dataclass(frozen=True)
class SetNot:
    arg: object


@dataclass(frozen=True)
class SetBin:
    op: str  # | &
    left: object
    right: object


UNARY_CALLS = ("shift", "sum", "st", "class", "invert", "limit")
BINARY_CALLS = ("eq", "le")


# -- tokenizer ------------------------------------------------------------------

_PUNCT = "+-*/(){},:|&~"


@dataclass(frozen=True)
class _Token:
    kind: str  # int ident punct end
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _PUNCT:
            tokens.append(_Token("punct", ch, line, col))
            col += 1
            i += 1
            continue
        raise SyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def _fail(self, expected):
        tok = self.current
        shown = tok.text or "end of input"
        raise SyntaxError(f"unexpected {shown!r}", tok.line, tok.column, expected)

    def _eat(self, kind: str, text: str | None = None) -> _Token:
        tok = self.current
        if tok.kind != kind or (text is not None and tok.text != text):
            self._fail([text or kind])
        self.pos += 1
        return tok

    def _at_punct(self, text: str) -> bool:
        return self.current.kind == "punct" and self.current.text == text

    def _at_ident(self, text: str) -> bool:
        return self.current.kind == "ident" and self.current.text == text

    # scalar grammar -----------------------------------------------------------

    def parse_expr(self):
        node = self._add_expr()
        while self._at_ident("except"):
            self._eat("ident", "except")
            node = Except(node, self._except_map())
        return node

    def _add_expr(self):
        node = self._mul_expr()
        while self._at_punct("+") or self._at_punct("-"):
            op = self._eat("punct").text
            node = BinOp(op, node, self._mul_expr())
        return node

    def _mul_expr(self):
        node = self._unary()
        while self._at_punct("*") or self._at_punct("/"):
            op = self._eat("punct").text
            node = BinOp(op, node, self._unary())
        return node

    def _unary(self):
        if self._at_punct("-"):
            self._eat("punct", "-")
            return Neg(self._unary())
        return self._atom()

    def _atom(self):
        tok = self.current
        if tok.kind == "int":
            self.pos += 1
            return Lit(int(tok.text))
        if tok.kind == "ident":
            if tok.text == "n":
                self.pos += 1
                return Var()
            if tok.text == "ind":
                self.pos += 1
                self._eat("punct", "(")
                inner = self.parse_set()
                self._eat("punct", ")")
                return Ind(inner)
            if tok.text in UNARY_CALLS:
                self.pos += 1
                self._eat("punct", "(")
                arg = self.parse_expr()
                self._eat("punct", ")")
                return Call(tok.text, (arg,))
            if tok.text in BINARY_CALLS:
                self.pos += 1
                self._eat("punct", "(")
                first = self.parse_expr()
                self._eat("punct", ",")
                second = self.parse_expr()
                self._eat("punct", ")")
                return Call(tok.text, (first, second))
            self._fail(["n", "ind", *UNARY_CALLS, *BINARY_CALLS])
        if self._at_punct("("):
            self._eat("punct", "(")
            node = self.parse_expr()
            self._eat("punct", ")")
            return node
        self._fail(["integer", "n", "function", "("])

    def _except_map(self) -> tuple:
        self._eat("punct", "{")
        overrides = {}
        if not self._at_punct("}"):
            while True:
                key = int(self._eat("int").text)
                self._eat("punct", ":")
                overrides[key] = self._signed_rat()
                if self._at_punct(","):
                    self._eat("punct", ",")
                    continue
                break
        self._eat("punct", "}")
        return tuple(sorted(overrides.items()))

    def _signed_rat(self) -> Fraction:
        negative = False
        if self._at_punct("-"):
            self._eat("punct", "-")
            negative = True
        num = int(self._eat("int").text)
        den = 1
        if self._at_punct("/"):
            self._eat("punct", "/")
            den_tok = self._eat("int")
            den = int(den_tok.text)
            if den == 0:
                raise SyntaxError("zero denominator", den_tok.line, den_tok.column)
        value = Fraction(num, den)
        return -value if negative else value

    # set grammar --------------------------------------------------------------

    def parse_set(self):
        node = self._set_and()
        while self._at_punct("|"):
            self._eat("punct", "|")
            node = SetBin("|", node, self._set_and())
        return node

    def _set_and(self):
        node = self._set_atom()
        while self._at_punct("&"):
            self._eat("punct", "&")
            node = SetBin("&", node, self._set_atom())
        return node

    def _set_atom(self):
        if self._at_punct("~"):
            self._eat("punct", "~")
            return SetNot(self._set_atom())
        if self._at_punct("{"):
            return SetLit(self._int_braces())
        if self._at_punct("("):
            self._eat("punct", "(")
            node = self.parse_set()
            self._eat("punct", ")")
            return node
        tok = self.current
        if tok.kind == "int":
            self.pos += 1
            self._eat("ident", "mod")
            mod_tok = self._eat("int")
            modulus = int(mod_tok.text)
            if modulus < 1:
                raise SyntaxError("modulus must be positive", mod_tok.line, mod_tok.column)
            return SetMod(int(tok.text), modulus)
        if tok.kind == "ident":
            if tok.text == "evens":
                self.pos += 1
                return SetMod(0, 2)
            if tok.text == "odds":
                self.pos += 1
                return SetMod(1, 2)
            if tok.text == "cofinite":
                self.pos += 1
                self._eat("punct", "~")
                return SetNot(SetLit(self._int_braces()))
        self._fail(["{", "~", "(", "residue mod modulus", "evens", "odds", "cofinite"])

    def _int_braces(self) -> tuple:
        self._eat("punct", "{")
        elements = set()
        if not self._at_punct("}"):
            while True:
                elements.add(int(self._eat("int").text))
                if self._at_punct(","):
                    self._eat("punct", ",")
                    continue
                break
        self._eat("punct", "}")
        return tuple(sorted(elements))


def parse(text: str):
    parser = _Parser(text)
    node = parser.parse_expr()
    parser._eat("end")
    return node


def parse_set(text: str):
    parser = _Parser(text)
    node = parser.parse_set()
    parser._eat("end")
    return node


# -- rendering -------------------------------------------------------------------

_EXCEPT, _ADD, _MUL, _UNARY, _ATOM = range(5)


def render(node, parent_level: int = 0) -> str:
    text, level = _render(node)
    if level < parent_level:
        return f"({text})"
    return text


def _render(node) -> tuple[str, int]:
    if isinstance(node, Lit):
        return str(node.value), _ATOM
    if isinstance(node, Var):
        return "n", _ATOM
    if isinstance(node, Neg):
        return f"-{render(node.arg, _UNARY)}", _UNARY
    if isinstance(node, BinOp):
        if node.op in "+-":
            left = render(node.left, _ADD)
            right = render(node.right, _MUL)
            return f"{left} {node.op} {right}", _ADD
        left = render(node.left, _MUL)
        right = render(node.right, _UNARY)
        return f"{left} {node.op} {right}", _MUL
    if isinstance(node, Call):
        inner = ", ".join(render(a) for a in node.args)
        return f"{node.name}({inner})", _ATOM
    if isinstance(node, Ind):
        return f"ind({render_set(node.set_expr)})", _ATOM
    if isinstance(node, Except):
        body = ", ".join(f"{k}: {v}" for k, v in node.overrides)
        return f"{render(node.arg, _ADD)} except {{{body}}}", _EXCEPT
    raise TypeError(f"not an expression node: {node!r}")


_SET_OR, _SET_AND, _SET_NOT, _SET_ATOM = range(4)


def render_set(node, parent_level: int = 0) -> str:
    text, level = _render_set(node)
    if level < parent_level:
        return f"({text})"
    return text


def _render_set(node) -> tuple[str, int]:
    if isinstance(node, SetLit):
        return "{" + ",".join(str(n) for n in node.elements) + "}", _SET_ATOM
    if isinstance(node, SetMod):
        return f"{node.residue} mod {node.modulus}", _SET_ATOM
    if isinstance(node, SetNot):
        return f"~{render_set(node.arg, _SET_NOT)}", _SET_NOT
    if isinstance(node, SetBin):
        if node.op == "|":
            return f"{render_set(node.left, _SET_OR)}|{render_set(node.right, _SET_AND)}", _SET_OR
        return f"{render_set(node.left, _SET_AND)}&{render_set(node.right, _SET_NOT)}", _SET_AND
    raise TypeError(f"not a set node: {node!r}")


# -- evaluation --------------------------------------------------------------------


def eval_set(node) -> SetDescriptor:
    if isinstance(node, SetLit):
        return SetDescriptor.finite(node.elements)
    if isinstance(node, SetMod):
        return SetDescriptor.residue_class(node.residue, node.modulus)
    if isinstance(node, SetNot):
        return eval_set(node.arg).complement()
    if isinstance(node, SetBin):
        left, right = eval_set(node.left), eval_set(node.right)
        return left.union(right) if node.op == "|" else left.intersect(right)
    raise TypeError(f"not a set node: {node!r}")


def _as_scalar(value, f: FilterDescriptor) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Fraction):
        return embed(value, f)
    raise TypeMismatch(f"expected a scalar, got {value!r}")


def evaluate(node, f: FilterDescriptor):
    """Evaluate an AST under a filter.

    Returns a Scalar, a Fraction (st/limit), a bool (eq/le), or a
    Classification (class).
    """
    if isinstance(node, Lit):
        return embed(node.value, f)
    if isinstance(node, Var):
        return Scalar(make_identity(), f)
    if isinstance(node, Neg):
        return -_as_scalar(evaluate(node.arg, f), f)
    if isinstance(node, BinOp):
        left = _as_scalar(evaluate(node.left, f), f)
        right = _as_scalar(evaluate(node.right, f), f)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        if node.op == "*":
            return left * right
        return left * try_invert(right)
    if isinstance(node, Ind):
        return Scalar(indicator(eval_set(node.set_expr)), f)
    if isinstance(node, Except):
        base = _as_scalar(evaluate(node.arg, f), f)
        overrides = dict(base.rep.exceptions)
        overrides.update(dict(node.overrides))
        return Scalar(RSeq(base.rep.modulus, base.rep.branches, overrides), f)
    if isinstance(node, Call):
        if node.name in BINARY_CALLS:
            a = _as_scalar(evaluate(node.args[0], f), f)
            b = _as_scalar(evaluate(node.args[1], f), f)
            return scalar_eq(a, b) if node.name == "eq" else leq(a, b)
        arg = _as_scalar(evaluate(node.args[0], f), f)
        if node.name == "shift":
            return Scalar(arg.rep.shift(), f)
        if node.name == "sum":
            return Scalar(partial_sums(arg.rep), f)
        if node.name == "st":
            return standard_part(arg)
        if node.name == "class":
            return classify(arg)
        if node.name == "invert":
            return try_invert(arg)
        if node.name == "limit":
            return arg.rep.limit()
    raise TypeError(f"not an expression node: {node!r}")


# -- value rendering -----------------------------------------------------------------


def set_to_expr(s: SetDescriptor):
    if s.is_empty():
        return SetLit(())
    if s.is_finite():
        return SetLit(tuple(sorted(s.plus)))
    node = None
    for r in sorted(s.residues):
        atom = SetMod(r, s.modulus)
        node = atom if node is None else SetBin("|", node, atom)
    if s.minus:
        node = SetBin("&", node, SetNot(SetLit(tuple(sorted(s.minus)))))
    if s.plus:
        node = SetBin("|", node, SetLit(tuple(sorted(s.plus))))
    return node


def _rat_expr(q: Fraction):
    num = Lit(abs(q.numerator))
    if q < 0:
        num = Neg(num)
    if q.denominator != 1:
        return BinOp("/", num, Lit(q.denominator))
    return num


def _monomial_expr(coeff_node, k: int):
    """coeff * n * ... * n, left associated; bare power when coeff is None."""
    node = coeff_node if coeff_node is not None else Var()
    start = 0 if coeff_node is not None else 1
    for _ in range(start, k):
        node = BinOp("*", node, Var())
    return node


def _poly_expr(p: Poly):
    if p.is_zero():
        return Lit(0)
    items = [(k, p.coeffs[k]) for k in range(p.degree, -1, -1) if p.coeffs[k] != 0]

    def leading(k, c):
        if k == 0:
            return _rat_expr(c)
        if c == 1:
            return _monomial_expr(None, k)
        if c == -1:
            return Neg(_monomial_expr(None, k))
        return _monomial_expr(_rat_expr(c), k)

    def trailing(k, c_abs):
        if k == 0:
            return _rat_expr(c_abs)
        if c_abs == 1:
            return _monomial_expr(None, k)
        return _monomial_expr(_rat_expr(c_abs), k)

    node = leading(*items[0])
    for k, c in items[1:]:
        node = BinOp("-" if c < 0 else "+", node, trailing(k, abs(c)))
    return node


def _ratfun_expr(br: RatFun):
    num = _poly_expr(br.num)
    if br.den.degree == 0:
        return num
    den = _poly_expr(br.den)
    roots = integer_roots_nonneg(br.den)
    if roots:
        den = Except(den, tuple((n, Fraction(1)) for n in sorted(roots)))
    inverse = Call("invert", (den,))
    if br.num == Poly.constant(1):
        return inverse
    return BinOp("*", num, inverse)


def rseq_to_expr(x: RSeq):
    """Canonical AST that re-evaluates to the class of x under any filter."""
    support = x.zero_set().complement()
    if indicator(support) == x:
        return Ind(set_to_expr(support)) if not support.is_empty() else Lit(0)
    terms = []
    for r, br in enumerate(x.branches):
        if br.is_zero():
            continue
        body = _ratfun_expr(br)
        if x.modulus > 1:
            mask = Ind(SetMod(r, x.modulus))
            body = mask if body == Lit(1) else BinOp("*", mask, body)
        terms.append(body)
    if not terms:
        node = Lit(0)
    else:
        node = terms[0]
        for term in terms[1:]:
            node = BinOp("+", node, term)
    if x.exceptions:
        node = Except(node, tuple(sorted(x.exceptions.items())))
    return node


def render_rseq(x: RSeq) -> str:
    return render(rseq_to_expr(x))
