"""Recursive-descent parser for operator expressions.

Concrete syntax (whitespace insignificant, ``d`` denotes d/dt):

    expr   := ('+' | '-')? term (('+' | '-') term)*
    term   := factor factor*            juxtaposition multiplies, left to right
    factor := atom ('^' natural)*
    atom   := rational | 't' | 'd' | '(' expr ')'
    rational := natural ('/' natural)?

Multiplication is noncommutative: ``d t`` and ``t d`` are different
expressions (they lower to different normal forms).  Exponents must be
nonnegative integers.

Lowering is available along two routes: `ast_to_weyl` folds the tree directly
in operator arithmetic, while `ast_to_words` expands it distributively into
free generator words (for cross-checking against the rewriting oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .polynomials import Poly
from .weyl import GeneratorWord, WeylOp


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Lit:
    value: Fraction


@dataclass(frozen=True)
class VarT:
    pass


@dataclass(frozen=True)
class VarD:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"


@dataclass(frozen=True)
class Add:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Mul:
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class Group:
    inner: "ExprAst"


ExprAst = Union[Lit, VarT, VarD, Neg, Add, Mul, Pow, Group]


# -- tokenizer ------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # NAT, T, D, PLUS, MINUS, CARET, SLASH, LPAREN, RPAREN, EOF
    text: str
    line: int
    column: int


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
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
            start = i
            while i < len(src) and src[i].isdigit():
                i += 1
            tokens.append(Token("NAT", src[start:i], line, col))
            col += i - start
            continue
        single = {
            "t": "T",
            "d": "D",
            "+": "PLUS",
            "-": "MINUS",
            "^": "CARET",
            "/": "SLASH",
            "(": "LPAREN",
            ")": "RPAREN",
        }
        if ch in single:
            tokens.append(Token(single[ch], ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- parser ----------------------------------------------------------------------

_ATOM_STARTERS = ("NAT", "T", "D", "LPAREN")
_ATOM_EXPECTED = "a rational literal, 't', 'd' or '('"


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: str) -> ParseError:
        tok = self.peek()
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        return ParseError(f"expected {expected}, found {found}", tok.line, tok.column)

    def parse_expr(self) -> ExprAst:
        if self.peek().kind in ("PLUS", "MINUS"):
            sign = self.advance()
            node: ExprAst = self.parse_term()
            if sign.kind == "MINUS":
                node = Neg(node)
        else:
            node = self.parse_term()
        while self.peek().kind in ("PLUS", "MINUS"):
            op = self.advance()
            rhs = self.parse_term()
            node = Add(node, Neg(rhs) if op.kind == "MINUS" else rhs)
        return node

    def parse_term(self) -> ExprAst:
        node = self.parse_factor()
        while self.peek().kind in _ATOM_STARTERS:
            node = Mul(node, self.parse_factor())
        return node

    def parse_factor(self) -> ExprAst:
        node = self.parse_atom()
        while self.peek().kind == "CARET":
            self.advance()
            if self.peek().kind != "NAT":
                raise self.fail("a nonnegative integer exponent")
            node = Pow(node, int(self.advance().text))
        return node

    def parse_atom(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "NAT":
            self.advance()
            num = int(tok.text)
            if self.peek().kind == "SLASH":
                self.advance()
                if self.peek().kind != "NAT":
                    raise self.fail("a denominator")
                den = int(self.advance().text)
                if den == 0:
                    raise ParseError("zero denominator", tok.line, tok.column)
                return Lit(Fraction(num, den))
            return Lit(Fraction(num))
        if tok.kind == "T":
            self.advance()
            return VarT()
        if tok.kind == "D":
            self.advance()
            return VarD()
        if tok.kind == "LPAREN":
            self.advance()
            inner = self.parse_expr()
            if self.peek().kind != "RPAREN":
                raise self.fail("')'")
            self.advance()
            return Group(inner)
        raise self.fail(_ATOM_EXPECTED)


def parse_expr(src: str) -> ExprAst:
    parser = _Parser(tokenize(src))
    node = parser.parse_expr()
    if parser.peek().kind != "EOF":
        raise parser.fail("'+', '-', or end of input")
    return node


# -- lowering --------------------------------------------------------------------


def ast_to_weyl(node: ExprAst) -> WeylOp:
    """Fold the tree directly in normal-form operator arithmetic."""
    if isinstance(node, Lit):
        return WeylOp.scalar(node.value)
    if isinstance(node, VarT):
        return WeylOp.t()
    if isinstance(node, VarD):
        return WeylOp.d()
    if isinstance(node, Neg):
        return ast_to_weyl(node.operand).scale(-1)
    if isinstance(node, Add):
        return ast_to_weyl(node.left) + ast_to_weyl(node.right)
    if isinstance(node, Mul):
        return ast_to_weyl(node.left) * ast_to_weyl(node.right)
    if isinstance(node, Pow):
        return ast_to_weyl(node.base) ** node.exponent
    if isinstance(node, Group):
        return ast_to_weyl(node.inner)
    raise TypeError(f"not an expression node: {node!r}")


def ast_to_words(node: ExprAst) -> list[GeneratorWord]:
    """Expand the tree distributively into a sum of free generator words."""
    if isinstance(node, Lit):
        return [GeneratorWord(node.value, ())]
    if isinstance(node, VarT):
        return [GeneratorWord(Fraction(1), ("t",))]
    if isinstance(node, VarD):
        return [GeneratorWord(Fraction(1), ("d",))]
    if isinstance(node, Neg):
        return [GeneratorWord(-w.scalar, w.symbols) for w in ast_to_words(node.operand)]
    if isinstance(node, Add):
        return ast_to_words(node.left) + ast_to_words(node.right)
    if isinstance(node, Mul):
        return [
            GeneratorWord(w1.scalar * w2.scalar, w1.symbols + w2.symbols)
            for w1 in ast_to_words(node.left)
            for w2 in ast_to_words(node.right)
        ]
    if isinstance(node, Pow):
        words = [GeneratorWord(Fraction(1), ())]
        for _ in range(node.exponent):
            words = [
                GeneratorWord(w1.scalar * w2.scalar, w1.symbols + w2.symbols)
                for w1 in words
                for w2 in ast_to_words(node.base)
            ]
        return words
    if isinstance(node, Group):
        return ast_to_words(node.inner)
    raise TypeError(f"not an expression node: {node!r}")


def parse_operator(src: str) -> WeylOp:
    """Parse and lower to a normal-form operator."""
    return ast_to_weyl(parse_expr(src))


def parse_poly(src: str) -> Poly:
    """Parse a plain polynomial; any occurrence of 'd' is rejected."""
    tokens = tokenize(src)
    for tok in tokens:
        if tok.kind == "D":
            raise ParseError("'d' is not allowed in a polynomial", tok.line, tok.column)
    parser = _Parser(tokens)
    node = parser.parse_expr()
    if parser.peek().kind != "EOF":
        raise parser.fail("'+', '-', or end of input")
    return ast_to_weyl(node).as_poly()
