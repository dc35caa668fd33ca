"""Expression parser and germ specification files.

Grammar (standard precedence, ^ tightest and right-associative, unary minus
below ^):

    expr   := ['-'] term (('+'|'-') term)*
    term   := power ('*' power)*
    power  := atom ['^' exponent]
    atom   := rational | identifier | '(' expr ')' | '-' atom
    rational := integer ['/' integer]

Implicit multiplication is rejected.  All diagnostics carry byte offsets.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import sympy as sp

from .errors import ParseError, SpecError
from .rings import Ring, T, X, Y, expr_is_zero, origin_value


@dataclass(frozen=True)
class _Token:
    kind: str  # "int" | "ident" | "op" | "end"
    text: str
    offset: int


def _tokenize(src: str):
    tokens = []
    i = 0
    n = len(src)
    while i < n:
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            if j < n and (src[j].isalpha() or src[j] == "."):
                raise ParseError(f"malformed literal {src[i:j+1]!r}", i)
            tokens.append(_Token("int", src[i:j], i))
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("ident", src[i:j], i))
            i = j
            continue
        if c in "+-*/^()":
            tokens.append(_Token("op", c, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {c!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


class _Parser:
    def __init__(self, src: str, variables):
        self.src = src
        self.tokens = _tokenize(src)
        self.pos = 0
        self.vars = {v.name: v for v in variables}

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, text):
        tok = self.take()
        if tok.kind != "op" or tok.text != text:
            raise ParseError(f"expected {text!r}", tok.offset)
        return tok

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected token {tok.text!r}", tok.offset)
        return sp.expand(e)

    def expr(self):
        tok = self.peek()
        if tok.kind == "op" and tok.text == "-":
            self.take()
            acc = -self.term()
        else:
            acc = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                rhs = self.term()
                acc = acc + rhs if tok.text == "+" else acc - rhs
            else:
                return acc

    def term(self):
        acc = self.power()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text == "*":
                self.take()
                acc = acc * self.power()
            else:
                return acc

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            return base ** self.exponent()
        return base

    def exponent(self):
        tok = self.take()
        if tok.kind == "op" and tok.text == "-":
            nxt = self.peek()
            raise ParseError("negative exponent", tok.offset if nxt.kind != "int" else tok.offset)
        if tok.kind != "int":
            raise ParseError("expected integer exponent", tok.offset)
        return int(tok.text)

    def atom(self):
        tok = self.take()
        if tok.kind == "op" and tok.text == "-":
            return -self.atom()
        if tok.kind == "int":
            num = int(tok.text)
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "/":
                self.take()
                den_tok = self.take()
                if den_tok.kind != "int":
                    raise ParseError("expected integer denominator", den_tok.offset)
                den = int(den_tok.text)
                if den == 0:
                    raise ParseError("zero denominator", den_tok.offset)
                return sp.Rational(num, den)
            return sp.Integer(num)
        if tok.kind == "ident":
            if tok.text not in self.vars:
                raise ParseError(f"unknown identifier {tok.text!r}", tok.offset)
            return self.vars[tok.text]
        if tok.kind == "op" and tok.text == "(":
            e = self.expr()
            self.expect_op(")")
            return e
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.offset)
        raise ParseError(f"unexpected token {tok.text!r}", tok.offset)


def parse_polynomial(src: str, variables):
    """Parse an expression over the given sympy symbols into an expanded
    exact polynomial."""
    return _Parser(src, variables).parse()


@dataclass(frozen=True)
class GermSpec:
    """Validated germ/unfolding specification."""

    components: tuple  # three source strings
    parsed: tuple  # three parsed polynomials
    parameter: object = None  # the symbol t, or None
    name: str = None
    metadata: dict = field(default_factory=dict)

    @property
    def ring(self):
        return Ring((X, Y), self.parameter)


def load_germ_spec(doc) -> GermSpec:
    """Validate the JSON germ-file shape:

        { "name": str?, "parameter": "t"?, "components": [s, s, s],
          "metadata": object? }
    """
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SpecError("germ file must be a JSON object")
    unknown = set(doc) - {"name", "parameter", "components", "metadata"}
    if unknown:
        raise SpecError(f"unknown keys {sorted(unknown)}")
    comps = doc.get("components")
    if not isinstance(comps, list) or len(comps) != 3:
        raise SpecError("expected exactly 3 components")
    if not all(isinstance(c, str) for c in comps):
        raise SpecError("components must be strings")
    param_name = doc.get("parameter")
    if param_name is not None and param_name != "t":
        raise SpecError('parameter must be "t"')
    param = T if param_name == "t" else None
    variables = (X, Y, T) if param is not None else (X, Y)
    ring = Ring((X, Y), param)
    parsed = []
    for i, src in enumerate(comps):
        try:
            p = parse_polynomial(src, variables)
        except ParseError as exc:
            raise SpecError(f"component {i}: {exc}") from exc
        if not expr_is_zero(origin_value(p, ring)):
            raise SpecError(f"nonzero constant term in component {i}")
        parsed.append(p)
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise SpecError("name must be a string")
    metadata = doc.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise SpecError("metadata must be an object")
    return GermSpec(
        components=tuple(comps),
        parsed=tuple(parsed),
        parameter=param,
        name=name,
        metadata=dict(metadata),
    )


def load_germ_file(path) -> GermSpec:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{path}: invalid JSON: {exc}") from exc
    return load_germ_spec(doc)
