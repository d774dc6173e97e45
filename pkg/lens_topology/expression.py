"""Space expressions: a small language for composing constructions.

Grammar::

    expr := "point"
          | "discrete" INT | "circle" INT | "sphere" INT | "rp" INT
          | "join" "(" expr "," expr ")" | "disjoint" "(" expr "," expr ")"
          | "lens" INT "[" INT ("," INT)* "]"
          | "milnor" GROUP INT
          | "mapping-torus" "(" "circle" INT "," "rot" INT ")"
          | "load" PATH
    GROUP := ("Z" | "D") ":" INT ("x" ("Z" | "D") ":" INT)*
    PATH  := a quoted string or a bare token
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
import re

from lens_topology.core.dset import (
    DeltaSet,
    discrete,
    disjoint_union,
    join,
    point,
    polygon_circle,
    sphere,
)
from lens_topology.core.io import load_delta_set
from lens_topology.errors import ExpressionSyntaxError
from lens_topology.groups.group import parse_group
from lens_topology.spaces.lens import LensParams, lens_space
from lens_topology.spaces.milnor import milnor_base, real_projective
from lens_topology.spaces.torus import circle_rotation, mapping_torus


class SpaceExpression(ABC):
    """A node of the expression tree."""

    @abstractmethod
    def build(self) -> DeltaSet:
        """Construct the Δ-set this expression denotes."""

    @abstractmethod
    def render(self) -> str:
        """Canonical source text; parsing it gives back an equal tree."""

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class PointExpr(SpaceExpression):
    def build(self) -> DeltaSet:
        return point()

    def render(self) -> str:
        return "point"


@dataclass(frozen=True)
class DiscreteExpr(SpaceExpression):
    k: int

    def build(self) -> DeltaSet:
        return discrete(self.k)

    def render(self) -> str:
        return f"discrete {self.k}"


@dataclass(frozen=True)
class CircleExpr(SpaceExpression):
    m: int

    def build(self) -> DeltaSet:
        return polygon_circle(self.m)

    def render(self) -> str:
        return f"circle {self.m}"


@dataclass(frozen=True)
class SphereExpr(SpaceExpression):
    n: int

    def build(self) -> DeltaSet:
        return sphere(self.n)

    def render(self) -> str:
        return f"sphere {self.n}"


@dataclass(frozen=True)
class JoinExpr(SpaceExpression):
    left: SpaceExpression
    right: SpaceExpression

    def build(self) -> DeltaSet:
        return join(self.left.build(), self.right.build())

    def render(self) -> str:
        return f"join({self.left.render()}, {self.right.render()})"


@dataclass(frozen=True)
class DisjointExpr(SpaceExpression):
    left: SpaceExpression
    right: SpaceExpression

    def build(self) -> DeltaSet:
        return disjoint_union(self.left.build(), self.right.build())

    def render(self) -> str:
        return f"disjoint({self.left.render()}, {self.right.render()})"


@dataclass(frozen=True)
class LensExpr(SpaceExpression):
    m: int
    ls: tuple[int, ...]

    def build(self) -> DeltaSet:
        return lens_space(LensParams(self.m, self.ls))[0]

    def render(self) -> str:
        return f"lens {self.m} [{','.join(str(l) for l in self.ls)}]"


@dataclass(frozen=True)
class MilnorExpr(SpaceExpression):
    group: str
    n: int

    def build(self) -> DeltaSet:
        return milnor_base(parse_group(self.group), self.n)[0]

    def render(self) -> str:
        return f"milnor {self.group} {self.n}"


@dataclass(frozen=True)
class RealProjectiveExpr(SpaceExpression):
    n: int

    def build(self) -> DeltaSet:
        return real_projective(self.n)[0]

    def render(self) -> str:
        return f"rp {self.n}"


@dataclass(frozen=True)
class MappingTorusExpr(SpaceExpression):
    m: int
    l: int

    def build(self) -> DeltaSet:
        circle = polygon_circle(self.m)
        return mapping_torus(circle, circle_rotation(self.m, self.l))

    def render(self) -> str:
        return f"mapping-torus(circle {self.m}, rot {self.l})"


@dataclass(frozen=True)
class LoadExpr(SpaceExpression):
    path: str

    def build(self) -> DeltaSet:
        return load_delta_set(self.path)

    def render(self) -> str:
        return f'load "{self.path}"'


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "word", "string", "punct" or "end"
    text: str
    line: int
    col: int


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<string>"[^"\n]*")
  | (?P<int>-?\d+)
  | (?P<punct>[()\[\],:])
  | (?P<word>[^\s()\[\],:"]+)
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ExpressionSyntaxError(line, pos - line_start + 1, "a token")
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        else:
            for offset, ch in enumerate(match.group()):
                if ch == "\n":
                    line += 1
                    line_start = pos + offset + 1
        pos = match.end()
    tokens.append(Token("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def fail(self, expected: str) -> ExpressionSyntaxError:
        tok = self.current
        return ExpressionSyntaxError(tok.line, tok.col, expected)

    def advance(self) -> Token:
        tok = self.current
        if tok.kind != "end":
            self.pos += 1
        return tok

    def punct(self, symbol: str) -> None:
        if self.current.kind != "punct" or self.current.text != symbol:
            raise self.fail(f"'{symbol}'")
        self.advance()

    def keyword(self, word: str) -> None:
        if self.current.kind != "word" or self.current.text != word:
            raise self.fail(f"'{word}'")
        self.advance()

    def integer(self, what: str = "an integer") -> int:
        if self.current.kind != "int":
            raise self.fail(what)
        return int(self.advance().text)

    def group(self) -> str:
        factors = [self.group_factor()]
        while self.current.kind == "word" and self.current.text == "x":
            self.advance()
            factors.append(self.group_factor())
        return " x ".join(factors)

    def group_factor(self) -> str:
        if self.current.kind != "word" or self.current.text not in ("Z", "D"):
            raise self.fail("a group such as Z:3 or D:4")
        kind = self.advance().text
        self.punct(":")
        return f"{kind}:{self.integer('a group order')}"

    def pair(self) -> tuple[SpaceExpression, SpaceExpression]:
        self.punct("(")
        left = self.expression()
        self.punct(",")
        right = self.expression()
        self.punct(")")
        return left, right

    def expression(self) -> SpaceExpression:
        tok = self.current
        if tok.kind != "word":
            raise self.fail("a space")
        self.advance()
        head = tok.text
        if head == "point":
            return PointExpr()
        if head == "discrete":
            return DiscreteExpr(self.integer())
        if head == "circle":
            return CircleExpr(self.integer())
        if head == "sphere":
            return SphereExpr(self.integer())
        if head == "rp":
            return RealProjectiveExpr(self.integer())
        if head == "join":
            return JoinExpr(*self.pair())
        if head == "disjoint":
            return DisjointExpr(*self.pair())
        if head == "lens":
            m = self.integer("a modulus")
            self.punct("[")
            ls = [self.integer("a lens parameter")]
            while self.current.kind == "punct" and self.current.text == ",":
                self.advance()
                ls.append(self.integer("a lens parameter"))
            self.punct("]")
            return LensExpr(m, tuple(ls))
        if head == "milnor":
            group = self.group()
            return MilnorExpr(group, self.integer("a stage n"))
        if head == "mapping-torus":
            self.punct("(")
            self.keyword("circle")
            m = self.integer()
            self.punct(",")
            self.keyword("rot")
            l = self.integer()
            self.punct(")")
            return MappingTorusExpr(m, l)
        if head == "load":
            if self.current.kind == "string":
                return LoadExpr(self.advance().text[1:-1])
            if self.current.kind in ("word", "int"):
                return LoadExpr(self.advance().text)
            raise self.fail("a file path")
        self.pos -= 1
        raise self.fail("a space")


def parse(text: str) -> SpaceExpression:
    """Parse a space expression.

    Raises:
        ExpressionSyntaxError: With the 1-based line and column of the first bad token
    """
    parser = _Parser(text)
    expr = parser.expression()
    if parser.current.kind != "end":
        raise parser.fail("end of input")
    return expr


def evaluate(text_or_expr: str | SpaceExpression) -> DeltaSet:
    expr = parse(text_or_expr) if isinstance(text_or_expr, str) else text_or_expr
    return expr.build()


def describe(expr: SpaceExpression) -> str:
    """Short human name for the common constructions."""
    names = {
        PointExpr: "point",
        SphereExpr: "sphere",
        CircleExpr: "circle",
        LensExpr: "lens space",
        MilnorExpr: "Milnor model",
        RealProjectiveExpr: "real projective space",
        MappingTorusExpr: "mapping torus",
        JoinExpr: "join",
        DisjointExpr: "disjoint union",
        DiscreteExpr: "discrete set",
        LoadExpr: "loaded space",
    }
    return names[type(expr)]
