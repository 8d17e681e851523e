"""Recursive-descent reader for the command-line expression language.

Grammar (whitespace is ignored)::

    sum     := product (("+" | "-") product)*
    product := circ (("*" | "/") circ)*
    circ    := unary ("o" unary)*
    unary   := "-" unary | power
    power   := atom ("^" INT)?
    atom    := INT | "u" | "x" | "y" INT | "z(" INT "," INT ")"
             | "zeta(" INT "," INT ")" | "[" ["-"] INT "]" | "(" sum ")"

``o`` is the circle product of the Hopf ring and binds tighter than ``*``.
The same text is evaluated in one of several rings; symbols that do not
belong to the chosen ring are rejected.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .hopf import HopfElem, circ, star
from .kumod import FElem, KuElem, ku_mul
from .multisym import MSymExpr


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>zeta|z|y\d+|u|x|o\b|[A-Za-z_]\w*)|(?P<op>[-+*/^(),\[\]]))"
)


@dataclass(frozen=True)
class Tok:
    kind: str
    text: str
    pos: int


def tokenize(text: str) -> list[Tok]:
    out = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(text, i)
        if not m:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        kind = m.lastgroup
        out.append(Tok(kind, m.group(kind), m.start(kind)))
        i = m.end()
    out.append(Tok("end", "", len(text)))
    return out


class Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self) -> Tok:
        return self.toks[self.i]

    def take(self, text: str | None = None, kind: str | None = None) -> Tok:
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            want = text if text is not None else kind
            got = t.text or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", t.pos)
        self.i += 1
        return t

    def at(self, *texts: str) -> bool:
        return self.tok.kind in ("op", "name") and self.tok.text in texts

    def parse(self):
        node = self.sum()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return node

    def sum(self):
        node = self.product()
        while self.at("+", "-"):
            op = self.take()
            node = (op.text, op.pos, node, self.product())
        return node

    def product(self):
        node = self.circ()
        while self.at("*", "/"):
            op = self.take()
            node = (op.text, op.pos, node, self.circ())
        return node

    def circ(self):
        node = self.unary()
        while self.at("o"):
            op = self.take()
            node = ("o", op.pos, node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            op = self.take()
            return ("neg", op.pos, self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.at("^"):
            op = self.take()
            exp = self.take(kind="int")
            node = ("^", op.pos, node, int(exp.text))
        return node

    def _pair(self):
        self.take("(")
        a = int(self.take(kind="int").text)
        self.take(",")
        b = int(self.take(kind="int").text)
        self.take(")")
        return a, b

    def atom(self):
        t = self.tok
        if t.kind == "int":
            self.i += 1
            return ("num", t.pos, int(t.text))
        if self.at("("):
            self.take("(")
            node = self.sum()
            self.take(")")
            return node
        if self.at("["):
            self.take("[")
            sign = -1 if self.at("-") and self.take() else 1
            n = int(self.take(kind="int").text)
            self.take("]")
            return ("group", t.pos, sign * n)
        if t.kind == "name":
            self.i += 1
            if t.text in ("z", "zeta"):
                return (t.text, t.pos, self._pair())
            if t.text in ("u", "x"):
                return (t.text, t.pos)
            if t.text[0] == "y" and t.text[1:].isdigit():
                return ("y", t.pos, int(t.text[1:]))
            raise ParseError(f"unknown symbol {t.text!r}", t.pos)
        got = t.text or "end of input"
        raise ParseError(f"unexpected {got!r}", t.pos)


def parse(text: str):
    return Parser(text).parse()


# evaluation


class Ring:
    name = ""
    symbols: frozenset = frozenset()

    def const(self, c, pos):
        raise ParseError(f"constants are not elements of {self.name}", pos)

    def atom(self, node):
        raise NotImplementedError

    def mul(self, a, b):
        return a * b

    def circ(self, a, b, pos):
        raise ParseError(f"'o' is not defined in {self.name}", pos)


class KuRing(Ring):
    name = "ku_*(BU(1))"
    symbols = frozenset({"u", "y"})

    def const(self, c, pos):
        if Fraction(c).denominator != 1:
            raise ParseError("ku has integer coefficients", pos)
        return KuElem.const(int(c))

    def atom(self, node):
        if node[0] == "u":
            return KuElem.u()
        n = node[2]
        return KuElem.y(n) if n else KuElem.const(1)

    def mul(self, a, b):
        return ku_mul(a, b)


class FRing(Ring):
    name = "Z[u,x]/(x^2-ux)"
    symbols = frozenset({"u", "x"})

    def const(self, c, pos):
        if Fraction(c).denominator != 1:
            raise ParseError("integer coefficients only", pos)
        return FElem.const(int(c))

    def atom(self, node):
        return FElem.u() if node[0] == "u" else FElem.x()


class HopfRing(Ring):
    name = "the Hopf ring"
    symbols = frozenset({"zeta", "group"})

    def atom(self, node):
        if node[0] == "group":
            return HopfElem.group(node[2])
        return HopfElem.zeta(*node[2])

    def mul(self, a, b):
        return star(a, b)

    def circ(self, a, b, pos):
        return circ(a, b)


class MSymRing(Ring):
    name = "Q[z(a,b)]"
    symbols = frozenset({"z"})

    def const(self, c, pos):
        return MSymExpr.one(c)

    def atom(self, node):
        return MSymExpr.gen(node[2])


RINGS = {"ku": KuRing(), "f": FRing(), "hopf": HopfRing(), "msym": MSymRing()}


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Fraction))


def evaluate(node, ring: Ring):
    kind, pos = node[0], node[1]
    if kind == "num":
        return Fraction(node[2])
    if kind in ("u", "x", "y", "z", "zeta", "group"):
        sym = "y" if kind == "y" else kind
        if sym not in ring.symbols:
            raise ParseError(f"symbol {_sym_text(node)!r} is not in {ring.name}", pos)
        return ring.atom(node)
    if kind == "neg":
        v = evaluate(node[2], ring)
        return -v if _is_scalar(v) else v.scale(-1)
    if kind == "^":
        base, k = evaluate(node[2], ring), node[3]
        if _is_scalar(base):
            return base**k
        out = ring.const(1, pos) if not isinstance(ring, HopfRing) else HopfElem.group(0)
        for _ in range(k):
            out = ring.mul(out, base)
        return out
    a, b = evaluate(node[2], ring), evaluate(node[3], ring)
    if kind in ("+", "-"):
        if _is_scalar(a) and _is_scalar(b):
            return a + b if kind == "+" else a - b
        a = ring.const(a, pos) if _is_scalar(a) else a
        b = ring.const(b, pos) if _is_scalar(b) else b
        return a + b if kind == "+" else a - b
    if kind == "*":
        if _is_scalar(a) and _is_scalar(b):
            return a * b
        if _is_scalar(a):
            return _scale(b, a, ring, pos)
        if _is_scalar(b):
            return _scale(a, b, ring, pos)
        return ring.mul(a, b)
    if kind == "/":
        if not _is_scalar(b) or b == 0:
            raise ParseError("can only divide by a nonzero number", pos)
        if _is_scalar(a):
            return a / b
        return _scale(a, 1 / b, ring, pos)
    if kind == "o":
        if _is_scalar(a) or _is_scalar(b):
            raise ParseError("'o' needs two ring elements", pos)
        return ring.circ(a, b, pos)
    raise ParseError(f"unknown operation {kind!r}", pos)


def _scale(elem, c, ring, pos):
    if isinstance(ring, (KuRing, FRing)):
        if Fraction(c).denominator != 1:
            raise ParseError("integer coefficients only", pos)
        c = int(c)
    return elem.scale(c)


def _sym_text(node) -> str:
    kind = node[0]
    if kind == "y":
        return f"y{node[2]}"
    if kind in ("z", "zeta"):
        return f"{kind}({node[2][0]},{node[2][1]})"
    if kind == "group":
        return f"[{node[2]}]"
    return kind


def symbols_used(node) -> set[str]:
    if node[0] in ("u", "x", "y", "z", "zeta", "group"):
        return {node[0]}
    out: set = set()
    for child in node[2:]:
        if isinstance(child, tuple) and child and isinstance(child[0], str):
            out |= symbols_used(child)
    return out


def evaluate_text(text: str, ring: str):
    """Parse and evaluate; scalars are promoted into the ring."""
    r = RINGS[ring]
    node = parse(text)
    v = evaluate(node, r)
    if _is_scalar(v):
        v = r.const(v, 0) if not isinstance(r, HopfRing) else HopfElem.group(0).scale(v)
    return v
