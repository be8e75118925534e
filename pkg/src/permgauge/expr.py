"""A small language for naming categories.

    expr   := term ('*' term)*
    term   := func | atom
    func   := ('rev' | 'adj' | 'gauge2') '(' expr (',' 'gen=' LABEL)? ')'
    atom   := 'qg' '(' series (',' INT)? ',' INT ')'
    series := 'sl'INT | 'so'INT | 'sp'INT | 'g2'

``*`` is the Deligne product, ``gen=`` is only accepted by ``adj`` and
``gauge2`` must be the outermost operation. Examples::

    qg(g2,3)
    gauge2(adj(qg(sl2,5)))
    gauge2(rev(adj(qg(sl2,3))) * rev(adj(qg(sl2,3))))
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from .catops import deligne_product, reverse, tensor_subcategory
from .errors import ArityError, ExprError, ExprSyntaxError, UnknownSeries
from .liealg import LieSpec
from .modular import ModularData, kac_peterson


@dataclass(frozen=True)
class QG:
    series: str
    rank: int
    level: int


@dataclass(frozen=True)
class Rev:
    expr: "CatExpr"


@dataclass(frozen=True)
class Adj:
    expr: "CatExpr"
    gen: str | None = None


@dataclass(frozen=True)
class Prod:
    left: "CatExpr"
    right: "CatExpr"


@dataclass(frozen=True)
class Gauge2:
    expr: "CatExpr"


CatExpr = Union[QG, Rev, Adj, Prod, Gauge2]


def series_from_name(name: str, offset=None) -> tuple[str, int]:
    """``"sl2" -> ("A", 1)``, ``"so5" -> ("B", 2)``, ``"so8" -> ("D", 4)``, ``"sp4" -> ("C", 2)``."""
    m = re.fullmatch(r"(sl|so|sp)(\d+)|(g2)", name)
    if not m:
        raise UnknownSeries(f"unknown algebra {name!r}", offset)
    if m.group(3):
        return "G2", 2
    kind, n = m.group(1), int(m.group(2))
    if kind == "sl" and n >= 2:
        return "A", n - 1
    if kind == "so" and n >= 5 and n % 2:
        return "B", (n - 1) // 2
    if kind == "so" and n >= 6 and not n % 2:
        return "D", n // 2
    if kind == "sp" and n >= 2 and not n % 2:
        return "C", n // 2
    raise UnknownSeries(f"algebra {name!r} is not a supported simple Lie algebra", offset)


def series_name(series: str, rank: int) -> str:
    return {
        "A": f"sl{rank + 1}",
        "B": f"so{2 * rank + 1}",
        "C": f"sp{2 * rank}",
        "D": f"so{2 * rank}",
        "G2": "g2",
    }[series]


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def offset(self, pos=None):
        return len(self.text[: self.pos if pos is None else pos].encode())

    def error(self, msg, cls=ExprSyntaxError, pos=None):
        return cls(msg, self.offset(pos))

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def word(self):
        self.skip()
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_]*").match(self.text, self.pos)
        if not m:
            raise self.error("expected a name")
        self.pos = m.end()
        return m.group(0)

    def integer(self):
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise self.error("expected an integer")
        self.pos = m.end()
        return int(m.group(0))

    def parse(self):
        node = self.expr()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() == "*":
            self.pos += 1
            node = Prod(node, self.term())
        return node

    def term(self):
        self.skip()
        start = self.pos
        name = self.word()
        if name == "qg":
            return self.atom(start)
        if name not in ("rev", "adj", "gauge2"):
            raise self.error(f"unknown function {name!r}", pos=start)
        self.expect("(")
        inner = self.expr()
        gen = None
        if self.peek() == ",":
            self.pos += 1
            self.skip()
            if not self.text.startswith("gen=", self.pos):
                raise self.error("expected 'gen=' label")
            if name != "adj":
                raise self.error(f"{name} takes a single argument", ArityError)
            self.pos += 4
            gen = self.label()
        self.expect(")")
        if name == "rev":
            return Rev(inner)
        if name == "adj":
            return Adj(inner, gen)
        return Gauge2(inner)

    def label(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in "()":
            self.pos += 1
        lab = self.text[start : self.pos].strip()
        if not lab:
            raise self.error("empty generator label", pos=start)
        return lab

    def atom(self, start):
        self.expect("(")
        self.skip()
        name_pos = self.pos
        name = self.word()
        series, rank = series_from_name(name, self.offset(name_pos))
        ints = []
        while self.peek() == ",":
            self.pos += 1
            ints.append(self.integer())
        self.expect(")")
        if len(ints) == 1:
            return QG(series, rank, ints[0])
        if len(ints) == 2:
            if ints[0] != rank:
                raise UnknownSeries(f"{name} has rank {rank}, not {ints[0]}", self.offset(name_pos))
            return QG(series, rank, ints[1])
        raise self.error(f"qg takes (algebra, level) or (algebra, rank, level); got {len(ints)} integers", ArityError, start)


def parse(text: str) -> CatExpr:
    return _Parser(text).parse()


def render(node: CatExpr) -> str:
    if isinstance(node, QG):
        return f"qg({series_name(node.series, node.rank)},{node.level})"
    if isinstance(node, Rev):
        return f"rev({render(node.expr)})"
    if isinstance(node, Adj):
        return f"adj({render(node.expr)}" + (f",gen={node.gen})" if node.gen else ")")
    if isinstance(node, Gauge2):
        return f"gauge2({render(node.expr)})"
    return f"{render(node.left)} * {render(node.right)}"


def evaluate(node: CatExpr) -> ModularData:
    """Modular data of a gauge2-free expression."""
    if isinstance(node, QG):
        return kac_peterson(LieSpec(node.series, node.rank, node.level))
    if isinstance(node, Rev):
        return reverse(evaluate(node.expr))
    if isinstance(node, Prod):
        return deligne_product(evaluate(node.left), evaluate(node.right))
    if isinstance(node, Adj):
        md = evaluate(node.expr)
        gen = node.gen or md.adjoint_label
        if gen is None:
            raise ArityError(f"adj({render(node.expr)}) has no default generator; pass gen=LABEL")
        if gen not in md.labels:
            raise ExprError(f"unknown label {gen!r}; labels are {', '.join(md.labels)}")
        return tensor_subcategory(md, [gen])
    raise ArityError("gauge2 must be the outermost operation")
