"""Graph expressions: finite and infinite base graphs combined by sum/product/strong.

Grammar (whitespace ignored)::

    expr    := operand (op operand)*        op: '+' < '*' < '&' (all left-assoc)
    operand := INT '@' operand | atom | '(' expr ')'
    atom    := K<n> | Kb<n> | Q<d> | C<m> | P<m> | Line | Lattice<d>
             | Tree<q> | Free<d> | lit:<path>

``+`` is the graph sum, ``*`` the product, ``&`` the strong product and
``N@e`` the N-fold sum of ``e`` with itself.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from . import spectra
from .eigen import DEFAULT_TOL, eigenvalues
from .graphs import (
    INFINITE,
    CayleyMeta,
    FiniteGraph,
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    read_edge_list,
)
from .spectra import SpectrumSet

KINDS = ("adjacency", "laplacian", "markov", "normalized_laplacian")


class ExprError(ValueError):
    pass


class ParseError(ExprError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.message = message
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")

    def annotated(self) -> str:
        return f"{self}\n  {self.text}\n  {' ' * self.pos}^"


@dataclass(frozen=True)
class FiniteLiteral:
    graph: FiniteGraph
    label: str = ""

    def __str__(self):
        return self.label or repr(self.graph)


@dataclass(frozen=True)
class Line:
    def __str__(self):
        return "Line"


@dataclass(frozen=True)
class Lattice:
    d: int

    def __post_init__(self):
        if self.d < 1:
            raise ExprError("Lattice needs d >= 1")

    def __str__(self):
        return f"Lattice{self.d}"


@dataclass(frozen=True)
class Tree:
    """The q-regular tree."""

    q: int

    def __post_init__(self):
        if self.q < 3:
            raise ExprError("Tree needs q >= 3 (the 2-regular tree is Line)")

    def __str__(self):
        return f"Tree{self.q}"


@dataclass(frozen=True)
class Sum:
    left: "GraphExpr"
    right: "GraphExpr"

    def __str__(self):
        return f"({self.left} + {self.right})"


@dataclass(frozen=True)
class Product:
    left: "GraphExpr"
    right: "GraphExpr"

    def __str__(self):
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Strong:
    left: "GraphExpr"
    right: "GraphExpr"

    def __str__(self):
        return f"({self.left} & {self.right})"


@dataclass(frozen=True)
class Repeat:
    count: int
    child: "GraphExpr"

    def __post_init__(self):
        if self.count < 1:
            raise ExprError("repeat count must be >= 1")

    def __str__(self):
        return f"{self.count}@{self.child}"


GraphExpr = Union[FiniteLiteral, Line, Lattice, Tree, Sum, Product, Strong, Repeat]
LEAVES = (FiniteLiteral, Line, Lattice, Tree)


def literal(g: FiniteGraph) -> FiniteLiteral:
    return FiniteLiteral(g, g.name)


def leaves(e: GraphExpr):
    if isinstance(e, LEAVES):
        yield e
    elif isinstance(e, Repeat):
        for _ in range(e.count):
            yield from leaves(e.child)
    else:
        yield from leaves(e.left)
        yield from leaves(e.right)


def is_finite(e: GraphExpr) -> bool:
    return all(isinstance(leaf, FiniteLiteral) for leaf in leaves(e))


@lru_cache(maxsize=256)
def _literal_spectrum(g: FiniteGraph, tol: float) -> SpectrumSet:
    return spectra.from_eigen(eigenvalues(g, tol))


def base_spectrum(leaf, tol: float = DEFAULT_TOL) -> SpectrumSet:
    if isinstance(leaf, Line):
        return SpectrumSet.interval(-2.0, 2.0)
    if isinstance(leaf, Lattice):
        return SpectrumSet.interval(-2.0 * leaf.d, 2.0 * leaf.d)
    if isinstance(leaf, Tree):
        r = 2.0 * math.sqrt(leaf.q - 1)
        return SpectrumSet.interval(-r, r)
    if isinstance(leaf, FiniteLiteral):
        return _literal_spectrum(leaf.graph, tol)
    raise TypeError(f"not a leaf: {leaf!r}")


def eval_spectrum(e: GraphExpr, tol: float = DEFAULT_TOL) -> SpectrumSet:
    """Spectrum of the adjacency operator of ``e`` by structural recursion."""
    if isinstance(e, LEAVES):
        return base_spectrum(e, tol)
    if isinstance(e, Repeat):
        return spectra.repeat_sum(eval_spectrum(e.child, tol), e.count)
    s, t = eval_spectrum(e.left, tol), eval_spectrum(e.right, tol)
    if isinstance(e, Sum):
        return spectra.minkowski_sum(s, t)
    if isinstance(e, Product):
        return spectra.pointwise_product(s, t)
    if isinstance(e, Strong):
        return spectra.strong_combine(s, t)
    raise TypeError(f"not a graph expression: {e!r}")


def eval_meta(e: GraphExpr) -> Optional[CayleyMeta]:
    """Group/degree bookkeeping, or ``None`` when some leaf carries none."""
    if isinstance(e, Line):
        return CayleyMeta(INFINITE, 2, 2)
    if isinstance(e, Lattice):
        return CayleyMeta(INFINITE, 2 * e.d, 2 * e.d)
    if isinstance(e, Tree):
        return CayleyMeta(INFINITE, e.q, e.q)
    if isinstance(e, FiniteLiteral):
        return e.graph.meta
    if isinstance(e, Repeat):
        child = eval_meta(e.child)
        if child is None:
            return None
        out = child
        for _ in range(e.count - 1):
            out = child.sum(out)
        return out
    left, right = eval_meta(e.left), eval_meta(e.right)
    if left is None or right is None:
        return None
    if isinstance(e, Sum):
        return left.sum(right)
    if isinstance(e, Product):
        return left.product(right)
    if isinstance(e, Strong):
        return left.strong(right)
    raise TypeError(f"not a graph expression: {e!r}")


def derived_spectrum(e: GraphExpr, kind: str = "adjacency", tol: float = DEFAULT_TOL) -> SpectrumSet:
    """Spectrum of the adjacency, Laplacian, Markov or normalized Laplacian operator."""
    kind = kind.replace("-", "_")
    if kind not in KINDS:
        raise ExprError(f"unknown operator kind {kind!r}; expected one of {', '.join(KINDS)}")
    s = eval_spectrum(e, tol)
    if kind == "adjacency":
        return s
    meta = eval_meta(e)
    if meta is None:
        raise ExprError(f"{kind} spectrum needs a known regular degree")
    k = meta.degree
    if kind == "laplacian":
        return spectra.laplacian(s, k)
    if k == 0:
        raise ExprError(f"{kind} spectrum is undefined for degree 0")
    if kind == "markov":
        return spectra.markov(s, k)
    return spectra.normalized_laplacian(s, k)


# parsing

OPERATORS = {"+": (1, Sum), "*": (2, Product), "&": (3, Strong)}

_TOKEN = re.compile(
    r"\s*(?:(?P<lit>lit:[^\s+*&()]+)|(?P<int>\d+)(?=\s*@)|(?P<name>[A-Za-z]+\d*)|(?P<sym>[-+*&()@])|(?P<bad>\S))"
)
_ATOM = re.compile(r"(Kb|K|Q|C|P|Lattice|Tree|Free)(\d+)$")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        kind = m.lastgroup
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", text, m.start(kind))
        toks.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


def make_atom(name: str) -> GraphExpr:
    if name == "Line":
        return Line()
    if name.startswith("lit:"):
        return FiniteLiteral(read_edge_list(name[4:]), name)
    m = _ATOM.match(name)
    if m is None:
        raise ExprError(f"unknown atom {name!r}")
    head, n = m.group(1), int(m.group(2))
    if head == "K":
        return FiniteLiteral(complete_graph(n), name)
    if head == "Kb":
        return FiniteLiteral(complete_bipartite(n), name)
    if head == "C":
        return FiniteLiteral(cycle_graph(n), name)
    if head == "P":
        return FiniteLiteral(path_graph(n), name)
    if head == "Q":
        return Repeat(n, FiniteLiteral(complete_graph(2), "K2"))
    if head == "Lattice":
        return Lattice(n)
    if head == "Tree":
        return Tree(n)
    # rank-d free group on d generators and their inverses: 2d-regular tree
    if n < 1:
        raise ExprError("Free needs rank >= 1")
    return Line() if n == 1 else Tree(2 * n)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok):
        raise ParseError(msg, self.text, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "lit":
            self.fail(f"expected {value!r}, got {tok[1] or 'end of input'!r}", tok)

    def parse(self) -> GraphExpr:
        e = self.expression(1)
        tok = self.peek()
        if tok[0] != "end":
            self.fail(f"unexpected {tok[1]!r}", tok)
        return e

    def expression(self, min_prec: int) -> GraphExpr:
        lhs = self.operand()
        while True:
            tok = self.peek()
            if tok[0] != "sym" or tok[1] not in OPERATORS:
                return lhs
            prec, node = OPERATORS[tok[1]]
            if prec < min_prec:
                return lhs
            self.take()
            rhs = self.expression(prec + 1)
            lhs = node(lhs, rhs)

    def operand(self) -> GraphExpr:
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            self.expect("@")
            count = int(value)
            if count < 1:
                self.fail("repeat count must be >= 1", tok)
            return Repeat(count, self.operand())
        if kind == "sym" and value == "(":
            e = self.expression(1)
            self.expect(")")
            return e
        if kind in ("name", "lit"):
            try:
                return make_atom(value)
            except (ExprError, GraphError, OSError) as exc:
                self.fail(str(exc), tok)
        self.fail(f"expected an operand, got {value or 'end of input'!r}", tok)


def parse_expr(text: str) -> GraphExpr:
    return _Parser(text).parse()
