"""Finite simple graphs, standard builders and the three graph compositions.

Composite vertex ``(v, w)`` of ``G`` and ``H`` is indexed as ``v * |W| + w``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import numpy as np

INFINITE = "infinite"

GroupOrder = Union[int, str]


class GraphError(ValueError):
    pass


class GroupTableError(GraphError):
    pass


def _and3(a: Optional[bool], b: Optional[bool]) -> Optional[bool]:
    # three-valued AND, None = undetermined
    if a is False or b is False:
        return False
    if a is None or b is None:
        return None
    return True


def _mul_order(a: GroupOrder, b: GroupOrder) -> GroupOrder:
    if a == INFINITE or b == INFINITE:
        return INFINITE
    return a * b


@dataclass(frozen=True)
class CayleyMeta:
    """Group bookkeeping for a (possibly infinite) Cayley graph.

    ``is_cayley`` is three-valued: ``None`` means the composed generating set
    is not known to generate the product group (the bare ``S x T`` case).
    """

    group_order: GroupOrder
    degree: int
    generating_set_size: int
    is_cayley: Optional[bool] = True

    def __post_init__(self):
        if self.group_order != INFINITE and (
            not isinstance(self.group_order, int) or self.group_order < 1
        ):
            raise ValueError(f"bad group order {self.group_order!r}")
        if self.degree < 0 or self.generating_set_size < 0:
            raise ValueError("degree and generating set size must be >= 0")
        if self.is_cayley and self.degree != self.generating_set_size:
            raise ValueError("Cayley graph degree must equal |S|")

    def sum(self, other: CayleyMeta) -> CayleyMeta:
        # generating set S u T
        return CayleyMeta(
            _mul_order(self.group_order, other.group_order),
            self.degree + other.degree,
            self.generating_set_size + other.generating_set_size,
            _and3(self.is_cayley, other.is_cayley),
        )

    def product(self, other: CayleyMeta) -> CayleyMeta:
        # S x T need not generate the product group
        is_cayley = _and3(self.is_cayley, other.is_cayley)
        return CayleyMeta(
            _mul_order(self.group_order, other.group_order),
            self.degree * other.degree,
            self.generating_set_size * other.generating_set_size,
            None if is_cayley else is_cayley,
        )

    def strong(self, other: CayleyMeta) -> CayleyMeta:
        # S u T u (S x T) always generates
        s, t = self.generating_set_size, other.generating_set_size
        return CayleyMeta(
            _mul_order(self.group_order, other.group_order),
            self.degree + other.degree + self.degree * other.degree,
            s + t + s * t,
            _and3(self.is_cayley, other.is_cayley),
        )


@dataclass(frozen=True)
class FiniteGraph:
    """Finite simple graph on vertices ``0 .. n_vertices - 1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``. Equality and
    hashing use ``(n_vertices, edges)`` only; ``meta`` is descriptive.
    """

    n_vertices: int
    edges: frozenset
    meta: Optional[CayleyMeta] = field(default=None, compare=False)
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n_vertices < 1:
            raise GraphError("a graph needs at least one vertex")
        canon = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise GraphError(f"edge {e} out of range for {self.n_vertices} vertices")
            canon.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(canon))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], **kw) -> FiniteGraph:
        return cls(n, frozenset(tuple(e) for e in edges), **kw)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n_vertices, self.n_vertices))
        if self.edges:
            idx = np.array(sorted(self.edges))
            a[idx[:, 0], idx[:, 1]] = 1.0
            a[idx[:, 1], idx[:, 0]] = 1.0
        return a

    def neighbours(self) -> list[list[int]]:
        nb: list[list[int]] = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return nb

    def degrees(self) -> list[int]:
        deg = [0] * self.n_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees())

    def regular_degree(self) -> Optional[int]:
        """Common degree if the graph is regular, else ``None``."""
        deg = set(self.degrees())
        return deg.pop() if len(deg) == 1 else None

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FiniteGraph{label} |V|={self.n_vertices} |E|={self.n_edges}>"


def complete_graph(n: int) -> FiniteGraph:
    if n < 1:
        raise GraphError("K_n needs n >= 1")
    return FiniteGraph.from_edges(
        n, combinations(range(n), 2), meta=CayleyMeta(n, n - 1, n - 1), name=f"K{n}"
    )


def complete_bipartite(n: int) -> FiniteGraph:
    """K_{n,n}: parts ``0..n-1`` and ``n..2n-1``."""
    if n < 1:
        raise GraphError("K_{n,n} needs n >= 1")
    edges = ((i, n + j) for i in range(n) for j in range(n))
    return FiniteGraph.from_edges(2 * n, edges, meta=CayleyMeta(2 * n, n, n), name=f"Kb{n}")


def cycle_graph(m: int) -> FiniteGraph:
    if m < 3:
        raise GraphError("a cycle needs m >= 3")
    edges = ((i, (i + 1) % m) for i in range(m))
    return FiniteGraph.from_edges(m, edges, meta=CayleyMeta(m, 2, 2), name=f"C{m}")


def path_graph(m: int) -> FiniteGraph:
    if m < 1:
        raise GraphError("a path needs m >= 1")
    return FiniteGraph.from_edges(m, ((i, i + 1) for i in range(m - 1)), name=f"P{m}")


def edgeless_graph(n: int) -> FiniteGraph:
    return FiniteGraph(n, frozenset(), name=f"E{n}")


def check_group_table(table: np.ndarray) -> np.ndarray:
    """Validate a multiplication table with identity 0; return inverses."""
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
        raise GroupTableError("multiplication table must be a non-empty square matrix")
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer):
        raise GroupTableError("multiplication table entries must be integers")
    if t.min() < 0 or t.max() >= n:
        raise GroupTableError("table entries must lie in 0..order-1")
    ident = np.arange(n)
    if not (np.array_equal(t[0], ident) and np.array_equal(t[:, 0], ident)):
        raise GroupTableError("element 0 is not a two-sided identity")
    # (gh)k == g(hk) for all triples
    left = t[t[:, :, None], np.arange(n)[None, None, :]]  # (g*h)*k
    right = t[np.arange(n)[:, None, None], t[None, :, :]]  # g*(h*k)
    if not np.array_equal(left, right):
        raise GroupTableError("multiplication is not associative")
    rows, cols = np.nonzero(t == 0)
    inv = np.full(n, -1)
    inv[rows] = cols
    if len(rows) != n or (inv < 0).any() or not (t[inv, ident] == 0).all():
        raise GroupTableError("some element has no two-sided inverse")
    return inv


def cayley_graph(table, gen_set: Iterable[int]) -> FiniteGraph:
    """Cayley graph with edges ``{g, g*s}`` for ``s`` in a symmetric ``gen_set``."""
    t = np.asarray(table)
    inv = check_group_table(t)
    n = t.shape[0]
    gens = sorted(set(int(s) for s in gen_set))
    for s in gens:
        if not 0 <= s < n:
            raise GraphError(f"generator {s} is not a group element")
    if 0 in gens:
        raise GraphError("the identity cannot be a generator (it would create loops)")
    if any(int(inv[s]) not in gens for s in gens):
        raise GraphError("generating set is not closed under inverses")
    edges = {(g, int(t[g, s])) for g in range(n) for s in gens}
    return FiniteGraph.from_edges(n, edges, meta=CayleyMeta(n, len(gens), len(gens)))


def cyclic_group_table(n: int) -> np.ndarray:
    i = np.arange(n)
    return (i[:, None] + i[None, :]) % n


def _compose_meta(g: FiniteGraph, h: FiniteGraph, how: str) -> Optional[CayleyMeta]:
    if g.meta is None or h.meta is None:
        return None
    return getattr(g.meta, how)(h.meta)


def _sum_edges(g: FiniteGraph, h: FiniteGraph) -> set:
    nw = h.n_vertices
    out = set()
    for v in range(g.n_vertices):
        for w, w2 in h.edges:
            out.add((v * nw + w, v * nw + w2))
    for v, v2 in g.edges:
        for w in range(nw):
            out.add((v * nw + w, v2 * nw + w))
    return out


def _product_edges(g: FiniteGraph, h: FiniteGraph) -> set:
    nw = h.n_vertices
    out = set()
    for (v, v2), (w, w2) in product(g.edges, h.edges):
        out.add((v * nw + w, v2 * nw + w2))
        out.add((v * nw + w2, v2 * nw + w))
    return out


def graph_sum(g: FiniteGraph, h: FiniteGraph) -> FiniteGraph:
    """Sum ``G + H``: move along an edge in exactly one coordinate."""
    return FiniteGraph.from_edges(
        g.n_vertices * h.n_vertices, _sum_edges(g, h), meta=_compose_meta(g, h, "sum")
    )


def graph_product(g: FiniteGraph, h: FiniteGraph) -> FiniteGraph:
    """Product ``G x H``: move along edges in both coordinates at once."""
    return FiniteGraph.from_edges(
        g.n_vertices * h.n_vertices, _product_edges(g, h), meta=_compose_meta(g, h, "product")
    )


def graph_strong_product(g: FiniteGraph, h: FiniteGraph) -> FiniteGraph:
    return FiniteGraph.from_edges(
        g.n_vertices * h.n_vertices,
        _sum_edges(g, h) | _product_edges(g, h),
        meta=_compose_meta(g, h, "strong"),
    )


def repeat_sum(g: FiniteGraph, count: int) -> FiniteGraph:
    if count < 1:
        raise GraphError("repeat count must be >= 1")
    out = g
    for _ in range(count - 1):
        out = graph_sum(g, out)
    return out


def is_connected(g: FiniteGraph) -> bool:
    nb = g.neighbours()
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in nb[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n_vertices


def degree_sequence(g: FiniteGraph) -> list[int]:
    return sorted(g.degrees())


def read_edge_list(path: Union[str, Path]) -> FiniteGraph:
    """Read the ``n <count>`` + ``u v`` lines edge-list format."""
    lines = [ln.split("#", 1)[0].strip() for ln in Path(path).read_text().splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError(f"{path}: empty edge-list file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphError(f"{path}: first line must be 'n <count>'")
    try:
        n = int(head[1])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"{path}: malformed line ({exc})") from None
    return FiniteGraph.from_edges(n, edges, name=Path(path).stem)


def write_edge_list(g: FiniteGraph, path: Union[str, Path]) -> None:
    body = "".join(f"{u} {v}\n" for u, v in sorted(g.edges))
    Path(path).write_text(f"n {g.n_vertices}\n{body}")
