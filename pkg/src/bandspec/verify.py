"""Check predicted band spectra against eigenvalues of finite stand-ins.

Infinite leaves are replaced by finite graphs whose spectra lie inside the
leaf's spectrum: ``Line`` by the cycle ``C_m``, ``Lattice(d)`` by the torus
``C_m + ... + C_m``, and ``Tree(q)`` by a breadth-first ball of the q-regular
tree (a finite tree of maximal degree q has spectral radius below
``2 sqrt(q - 1)``). Since all three composition rules are monotone in their
operand sets, every eigenvalue of a materialized expression must lie in the
predicted set.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

import numpy as np

from .eigen import DEFAULT_TOL, EigenSpectrum, group_eigenvalues, symmetric_eigenvalues
from .expr import (
    FiniteLiteral,
    GraphExpr,
    Lattice,
    Line,
    Product,
    Repeat,
    Strong,
    Sum,
    Tree,
    eval_spectrum,
    leaves,
)
from .graphs import (
    FiniteGraph,
    cycle_graph,
    graph_product,
    graph_strong_product,
    graph_sum,
    repeat_sum,
)
from .spectra import SpectrumSet

DEFAULT_CAP = 4000
DEFAULT_TRUNCATIONS = (8, 16, 32)


class CapExceeded(ValueError):
    def __init__(self, size: int, cap: int):
        self.size = size
        self.cap = cap
        super().__init__(f"materialized graph would have {size} vertices (cap {cap})")


def tree_ball_size(q: int, radius: int) -> int:
    return 1 + sum(q * (q - 1) ** (r - 1) for r in range(1, radius + 1))


def tree_ball_radius(q: int, min_vertices: int) -> int:
    """Smallest radius whose q-regular tree ball has at least ``min_vertices``."""
    r = 0
    while tree_ball_size(q, r) < min_vertices:
        r += 1
    return r


def tree_bfs(q: int, n_vertices: int) -> FiniteGraph:
    """First ``n_vertices`` vertices of the q-regular tree in breadth-first order."""
    if q < 2 or n_vertices < 1:
        raise ValueError("need q >= 2 and n_vertices >= 1")
    edges = []
    parent_slots = []  # (vertex, children still to attach)
    nxt = 1
    head = 0
    parent_slots.append((0, q))
    while nxt < n_vertices:
        v, free = parent_slots[head]
        head += 1
        for _ in range(free):
            if nxt >= n_vertices:
                break
            edges.append((v, nxt))
            parent_slots.append((nxt, q - 1))
            nxt += 1
    return FiniteGraph.from_edges(n_vertices, edges, name=f"T{q}[{n_vertices}]")


def tree_ball(q: int, radius: int) -> FiniteGraph:
    return tree_bfs(q, tree_ball_size(q, radius))


def materialized_size(e: GraphExpr, truncation: int) -> int:
    if isinstance(e, Line):
        return truncation
    if isinstance(e, Lattice):
        return truncation ** e.d
    if isinstance(e, Tree):
        return tree_ball_size(e.q, tree_ball_radius(e.q, truncation))
    if isinstance(e, FiniteLiteral):
        return e.graph.n_vertices
    if isinstance(e, Repeat):
        return materialized_size(e.child, truncation) ** e.count
    return materialized_size(e.left, truncation) * materialized_size(e.right, truncation)


def _build(e: GraphExpr, m: int) -> FiniteGraph:
    if isinstance(e, Line):
        return cycle_graph(m)
    if isinstance(e, Lattice):
        return repeat_sum(cycle_graph(m), e.d)
    if isinstance(e, Tree):
        return tree_ball(e.q, tree_ball_radius(e.q, m))
    if isinstance(e, FiniteLiteral):
        return e.graph
    if isinstance(e, Repeat):
        return repeat_sum(_build(e.child, m), e.count)
    op = {Sum: graph_sum, Product: graph_product, Strong: graph_strong_product}[type(e)]
    return op(_build(e.left, m), _build(e.right, m))


def materialize(e: GraphExpr, truncation: int, cap: int = DEFAULT_CAP) -> FiniteGraph:
    """Finite graph standing in for ``e`` (cycles, tori and tree balls for infinite leaves)."""
    if truncation < 3:
        raise ValueError("truncation must be >= 3")
    size = materialized_size(e, truncation)
    if size > cap:
        raise CapExceeded(size, cap)
    return _build(e, truncation)


@dataclass
class VerificationReport:
    expression: GraphExpr
    truncation_size: int
    n_vertices: int
    predicted: SpectrumSet
    computed: EigenSpectrum
    containment_violations: list = field(default_factory=list)  # (eigenvalue, distance)
    uncovered_bands: list = field(default_factory=list)
    max_band_distance: float = 0.0
    tol: float = DEFAULT_TOL

    @property
    def passed(self) -> bool:
        return not self.containment_violations

    def summary(self) -> dict:
        return {
            "truncation": self.truncation_size,
            "n_vertices": self.n_vertices,
            "eigenvalue_count": self.computed.dimension,
            "distinct_eigenvalues": len(self.computed.values),
            "tol": self.tol,
            "violations": [[float(x), float(d)] for x, d in self.containment_violations],
            "uncovered_bands": list(self.uncovered_bands),
            "max_band_distance": float(self.max_band_distance),
            "passed": self.passed,
        }


def band_distance(predicted: SpectrumSet, values) -> float:
    """Sup over the predicted set of the distance to the nearest value.

    On a band the distance function peaks at a band endpoint or halfway
    between consecutive values, so those points are the only ones checked.
    """
    vals = np.sort(np.asarray(values, dtype=float))
    worst = 0.0

    def dist(x):
        i = bisect.bisect_left(vals, x)
        return min(abs(x - vals[j]) for j in (i - 1, i) if 0 <= j < len(vals))

    mids = (vals[:-1] + vals[1:]) / 2
    for lo, hi in predicted:
        cands = [lo, hi]
        i, j = np.searchsorted(mids, [lo, hi])
        cands.extend(mids[i:j])
        worst = max(worst, max(dist(x) for x in cands))
    return worst


def check(e: GraphExpr, graph: FiniteGraph, truncation: int, tol: float = DEFAULT_TOL) -> VerificationReport:
    predicted = eval_spectrum(e, tol)
    raw = symmetric_eigenvalues(graph.adjacency_matrix())
    computed = group_eigenvalues(raw, tol)
    violations = []
    for x in computed.values:
        d = predicted.distance(x)
        if d > tol:
            violations.append((x, d))
    hit = {predicted.band_index(x, tol) for x in computed.values}
    uncovered = [k for k in range(predicted.band_count()) if k not in hit]
    return VerificationReport(
        expression=e,
        truncation_size=truncation,
        n_vertices=graph.n_vertices,
        predicted=predicted,
        computed=computed,
        containment_violations=violations,
        uncovered_bands=uncovered,
        max_band_distance=band_distance(predicted, computed.values),
        tol=tol,
    )


def verify_containment(
    e: GraphExpr, truncation: int = 16, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP
) -> VerificationReport:
    return check(e, materialize(e, truncation, cap), truncation, tol)


def verify_coverage(
    e: GraphExpr, truncations=DEFAULT_TRUNCATIONS, tol: float = DEFAULT_TOL, cap: int = DEFAULT_CAP
) -> list[VerificationReport]:
    truncations = list(truncations)
    if truncations != sorted(truncations):
        raise ValueError("truncations must be ascending")
    for m in truncations:
        size = materialized_size(e, m)
        if size > cap:
            raise CapExceeded(size, cap)
    return [verify_containment(e, m, tol, cap) for m in truncations]


def coverage_is_monotone(reports, slack: float = 0.1) -> bool:
    """Whether ``max_band_distance`` never grows by more than ``slack`` (relative)."""
    d = [r.max_band_distance for r in reports]
    return all(b <= a * (1 + slack) for a, b in zip(d, d[1:]))


def coverage_gated(e: GraphExpr) -> bool:
    """Coverage is pass/fail only for expressions without tree leaves."""
    return not any(isinstance(leaf, Tree) for leaf in leaves(e))


def gap_margins(report: VerificationReport) -> list[tuple[float, float, float]]:
    """For each predicted gap: (center, half width, distance to nearest eigenvalue)."""
    vals = np.asarray(report.computed.values)
    out = []
    for a, b in report.predicted.gaps():
        c = (a + b) / 2
        out.append((c, (b - a) / 2, float(np.min(np.abs(vals - c)))))
    return out


def cycle_max_half_gap(m: int) -> float:
    """Closed form for ``Line`` truncated at ``m``: half the largest gap between
    consecutive distinct values of ``2 cos(2 pi k / m)``."""
    vals = sorted({round(2 * math.cos(2 * math.pi * k / m), 15) for k in range(m)})
    return max(b - a for a, b in zip(vals, vals[1:])) / 2
