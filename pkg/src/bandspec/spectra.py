"""Finite unions of closed real intervals and their spectral arithmetic.

If ``A`` has spectrum ``s`` and ``B`` has spectrum ``t``, then
``A (x) 1 + 1 (x) B``, ``A (x) B`` and ``A (x) 1 + 1 (x) B + A (x) B`` have
spectra ``{x + y}``, ``{x * y}`` and ``{x + y + x * y}`` over ``x in s``,
``y in t``. Those three images are computed exactly here: each map is
continuous and bilinear-or-additive, so the image of a box
``[a, b] x [c, d]`` is the interval spanned by its four corner values.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

MERGE_TOL = 1e-12


def normalize(intervals: Iterable[Sequence[float]], merge_tol: float = MERGE_TOL) -> tuple:
    """Sort intervals and merge those that overlap or lie within ``merge_tol``.

    A merged piece no wider than ``merge_tol`` is a rounding seam between
    copies of one point and collapses to an atom at its midpoint.
    """
    items = sorted((float(lo), float(hi)) for lo, hi in intervals)
    out: list[list[float]] = []
    for lo, hi in items:
        if lo > hi or math.isnan(lo) or math.isnan(hi):
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        if out and lo - out[-1][1] <= merge_tol:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    for piece in out:
        if 0 < piece[1] - piece[0] <= merge_tol:
            piece[0] = piece[1] = (piece[0] + piece[1]) / 2
    return tuple((lo + 0.0, hi + 0.0) for lo, hi in out)


@dataclass(frozen=True)
class SpectrumSet:
    """Non-empty normalized union of closed intervals; atoms are ``[x, x]``."""

    intervals: tuple

    def __post_init__(self):
        norm = normalize(self.intervals)
        if not norm:
            raise ValueError("a spectrum is never empty")
        object.__setattr__(self, "intervals", norm)

    @classmethod
    def interval(cls, lo: float, hi: float) -> SpectrumSet:
        return cls(((lo, hi),))

    @classmethod
    def atoms(cls, points: Iterable[float]) -> SpectrumSet:
        return cls(tuple((p, p) for p in points))

    def __iter__(self):
        return iter(self.intervals)

    def __len__(self):
        return len(self.intervals)

    @property
    def lo(self) -> float:
        return self.intervals[0][0]

    @property
    def hi(self) -> float:
        return self.intervals[-1][1]

    def band_count(self) -> int:
        return len(self.intervals)

    def gaps(self) -> list[tuple[float, float]]:
        """Open gaps between consecutive bands."""
        return [(a[1], b[0]) for a, b in zip(self.intervals, self.intervals[1:])]

    def is_pure_point(self) -> bool:
        return all(lo == hi for lo, hi in self.intervals)

    def distance(self, x: float) -> float:
        """Distance from ``x`` to the set."""
        i = bisect.bisect_right([lo for lo, _ in self.intervals], x)
        best = math.inf
        for j in (i - 1, i):
            if 0 <= j < len(self.intervals):
                lo, hi = self.intervals[j]
                best = min(best, 0.0 if lo <= x <= hi else min(abs(x - lo), abs(x - hi)))
        return best

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.distance(x) <= tol

    def band_index(self, x: float, tol: float = 0.0):
        """Index of the band containing ``x`` (within ``tol``), else ``None``."""
        for k, (lo, hi) in enumerate(self.intervals):
            if lo - tol <= x <= hi + tol:
                return k
        return None

    def equals(self, other: SpectrumSet, tol: float = 0.0) -> bool:
        return hausdorff(self, other) <= tol

    def __str__(self):
        return " ".join(f"[{lo:.12g}, {hi:.12g}]" for lo, hi in self.intervals)


def _directed_hausdorff(s: SpectrumSet, t: SpectrumSet) -> float:
    # dist(., t) on an interval peaks at its endpoints or at a gap midpoint of t
    mids = [(a + b) / 2 for a, b in t.gaps()]
    worst = 0.0
    for lo, hi in s.intervals:
        cands = [lo, hi] + [m for m in mids if lo < m < hi]
        worst = max(worst, max(t.distance(x) for x in cands))
    return worst


def hausdorff(s: SpectrumSet, t: SpectrumSet) -> float:
    return max(_directed_hausdorff(s, t), _directed_hausdorff(t, s))


def from_eigen(e) -> SpectrumSet:
    """Distinct eigenvalues of an ``EigenSpectrum`` as atoms."""
    return SpectrumSet.atoms(e.values)


def _combine(s: SpectrumSet, t: SpectrumSet, f: Callable[[float, float], float]) -> SpectrumSet:
    out = []
    for a, b in s.intervals:
        for c, d in t.intervals:
            corners = (f(a, c), f(a, d), f(b, c), f(b, d))
            out.append((min(corners), max(corners)))
    return SpectrumSet(tuple(out))


def minkowski_sum(s: SpectrumSet, t: SpectrumSet) -> SpectrumSet:
    """``{x + y}``: spectrum of ``A (x) 1 + 1 (x) B``."""
    return SpectrumSet(tuple((a + c, b + d) for a, b in s.intervals for c, d in t.intervals))


def pointwise_product(s: SpectrumSet, t: SpectrumSet) -> SpectrumSet:
    """``{x * y}``: spectrum of ``A (x) B``."""
    return _combine(s, t, lambda x, y: x * y)


def strong_combine(s: SpectrumSet, t: SpectrumSet) -> SpectrumSet:
    """``{x + y + x * y}``: spectrum of ``A (x) 1 + 1 (x) B + A (x) B``."""
    return _combine(s, t, lambda x, y: x + y + x * y)


def repeat_sum(s: SpectrumSet, count: int) -> SpectrumSet:
    if count < 1:
        raise ValueError("repeat count must be >= 1")
    out = s
    for _ in range(count - 1):
        out = minkowski_sum(s, out)
    return out


def affine(s: SpectrumSet, scale: float, shift: float) -> SpectrumSet:
    """Image of ``s`` under ``x -> scale * x + shift``."""
    out = []
    for lo, hi in s.intervals:
        a, b = scale * lo + shift, scale * hi + shift
        out.append((min(a, b), max(a, b)))
    return SpectrumSet(tuple(out))


def laplacian(s: SpectrumSet, degree: float) -> SpectrumSet:
    """``k - A`` for a ``k``-regular graph."""
    return affine(s, -1.0, degree)


def markov(s: SpectrumSet, degree: float) -> SpectrumSet:
    """``A / k`` (simple random walk operator)."""
    if degree <= 0:
        raise ValueError("markov operator needs degree >= 1")
    return affine(s, 1.0 / degree, 0.0)


def normalized_laplacian(s: SpectrumSet, degree: float) -> SpectrumSet:
    """``1 - A / k``."""
    if degree <= 0:
        raise ValueError("normalized laplacian needs degree >= 1")
    return affine(s, -1.0 / degree, 1.0)
