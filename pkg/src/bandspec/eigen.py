"""Dense symmetric eigensolver for adjacency matrices.

Two routes are provided. ``lapack`` (the default) calls ``numpy.linalg.eigvalsh``,
which reduces to tridiagonal form with Householder reflections and then runs an
implicitly shifted QL/QR iteration. ``native`` does the same two stages here in
numpy/Python; it is slower and exists as an independent cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import FiniteGraph

DEFAULT_TOL = 1e-8
QL_MAX_ITER = 50  # per eigenvalue


class EigenSolverError(RuntimeError):
    pass


@dataclass(frozen=True)
class EigenSpectrum:
    values: tuple
    multiplicities: tuple
    dimension: int
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if len(self.values) != len(self.multiplicities):
            raise ValueError("values and multiplicities differ in length")
        if sum(self.multiplicities) != self.dimension:
            raise ValueError("multiplicities must sum to the dimension")
        if any(m < 1 for m in self.multiplicities):
            raise ValueError("multiplicities must be positive")
        if any(b - a <= self.tol for a, b in zip(self.values, self.values[1:])):
            raise ValueError("distinct values must be separated by more than tol")

    def expanded(self) -> np.ndarray:
        """All eigenvalues repeated by multiplicity, ascending."""
        return np.repeat(np.array(self.values, dtype=float), self.multiplicities)

    def as_dict(self) -> dict:
        return dict(zip(self.values, self.multiplicities))


def householder_tridiagonal(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a real symmetric matrix to tridiagonal form.

    Returns the diagonal and the sub-diagonal of ``Q^T A Q``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    for k in range(n - 2):
        x = a[k + 1:, k]
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, x[0])
        v = x.copy()
        v[0] -= alpha
        norm_v = np.linalg.norm(v)
        if norm_v == 0.0:
            continue
        v /= norm_v
        sub = a[k + 1:, k + 1:]
        w = sub @ v
        q = 2.0 * (w - (v @ w) * v)
        sub -= np.outer(v, q)
        sub -= np.outer(q, v)
        a[k + 1, k] = a[k, k + 1] = alpha
        a[k + 2:, k] = 0.0
        a[k, k + 2:] = 0.0
    return np.diag(a).copy(), np.diag(a, -1).copy()


def tridiagonal_eigenvalues(diag, offdiag, max_iter: int = QL_MAX_ITER) -> np.ndarray:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL."""
    d = [float(x) for x in diag]
    n = len(d)
    e = [float(x) for x in offdiag] + [0.0]
    if len(e) != n:
        raise ValueError("off-diagonal must have length n - 1")
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) + dd == dd:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise EigenSolverError(f"QL iteration did not converge for eigenvalue {l}")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(np.array(d))


def symmetric_eigenvalues(a: np.ndarray, method: str = "lapack") -> np.ndarray:
    """Ascending eigenvalues of a dense real symmetric matrix."""
    a = np.asarray(a, dtype=float)
    if a.shape == (1, 1):
        return a.reshape(1).copy()
    if method == "lapack":
        try:
            return np.linalg.eigvalsh(a)
        except np.linalg.LinAlgError as exc:
            raise EigenSolverError(str(exc)) from exc
    if method == "native":
        return tridiagonal_eigenvalues(*householder_tridiagonal(a))
    raise ValueError(f"unknown eigensolver method {method!r}")


def group_eigenvalues(raw, tol: float = DEFAULT_TOL, snap: bool = True) -> EigenSpectrum:
    """Group sorted eigenvalues by single linkage within ``tol``.

    Each group is represented by its mean. With ``snap``, a mean within
    ``tol / 100`` of an integer is replaced by that integer; the added error
    stays well inside the ``tol / 10`` accuracy contract.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    xs = np.sort(np.asarray(raw, dtype=float))
    groups: list[list[float]] = []
    for x in xs:
        if groups and x - groups[-1][-1] <= tol:
            groups[-1].append(float(x))
        else:
            groups.append([float(x)])
    values, mults = [], []
    for grp in groups:
        v = math.fsum(grp) / len(grp)
        if snap and abs(v - round(v)) <= tol / 100:
            v = float(round(v))
        values.append(v + 0.0)
        mults.append(len(grp))
    # means of adjacent chains can end up closer than tol; merge those too
    i = 0
    while i < len(values) - 1:
        if values[i + 1] - values[i] <= tol:
            m = mults[i] + mults[i + 1]
            values[i] = (values[i] * mults[i] + values[i + 1] * mults[i + 1]) / m
            mults[i] = m
            del values[i + 1], mults[i + 1]
        else:
            i += 1
    return EigenSpectrum(tuple(values), tuple(mults), len(xs), tol)


def eigenvalues(g: FiniteGraph, tol: float = DEFAULT_TOL, method: str = "lapack") -> EigenSpectrum:
    """Spectrum of the adjacency matrix of ``g`` with multiplicities."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return group_eigenvalues(symmetric_eigenvalues(g.adjacency_matrix(), method), tol)


def eigenpairs(g: FiniteGraph) -> tuple[np.ndarray, np.ndarray]:
    return np.linalg.eigh(g.adjacency_matrix())


def spectral_radius(g: FiniteGraph, method: str = "lapack") -> float:
    vals = symmetric_eigenvalues(g.adjacency_matrix(), method)
    return float(max(abs(vals[0]), abs(vals[-1])))
