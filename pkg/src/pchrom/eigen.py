"""Dense symmetric eigenvalues: Householder tridiagonalisation + implicit QL.

Only eigenvalues are produced.  The zero/sign classification tolerance is
recorded on the returned :class:`Spectrum` so callers can audit it, and for
small graphs the number of zero eigenvalues is cross-checked against the
exact rank of the integer adjacency matrix.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import InertiaMismatch, NoConverge, TooLarge
from .graphio import Graph

N_MAX = 4096
MAX_SWEEPS = 64
EXACT_RANK_MAX_N = 64
EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class Spectrum:
    values: tuple  # descending
    n_pos: int
    n_zero: int
    n_neg: int
    tau: float

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def inertia(self) -> tuple[int, int, int]:
        return self.n_pos, self.n_zero, self.n_neg

    @property
    def lambda_max(self) -> float:
        return self.values[0]

    @property
    def lambda_min(self) -> float:
        return self.values[-1]

    def positive(self) -> np.ndarray:
        v = np.asarray(self.values)
        return v[v > self.tau]

    def negative_abs(self) -> np.ndarray:
        v = np.asarray(self.values)
        return -v[v < -self.tau]


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Reduce symmetric ``a`` to tridiagonal form by Householder reflections.

    Returns ``(d, e)``: the diagonal and the subdiagonal, with ``e[i]``
    coupling rows ``i`` and ``i+1`` and ``e[n-1] = 0``.  ``a`` is not modified.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    e = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1:, k]
        tail = float(np.dot(x[1:], x[1:]))
        if tail == 0.0:
            e[k] = x[0]
            continue
        alpha = math.copysign(math.sqrt(x[0] * x[0] + tail), x[0])
        u = x.copy()
        u[0] += alpha
        h = 0.5 * float(np.dot(u, u))
        sub = a[k + 1:, k + 1:]
        p = sub @ u / h
        kk = float(np.dot(u, p)) / (2.0 * h)
        q = p - kk * u
        sub -= np.outer(q, u) + np.outer(u, q)
        e[k] = -alpha
    if n >= 2:
        e[n - 2] = a[n - 1, n - 2]
    return np.diag(a).copy(), e


def tridiagonal_eigenvalues(d, e, max_sweeps: int = MAX_SWEEPS) -> list[float]:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL.

    ``d`` is the diagonal, ``e[i]`` the entry between rows ``i`` and ``i+1``.
    """
    d = [float(x) for x in d]
    e = [float(x) for x in e]
    n = len(d)
    if n == 0:
        return []
    e[n - 1] = 0.0
    # absolute floor: a relative-only test stalls on clusters of zero eigenvalues
    norm = max(abs(d[i]) + abs(e[i]) + (abs(e[i - 1]) if i else 0.0) for i in range(n))
    floor = EPS * norm
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= EPS * dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise NoConverge(f"QL did not converge for eigenvalue {l} after {max_sweeps} sweeps")
            # Wilkinson-type shift from the leading 2x2 block.
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def symmetric_eigenvalues(a: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """All eigenvalues of a dense symmetric matrix, sorted descending."""
    d, e = tridiagonalize(a)
    vals = tridiagonal_eigenvalues(d, e, max_sweeps)
    return np.sort(np.asarray(vals))[::-1]


def zero_tolerance(n: int, max_abs: float) -> float:
    return 64.0 * n * max(1.0, max_abs) * EPS


def spectrum_from_values(values) -> Spectrum:
    """Classify already-computed eigenvalues (any order)."""
    vals = np.sort(np.asarray(values, dtype=float))[::-1]
    n = len(vals)
    tau = zero_tolerance(n, float(np.max(np.abs(vals))) if n else 0.0)
    n_pos = int(np.sum(vals > tau))
    n_neg = int(np.sum(vals < -tau))
    return Spectrum(tuple(float(x) for x in vals), n_pos, n - n_pos - n_neg, n_neg, tau)


def spectrum(g: Graph, n_max: int = N_MAX) -> Spectrum:
    """Adjacency spectrum of ``g`` with its inertia."""
    if g.n > n_max:
        raise TooLarge(f"n={g.n} exceeds eigensolver limit {n_max}")
    return spectrum_from_values(symmetric_eigenvalues(g.adjacency_matrix()))


def exact_rank(g: Graph) -> int:
    """Rank of the adjacency matrix over the rationals (fraction-free Bareiss)."""
    rows = [[1 if g.has_edge(i, j) else 0 for j in range(g.n)] for i in range(g.n)]
    n = g.n
    rank = 0
    prev = 1
    col = 0
    while rank < n and col < n:
        piv = next((r for r in range(rank, n) if rows[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, n):
            row = rows[r]
            lead = row[col]
            for j in range(col + 1, n):
                row[j] = (pr[col] * row[j] - lead * pr[j]) // prev
            row[col] = 0
        prev = pr[col]
        rank += 1
        col += 1
    return rank


def inertia(g: Graph, n_max: int = N_MAX, s: Spectrum | None = None) -> tuple[int, int, int]:
    """Inertia ``(n_pos, n_zero, n_neg)``; exact-rank checked when ``n <= 64``."""
    if s is None:
        s = spectrum(g, n_max)
    if g.n <= EXACT_RANK_MAX_N:
        nullity = g.n - exact_rank(g)
        if nullity != s.n_zero:
            raise InertiaMismatch(
                f"eigenvalue count of zeros {s.n_zero} != exact nullity {nullity} (tau={s.tau:.3g})"
            )
    return s.inertia
