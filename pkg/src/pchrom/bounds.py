"""Spectral lower bounds on the chromatic number and the sup over p of f(p).

f(p) = 1 + H(p) is a valid lower bound for every p >= 0; p = 0, 2 and the
limit p -> infinity recover the inertia, Ando-Lin and Hoffman bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .eigen import N_MAX, Spectrum, spectrum
from .errors import BadParams, EmptyGraph
from .graphio import Graph
from .penergy import ratio_curve

INFINITY = math.inf
INF_MARGIN = 1e-12
# a refined point must beat the grid by more than rounding noise
REFINE_MARGIN = 1e-12
INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptimizerConfig:
    p_max: float = 200.0
    grid_points: int = 2048
    refine_iters: int = 80
    emit_curve: bool = False

    def __post_init__(self):
        if not self.p_max > 1:
            raise BadParams(f"p_max must exceed 1, got {self.p_max}")
        if self.grid_points < 64:
            raise BadParams(f"grid_points must be >= 64, got {self.grid_points}")
        if self.refine_iters < 0:
            raise BadParams("refine_iters must be >= 0")


@dataclass(frozen=True)
class BoundReport:
    hoffman: float
    inertia_bound: float
    ando_lin: float
    sum_bound: float
    f_best: float
    p_best: float  # math.inf when only the Hoffman limit attains the sup
    curve: Optional[tuple] = None  # ((p, f), ...) when requested


def _require_edges(s: Spectrum) -> None:
    if s.n_pos == 0 or s.n_neg == 0:
        raise EmptyGraph("graph has no edges")


def hoffman_bound(s: Spectrum) -> float:
    _require_edges(s)
    return 1.0 + s.lambda_max / -s.lambda_min


def inertia_bound(s: Spectrum) -> float:
    _require_edges(s)
    return 1.0 + max(s.n_pos / s.n_neg, s.n_neg / s.n_pos)


def ando_lin_bound(s: Spectrum) -> float:
    """1 + max ratio of the squared positive and negative eigenvalue sums."""
    _require_edges(s)
    e_pos = float(np.sum(s.positive() ** 2))
    e_neg = float(np.sum(s.negative_abs() ** 2))
    return 1.0 + max(e_pos / e_neg, e_neg / e_pos)


def sum_bound(s: Spectrum) -> float:
    """1 + max over m of (sum of m largest) / -(sum of m smallest eigenvalues).

    m stops at the first index where the negated tail sum is no longer
    positive.
    """
    _require_edges(s)
    vals = s.values
    n = len(vals)
    best = 0.0
    top = bottom = 0.0
    for m in range(1, n):
        top += vals[m - 1]
        bottom -= vals[n - m]
        if bottom <= s.tau:
            break
        best = max(best, top / bottom)
    return 1.0 + best


def f_bound(s: Spectrum, p: float) -> float:
    if p == INFINITY:
        return hoffman_bound(s)
    return 1.0 + float(ratio_curve(s, [p])[0])


def f_curve(s: Spectrum, ps) -> np.ndarray:
    """Vectorised f(p); shares the H(p) code path with :func:`f_bound`."""
    return 1.0 + ratio_curve(s, ps)


def optimizer_grid(cfg: OptimizerConfig) -> np.ndarray:
    """Finite sample points: 0, a geometric grid on (1e-3, 1), 1, a
    geometric grid on (1, p_max], and p = 2 so the Ando-Lin point is always
    a candidate."""
    below = cfg.grid_points // 2
    above = cfg.grid_points - below
    lo = np.geomspace(1e-3, 1.0, below + 1)[:-1]
    hi = np.geomspace(1.0, cfg.p_max, above + 1)[1:]
    return np.unique(np.concatenate(([0.0], lo, [1.0, 2.0], hi)))


def _golden_max(fn, a: float, b: float, iters: int) -> tuple[float, float]:
    """Golden-section search for a maximum on [a, b]; returns the best
    evaluated (x, fn(x))."""
    best_x, best_f = None, -math.inf
    c = b - INV_GOLDEN * (b - a)
    d = a + INV_GOLDEN * (b - a)
    fc, fd = fn(c), fn(d)
    for x, fx in ((c, fc), (d, fd)):
        if fx > best_f:
            best_x, best_f = x, fx
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_GOLDEN * (b - a)
            fc = fn(c)
            if fc > best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + INV_GOLDEN * (b - a)
            fd = fn(d)
            if fd > best_f:
                best_x, best_f = d, fd
    return best_x, best_f


def optimize_f(s: Spectrum, cfg: OptimizerConfig = OptimizerConfig()):
    """Approximate sup_p f(p).

    Returns ``(p_best, f_best, curve)``; ``curve`` is the tuple of sampled
    ``(p, f)`` pairs when ``cfg.emit_curve`` is set, else ``None``.
    """
    _require_edges(s)
    grid = optimizer_grid(cfg)
    vals = f_curve(s, grid)
    i = int(np.argmax(vals))
    p_best, f_best = float(grid[i]), float(vals[i])

    if cfg.refine_iters > 0:
        a = float(grid[max(i - 1, 0)])
        b = float(grid[min(i + 1, len(grid) - 1)])
        x, fx = _golden_max(lambda p: float(f_curve(s, [p])[0]), a, b, cfg.refine_iters)
        if fx > f_best + REFINE_MARGIN:
            p_best, f_best = x, fx

    hoff = hoffman_bound(s)
    if hoff > f_best + INF_MARGIN:
        p_best, f_best = INFINITY, hoff

    curve = None
    if cfg.emit_curve:
        curve = tuple((float(p), float(f)) for p, f in zip(grid, vals))
    return p_best, f_best, curve


def report_from_spectrum(s: Spectrum, cfg: OptimizerConfig = OptimizerConfig()) -> BoundReport:
    p_best, f_best, curve = optimize_f(s, cfg)
    return BoundReport(
        hoffman=hoffman_bound(s),
        inertia_bound=inertia_bound(s),
        ando_lin=ando_lin_bound(s),
        sum_bound=sum_bound(s),
        f_best=f_best,
        p_best=p_best,
        curve=curve,
    )


def bound_report(g: Graph, cfg: OptimizerConfig = OptimizerConfig(), n_max: int = N_MAX) -> BoundReport:
    return report_from_spectrum(spectrum(g, n_max), cfg)
