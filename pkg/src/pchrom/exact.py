"""Exact chromatic and clique numbers for small graphs (bitset branch and bound)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .bounds import BoundReport
from .errors import TooLarge
from .graphio import Graph

EXACT_MAX_N = 64


@dataclass(frozen=True)
class ExactInvariants:
    chi: int
    omega: int


def _check_size(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise TooLarge(f"n={g.n} exceeds exact-search limit {limit}")


def _color_sort(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy colour classes over ``cand``; returns vertices in class order
    with the running class number as an upper bound on clique size."""
    order, bounds = [], []
    remaining = cand
    color = 0
    while remaining:
        color += 1
        avail = remaining
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            remaining &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def clique_number(g: Graph, limit: int = EXACT_MAX_N) -> int:
    """Maximum clique size, pruning with greedy colouring bounds."""
    _check_size(g, limit)
    adj = g.neighbor_masks()
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        order, bounds = _color_sort(cand, adj)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            sub = cand & adj[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, (1 << g.n) - 1)
    return best


def _dsatur_pick(n, colors, adj, deg) -> tuple[int, int]:
    """Uncoloured vertex with max saturation, then max degree, then lowest index.
    Returns (vertex, bitmask of colours on its neighbours)."""
    best_v, best_key, best_mask = -1, None, 0
    for v in range(n):
        if colors[v] >= 0:
            continue
        mask = 0
        nb = adj[v]
        while nb:
            low = nb & -nb
            c = colors[low.bit_length() - 1]
            if c >= 0:
                mask |= 1 << c
            nb ^= low
        key = (bin(mask).count("1"), deg[v])
        if best_key is None or key > best_key:
            best_v, best_key, best_mask = v, key, mask
    return best_v, best_mask


def dsatur_coloring(g: Graph) -> list[int]:
    """Greedy DSATUR colouring (colours 0..k-1)."""
    adj = g.neighbor_masks()
    deg = g.degrees()
    colors = [-1] * g.n
    for _ in range(g.n):
        v, mask = _dsatur_pick(g.n, colors, adj, deg)
        c = 0
        while mask >> c & 1:
            c += 1
        colors[v] = c
    return colors


def chromatic_number(g: Graph, limit: int = EXACT_MAX_N) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    The search starts from the greedy DSATUR colouring as incumbent and stops
    as soon as it meets the clique lower bound.
    """
    _check_size(g, limit)
    if g.m == 0:
        return 1
    lower = clique_number(g, limit)
    best = max(dsatur_coloring(g)) + 1
    if best == lower:
        return best

    n = g.n
    adj = g.neighbor_masks()
    deg = g.degrees()
    colors = [-1] * n

    def search(colored: int, used: int) -> bool:
        # returns True once an optimal colouring has been certified
        nonlocal best
        if colored == n:
            best = used
            return best == lower
        v, mask = _dsatur_pick(n, colors, adj, deg)
        for c in range(used):
            if not mask >> c & 1:
                colors[v] = c
                if search(colored + 1, used):
                    return True
                colors[v] = -1
        if used + 1 < best:
            colors[v] = used
            if search(colored + 1, used + 1):
                return True
            colors[v] = -1
        return False

    search(0, 0)
    return best


def exact_invariants(g: Graph, limit: int = EXACT_MAX_N) -> ExactInvariants:
    return ExactInvariants(chi=chromatic_number(g, limit), omega=clique_number(g, limit))


def conclude_quantum(g: Graph, report: BoundReport, limit: int = EXACT_MAX_N) -> Optional[int]:
    """chi(G) if the best spectral bound exceeds chi - 1, which pins chi_q = chi.

    Returns ``None`` when the bound leaves a gap.
    """
    chi = chromatic_number(g, limit)
    if math.ceil(report.f_best - 1e-9) >= chi:
        return chi
    return None
