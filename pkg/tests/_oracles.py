"""Independent oracles and corpora shared by the test modules.

Nothing here calls into the code paths it is used to check.
"""

import functools
import itertools
import math
import random

import networkx as nx
import numpy as np

from pchrom.graphio import Graph


def from_nx(h: nx.Graph) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(h.number_of_nodes(), ((mapping[u], mapping[v]) for u, v in h.edges()))


@functools.lru_cache(maxsize=None)
def atlas_graphs() -> tuple:
    """All graphs with 1..7 vertices up to isomorphism (1252 of them)."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g()[1:])


@functools.lru_cache(maxsize=None)
def connected_graphs(max_n: int = 7) -> tuple:
    """All connected graphs with 2..max_n vertices (max_n <= 7)."""
    return tuple(g for g in atlas_graphs() if 2 <= g.n <= max_n and g.is_connected())


@functools.lru_cache(maxsize=None)
def graphs_on_8() -> tuple:
    """All 12346 graphs on 8 vertices: one-vertex extensions of every
    7-vertex graph, deduplicated by nauty canonical certificate."""
    import pynauty

    seen = {}
    for g in atlas_graphs():
        if g.n != 7:
            continue
        for mask in range(128):
            edges = set(g.edges) | {(i, 7) for i in range(7) if mask >> i & 1}
            adj = {v: [] for v in range(8)}
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            cert = pynauty.certificate(pynauty.Graph(8, adjacency_dict=adj))
            if cert not in seen:
                seen[cert] = Graph.from_edges(8, edges)
    return tuple(seen.values())


def all_labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def brute_chromatic(g: Graph) -> int:
    """chi via dynamic programming over vertex subsets: chi(S) = 1 + min over
    independent I containing the lowest vertex of S of chi(S \\ I)."""
    n = g.n
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    full = (1 << n) - 1
    independent = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        independent[s] = independent[rest] and not (adj[low] & rest)
    chi = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        rest = s & ~low
        best = n
        sub = rest
        while True:
            cand = sub | low
            if independent[cand]:
                best = min(best, 1 + chi[s & ~cand])
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best
    return chi[full]


def brute_clique(g: Graph) -> int:
    best = 1
    for k in range(2, g.n + 1):
        if any(all(g.has_edge(u, v) for u, v in itertools.combinations(c, 2))
               for c in itertools.combinations(range(g.n), k)):
            best = k
        else:
            break
    return best


def charpoly_roots_exact(g: Graph):
    """Characteristic polynomial of the adjacency matrix via sympy."""
    import sympy

    lam = sympy.Symbol("x")
    mat = sympy.Matrix(g.n, g.n, lambda i, j: 1 if g.has_edge(i, j) else 0)
    return sympy.Poly(mat.charpoly(lam).as_expr(), lam), lam


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        g = Graph(n, frozenset(e for e in pairs if rng.random() < p))
        if g.is_connected():
            return g


def direct_f(values, p: float) -> float:
    """f(p) straight from the definition with plain float powers (test only;
    also valid for p < 0 when there are no zero eigenvalues)."""
    v = np.asarray(values, dtype=float)
    pos = v[v > 1e-9]
    neg = -v[v < -1e-9]
    if p == 0:
        a, b = float(len(pos)), float(len(neg))
    else:
        a, b = float(np.sum(pos ** p)), float(np.sum(neg ** p))
    return 1.0 + max(a / b, b / a) ** (1.0 / abs(p - 1.0))


def finite_difference_alpha(values, h: float = 1e-5):
    """d/dp log E_p^+- at p = 1 by central differences."""
    v = np.asarray(values, dtype=float)
    pos = v[v > 1e-9]
    neg = -v[v < -1e-9]

    def d(x):
        return (math.log(np.sum(x ** (1 + h))) - math.log(np.sum(x ** (1 - h)))) / (2 * h)

    return d(pos), d(neg)


def rational_rank(g: Graph) -> int:
    """Rank of the adjacency matrix by Gauss-Jordan over Fractions."""
    from fractions import Fraction

    rows = [[Fraction(int(g.has_edge(i, j))) for j in range(g.n)] for i in range(g.n)]
    rank = 0
    for col in range(g.n):
        piv = next((r for r in range(rank, g.n) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(g.n):
            if r != rank and rows[r][col] != 0:
                k = rows[r][col] / rows[rank][col]
                rows[r] = [a - k * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank
