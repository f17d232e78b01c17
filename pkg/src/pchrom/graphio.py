"""Graph container, graph6 / edge-list codecs and named graph generators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadParams,
    Graph6Overflow,
    MalformedGraph6,
    ParseError,
    SelfLoop,
    UnknownName,
    UnsupportedFormat,
    VertexOutOfRange,
)

DEFAULT_MAX_N = 10**6


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` holds normalised pairs ``(u, v)`` with ``u < v``.  Instances are
    immutable and hashable.
    """

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 1:
            raise BadParams(f"graph needs at least one vertex, got n={self.n}")
        for u, v in self.edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) not normalised for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.add((u, v) if u < v else (v, u))
        return cls(n, frozenset(norm))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency_matrix(self, dtype=float) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=dtype)
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1
        return a

    def neighbor_masks(self) -> list[int]:
        """Adjacency as one integer bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def is_connected(self) -> bool:
        masks = self.neighbor_masks()
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --------------------------------------------------------------------------
# graph6
# --------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 1 << 36:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Overflow(f"n={n} too large for graph6")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of size bytes consumed)."""
    if not data:
        raise MalformedGraph6("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 36-bit size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise MalformedGraph6("truncated 18-bit size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(text: str, max_n: int = DEFAULT_MAX_N) -> Graph:
    """Decode one graph6 line.

    Pair order is column-major over the upper triangle:
    (0,1), (0,2), (1,2), (0,3), ...  Pad bits must be zero.
    """
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if line.startswith(":") or line.startswith(">>sparse6<<"):
        raise UnsupportedFormat("sparse6 input is not supported")
    if line.startswith("&") or line.startswith(">>digraph6<<"):
        raise UnsupportedFormat("digraph6 input is not supported")
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        raise MalformedGraph6("non-ASCII byte in graph6 string") from None
    bad = [b for b in data if not 63 <= b <= 126]
    if bad:
        raise MalformedGraph6(f"byte {bad[0]} outside [63, 126]")

    n, off = _decode_n(data)
    if n > max_n:
        raise Graph6Overflow(f"n={n} exceeds configured maximum {max_n}")
    if n < 1:
        raise MalformedGraph6("graph6 string encodes zero vertices")
    nbits = n * (n - 1) // 2
    body = data[off:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )

    edges = set()
    k = 0
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for byte in body:
        val = byte - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if k < nbits:
                i, j = next(pairs)
                if bit:
                    edges.add((i, j))
            elif bit:
                raise MalformedGraph6("nonzero padding bits")
            k += 1
    return Graph(n, frozenset(edges))


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding (shortest size field, zero padding)."""
    out = [_encode_n(g.n)]
    acc, nacc = 0, 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | ((i, j) in g.edges)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc, nacc = 0, 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


# --------------------------------------------------------------------------
# edge lists
# --------------------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """Parse ``n`` on the first significant line, then one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored; duplicate and reversed edges
    collapse to one undirected edge.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("edge list is empty")

    lineno, head = rows[0]
    if len(head) != 1:
        raise ParseError(f"line {lineno}: expected vertex count, got {' '.join(head)!r}")
    try:
        n = int(head[0])
    except ValueError:
        raise ParseError(f"line {lineno}: bad vertex count {head[0]!r}") from None
    if n < 1:
        raise ParseError(f"line {lineno}: vertex count must be positive")

    edges = set()
    for lineno, tok in rows[1:]:
        if len(tok) != 2:
            raise ParseError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex") from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"line {lineno}: vertex outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"line {lineno}: self-loop at {u}")
        edges.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(edges))


def write_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# named graphs
# --------------------------------------------------------------------------

# Planar, 12 vertices, 29 edges, degrees 4,4,5^10.  The published data is a
# spectrum only; this labelling reproduces it (characteristic polynomial
# x^12 - 29x^10 - 36x^9 + 242x^8 + ... + 300) with omega = 3, chi = 4.
TILLEY_EDGES = (
    (0, 1), (0, 2), (0, 3), (0, 8), (0, 10), (1, 3), (1, 4), (1, 8), (1, 9),
    (2, 5), (2, 7), (2, 8), (2, 10), (3, 4), (3, 6), (3, 10), (4, 6), (4, 9),
    (4, 11), (5, 7), (5, 8), (5, 11), (6, 7), (6, 10), (6, 11), (7, 10),
    (7, 11), (8, 9), (9, 11),
)

# K4 on 0..3, vertex 4 joined to 2, 3, 5, 6.
H2_EDGES = ((0, 2), (2, 3), (1, 3), (0, 1), (0, 3), (1, 2), (2, 4), (3, 4), (4, 5), (4, 6))


def _need(name: str, params: Sequence[int], count: int) -> None:
    if len(params) != count:
        raise BadParams(f"{name} takes {count} parameter(s), got {len(params)}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise BadParams("complete_multipartite needs positive part sizes")
    label, start = [], 0
    for idx, size in enumerate(parts):
        label.extend([idx] * size)
        start += size
    return Graph.from_edges(
        start, ((u, v) for u, v in itertools.combinations(range(start), 2) if label[u] != label[v])
    )


def kneser(n: int, k: int) -> Graph:
    if k < 1 or n < 2 * k:
        raise BadParams(f"kneser needs 1 <= k and n >= 2k, got n={n}, k={k}")
    subsets = [frozenset(c) for c in itertools.combinations(range(n), k)]
    return Graph.from_edges(
        len(subsets),
        ((i, j) for i, j in itertools.combinations(range(len(subsets)), 2)
         if not subsets[i] & subsets[j]),
    )


def _gq_2_4() -> Graph:
    # Points of the elliptic quadric Q-(5,2); collinear iff orthogonal under
    # the polar bilinear form.
    def q(x):
        return (x[0] * x[1] + x[2] * x[3] + x[4] * x[4] + x[4] * x[5] + x[5] * x[5]) % 2

    pts = [x for x in itertools.product((0, 1), repeat=6) if any(x) and q(x) == 0]

    def polar(x, y):
        s = tuple((a + b) % 2 for a, b in zip(x, y))
        return (q(s) - q(x) - q(y)) % 2

    return Graph.from_edges(
        len(pts),
        ((i, j) for i, j in itertools.combinations(range(len(pts)), 2) if polar(pts[i], pts[j]) == 0),
    )


def _rook(k: int) -> Graph:
    cells = [(r, c) for r in range(k) for c in range(k)]
    return Graph.from_edges(
        len(cells),
        ((i, j) for i, j in itertools.combinations(range(len(cells)), 2)
         if cells[i][0] == cells[j][0] or cells[i][1] == cells[j][1]),
    )


NAMED_GRAPHS = (
    "complete", "cycle", "star", "path", "turan", "petersen", "complete_multipartite",
    "kneser", "tilley", "h2", "gq_2_1", "gq_2_4",
)


def named_graph(name: str, params: Sequence[int] = ()) -> Graph:
    """Build a standard graph by family name.

    ``turan`` takes ``[part_size, parts]``; ``star`` takes the total vertex
    count; ``complete_multipartite`` takes the part sizes.
    """
    params = [int(p) for p in params]
    if name == "complete":
        _need(name, params, 1)
        (n,) = params
        if n < 1:
            raise BadParams("complete needs n >= 1")
        return Graph.from_edges(n, itertools.combinations(range(n), 2))
    if name == "cycle":
        _need(name, params, 1)
        (n,) = params
        if n < 3:
            raise BadParams("cycle needs n >= 3")
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if name == "path":
        _need(name, params, 1)
        (n,) = params
        if n < 1:
            raise BadParams("path needs n >= 1")
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if name == "star":
        _need(name, params, 1)
        (n,) = params
        if n < 2:
            raise BadParams("star needs n >= 2")
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))
    if name == "turan":
        _need(name, params, 2)
        size, parts = params
        if size < 1 or parts < 1:
            raise BadParams("turan needs positive part size and part count")
        return complete_multipartite([size] * parts)
    if name == "complete_multipartite":
        return complete_multipartite(params)
    if name == "kneser":
        _need(name, params, 2)
        return kneser(*params)
    if name == "petersen":
        _need(name, params, 0)
        return kneser(5, 2)
    if name == "tilley":
        _need(name, params, 0)
        return Graph.from_edges(12, TILLEY_EDGES)
    if name == "h2":
        _need(name, params, 0)
        return Graph.from_edges(7, H2_EDGES)
    if name == "gq_2_1":
        _need(name, params, 0)
        return _rook(3)
    if name == "gq_2_4":
        _need(name, params, 0)
        return _gq_2_4()
    raise UnknownName(f"unknown graph family {name!r}; choose from {', '.join(NAMED_GRAPHS)}")


def parse_named(spec: str) -> Graph:
    """Parse CLI syntax ``name`` or ``name:p1,p2,...``."""
    name, _, rest = spec.partition(":")
    params = []
    if rest.strip():
        try:
            params = [int(tok) for tok in rest.split(",")]
        except ValueError:
            raise BadParams(f"non-integer parameter in {spec!r}") from None
    return named_graph(name.strip(), params)
