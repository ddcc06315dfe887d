"""Bitset-backed simple graphs: graph6 I/O, complement, BFS metrics, isomorphism.

A graph lives on vertices 0..n-1 (n <= 64) with one machine-word neighbour
bitmask per vertex, so complements, BFS sweeps and connectivity tests are a
handful of integer operations.  All functions are pure and graphs are
immutable, so values can be shared freely between worker processes.
"""

from dataclasses import dataclass
from itertools import permutations

import numpy as np

MAX_VERTICES = 64
ISO_MAX_VERTICES = 10


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class DisconnectedGraph(ValueError):
    """The operation needs a connected graph."""


class TooLarge(ValueError):
    """Graph exceeds the size cap of the requested operation."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as per-vertex neighbour bitsets.

    Invariants: adjacency is symmetric and irreflexive, and every bitset
    uses only bits 0..n-1.  `from_edges` and the graph6 decoder enforce
    both; code constructing `Graph` directly must do the same.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency tuple length differs from n")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2


def _bits(mask: int):
    """Yield the set bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an edge list, rejecting loops and out-of-range labels."""
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) outside 0..{n - 1}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def g6_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: column-major upper triangle."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def from_edge_mask(n: int, mask: int) -> Graph:
    """Graph from an edge bitmask laid out in g6_pairs order."""
    adj = [0] * n
    for e, (i, j) in enumerate(g6_pairs(n)):
        if (mask >> e) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def to_edge_mask(g: Graph) -> int:
    """Edge bitmask of g in g6_pairs order."""
    mask = 0
    for e, (i, j) in enumerate(g6_pairs(g.n)):
        if g.has_edge(i, j):
            mask |= 1 << e
    return mask


# --- graph6 ----------------------------------------------------------------


def from_graph6(text: str) -> Graph:
    """Decode one graph6 record (n <= 64)."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 record")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"character outside graph6 alphabet in {s!r}")
    if data[0] < 63:
        n, body = data[0], data[1:]
    else:
        if len(data) >= 2 and data[1] == 63:
            raise Graph6Error("8-byte graph6 order field: n > 64 unsupported")
        if len(data) < 4:
            raise Graph6Error("truncated graph6 order field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data characters, got {len(body)}")
    adj = [0] * n
    k = 0
    for i, j in g6_pairs(n):
        if (body[k // 6] >> (5 - k % 6)) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        k += 1
    # trailing padding bits must be zero
    while k < 6 * len(body):
        if (body[k // 6] >> (5 - k % 6)) & 1:
            raise Graph6Error("nonzero trailing bits in graph6 record")
        k += 1
    return Graph(n, tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode the labeled graph in graph6 (not isomorphism-canonical)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + chr((n >> 12) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    bits = 0
    k = 0
    out = []
    for i, j in g6_pairs(n):
        bits = (bits << 1) | ((g.adj[i] >> j) & 1)
        k += 1
        if k % 6 == 0:
            out.append(chr(bits + 63))
            bits = 0
    if k % 6:
        out.append(chr((bits << (6 - k % 6)) + 63))
    return head + "".join(out)


# --- basic operations -------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~(g.adj[v] | (1 << v))) for v in range(g.n)))


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def distance_matrix(g: Graph) -> np.ndarray:
    """BFS hop distances as an n x n integer matrix."""
    n = g.n
    full = (1 << n) - 1
    out = np.zeros((n, n), dtype=np.int64)
    for s in range(n):
        seen = frontier = 1 << s
        depth = 0
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            depth += 1
            for v in _bits(frontier):
                out[s, v] = depth
        if seen != full:
            raise DisconnectedGraph(f"vertex {s} does not reach all vertices")
    return out


def diameter(g: Graph) -> int:
    return int(distance_matrix(g).max())


def adjacency_matrix(g: Graph) -> np.ndarray:
    n = g.n
    out = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in _bits(g.adj[u]):
            out[u, v] = 1
    return out


# --- isomorphism ------------------------------------------------------------


def _refined_colors(g: Graph) -> list[int]:
    """Iterated degree refinement (1-WL); stable color per vertex."""
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sig = [
            (colors[v], tuple(sorted(colors[u] for u in _bits(g.adj[v]))))
            for v in range(g.n)
        ]
        relabel = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [relabel[s] for s in sig]
        if new == colors:
            return colors
        colors = new


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking isomorphism test with color-class pruning (n <= 10)."""
    if g.n != h.n:
        return False
    if g.n > ISO_MAX_VERTICES:
        raise TooLarge(f"isomorphism supported up to n={ISO_MAX_VERTICES}")
    if g.edge_count() != h.edge_count():
        return False
    cg, ch = _refined_colors(g), _refined_colors(h)
    if sorted(cg) != sorted(ch):
        return False
    n = g.n
    # map g-vertices in an order that fixes small color classes first
    class_size = {c: cg.count(c) for c in set(cg)}
    order = sorted(range(n), key=lambda v: (class_size[cg[v]], cg[v], v))
    candidates = {v: [w for w in range(n) if ch[w] == cg[v]] for v in order}

    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for vp in order[:k]:
                if g.has_edge(v, vp) != h.has_edge(w, mapping[vp]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
                mapping[v] = -1
        return False

    return extend(0)


def relabel(g: Graph, perm) -> Graph:
    """Image of g under the vertex bijection v -> perm[v]."""
    return from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def all_relabelings(g: Graph):
    """Every labeled copy of g (test helper; factorial in n)."""
    for perm in permutations(range(g.n)):
        yield relabel(g, perm)
