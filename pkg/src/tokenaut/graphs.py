"""Dense simple-graph representation and standard constructions.

Vertices are always 0..n-1. Adjacency is stored as one Python-int bitmask
per vertex, which keeps neighbourhood intersections cheap in the search
inner loops. Graphs are immutable, hashable, and loop-free; every function
here is pure.

Cartesian products use a mixed-radix vertex encoding with the first factor
most significant, so a product vertex is identified with its coordinate
tuple via mixed_radix_encode / mixed_radix_decode. Distances use the
per-graph sentinel value n (one past the largest possible distance) for
unreachable pairs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on 0..n-1 with bitmask adjacency rows."""

    n: int
    adj: tuple[int, ...]
    label: str | None = None

    def __post_init__(self):
        assert self.n >= 1, "graph needs at least one vertex"
        assert len(self.adj) == self.n, "one adjacency row per vertex"
        if __debug__:
            full = (1 << self.n) - 1
            for u, row in enumerate(self.adj):
                assert row & ~full == 0, "adjacency bit out of range"
                assert not (row >> u) & 1, "loops are not allowed"
                for v in _bits(row):
                    assert (self.adj[v] >> u) & 1, "adjacency must be symmetric"

    def __repr__(self):
        name = self.label or "Graph"
        return f"<{name}: n={self.n}, m={self.edge_count()}>"

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def relabel(self, images: Sequence[int]) -> "Graph":
        """Graph with vertex u renamed to images[u] (a bijection on 0..n-1)."""
        assert sorted(images) == list(range(self.n)), "relabeling must be a bijection"
        adj = [0] * self.n
        for u, row in enumerate(self.adj):
            m = 0
            for v in _bits(row):
                m |= 1 << images[v]
            adj[images[u]] = m
        return Graph(self.n, tuple(adj), self.label)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; new vertex i is old vertices[i]."""
        index = {v: i for i, v in enumerate(vertices)}
        assert len(index) == len(vertices), "duplicate vertex in induced set"
        adj = [0] * len(vertices)
        for i, v in enumerate(vertices):
            m = 0
            for w in _bits(self.adj[v]):
                j = index.get(w)
                if j is not None:
                    m |= 1 << j
            adj[i] = m
        return Graph(len(vertices), tuple(adj))

    def is_connected(self) -> bool:
        seen = 1
        frontier = [0]
        while frontier:
            nxt = 0
            for u in frontier:
                nxt |= self.adj[u]
            nxt &= ~seen
            seen |= nxt
            frontier = list(_bits(nxt))
        return seen == (1 << self.n) - 1


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), label)


@dataclass(frozen=True)
class BipartiteSpec:
    """Complete bipartite instance K_{m,n} with the fixed vertex convention
    X = {0..m-1} on the small side and Y = {m..m+n-1} on the large side."""

    m: int
    n: int

    def __post_init__(self):
        if not (1 <= self.m <= self.n):
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")

    @property
    def order(self) -> int:
        return self.m + self.n

    @property
    def x_vertices(self) -> range:
        return range(self.m)

    @property
    def y_vertices(self) -> range:
        return range(self.m, self.m + self.n)

    def graph(self) -> Graph:
        return complete_bipartite(self.m, self.n)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << u) for u in range(n)), f"K{n}")


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite needs m, n >= 1")
    x_mask = (1 << m) - 1
    y_mask = ((1 << (m + n)) - 1) ^ x_mask
    adj = tuple(y_mask if u < m else x_mask for u in range(m + n))
    return Graph(m + n, adj, f"K{m},{n}")


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return graph_from_edges(n, edges, f"C{n}")


def star_graph(n: int) -> Graph:
    """Star with center 0 and n leaves; identical to K_{1,n}."""
    if n < 1:
        raise ValueError("star_graph needs n >= 1 leaves")
    return Graph(n + 1, complete_bipartite(1, n).adj, f"K1,{n}")


def mixed_radix_encode(coords: Sequence[int], sizes: Sequence[int]) -> int:
    """Encode a coordinate tuple, first factor most significant."""
    assert len(coords) == len(sizes)
    code = 0
    for c, s in zip(coords, sizes):
        assert 0 <= c < s
        code = code * s + c
    return code


def mixed_radix_decode(code: int, sizes: Sequence[int]) -> tuple[int, ...]:
    coords = [0] * len(sizes)
    for i in range(len(sizes) - 1, -1, -1):
        coords[i] = code % sizes[i]
        code //= sizes[i]
    assert code == 0, "code out of range"
    return tuple(coords)


def cartesian_product(factors: Sequence[Graph]) -> Graph:
    """Cartesian product; vertices are mixed-radix codes of coordinate tuples.

    Two product vertices are adjacent iff they agree in all coordinates but
    one, and differ by an edge of that factor.
    """
    if len(factors) < 1:
        raise ValueError("cartesian_product needs at least one factor")
    sizes = [g.n for g in factors]
    total = 1
    for s in sizes:
        total *= s
    strides = [1] * len(sizes)
    for i in range(len(sizes) - 2, -1, -1):
        strides[i] = strides[i + 1] * sizes[i + 1]
    adj = [0] * total
    for code in range(total):
        coords = mixed_radix_decode(code, sizes)
        m = 0
        for i, g in enumerate(factors):
            for w in _bits(g.adj[coords[i]]):
                m |= 1 << (code + (w - coords[i]) * strides[i])
        adj[code] = m
    label = " x ".join(g.label or "G" for g in factors)
    return Graph(total, tuple(adj), label)


def hypercube(r: int) -> Graph:
    """r-dimensional hypercube as the r-fold product of K_2.

    Vertex codes read as r-bit strings, coordinate 0 most significant.
    """
    if r < 1:
        raise ValueError("hypercube needs r >= 1")
    g = cartesian_product([complete_graph(2)] * r)
    return Graph(g.n, g.adj, f"Q{r}")


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs hop distances; unreachable pairs get the sentinel value n."""
    out = []
    for src in range(g.n):
        dist = [g.n] * g.n
        dist[src] = 0
        q = deque([src])
        while q:
            u = q.popleft()
            du = dist[u]
            for v in _bits(g.adj[u]):
                if dist[v] == g.n:
                    dist[v] = du + 1
                    q.append(v)
        out.append(dist)
    return out


def format_edge_list(g: Graph) -> str:
    """Serialize as the edge-list text format: 'n <N>' then one 'u v' per edge."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format; '#' starts a comment line."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <N>', got {raw!r}")
            n = int(parts[1])
            if n < 1:
                raise ValueError(f"line {lineno}: vertex count must be >= 1")
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: non-integer vertex in {raw!r}") from exc
        edges.append((u, v))
    if n is None:
        raise ValueError("missing 'n <N>' header line")
    return graph_from_edges(n, edges)
