"""Immutable simple graphs backed by integer bitmask neighbourhood rows.

Vertices are the integers ``0..n-1``. Every re-indexing operation
(join, deletion, leaf attachment) has a fixed documented rule so that
vertex numbers stay reproducible across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


def _bits_of(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices of a graph of order ``width``, stored as a bitmask."""

    bits: int
    width: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise GraphError(f"bits set outside 0..{self.width - 1}")

    @classmethod
    def of(cls, vertices: Iterable[int], width: int) -> VertexSet:
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < width:
                raise GraphError(f"vertex {v} out of range for width {width}")
        return cls(_bits_of(vertices), width)

    @classmethod
    def empty(cls, width: int) -> VertexSet:
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> VertexSet:
        return cls((1 << width) - 1, width)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: VertexSet) -> None:
        if self.width != other.width:
            raise GraphError(f"width mismatch: {self.width} vs {other.width}")

    def __or__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits | other.bits, self.width)

    def __and__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & other.bits, self.width)

    def __xor__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits ^ other.bits, self.width)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._check(other)
        return VertexSet(self.bits & ~other.bits, self.width)

    def __le__(self, other: VertexSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> VertexSet:
        return VertexSet(~self.bits & ((1 << self.width) - 1), self.width)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()}, width={self.width})"


def as_bits(vertices: VertexSet | Iterable[int] | int, n: int) -> int:
    """Normalise a vertex collection to a bitmask over ``0..n-1``."""
    if isinstance(vertices, VertexSet):
        if vertices.width != n:
            raise GraphError(f"vertex set of width {vertices.width} used on order {n}")
        return vertices.bits
    if isinstance(vertices, int):
        bits = vertices
    else:
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range for order {n}")
        bits = _bits_of(vertices)
    if bits < 0 or bits >> n:
        raise GraphError(f"vertex set not contained in 0..{n - 1}")
    return bits


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of the open neighbourhood of ``v``;
    ``closed[v]`` adds ``v`` itself.  Instances are immutable and hashable.
    """

    __slots__ = ("n", "adj", "closed", "_hash")

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise GraphError("adjacency row count must equal n")
        limit = 1 << n
        for v, row in enumerate(adj):
            if row < 0 or row >= limit:
                raise GraphError(f"row {v} has bits outside 0..{n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "closed", tuple(row | 1 << v for v, row in enumerate(adj)))
        object.__setattr__(self, "_hash", hash((n, adj)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def all_bits(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph of order ``n``; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def _check_vertex(G: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise GraphError(f"vertex {v} out of range for order {G.n}")


def neighborhoods(G: Graph, v: int) -> tuple[VertexSet, VertexSet]:
    """Return the open and closed neighbourhoods of ``v``."""
    _check_vertex(G, v)
    return VertexSet(G.adj[v], G.n), VertexSet(G.closed[v], G.n)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= G.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == G.all_bits


def girth(G: Graph) -> int | None:
    """Length of a shortest cycle, or ``None`` when the graph is acyclic."""
    best = None
    for root in range(G.n):
        dist = [-1] * G.n
        parent = [-1] * G.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] + 1 >= best:
                break
            for w in iter_bits(G.adj[u]):
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def leaves(G: Graph) -> VertexSet:
    return VertexSet(_bits_of(v for v in range(G.n) if G.adj[v].bit_count() == 1), G.n)


def supports(G: Graph) -> VertexSet:
    bits = 0
    for v in iter_bits(leaves(G).bits):
        bits |= G.adj[v]
    return VertexSet(bits, G.n)


def closed_twin_pairs(G: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if G.closed[u] == G.closed[v]]


def open_twin_pairs(G: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if G.adj[u] == G.adj[v]]


def is_identifiable(G: Graph) -> bool:
    """True when no two vertices are closed twins."""
    return len(set(G.closed)) == G.n


def is_twin_free(G: Graph) -> bool:
    return is_identifiable(G) and len(set(G.adj)) == G.n


def is_tree(G: Graph) -> bool:
    return G.n >= 1 and G.num_edges() == G.n - 1 and is_connected(G)


def min_degree(G: Graph) -> int:
    return min(G.degrees(), default=0)


@dataclass(frozen=True)
class StructuralSummary:
    connected: bool
    girth: int | None
    leaves: VertexSet
    supports: VertexSet
    leaf_count: int
    support_count: int
    closed_twin_pairs: tuple[tuple[int, int], ...]
    open_twin_pairs: tuple[tuple[int, int], ...]
    identifiable: bool
    twin_free: bool


def structural_summary(G: Graph) -> StructuralSummary:
    L = leaves(G)
    S = supports(G)
    closed = tuple(closed_twin_pairs(G))
    opened = tuple(open_twin_pairs(G))
    return StructuralSummary(
        connected=is_connected(G),
        girth=girth(G),
        leaves=L,
        supports=S,
        leaf_count=len(L),
        support_count=len(S),
        closed_twin_pairs=closed,
        open_twin_pairs=opened,
        identifiable=not closed,
        twin_free=not closed and not opened,
    )


def complement(G: Graph) -> Graph:
    full = G.all_bits
    return Graph(G.n, (full & ~G.closed[v] for v in range(G.n)))


def disjoint_union(G: Graph, H: Graph) -> Graph:
    """Place ``H`` after ``G``: vertex ``v`` of ``H`` becomes ``G.n + v``."""
    return Graph(G.n + H.n, list(G.adj) + [row << G.n for row in H.adj])


def complete_join(G: Graph, H: Graph) -> Graph:
    """Disjoint union of ``G`` and ``H`` (``H`` re-indexed after ``G``) plus all cross edges."""
    g_bits = G.all_bits
    h_bits = H.all_bits << G.n
    adj = [row | h_bits for row in G.adj] + [(row << G.n) | g_bits for row in H.adj]
    return Graph(G.n + H.n, adj)


def attach_leaves(G: Graph, targets: VertexSet | Iterable[int]) -> Graph:
    """Attach one new pendant vertex to each target, numbered ``n, n+1, ...`` in target order."""
    bits = as_bits(targets, G.n)
    adj = list(G.adj)
    for t in iter_bits(bits):
        leaf = len(adj)
        adj[t] |= 1 << leaf
        adj.append(1 << t)
    return Graph(len(adj), adj)


def induced_delete(G: Graph, removed: VertexSet | Iterable[int]) -> Graph:
    """Induced subgraph on the kept vertices, re-indexed in increasing order."""
    bits = as_bits(removed, G.n)
    keep = [v for v in range(G.n) if not bits >> v & 1]
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        row = 0
        for u in iter_bits(G.adj[v] & ~bits):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(keep), adj)


def induced_subgraph(G: Graph, kept: Iterable[int]) -> Graph:
    kept_bits = as_bits(kept, G.n)
    return induced_delete(G, G.all_bits & ~kept_bits)


def relabel(G: Graph, perm: list[int]) -> Graph:
    """Return the graph with vertex ``v`` renamed ``perm[v]``."""
    adj = [0] * G.n
    for v in range(G.n):
        row = 0
        for u in iter_bits(G.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(G.n, adj)
