"""Deterministic constructors for the named graph families and gadgets.

Vertex numbering is fixed per constructor (documented on each function) so
that example codes can be quoted by index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, GraphError, attach_leaves, build_graph, complete_join


def a_k(k: int) -> Graph:
    """Complement of the half-graph: ``x_1..x_2k`` as ``0..2k-1``, ``x_i ~ x_j`` iff ``|i-j| <= k-1``."""
    if k < 0:
        raise GraphError("k must be non-negative")
    n = 2 * k
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if j - i <= k - 1])


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    if n < 1:
        raise GraphError("star needs n >= 1")
    return build_graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return build_graph(n, [])


def basic(kind: str, n: int) -> Graph:
    builders = {"path": path, "cycle": cycle, "star": star, "complete": complete}
    if kind not in builders:
        raise GraphError(f"unknown basic family {kind!r}")
    return builders[kind](n)


def complete_minus_matching(n: int) -> Graph:
    """``K_n`` without the edges ``{0,1}, {2,3}, ...`` (``floor(n/2)`` of them)."""
    if n < 1:
        raise GraphError("n must be >= 1")
    return build_graph(n, [(i, j) for i, j in combinations(range(n), 2) if not (i % 2 == 0 and j == i + 1)])


def family_A(parts: Sequence[int], with_universal: bool = False) -> Graph:
    """Complete join of ``A_p`` for each part ``p``, blocks in the given order.

    With ``with_universal`` one further vertex, adjacent to everything, is
    appended last.
    """
    G = empty(0)
    for p in parts:
        if p < 1:
            raise GraphError("parts must be >= 1")
        G = complete_join(G, a_k(p))
    if with_universal:
        G = complete_join(G, empty(1))
    return G


def extremal_tid(parts: Sequence[int], with_universal: bool, m: int) -> Graph:
    """``family_A(parts, with_universal)`` joined to ``K_m``, plus a private leaf on each clique vertex.

    Numbering: the ``family_A`` block, then the clique, then the leaves in
    clique order.
    """
    if m < 1:
        raise GraphError("m must be >= 1")
    base = family_A(parts, with_universal)
    G = complete_join(base, complete(m))
    return attach_leaves(G, range(base.n, base.n + m))


def corona(base: Graph, t: int) -> Graph:
    """Attach a private path on ``t`` vertices to every base vertex by one end.

    Base vertices keep their numbers; the path hung on base vertex ``v``
    occupies ``n + v*t .. n + v*t + t - 1``, starting at the end adjacent to ``v``.
    """
    if t not in (1, 2, 3):
        raise GraphError("corona supports t in {1, 2, 3}")
    if base.n < 1:
        raise GraphError("corona needs a non-empty base graph")
    n = base.n
    edges = base.edges()
    for v in range(n):
        first = n + v * t
        edges.append((v, first))
        edges.extend((first + i, first + i + 1) for i in range(t - 1))
    return build_graph(n * (t + 1), edges)


def subdivided_star(k: int) -> Graph:
    """Star with one pendant edge and ``k`` pendant paths of three vertices.

    Centre 0, pendant leaf 1, and branch ``i`` is ``2+3i - 3+3i - 4+3i`` with
    ``2+3i`` adjacent to the centre.  Order ``3k + 2``.
    """
    if k < 1:
        raise GraphError("k must be >= 1")
    edges = [(0, 1)]
    for i in range(k):
        a = 2 + 3 * i
        edges += [(0, a), (a, a + 1), (a + 1, a + 2)]
    return build_graph(3 * k + 2, edges)


def _subsets_by_mask(k: int, min_size: int, max_size: int) -> list[int]:
    return [mask for mask in range(1, 1 << k) if min_size <= mask.bit_count() <= max_size]


def ld_gap(k: int) -> Graph:
    """Gadget separating location-domination from total dominating identification.

    ``a_i = i`` and its leaf ``b_i = k + i``; then for every subset ``S`` of
    ``{a_i}`` with ``|S| >= 2``, in increasing bitmask order, the four vertices
    ``x_S, x'_S, y_S, z_S``.
    """
    if k < 2:
        raise GraphError("k must be >= 2")
    edges = [(i, k + i) for i in range(k)]
    nxt = 2 * k
    for mask in _subsets_by_mask(k, 2, k):
        x, xp, y, z = nxt, nxt + 1, nxt + 2, nxt + 3
        nxt += 4
        for i in range(k):
            if mask >> i & 1:
                edges += [(x, i), (xp, i)]
        edges += [(x, xp), (x, y), (z, x), (z, xp), (z, y)]
    return build_graph(nxt, edges)


def sid_gap(k: int) -> Graph:
    """Gadget with small total dominating identifying codes but no small self-identifying code.

    ``x_i`` (1-based) is vertex ``i-1``.  One outer vertex per subset ``X'``
    of ``X`` with ``1 <= |X'| <= k-2``, numbered from ``k`` in increasing
    bitmask order.  Outer vertices of complementary subsets are adjacent;
    the singleton of ``x_{2i+1}`` is adjacent to the singleton of ``x_{2i+2}``
    (0-based: ``{2i}`` with ``{2i+1}``).  The matching
    ``x_1x_k, x_2x_3, x_4x_5, ..., x_{k-2}x_{k-1}`` is removed from the clique.
    """
    if k < 4 or k % 2:
        raise GraphError("k must be an even integer >= 4")
    full = (1 << k) - 1
    masks = _subsets_by_mask(k, 1, k - 2)
    index = {mask: k + i for i, mask in enumerate(masks)}
    removed = {(0, k - 1)} | {(j, j + 1) for j in range(1, k - 2, 2)}
    edges = [(i, j) for i, j in combinations(range(k), 2) if (i, j) not in removed]
    for mask, u in index.items():
        edges += [(u, i) for i in range(k) if mask >> i & 1]
        if mask.bit_count() >= 2:
            v = index[full & ~mask]
            if u < v:
                edges.append((u, v))
    for i in range(k // 2):
        edges.append((index[1 << 2 * i], index[1 << (2 * i + 1)]))
    return build_graph(k + len(masks), edges)


def eid_gap(k: int) -> Graph:
    """Gadget with small total dominating identifying codes but no small error-correcting one.

    The path ``X`` is ``0..k-1``.  One vertex per non-empty subset ``X'`` of
    ``X`` that is not the trace ``N[x_i] & X`` of a path vertex, numbered from
    ``k`` in increasing bitmask order; the vertex of ``X' = X`` is also
    adjacent to every vertex whose subset is a singleton.
    """
    if k < 4:
        raise GraphError("k must be >= 4")
    full = (1 << k) - 1
    traces = {((1 << i) | (1 << i - 1 if i else 0) | (1 << i + 1 if i + 1 < k else 0)) for i in range(k)}
    masks = [mask for mask in range(1, full + 1) if mask not in traces]
    index = {mask: k + i for i, mask in enumerate(masks)}
    edges = [(i, i + 1) for i in range(k - 1)]
    for mask, u in index.items():
        edges += [(u, i) for i in range(k) if mask >> i & 1]
    w = index[full]
    edges += [(w, index[1 << i]) for i in range(k)]
    return build_graph(k + len(masks), edges)


STATUSES = "ABCD"


@dataclass(frozen=True)
class StatusedTree:
    tree: Graph
    status: tuple[str, ...]


def calT(ops: Sequence[tuple[str, int]] = ()) -> StatusedTree:
    """Grow a member of the status-labelled tree family from the 8-vertex path.

    ``ops`` is a sequence of ``("phi1", x)`` (hang a 5-vertex path on a
    status-C vertex ``x``) or ``("phi2", x)`` (hang a 4-vertex path on a
    status-D vertex ``x``).  New vertices are appended in path order
    starting from the end adjacent to ``x``.
    """
    edges = [(i, i + 1) for i in range(7)]
    status = list("CABDDBAC")
    rules = {"phi1": ("C", "DDBAC"), "phi2": ("D", "DBAC")}
    for op, x in ops:
        if op not in rules:
            raise GraphError(f"unknown operation {op!r}")
        required, added = rules[op]
        if not 0 <= x < len(status):
            raise GraphError(f"vertex {x} out of range")
        if status[x] != required:
            raise GraphError(f"{op} must attach at a status-{required} vertex, {x} has status {status[x]}")
        start = len(status)
        edges.append((x, start))
        edges += [(start + i, start + i + 1) for i in range(len(added) - 1)]
        status.extend(added)
    return StatusedTree(build_graph(len(status), edges), tuple(status))


def integer_partitions(total: int, max_part: int | None = None):
    """Partitions of ``total`` as non-increasing tuples, in lexicographically decreasing order."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in integer_partitions(total - first, first):
            yield (first,) + rest


def family_A_star_members(max_n: int, with_universal: bool):
    """Yield ``(parts, graph)`` for every member of the starred family with order ``<= max_n``.

    The starred family excludes the zero-part and the single-``A_1`` joins.
    """
    extra = 1 if with_universal else 0
    for total in range(1, (max_n - extra) // 2 + 1):
        for parts in integer_partitions(total):
            if parts == (1,):
                continue
            yield parts, family_A(parts, with_universal)

