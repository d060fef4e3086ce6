"""Graph interchange formats, canonical labelling and small-graph enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Iterator, TextIO

from .graph import (
    Graph,
    GraphError,
    build_graph,
    girth,
    is_connected,
    is_identifiable,
    is_tree,
    is_twin_free,
    iter_bits,
    relabel,
)


class Graph6Error(ValueError):
    """Malformed graph6 input."""


CANONICAL_MAX_N = 16
CONNECTED_MAX_N = 7
GIRTH5_MAX_N = 10
TREES_MAX_N = 12


# --- graph6 -------------------------------------------------------------

def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error("graph6 orders above 258047 are not supported")


def write_graph6(G: Graph) -> str:
    """Encode ``G`` as a graph6 string (no header, no newline)."""
    bits = [G.adj[j] >> i & 1 for j in range(1, G.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(sum(b << (5 - k) for k, b in enumerate(bits[i:i + 6])) + 63)
        for i in range(0, len(bits), 6)
    )
    return _encode_size(G.n) + body


def parse_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in text]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"byte outside 63..126 in {text!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        raise Graph6Error("unsupported graph6 size field")
    needed = (n * (n - 1) // 2 + 5) // 6
    payload = data[pos:]
    if len(payload) < needed:
        raise Graph6Error(f"truncated graph6 payload: need {needed} bytes, got {len(payload)}")
    if len(payload) > needed:
        raise Graph6Error(f"graph6 payload longer than order {n} allows")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if payload[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj)


# --- edge lists ---------------------------------------------------------

def write_edgelist(G: Graph) -> str:
    """``n`` on the first line, then one ``u v`` line per edge."""
    return "\n".join([str(G.n)] + [f"{u} {v}" for u, v in G.edges()]) + "\n"


def parse_edgelists(text: str) -> list[Graph]:
    """Parse blank-line separated edge-list blocks.

    Each block holds ``u v`` lines (0-based) and optionally a line with a
    single integer giving the order; otherwise the order is one more than
    the largest endpoint.  ``#`` starts a comment.
    """
    graphs = []
    block: list[str] = []
    for raw in text.splitlines() + [""]:
        line = raw.split("#", 1)[0].strip()
        if line:
            block.append(line)
            continue
        if not raw.strip() and block:
            graphs.append(_parse_block(block))
            block = []
    return graphs


def _parse_block(lines: list[str]) -> Graph:
    n = None
    edges = []
    for line in lines:
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise GraphError(f"bad edge-list line {line!r}") from None
        if len(values) == 1:
            n = values[0]
        elif len(values) == 2:
            edges.append((values[0], values[1]))
        else:
            raise GraphError(f"bad edge-list line {line!r}")
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return build_graph(n, edges)


# --- canonical labelling ------------------------------------------------

def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (cells as bitmasks).

    Cells split by the vector of neighbour counts into every current cell;
    sub-cells are ordered by that vector, so the result is label-invariant.
    """
    while True:
        new_cells = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                row = adj[v]
                key = tuple((row & c).bit_count() for c in cells)
                groups[key] = groups.get(key, 0) | 1 << v
            new_cells.extend(groups[k] for k in sorted(groups))
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _leaf_code(adj: tuple[int, ...], cells: list[int]) -> tuple[tuple[int, ...], list[int]]:
    order = [c.bit_length() - 1 for c in cells]
    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(adj[v]):
            row |= 1 << position[u]
        rows.append(row)
    return tuple(rows), position


class _Canon:
    """Individualisation-refinement search for the minimum leaf certificate.

    Automorphisms found between equal leaves prune sibling branches that
    lie in one orbit of the subgroup fixing the current prefix.
    """

    def __init__(self, G: Graph):
        self.adj = G.adj
        self.n = G.n
        self.best: tuple[int, ...] | None = None
        self.best_perm: list[int] | None = None
        self.automorphisms: list[list[int]] = []

    def search(self, cells: list[int], prefix: list[int]) -> None:
        cells = _refine(self.adj, cells)
        target = next((i for i, c in enumerate(cells) if c & (c - 1)), None)
        if target is None:
            code, perm = _leaf_code(self.adj, cells)
            if self.best is None or code < self.best:
                self.best, self.best_perm = code, perm
            elif code == self.best:
                inverse = [0] * self.n
                for v, p in enumerate(self.best_perm):
                    inverse[p] = v
                self.automorphisms.append([inverse[perm[v]] for v in range(self.n)])
            return
        cell = cells[target]
        explored: list[int] = []
        for v in iter_bits(cell):
            if explored and self._same_orbit(v, explored, prefix):
                continue
            explored.append(v)
            split = cells[:target] + [1 << v, cell & ~(1 << v)] + cells[target + 1:]
            self.search(split, prefix + [v])

    def _same_orbit(self, v: int, explored: list[int], prefix: list[int]) -> bool:
        gens = [g for g in self.automorphisms if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            u = frontier.pop()
            for g in gens:
                w = g[u]
                if w not in orbit:
                    orbit.add(w)
                    frontier.append(w)
        return any(e in orbit for e in explored)


def canonical_relabeling(G: Graph) -> list[int]:
    """Permutation ``perm`` such that ``relabel(G, perm)`` is the canonical form."""
    if G.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical labelling is limited to n <= {CANONICAL_MAX_N}")
    if G.n == 0:
        return []
    canon = _Canon(G)
    canon.search([G.all_bits], [])
    return canon.best_perm


def canonical_form(G: Graph) -> Graph:
    return relabel(G, canonical_relabeling(G))


def canonical_key(G: Graph) -> bytes:
    """Bytes identifying the isomorphism class of ``G``."""
    return write_graph6(canonical_form(G)).encode("ascii")


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return canonical_key(G) == canonical_key(H)


# --- enumeration --------------------------------------------------------

@dataclass
class GraphStream:
    """Re-iterable source of graphs with optional structural filters."""

    source: Callable[[], Iterable[Graph]]
    description: str
    filters: dict = field(default_factory=dict)

    def __iter__(self) -> Iterator[Graph]:
        for G in self.source():
            if _passes(G, self.filters):
                yield G

    def filtered(self, **filters) -> GraphStream:
        merged = {**self.filters, **{k: v for k, v in filters.items() if v}}
        return GraphStream(self.source, self.description, merged)

    def scope(self) -> str:
        active = ", ".join(f"{k}={v}" for k, v in sorted(self.filters.items()))
        return f"{self.description}" + (f" [{active}]" if active else "")

    @classmethod
    def connected(cls, n_values: Iterable[int], **filters) -> GraphStream:
        ns = list(n_values)
        girth_floor = filters.get("min_girth")

        def source():
            for n in ns:
                yield from enumerate_connected(n, min_girth=girth_floor)

        return cls(source, f"connected graphs n in {_span(ns)}", {k: v for k, v in filters.items() if v})

    @classmethod
    def trees(cls, n_values: Iterable[int], **filters) -> GraphStream:
        ns = list(n_values)

        def source():
            for n in ns:
                yield from enumerate_trees(n)

        return cls(source, f"trees n in {_span(ns)}", {k: v for k, v in filters.items() if v})

    @classmethod
    def from_graph6_file(cls, path: str | Path, **filters) -> GraphStream:
        return cls(lambda: read_graph6_file(path), f"graph6 file {path}", {k: v for k, v in filters.items() if v})

    @classmethod
    def from_edgelist_file(cls, path: str | Path, **filters) -> GraphStream:
        return cls(lambda: parse_edgelists(Path(path).read_text()), f"edge-list file {path}",
                   {k: v for k, v in filters.items() if v})

    @classmethod
    def of(cls, graphs: Iterable[Graph], description: str = "explicit graphs", **filters) -> GraphStream:
        graphs = list(graphs)
        return cls(lambda: iter(graphs), description, {k: v for k, v in filters.items() if v})


def _span(ns: list[int]) -> str:
    if ns and ns == list(range(ns[0], ns[-1] + 1)):
        return f"{ns[0]}..{ns[-1]}"
    return str(ns)


def _passes(G: Graph, filters: dict) -> bool:
    if filters.get("connected") and not is_connected(G):
        return False
    if filters.get("trees_only") and not is_tree(G):
        return False
    if filters.get("identifiable") and not is_identifiable(G):
        return False
    if filters.get("twin_free") and not is_twin_free(G):
        return False
    g = filters.get("min_girth")
    if g:
        length = girth(G)
        if length is not None and length < g:
            return False
    return True


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path) as fh:
        yield from read_graph6(fh)


def read_graph6(fh: TextIO) -> Iterator[Graph]:
    for line in fh:
        if line.strip():
            yield parse_graph6(line)


def _augment(parents: Iterable[Graph], keep: Callable[[Graph], bool], allow_isolated: bool) -> list[Graph]:
    """Add one vertex in every possible way; keep one child per isomorphism class."""
    seen: dict[bytes, Graph] = {}
    for P in parents:
        n = P.n
        for nbrs in range(0 if allow_isolated else 1, 1 << n):
            adj = list(P.adj)
            for u in iter_bits(nbrs):
                adj[u] |= 1 << n
            adj.append(nbrs)
            child = Graph(n + 1, adj)
            if not keep(child):
                continue
            perm = canonical_relabeling(child)
            canon = relabel(child, perm)
            key = write_graph6(canon).encode("ascii")
            if key not in seen:
                seen[key] = canon
    return [seen[k] for k in sorted(seen)]


_CONNECTED_CACHE: dict[tuple[int, int], list[Graph]] = {}
_ALL_CACHE: dict[int, list[Graph]] = {}


def enumerate_connected(n: int, min_girth: int | None = None) -> list[Graph]:
    """All connected graphs of order ``n`` up to isomorphism, in canonical-key order.

    Children of canonical connected parents are deduplicated by canonical
    key.  With ``min_girth >= 5`` the (hereditary) girth condition prunes
    during growth and orders up to 10 are allowed; otherwise ``n <= 7``.
    """
    g = min_girth or 0
    limit = GIRTH5_MAX_N if g >= 5 else CONNECTED_MAX_N
    if not 1 <= n <= limit:
        raise GraphError(f"builtin connected enumeration supports 1 <= n <= {limit}")
    key = (n, g)
    if key not in _CONNECTED_CACHE:
        if n == 1:
            result = [Graph(1, [0])]
        else:
            def keep(G):
                if not g:
                    return True
                length = girth(G)
                return length is None or length >= g

            result = _augment(enumerate_connected(n - 1, min_girth), keep, allow_isolated=False)
        _CONNECTED_CACHE[key] = result
    return list(_CONNECTED_CACHE[key])


def enumerate_graphs(n: int) -> list[Graph]:
    """All graphs of order ``n`` (connected or not) up to isomorphism, ``0 <= n <= 6``."""
    if not 0 <= n <= 6:
        raise GraphError("builtin enumeration of all graphs supports 0 <= n <= 6")
    if n not in _ALL_CACHE:
        _ALL_CACHE[n] = [Graph(0, [])] if n == 0 else _augment(enumerate_graphs(n - 1), lambda G: True, True)
    return list(_ALL_CACHE[n])


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Successor of a canonical rooted-tree level sequence (root at level 0)."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    nxt = list(levels)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first principal subtree of the root."""
    m = next((i for i in range(2, len(levels)) if levels[i] == 1), len(levels))
    left = [x - 1 for x in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    left, rest = _split(levels)
    hl, hr = max(left), max(rest)
    ok = hr >= hl and not (hr == hl and (len(left) > len(rest) or (len(left) == len(rest) and left > rest)))
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _levels_to_tree(levels: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for v, lvl in enumerate(levels):
        del stack[lvl:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return build_graph(len(levels), edges)


def enumerate_trees(n: int) -> list[Graph]:
    """All free trees of order ``n`` up to isomorphism (``1 <= n <= 12``).

    Walks canonical level sequences rooted at a centre, skipping rooted
    sequences that are not the canonical representative of their free tree.
    """
    if not 1 <= n <= TREES_MAX_N:
        raise GraphError(f"builtin tree enumeration supports 1 <= n <= {TREES_MAX_N}")
    if n <= 2:
        return [build_graph(n, [(0, 1)] if n == 2 else [])]
    levels = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    out = []
    while levels is not None:
        levels = _next_free(levels)
        if levels is None:
            break
        out.append(_levels_to_tree(levels))
        levels = _next_rooted(levels)
    return out
