"""Validity predicates for identification-type dominating codes.

Every predicate here is written directly from the definition of its code
kind.  The solver has its own constraint encoding of the same conditions;
keeping the two separate is what makes the encoding testable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError, VertexSet, as_bits, iter_bits


class CodeKind(enum.Enum):
    D = "d"
    TD = "td"
    SEP = "sep"
    ID = "id"
    TID = "tid"
    LD = "ld"
    TLD = "tld"
    OLD = "old"
    SID = "sid"
    EID = "eid"
    FOURID = "4id"

    @classmethod
    def parse(cls, text: str) -> CodeKind:
        key = text.strip().lower()
        for kind in cls:
            if kind.value == key or kind.name.lower() == key:
                return kind
        raise ValueError(f"unknown code kind {text!r}")


# Arrows X -> Y: every code of kind X in a connected graph is a code of kind Y.
# SID -> TID only holds in graphs that admit a TID at all.
IMPLICATIONS: tuple[tuple[CodeKind, CodeKind], ...] = (
    (CodeKind.FOURID, CodeKind.EID),
    (CodeKind.FOURID, CodeKind.SID),
    (CodeKind.EID, CodeKind.OLD),
    (CodeKind.EID, CodeKind.TID),
    (CodeKind.OLD, CodeKind.TLD),
    (CodeKind.SID, CodeKind.TID),
    (CodeKind.TID, CodeKind.ID),
    (CodeKind.TID, CodeKind.TLD),
    (CodeKind.TLD, CodeKind.LD),
    (CodeKind.TLD, CodeKind.TD),
    (CodeKind.ID, CodeKind.LD),
    (CodeKind.LD, CodeKind.D),
    (CodeKind.TD, CodeKind.D),
)

FOURID_MAX_SET = 4


@dataclass(frozen=True)
class Violation:
    """First failed requirement of a code, in deterministic scan order.

    ``reason`` is one of ``uncovered``, ``undominated``, ``collision``,
    ``open-collision``, ``not-self-separated``, ``small-iset``,
    ``small-difference`` or ``subset-collision``.  For ``subset-collision``
    ``vertices`` holds the two colliding vertex sets as tuples.
    """

    reason: str
    vertices: tuple

    def to_dict(self) -> dict:
        return {"reason": self.reason, "vertices": [list(v) if isinstance(v, tuple) else v for v in self.vertices]}


def _vertex(G: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise GraphError(f"vertex {v} out of range for order {G.n}")


def iset(G: Graph, C: VertexSet | Iterable[int], v: int) -> VertexSet:
    """Codewords in the closed neighbourhood of ``v``."""
    _vertex(G, v)
    return VertexSet(G.closed[v] & as_bits(C, G.n), G.n)


def iset_of_set(G: Graph, C: VertexSet | Iterable[int], X: VertexSet | Iterable[int]) -> VertexSet:
    code = as_bits(C, G.n)
    bits = 0
    for u in iter_bits(as_bits(X, G.n)):
        bits |= G.closed[u]
    return VertexSet(bits & code, G.n)


def _domination(G, code, closed):
    rows = G.closed if closed else G.adj
    for v in range(G.n):
        if not rows[v] & code:
            return Violation("uncovered" if closed else "undominated", (v,))
    return None


def _pairs(G, code, rows, reason, skip_codewords=False):
    for u in range(G.n):
        if skip_codewords and code >> u & 1:
            continue
        iu = rows[u] & code
        for v in range(u + 1, G.n):
            if skip_codewords and code >> v & 1:
                continue
            if iu == rows[v] & code:
                return Violation(reason, (u, v))
    return None


def _self_separation(G, code):
    for u in range(G.n):
        iu = G.closed[u] & code
        for v in range(u + 1, G.n):
            iv = G.closed[v] & code
            if not iu & ~iv:
                return Violation("not-self-separated", (u, v))
            if not iv & ~iu:
                return Violation("not-self-separated", (v, u))
    return None


def _error_correction(G, code):
    isets = [G.closed[v] & code for v in range(G.n)]
    for v, iv in enumerate(isets):
        if iv.bit_count() < 3:
            return Violation("small-iset", (v,))
    for u in range(G.n):
        for v in range(u + 1, G.n):
            if (isets[u] ^ isets[v]).bit_count() < 3:
                return Violation("small-difference", (u, v))
    return None


def small_subsets(n: int, max_size: int = FOURID_MAX_SET) -> list[tuple[int, ...]]:
    """All vertex subsets of size at most ``max_size`` (empty set first)."""
    out: list[tuple[int, ...]] = []
    for size in range(min(max_size, n) + 1):
        out.extend(combinations(range(n), size))
    return out


def _four_identification(G, code):
    seen: dict[int, tuple[int, ...]] = {}
    for X in small_subsets(G.n):
        bits = 0
        for u in X:
            bits |= G.closed[u]
        bits &= code
        if bits in seen:
            return Violation("subset-collision", (seen[bits], X))
        seen[bits] = X
    return None


def violation_witness(G: Graph, kind: CodeKind, C: VertexSet | Iterable[int]) -> Violation | None:
    """Return the first violated requirement of ``C`` as a ``kind`` code, or ``None``.

    Domination conditions are scanned before pair conditions; pairs are
    scanned as ``(u, v)`` with ``u < v`` in index order.
    """
    code = as_bits(C, G.n)
    closed = G.closed
    if kind is CodeKind.D:
        return _domination(G, code, True)
    if kind is CodeKind.TD:
        return _domination(G, code, False)
    if kind is CodeKind.SEP:
        return _pairs(G, code, closed, "collision")
    if kind is CodeKind.ID:
        return _domination(G, code, True) or _pairs(G, code, closed, "collision")
    if kind is CodeKind.TID:
        return _domination(G, code, False) or _pairs(G, code, closed, "collision")
    if kind is CodeKind.LD:
        return _domination(G, code, True) or _pairs(G, code, closed, "collision", skip_codewords=True)
    if kind is CodeKind.TLD:
        return _domination(G, code, False) or _pairs(G, code, closed, "collision", skip_codewords=True)
    if kind is CodeKind.OLD:
        return _domination(G, code, False) or _pairs(G, code, G.adj, "open-collision")
    if kind is CodeKind.SID:
        return _self_separation(G, code)
    if kind is CodeKind.EID:
        return _error_correction(G, code)
    if kind is CodeKind.FOURID:
        return _four_identification(G, code)
    raise ValueError(f"unsupported code kind {kind}")


def is_valid(G: Graph, kind: CodeKind, C: VertexSet | Iterable[int]) -> bool:
    return violation_witness(G, kind, C) is None
