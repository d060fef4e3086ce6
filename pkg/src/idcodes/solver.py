"""Exact minimum codes via multi-cover hitting-set branch and bound.

Every reducible code kind becomes a list of ``(support, threshold)``
constraints: a vertex set ``C`` is a code iff ``|C & support| >= threshold``
for every constraint.  The (1, <=4)-identifying condition is not of this
shape and is solved by iterative deepening over the predicate instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .codes import CodeKind, is_valid
from .graph import Graph, VertexSet, as_bits, iter_bits


class GuardError(ValueError):
    """Instance exceeds a documented size guard."""


ORACLE_MAX_N = 20
ALL_OPTIMA_MAX_N = 16
FOURID_MAX_N = 12

# Kinds whose codes give every vertex a distinct non-empty trace, so 2^|C| - 1 >= n.
_LOG_FLOOR_KINDS = {CodeKind.ID, CodeKind.TID, CodeKind.OLD, CodeKind.EID, CodeKind.SID, CodeKind.FOURID}


@dataclass(frozen=True)
class Constraint:
    support: VertexSet
    threshold: int


@dataclass(frozen=True)
class ConstraintSystem:
    n: int
    kind: CodeKind
    constraints: tuple[Constraint, ...]
    reducible: bool = True
    infeasibility_reason: str | None = None

    @property
    def feasible(self) -> bool:
        return self.infeasibility_reason is None

    def is_satisfied(self, C) -> bool:
        code = as_bits(C, self.n)
        return all((c.support.bits & code).bit_count() >= c.threshold for c in self.constraints)


@dataclass
class SolveResult:
    status: str
    size: int | None = None
    witness: VertexSet | None = None
    infeasibility_reason: str | None = None
    nodes_explored: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    def to_dict(self) -> dict:
        out = {"status": self.status, "nodes": self.nodes_explored}
        if self.optimal:
            out["size"] = self.size
            out["witness"] = self.witness.to_list()
        else:
            out["reason"] = self.infeasibility_reason
        return out


def _raw_constraints(G: Graph, kind: CodeKind):
    """Return ``(support_bits, threshold, description)`` triples before normalisation."""
    n, adj, closed = G.n, G.adj, G.closed
    dom = [(closed[v], 1, f"vertex {v} cannot be dominated") for v in range(n)]
    tdom = [(adj[v], 1, f"isolated vertex {v}") for v in range(n)]
    sep = [
        (closed[u] ^ closed[v], 1, f"closed twins {u},{v}")
        for u in range(n) for v in range(u + 1, n)
    ]
    loc = [
        ((adj[u] ^ adj[v]) | 1 << u | 1 << v, 1, f"vertices {u},{v} cannot be located")
        for u in range(n) for v in range(u + 1, n)
    ]
    if kind is CodeKind.D:
        return dom
    if kind is CodeKind.TD:
        return tdom
    if kind is CodeKind.SEP:
        return sep
    if kind is CodeKind.ID:
        return dom + sep
    if kind is CodeKind.TID:
        return tdom + sep
    if kind is CodeKind.LD:
        return dom + loc
    if kind is CodeKind.TLD:
        return tdom + loc
    if kind is CodeKind.OLD:
        return tdom + [
            (adj[u] ^ adj[v], 1, f"open twins {u},{v}")
            for u in range(n) for v in range(u + 1, n)
        ]
    if kind is CodeKind.SID:
        return [
            (closed[u] & ~closed[v], 1, f"closed neighbourhood of {u} contained in that of {v}")
            for u in range(n) for v in range(n) if u != v
        ]
    if kind is CodeKind.EID:
        return [(closed[v], 3, f"vertex {v} has fewer than 3 closed neighbours") for v in range(n)] + [
            (closed[u] ^ closed[v], 3, f"vertices {u},{v} differ in fewer than 3 closed neighbours")
            for u in range(n) for v in range(u + 1, n)
        ]
    raise ValueError(f"{kind} has no constraint encoding")


def _normalise(raw: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Drop duplicates and constraints implied by a smaller-support, higher-threshold one."""
    unique = sorted(set(raw), key=lambda c: (c[0].bit_count(), -c[1], c[0]))
    kept: list[tuple[int, int]] = []
    for support, threshold in unique:
        if any(s & ~support == 0 and t >= threshold for s, t in kept):
            continue
        kept.append((support, threshold))
    return kept


def build_constraints(G: Graph, kind: CodeKind) -> ConstraintSystem:
    if kind is CodeKind.FOURID:
        return ConstraintSystem(G.n, kind, (), reducible=False)
    raw = _raw_constraints(G, kind)
    for support, threshold, why in raw:
        if support.bit_count() < threshold:
            return ConstraintSystem(G.n, kind, (), infeasibility_reason=why)
    kept = _normalise([(s, t) for s, t, _ in raw])
    return ConstraintSystem(
        G.n, kind, tuple(Constraint(VertexSet(s, G.n), t) for s, t in kept)
    )


@dataclass
class _Search:
    constraints: list[tuple[int, int]]
    floor: int
    best_size: int
    best_bits: int
    nodes: int = 0

    def propagate(self, inc: int, exc: int):
        """Force vertices of zero-slack constraints; ``None`` means infeasible."""
        while True:
            open_rows = []
            changed = False
            for support, threshold in self.constraints:
                need = threshold - (support & inc).bit_count()
                if need <= 0:
                    continue
                avail = support & ~inc & ~exc
                have = avail.bit_count()
                if have < need:
                    return None
                if have == need:
                    inc |= avail
                    changed = True
                else:
                    open_rows.append((have - need, avail, need))
            if not changed:
                return inc, open_rows

    def lower_bound(self, inc: int, open_rows) -> int:
        used = 0
        bound = 0
        for _, avail, need in sorted(open_rows, key=lambda r: (r[1].bit_count(), r[1])):
            if not avail & used:
                used |= avail
                bound += need
        return max(inc.bit_count() + bound, self.floor)

    def run(self, inc: int, exc: int) -> None:
        self.nodes += 1
        state = self.propagate(inc, exc)
        if state is None:
            return
        inc, open_rows = state
        size = inc.bit_count()
        if not open_rows:
            if size < self.best_size:
                self.best_size, self.best_bits = size, inc
            return
        if self.lower_bound(inc, open_rows) >= self.best_size:
            return
        # open_rows preserves constraint order, so min() breaks ties by lowest index.
        slack, avail, _ = min(open_rows, key=lambda r: r[0])
        for i, v in enumerate(iter_bits(avail)):
            if i > slack:
                break
            self.run(inc | 1 << v, exc)
            exc |= 1 << v


def _greedy(constraints, n: int, inc: int) -> int:
    """Cover all residual demand greedily; lowest index wins ties."""
    while True:
        score = [0] * n
        unsatisfied = False
        for support, threshold in constraints:
            need = threshold - (support & inc).bit_count()
            if need > 0:
                unsatisfied = True
                for v in iter_bits(support & ~inc):
                    score[v] += need
        if not unsatisfied:
            return inc
        v = max(range(n), key=lambda u: (score[u], -u))
        inc |= 1 << v


def _branch_and_bound(G: Graph, kind: CodeKind):
    system = build_constraints(G, kind)
    if not system.feasible:
        return system, None
    constraints = [(c.support.bits, c.threshold) for c in system.constraints]
    floor = 0
    if kind in _LOG_FLOOR_KINDS and not (kind is CodeKind.SID and G.n < 2):
        floor = G.n.bit_length()
    incumbent = _greedy(constraints, G.n, 0)
    search = _Search(constraints, floor, incumbent.bit_count(), incumbent)
    search.run(0, 0)
    return system, search


def _four_id_solve(G: Graph) -> SolveResult:
    if G.n > FOURID_MAX_N:
        raise GuardError(f"4ID solving is limited to n <= {FOURID_MAX_N}")
    start = 0
    for seed_kind in (CodeKind.TID, CodeKind.ID):
        seed = minimum_code(G, seed_kind)
        if seed.optimal:
            start = seed.size
            break
    else:
        return SolveResult("infeasible", infeasibility_reason="graph has closed twins")
    nodes = 0
    for size in range(start, G.n + 1):
        for combo in combinations(range(G.n), size):
            nodes += 1
            if is_valid(G, CodeKind.FOURID, combo):
                return SolveResult("optimal", size, VertexSet.of(combo, G.n), nodes_explored=nodes)
    return SolveResult("infeasible", infeasibility_reason="no (1,<=4)-identifying code exists", nodes_explored=nodes)


def minimum_code(G: Graph, kind: CodeKind) -> SolveResult:
    """Exact minimum code of the given kind, or an infeasibility report."""
    if kind is CodeKind.FOURID:
        return _four_id_solve(G)
    system, search = _branch_and_bound(G, kind)
    if search is None:
        return SolveResult("infeasible", infeasibility_reason=system.infeasibility_reason)
    return SolveResult(
        "optimal", search.best_size, VertexSet(search.best_bits, G.n), nodes_explored=search.nodes
    )


def minimum_code_oracle(G: Graph, kind: CodeKind) -> SolveResult:
    """Exhaustive search over subsets by increasing size, using only the predicates."""
    if G.n > ORACLE_MAX_N:
        raise GuardError(f"exhaustive oracle is limited to n <= {ORACLE_MAX_N}")
    checked = 0
    for size in range(G.n + 1):
        for combo in combinations(range(G.n), size):
            checked += 1
            if is_valid(G, kind, combo):
                return SolveResult("optimal", size, VertexSet.of(combo, G.n), nodes_explored=checked)
    return SolveResult("infeasible", infeasibility_reason="no subset is a valid code", nodes_explored=checked)


def all_minimum_codes(G: Graph, kind: CodeKind) -> list[VertexSet]:
    """Every minimum code, sorted by bitmask value."""
    if G.n > ALL_OPTIMA_MAX_N:
        raise GuardError(f"optimum enumeration is limited to n <= {ALL_OPTIMA_MAX_N}")
    best = minimum_code(G, kind)
    if not best.optimal:
        return []
    codes = [
        VertexSet.of(combo, G.n)
        for combo in combinations(range(G.n), best.size)
        if is_valid(G, kind, combo)
    ]
    return sorted(codes, key=lambda c: c.bits)


def parameter(G: Graph, kind: CodeKind) -> int | None:
    """Minimum code size, or ``None`` when the graph admits no code of this kind."""
    result = minimum_code(G, kind)
    return result.size if result.optimal else None
