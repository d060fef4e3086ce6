"""Finite verification of the characterisation, bounds and family values.

Each claim has a per-graph checker returning ``("skip" | "ok" | "fail", detail)``.
A checker skips graphs outside the claim's hypothesis class; skips are
counted separately and never become counterexamples.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .codes import IMPLICATIONS, CodeKind, is_valid
from .enumeration import GraphStream, canonical_key, enumerate_trees, write_graph6
from .families import (
    a_k,
    corona,
    eid_gap,
    extremal_tid,
    family_A,
    family_A_star_members,
    integer_partitions,
    ld_gap,
    sid_gap,
    star,
)
from .graph import (
    Graph,
    GraphError,
    girth,
    is_connected,
    is_identifiable,
    is_tree,
    is_twin_free,
    leaves,
    min_degree,
    supports,
)
from .solver import all_minimum_codes, parameter

CLAIMS = (
    "prop-2.1", "prop-2.2", "thm-2.4", "lem-3.1", "thm-3.2", "cor-3.3", "thm-3.4",
    "cor-3.5", "thm-3.6", "thm-4.1", "thm-4.2", "thm-4.3", "thm-4.4", "prop-4.5",
    "prop-4.6", "prop-4.7", "fig-1", "log-lb",
)

CLAIM_SUMMARIES = {
    "prop-2.1": "TID number at most n-1 for connected identifiable graphs other than P3",
    "prop-2.2": "starred A-family members need n-1 codewords for SEP and TID; unique SEP optimum with a universal vertex",
    "thm-2.4": "TID number >= n-1 exactly for the two extremal families; = n exactly for P3",
    "lem-3.1": "trees other than P4 with n >= 4: TID number <= n - s(T)",
    "thm-3.2": "trees with n >= 3: TID number <= 3(n + l(T))/5",
    "cor-3.3": "twin-free trees: TID number <= 3n/4",
    "thm-3.4": "connected twin-free graphs of girth >= 5: TID number <= 3n/4",
    "cor-3.5": "connected graphs of girth >= 5: TID number <= (3n + l - s)/4",
    "thm-3.6": "twin-free trees reaching 3n/4 are exactly 3-coronas",
    "thm-4.1": "TID <= 2 ID - 2 when ID >= 3",
    "thm-4.2": "TLD <= TID <= 2 TLD",
    "thm-4.3": "LD <= TLD <= 2 LD - 1",
    "thm-4.4": "TID <= 3 LD - log2(LD + 1) when LD >= 2",
    "prop-4.5": "location-domination gadget values",
    "prop-4.6": "self-identifying gadget values",
    "prop-4.7": "error-correcting gadget values",
    "fig-1": "implication lattice between code kinds",
    "log-lb": "2^ID - 1 >= n and TID >= ID",
}

DEFAULT_JOBS_ENV = "IDCODES_JOBS"

K = CodeKind


@dataclass
class Report:
    claim: str
    scope: str
    checked: int = 0
    skipped: int = 0
    counterexamples: list[tuple[str, str]] = field(default_factory=list)
    elapsed_ms: float = 0.0
    findings: list[tuple[str, str]] = field(default_factory=list)
    informational: bool = False

    @property
    def verdict(self) -> str:
        if self.informational:
            return "info"
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        out = {
            "claim": self.claim,
            "scope": self.scope,
            "checked": self.checked,
            "skipped": self.skipped,
            "counterexamples": [{"graph6": g, "detail": d} for g, d in sorted(self.counterexamples)],
            "elapsed_ms": round(self.elapsed_ms, 3),
            "verdict": self.verdict,
        }
        if self.informational:
            out["findings"] = [{"graph6": g, "detail": d} for g, d in self.findings]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


# --- extremal family membership ------------------------------------------

MEMBER_MAX_N = 12
_CANDIDATES: dict[int, dict[bytes, str]] = {}


def _extremal_candidates(n: int) -> dict[bytes, str]:
    """Canonical keys of every extremal-family graph of order ``n``, tagged ``i`` or ``ii``."""
    if n in _CANDIDATES:
        return _CANDIDATES[n]
    found: dict[bytes, str] = {}

    def add(G: Graph, case: str) -> None:
        found.setdefault(canonical_key(G), case)

    if n >= 3:
        add(star(n), "i")
    for universal in (False, True):
        rest = n - (1 if universal else 0)
        if rest >= 2 and rest % 2 == 0:
            for parts in integer_partitions(rest // 2):
                if parts != (1,):
                    add(family_A(parts, universal), "i")
    for m in range(1, n // 2 + 1):
        inner = n - 2 * m
        for universal in (False, True):
            rest = inner - (1 if universal else 0)
            if rest < 0 or rest % 2:
                continue
            for parts in integer_partitions(rest // 2):
                add(extremal_tid(parts, universal, m), "ii")
    _CANDIDATES[n] = found
    return found


def is_extremal_member(G: Graph) -> tuple[bool, str | None]:
    """Whether ``G`` lies in one of the two extremal families, and which case (``"i"``/``"ii"``)."""
    if G.n > MEMBER_MAX_N:
        raise GraphError(f"membership test is limited to n <= {MEMBER_MAX_N}")
    case = _extremal_candidates(G.n).get(canonical_key(G))
    return case is not None, case


# --- per-graph checkers --------------------------------------------------

def _p3_key() -> bytes:
    return canonical_key(star(3))


def check_prop_2_1(G: Graph):
    if G.n < 3 or not is_connected(G) or not is_identifiable(G):
        return "skip", None
    t = parameter(G, K.TID)
    if canonical_key(G) == _p3_key():
        return ("ok", None) if t == 3 else ("fail", f"P3 has TID {t}")
    return ("ok", None) if t <= G.n - 1 else ("fail", f"TID={t} > n-1={G.n - 1}")


def check_thm_2_4(G: Graph):
    if G.n < 3 or not is_connected(G) or not is_identifiable(G):
        return "skip", None
    t = parameter(G, K.TID)
    is_p3 = canonical_key(G) == _p3_key()
    if (t == G.n) != is_p3:
        return "fail", f"TID={t}, n={G.n}, P3={is_p3}"
    member, case = is_extremal_member(G)
    if (t >= G.n - 1) != member:
        return "fail", f"TID={t}, n={G.n}, member={member}"
    return "ok", case


def check_lem_3_1(G: Graph):
    if not is_tree(G) or G.n < 4:
        return "skip", None
    if G.n == 4 and max(G.degrees()) == 2:
        return "skip", None
    t = parameter(G, K.TID)
    s = len(supports(G))
    return ("ok", None) if t <= G.n - s else ("fail", f"TID={t} > n-s={G.n - s}")


def check_thm_3_2(G: Graph):
    if not is_tree(G) or G.n < 3:
        return "skip", None
    t = parameter(G, K.TID)
    ell = len(leaves(G))
    return ("ok", None) if 5 * t <= 3 * (G.n + ell) else ("fail", f"TID={t} > 3(n+l)/5 with l={ell}")


def check_cor_3_3(G: Graph):
    if not is_tree(G) or G.n < 3 or not is_twin_free(G):
        return "skip", None
    t = parameter(G, K.TID)
    return ("ok", None) if 4 * t <= 3 * G.n else ("fail", f"TID={t} > 3n/4")


def _girth_at_least_5(G: Graph) -> bool:
    g = girth(G)
    return g is None or g >= 5


def check_thm_3_4(G: Graph):
    if G.n < 3 or not is_connected(G) or not is_twin_free(G) or not _girth_at_least_5(G):
        return "skip", None
    t = parameter(G, K.TID)
    return ("ok", None) if 4 * t <= 3 * G.n else ("fail", f"TID={t} > 3n/4")


def check_cor_3_5(G: Graph):
    if G.n < 3 or not is_connected(G) or not _girth_at_least_5(G):
        return "skip", None
    t = parameter(G, K.TID)
    if t is None:
        return "skip", None
    ell, s = len(leaves(G)), len(supports(G))
    return ("ok", None) if 4 * t <= 3 * G.n + ell - s else ("fail", f"TID={t}, l={ell}, s={s}")


def _identifiable_connected(G: Graph, min_n: int = 1) -> bool:
    return G.n >= min_n and is_connected(G) and is_identifiable(G) and min_degree(G) >= 1


def check_thm_4_1(G: Graph):
    if not _identifiable_connected(G):
        return "skip", None
    i = parameter(G, K.ID)
    if i < 3:
        return "skip", None
    t = parameter(G, K.TID)
    return ("ok", None) if t <= 2 * i - 2 else ("fail", f"TID={t}, ID={i}")


def check_thm_4_2(G: Graph):
    if not _identifiable_connected(G, 3):
        return "skip", None
    t = parameter(G, K.TID)
    tl = parameter(G, K.TLD)
    return ("ok", None) if tl <= t <= 2 * tl else ("fail", f"TID={t}, TLD={tl}")


def check_thm_4_3(G: Graph):
    if G.n < 3 or not is_connected(G):
        return "skip", None
    ld = parameter(G, K.LD)
    tl = parameter(G, K.TLD)
    return ("ok", None) if ld <= tl <= 2 * ld - 1 else ("fail", f"LD={ld}, TLD={tl}")


def check_thm_4_4(G: Graph):
    if not _identifiable_connected(G):
        return "skip", None
    ld = parameter(G, K.LD)
    if ld < 2:
        return "skip", None
    t = parameter(G, K.TID)
    # t <= 3 ld - log2(ld + 1)  <=>  2^(3 ld - t) >= ld + 1, in exact integers
    margin = 3 * ld - t
    ok = margin >= 0 and (1 << margin) >= ld + 1
    return ("ok", None) if ok else ("fail", f"TID={t}, LD={ld}")


def check_log_lb(G: Graph):
    if not _identifiable_connected(G):
        return "skip", None
    i = parameter(G, K.ID)
    t = parameter(G, K.TID)
    ok = (1 << i) - 1 >= G.n and t >= i
    return ("ok", None) if ok else ("fail", f"ID={i}, TID={t}, n={G.n}")


def check_hierarchy(G: Graph, edges: Iterable[tuple[CodeKind, CodeKind]] = IMPLICATIONS):
    """All-subsets sweep of the implication lattice on one graph.

    An arrow is only tested when the graph admits codes of both kinds.  Every
    kind is closed upwards, so admitting one means the whole vertex set is one.
    """
    if not is_connected(G):
        return "skip", None
    edges = list(edges)
    kinds = {k for edge in edges for k in edge}
    admits = {k: is_valid(G, k, G.all_bits) for k in kinds}
    edges = [(x, y) for x, y in edges if admits[x] and admits[y]]
    if not edges:
        return "skip", None
    for code in range(1 << G.n):
        valid = {k: is_valid(G, k, code) for k in kinds}
        for x, y in edges:
            if valid[x] and not valid[y]:
                members = [v for v in range(G.n) if code >> v & 1]
                return "fail", f"{x.value} code {members} is not {y.value}"
    return "ok", None


CHECKERS: dict[str, Callable] = {
    "prop-2.1": check_prop_2_1,
    "thm-2.4": check_thm_2_4,
    "lem-3.1": check_lem_3_1,
    "thm-3.2": check_thm_3_2,
    "cor-3.3": check_cor_3_3,
    "thm-3.4": check_thm_3_4,
    "cor-3.5": check_cor_3_5,
    "thm-4.1": check_thm_4_1,
    "thm-4.2": check_thm_4_2,
    "thm-4.3": check_thm_4_3,
    "thm-4.4": check_thm_4_4,
    "log-lb": check_log_lb,
    "fig-1": check_hierarchy,
}


def _run_one(args):
    claim, g6 = args
    from .enumeration import parse_graph6

    return g6, CHECKERS[claim](parse_graph6(g6))


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(DEFAULT_JOBS_ENV, "1")))
    except ValueError:
        return 1


def run_checker(claim: str, source: Iterable[Graph], scope: str, checker: Callable | None = None,
                jobs: int = 1) -> Report:
    """Apply a per-graph checker to every graph of ``source``."""
    checker = checker or CHECKERS[claim]
    report = Report(claim, scope)
    start = time.perf_counter()
    if jobs > 1 and checker is CHECKERS.get(claim):
        items = [(claim, write_graph6(G)) for G in source]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, items, chunksize=16))
    else:
        results = [(write_graph6(G), checker(G)) for G in source]
    for g6, (status, detail) in results:
        if status == "skip":
            report.skipped += 1
            continue
        report.checked += 1
        if status == "fail":
            report.counterexamples.append((g6, detail))
    report.counterexamples.sort()
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_bound(claim: str, source: GraphStream, jobs: int = 1) -> Report:
    if claim not in CHECKERS or claim in ("thm-2.4", "fig-1"):
        raise ValueError(f"{claim} is not a bound claim")
    return run_checker(claim, source, source.scope(), jobs=jobs)


def verify_characterization(max_n: int, source: GraphStream | None = None, jobs: int = 1) -> Report:
    if source is None:
        source = GraphStream.connected(range(1, max_n + 1))
    graphs = (G for G in source if G.n <= max_n)
    return run_checker("thm-2.4", graphs, source.scope(), jobs=jobs)


def verify_hierarchy(source: GraphStream | None = None, max_n: int = 5,
                     edges: Iterable[tuple[CodeKind, CodeKind]] = IMPLICATIONS) -> Report:
    if source is None:
        source = GraphStream.connected(range(1, max_n + 1))
    edges = tuple(edges)
    graphs = (G for G in source if G.n <= max_n)
    return run_checker("fig-1", graphs, source.scope(), checker=lambda G: check_hierarchy(G, edges))


# --- family values -------------------------------------------------------

def _family_report(claim: str, scope: str, cases: Iterable[tuple[Graph, str, Callable[[Graph], str | None]]]) -> Report:
    report = Report(claim, scope)
    start = time.perf_counter()
    for G, label, check in cases:
        report.checked += 1
        problem = check(G)
        if problem:
            report.counterexamples.append((write_graph6(G), f"{label}: {problem}"))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def _expect(G: Graph, expected: dict[CodeKind, int]) -> str | None:
    got = {kind: parameter(G, kind) for kind in expected}
    bad = [f"{k.value}={got[k]} (expected {v})" for k, v in expected.items() if got[k] != v]
    return ", ".join(bad) or None


def _prop_2_2_cases(max_n: int, unique_max_n: int):
    for universal in (False, True):
        for parts, G in family_A_star_members(max_n, universal):
            label = f"parts={list(parts)} universal={universal}"

            def check(G, universal=universal):
                problem = _expect(G, {K.SEP: G.n - 1, K.TID: G.n - 1})
                if problem or not universal or G.n > unique_max_n:
                    return problem
                optima = all_minimum_codes(G, K.SEP)
                expected = G.all_bits & ~(1 << (G.n - 1))
                if [c.bits for c in optima] != [expected]:
                    return f"SEP optima {[c.to_list() for c in optima]}"
                return None

            yield G, label, check


def verify_family_values(claim: str, params: Iterable[int] | None = None, max_n: int = 12,
                         unique_max_n: int = 9) -> Report:
    """Check the closed-form parameter values of a family against the solver."""
    if claim == "prop-2.2":
        return _family_report(claim, f"starred A-family members n <= {max_n}", _prop_2_2_cases(max_n, unique_max_n))
    if claim == "prop-4.5":
        ks = list(params or (2, 3))
        cases = [
            (ld_gap(k), f"k={k}", lambda G, k=k: _expect(G, {K.LD: 2 ** k - 1, K.TID: 3 * 2 ** k - 2 * k - 3}))
            for k in ks
        ]
        return _family_report(claim, f"ld_gap k in {ks}", cases)
    if claim == "prop-4.6":
        ks = list(params or (4,))
        cases = [(sid_gap(k), f"k={k}", lambda G, k=k: _expect(G, {K.TID: k, K.SID: 2 ** k - 2})) for k in ks]
        return _family_report(claim, f"sid_gap k in {ks}", cases)
    if claim == "prop-4.7":
        ks = list(params or (4,))
        cases = [(eid_gap(k), f"k={k}", lambda G, k=k: _expect(G, {K.TID: k, K.EID: 2 ** k - 1})) for k in ks]
        return _family_report(claim, f"eid_gap k in {ks}", cases)
    raise ValueError(f"{claim} is not a family-value claim")


# --- tightness -----------------------------------------------------------

def verify_corona_tightness(max_n: int = 12) -> Report:
    """Twin-free trees with TID number 3n/4 coincide with 3-coronas of trees (4 <= n <= max_n)."""
    if max_n > 12:
        raise GraphError("corona tightness check is limited to n <= 12")
    report = Report("thm-3.6", f"twin-free trees 4 <= n <= {max_n}")
    start = time.perf_counter()
    for n in range(4, max_n + 1, 4):
        coronas = {canonical_key(corona(H, 3)): H for H in enumerate_trees(n // 4)}
        tight = set()
        for T in enumerate_trees(n):
            if not is_twin_free(T):
                report.skipped += 1
                continue
            report.checked += 1
            if 4 * parameter(T, K.TID) == 3 * n:
                key = canonical_key(T)
                tight.add(key)
                report.findings.append((write_graph6(T), f"n={n} tight"))
                if key not in coronas:
                    report.counterexamples.append((write_graph6(T), "tight but not a 3-corona"))
        for key, H in coronas.items():
            if key not in tight:
                report.counterexamples.append((key.decode(), f"3-corona of {write_graph6(H)} not tight"))
    for n in range(5, max_n + 1):
        if n % 4:
            report.skipped += sum(1 for T in enumerate_trees(n) if is_twin_free(T))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def search_girth5_tight(max_n: int, source: GraphStream, relaxed: bool = False) -> Report:
    """List connected twin-free graphs of girth >= 5 with TID number 3n/4.

    Exact equality (so only n divisible by 4) unless ``relaxed``, which
    compares against ``ceil(3n/4)``.  The report is informational.
    """
    report = Report("girth5-tight", source.scope() + f" n <= {max_n}", informational=True)
    start = time.perf_counter()
    for G in source:
        if G.n > max_n or G.n < 3 or not is_connected(G) or not is_twin_free(G) or not _girth_at_least_5(G):
            report.skipped += 1
            continue
        report.checked += 1
        t = parameter(G, K.TID)
        hit = t == -(-3 * G.n // 4) if relaxed else 4 * t == 3 * G.n
        if hit:
            report.findings.append((write_graph6(G), f"n={G.n} TID={t}"))
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


# --- dispatch ------------------------------------------------------------

DEFAULT_MAX_N = {
    "prop-2.1": 7, "thm-2.4": 7, "lem-3.1": 10, "thm-3.2": 10, "cor-3.3": 10, "thm-3.4": 7,
    "cor-3.5": 7, "thm-3.6": 12, "thm-4.1": 6, "thm-4.2": 6, "thm-4.3": 6, "thm-4.4": 6,
    "log-lb": 6, "fig-1": 5, "prop-2.2": 12,
}

_TREE_CLAIMS = {"lem-3.1", "thm-3.2", "cor-3.3"}
_GIRTH_CLAIMS = {"thm-3.4", "cor-3.5"}


def default_source(claim: str, max_n: int) -> GraphStream:
    if claim in _TREE_CLAIMS:
        return GraphStream.trees(range(1, max_n + 1))
    if claim in _GIRTH_CLAIMS:
        return GraphStream.connected(range(1, max_n + 1), min_girth=5)
    return GraphStream.connected(range(1, max_n + 1))


def verify(claim: str, max_n: int | None = None, source: GraphStream | None = None, jobs: int = 1) -> Report:
    """Run the checker registered for ``claim`` on its default or a given stream."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")
    if claim in ("prop-4.5", "prop-4.6", "prop-4.7"):
        return verify_family_values(claim)
    if source is None:
        max_n = max_n or DEFAULT_MAX_N[claim]
        if claim == "prop-2.2":
            return verify_family_values(claim, max_n=max_n)
        if claim == "thm-3.6":
            return verify_corona_tightness(max_n)
        source = default_source(claim, max_n)
    elif claim in ("prop-2.2", "thm-3.6"):
        raise ValueError(f"{claim} is checked on generated family members, not on a graph source")
    elif max_n is not None:
        source = GraphStream(lambda s=source: (G for G in s if G.n <= max_n), source.scope() + f" n <= {max_n}")
    if claim == "thm-2.4":
        return verify_characterization(max_n or MEMBER_MAX_N, source, jobs=jobs)
    if claim == "fig-1":
        return verify_hierarchy(source, max_n or DEFAULT_MAX_N["fig-1"])
    return verify_bound(claim, source, jobs=jobs)


def extremal_examples() -> list[Graph]:
    """A few small members of each extremal family, for demonstrations."""
    return [star(5), a_k(3), family_A((1, 1, 2)), extremal_tid((), True, 2), extremal_tid((1,), True, 1)]


__all__ = [
    "CLAIMS", "CLAIM_SUMMARIES", "Report", "is_extremal_member", "verify", "verify_bound",
    "verify_characterization", "verify_hierarchy", "verify_family_values", "verify_corona_tightness",
    "search_girth5_tight", "run_checker", "default_jobs", "check_hierarchy",
]
