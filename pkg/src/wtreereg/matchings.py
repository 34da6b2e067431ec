"""Induced-matching invariants.

nu(G) is the maximum size of an induced matching: edges pairwise sharing no
vertex and with no edge of G joining endpoints of distinct members.  The
constrained variant forces one edge into the matching.  Weights are ignored
throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownEdge
from .wgraph import WeightedGraph, edge_key

BRUTE_FORCE_EDGE_LIMIT = 16


@dataclass(frozen=True)
class MatchingResult:
    size: int
    witness: tuple[tuple[str, str], ...]


def _is_forest(G: WeightedGraph) -> bool:
    # a graph is a forest iff every component has |E| = |V| - 1; equivalently
    # no cycle, checked by counting while BFS-ing
    seen: set[str] = set()
    for root in G.vertices:
        if root in seen:
            continue
        comp_v = 0
        comp_deg = 0
        stack = [root]
        seen.add(root)
        while stack:
            v = stack.pop()
            comp_v += 1
            comp_deg += G.degree(v)
            for w in G.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if comp_deg // 2 != comp_v - 1:
            return False
    return True


def _nu_forest(G: WeightedGraph) -> int:
    """3-state DP over each rooted component.

    f0: v is not an endpoint and no child of v is an endpoint;
    f1: v is not an endpoint;
    f2: v is matched to one of its children.
    """
    NEG = float("-inf")
    total = 0
    visited: set[str] = set()
    for root in G.vertices:
        if root in visited:
            continue
        # iterative post-order
        order = []
        parent = {root: None}
        stack = [root]
        visited.add(root)
        while stack:
            v = stack.pop()
            order.append(v)
            for w in G.neighbors(v):
                if w not in parent:
                    parent[w] = v
                    visited.add(w)
                    stack.append(w)
        f0: dict[str, float] = {}
        f1: dict[str, float] = {}
        f2: dict[str, float] = {}
        children: dict[str, list[str]] = {v: [] for v in order}
        for v in order:
            if parent[v] is not None:
                children[parent[v]].append(v)
        for v in reversed(order):
            cs = children[v]
            if not cs:
                f0[v] = f1[v] = 0
                f2[v] = NEG
                continue
            f0[v] = sum(f1[c] for c in cs)
            f1[v] = sum(max(f1[c], f2[c]) for c in cs)
            best = NEG
            base = f0[v]  # sum of f1 over children
            for c in cs:
                cand = 1 + f0[c] + base - f1[c]
                if cand > best:
                    best = cand
            f2[v] = best
        total += int(max(f1[root], f2[root]))
    return total


def _nu_brute(G: WeightedGraph) -> int:
    edges = list(G.edges)
    nbrs = {v: set(G.neighbors(v)) for v in G.vertices}
    best = 0

    def extend(idx: int, blocked: set[str], size: int):
        nonlocal best
        if size > best:
            best = size
        if size + (len(edges) - idx) <= best:
            return
        for j in range(idx, len(edges)):
            u, v = edges[j]
            if u in blocked or v in blocked:
                continue
            extra = {u, v} | nbrs[u] | nbrs[v]
            extend(j + 1, blocked | extra, size + 1)

    extend(0, set(), 0)
    return best


def _nu(G: WeightedGraph) -> int:
    if _is_forest(G):
        return _nu_forest(G)
    if len(G.edges) <= BRUTE_FORCE_EDGE_LIMIT:
        return _nu_brute(G)
    raise ValueError("induced matching supported only on forests or graphs with <= 16 edges")


def _without_closed_nbhd(G: WeightedGraph, vertices) -> WeightedGraph:
    return G.delete(vertices=G.closed_neighborhood(vertices))


def _lex_witness(G: WeightedGraph, target: int) -> tuple[tuple[str, str], ...]:
    """Greedy reconstruction of the lexicographically smallest maximum witness."""
    chosen: list[tuple[str, str]] = []
    H = G
    while len(chosen) < target:
        for e in H.edges:
            rest = _without_closed_nbhd(H, e)
            if 1 + len(chosen) + _nu(rest) == target:
                chosen.append(e)
                H = rest
                break
        else:  # pragma: no cover - only reachable if target were wrong
            raise AssertionError("witness reconstruction failed")
    return tuple(chosen)


def induced_matching_number(G: WeightedGraph) -> MatchingResult:
    size = _nu(G)
    witness = _lex_witness(G, size) if size else ()
    return MatchingResult(size=size, witness=witness)


def _brute_containing(G: WeightedGraph, e: tuple[str, str]) -> int:
    """Exhaustive max induced matching forced to contain e; independent of the
    neighborhood-deletion reduction."""
    edges = list(G.edges)
    nbrs = {v: set(G.neighbors(v)) for v in G.vertices}
    u0, v0 = e
    best = 0

    def conflict(f, members) -> bool:
        a, b = f
        for m in members:
            for x in m:
                if a == x or b == x or a in nbrs[x] or b in nbrs[x]:
                    return True
        return False

    def extend(idx: int, members: list, size: int):
        nonlocal best
        if size > best:
            best = size
        for j in range(idx, len(edges)):
            f = edges[j]
            if not conflict(f, members):
                members.append(f)
                extend(j + 1, members, size + 1)
                members.pop()

    start = [edge_key(u0, v0)]
    extend(0, start, 1)
    return best


def constrained_matching_number(G: WeightedGraph, e: tuple[str, str]) -> MatchingResult:
    """Maximum induced matching containing e, as nu of the graph minus the
    closed neighborhood of e's endpoints, plus one."""
    u, v = e
    if not G.has_edge(u, v):
        raise UnknownEdge(f"{u}-{v}")
    reduced = _without_closed_nbhd(G, (u, v))
    size = _nu(reduced) + 1
    if len(G.edges) <= BRUTE_FORCE_EDGE_LIMIT:
        brute = _brute_containing(G, e)
        if brute != size:
            raise AssertionError(
                f"constrained matching mismatch at {e}: reduction {size}, brute force {brute}"
            )
    inner = _lex_witness(reduced, size - 1) if size > 1 else ()
    witness = tuple(sorted((edge_key(u, v),) + inner))
    return MatchingResult(size=size, witness=witness)
