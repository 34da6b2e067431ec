"""Edge-weighted simple graphs and trees.

Vertices are opaque strings ordered lexicographically.  An edge is stored as
the sorted pair (u, v) and carries a positive integer weight; weight >= 2
makes the edge non-trivial.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .errors import NotATree, NotIntegrallyClosed, TrivialWeights, UnknownEdge, UnknownVertex


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Canonical form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


class WeightedGraph:
    """Immutable simple graph with positive integer edge weights."""

    def __init__(self, vertices: Iterable[str], edges: Mapping[tuple[str, str], int] | Iterable):
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("duplicate vertex identifiers")
        self.vertices: tuple[str, ...] = tuple(sorted(vs))
        vset = set(self.vertices)

        if isinstance(edges, Mapping):
            items = edges.items()
        else:
            # iterable of (u, v, w) or ((u, v), w)
            items = []
            for entry in edges:
                if len(entry) == 3:
                    u, v, w = entry
                    items.append(((u, v), w))
                else:
                    items.append(tuple(entry))

        weight: dict[tuple[str, str], int] = {}
        for (u, v), w in items:
            if u not in vset:
                raise UnknownVertex(u)
            if v not in vset:
                raise UnknownVertex(v)
            if u == v:
                raise ValueError(f"loop at {u}")
            if not isinstance(w, int) or w < 1:
                raise ValueError(f"weight of {u}{v} must be a positive integer, got {w!r}")
            k = edge_key(u, v)
            if k in weight:
                raise ValueError(f"parallel edge {k}")
            weight[k] = w

        self._weight = weight
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(weight))
        adj: dict[str, dict[str, int]] = {v: {} for v in self.vertices}
        for (u, v), w in weight.items():
            adj[u][v] = w
            adj[v][u] = w
        self._adj = adj

    # -- basic queries ------------------------------------------------------

    def has_vertex(self, v: str) -> bool:
        return v in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._weight

    def weight(self, u: str, v: str) -> int:
        k = edge_key(u, v)
        if k not in self._weight:
            raise UnknownEdge(f"{u}-{v}")
        return self._weight[k]

    def neighbors(self, v: str) -> tuple[str, ...]:
        if v not in self._adj:
            raise UnknownVertex(v)
        return tuple(sorted(self._adj[v]))

    def degree(self, v: str) -> int:
        if v not in self._adj:
            raise UnknownVertex(v)
        return len(self._adj[v])

    @property
    def non_trivial_edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(e for e in self.edges if self._weight[e] >= 2)

    def is_trivially_weighted(self) -> bool:
        return all(w == 1 for w in self._weight.values())

    def closed_neighborhood(self, vertices: Iterable[str]) -> set[str]:
        """The given vertices together with all their neighbors."""
        out = set()
        for v in vertices:
            if v not in self._adj:
                raise UnknownVertex(v)
            out.add(v)
            out.update(self._adj[v])
        return out

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for w in self._adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == len(self.vertices)

    def is_tree(self) -> bool:
        return len(self.edges) == len(self.vertices) - 1 and self.is_connected()

    def is_path_graph(self) -> bool:
        if not self.is_tree():
            return False
        if len(self.vertices) == 1:
            return True
        degs = [self.degree(v) for v in self.vertices]
        return max(degs) <= 2

    def tree_path(self, a: str, b: str) -> list[str]:
        """The unique path between two vertices of a tree (BFS parent trace)."""
        if a not in self._adj:
            raise UnknownVertex(a)
        if b not in self._adj:
            raise UnknownVertex(b)
        parent: dict[str, Optional[str]] = {a: None}
        queue = deque([a])
        while queue:
            v = queue.popleft()
            if v == b:
                break
            for w in sorted(self._adj[v]):
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if b not in parent:
            raise ValueError(f"{a} and {b} are not connected")
        path = [b]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def delete(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()) -> "WeightedGraph":
        """Induced subgraph on the remaining vertices, minus the listed edges."""
        drop_v = set(vertices)
        for v in drop_v:
            if v not in self._adj:
                raise UnknownVertex(v)
        drop_e = set()
        for u, v in edges:
            k = edge_key(u, v)
            if k not in self._weight:
                raise UnknownEdge(f"{u}-{v}")
            drop_e.add(k)
        keep_v = [v for v in self.vertices if v not in drop_v]
        keep = {
            e: w
            for e, w in self._weight.items()
            if e not in drop_e and e[0] not in drop_v and e[1] not in drop_v
        }
        return WeightedGraph(keep_v, keep)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"u": u, "v": v, "w": self._weight[(u, v)]} for u, v in self.edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "WeightedGraph":
        edges = {}
        for e in data.get("edges", []):
            edges[(e["u"], e["v"])] = int(e.get("w", 1))
        return cls(data.get("vertices", []), edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._weight == other._weight

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self._weight.items()))))

    def __repr__(self):
        return f"WeightedGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"


@dataclass(frozen=True)
class SpineData:
    """The distinguished longest path containing all non-trivial edges.

    heavy_index is 1-based: e_i = path[i-1] path[i].  omega_i_plus_2 is None
    when the spine has no edge e_{i+2}.
    """

    path: tuple[str, ...]
    heavy_index: int
    omega_i: int
    omega_i_plus_2: Optional[int]
    d: int
    per_vertex_d: dict[str, int] = field(compare=False)

    @property
    def k(self) -> int:
        return len(self.path)

    def edge(self, t: int) -> tuple[str, str]:
        """Spine edge e_t = x_t x_{t+1}, 1-based."""
        if not 1 <= t <= self.k - 1:
            raise IndexError(f"no spine edge e_{t}")
        return edge_key(self.path[t - 1], self.path[t])

    def weight_seq(self, G: WeightedGraph) -> tuple[int, ...]:
        return tuple(G.weight(self.path[t], self.path[t + 1]) for t in range(self.k - 1))

    def to_json(self) -> dict:
        return {
            "path": list(self.path),
            "heavy_index": self.heavy_index,
            "omega_i": self.omega_i,
            "omega_i_plus_2": self.omega_i_plus_2,
            "d": self.d,
        }


def is_integrally_closed(G: WeightedGraph) -> bool:
    """Combinatorial criterion: no heavy induced P3, no isolated heavy edge
    pair, no all-heavy triangle."""
    heavy = G.non_trivial_edges
    if not heavy:
        return True
    for e, f in combinations(heavy, 2):
        shared = set(e) & set(f)
        if len(shared) == 1:
            u = (set(e) - shared).pop()
            v = (set(f) - shared).pop()
            if not G.has_edge(u, v):
                return False  # induced P3, both edges heavy
            if G.weight(u, v) >= 2:
                return False  # triangle, all edges heavy
        elif not shared:
            cross = any(G.has_edge(a, b) for a in e for b in f)
            if not cross:
                return False  # two isolated heavy edges
    return True


def non_trivial_spine(T: WeightedGraph) -> SpineData:
    """Longest induced path containing all non-trivial edges, oriented so the
    heavy index is minimal.  Ties go to the lexicographically smallest vertex
    sequence."""
    if not T.is_tree():
        raise NotATree("spine extraction needs a tree")
    heavy = T.non_trivial_edges
    if not heavy:
        raise TrivialWeights("all weights are 1; there is no spine")
    if not is_integrally_closed(T):
        raise NotIntegrallyClosed("tree is not integrally closed")

    heavy_set = set(heavy)
    best_key = None
    best_path = None
    for a, b in combinations(T.vertices, 2):
        path = T.tree_path(a, b)
        on_path = {edge_key(path[t], path[t + 1]) for t in range(len(path) - 1)}
        if not heavy_set <= on_path:
            continue
        seq = tuple(path)
        rev = tuple(reversed(path))
        key = (-len(path), min(seq, rev))
        if best_key is None or key < best_key:
            best_key = key
            best_path = seq
    if best_path is None:
        # cannot happen for an integrally closed tree, but keep the error honest
        raise NotIntegrallyClosed("no single path contains all non-trivial edges")

    k = len(best_path)
    candidates = []
    for seq in (best_path, tuple(reversed(best_path))):
        w = [T.weight(seq[t], seq[t + 1]) for t in range(k - 1)]
        wmax = max(w)
        heavy_pos = {t + 1 for t, wt in enumerate(w) if wt >= 2}
        for i in range(1, k):
            if w[i - 1] != wmax:
                continue
            if heavy_pos <= {i, i + 2}:
                candidates.append((i, seq))
                break  # smallest valid i for this orientation
    if not candidates:
        raise NotIntegrallyClosed("non-trivial edges do not fit the e_i / e_{i+2} pattern")
    i, seq = min(candidates)
    omega_i = T.weight(seq[i - 1], seq[i])
    omega_i_plus_2 = None
    if i + 2 <= k - 1:
        omega_i_plus_2 = T.weight(seq[i + 1], seq[i + 2])
    d, per_vertex = _distances_to_spine(T, seq)
    return SpineData(
        path=seq,
        heavy_index=i,
        omega_i=omega_i,
        omega_i_plus_2=omega_i_plus_2,
        d=d,
        per_vertex_d=per_vertex,
    )


def _distances_to_spine(T: WeightedGraph, spine: tuple[str, ...]) -> tuple[int, dict[str, int]]:
    dist = {v: 0 for v in spine}
    queue = deque(spine)
    while queue:
        v = queue.popleft()
        for w in T.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    # unreachable vertices would mean the input was not connected
    d = max(dist.values()) if dist else 0
    return d, dist


def distance_profile(T: WeightedGraph, s: SpineData) -> tuple[int, dict[str, int]]:
    """Max and per-vertex graph distance to the spine."""
    return _distances_to_spine(T, s.path)


def is_caterpillar(T: WeightedGraph) -> bool:
    """True iff deleting all leaves leaves nothing or a simple path."""
    if not T.is_tree():
        raise NotATree("caterpillar test needs a tree")
    leaves = [v for v in T.vertices if T.degree(v) <= 1]
    rest = T.delete(vertices=leaves)
    if not rest.vertices:
        return True
    return rest.is_path_graph()


def delete(G: WeightedGraph, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()) -> WeightedGraph:
    """Module-level alias for WeightedGraph.delete."""
    return G.delete(vertices, edges)
