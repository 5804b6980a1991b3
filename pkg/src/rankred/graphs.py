"""Simple graphs, bipartite graphs, maximum matchings, König covers and Hall
deficiency witnesses.

Vertices are dense integers. Labels, when present, live in a side table and
never take part in the algorithms.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from rankred.errors import InputError, NotMaximumError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0 .. vertex_count - 1``."""

    vertex_count: int
    edges: frozenset[Edge] = frozenset()
    labels: Mapping[int, str] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise InputError("vertex_count must be non-negative")
        normed = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InputError(f"edge {e} has an endpoint outside 0..{self.vertex_count - 1}")
            normed.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], labels=None) -> Graph:
        edges = list(edges)
        if len({_norm(*e) for e in edges}) != len(edges):
            raise InputError("duplicate edge")
        return cls(n, frozenset(edges), labels)

    @property
    def order(self) -> int:
        """|G|, the number of vertices."""
        return self.vertex_count

    @property
    def size(self) -> int:
        """||G||, the number of edges."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        """Edges in sorted order; positions in this tuple are edge indices."""
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        vs = set(vertices)
        return [e for e in self.edge_list if e[0] in vs and e[1] in vs]

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        vs = set(vertices)
        return sum(1 for u, v in self.edges if u in vs and v in vs)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        return all(self.has_edge(u, v) for u, v in combinations(sorted(set(vertices)), 2))

    def component_count(self, edges: Iterable[Edge] | None = None) -> int:
        """Connected components of (V, edges); all edges when omitted."""
        parent = list(range(self.vertex_count))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = self.vertex_count
        for u, v in self.edges if edges is None else edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count -= 1
        return count

    def disjoint_union(self, other: Graph) -> Graph:
        off = self.vertex_count
        shifted = {(u + off, v + off) for u, v in other.edges}
        return Graph(off + other.vertex_count, self.edges | shifted)

    def delete_vertices(self, doomed: Iterable[int]) -> tuple[Graph, list[int]]:
        """Remove vertices and relabel survivors densely.

        Returns the new graph and ``old_of_new``, mapping each new index to
        the original vertex.
        """
        gone = set(doomed)
        old_of_new = [v for v in self.vertices if v not in gone]
        new_of_old = {v: i for i, v in enumerate(old_of_new)}
        edges = {
            (new_of_old[u], new_of_old[v])
            for u, v in self.edges
            if u not in gone and v not in gone
        }
        labels = None
        if self.labels is not None:
            labels = {new_of_old[v]: s for v, s in self.labels.items() if v not in gone}
        return Graph(len(old_of_new), frozenset(edges), labels), old_of_new

    # small named families, mostly for tests and examples
    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, frozenset(combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, n: int) -> Graph:
        """Star on ``n`` vertices with center 0."""
        return cls(n, frozenset((0, i) for i in range(1, n)))


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with explicit sides; every edge is an ``(a, b)`` pair."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "side_a", tuple(self.side_a))
        object.__setattr__(self, "side_b", tuple(self.side_b))
        object.__setattr__(self, "edges", frozenset(self.edges))
        a_set, b_set = set(self.side_a), set(self.side_b)
        if len(a_set) != len(self.side_a) or len(b_set) != len(self.side_b):
            raise InputError("repeated vertex within a side")
        if a_set & b_set:
            raise InputError("sides are not disjoint")
        for a, b in self.edges:
            if a not in a_set or b not in b_set:
                raise InputError(f"edge ({a}, {b}) does not join side A to side B")

    @classmethod
    def from_sizes(cls, n_a: int, n_b: int, edges: Iterable[Edge]) -> BipartiteGraph:
        """Side A is ``0..n_a-1``, side B is ``n_a..n_a+n_b-1``; edges use those ids."""
        return cls(tuple(range(n_a)), tuple(range(n_a, n_a + n_b)), frozenset(edges))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.side_a + self.side_b

    @cached_property
    def edge_list(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adj_a(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {a: [] for a in self.side_a}
        for a, b in self.edges:
            adj[a].append(b)
        return {a: tuple(sorted(bs)) for a, bs in adj.items()}

    @cached_property
    def adj_b(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {b: [] for b in self.side_b}
        for a, b in self.edges:
            adj[b].append(a)
        return {b: tuple(sorted(as_)) for b, as_ in adj.items()}

    def neighborhood(self, ys: Iterable[int]) -> set[int]:
        """N(Y) for a set Y of B-vertices."""
        out: set[int] = set()
        for y in ys:
            out.update(self.adj_b[y])
        return out

    def without_vertices(self, doomed: Iterable[int]) -> BipartiteGraph:
        gone = set(doomed)
        return BipartiteGraph(
            tuple(a for a in self.side_a if a not in gone),
            tuple(b for b in self.side_b if b not in gone),
            frozenset((a, b) for a, b in self.edges if a not in gone and b not in gone),
        )

    def without_edges(self, doomed: Iterable[Edge]) -> BipartiteGraph:
        return BipartiteGraph(self.side_a, self.side_b, self.edges - frozenset(doomed))

    def to_graph(self) -> tuple[Graph, list[int]]:
        """Relabel to a plain Graph on ``0..|A|+|B|-1`` (A first, then B).

        Returns the graph and the list mapping new index to original vertex.
        """
        order = list(self.vertices)
        idx = {v: i for i, v in enumerate(order)}
        return Graph(len(order), frozenset((idx[a], idx[b]) for a, b in self.edges)), order


@dataclass(frozen=True)
class Matching:
    """A set of vertex-disjoint ``(a, b)`` edges."""

    pairs: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        seen: set[int] = set()
        for a, b in self.pairs:
            if a in seen or b in seen or a == b:
                raise InputError(f"pair ({a}, {b}) shares an endpoint with another pair")
            seen.update((a, b))

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    @cached_property
    def mate(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairs:
            out[a] = b
            out[b] = a
        return out


def max_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching by Hopcroft-Karp, O(E sqrt(V)).

    Deterministic: vertices and neighbours are scanned in sorted order.
    """
    INF = float("inf")
    mate_a: dict[int, int | None] = {a: None for a in g.side_a}
    mate_b: dict[int, int | None] = {b: None for b in g.side_b}
    adj = g.adj_a
    order_a = sorted(g.side_a)

    def bfs() -> tuple[bool, dict[int, float]]:
        dist: dict[int, float] = {}
        queue: deque[int] = deque()
        for a in order_a:
            if mate_a[a] is None:
                dist[a] = 0
                queue.append(a)
            else:
                dist[a] = INF
        found = False
        while queue:
            a = queue.popleft()
            for b in adj[a]:
                nxt = mate_b[b]
                if nxt is None:
                    found = True
                elif dist[nxt] == INF:
                    dist[nxt] = dist[a] + 1
                    queue.append(nxt)
        return found, dist

    def dfs(a: int, dist: dict[int, float]) -> bool:
        # iterative DFS along the layered graph
        stack = [(a, iter(adj[a]))]
        path: list[tuple[int, int]] = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for b in it:
                nxt = mate_b[b]
                if nxt is None:
                    path.append((u, b))
                    for pa, pb in path:
                        mate_a[pa] = pb
                        mate_b[pb] = pa
                    return True
                if dist[nxt] == dist[u] + 1:
                    path.append((u, b))
                    stack.append((nxt, iter(adj[nxt])))
                    advanced = True
                    break
            if not advanced:
                dist[u] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while True:
        found, dist = bfs()
        if not found:
            break
        for a in order_a:
            if mate_a[a] is None:
                dfs(a, dist)
    return Matching(frozenset((a, b) for a, b in mate_a.items() if b is not None))


def augmenting_path_matching(g: BipartiteGraph) -> Matching:
    """Plain one-path-at-a-time augmentation (Kuhn). Slower; used as a second route."""
    mate_b: dict[int, int] = {}

    def try_augment(a: int, seen: set[int]) -> bool:
        for b in g.adj_a[a]:
            if b in seen:
                continue
            seen.add(b)
            if b not in mate_b or try_augment(mate_b[b], seen):
                mate_b[b] = a
                return True
        return False

    for a in sorted(g.side_a):
        try_augment(a, set())
    return Matching(frozenset((a, b) for b, a in mate_b.items()))


def _check_matching_of(g: BipartiteGraph, m: Matching) -> None:
    for pair in m.pairs:
        if pair not in g.edges:
            raise InputError(f"matching pair {pair} is not an edge of the graph")


def _alternating_reach(g: BipartiteGraph, m: Matching, from_side_b: bool) -> tuple[set[int], set[int]]:
    """Vertices reachable by alternating paths from the unmatched vertices of
    one side. Returns ``(reached_a, reached_b)``."""
    mate = m.mate
    reached_a: set[int] = set()
    reached_b: set[int] = set()
    queue: deque[int] = deque()
    starts = g.side_b if from_side_b else g.side_a
    for v in starts:
        if v not in mate:
            (reached_b if from_side_b else reached_a).add(v)
            queue.append(v)
    while queue:
        v = queue.popleft()
        if v in reached_b:
            if from_side_b:
                nbrs = [a for a in g.adj_b[v] if mate.get(v) != a]
            else:
                nbrs = [mate[v]] if v in mate else []
            for a in nbrs:
                if a not in reached_a:
                    reached_a.add(a)
                    queue.append(a)
        else:
            if from_side_b:
                nbrs = [mate[v]] if v in mate else []
            else:
                nbrs = [b for b in g.adj_a[v] if mate.get(v) != b]
            for b in nbrs:
                if b not in reached_b:
                    reached_b.add(b)
                    queue.append(b)
    return reached_a, reached_b


def konig_cover(g: BipartiteGraph, m: Matching) -> frozenset[int]:
    """Minimum vertex cover of size |m| built from a maximum matching.

    Raises NotMaximumError if an augmenting path exists.
    """
    _check_matching_of(g, m)
    reached_a, reached_b = _alternating_reach(g, m, from_side_b=False)
    mate = m.mate
    for b in reached_b:
        if b not in mate:
            raise NotMaximumError(f"augmenting path ends at unmatched B-vertex {b}")
    cover = frozenset(a for a in g.side_a if a not in reached_a) | frozenset(reached_b)
    assert len(cover) == len(m)
    return cover


def deficiency_witness(g: BipartiteGraph, t: int) -> frozenset[int] | None:
    """A set Y of B-vertices with |N(Y)| <= |Y| - t, or None if none exists.

    Y is the set of B-vertices reachable by alternating paths from the
    B-vertices left unmatched by ``max_matching(g)``. Such a Y exists exactly
    when the matching number is at most |B| - t.
    """
    if t < 1:
        raise InputError("t must be at least 1")
    m = max_matching(g)
    if len(m) > len(g.side_b) - t:
        return None
    reached_a, reached_b = _alternating_reach(g, m, from_side_b=True)
    y = frozenset(reached_b)
    assert len(g.neighborhood(y)) == len(reached_a) <= len(y) - t
    return y
