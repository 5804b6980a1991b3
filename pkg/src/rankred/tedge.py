"""Gadget between minimum t-edge subgraph and transversal rank reduction, and
a densest k-subgraph approximator driven by any t-edge strategy.

Gadget layout for a graph G with n vertices and m edges (edges indexed by
position in ``G.edge_list``):

* A-index ``c * n + v`` is copy ``c`` (0-based) of vertex ``v``, for c < n;
* A-index ``n*n + i`` is the E'-copy of edge ``i``;
* B-index ``n*n + m + i`` is edge ``i`` itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Callable, Iterable

from rankred.errors import InfeasibleError, InputError, StrategyFault
from rankred.exact import DEFAULT_CAP, min_t_edge_exact
from rankred.graphs import BipartiteGraph, Edge, Graph, deficiency_witness
from rankred.matroids import TransversalModel, rank_transversal


@dataclass(frozen=True)
class TEdgeGadget:
    host: TransversalModel
    source: Graph
    t: int

    @property
    def n(self) -> int:
        return self.source.order

    @property
    def m(self) -> int:
        return self.source.size

    @property
    def graph(self) -> BipartiteGraph:
        return self.host.model

    def vertex_copy(self, v: int, copy: int) -> int:
        return copy * self.n + v

    def edge_copy(self, i: int) -> int:
        """A-index of the E'-copy of edge i."""
        return self.n * self.n + i

    def edge_b(self, i: int) -> int:
        return self.n * self.n + self.m + i

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.source.edge_list)}

    @cached_property
    def decode(self) -> dict[int, tuple]:
        """Index -> ("v", vertex, copy) or ("e", u, v) for A; ("b", u, v) for B."""
        out: dict[int, tuple] = {}
        n = self.n
        for c in range(n):
            for v in range(n):
                out[self.vertex_copy(v, c)] = ("v", v, c)
        for i, (u, v) in enumerate(self.source.edge_list):
            out[self.edge_copy(i)] = ("e", u, v)
            out[self.edge_b(i)] = ("b", u, v)
        return out

    def b_edge(self, b: int) -> Edge:
        """The source edge behind a B-index."""
        return self.source.edge_list[b - self.n * self.n - self.m]


@dataclass(frozen=True)
class CanonicalPair:
    """Solution X and witness Y with |Y| = t and X = all n copies of V(G_Y)
    plus t E'-copies of edges of G_Y."""

    x: frozenset[int]
    y: frozenset[int]
    gadget: TEdgeGadget = field(compare=False, repr=False)

    @property
    def subgraph(self) -> Graph:
        """G_Y as a subgraph on the source vertex set."""
        return Graph(self.gadget.n, frozenset(self.gadget.b_edge(b) for b in self.y))

    @property
    def subgraph_vertices(self) -> frozenset[int]:
        return frozenset(v for b in self.y for v in self.gadget.b_edge(b))

    def problems(self) -> list[str]:
        gad = self.gadget
        out = []
        if len(self.y) != gad.t:
            out.append(f"|Y| = {len(self.y)} but t = {gad.t}")
        verts = self.subgraph_vertices
        copies = {gad.vertex_copy(v, c) for v in verts for c in range(gad.n)}
        y_copies = {gad.edge_copy(gad.edge_index[gad.b_edge(b)]) for b in self.y}
        if not copies <= self.x:
            out.append("X misses a vertex copy of G_Y")
        rest = self.x - copies
        if len(rest) != gad.t or not rest <= y_copies:
            out.append("X is not all vertex copies plus t E'-copies of G_Y")
        return out


def build_t_edge_gadget(g: Graph, t: int) -> TEdgeGadget:
    """Bipartite host H with A = n vertex-copies of V plus E', B = E."""
    if not 1 <= t <= g.size:
        raise InputError(f"t={t} outside 1..{g.size}")
    n, m = g.order, g.size
    side_a = tuple(range(n * n + m))
    side_b = tuple(range(n * n + m, n * n + 2 * m))
    edges = set()
    for i, (u, v) in enumerate(g.edge_list):
        b = n * n + m + i
        edges.add((n * n + i, b))
        for c in range(n):
            edges.add((c * n + u, b))
            edges.add((c * n + v, b))
    return TEdgeGadget(TransversalModel(BipartiteGraph(side_a, side_b, frozenset(edges))), g, t)


def witness_slack(gad: TEdgeGadget, x: Iterable[int], y: Iterable[int]) -> int:
    """(|Y| - t) - |N_H(Y) \\ X|; non-negative exactly when Y witnesses X."""
    x, y = set(x), set(y)
    return len(y) - gad.t - len(gad.graph.neighborhood(y) - x)


def verify_pair(gad: TEdgeGadget, x: Iterable[int], y: Iterable[int]) -> bool:
    """Check |N_H(Y) \\ X| <= |Y| - t, re-confirming the rank drop when it holds."""
    x, y = frozenset(x), frozenset(y)
    if not x <= set(gad.graph.side_a) or not y <= set(gad.graph.side_b):
        raise InputError("X must lie in A and Y in B")
    ok = witness_slack(gad, x, y) >= 0
    if ok:
        after = rank_transversal(gad.host, x)
        if after > gad.m - gad.t:
            raise AssertionError(f"witness holds but r(A \\ X) = {after} > {gad.m} - {gad.t}")
    return ok


def subgraph_to_pair(gad: TEdgeGadget, sub: Iterable[Edge]) -> CanonicalPair:
    """Y = the B-copies of the t chosen edges, X = N_H(Y)."""
    sub = {(u, v) if u < v else (v, u) for u, v in sub}
    if len(sub) != gad.t:
        raise InputError(f"expected {gad.t} edges, got {len(sub)}")
    missing = sub - gad.source.edges
    if missing:
        raise InputError(f"{sorted(missing)[0]} is not an edge of the source graph")
    y = frozenset(gad.edge_b(gad.edge_index[e]) for e in sub)
    pair = CanonicalPair(frozenset(gad.graph.neighborhood(y)), y, gad)
    assert len(pair.x) == gad.n * len(pair.subgraph_vertices) + gad.t
    return pair


def pair_to_subgraph(p: CanonicalPair) -> frozenset[int]:
    """Vertex set of G_Y."""
    bad = p.problems()
    if bad:
        raise InputError("pair is not canonical: " + "; ".join(bad))
    verts = p.subgraph_vertices
    assert p.gadget.source.induced_edge_count(verts) >= p.gadget.t
    return verts


def canonicalize(gad: TEdgeGadget, x: Iterable[int]) -> CanonicalPair:
    """Turn any feasible X into a canonical pair no larger than X.

    Finds a Hall witness Y for X, keeps t edges of Y whose E'-copies lie in X
    (at least t always do), and rebuilds X from those t edges.
    """
    x = frozenset(x)
    if not x <= set(gad.graph.side_a):
        raise InputError("X must lie in A")
    after = rank_transversal(gad.host, x)
    if after > gad.m - gad.t:
        raise InfeasibleError(f"r(A \\ X) = {after} > r(A) - t = {gad.m - gad.t}")
    y = deficiency_witness(gad.graph.without_vertices(x), gad.t)
    assert y is not None and witness_slack(gad, x, y) >= 0
    in_x = [b for b in sorted(y) if gad.edge_copy(gad.edge_index[gad.b_edge(b)]) in x]
    assert len(in_x) >= gad.t
    keep = in_x[: gad.t]
    pair = subgraph_to_pair(gad, [gad.b_edge(b) for b in keep])
    assert len(pair.x) <= len(x) and verify_pair(gad, pair.x, pair.y)
    return pair


Strategy = Callable[[Graph, int], Iterable[int]]


def _vertex_set(result) -> frozenset[int]:
    return frozenset(getattr(result, "vertices", result))


def dks_harness(g: Graph, k: int, strategy: Strategy, approx_factor: int = 1) -> frozenset[int]:
    """Densest k-subgraph from a t-edge strategy run for every t = 1..m.

    With a strategy within ``approx_factor`` of optimal for every t, the
    returned k vertices induce at least z* / (9 * approx_factor**2) edges.
    """
    n, m = g.order, g.size
    if not 2 <= k <= n:
        raise InputError(f"k={k} outside 2..{n}")
    if approx_factor < 1:
        raise InputError("approx_factor must be a positive integer")
    if m == 0:
        return frozenset(range(k))

    found: list[frozenset[int]] = [frozenset()]  # 1-based
    for t in range(1, m + 1):
        vs = _vertex_set(strategy(g, t))
        if not all(0 <= v < n for v in vs):
            raise StrategyFault(f"t={t}: strategy returned a vertex outside the graph")
        got = g.induced_edge_count(vs)
        if got < t:
            raise StrategyFault(f"t={t}: strategy's vertex set induces only {got} edges")
        found.append(vs)
    # a (t+1)-edge certificate also certifies t edges
    for i in range(m - 1, 0, -1):
        if len(found[i]) > len(found[i + 1]):
            found[i] = found[i + 1]

    limit = k * approx_factor
    if len(found[m]) <= limit:
        t_prime = m
    else:
        t_prime = next((i for i in range(1, m) if len(found[i]) <= limit < len(found[i + 1])), 1)
    best_set = found[t_prime]

    if len(best_set) <= k:
        outside = [v for v in range(n) if v not in best_set]
        return frozenset(best_set) | frozenset(outside[: k - len(best_set)])

    half = k // 2
    ordered = sorted(best_set)
    q = math.ceil(len(ordered) / half)
    parts = [ordered[i * half:(i + 1) * half] for i in range(q)]
    best_pair, best_count = None, -1
    for i, j in combinations(range(q), 2):
        c = g.induced_edge_count(parts[i] + parts[j])
        if c > best_count:
            best_pair, best_count = (i, j), c
    i, j = best_pair
    chosen = set(parts[i]) | set(parts[j])
    pad = [v for v in ordered if v not in chosen]
    pad += [v for v in range(n) if v not in best_set]
    chosen.update(pad[: k - len(chosen)])
    assert len(chosen) == k
    return frozenset(chosen)


def exact_strategy(cap: int | None = None) -> Strategy:
    """min_t_edge_exact as a harness strategy."""
    limit = DEFAULT_CAP if cap is None else cap
    return lambda g, t: min_t_edge_exact(g, t, limit).vertices
