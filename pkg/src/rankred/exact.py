"""Exact solvers.

``solve_partition_rankred`` is polynomial (knapsack DP over block caps). The
rest are exhaustive and refuse to run beyond an enumeration cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from rankred.errors import CapExceeded, InfeasibleError, InputError
from rankred.graphs import BipartiteGraph, Edge, Graph
from rankred.matroids import GraphicalModel, Model, PartitionModel, rank_partition

DEFAULT_CAP = 16


@dataclass(frozen=True)
class Solution:
    """A removal set X with its certified rank r(E \\ X)."""

    removed: frozenset
    certified_rank_after: int
    rank_before: int
    k: int

    @property
    def size(self) -> int:
        return len(self.removed)

    def check(self) -> None:
        if self.certified_rank_after > self.rank_before - self.k:
            raise AssertionError(
                f"rank after removal {self.certified_rank_after} > {self.rank_before} - {self.k}"
            )


def _check_k(k: int, full_rank: int) -> None:
    if k < 1:
        raise InputError(f"k={k} must be at least 1")
    if k > full_rank:
        raise InfeasibleError(f"k={k} exceeds the full rank {full_rank}")


def _check_cap(size: int, cap: int, what: str) -> None:
    if size > cap:
        raise CapExceeded(f"{what} {size} exceeds the enumeration cap {cap}")


def partition_knapsack(caps: Sequence[int], slacks: Sequence[int], k: int) -> tuple[int, ...]:
    """Block indices J with sum(caps[J]) >= k and sum(slacks[J]) minimum.

    Among optimal J the lexicographically smallest sorted tuple is returned.
    """
    p = len(caps)
    total = sum(caps)
    if not 0 <= k <= total:
        raise InputError(f"target {k} outside 0..{total}")
    INF = float("inf")
    # best[i][v]: least slack from blocks i.. reaching cap sum >= v
    best = [[INF] * (total + 1) for _ in range(p + 1)]
    best[p][0] = 0
    for i in range(p - 1, -1, -1):
        row, nxt = best[i], best[i + 1]
        for v in range(total + 1):
            skip = nxt[v]
            take = slacks[i] + nxt[max(0, v - caps[i])] if caps[i] > 0 else INF
            row[v] = min(skip, take)
    chosen = []
    v = k
    for i in range(p):
        if v <= 0:
            break
        if caps[i] > 0 and slacks[i] + best[i + 1][max(0, v - caps[i])] == best[i][v]:
            chosen.append(i)
            v -= caps[i]
    return tuple(chosen)


def solve_partition_rankred(m: PartitionModel, k: int) -> Solution:
    """Optimal rank reduction on a partition matroid.

    Picks blocks J by knapsack, removes the c_i lowest elements of each chosen
    block, then k more elements from the chosen blocks in block order.
    """
    _check_k(k, m.full_rank)
    caps, slacks = m.caps, m.slacks
    chosen = partition_knapsack(caps, slacks, k)
    removed: list[int] = []
    leftovers: list[list[int]] = []
    for i in chosen:
        elts = sorted(m.blocks[i][0])
        removed.extend(elts[: slacks[i]])
        leftovers.append(elts[slacks[i]:])
    need = k
    for rest in leftovers:
        take = rest[:need]
        removed.extend(take)
        need -= len(take)
    assert need == 0 and len(removed) == k + sum(slacks[i] for i in chosen)
    sol = Solution(frozenset(removed), rank_partition(m, removed), m.full_rank, k)
    sol.check()
    return sol


def _count_vectors(sizes: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    if not sizes:
        if total == 0:
            yield ()
        return
    head, rest = sizes[0], sizes[1:]
    room = sum(rest)
    for c in range(max(0, total - room), min(head, total) + 1):
        for tail in _count_vectors(rest, total - c):
            yield (c,) + tail


def brute_force_rankred(o: Model, k: int, cap: int = DEFAULT_CAP, use_symmetry: bool = True) -> Solution:
    """Minimum removal set by enumeration in increasing size.

    Ties go to the lexicographically smallest tuple of ground positions. With
    ``use_symmetry`` only one representative per orbit of interchangeable
    elements (same block, same neighbourhood) is tested: the one using the
    lowest-positioned members, which is also the lexicographically smallest
    set in its orbit.
    """
    ground = list(o.ground)
    _check_cap(len(ground), cap, "ground set size")
    full = o.full_rank
    _check_k(k, full)
    target = full - k
    pos = {e: i for i, e in enumerate(ground)}

    def result(removed) -> Solution:
        sol = Solution(frozenset(removed), o.rank_after_removal(removed), full, k)
        sol.check()
        return sol

    if not use_symmetry:
        for size in range(len(ground) + 1):
            for combo in combinations(ground, size):
                if o.rank_after_removal(combo) <= target:
                    return result(combo)
    else:
        classes = [sorted(c, key=pos.__getitem__) for c in o.clone_classes()]
        sizes = [len(c) for c in classes]
        for size in range(len(ground) + 1):
            best = None
            for counts in _count_vectors(sizes, size):
                cand = [e for c, n in zip(classes, counts) for e in c[:n]]
                key = sorted(pos[e] for e in cand)
                if best is not None and key >= best[0]:
                    continue
                if o.rank_after_removal(cand) <= target:
                    best = (key, cand)
            if best is not None:
                return result(best[1])
    raise AssertionError("removing the whole ground set always reaches rank 0")


@dataclass(frozen=True)
class TEdgeSubgraph:
    """Vertex set of a minimum t-edge subgraph plus exactly t induced edges."""

    vertices: frozenset[int]
    edges: tuple[Edge, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)


def min_t_edge_exact(g: Graph, t: int, cap: int = DEFAULT_CAP) -> TEdgeSubgraph:
    """Fewest vertices inducing at least t edges (first such set in lex order)."""
    if t < 1:
        raise InputError("t must be at least 1")
    if t > g.size:
        raise InfeasibleError(f"t={t} exceeds the number of edges {g.size}")
    _check_cap(g.order, cap, "vertex count")
    for j in range(2, g.order + 1):
        for combo in combinations(g.vertices, j):
            induced = g.induced_edges(combo)
            if len(induced) >= t:
                return TEdgeSubgraph(frozenset(combo), tuple(induced[:t]))
    raise AssertionError("unreachable: the whole graph induces all edges")


def densest_k_exact(g: Graph, k: int, cap: int = DEFAULT_CAP) -> frozenset[int]:
    """k vertices inducing the most edges (first maximiser in lex order)."""
    if not 0 <= k <= g.order:
        raise InputError(f"k={k} outside 0..{g.order}")
    _check_cap(g.order, cap, "vertex count")
    best, best_count = None, -1
    for combo in combinations(g.vertices, k):
        c = g.induced_edge_count(combo)
        if c > best_count:
            best, best_count = combo, c
    return frozenset(best)


def mvc_exact(g: Graph | BipartiteGraph, k: int, cap: int = DEFAULT_CAP) -> tuple[frozenset[int], int]:
    """k vertices covering the most edges; returns the set and the count."""
    vertices = list(g.vertices)
    edges = g.edge_list
    if not 0 <= k <= len(vertices):
        raise InputError(f"k={k} outside 0..{len(vertices)}")
    _check_cap(len(vertices), cap, "vertex count")
    best, best_count = None, -1
    for combo in combinations(vertices, k):
        s = set(combo)
        c = sum(1 for u, v in edges if u in s or v in s)
        if c > best_count:
            best, best_count = combo, c
    return frozenset(best), best_count


def _components(n: int, edges: Iterable[Edge]) -> int:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    count = 0
    for s in range(n):
        if seen[s]:
            continue
        count += 1
        seen[s] = True
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def min_kcut_exact(g: Graph, k: int, cap: int = DEFAULT_CAP) -> frozenset[Edge]:
    """Fewest edges whose removal adds at least k connected components."""
    base = _components(g.order, g.edges)
    if not 1 <= k <= g.order - base:
        raise InfeasibleError(f"k={k} outside 1..{g.order - base}")
    _check_cap(g.size, cap, "edge count")
    edges = g.edge_list
    for size in range(1, len(edges) + 1):
        for combo in combinations(range(len(edges)), size):
            drop = set(combo)
            rest = (e for i, e in enumerate(edges) if i not in drop)
            if _components(g.order, rest) - base >= k:
                return frozenset(edges[i] for i in combo)
    raise AssertionError("unreachable: removing all edges isolates every vertex")


def kcut_solution(g: Graph, k: int, cap: int = DEFAULT_CAP) -> Solution:
    """min_kcut_exact wrapped as a certified rank-reduction Solution."""
    m = GraphicalModel(g)
    f = min_kcut_exact(g, k, cap)
    sol = Solution(f, m.rank_after_removal(f), m.full_rank, k)
    sol.check()
    return sol
