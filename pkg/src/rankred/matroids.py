"""Rank oracles for partition, transversal and graphical matroids, and maximum
common independent sets of two matroids given by independence oracles.

Rank queries take the set of *removed* elements X and return r(E \\ X).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from rankred.errors import InputError, OracleInconsistency
from rankred.graphs import BipartiteGraph, Edge, Graph, max_matching


def _check_subset(removed: Iterable, ground: frozenset, what: str = "element") -> frozenset:
    removed = frozenset(removed)
    extra = removed - ground
    if extra:
        raise InputError(f"{what} {sorted(extra)[0]!r} is not in the ground set")
    return removed


@dataclass(frozen=True)
class IndependenceOracle:
    """Matroid on ``0 .. ground_size - 1`` accessed only through independence tests."""

    ground_size: int
    is_independent: Callable[[frozenset[int]], bool]

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(range(self.ground_size))

    def rank_of(self, subset: Iterable[int]) -> int:
        """Greedy maximal independent subset; correct for any matroid."""
        basis: set[int] = set()
        for e in sorted(subset):
            if self.is_independent(frozenset(basis | {e})):
                basis.add(e)
        return len(basis)

    def rank_after_removal(self, removed: Iterable[int]) -> int:
        removed = _check_subset(removed, frozenset(self.ground))
        return self.rank_of(e for e in self.ground if e not in removed)

    @property
    def full_rank(self) -> int:
        return self.rank_of(self.ground)

    def clone_classes(self) -> list[list[int]]:
        return [[e] for e in self.ground]


@dataclass(frozen=True)
class PartitionModel:
    """Blocks ``(E_i, d_i)``: a set is independent iff it has at most d_i elements in each E_i."""

    blocks: tuple[tuple[frozenset[int], int], ...]

    def __post_init__(self) -> None:
        blocks = tuple((frozenset(b), int(cap)) for b, cap in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set[int] = set()
        for i, (block, cap) in enumerate(blocks):
            if seen & block:
                raise InputError(f"block {i} overlaps an earlier block")
            seen |= block
            if not 0 <= cap <= len(block):
                raise InputError(f"block {i}: cap {cap} outside 0..{len(block)}")

    @classmethod
    def from_lists(cls, blocks: Iterable[tuple[Iterable[int], int]]) -> PartitionModel:
        return cls(tuple((frozenset(b), cap) for b, cap in blocks))

    @cached_property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(e for b, _ in self.blocks for e in b))

    @cached_property
    def ground_set(self) -> frozenset[int]:
        return frozenset(self.ground)

    @property
    def caps(self) -> list[int]:
        return [cap for _, cap in self.blocks]

    @property
    def slacks(self) -> list[int]:
        """c_i = |E_i| - d_i."""
        return [len(b) - cap for b, cap in self.blocks]

    @property
    def full_rank(self) -> int:
        return sum(self.caps)

    def rank_after_removal(self, removed: Iterable[int]) -> int:
        return rank_partition(self, removed)

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(len(s & b) <= cap for b, cap in self.blocks)

    def clone_classes(self) -> list[list[int]]:
        return [sorted(b) for b, _ in self.blocks if b]

    def oracle(self) -> IndependenceOracle:
        """Adapter over ground-order indices ``0..|E|-1``."""
        ground = self.ground
        return IndependenceOracle(len(ground), lambda s: self.is_independent(ground[i] for i in s))


@dataclass(frozen=True)
class TransversalModel:
    """Transversal matroid on side A of a bipartite graph."""

    model: BipartiteGraph

    @cached_property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted(self.model.side_a))

    @cached_property
    def ground_set(self) -> frozenset[int]:
        return frozenset(self.ground)

    @cached_property
    def full_rank(self) -> int:
        return len(max_matching(self.model))

    def rank_after_removal(self, removed: Iterable[int]) -> int:
        return rank_transversal(self, removed)

    def is_independent(self, subset: Iterable[int]) -> bool:
        keep = set(subset)
        sub = self.model.without_vertices(a for a in self.model.side_a if a not in keep)
        return len(max_matching(sub)) == len(keep)

    def clone_classes(self) -> list[list[int]]:
        """A-vertices with identical neighbourhoods are interchangeable."""
        by_nbrs: dict[tuple[int, ...], list[int]] = {}
        for a in self.ground:
            by_nbrs.setdefault(self.model.adj_a[a], []).append(a)
        return sorted(by_nbrs.values())

    def oracle(self) -> IndependenceOracle:
        ground = self.ground
        return IndependenceOracle(len(ground), lambda s: self.is_independent(ground[i] for i in s))


@dataclass(frozen=True)
class GraphicalModel:
    """Cycle matroid of a graph; the ground set is the edge set."""

    graph: Graph

    @property
    def ground(self) -> tuple[Edge, ...]:
        return self.graph.edge_list

    @property
    def full_rank(self) -> int:
        return self.graph.vertex_count - self.graph.component_count()

    def rank_after_removal(self, removed: Iterable[Edge]) -> int:
        return rank_graphical(self, removed)

    def is_independent(self, subset: Iterable[Edge]) -> bool:
        subset = list(subset)
        return self.graph.vertex_count - self.graph.component_count(subset) == len(subset)

    def clone_classes(self) -> list[list[Edge]]:
        return [[e] for e in self.ground]

    def oracle(self) -> IndependenceOracle:
        ground = self.ground
        return IndependenceOracle(len(ground), lambda s: self.is_independent(ground[i] for i in s))


Model = PartitionModel | TransversalModel | GraphicalModel | IndependenceOracle


def rank_partition(m: PartitionModel, x_removed: Iterable[int]) -> int:
    """sum_i min(|E_i \\ X|, d_i)."""
    x = _check_subset(x_removed, m.ground_set)
    return sum(min(len(b - x), cap) for b, cap in m.blocks)


def rank_transversal(m: TransversalModel, x_removed: Iterable[int]) -> int:
    """Matching number of the model with the removed A-vertices deleted."""
    x = _check_subset(x_removed, m.ground_set)
    return len(max_matching(m.model.without_vertices(x)))


def rank_graphical(m: GraphicalModel, f_removed: Iterable[Edge]) -> int:
    """|V| minus the number of components of (V, E \\ F)."""
    f = frozenset((u, v) if u < v else (v, u) for u, v in f_removed)
    _check_subset(f, m.graph.edges, what="edge")
    g = m.graph
    return g.vertex_count - g.component_count(g.edges - f)


def partition_as_transversal(m: PartitionModel) -> TransversalModel:
    """Transversal model of a partition matroid: block i gets d_i B-vertices
    adjacent to every element of E_i."""
    nxt = (max(m.ground) + 1) if m.ground else 0
    side_b = []
    edges = set()
    for block, cap in m.blocks:
        for _ in range(cap):
            side_b.append(nxt)
            edges.update((a, nxt) for a in block)
            nxt += 1
    return TransversalModel(BipartiteGraph(m.ground, tuple(side_b), frozenset(edges)))


def edge_incidence_partitions(g: BipartiteGraph) -> tuple[PartitionModel, PartitionModel]:
    """The two cap-1 partition matroids on edge indices (positions in
    ``g.edge_list``) whose common independent sets are the matchings of g."""
    def blocks(side: Sequence[int], end: int):
        out = []
        for v in side:
            block = frozenset(i for i, e in enumerate(g.edge_list) if e[end] == v)
            if block:
                out.append((block, 1))
        return tuple(out)

    return PartitionModel(blocks(g.side_a, 0)), PartitionModel(blocks(g.side_b, 1))


def intersection_max_common(o1: IndependenceOracle, o2: IndependenceOracle) -> frozenset[int]:
    """Maximum common independent set by shortest augmenting paths in the
    exchange graph.

    Raises OracleInconsistency when an augmentation yields a set one of the
    oracles rejects, which cannot happen for genuine matroids.
    """
    if o1.ground_size != o2.ground_size:
        raise InputError("oracles have different ground sets")
    if not (o1.is_independent(frozenset()) and o2.is_independent(frozenset())):
        raise OracleInconsistency("the empty set must be independent")
    ground = range(o1.ground_size)
    current: frozenset[int] = frozenset()

    while True:
        outside = [e for e in ground if e not in current]
        inside = sorted(current)
        sources = {x for x in outside if o1.is_independent(current | {x})}
        sinks = {x for x in outside if o2.is_independent(current | {x})}
        # arcs y -> x when I - y + x in I1; x -> y when I - y + x in I2
        succ: dict[Hashable, list[int]] = {v: [] for v in ground}
        for y in inside:
            base = current - {y}
            for x in outside:
                if o1.is_independent(base | {x}):
                    succ[y].append(x)
                if o2.is_independent(base | {x}):
                    succ[x].append(y)
        parent: dict[int, int | None] = {}
        queue: deque[int] = deque()
        for s in sorted(sources):
            parent[s] = None
            queue.append(s)
        end = None
        while queue:
            v = queue.popleft()
            if v in sinks:
                end = v
                break
            for w in succ[v]:
                if w not in parent:
                    parent[w] = v
                    queue.append(w)
        if end is None:
            return current
        path = []
        v: int | None = end
        while v is not None:
            path.append(v)
            v = parent[v]
        nxt = current.symmetric_difference(path)
        if len(nxt) != len(current) + 1 or not (o1.is_independent(nxt) and o2.is_independent(nxt)):
            raise OracleInconsistency(
                f"augmenting along {path[::-1]} produced a set rejected by an oracle"
            )
        current = nxt
