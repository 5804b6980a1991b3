"""Clique to maximum vertex cover on bipartite graphs.

Elements of the source graph H are indexed as vertices ``0..n-1`` followed
by edges ``n..n+m-1`` (edge ``i`` of ``H.edge_list`` is element ``n + i``).
Gadget vertex ``a_x`` is ``x`` and ``b_x`` is ``n + m + x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable

from rankred.errors import InputError, NotNiceError
from rankred.graphs import BipartiteGraph, Edge, Graph, konig_cover, max_matching

SOLVE_DIRECTLY = "solve-directly"
NO_CLIQUE = "no-clique"
READY = "ok"

MIN_ELL = 6


@dataclass(frozen=True)
class CliqueGadget:
    g: BipartiteGraph
    k: int
    source: Graph
    ell: int

    @property
    def n(self) -> int:
        return self.source.order

    @property
    def m(self) -> int:
        return self.source.size

    @property
    def elements(self) -> int:
        return self.n + self.m

    def a(self, x: int) -> int:
        return x

    def b(self, x: int) -> int:
        return self.elements + x

    def edge_element(self, e: Edge) -> int:
        return self.n + self.edge_index[e]

    def element_edge(self, x: int) -> Edge:
        return self.source.edge_list[x - self.n]

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.source.edge_list)}

    @cached_property
    def decode(self) -> dict[int, tuple]:
        """Gadget vertex -> (role, "v", u) or (role, "e", u, v)."""
        out: dict[int, tuple] = {}
        for x in range(self.elements):
            src = ("v", x) if x < self.n else ("e",) + self.element_edge(x)
            out[self.a(x)] = ("a",) + src
            out[self.b(x)] = ("b",) + src
        return out

    @property
    def threshold(self) -> int:
        """||G|| - C(ell, 2): the coverage reached exactly when H has an ell-clique."""
        return self.g_size - comb(self.ell, 2)

    @property
    def g_size(self) -> int:
        return len(self.g.edges)


@dataclass(frozen=True)
class NiceClassification:
    s: int
    e1: int
    e2: int
    e3: int
    bad_vertices: frozenset[int] = frozenset()
    bad_edges: frozenset[int] = frozenset()

    @property
    def as_ip_tuple(self) -> tuple[int, int, int, int]:
        """(x, y, z, s) in the integer program's variable order."""
        return (self.e1, self.e2, self.e3, self.s)


def find_clique(h: Graph, ell: int) -> frozenset[int] | None:
    """Brute-force ell-clique search (first in lex order)."""
    for combo in combinations(h.vertices, ell):
        if h.is_clique(combo):
            return frozenset(combo)
    return None


def preprocess_clique_instance(h: Graph, ell: int) -> tuple[Graph, str]:
    """Enforce min degree >= 2 and ||H|| >= |H| + C(ell, 2).

    Vertices of degree <= 1 are pruned repeatedly, then disjoint K4 copies are
    appended. Surviving vertices carry their original index as a label;
    padding vertices are labelled "pad".
    """
    if ell < MIN_ELL:
        return h, SOLVE_DIRECTLY
    labels = dict(h.labels) if h.labels is not None else {v: str(v) for v in h.vertices}
    cur = Graph(h.order, h.edges, labels)
    while True:
        low = [v for v in cur.vertices if cur.degree(v) <= 1]
        if not low:
            break
        cur, _ = cur.delete_vertices(low)
    if cur.order < ell:
        return cur, NO_CLIQUE
    need = comb(ell, 2)
    edges = set(cur.edges)
    n = cur.order
    labels = dict(cur.labels or {})
    while len(edges) < n + need:
        edges.update((n + i, n + j) for i, j in combinations(range(4), 2))
        labels.update((n + i, "pad") for i in range(4))
        n += 4
    if n == cur.order:
        return (h if h.order == cur.order else cur), READY
    return Graph(n, frozenset(edges), labels), READY


def build_clique_gadget(h: Graph, ell: int) -> CliqueGadget:
    if ell < MIN_ELL:
        raise InputError(f"ell={ell} < {MIN_ELL}; decide the clique by brute force instead")
    low = [v for v in h.vertices if h.degree(v) < 2]
    if low:
        raise InputError(f"minimum degree assumption violated: vertex {low[0]} has degree {h.degree(low[0])}")
    if h.size < h.order + comb(ell, 2):
        raise InputError(
            f"edge-count assumption violated: ||H|| = {h.size} < |H| + C(ell,2) = {h.order + comb(ell, 2)}"
        )
    n, m = h.order, h.size
    total = n + m
    edges = {(x, total + x) for x in range(total)}
    for i, (u, v) in enumerate(h.edge_list):
        e = n + i
        edges.update({(e, total + u), (u, total + e), (e, total + v), (v, total + e)})
    g = BipartiteGraph(tuple(range(total)), tuple(range(total, 2 * total)), frozenset(edges))
    k = n + m - comb(ell, 2) + ell
    return CliqueGadget(g, k, h, ell)


def coverage(g: BipartiteGraph | Graph, x: Iterable[int]) -> int:
    """Number of edges with at least one endpoint in x."""
    s = set(x)
    return sum(1 for u, v in g.edges if u in s or v in s)


def nice_violations(gad: CliqueGadget, x: Iterable[int]) -> list[str]:
    s = set(x)
    out = []
    for e in range(gad.elements):
        if gad.b(e) in s and gad.a(e) not in s:
            out.append(f"a-property fails at element {e}")
    for u in range(gad.n):
        if gad.a(u) not in s and gad.b(u) not in s:
            out.append(f"bad vertex {u}")
    for e in range(gad.n, gad.elements):
        if gad.a(e) in s and gad.b(e) in s:
            out.append(f"bad edge {gad.element_edge(e)}")
    return out


def _check_partial_cover(gad: CliqueGadget, x: frozenset[int]) -> None:
    if len(x) != gad.k:
        raise InputError(f"|X| = {len(x)} but k = {gad.k}")
    if not all(0 <= v < 2 * gad.elements for v in x):
        raise InputError("X contains a vertex outside the gadget")


def nicify(gad: CliqueGadget, x: Iterable[int]) -> frozenset[int]:
    """A nice partial vertex cover of the same size covering at least as much."""
    x = frozenset(x)
    _check_partial_cover(gad, x)

    # a-favouring rewrite: a lone b_x becomes a_x
    cur: set[int] = set()
    for e in range(gad.elements):
        a, b = gad.a(e), gad.b(e)
        if a in x and b in x:
            cur.update((a, b))
        elif a in x or b in x:
            cur.add(a)

    def is_bad_vertex(u: int) -> bool:
        return gad.a(u) not in cur and gad.b(u) not in cur

    # bad edges
    for e in range(gad.n, gad.elements):
        if not (gad.a(e) in cur and gad.b(e) in cur):
            continue
        u, v = gad.element_edge(e)
        cur.discard(gad.b(e))
        if is_bad_vertex(u):
            cur.add(gad.a(u))
        elif is_bad_vertex(v):
            cur.add(gad.a(v))
        else:
            # exists because k < |H| + ||H||
            free = next(y for y in range(gad.elements) if gad.a(y) not in cur)
            cur.add(gad.a(free))

    # bad vertices
    for u in range(gad.n):
        if not is_bad_vertex(u):
            continue
        # exists because |X| > 2|H| and the a-property holds
        spare = next(e for e in range(gad.n, gad.elements) if gad.a(e) in cur and gad.b(e) not in cur)
        cur.discard(gad.a(spare))
        cur.add(gad.a(u))

    out = frozenset(cur)
    assert len(out) == gad.k and not nice_violations(gad, out)
    return out


def classify(gad: CliqueGadget, x: Iterable[int]) -> NiceClassification:
    """Count S(X) and the type-1/2/3 edges of a nice X, asserting both
    coverage identities."""
    x = frozenset(x)
    problems = nice_violations(gad, x)
    if problems:
        raise NotNiceError(problems)
    chosen = {u for u in range(gad.n) if gad.b(u) in x}
    counts = [0, 0, 0, 0]
    for e in range(gad.n, gad.elements):
        if gad.a(e) in x:
            continue
        u, v = gad.element_edge(e)
        inside = (u in chosen) + (v in chosen)
        counts[3 - inside] += 1
    cls = NiceClassification(len(chosen), counts[1], counts[2], counts[3])
    covered = coverage(gad.g, x)
    expected = gad.g_size - cls.e1 - 2 * cls.e2 - 3 * cls.e3
    if covered != expected:
        raise AssertionError(f"coverage {covered} != ||G|| - e1 - 2e2 - 3e3 = {expected}")
    budget = cls.e1 + cls.e2 + cls.e3 - cls.s
    if budget != comb(gad.ell, 2) - gad.ell:
        raise AssertionError(f"e1 + e2 + e3 - s = {budget} != C(ell,2) - ell")
    return cls


def ip_lemma_enumerate(ell: int) -> frozenset[tuple[int, int, int, int]]:
    """All minimisers (x, y, z, s) of x + 2y + 3z subject to
    x + y + z - s = C(ell,2) - ell, x <= C(s,2), all non-negative integers.

    The feasible point (C(ell,2), 0, 0, ell) has objective C(ell,2), and any
    point has objective >= x + y + z = C(ell,2) - ell + s, so s <= ell
    covers every candidate optimum.
    """
    if ell < MIN_ELL:
        raise InputError(f"the lemma needs ell >= {MIN_ELL}, got {ell}")
    target = comb(ell, 2) - ell
    upper = comb(ell, 2)
    best, winners = None, set()
    for s in range(upper - target + 1):
        total = target + s
        for x in range(min(comb(s, 2), total) + 1):
            for y in range(total - x + 1):
                z = total - x - y
                obj = x + 2 * y + 3 * z
                if best is None or obj < best:
                    best, winners = obj, {(x, y, z, s)}
                elif obj == best:
                    winners.add((x, y, z, s))
    return frozenset(winners)


def clique_to_pvc(gad: CliqueGadget, clique: Iterable[int]) -> frozenset[int]:
    """{a_u, b_u : u in K} + {a_u : u not in K} + {a_e : e not in E(K)}."""
    clique = frozenset(clique)
    h = gad.source
    if len(clique) != gad.ell:
        raise InputError(f"expected {gad.ell} vertices, got {len(clique)}")
    for u, v in combinations(sorted(clique), 2):
        if not h.has_edge(u, v):
            raise InputError(f"not a clique: missing edge ({u}, {v})")
    x = {gad.a(u) for u in range(gad.n)} | {gad.b(u) for u in clique}
    x |= {gad.a(gad.n + i) for i, (u, v) in enumerate(h.edge_list) if not (u in clique and v in clique)}
    assert len(x) == gad.k
    return frozenset(x)


def pvc_to_clique(gad: CliqueGadget, x: Iterable[int]) -> frozenset[int] | None:
    """Decode an ell-clique from a partial vertex cover reaching the threshold."""
    nice = nicify(gad, x)
    if coverage(gad.g, nice) != gad.threshold:
        return None
    cls = classify(gad, nice)
    assert (cls.s, cls.e1, cls.e2, cls.e3) == (gad.ell, comb(gad.ell, 2), 0, 0)
    clique = frozenset(u for u in range(gad.n) if gad.b(u) in nice)
    assert gad.source.is_clique(clique)
    return clique


def cover_to_edges(g: BipartiteGraph, x: Iterable[int]) -> frozenset[Edge]:
    """Edges not covered by x; deleting them leaves matching number <= |x|."""
    s = set(x)
    f = frozenset(e for e in g.edges if e[0] not in s and e[1] not in s)
    assert len(max_matching(g.without_edges(f))) <= len(s)
    return f


def edges_to_cover(g: BipartiteGraph, f: Iterable[Edge], t: int) -> frozenset[int]:
    """König cover of g - f, of size mu(g - f) <= mu(g) - t."""
    f = frozenset(f)
    if not f <= g.edges:
        raise InputError("F contains a non-edge")
    rest = g.without_edges(f)
    mu, mu_rest = len(max_matching(g)), max_matching(rest)
    if len(mu_rest) > mu - t:
        raise InputError(
            f"mu(G - F) = {len(mu_rest)} > mu(G) - t = {mu - t}; matching {sorted(mu_rest.pairs)}"
        )
    cover = konig_cover(rest, mu_rest)
    assert coverage(g, cover) >= len(g.edges) - len(f)
    return cover
