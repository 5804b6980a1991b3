"""Independent exhaustive oracles and random instance generators.

The oracles never call the code under test.
"""

from itertools import combinations

from rankred.graphs import BipartiteGraph, Graph


def random_bipartite(rng, n_a, n_b, p):
    edges = [(a, n_a + b) for a in range(n_a) for b in range(n_b) if rng.random() < p]
    return BipartiteGraph.from_sizes(n_a, n_b, edges)


def random_graph(rng, n, p):
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def is_matching(pairs):
    ends = [v for e in pairs for v in e]
    return len(ends) == len(set(ends))


def matching_number(edges):
    edges = sorted(edges)
    for r in range(len(edges), -1, -1):
        if any(is_matching(c) for c in combinations(edges, r)):
            return r
    return 0


def max_independent(elements, independent):
    elements = sorted(elements)
    for r in range(len(elements), -1, -1):
        for c in combinations(elements, r):
            if independent(set(c)):
                return r
    return 0


def partition_independent(blocks):
    return lambda s: all(len(s & set(b)) <= cap for b, cap in blocks)


def acyclic(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def matchable(a_set, adj):
    """Can every vertex in a_set be matched (adj: a -> iterable of b)?"""
    a_list = sorted(a_set)

    def go(i, used):
        if i == len(a_list):
            return True
        return any(b not in used and go(i + 1, used | {b}) for b in adj[a_list[i]])

    return go(0, frozenset())


def induced(edges, vs):
    vs = set(vs)
    return sum(1 for u, v in edges if u in vs and v in vs)


def covered(edges, xs):
    xs = set(xs)
    return sum(1 for u, v in edges if u in xs or v in xs)


def kuhn_matching_number(edges):
    """Augmenting-path matching number, kept separate from the package's Hopcroft-Karp."""
    adj = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
    mate = {}

    def augment(u, seen):
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                if v not in mate or augment(mate[v], seen):
                    mate[v] = u
                    return True
        return False

    return sum(augment(u, set()) for u in adj)
