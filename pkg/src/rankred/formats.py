"""Line-oriented text formats.

Edge list::

    p <n> <m>
    bip <|A|>          # optional; vertices 0..|A|-1 form side A
    <u> <v>            # m lines, 0-based

Partition model::

    partition <p>
    <cap> <elt> <elt> ...   # p lines

Gadget files are bipartite edge lists with extra ``t``/``k``/``ell`` header
lines and a ``map`` decode section. Blank lines and ``#`` comments are
ignored everywhere.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable

from rankred.clique import CliqueGadget, build_clique_gadget
from rankred.errors import InputError, ParseError
from rankred.graphs import BipartiteGraph, Graph
from rankred.matroids import PartitionModel
from rankred.tedge import TEdgeGadget, build_t_edge_gadget


def digest(data: str | bytes) -> str:
    if isinstance(data, str):
        data = data.encode()
    return hashlib.sha256(data).hexdigest()[:16]


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body.split()


def _ints(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", line) from None


@dataclass
class _EdgeFile:
    n: int = -1
    m: int = -1
    bip: int | None = None
    edges: list[tuple[int, int]] = field(default_factory=list)
    header: dict[str, list[int]] = field(default_factory=dict)
    maps: list[tuple[int, list[str]]] = field(default_factory=list)


def _parse_edge_file(text: str, keywords: tuple[str, ...] = ()) -> _EdgeFile:
    out = _EdgeFile()
    last_line = 0
    for no, toks in _lines(text):
        last_line = no
        head = toks[0]
        if out.n < 0:
            if head != "p" or len(toks) != 3:
                raise ParseError("first line must be 'p <n> <m>'", no)
            out.n, out.m = _ints(toks[1:], no)
            if out.n < 0 or out.m < 0:
                raise ParseError("negative count in 'p' line", no)
        elif head == "bip":
            if len(toks) != 2:
                raise ParseError("expected 'bip <|A|>'", no)
            (out.bip,) = _ints(toks[1:], no)
            if not 0 <= out.bip <= out.n:
                raise ParseError(f"bip {out.bip} outside 0..{out.n}", no)
        elif head == "map" and "map" in keywords:
            out.maps.append((no, toks[1:]))
        elif head in keywords:
            # 'k <k> ell <ell>' packs two keys on one line
            if head == "k" and len(toks) == 4 and toks[2] == "ell":
                out.header["k"] = _ints([toks[1]], no)
                out.header["ell"] = _ints([toks[3]], no)
            else:
                out.header[head] = _ints(toks[1:], no)
        else:
            if len(toks) != 2:
                raise ParseError(f"expected an edge '<u> <v>', got {' '.join(toks)!r}", no)
            u, v = _ints(toks, no)
            if not (0 <= u < out.n and 0 <= v < out.n):
                raise ParseError(f"vertex out of range 0..{out.n - 1}", no)
            if u == v:
                raise ParseError(f"loop at vertex {u}", no)
            out.edges.append((u, v))
    if out.n < 0:
        raise ParseError("missing 'p <n> <m>' line", last_line or 1)
    if len(out.edges) != out.m:
        raise ParseError(f"header declares {out.m} edges, found {len(out.edges)}", last_line)
    if len({tuple(sorted(e)) for e in out.edges}) != len(out.edges):
        raise ParseError("duplicate edge", last_line)
    return out


def read_graph(text: str) -> Graph:
    f = _parse_edge_file(text)
    return Graph(f.n, frozenset(f.edges))


def _to_bipartite(f: _EdgeFile) -> BipartiteGraph:
    if f.bip is None:
        raise ParseError("missing 'bip <|A|>' line")
    edges = set()
    for u, v in f.edges:
        a, b = (u, v) if u < v else (v, u)
        if not (a < f.bip <= b):
            raise ParseError(f"edge ({u}, {v}) does not cross the bipartition")
        edges.add((a, b))
    return BipartiteGraph(tuple(range(f.bip)), tuple(range(f.bip, f.n)), frozenset(edges))


def read_bipartite(text: str) -> BipartiteGraph:
    return _to_bipartite(_parse_edge_file(text))


def write_graph(g: Graph) -> str:
    lines = [f"p {g.order} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.edge_list]
    return "\n".join(lines) + "\n"


def _bipartite_lines(g: BipartiteGraph) -> list[str]:
    na = len(g.side_a)
    if g.side_a != tuple(range(na)) or g.side_b != tuple(range(na, na + len(g.side_b))):
        raise InputError("bipartite format needs side A = 0..|A|-1 and side B = |A|..")
    lines = [f"p {na + len(g.side_b)} {len(g.edges)}", f"bip {na}"]
    lines += [f"{a} {b}" for a, b in g.edge_list]
    return lines


def write_bipartite(g: BipartiteGraph) -> str:
    return "\n".join(_bipartite_lines(g)) + "\n"


def read_partition(text: str) -> PartitionModel:
    blocks = []
    declared = None
    last = 0
    for no, toks in _lines(text):
        last = no
        if declared is None:
            if toks[0] != "partition" or len(toks) != 2:
                raise ParseError("first line must be 'partition <p>'", no)
            (declared,) = _ints(toks[1:], no)
            continue
        vals = _ints(toks, no)
        try:
            blocks.append((frozenset(vals[1:]), vals[0]))
            if len(set(vals[1:])) != len(vals) - 1:
                raise InputError("repeated element in block")
            PartitionModel(tuple(blocks))
        except InputError as exc:
            raise ParseError(str(exc), no) from None
    if declared is None:
        raise ParseError("missing 'partition <p>' line", 1)
    if len(blocks) != declared:
        raise ParseError(f"header declares {declared} blocks, found {len(blocks)}", last)
    return PartitionModel(tuple(blocks))


def write_partition(m: PartitionModel) -> str:
    lines = [f"partition {len(m.blocks)}"]
    for block, cap in m.blocks:
        lines.append(" ".join(str(v) for v in [cap, *sorted(block)]))
    return "\n".join(lines) + "\n"


def read_index_set(text: str) -> frozenset[int]:
    """Whitespace-separated integers; an optional leading word per line is skipped."""
    out: list[int] = []
    for no, toks in _lines(text):
        if not toks[0].lstrip("-").isdigit():
            toks = toks[1:]
        out.extend(_ints(toks, no))
    return frozenset(out)


def write_certificate(indices: Iterable[int], coverage: int | None = None) -> str:
    lines = ["set " + " ".join(str(i) for i in sorted(indices))]
    if coverage is not None:
        lines.append(f"coverage {coverage}")
    return "\n".join(lines) + "\n"


def write_tedge_gadget(gad: TEdgeGadget) -> str:
    lines = ["# t-edge gadget; copies are 0-based", *_bipartite_lines(gad.graph), f"t {gad.t}"]
    for idx in sorted(gad.decode):
        kind, *rest = gad.decode[idx]
        if kind == "v":
            lines.append(f"map {idx} v {rest[0]} {rest[1]}")
        else:
            lines.append(f"map {idx} e {rest[0]} {rest[1]}")
    return "\n".join(lines) + "\n"


def read_tedge_gadget(text: str) -> TEdgeGadget:
    f = _parse_edge_file(text, keywords=("t", "map"))
    host = _to_bipartite(f)
    if "t" not in f.header:
        raise ParseError("missing 't <t>' line")
    m = len(host.side_b)
    n = isqrt(len(host.side_a) - m)
    if n * n + m != len(host.side_a):
        raise ParseError("|A| is not n^2 + m for any n")
    source_edges = set()
    for no, toks in f.maps:
        idx = _ints(toks[:1], no)[0]
        if len(toks) == 4 and toks[1] == "e" and idx >= n * n + m:
            source_edges.add(tuple(sorted(_ints(toks[2:], no))))
    try:
        gad = build_t_edge_gadget(Graph(n, frozenset(source_edges)), f.header["t"][0])
    except InputError as exc:
        raise ParseError(f"inconsistent gadget: {exc}") from None
    if gad.graph.edges != host.edges:
        raise ParseError("host edges do not match the decode table")
    return gad


def write_clique_gadget(gad: CliqueGadget) -> str:
    lines = ["# clique gadget", *_bipartite_lines(gad.g), f"k {gad.k} ell {gad.ell}"]
    for idx in sorted(gad.decode):
        role, kind, *rest = gad.decode[idx]
        lines.append(f"map {idx} {role} {kind} " + " ".join(str(r) for r in rest))
    return "\n".join(lines) + "\n"


def read_clique_gadget(text: str) -> CliqueGadget:
    f = _parse_edge_file(text, keywords=("k", "ell", "map"))
    g = _to_bipartite(f)
    if "k" not in f.header or "ell" not in f.header:
        raise ParseError("missing 'k <k> ell <ell>' line")
    verts, edges = set(), set()
    for no, toks in f.maps:
        if len(toks) < 4 or toks[1] not in "ab" or toks[2] not in ("v", "e"):
            raise ParseError("expected 'map <idx> a|b v <u>' or 'map <idx> a|b e <u> <v>'", no)
        vals = _ints(toks[3:], no)
        if toks[2] == "v":
            verts.add(vals[0])
        else:
            edges.add(tuple(sorted(vals)))
    try:
        gad = build_clique_gadget(Graph(len(verts), frozenset(edges)), f.header["ell"][0])
    except InputError as exc:
        raise ParseError(f"inconsistent gadget: {exc}") from None
    if gad.g.edges != g.edges or gad.k != f.header["k"][0]:
        raise ParseError("gadget edges or k do not match the decode table")
    return gad
