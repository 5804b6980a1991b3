"""Command-line front end.

Exit status: 0 on success, 1 on input or parse errors, 2 when the instance is
infeasible or a certificate fails to verify. ``RANKRED_CAP`` and
``RANKRED_SEED`` override the default enumeration cap and seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from rankred import clique as cq
from rankred.errors import InfeasibleError, InputError, RankredError
from rankred.exact import (
    DEFAULT_CAP,
    brute_force_rankred,
    densest_k_exact,
    kcut_solution,
    min_t_edge_exact,
    mvc_exact,
    solve_partition_rankred,
)
from rankred.formats import (
    digest,
    read_bipartite,
    read_clique_gadget,
    read_graph,
    read_index_set,
    read_partition,
    read_tedge_gadget,
    write_clique_gadget,
    write_tedge_gadget,
)
from rankred.matroids import GraphicalModel, TransversalModel
from rankred.suites import SUITES, run_suite
from rankred.tedge import build_t_edge_gadget, dks_harness, exact_strategy, verify_pair

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE = 0, 1, 2


class Report:
    """Ordered key/value lines, rendered as ``key: value`` or ``key=value``."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.items: list[tuple[str, str]] = []

    def add(self, key: str, value) -> None:
        if isinstance(value, (set, frozenset, list, tuple)):
            value = " ".join(str(v) for v in sorted(value))
        self.items.append((key, str(value)))

    def render(self) -> str:
        sep = "=" if self.fmt == "record" else ": "
        return "".join(f"{k}{sep}{v}\n" for k, v in self.items)


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"no such file: {path}")
    return p.read_text()


def _load_model(args):
    """Returns (kind, model, text)."""
    if args.partition:
        text = _read(args.partition)
        return "partition", read_partition(text), text
    if args.transversal:
        text = _read(args.transversal)
        return "transversal", TransversalModel(read_bipartite(text)), text
    text = _read(args.graphical)
    return "graphical", GraphicalModel(read_graph(text)), text


def _as_indices(kind: str, model, removed) -> list[int]:
    if kind == "graphical":
        pos = {e: i for i, e in enumerate(model.ground)}
        return sorted(pos[e] for e in removed)
    return sorted(removed)


def _from_indices(kind: str, model, indices) -> list:
    if kind == "graphical":
        ground = model.ground
        if not all(0 <= i < len(ground) for i in indices):
            raise InputError("edge index outside 0..m-1")
        return [ground[i] for i in indices]
    return list(indices)


def cmd_rank(args, rep: Report) -> int:
    kind, model, text = _load_model(args)
    removed = _from_indices(kind, model, read_index_set(_read(args.remove))) if args.remove else []
    rep.add("problem", f"rank-{kind}")
    rep.add("input_digest", digest(text))
    rep.add("rank_full", model.full_rank)
    rep.add("removed", _as_indices(kind, model, removed))
    rep.add("rank_after", model.rank_after_removal(removed))
    return EXIT_OK


def cmd_reduce(args, rep: Report) -> int:
    kind, model, text = _load_model(args)
    if kind == "partition" and not args.brute:
        sol, method = solve_partition_rankred(model, args.k), "knapsack-dp"
    else:
        sol, method = brute_force_rankred(model, args.k, cap=args.cap), "enumeration"
    rerank = model.rank_after_removal(sol.removed)
    rep.add("problem", f"rankred-{kind}")
    rep.add("method", method)
    rep.add("input_digest", digest(text))
    rep.add("k", args.k)
    rep.add("rank_before", sol.rank_before)
    rep.add("size", sol.size)
    rep.add("removed", _as_indices(kind, model, sol.removed))
    rep.add("rank_after", rerank)
    rep.add("verified", "yes" if rerank == sol.certified_rank_after <= sol.rank_before - args.k else "no")
    return EXIT_OK


def _emit(text: str, out: str | None, rep: Report) -> None:
    if out:
        Path(out).write_text(text)
        rep.add("written", out)
    else:
        sys.stdout.write(text)


def cmd_gadget_tedge(args, rep: Report) -> int:
    text = _read(args.graph)
    g = read_graph(text)
    if not 1 <= args.t <= g.size:
        raise InfeasibleError(f"t={args.t} outside 1..{g.size}")
    gad = build_t_edge_gadget(g, args.t)
    _emit(write_tedge_gadget(gad), args.out, rep)
    return EXIT_OK


def cmd_gadget_clique(args, rep: Report) -> int:
    text = _read(args.graph)
    h, status = cq.preprocess_clique_instance(read_graph(text), args.ell)
    if status == cq.SOLVE_DIRECTLY:
        found = cq.find_clique(h, args.ell)
        rep.add("status", "clique" if found is not None else cq.NO_CLIQUE)
        if found is not None:
            rep.add("clique", found)
        return EXIT_OK
    if status == cq.NO_CLIQUE:
        rep.add("status", cq.NO_CLIQUE)
        return EXIT_OK
    gad = cq.build_clique_gadget(h, args.ell)
    _emit(write_clique_gadget(gad), args.out, rep)
    return EXIT_OK


def cmd_harness_dks(args, rep: Report) -> int:
    text = _read(args.graph)
    g = read_graph(text)
    chosen = dks_harness(g, args.k, exact_strategy(args.cap), 1)
    rep.add("problem", "densest-k-harness")
    rep.add("input_digest", digest(text))
    rep.add("k", args.k)
    rep.add("vertices", chosen)
    rep.add("induced_edges", g.induced_edge_count(chosen))
    if args.check:
        z_star = g.induced_edge_count(densest_k_exact(g, args.k, args.cap))
        rep.add("optimum", z_star)
        rep.add("guarantee_met", "yes" if 9 * g.induced_edge_count(chosen) >= z_star else "no")
    return EXIT_OK


def cmd_verify(args, rep: Report) -> int:
    if args.pair:
        gpath, xpath, ypath = args.pair
        gad = read_tedge_gadget(_read(gpath))
        x, y = read_index_set(_read(xpath)), read_index_set(_read(ypath))
        ok = verify_pair(gad, x, y)
        rep.add("check", "witness-pair")
        rep.add("size", len(x))
        rep.add("witness_size", len(y))
        rep.add("valid", "yes" if ok else "no")
        return EXIT_OK if ok else EXIT_INFEASIBLE
    gpath, xpath = args.pvc
    gad = read_clique_gadget(_read(gpath))
    x = read_index_set(_read(xpath))
    rep.add("check", "partial-vertex-cover")
    rep.add("coverage", cq.coverage(gad.g, x))
    rep.add("threshold", gad.threshold)
    found = cq.pvc_to_clique(gad, x)
    rep.add("clique", found if found is not None else "none")
    return EXIT_OK if found is not None else EXIT_INFEASIBLE


def cmd_oracle(args, rep: Report) -> int:
    text = _read(args.graph)
    rep.add("problem", args.problem)
    rep.add("input_digest", digest(text))
    rep.add("param", args.param)
    if args.problem == "mvc":
        is_bip = any(line.split()[:1] == ["bip"] for line in text.splitlines())
        g = read_bipartite(text) if is_bip else read_graph(text)
        chosen, covered = mvc_exact(g, args.param, args.cap)
        rep.add("vertices", chosen)
        rep.add("covered", covered)
        return EXIT_OK
    g = read_graph(text)
    if args.problem == "t-edge":
        res = min_t_edge_exact(g, args.param, args.cap)
        rep.add("size", res.size)
        rep.add("vertices", res.vertices)
        rep.add("edges", " ".join(f"{u}-{v}" for u, v in res.edges))
    elif args.problem == "densest":
        chosen = densest_k_exact(g, args.param, args.cap)
        rep.add("vertices", chosen)
        rep.add("induced_edges", g.induced_edge_count(chosen))
    else:
        sol = kcut_solution(g, args.param, args.cap)
        rep.add("size", sol.size)
        rep.add("edges", " ".join(f"{u}-{v}" for u, v in sorted(sol.removed)))
        rep.add("rank_before", sol.rank_before)
        rep.add("rank_after", sol.certified_rank_after)
    return EXIT_OK


def cmd_suite(args, rep: Report) -> int:
    result = run_suite(args.name, args.seed)
    sys.stdout.write(result.render())
    return EXIT_OK if result.passed else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    cap = _env_int("RANKRED_CAP", DEFAULT_CAP)
    seed = _env_int("RANKRED_SEED", 1)
    parser = argparse.ArgumentParser(prog="rankred", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "record"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, **kw) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], **kw)

    def with_model(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--partition", metavar="FILE")
        group.add_argument("--transversal", metavar="FILE", help="bipartite edge list; ground set is side A")
        group.add_argument("--graphical", metavar="FILE", help="edge list; ground set is the edges")

    p = add("rank", help="rank after removing a set")
    with_model(p)
    p.add_argument("--remove", metavar="FILE", help="indices to remove (edge indices for graphical)")
    p.set_defaults(func=cmd_rank)

    p = add("reduce", help="minimum rank reduction")
    with_model(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--brute", action="store_true", help="enumerate even for partition models")
    p.add_argument("--cap", type=int, default=cap)
    p.set_defaults(func=cmd_reduce)

    p = add("gadget-tedge", help="transversal gadget for min t-edge subgraph")
    p.add_argument("--graph", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gadget_tedge)

    p = add("gadget-clique", help="bipartite max vertex cover gadget for Clique")
    p.add_argument("--graph", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gadget_clique)

    p = add("harness-dks", help="densest k-subgraph via exact t-edge strategy")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true", help="also compute the exact optimum")
    p.add_argument("--cap", type=int, default=cap)
    p.set_defaults(func=cmd_harness_dks)

    p = add("verify", help="check a certificate")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pair", nargs=3, metavar=("GADGET", "X", "Y"))
    group.add_argument("--pvc", nargs=2, metavar=("GADGET", "X"))
    p.set_defaults(func=cmd_verify)

    p = add("oracle", help="exhaustive solvers")
    p.add_argument("--problem", choices=("t-edge", "densest", "mvc", "kcut"), required=True)
    p.add_argument("--graph", required=True)
    p.add_argument("--param", type=int, required=True, help="t or k")
    p.add_argument("--cap", type=int, default=cap)
    p.set_defaults(func=cmd_oracle)

    p = add("suite", help="run a cross-verification suite")
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    rep = Report(args.format)
    try:
        code = args.func(args, rep)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InputError, RankredError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    sys.stdout.write(rep.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
