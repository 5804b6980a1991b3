import pytest

from rankred.cli import main
from rankred.clique import build_clique_gadget, clique_to_pvc, preprocess_clique_instance
from rankred.formats import write_bipartite, write_certificate, write_graph, write_partition
from rankred.graphs import BipartiteGraph, Graph
from rankred.tedge import build_t_edge_gadget, subgraph_to_pair


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def fields(out):
    return dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)


@pytest.fixture
def model_file(tmp_path, three_block_model):
    p = tmp_path / "model.txt"
    p.write_text(write_partition(three_block_model))
    return str(p)


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "tri.txt"
    p.write_text(write_graph(Graph.complete(3)))
    return str(p)


def test_reduce_partition(capsys, model_file):
    code, out, _ = run(capsys, "reduce", "--partition", model_file, "--k", "2")
    f = fields(out)
    assert code == 0
    assert f["size"] == "2" and f["verified"] == "yes"
    assert int(f["rank_after"]) <= int(f["rank_before"]) - 2
    assert "input_digest" in f


def test_reduce_brute_agrees(capsys, model_file):
    _, dp, _ = run(capsys, "reduce", "--partition", model_file, "--k", "3")
    _, bf, _ = run(capsys, "reduce", "--partition", model_file, "--k", "3", "--brute")
    assert fields(dp)["size"] == fields(bf)["size"] == "4"


def test_record_format(capsys, model_file):
    code, out, _ = run(capsys, "reduce", "--partition", model_file, "--k", "2", "--format", "record")
    assert code == 0 and "size=2\n" in out


def test_reduce_infeasible_k(capsys, model_file):
    code, _, err = run(capsys, "reduce", "--partition", model_file, "--k", "6")
    assert code == 2 and err


def test_reduce_graphical(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(write_graph(Graph.complete(3).disjoint_union(Graph.complete(3))))
    code, out, _ = run(capsys, "reduce", "--graphical", str(p), "--k", "1")
    assert code == 0 and fields(out)["size"] == "2"


def test_rank_transversal(capsys, tmp_path):
    g = BipartiteGraph.from_sizes(2, 2, [(0, 2), (1, 2), (1, 3)])
    gp, xp = tmp_path / "g.txt", tmp_path / "x.txt"
    gp.write_text(write_bipartite(g))
    xp.write_text("set 1\n")
    code, out, _ = run(capsys, "rank", "--transversal", str(gp), "--remove", str(xp))
    f = fields(out)
    assert code == 0 and (f["rank_full"], f["rank_after"]) == ("2", "1")


def test_parse_error_exit(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("partition 1\n1 0 x\n")
    code, _, err = run(capsys, "rank", "--partition", str(p))
    assert code == 1 and "line 2" in err


def test_missing_file(capsys):
    assert run(capsys, "rank", "--partition", "/nonexistent")[0] == 1


def test_bad_arguments(capsys):
    assert run(capsys, "reduce")[0] == 1


def test_gadget_tedge_and_verify(capsys, tmp_path, triangle_file):
    out_path = tmp_path / "gadget.txt"
    code, _, _ = run(capsys, "gadget-tedge", "--graph", triangle_file, "--t", "1", "--out", str(out_path))
    assert code == 0
    pair = subgraph_to_pair(build_t_edge_gadget(Graph.complete(3), 1), [(0, 1)])
    xp, yp = tmp_path / "x.txt", tmp_path / "y.txt"
    xp.write_text(write_certificate(pair.x))
    yp.write_text(write_certificate(pair.y))
    code, out, _ = run(capsys, "verify", "--pair", str(out_path), str(xp), str(yp))
    assert code == 0 and fields(out)["valid"] == "yes"
    yp.write_text("set\n")
    assert run(capsys, "verify", "--pair", str(out_path), str(xp), str(yp))[0] == 2


def test_gadget_tedge_bad_t(capsys, triangle_file):
    assert run(capsys, "gadget-tedge", "--graph", triangle_file, "--t", "4")[0] == 2


def test_gadget_clique_and_verify(capsys, tmp_path):
    h, _ = preprocess_clique_instance(Graph.complete(6), 6)
    hp = tmp_path / "h.txt"
    hp.write_text(write_graph(h))
    code, out, _ = run(capsys, "gadget-clique", "--graph", str(hp), "--ell", "6")
    assert code == 0 and "k 42 ell 6\n" in out
    gp = tmp_path / "gad.txt"
    gp.write_text(out)
    xp = tmp_path / "x.txt"
    xp.write_text(write_certificate(clique_to_pvc(build_clique_gadget(h, 6), range(6))))
    code, out, _ = run(capsys, "verify", "--pvc", str(gp), str(xp))
    f = fields(out)
    assert code == 0 and f["coverage"] == f["threshold"] == "168"
    assert f["clique"] == "0 1 2 3 4 5"


def test_gadget_clique_no_clique(capsys, tmp_path):
    p = tmp_path / "p.txt"
    p.write_text(write_graph(Graph.path(4)))
    code, out, _ = run(capsys, "gadget-clique", "--graph", str(p), "--ell", "6")
    assert code == 0 and fields(out)["status"] == "no-clique"


def test_gadget_clique_small_ell(capsys, triangle_file):
    code, out, _ = run(capsys, "gadget-clique", "--graph", triangle_file, "--ell", "3")
    assert code == 0 and fields(out)["clique"] == "0 1 2"


def test_harness_dks(capsys, tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(write_graph(Graph.complete(4)))
    code, out, _ = run(capsys, "harness-dks", "--graph", str(p), "--k", "4", "--check")
    f = fields(out)
    assert code == 0 and f["induced_edges"] == "6" and f["guarantee_met"] == "yes"


@pytest.mark.parametrize(
    "problem, param, key, value",
    [("t-edge", "2", "size", "3"), ("densest", "2", "induced_edges", "1"), ("mvc", "1", "covered", "2"), ("kcut", "2", "size", "3")],
)
def test_oracles(capsys, triangle_file, problem, param, key, value):
    code, out, _ = run(capsys, "oracle", "--problem", problem, "--graph", triangle_file, "--param", param)
    assert code == 0 and fields(out)[key] == value


def test_cap_env(capsys, monkeypatch, tmp_path):
    p = tmp_path / "k6.txt"
    p.write_text(write_graph(Graph.complete(6)))
    monkeypatch.setenv("RANKRED_CAP", "3")
    assert run(capsys, "oracle", "--problem", "densest", "--graph", str(p), "--param", "3")[0] == 1
    monkeypatch.setenv("RANKRED_CAP", "nope")
    assert run(capsys, "oracle", "--problem", "densest", "--graph", str(p), "--param", "3")[0] == 1


def test_suite_replay_is_byte_identical(capsys):
    first = run(capsys, "suite", "ip-lemma", "--seed", "3")
    second = run(capsys, "suite", "ip-lemma", "--seed", "3")
    assert first == second and first[0] == 0
    assert "property unique_optimum: pass 7 fail 0" in first[1]


def test_suite_seeded_replay(capsys):
    a = run(capsys, "suite", "partition", "--seed", "7")
    b = run(capsys, "suite", "partition", "--seed", "7")
    assert a == b and "status: PASS" in a[1]


def test_suite_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("RANKRED_SEED", "9")
    _, out, _ = run(capsys, "suite", "intersection")
    assert "seed: 9\n" in out


def test_unknown_suite(capsys):
    assert run(capsys, "suite", "nope")[0] == 1
