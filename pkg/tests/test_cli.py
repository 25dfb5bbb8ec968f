"""End-to-end command checks through main(argv)."""

import json

import pytest

from ramsey3 import Hypergraph, check_free, from_json_dict, to_json_dict
from ramsey3.cli import main
from ramsey3.colorengine import EdgeColoring
from ramsey3.gadgets import TaggedGadget
from ramsey3.hypercore import codegree


def write_graph(tmp_path, h, name="h.json", tags=None):
    path = tmp_path / name
    path.write_text(json.dumps(to_json_dict(h, tags=tags)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out + captured.err


def test_arrow_yes_and_json(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(6, 2))
    code, out = run(capsys, "arrow", path, "-t", "3", "-k", "2")
    assert code == 0 and "arrows: yes" in out
    code, out = run(capsys, "arrow", path, "-t", "3", "-k", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["arrows"] is True and doc["witness"] is None


def test_arrow_no_with_witness(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(5, 2))
    code, out = run(capsys, "arrow", path, "-t", "3", "-k", "2", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["arrows"] is False
    col = EdgeColoring.from_json_dict(doc["witness"])
    assert check_free(Hypergraph.complete(5, 2), col, 3) == []


def test_arrow_budget_exit_two(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(6, 2))
    code, out = run(capsys, "arrow", path, "-t", "3", "-k", "2", "--budget", "2")
    assert code == 2 and "unknown" in out


def test_missing_file_exit_three(capsys):
    code, out = run(capsys, "arrow", "/nonexistent/x.json", "-t", "3", "-k", "2")
    assert code == 3 and "io error" in out


def test_usage_error_exit_one(capsys):
    code, _ = run(capsys, "arrow")
    assert code == 1


def test_domain_error_exit_one(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(5, 3))
    code, _ = run(capsys, "cliques", path, "-t", "1")
    assert code == 1


def test_minimalize_round_trip(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(7, 2))
    out_path = tmp_path / "m.json"
    code, _ = run(capsys, "minimalize", path, "-t", "3", "-k", "2",
                  "-o", str(out_path))
    assert code == 0
    m, _ = from_json_dict(json.loads(out_path.read_text()))
    assert m.num_vertices == 6 and m.num_edges == 15


def test_free_coloring_json(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(5, 3))
    code, out = run(capsys, "free-coloring", path, "-t", "4", "-k", "2")
    doc = json.loads(out)
    assert code == 0 and doc["found"] is True
    col = EdgeColoring.from_json_dict(doc["coloring"])
    assert check_free(Hypergraph.complete(5, 3), col, 4) == []


def test_cnf_dimacs_and_solve(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(4, 3))
    code, out = run(capsys, "cnf", path, "-t", "4", "-k", "2")
    assert code == 0
    assert any(ln.startswith("p cnf ") for ln in out.splitlines())
    assert any(ln.startswith("c map ") for ln in out.splitlines())
    code, out = run(capsys, "cnf", path, "-t", "4", "-k", "2", "--solve")
    doc = json.loads(out)
    assert code == 0 and doc["satisfiable"] is True
    col = EdgeColoring.from_json_dict(doc["coloring"])
    assert check_free(Hypergraph.complete(4, 3), col, 4) == []


def test_distance_human_and_unreachable(tmp_path, capsys):
    h = Hypergraph.build(3, [(0, 1, 2), (1, 2, 3), (4, 5, 6)])
    path = write_graph(tmp_path, h)
    code, out = run(capsys, "distance", path, "-e", "0,1,2", "-f", "1,2,3")
    assert code == 0 and "distance: 4" in out
    code, out = run(capsys, "distance", path, "-e", "0,1,2", "-f", "4,5,6",
                    "--json")
    assert code == 0 and json.loads(out)["distance"] is None


def test_cliques_output(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(5, 3))
    code, out = run(capsys, "cliques", path, "-t", "4", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 5


def test_gadget_fprime_fell(tmp_path, capsys):
    code, out = run(capsys, "gadget", "fprime", "-m", "6")
    doc = json.loads(out)
    assert code == 0 and len(doc["edges"]) == 16 and doc["tags"]["S"] == [4, 5]
    code, out = run(capsys, "gadget", "fell", "-m", "6", "--ell", "2")
    assert code == 0 and len(json.loads(out)["edges"]) == 18


def test_gadget_pipeline_hstar_sender(tmp_path, capsys):
    c5 = Hypergraph.build(2, [(i, (i + 1) % 5) for i in range(5)])
    path = write_graph(tmp_path, c5)
    hs_path = tmp_path / "hs.json"
    code, _ = run(capsys, "gadget", "hstar", path, "--patterns", "1,1",
                  "-o", str(hs_path))
    assert code == 0
    sd_path = tmp_path / "sender.json"
    code, _ = run(capsys, "gadget", "sender", str(hs_path), "-m", "5",
                  "-o", str(sd_path))
    assert code == 0
    g = TaggedGadget.from_json_dict(json.loads(sd_path.read_text()))
    assert g.h.num_vertices == 13
    assert codegree(g.h, g.a, g.b) == 0


def test_gadget_rainbow_equalizer_amplify(tmp_path, capsys):
    eq_path = tmp_path / "eq.json"
    code, out = run(capsys, "gadget", "rainbow", "-k", "3", "--sender", "mock")
    assert code == 0 and len(json.loads(out)["tags"]["rainbow"]) == 3
    code, _ = run(capsys, "gadget", "equalizer", "-k", "2", "--sender", "mock",
                  "-o", str(eq_path))
    assert code == 0
    code, out = run(capsys, "gadget", "amplify", str(eq_path), "-s", "8",
                    "--from-equalizer")
    doc = json.loads(out)
    assert code == 0 and doc["tags"]["dist"] >= 8


def test_gadget_bel_and_apex(tmp_path, capsys):
    host_path = tmp_path / "host.json"
    code, _ = run(capsys, "codegree", "host", "-t", "4", "-o", str(host_path))
    assert code == 0
    host_doc = json.loads(host_path.read_text())
    graph_path = tmp_path / "hostgraph.json"
    graph_path.write_text(json.dumps(host_doc["host"]))
    col_path = tmp_path / "col.json"
    col_path.write_text(json.dumps(host_doc["coloring"]))
    code, out = run(capsys, "gadget", "bel", str(graph_path),
                    "--coloring", str(col_path), "-t", "4", "-k", "2")
    doc = json.loads(out)
    assert code == 0 and len(doc["tags"]["rainbow"]) == 2

    small = write_graph(tmp_path, Hypergraph.build(3, [(0, 1, 2)]), "s.json")
    code, out = run(capsys, "gadget", "apex", small, "--base", "0,1,2")
    doc = json.loads(out)
    assert code == 0 and doc["tags"]["apex"] == 3 and len(doc["edges"]) == 4


def test_codegree_force_check_and_drop(capsys):
    code, out = run(capsys, "codegree", "force-check", "-t", "4", "--json")
    assert code == 0 and json.loads(out)["forced"] is True
    code, out = run(capsys, "codegree", "force-check", "-t", "4",
                    "--drop", "0", "--json")
    assert code == 0 and json.loads(out)["forced"] is False
    code, out = run(capsys, "codegree", "force-check", "-t", "5",
                    "--limit", "10")
    assert code == 2


def test_codegree_extend(tmp_path, capsys):
    host_path = tmp_path / "host.json"
    run(capsys, "codegree", "host", "-t", "4", "-o", str(host_path))
    doc = json.loads(host_path.read_text())
    host, tags = from_json_dict(doc["host"])
    a, b = tags["a"], tags["b"]
    withuv = host.plus_edges([(0, a, b), (2, a, b)])
    g_path = write_graph(tmp_path, withuv, "guv.json")
    col_path = tmp_path / "pc.json"
    col_path.write_text(json.dumps(doc["coloring"]))
    code, out = run(capsys, "codegree", "extend", g_path,
                    "--coloring", str(col_path),
                    "-u", str(a), "-v", str(b), "-t", "4")
    ext = json.loads(out)
    assert code == 0
    col = EdgeColoring.from_json_dict(ext["coloring"])
    assert check_free(withuv, col, 4) == []


def test_codegree_expectation(capsys):
    code, out = run(capsys, "codegree", "expectation", "-t", "4", "--json")
    rows = json.loads(out)["expectations"]
    assert code == 0 and rows[0]["numerator"] == 3
    assert rows[0]["denominator"] == 4 and rows[0]["lt_one"] is True
    code, out = run(capsys, "codegree", "expectation", "-t", "4",
                    "--until", "8", "--json")
    rows = json.loads(out)["expectations"]
    assert code == 0 and len(rows) == 5 and all(r["lt_one"] for r in rows)


def test_lab_sample_and_prune(tmp_path, capsys):
    code, out = run(capsys, "lab", "sample", "-n", "10", "-p", "0.2",
                    "--seed", "7")
    assert code == 0 and json.loads(out)["r"] == 3
    fam_path = tmp_path / "fam.json"
    code, _ = run(capsys, "lab", "sample", "-n", "12", "-p", "0.25", "-k", "2",
                  "--seed", "7", "-o", str(fam_path))
    assert code == 0
    assert len(json.loads(fam_path.read_text())["members"]) == 2
    code, out = run(capsys, "lab", "prune", str(fam_path), "-t", "4")
    doc = json.loads(out)
    assert code == 0 and len(doc["members"]) == 2
    # sampling route, no input file
    code, out = run(capsys, "lab", "prune", "-t", "4", "-n", "12", "-p", "0.25",
                    "--seed", "9")
    assert code == 0 and "members" in json.loads(out)


def test_lab_prune_needs_source(capsys):
    code, _ = run(capsys, "lab", "prune", "-t", "4")
    assert code == 1


def test_lab_report_and_fact_bound(capsys):
    code, out = run(capsys, "lab", "report", "-n", "10", "-p", "0.3", "-t", "4",
                    "-k", "2", "--trials", "40", "--seed", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] is True and len(doc["checks"]) == 3
    code, out = run(capsys, "lab", "fact-bound", "-n", "6", "-k", "2",
                    "--ell", "3", "--seed", "3", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] is True


def test_lab_paper_params(capsys):
    code, out = run(capsys, "lab", "paper-params", "-k", "2", "-t", "4",
                    "--json")
    doc = json.loads(out)
    assert code == 0 and doc["log2_n"] == "5120" and doc["log2_p"] == "-5070"


def test_root_compat_flags(tmp_path, capsys):
    path = write_graph(tmp_path, Hypergraph.complete(5, 2))
    code, _ = run(capsys, "--jobs", "4", "--deterministic", "arrow", path,
                  "-t", "3", "-k", "2")
    assert code == 0
