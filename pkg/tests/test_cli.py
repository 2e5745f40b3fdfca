import json

import pytest

from cutlab.cli import ParseError, main, parse_graph_expression
from cutlab.graphs import Graph, write_edge_list


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dsl_examples():
    G = parse_graph_expression("C3 #0 P1")
    assert (G.n_vertices, G.n_edges) == (4, 4)
    G = parse_graph_expression("C5 #1[0=0,1=1] C4")
    assert (G.n_vertices, G.n_edges) == (7, 8)
    assert parse_graph_expression("K5").n_edges == 10
    assert parse_graph_expression("K2x3").n_edges == 6
    G = parse_graph_expression("C5 #H[4=0, 0=1, 1=2] C4")
    assert (G.n_vertices, G.n_edges) == (6, 7)


def test_dsl_left_associative():
    G = parse_graph_expression("P1 #0 P1 #0 P1")
    assert G.edges == ((0, 1), (1, 2), (2, 3))


@pytest.mark.parametrize("text,pos", [
    ("C3 #1 C4", 3),           # missing glue
    ("C3 #0 Q1", 6),           # bad atom
    ("C3 #0 P1 #", 9),
    ("C3 #1[0=0,2=2] C4", 3),  # right side not a clique
    ("C3 #1[0=0 1=1] C4", 6),
    ("C3 #4[0=0] C4", 3),
])
def test_dsl_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_graph_expression(text)
    assert info.value.position == pos


def test_file_atom(tmp_path):
    f = tmp_path / "tri.txt"
    f.write_text(write_edge_list(parse_graph_expression("C3")))
    G = parse_graph_expression(f"file:{f} #0 P1")
    assert G.n_edges == 4


def test_analyze_c4(capsys):
    code, out, _ = run(capsys, "analyze", "C4")
    data = json.loads(out)
    assert code == 0 and data["regularity"] == 3
    assert data["canonical_generators"]["generators"] == [[1, 1, 1, 1, 2]]
    assert Graph.from_json(data["graph"]) == parse_graph_expression("C4")


def test_analyze_isomorphic_labelings_agree(capsys):
    _, a, _ = run(capsys, "analyze", "C5 #0 P1")
    _, b, _ = run(capsys, "analyze", "P1 #0 C5")
    da, db = json.loads(a), json.loads(b)
    assert da["regularity"] == db["regularity"]
    ms = lambda d: sorted(tuple(sorted(g)) for g in d["canonical_generators"]["generators"])
    assert ms(da) == ms(db)


def test_member_c3(capsys):
    code, out, _ = run(capsys, "member", "C3", "--point", "2,2,2,4", "--strict", "--decompose")
    data = json.loads(out)
    assert code == 0 and data["interior"] is True and data["decomposition"]["size"] == 4


def test_member_bad_point(capsys):
    code, _, err = run(capsys, "member", "C3", "--point", "1,1,4")
    assert code == 2 and "coordinates" in err


def test_facets_k5_rejected(capsys):
    code, _, err = run(capsys, "facets", "K5")
    assert code == 1 and json.loads(err)["branch_sets"] == [[0], [1], [2], [3], [4]]


def test_witness_round_trip(capsys, tmp_path):
    f = tmp_path / "w.json"
    assert run(capsys, "witness", "k5", "--out", str(f))[0] == 0
    code, out, _ = run(capsys, "verify-witness", str(f))
    assert code == 0 and json.loads(out)["ok"]
    data = json.loads(f.read_text())
    data["interior_certificate"][5] = "0"
    f.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify-witness", str(f))
    assert code == 1 and json.loads(out)["failed_leg"] == "interior"


def test_verify_witness_io_errors(capsys, tmp_path):
    assert run(capsys, "verify-witness", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "verify-witness", str(bad))[0] == 2


def test_normality_and_classify(capsys):
    code, out, _ = run(capsys, "normality", "C5", "--bound", "5")
    assert code == 0 and json.loads(out)["status"] == "verified_up_to_bound"
    code, out, _ = run(capsys, "classify", "--max-edges", "4", "--dedup")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and lines[-1]["summary"]["graphs"] == 10 and lines[-1]["summary"]["ok"]
    assert all("canonical_edges" in rec for rec in lines[:-1])


def test_pretty_and_env_bound(capsys, monkeypatch):
    code, out, _ = run(capsys, "--pretty", "analyze", "C3")
    assert code == 0 and "regularity   0" in out
    monkeypatch.setenv("CUTLAB_DEG_BOUND", "2")
    code, out, _ = run(capsys, "analyze", "C3")
    data = json.loads(out)
    assert data["canonical_generators"]["degree_bound"] == 2
    assert data["canonical_generators"]["generators"] == []


def test_show_labels(capsys):
    _, out, _ = run(capsys, "facets", "P2", "--show-labels")
    assert json.loads(out)["labels"]["edges"] == [{"index": 0, "u": 0, "v": 1}, {"index": 1, "u": 1, "v": 2}]
