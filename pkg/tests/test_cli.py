import json

import pytest

from antimagic.cli import main


def run(args):
    return main(args)


def read(path):
    with open(path) as fh:
        return json.load(fh)


def test_gen_label_verify_round_trip(tmp_path):
    gpath = tmp_path / "g.json"
    lpath = tmp_path / "l.json"
    assert run(["gen", "--family", "cycles", "-r", "2", "-n", "6",
                "--out", str(gpath)]) == 0
    report = tmp_path / "rep.json"
    assert run(["label", "--family", "cycles", "-r", "2", "-n", "6",
                "--out", str(report)]) == 0
    rep = read(report)
    assert rep["num_colors"] == 3
    lpath.write_text(json.dumps({"labels": rep["labels"]}))
    assert run(["verify", str(gpath), str(lpath)]) == 0


def test_verify_rejects_broken_labeling(tmp_path):
    gpath = tmp_path / "g.json"
    assert run(["gen", "--family", "stars", "-r", "1", "-n", "3",
                "--out", str(gpath)]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"labels": [1, 1, 2]}))
    assert run(["verify", str(gpath), str(bad)]) == 2
    short = tmp_path / "short.json"
    short.write_text(json.dumps({"labels": [1, 2]}))
    assert run(["verify", str(gpath), str(short)]) == 2


def test_gen_infeasible_exits_3(tmp_path):
    assert run(["gen", "--family", "cycles", "-n", "2"]) == 3


def test_label_reports(tmp_path):
    out = tmp_path / "r.json"
    assert run(["label", "--family", "stars", "-r", "3", "-n", "3",
                "--out", str(out)]) == 0
    assert read(out)["num_colors"] == 10
    assert run(["label", "--family", "bipartite", "-r", "3", "-m", "2",
                "-n", "4", "--out", str(out)]) == 0
    assert read(out)["num_colors"] == 2
    assert run(["label", "--family", "cycles", "-r", "1", "-n", "4",
                "--out", str(out)]) == 0
    assert read(out)["num_colors"] == 3


def test_solve(tmp_path):
    gpath = tmp_path / "c5.json"
    out = tmp_path / "res.json"
    assert run(["gen", "--family", "cycles", "-r", "1", "-n", "5",
                "--out", str(gpath)]) == 0
    assert run(["solve", str(gpath), "--out", str(out)]) == 0
    res = read(out)
    assert res["chi_la"] == 3 and res["status"] == "exact"


def test_solve_necklace_figure(tmp_path):
    gpath = tmp_path / "neck.json"
    out = tmp_path / "res.json"
    assert run(["gen", "--family", "necklace", "--lengths", "4,4,4",
                "--out", str(gpath)]) == 0
    assert run(["solve", str(gpath), "--out", str(out)]) == 0
    assert read(out)["chi_la"] == 3


def test_solve_oversize_exits_4(tmp_path):
    gpath = tmp_path / "k7.json"
    assert run(["gen", "--family", "complete", "-n", "7",
                "--out", str(gpath)]) == 0
    assert run(["solve", str(gpath)]) == 4


def test_mr_infeasible_exit_3():
    assert run(["mr", "-a", "2", "-b", "2"]) == 3


def test_mrs_output_sums(tmp_path):
    out = tmp_path / "mrs.json"
    assert run(["mrs", "-a", "2", "-b", "4", "-c", "3",
                "--out", str(out)]) == 0
    data = read(out)
    for rect in data["rectangles"]:
        assert all(sum(row) == 50 for row in rect)
        assert all(rect[0][j] + rect[1][j] == 25 for j in range(4))


def test_bounds(tmp_path):
    gpath = tmp_path / "g.json"
    out = tmp_path / "b.json"
    assert run(["gen", "--family", "necklace", "--lengths", "4,4,4",
                "--out", str(gpath)]) == 0
    assert run(["bounds", str(gpath), "--out", str(out)]) == 0
    assert read(out)["best_lower"] == 3


def test_export_dot(tmp_path):
    gpath = tmp_path / "g.json"
    lpath = tmp_path / "l.json"
    rpath = tmp_path / "r.json"
    assert run(["gen", "--family", "cycles", "-r", "2", "-n", "6",
                "--out", str(gpath)]) == 0
    assert run(["label", "--family", "cycles", "-r", "2", "-n", "6",
                "--out", str(rpath)]) == 0
    lpath.write_text(json.dumps({"labels": read(rpath)["labels"]}))
    dot = tmp_path / "g.dot"
    assert run(["export-dot", str(gpath), "--labeling", str(lpath),
                "--out", str(dot)]) == 0
    text = dot.read_text()
    assert "label=" in text and "xlabel=" in text and "// manifest" in text


def test_manifest_embedded(tmp_path):
    out = tmp_path / "g.json"
    assert run(["gen", "--family", "complete", "-n", "4",
                "--out", str(out)]) == 0
    data = read(out)
    assert data["manifest"]["command"] == "gen"
    assert len(data["manifest_hash"]) == 64


def test_outputs_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert run(["label", "--family", "paths", "-r", "2", "-n", "5",
                    "--out", str(path)]) == 0
    assert a.read_text() == b.read_text()


def test_corona_and_join_via_cli(tmp_path):
    gpath, rpath = tmp_path / "c3.json", tmp_path / "c3lab.json"
    lpath = tmp_path / "labels.json"
    assert run(["gen", "--family", "cycles", "-r", "1", "-n", "3",
                "--out", str(gpath)]) == 0
    assert run(["label", "--family", "cycles", "-r", "1", "-n", "3",
                "--out", str(rpath)]) == 0
    lpath.write_text(json.dumps({"labels": read(rpath)["labels"]}))
    out = tmp_path / "corona.json"
    assert run(["label", "--family", "corona", "--input", str(gpath),
                "--labeling", str(lpath), "-m", "3", "--out", str(out)]) == 0
    assert read(out)["num_colors"] == 12
    # infeasible corona: parity mismatch
    assert run(["label", "--family", "corona", "--input", str(gpath),
                "--labeling", str(lpath), "-m", "2"]) == 3
