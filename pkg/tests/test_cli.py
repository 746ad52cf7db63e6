import json

import pytest

import coxsort.hecke
from coxsort.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_tsv(capsys):
    code, out, _ = run(capsys, "group", "--type", "B2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "word\tlength\tleft_descents\tright_descents"
    assert len(lines) == 9  # header + 8 elements
    assert lines[1].startswith("e\t0\t-\t-")


def test_group_json(capsys):
    code, out, _ = run(capsys, "group", "--type", "A1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 2
    words = [e["word"] for e in payload["elements"]]
    assert words == ["e", "1"]


def test_group_rejects_dot(capsys):
    code, _, err = run(capsys, "group", "--type", "B2", "--format", "dot")
    assert code == 2
    assert "error:" in err


def test_orders_dot_blocks(capsys):
    code, out, _ = run(capsys, "orders", "all", "--type", "B2", "--w", "1,2,1,2")
    assert code == 0
    blocks = out.strip().split("\n\n")
    assert len(blocks) == 4  # weak, two sorting orders, bruhat
    assert blocks[0].startswith('digraph "weak"')
    assert blocks[-1].startswith('digraph "bruhat"')
    assert all("rankdir=BT;" in b for b in blocks)
    weak_edges = blocks[0].count("->")
    bruhat_edges = blocks[-1].count("->")
    assert weak_edges == 8   # two maximal chains of length 4
    assert bruhat_edges == 12
    # cover edges only: the full relation on [e, w0] has many more pairs
    assert '"e" -> "1,2,1,2"' not in blocks[-1]


def test_orders_sorting_tsv(capsys):
    code, out, _ = run(capsys, "orders", "sorting", "--type", "B2",
                       "--w", "2,1,2", "--Q", "2,1,2", "--format", "tsv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "# sorting 2,1,2"
    covers = {tuple(line.split("\t")) for line in lines[1:]}
    assert covers == {("e", "1"), ("e", "2"), ("1", "1,2"), ("1", "2,1"),
                      ("2", "2,1"), ("1,2", "2,1,2"), ("2,1", "2,1,2")}


def test_orders_sorting_needs_q(capsys):
    code, _, err = run(capsys, "orders", "sorting", "--type", "B2", "--w", "2,1,2")
    assert code == 2
    assert "--Q" in err


def test_orders_json_roundtrip(capsys):
    code, out, _ = run(capsys, "orders", "weak", "--type", "A2",
                       "--w", "1,2,1", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    (poset,) = payload["posets"]
    assert poset["label"] == "weak"
    assert len(poset["ground"]) == 6
    assert len(poset["leq"]) == 6


def test_subword_sphere(capsys):
    code, out, _ = run(capsys, "subword", "--type", "B2",
                       "--Q", "1,2,1,2,1", "--w", "1,2,1,2")
    assert code == 0
    payload = json.loads(out)
    assert payload["classification"] == "sphere"
    assert payload["facets"] == [[1], [5]]
    assert payload["betti"]["GF(2)"] == {"0": 1}
    assert payload["betti"]["Q"] == {"0": 1}
    assert payload["betti_matches_classification"] is True


def test_subword_ball(capsys):
    code, out, _ = run(capsys, "subword", "--type", "B2",
                       "--Q", "1,2,1,2", "--w", "1,2,1", "--format", "tsv")
    assert code == 0
    assert "classification\tball" in out


def test_subword_void(capsys):
    code, _, err = run(capsys, "subword", "--type", "B2",
                       "--Q", "1,2,1", "--w", "2,1,2,1")
    assert code == 2
    assert "error:" in err


def test_fibers_table(capsys):
    code, out, _ = run(capsys, "fibers", "--type", "B2", "--Q", "1,2,1,2")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "u\tcomplex\tfiber_up\topen_fiber\tcontractible"
    assert len(lines) == 9
    by_u = {line.split("\t")[0]: line.split("\t") for line in lines[1:]}
    assert by_u["e"][1:] == ["ball", "16", "14", "-"]
    assert by_u["1,2,1,2"][1:] == ["sphere", "1", "-", "True"]


def test_fibers_rejects_non_reduced(capsys):
    code, _, err = run(capsys, "fibers", "--type", "B2", "--Q", "1,1")
    assert code == 2
    assert "not reduced" in err


def test_totalpos(capsys):
    code, out, _ = run(capsys, "totalpos", "--trials", "6", "--seed", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["additive"] == {"passed": 6, "trials": 6}
    assert payload["exchange"] == {"passed": 6, "trials": 6}
    assert payload["nonnegative_products"] == {"passed": 3, "trials": 3}


def test_matrix_file(tmp_path, capsys):
    path = tmp_path / "b2.txt"
    path.write_text("2\n1 4\n4 1\n")
    code, out, _ = run(capsys, "group", "--matrix", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["order"] == 8

    bad = tmp_path / "bad.txt"
    bad.write_text("2\n1 4 4\n")
    code, _, err = run(capsys, "group", "--matrix", str(bad))
    assert code == 2 and "should hold" in err

    code, _, err = run(capsys, "group", "--matrix", str(tmp_path / "missing.txt"))
    assert code == 2 and "error:" in err


def test_requires_type_or_matrix(capsys):
    code, _, err = run(capsys, "group")
    assert code == 2
    assert "--type or --matrix" in err


def test_verify_cli(capsys):
    code, out, _ = run(capsys, "verify", "--type", "I2:3")
    assert code == 0
    report = json.loads(out)
    assert report["timing"] is None
    assert report["system"]["groups"] == ["I2:3"]
    assert len(report["theorem_results"]) == 12
    assert all(r["passed"] for r in report["theorem_results"])
    code2, out2, _ = run(capsys, "verify", "--type", "I2:3")
    assert code2 == 0 and out2 == out  # byte-identical reruns


def test_verify_unknown_group(capsys):
    code, _, err = run(capsys, "verify", "--type", "X9")
    assert code == 2
    assert "unknown group" in err


def test_verify_reports_failure_exit_code(monkeypatch, capsys):
    real = coxsort.hecke.sorting_subword

    def swapped(system, Q, u):
        # misreport the two atoms of rank-2 groups when both fit below Q
        if system.rank == 2 and u.length == 1:
            other = system.element((3 - u.word[0],))
            try:
                return real(system, Q, other)
            except ValueError:
                return real(system, Q, u)
        return real(system, Q, u)

    monkeypatch.setattr(coxsort.hecke, "sorting_subword", swapped)
    code, out, _ = run(capsys, "verify", "--type", "B2")
    assert code == 1
    report = json.loads(out)
    failed = {r["name"] for r in report["theorem_results"] if not r["passed"]}
    assert "sorting_sandwich" in failed
    sandwich = next(r for r in report["theorem_results"]
                    if r["name"] == "sorting_sandwich")
    assert sandwich["failures"]
    assert {"group", "w", "Q", "u", "v", "detail"} <= set(sandwich["failures"][0])
