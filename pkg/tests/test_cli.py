import pytest

from anclab.__main__ import COMMANDS, EXIT_ASSERTION, EXIT_INPUT, EXIT_OK, EXIT_USAGE, main
from anclab.core.errors import SchemeAssertionError
from anclab.services.ingest import ingest_parent_list, read_label_file


def test_params(capsys):
    assert main(["params", "16", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "56,325" in out
    assert "Ancestry bits    : 16" in out


def test_params_invalid_family(capsys):
    assert main(["params", "0", "2"]) == EXIT_INPUT
    assert "Error" in capsys.readouterr().err


def test_usage_errors():
    for argv in ([], ["params", "16"], ["params", "x", "2"], ["nope"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == EXIT_USAGE


def test_gen_label_query(tmp_path, capsys):
    forest = tmp_path / "forest.txt"
    labels = tmp_path / "labels.csv"
    assert main(["--seed", "3", "gen", "50", "4", "-o", str(forest)]) == EXIT_OK
    assert main(["label", str(forest), "-o", str(labels), "--check"]) == EXIT_OK
    assert "Max bits" in capsys.readouterr().out

    F = ingest_parent_list(forest.read_text()).forest
    rows = read_label_file(str(labels)).by_node()
    child = next(v for v in F.nodes() if F.parent[v])
    parent = F.parent[child]

    assert main(["query", str(labels), str(rows[parent].nu), str(rows[child].nu)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "true"
    assert main(["query", str(labels), str(rows[child].nu), str(rows[parent].nu)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "false"
    assert main(["query", "--adjacent", str(labels), str(rows[parent].adj), str(rows[child].adj)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "true"


def test_label_two_node_file(tmp_path, capsys):
    forest = tmp_path / "two.txt"
    forest.write_text("2 2\n1 0\n2 1\n")
    labels = tmp_path / "two.csv"
    assert main(["label", str(forest), "-o", str(labels)]) == EXIT_OK
    assert labels.read_text().splitlines()[2:] == ["1,15,1,28", "2,1,2,1"]
    assert main(["query", str(labels), "15", "1"]) == EXIT_OK
    assert capsys.readouterr().out.strip().endswith("true")


def test_label_xml(tmp_path):
    doc = tmp_path / "doc.xml"
    doc.write_text("<a><b/><c><d/></c></a>")
    assert main(["label", str(doc), "-o", str(tmp_path / "doc.csv")]) == EXIT_OK


@pytest.mark.parametrize("content", ["2 1\n1 0\n2 1\n", "2 2\n1 0\n1 0\n"])
def test_label_invalid_input(tmp_path, content):
    forest = tmp_path / "bad.txt"
    forest.write_text(content)
    assert main(["label", str(forest), "-o", str(tmp_path / "out.csv")]) == EXIT_INPUT


def test_label_missing_file(tmp_path):
    assert main(["label", str(tmp_path / "missing.txt"), "-o", str(tmp_path / "o.csv")]) == EXIT_INPUT


@pytest.mark.parametrize("name", ["bad.xml", "bad.txt"])
def test_label_non_utf8_file(tmp_path, capsys, name):
    forest = tmp_path / name
    forest.write_bytes(b"\xff\xfe<a/>")
    assert main(["label", str(forest), "-o", str(tmp_path / "out.csv")]) == EXIT_INPUT
    assert "not UTF-8" in capsys.readouterr().err


def test_query_non_utf8_label_file(tmp_path):
    labels = tmp_path / "labels.csv"
    labels.write_bytes(b"\xff\xfe")
    assert main(["query", str(labels), "1", "2"]) == EXIT_INPUT


def test_bench_non_utf8_config(tmp_path):
    config = tmp_path / "bench.json"
    config.write_bytes(b"\xff\xfe{}")
    assert main(["bench", str(config)]) == EXIT_INPUT


def test_query_label_out_of_range(tmp_path):
    forest = tmp_path / "two.txt"
    forest.write_text("2 2\n1 0\n2 1\n")
    labels = tmp_path / "two.csv"
    main(["label", str(forest), "-o", str(labels)])
    assert main(["query", str(labels), "110", "1"]) == EXIT_INPUT


def test_internal_assertion_maps_to_three(monkeypatch):
    def broken(args):
        raise SchemeAssertionError("h_1 not below H_k")

    monkeypatch.setitem(COMMANDS, "params", broken)
    assert main(["params", "4", "2"]) == EXIT_ASSERTION


def test_bench(tmp_path, capsys):
    config = tmp_path / "bench.json"
    config.write_text('{"n_values": [16], "d_values": [2], "queries": 100, "spot_checks": 10}')
    out = tmp_path / "bench.csv"
    assert main(["--seed", "1", "bench", str(config), "-o", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0].startswith("family,n,d,trials,scheme,max_bits")
    assert len(lines) == 3


def test_bench_bad_config(tmp_path):
    config = tmp_path / "bench.json"
    config.write_text('{"d_values": []}')
    assert main(["bench", str(config)]) == EXIT_INPUT


def test_universal_check(tmp_path, capsys):
    edges = tmp_path / "edges.txt"
    assert main(["universal-check", "2", "2", "--trials", "3", "--export", str(edges)]) == EXIT_OK
    assert "3/3" in capsys.readouterr().out
    assert edges.read_text().count("\n") > 0


def test_universal_check_export_too_large(tmp_path):
    assert main(["universal-check", "64", "4", "--trials", "1",
                 "--export", str(tmp_path / "e.txt")]) == EXIT_INPUT


def test_selftest(capsys):
    assert main(["selftest", "--max-n", "4"]) == EXIT_OK
    assert "PASSED" in capsys.readouterr().out
