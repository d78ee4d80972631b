import io
import json

import pytest

from mostar import decode_graph6, encode_graph6, mostar_index, path
from mostar.cli import main
from mostar.generate import _reset_cache


def run_cli(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        assert monkeypatch is not None
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_witness_basic(capsys):
    code, out, err = run_cli(capsys, ["witness", "7"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("#")
    p, family, params, g6, certified = lines[1].split("\t")
    assert p == "7" and family == "EVEN_CYCLE_PLUS_PENDANT" and certified == "7"
    g = decode_graph6(g6)
    assert g.n == 5 and mostar_index(g) == 7


def test_witness_line_revalidates(capsys):
    for p in (0, 2, 3, 9, 16, 101):
        code, out, _ = run_cli(capsys, ["witness", str(p)])
        assert code == 0
        fields = out.splitlines()[1].split("\t")
        assert mostar_index(decode_graph6(fields[3])) == int(fields[4]) == p


def test_witness_not_realizable_exit_code(capsys):
    code, out, err = run_cli(capsys, ["witness", "1"])
    assert code == 3
    assert not out
    assert "index 1" in err


def test_witness_chemical_unknown_exit_code(capsys):
    code, _, err = run_cli(capsys, ["witness", "5", "--chemical"])
    assert code == 4
    assert "open" in err


def test_witness_tree_example(capsys):
    code, out, _ = run_cli(capsys, ["witness", "12", "--tree"])
    assert code == 0
    fields = out.splitlines()[1].split("\t")
    assert fields[1] == "TREE_PATH"
    assert decode_graph6(fields[3]) == path(6)


def test_witness_layered_even(capsys):
    code, out, _ = run_cli(capsys, ["witness", "6", "--layered-even", "3", "1"])
    assert code == 0
    fields = out.splitlines()[1].split("\t")
    assert fields[1] == "LAYERED_EVEN" and fields[2] == "3,1" and fields[4] == "6"


def test_witness_layered_even_target_mismatch(capsys):
    code, _, err = run_cli(capsys, ["witness", "5", "--layered-even", "3", "1"])
    assert code == 2
    assert "2m" in err


def test_witness_out_of_range_exit_code(capsys):
    code, _, _ = run_cli(capsys, ["witness", "10002"])
    assert code == 5


def test_enumerate(capsys):
    code, out, _ = run_cli(capsys, ["enumerate", "--n", "4"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert all(decode_graph6(line).n == 4 for line in lines)
    assert lines == sorted(lines)


def test_stats_row(capsys):
    code, out, _ = run_cli(capsys, ["stats", "--n", "6"])
    assert code == 0
    header, row = out.splitlines()
    fields = dict(zip(header.lstrip("#").split("\t"), row.split("\t")))
    assert fields["count"] == "112"
    assert fields["mode"] == "12" and fields["mode_mult"] == "21"
    assert fields["min"] == "0" and fields["min_mult"] == "5"
    assert fields["max"] == "24" and fields["max_mult"] == "1"


def test_stats_requires_one_source(capsys):
    code, _, _ = run_cli(capsys, ["stats"])
    assert code == 2
    code, _, _ = run_cli(capsys, ["stats", "--n", "4", "--in", "-"])
    assert code == 2


def test_enumerate_pipes_into_stats(capsys, monkeypatch):
    code, enumerated, _ = run_cli(capsys, ["enumerate", "--n", "5"])
    assert code == 0
    code, via_pipe, _ = run_cli(
        capsys, ["stats", "--in", "-"], stdin=enumerated, monkeypatch=monkeypatch
    )
    assert code == 0
    code, direct, _ = run_cli(capsys, ["stats", "--n", "5"])
    assert code == 0
    assert via_pipe == direct


def test_stats_histogram(capsys):
    code, out, _ = run_cli(capsys, ["stats", "--n", "4", "--histogram"])
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()[1:]]
    assert rows == [["0", "2"], ["4", "3"], ["6", "1"]]


def test_table2(capsys):
    code, out, _ = run_cli(capsys, ["table2", "--n-max", "7", "--mo-max", "10"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "#mo\t3\t4\t5\t6\t7"
    table = {line.split("\t")[0]: line.split("\t")[1:] for line in lines[1:]}
    assert table["2"] == ["1", "-", "1", "1", "2"]
    assert table["4"] == ["-", "3", "2", "3", "12"]
    assert table["3"] == ["-", "-", "-", "-", "-"]


def test_verify_cli(capsys):
    code, out, _ = run_cli(capsys, ["verify", "--suite", "formulas", "--n-max", "6"])
    assert code == 0
    assert "split_closed_form" in out


def test_codec_roundtrip(capsys, monkeypatch):
    text = "n 4\n0 1\n1 2\n2 3\n"
    code, encoded, _ = run_cli(
        capsys, ["codec", "--encode"], stdin=text, monkeypatch=monkeypatch
    )
    assert code == 0
    assert encoded.strip() == encode_graph6(path(4))
    code, decoded, _ = run_cli(
        capsys, ["codec", "--decode"], stdin=encoded, monkeypatch=monkeypatch
    )
    assert code == 0
    assert decoded == text


def test_codec_malformed_input(capsys, monkeypatch):
    code, _, err = run_cli(
        capsys, ["codec", "--decode"], stdin="not graph6!!\n", monkeypatch=monkeypatch
    )
    assert code == 2
    assert "error" in err


def test_compute_edge_list(capsys, monkeypatch):
    code, out, _ = run_cli(
        capsys, ["compute"], stdin="n 4\n0 1\n1 2\n2 3\n", monkeypatch=monkeypatch
    )
    assert code == 0
    lines = out.splitlines()
    g_row = next(line for line in lines if line.startswith("G\t"))
    fields = g_row.split("\t")
    assert fields[1:6] == ["0", "4", "3", "4", "10"]  # index n m mo wiener
    edge_rows = [line for line in lines if line.startswith("E\t")]
    assert len(edge_rows) == 3


def test_compute_graph6_jsonl(capsys, monkeypatch):
    record = encode_graph6(path(4))
    code, out, _ = run_cli(
        capsys,
        ["compute", "--format", "jsonl"],
        stdin=record + "\n",
        monkeypatch=monkeypatch,
    )
    assert code == 0
    obj = json.loads(out.splitlines()[0])
    assert obj["mo"] == 4 and obj["is_tree"] is True
    assert len(obj["edge_reports"]) == 3
    assert obj["transmissions"] == [6, 4, 4, 6]


def test_compute_empty_input(capsys, monkeypatch):
    code, _, _ = run_cli(capsys, ["compute"], stdin="\n", monkeypatch=monkeypatch)
    assert code == 2


def test_deterministic_output_across_threads(capsys):
    _reset_cache()
    code, first, _ = run_cli(capsys, ["enumerate", "--n", "6", "--threads", "1"])
    assert code == 0
    _reset_cache()
    code, second, _ = run_cli(capsys, ["enumerate", "--n", "6", "--threads", "2"])
    assert code == 0
    assert first == second


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.tsv"
    code, out, _ = run_cli(capsys, ["stats", "--n", "4", "--out", str(target)])
    assert code == 0
    assert not out
    assert "112" not in target.read_text()
    assert target.read_text().splitlines()[1].split("\t")[1] == "6"


def test_csv_format(capsys):
    code, out, _ = run_cli(capsys, ["stats", "--n", "4", "--format", "csv"])
    assert code == 0
    header, row = out.splitlines()
    assert header.startswith("n,count")
    assert row.split(",")[1] == "6"
