import json

import pytest

from domgame import gen_path, parse_edge_list, write_edge_list
from domgame.cli import main


@pytest.fixture()
def p2_file(tmp_path):
    path = tmp_path / "p2.g"
    path.write_text(write_edge_list(gen_path(2)), encoding="utf-8")
    return str(path)


@pytest.fixture()
def p3_file(tmp_path):
    path = tmp_path / "p3.g"
    path.write_text(write_edge_list(gen_path(3)), encoding="utf-8")
    return str(path)


def test_solve_p2(p2_file, capsys):
    assert main(["solve", p2_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "gamma_g=1 gamma_g_prime=1"


def test_solve_p3(p3_file, capsys):
    assert main(["solve", p3_file]) == 0
    out = capsys.readouterr().out
    assert "gamma_g=1 gamma_g_prime=2" in out
    assert "optimal_first_dominator=1" in out


def test_solve_oversize_exits_2(tmp_path, capsys):
    big = tmp_path / "big.g"
    big.write_text(write_edge_list(gen_path(25)), encoding="utf-8")
    assert main(["solve", str(big)]) == 2
    assert "exceeds solver cap" in capsys.readouterr().err


def test_solve_respects_env_cap(p3_file, monkeypatch, capsys):
    monkeypatch.setenv("DOMGAME_CAP", "2")
    assert main(["solve", p3_file]) == 2
    assert "exceeds solver cap" in capsys.readouterr().err


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.g"
    bad.write_text("2 1\n0 0\n", encoding="utf-8")
    assert main(["solve", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_unknown_flag_exits_2(p2_file):
    with pytest.raises(SystemExit) as exc:
        main(["simulate", p2_file, "--no-such-flag"])
    assert exc.value.code == 2


def test_simulate_random_reaches_zero(tmp_path, capsys):
    path = tmp_path / "p4.g"
    path.write_text(write_edge_list(gen_path(4)), encoding="utf-8")
    assert main(["simulate", str(path), "--staller", "random", "--seed", "1"]) == 0
    out = capsys.readouterr().out
    assert "final_potential=0" in out


def test_simulate_staller_start_premove(p2_file, capsys):
    assert main(["simulate", p2_file, "--first", "s"]) == 0
    first = capsys.readouterr().out.splitlines()[0].split()
    assert first[0] == "0" and first[1] == "S"
    assert int(first[5]) >= 6


def test_simulate_worst_case_c4(tmp_path, capsys):
    path = tmp_path / "c4.g"
    from domgame import gen_cycle

    path.write_text(write_edge_list(gen_cycle(4)), encoding="utf-8")
    assert main(["simulate", str(path), "--staller", "worst"]) == 0
    out = capsys.readouterr().out
    total = int(out.split("total=")[1].split()[0])
    assert total <= 2  # floor(20/8)


def test_simulate_json_is_byte_identical(tmp_path, capsys):
    path = tmp_path / "t.g"
    from domgame import gen_random_tree

    path.write_text(write_edge_list(gen_random_tree(8, 5)), encoding="utf-8")
    argv = ["simulate", str(path), "--staller", "random", "--seed", "9", "--json", "--trace"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    doc = json.loads(first)
    assert len(doc["snapshots"]) == doc["total_moves"] + 1


def test_gen_roundtrip(tmp_path, capsys):
    out = tmp_path / "out.g"
    assert main(["gen", "path", "7", str(out)]) == 0
    assert parse_edge_list(out.read_text(encoding="utf-8")) == gen_path(7)
    assert main(["gen", "caterpillar", "3", "1,0,2", str(tmp_path / "cat.g")]) == 0
    assert main(["gen", "tree", "9", str(tmp_path / "t.g"), "--seed", "4"]) == 0
    assert main(["gen", "gnp", "8", "0.4", str(tmp_path / "g.g"), "--seed", "4"]) == 0
    from domgame import gen_random_tree

    assert parse_edge_list((tmp_path / "t.g").read_text(encoding="utf-8")) == gen_random_tree(9, 4)


def test_gen_bad_family_exits_2(tmp_path, capsys):
    assert main(["gen", "moebius", "7", str(tmp_path / "x.g")]) == 2


def test_verify_smoke_exits_0(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["verify", "smoke", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["failures"] == []
    assert doc["graph_count"] == 9 + 8 + 9


def test_verify_spec_file_and_csv(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "families": [{"name": "paths", "params": {"n_max": 8}}],
        "checks": ["bounds"],
    }), encoding="utf-8")
    assert main(["verify", str(spec), "--csv"]) == 0
    csv = capsys.readouterr().out
    assert csv.splitlines()[0].startswith("label,n,m,hash")
    assert len(csv.splitlines()) == 1 + 7


def test_verify_bad_spec_exits_2(tmp_path, capsys):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({"families": [{"name": "nope"}]}), encoding="utf-8")
    assert main(["verify", str(spec)]) == 2
    assert main(["verify", "no-such-builtin"]) == 2


def test_verify_failure_writes_witnesses_and_exits_1(tmp_path, capsys, monkeypatch):
    import domgame.cli as cli
    from domgame.verify import AggregateReport, ClaimReport, GraphReport, Witness

    failing = GraphReport(
        label="forged", n=2, m=1, graph_hash="abc", ratio_d=None, ratio_s=None,
        transcripts_checked=1,
        reports=(ClaimReport("PH1_MOVES", "fail", "synthetic",
                             Witness("2 1\n0 1\n", note="synthetic")),))
    monkeypatch.setattr(cli, "run_corpus",
                        lambda spec, jobs=1: AggregateReport(["PH1_MOVES"], [failing]))
    monkeypatch.chdir(tmp_path)
    assert main(["verify", "smoke"]) == 1
    out = capsys.readouterr().out
    assert "FAILURES: 1" in out
    files = list((tmp_path / "witnesses").glob("*.json"))
    assert len(files) == 1
    doc = json.loads(files[0].read_text(encoding="utf-8"))
    assert doc["id"] == "PH1_MOVES" and doc["witness"]["graph"].startswith("2 1")
