import json
import subprocess
import sys

import pytest

from idcodes.cli import run
from idcodes.codes import CodeKind
from idcodes.enumeration import enumerate_connected, write_graph6
from idcodes.families import extremal_tid


def call(argv, stdin="", capsys=None, monkeypatch=None):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin="": call(argv, stdin, capsys, monkeypatch)


def test_solve_p3(cli):
    code, out, _ = cli(["solve", "--code", "tid", "--in", "-"], "Bg\n")
    record = json.loads(out)
    assert code == 0 and record["size"] == 3 and record["witness"] == [0, 1, 2]
    assert out.strip() == json.dumps(record, sort_keys=True)


def test_solve_json_array_and_all_optima(cli):
    code, out, _ = cli(["solve", "--code", "sep", "--in", "-", "--json", "--all-optima"], "Bg\nCl\n")
    records = json.loads(out)
    assert code == 0 and len(records) == 2 and records[0]["optima"] == [[0, 2]]


def test_solve_infeasible_is_not_an_error(cli):
    code, out, _ = cli(["solve", "--code", "tid", "--in", "-"], "A_\n")
    record = json.loads(out)
    assert code == 0 and record["status"] == "infeasible" and "closed twins" in record["reason"]


def test_check(cli):
    code, out, _ = cli(["check", "--code", "tid", "--set", "0,1", "--in", "-"], "Bg\n")
    record = json.loads(out)
    assert code == 1 and record["violation"] == {"reason": "collision", "vertices": [0, 1]}
    code, out, _ = cli(["check", "--code", "tid", "--set", "0,1,2", "--in", "-"], "Bg\n")
    assert code == 0 and json.loads(out)["valid"]
    code, _, err = cli(["check", "--code", "tid", "--set", "0,7", "--in", "-"], "Bg\n")
    assert code == 2 and "out of range" in err


def test_gen_formats(cli):
    code, out, _ = cli(["gen", "--family", "a_k", "--k", "3", "--format", "graph6"])
    assert code == 0 and len(out.splitlines()) == 1 and out[0] == chr(6 + 63)
    code, out, _ = cli(["gen", "--family", "calT", "--ops", "phi2:3", "--format", "json"])
    record = json.loads(out)
    assert record["n"] == 12 and len(record["status"]) == 12
    code, out, _ = cli(["gen", "--family", "corona", "--base", "A_", "--t", "3", "--format", "edgelist"])
    assert out.splitlines()[0] == "8"
    code, out, _ = cli(["gen", "--family", "extremal-tid", "--m", "2", "--universal"])
    assert out.strip() == write_graph6(extremal_tid((), True, 2))
    code, _, err = cli(["gen", "--family", "ld-gap"])
    assert code == 2 and "--k" in err


def test_usage_errors(cli):
    assert cli(["bogus"])[0] == 2
    assert cli(["solve", "--code", "xyz", "--in", "-"])[0] == 2
    assert cli(["solve", "--code", "tid", "--in", "-"], "B!\n")[0] == 2
    assert cli(["enum", "--n", "4"])[0] == 2


def test_enum_and_convert(cli):
    code, out, _ = cli(["enum", "--connected", "--n", "5"])
    assert code == 0 and len(out.split()) == 21
    code, out, _ = cli(["enum", "--trees", "--n", "8", "--twin-free"])
    assert len(out.split()) > 0
    code, out, _ = cli(["enum", "--connected", "--n", "8", "--min-girth", "5"])
    assert len(out.split()) == 47
    code, out, _ = cli(["convert", "--from", "edgelist", "--to", "graph6", "--in", "-"], "0 1\n1 2\n")
    assert out.strip() == "Bg"
    code, out, _ = cli(["convert", "--from", "graph6", "--to", "json", "--in", "-"], "Bg\n")
    assert json.loads(out)["edges"] == [[0, 1], [1, 2]]


def test_verify(cli, tmp_path):
    code, out, _ = cli(["verify", "--claim", "thm-2.4", "--max-n", "6"])
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "pass" and report["checked"] > 0
    code, out, _ = cli(["verify", "--claim", "cor-3.5", "--max-n", "5"])
    assert code == 1 and json.loads(out)["counterexamples"][0]["graph6"] == "BW"
    source = tmp_path / "c8.g6"
    source.write_text("GhCGKC\n")
    code, out, _ = cli(["verify", "--claim", "girth5-tight", "--source", str(source)])
    assert code == 0 and json.loads(out)["verdict"] == "info" and json.loads(out)["findings"]
    code, out, _ = cli(["verify", "--claim", "prop-4.6"])
    assert code == 0


def test_oracle_flag_agrees_on_builtin_graphs(cli):
    text = "".join(write_graph6(G) + "\n" for n in range(1, 7) for G in enumerate_connected(n))
    for kind in CodeKind:
        if kind is CodeKind.FOURID:
            continue
        _, fast, _ = cli(["solve", "--code", kind.value, "--in", "-"], text)
        _, slow, _ = cli(["solve", "--code", kind.value, "--in", "-", "--oracle"], text)
        sizes = lambda out: [json.loads(line).get("size") for line in out.splitlines()]
        assert sizes(fast) == sizes(slow), kind


def test_gen_pipes_into_solve():
    gen = subprocess.run([sys.executable, "-m", "idcodes", "gen", "--family", "sid-gap", "--k", "4"],
                         capture_output=True, text=True, check=True)
    solve = subprocess.run([sys.executable, "-m", "idcodes", "solve", "--code", "sid", "--in", "-"],
                           input=gen.stdout, capture_output=True, text=True, check=True)
    assert json.loads(solve.stdout)["size"] == 14
