import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from atkit.cli import main
from atkit.io import NAMED_FIXTURES, named_fixture, serialise_graph

GOLDEN = Path(__file__).parent / "golden"
REGENERATE = os.environ.get("ATKIT_REGEN_GOLDEN") == "1"

# (report file stem, argv); graph paths are relative to the fixture directory
GOLDEN_RUNS = [(f"recognize-{name}", ["recognize", f"{name}.graph"]) for name in NAMED_FIXTURES] + [
    ("order-fig1-bfsconv", ["order", "--alg", "bfsconv", "--start", "1", "fig1.graph"]),
    ("order-fig2G-augmented", ["order", "--alg", "bfsconv-augmented", "--start", "1", "fig2G.graph"]),
    ("order-fig2Gp-bfsconv", ["order", "--alg", "bfsconv", "--start", "v1", "fig2Gp.graph"]),
    ("order-fig3-badclawfree", ["order", "--alg", "badclawfree", "fig3.graph"]),
    ("order-fig4-badclawfree", ["order", "--alg", "badclawfree", "--certify", "fig4.graph"]),
]


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    for name in NAMED_FIXTURES + ("P5", "C6"):
        (tmp_path / f"{name}.graph").write_text(serialise_graph(named_fixture(name)))
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order_fig1(workdir, capsys):
    code, out, _ = run(capsys, "order", "--alg", "bfsconv", "--start", "1", "fig1.graph")
    assert code == 0 and out == "1 2 3 4 5 6 7 8\n"


def test_verify_fig3_tau2(workdir, capsys):
    code, out, _ = run(capsys, "verify", "--property", "atfree", "--order", "c a b z 4 3 2 1",
                       "fig3.graph")
    assert code == 1
    assert "witness: a z b" in out


def test_recognize_fig3(workdir, capsys):
    code, out, _ = run(capsys, "recognize", "fig3.graph")
    assert code == 0
    assert out.splitlines()[0] == "AT-free: yes"
    assert "bad-claw-free: no" in out


def test_recognize_asteroidal(workdir, capsys):
    code, out, _ = run(capsys, "recognize", "C6.graph")
    assert code == 1 and "AT-free: no (triple 1 3 5)" in out


@pytest.mark.parametrize("argv, code", [
    (["verify", "--property", "mdp", "--order", "1 2 3 4 5", "fig2G.graph"], 1),
    (["verify", "--property", "mdp", "--order", "1 2 3 5 4", "fig2G.graph"], 0),
    (["verify", "--property", "bilateral", "--order", "1 2 3 4 z b a c", "fig3.graph"], 1),
    (["verify", "--property", "lbfs", "--order", "1 2 4 z 3 b a c", "fig3.graph"], 0),
    (["verify", "--property", "bfs", "--order", "1 3 2 4 5", "P5.graph"], 1),
    (["verify", "--property", "spine", "C6.graph"], 1),
    (["verify", "--property", "spine", "P5.graph"], 0),
    (["verify", "--property", "dompair", "--pair", "1 4", "fig2G.graph"], 0),
    (["verify", "--property", "dompair", "--pair", "1 5", "fig2G.graph"], 1),
    (["order", "--alg", "bfsconv", "--start", "1", "C6.graph"], 1),
    (["order", "--alg", "bfsconv-augmented", "--start", "3", "P5.graph"], 1),
    (["order", "--alg", "clawfree", "fig1.graph"], 1),
    (["order", "--alg", "badclawfree", "--certify", "fig3.graph"], 1),
    (["oracle", "--query", "bilateral", "fig3.graph"], 1),
    (["oracle", "--query", "atfree-order", "fig3.graph"], 0),
    (["oracle", "--query", "transitive", "C6.graph"], 1),
    (["oracle", "--query", "anti-exchange", "fig1.graph"], 0),
    (["oracle", "--query", "spine-hereditary", "fig2G.graph"], 0),
    (["analyze", "--interval", "1 5", "--hull", "1 5", "P5.graph"], 0),
])
def test_exit_codes(workdir, capsys, argv, code):
    assert run(capsys, *argv)[0] == code


@pytest.mark.parametrize("argv", [
    ["recognize", "missing.graph"],
    ["order", "--alg", "bfs", "--start", "nope", "P5.graph"],
    ["order", "--alg", "bfsplus", "P5.graph"],
    ["verify", "--property", "atfree", "P5.graph"],
    ["verify", "--property", "atfree", "--order", "1 2", "P5.graph"],
    ["verify", "--property", "dompair", "--pair", "1", "P5.graph"],
    ["fixtures", "--name", "fig9"],
    ["oracle", "--query", "atfree-order", "fig4.graph"],
])
def test_usage_and_input_errors_exit_2(workdir, capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("atkit: error:")


def test_parse_error_exit_2(workdir, capsys):
    Path("bad.graph").write_text("2 1\n1 1\n")
    code, _, err = run(capsys, "recognize", "bad.graph")
    assert code == 2 and "line 2" in err


def test_argparse_rejects_unknown_algorithm(workdir, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["order", "--alg", "dfs", "P5.graph"])
    assert exc.value.code == 2


def test_brute_cap_override(workdir, capsys, monkeypatch):
    monkeypatch.setenv("ATKIT_BRUTE_CAP", "13")
    code, out, _ = run(capsys, "oracle", "--query", "atfree-bfs-order", "fig4.graph")
    assert code == 0 and out.startswith("atfree-bfs-order: ")


def test_plus_sweeps_read_prior(workdir, capsys):
    Path("tau1").write_text("1 2 4 z 3 b a c\n")
    code, out, _ = run(capsys, "order", "--alg", "lbfsplus", "--prior", "tau1", "fig3.graph")
    assert code == 0 and out == "c a b z 4 3 2 1\n"


def test_trace_output(workdir, capsys):
    code, out, _ = run(capsys, "order", "--alg", "bfsconv", "--start", "1", "--trace", "C6.graph")
    assert code == 1
    assert "rejected 6 (4 in I(2,6))" in out
    assert out.rstrip().endswith("finished as plain BFS")


def test_fixtures_and_corpus_commands(workdir, capsys):
    code, out, _ = run(capsys, "fixtures", "--out", "figs", "--dot")
    assert code == 0 and (workdir / "figs" / "fig4.dot").exists()
    for name in NAMED_FIXTURES:
        text = (workdir / "figs" / f"{name}.graph").read_text()
        assert text == serialise_graph(named_fixture(name))
    code, out, _ = run(capsys, "corpus", "--seed", "2", "--n", "4", "--count", "3",
                       "--filter", "clawfree-atfree", "--out", "corp")
    assert code == 0 and len(list((workdir / "corp").iterdir())) == 3
    assert run(capsys, "corpus", "--n", "5..12", "--count", "1")[0] == 2


def test_report_is_deterministic(workdir, capsys):
    argv = ["--report", "r.json", "order", "--alg", "bfsconv", "--start", "1", "fig1.graph"]
    reports = []
    for _ in range(2):
        run(capsys, *argv)
        data = json.loads(Path("r.json").read_text())
        assert data.pop("elapsed_s") >= 0
        reports.append(data)
    assert reports[0] == reports[1]
    run(capsys, "--report", "r.txt", *argv[2:])
    text = Path("r.txt").read_text()
    assert "order: 1 2 3 4 5 6 7 8" in text and "elapsed-s:" in text


def test_json_flag(workdir, capsys):
    code, out, _ = run(capsys, "--json", "verify", "--property", "atfree",
                       "--order", "c a b z 4 3 2 1", "fig3.graph")
    data = json.loads(out)
    assert code == 1
    assert data["verdicts"][0]["witness"] == ["a", "z", "b"]


@pytest.mark.parametrize("stem, argv", GOLDEN_RUNS, ids=[s for s, _ in GOLDEN_RUNS])
def test_golden_reports(workdir, capsys, stem, argv):
    run(capsys, "--report", "out.json", *argv)
    data = json.loads(Path("out.json").read_text())
    data.pop("elapsed_s")
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    golden = GOLDEN / f"{stem}.json"
    if REGENERATE:
        golden.write_text(text)
    assert text == golden.read_text()


def test_module_entry_point(workdir):
    proc = subprocess.run([sys.executable, "-m", "atkit", "recognize", "fig4.graph"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["AT-free: yes", "claw-free: no (claw base 5 prongs b' z' 2)",
                                        "bad-claw-free: yes"]
