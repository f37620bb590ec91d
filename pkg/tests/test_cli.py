import subprocess
import sys

import pytest

from heapalg.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_analyze_golden(capsys):
    status, out, _ = run(capsys, "analyze", "--graph", "a:3", "--word", "1 3 2 1 3")
    assert status == 0
    assert out.splitlines() == [
        "heap: [1 3 2 1 3]",
        "field: q",
        "|E| = 5",
        "|V1| = 2",
        "ker = 1",
        "coker = 4",
        "labels = 3 (coker - ker = 4 - 1 = 3)",
        "acyclic = false",
        "strongly_acyclic = false",
        "P1 = false",
        "P2 = false",
        "image_vertices = [2:2]",
    ]


def test_analyze_empty(capsys):
    status, out, _ = run(capsys, "analyze", "--graph", "d:5")
    assert status == 0
    assert "|E| = 0" in out and "ker = 0" in out and "coker = 0" in out
    assert "P1 = true" in out and "P2 = true" in out


def test_analyze_shows_witness(capsys):
    _, out, _ = run(capsys, "analyze", "--graph", "a:3", "--word", "3 2 1 3", "--field", "gf:3")
    assert "field: gf:3" in out
    assert "P1 = true" in out and "  step 1: remove" in out


def test_normal_form_and_multiply(capsys):
    assert run(capsys, "normal-form", "--graph", "a:2", "--word", "1 1")[1] == "delta^1 [1]\n"
    assert run(capsys, "normal-form", "--graph", "a:2", "--word", "1 2 1")[1] == "delta^0 [1]\n"
    assert run(capsys, "normal-form", "--graph", "a:2")[1] == "delta^0 []\n"
    assert run(capsys, "multiply", "--graph", "a:2", "1", "1")[1] == "(v + v^-1) * [1]\n"
    assert run(capsys, "multiply", "--graph", "a:2", "--word", "1", "--word", "1")[1] == "(v + v^-1) * [1]\n"
    assert run(capsys, "multiply", "--graph", "a:2")[1] == "1 * []\n"


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "--graph", "a:2", "--p2-only")
    assert out.splitlines() == ["[]", "[1]", "[2]", "[1 2]", "[2 1]"]
    _, out, _ = run(capsys, "enumerate", "--graph", "a:2", "--max-size", "2")
    assert len(out.splitlines()) == 7


def test_export_dot(capsys):
    _, out, _ = run(capsys, "export-dot", "--graph", "a:3")
    assert out == "digraph heap {\n  rankdir=BT;\n}\n"
    _, out, _ = run(capsys, "export-dot", "--graph", "a:3", "--which", "concurrency")
    assert out.startswith("graph G {") and '"1" -- "2";' in out


def test_verify_statuses(capsys):
    status, out, _ = run(capsys, "verify", "deletion-2.1.1", "--graph", "a:3", "--max-size", "5")
    assert status == 0
    assert out == "PROPERTY deletion-2.1.1 a:3 size<=5 field=q: OK checked=1022\n"  # one per (heap, vertex) pair
    status, out, _ = run(capsys, "verify", "regularity-2.4.1", "--graph", "aff-a:3", "--max-size", "6")
    assert status == 1
    assert "COUNTEREXAMPLE [1 3 2 4]" in out


def test_verify_all_is_deterministic(capsys):
    args = ("verify", "all", "--graph", "a:2", "--max-size", "4", "--strategies", "5")
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
    assert first[0] == 0 and len(first[1].splitlines()) == 13


@pytest.mark.parametrize(
    "argv, message",
    [
        (["verify", "nope", "--graph", "a:3"], "valid ids: lemma-1.2.4"),
        (["analyze", "--graph", "a:3", "--word", "1 9"], "'9' at position 1"),
        (["analyze", "--graph", "a:0"], "n >= 1"),
        (["analyze", "--graph", "a:3", "--field", "gf:4"], "prime"),
        (["analyze", "--graph", "file:/no/such/file"], "cannot read"),
    ],
)
def test_errors(capsys, argv, message):
    status, out, err = run(capsys, *argv)
    assert status == 2 and out == ""
    assert message in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "heapalg", "normal-form", "--graph", "a:3", "--word", "2 1 2"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "delta^0 [2]\n"
