from __future__ import annotations

import json

import pytest

from alcoves.cli import FIGURES, main


def run(capsys, *args):
    code = main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_localize_golden(capsys):
    code, out, _ = run(capsys, "localize", "--type", "A2~", "--v", "1 0", "--w", "1 2 1 0")
    assert code == 0
    assert out == '{"psi": "(a1+a2)*(a1+a2+d)"}\n'


def test_rpoly_golden(capsys):
    code, out, _ = run(capsys, "rpoly", "--type", "A2~", "--v", "", "--w", "1 0")
    assert code == 0
    assert out == '"q^2-2*q+1"\n'


def test_localize_options(capsys):
    base = ["localize", "--type", "A2~", "--v", "1 0", "--w", "1 2 1 0"]
    assert run(capsys, *base, "--basis", "alpha0")[1] == '{"psi": "a0*a1+a0*a2+2*a1^2+4*a1*a2+2*a2^2"}\n'
    assert run(capsys, *base, "--delta-zero")[1] == '{"psi": "(a1+a2)^2"}\n'
    assert run(capsys, *base, "--format", "text")[1] == "(a1+a2)*(a1+a2+d)\n"
    assert run(capsys, *base, "--word", "2 1 2 0")[1] == '{"psi": "(a1+a2)*(a1+a2+d)"}\n'
    for seed in ("0", "1", "99"):
        assert run(capsys, *base, "--seed", seed)[1] == '{"psi": "(a1+a2)*(a1+a2+d)"}\n'


def test_masks_and_walks(capsys):
    code, out, _ = run(capsys, "masks", "--type", "A2~", "--word", "1 2 1 0", "--v", "1 0")
    obj = json.loads(out)
    assert obj["masks"] == ["0011", "1001"]
    assert obj["products"] == ["a2*(a1+a2+d)", "a1*(a1+a2+d)"]
    code, out, _ = run(capsys, "walks", "--type", "A2~", "--word", "1 1")
    steps = json.loads(out)["steps"]
    assert [(s["root"], s["forward"]) for s in steps] == [("a1", True), ("-a1", False)]


def test_fold_and_folded(capsys):
    code, out, _ = run(capsys, "fold", "--type", "A2~", "--word", "1 2 1 0", "--mask", "1001")
    obj = json.loads(out)
    assert obj["folds"] == [1, 2]
    assert obj["positively_folded"] is False
    code, out, _ = run(capsys, "fold", "--type", "A2~", "--word", "1 2 1 0", "--mask", "1001", "--orientation", "trivial")
    assert json.loads(out)["positively_folded"] is True
    code, out, _ = run(capsys, "fold", "--type", "A2~", "--word", "1 2 1 0", "--v", "1 0")
    rows = json.loads(out)["masks"]
    assert [(r["mask"], r["positively_folded"]) for r in rows] == [("0011", True), ("1001", False)]
    code, out, _ = run(capsys, "folded", "enumerate", "--type", "A2~", "--w", "1 0", "--v", "")
    walks = json.loads(out)["walks"]
    assert [w["mask"] for w in walks] == ["00"]
    assert [s["kind"] for s in walks[0]["steps"]] == ["positive-fold", "positive-fold"]
    code, out, _ = run(capsys, "folded", "count", "--type", "A2~", "--w", "1 0", "--v", "", "--format", "text")
    assert out == "q^2-2*q+1\n"


def test_count_and_class(capsys):
    code, out, _ = run(capsys, "count", "--type", "C2~", "--w", "1 2 1")
    rows = json.loads(out)["counts"]
    assert all(r["count"] == r["rpoly"] for r in rows)
    code, out, _ = run(capsys, "class", "--type", "A2~", "--v", "1", "--bound", "1")
    assert json.loads(out)["values"] == [
        {"w": [], "psi": "0"},
        {"w": [0], "psi": "0"},
        {"w": [1], "psi": "a1"},
        {"w": [2], "psi": "0"},
    ]


def test_gkm_check(capsys):
    code, out, _ = run(capsys, "gkm-check", "--type", "A2~", "--v", "1 0", "--w", "1 2 1 0", "--beta=-a1+2d")
    assert code == 0
    assert json.loads(out) == {"ok": True, "checked": 1, "failures": []}
    code, out, _ = run(capsys, "gkm-check", "--type", "C2~", "--v", "1", "--w", "1 2 1 0", "--bound", "1")
    assert code == 0 and json.loads(out)["checked"] == 12


@pytest.mark.parametrize("figure", FIGURES)
def test_render_figures(capsys, figure):
    code, out, _ = run(capsys, "render", "--type", "A2~", "--figure", figure)
    assert code == 0
    assert out.startswith("<?xml") and out.rstrip().endswith("</svg>")


def test_render_to_file(capsys, tmp_path):
    path = tmp_path / "walk.svg"
    code, out, _ = run(capsys, "render", "--type", "C2~", "--word", "1 2 1 0", "--mask", "0011", "--output", str(path))
    assert code == 0 and out == ""
    assert path.read_text().startswith("<?xml")


def test_cartan_file(capsys, tmp_path):
    path = tmp_path / "c2.json"
    path.write_text(json.dumps({"rank": 3, "matrix": [[2, -1, 0], [-2, 2, -2], [0, -1, 2]], "theta": [2, 1]}))
    code, out, _ = run(capsys, "rpoly", "--cartan-file", str(path), "--v", "", "--w", "1 2")
    assert code == 0 and out == '"q^2-2*q+1"\n'
    path.write_text(json.dumps({"matrix": [[2, -1], [-1, 2]]}))
    code, _, err = run(capsys, "rpoly", "--cartan-file", str(path), "--v", "", "--w", "1")
    assert code == 1 and "corank" in err


@pytest.mark.parametrize(
    "args",
    [
        ["localize", "--type", "Q2~", "--v", "1", "--w", "1"],
        ["localize", "--type", "A2~", "--v", "3", "--w", "1"],
        ["localize", "--type", "A2~", "--v", "1", "--w", "1", "--word", "1 1 1 2"],
        ["fold", "--type", "A2~", "--word", "1 2", "--mask", "101"],
        ["folded", "count", "--type", "A2~", "--word", "1 1", "--v", ""],
        ["render", "--type", "A3~", "--figure", "arrangement"],
        ["gkm-check", "--type", "A2~", "--v", "1", "--w", "1", "--beta", "a1+a3"],
    ],
)
def test_domain_errors_exit_1(capsys, args):
    code, out, err = run(capsys, *args)
    assert code == 1
    assert out == ""
    assert err.startswith("alcoves: ")


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "localize", "--type", "A2~")
    assert code == 2 and "--v is required" in err
    code, _, err = run(capsys, "render", "--type", "A2~", "--figure", "nope")
    assert code == 2 and "unknown figure" in err
    with pytest.raises(SystemExit) as info:
        main(["localize", "--bogus"])
    assert info.value.code == 2
    assert "unrecognized arguments" in capsys.readouterr().err
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


@pytest.mark.parametrize(
    "args",
    [
        ["walks", "--type", "A2~", "--word", "0 2 0 1 2 0", "--base", "1"],
        ["masks", "--type", "A2~", "--word", "1 2 1 0", "--v", "1 0"],
        ["fold", "--type", "A2~", "--word", "1 2 1 0", "--mask", "0011"],
        ["folded", "enumerate", "--type", "C2~", "--w", "1 2 1", "--v", "1"],
        ["class", "--type", "A2~", "--v", "1 0", "--bound", "2"],
    ],
)
def test_json_round_trip(capsys, tmp_path, args):
    code, first, _ = run(capsys, *args)
    assert code == 0
    path = tmp_path / "in.json"
    path.write_text(first)
    command = args[:2] if args[0] == "folded" else args[:1]
    code, second, _ = run(capsys, *command, "--input-file", str(path))
    assert code == 0
    assert second == first


def test_localize_input_file_checks_psi(capsys, tmp_path):
    path = tmp_path / "psi.json"
    path.write_text(json.dumps({"type": "A2~", "v": [1, 0], "w": [1, 2, 1, 0], "psi": "(a1+a2)*(a1+a2+d)"}))
    code, out, _ = run(capsys, "localize", "--input-file", str(path))
    assert code == 0
    # the CLI's own output, fed back with v and w on the command line
    path.write_text(out)
    assert run(capsys, "localize", "--v", "1 0", "--w", "1 2 1 0", "--input-file", str(path))[0] == 0
    path.write_text(json.dumps({"psi": "a1*a2"}))
    code, _, err = run(capsys, "localize", "--v", "1 0", "--w", "1 2 1 0", "--input-file", str(path))
    assert code == 1 and "does not match" in err
    path.write_text("[1, 2")
    assert run(capsys, "localize", "--input-file", str(path))[0] == 1


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    lines = out.splitlines()
    assert lines and all(line.startswith("PASS ") for line in lines)
