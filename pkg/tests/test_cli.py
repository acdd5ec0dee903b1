import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from contspec.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_submonoid_three_five(capsys):
    code, data = run_json(capsys, "submonoid", "-g", "3,5", "-N", "10")
    assert code == 0
    assert data["canonical"]["gaps"] == [1, 2, 4, 7]
    assert data["members"] == [0, 3, 5, 6, 8, 9, 10]


def test_submonoid_empty(capsys):
    code, data = run_json(capsys, "submonoid", "-g", "", "-N", "3")
    assert code == 0
    assert data["canonical"] == {"variant": "zero"}
    assert data["members"] == [0]


def test_submonoid_mixed(capsys):
    code, data = run_json(capsys, "submonoid", "-g", "3,-5", "-N", "3")
    assert data["canonical"] == {"variant": "group", "d": 1}
    assert data["members"] == [-3, -2, -1, 0, 1, 2, 3]


def test_malformed_integers(capsys):
    code, _, err = run(capsys, "submonoid", "-g", "3,five")
    assert code == 2
    assert "malformed" in err


def test_unknown_flag(capsys):
    code, _, _ = run(capsys, "submonoid", "--bogus")
    assert code == 2


def test_realize_line_json(capsys):
    code, data = run_json(capsys, "realize-line", "-g", "3,4,5", "-N", "6")
    assert code == 0
    assert data["spectrum"] == [0, 3, 4, 5, 6]
    assert data["match"]
    assert data["powers"]["1"]["witnesses"] == [[0, [1, 1]]]
    assert data["cases"]["0"] == 3 and data["cases"]["2"] == 4


def test_realize_line_svg(capsys, tmp_path):
    fig = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "realize-line", "-g", "3,4,5", "-N", "6", "--format", "svg", "--figure", str(fig))
    assert code == 0
    root = ET.fromstring(out)
    assert root.tag.endswith("svg")
    assert fig.read_text() == out
    ns = "{http://www.w3.org/2000/svg}"
    parts = [e for e in root.iter(ns + "line") if e.get("class") == "part"]
    # 13 columns; columns 1, 2 and every negative one are split
    assert len(parts) == 13 + 2 + 6
    assert len([e for e in root.iter(ns + "circle") if e.get("class") == "witness"]) == 1


def test_realize_line_dot(capsys):
    code, out, _ = run(capsys, "realize-line", "-g", "3,4,5", "-N", "2", "--format", "dot")
    assert code == 0
    assert out.startswith("digraph")
    assert "c0_0 -> c1_1" in out


def test_realize_line_integers(capsys):
    code, data = run_json(capsys, "realize-line", "-g", "1,-1", "-N", "3")
    assert data["spectrum"] == [-3, -2, -1, 0, 1, 2, 3]
    code, data = run_json(capsys, "realize-line", "-g", "1", "-N", "3")
    assert data["spectrum"] == [0, 1, 2, 3]


def test_realize_line_small_window(capsys):
    code, out, err = run(capsys, "realize-line", "-g", "3,4,5", "-N", "6", "-W", "7")
    assert code == 3
    assert "W=12" in err


def test_realize_line_deterministic(capsys):
    _, a, _ = run(capsys, "realize-line", "-g", "3,5", "-N", "5")
    _, b, _ = run(capsys, "realize-line", "-g", "5,3", "-N", "5")
    assert a == b


def test_topologies_three(capsys):
    code, data = run_json(capsys, "topologies", "-n", "3")
    assert code == 0
    assert data["labeled"] == 29 and data["classes"] == 9
    assert data["group_orders"] == [1, 1, 2, 2, 2, 2, 2, 6, 6]
    assert data["c3_realized"] is False
    assert len(data["table"]) == 9
    assert set(data["table"][0]) == {"class_id", "opens", "group_order", "group_type"}


def test_topologies_one(capsys):
    code, data = run_json(capsys, "topologies", "-n", "1")
    assert (data["labeled"], data["classes"]) == (1, 1)


def test_topologies_cap(capsys):
    code, _, err = run(capsys, "topologies", "-n", "5")
    assert code == 2
    assert "exceeds exhaustive cap" in err


def test_group_s3(capsys):
    code, data = run_json(capsys, "group", "--builtin", "s3", "--subset", "e,r1,r2", "--variant", "open")
    assert code == 0
    assert data["spectrum"] == ["e", "r1", "r2"]
    assert data["composition_law"]


def test_group_compact(capsys):
    code, data = run_json(capsys, "group", "--builtin", "z6", "--subset", "0,3", "--variant", "compact")
    assert code == 0
    assert data["spectrum"] == ["0", "3"]
    assert data["inverse_closed"]
    assert data["witnesses"]["1"][0] == [0, [0, 1]]


def test_group_monoid_table(capsys, tmp_path):
    path = tmp_path / "m2.json"
    path.write_text(json.dumps({"size": 2, "identity": 0, "op": [[0, 1], [1, 1]], "names": ["e", "z"]}))
    code, data = run_json(capsys, "group", "--table", str(path), "--subset", "e", "--variant", "monoid")
    assert code == 0
    assert data["spectrum"] == ["e"]
    assert not data["all_bijective"]
    assert data["bijective"] == ["e"]


def test_group_table_without_names(capsys, tmp_path):
    path = tmp_path / "m2.json"
    path.write_text(json.dumps({"size": 2, "identity": 0, "op": [[0, 1], [1, 1]]}))
    code, data = run_json(capsys, "group", "--table", str(path), "--subset", "0", "--variant", "monoid")
    assert data["spectrum"] == ["0"]


@pytest.mark.parametrize("argv", [
    ["group", "--builtin", "s3", "--subset", "e,s0,s1"],
    ["group", "--builtin", "m2", "--subset", "e", "--variant", "open"],
    ["group", "--builtin", "nope", "--subset", "e"],
    ["group", "--subset", "e"],
    ["group", "--builtin", "s3", "--subset", "e,zz"],
])
def test_group_input_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_group_bad_table_file(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"size": 2, "identity": 0, "op": [[1, 0], [0, 1]]}))
    code, _, err = run(capsys, "group", "--table", str(path), "--subset", "0")
    assert code == 2
    assert "identity law" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "contspec", "submonoid", "-g", "2", "-N", "5"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["members"] == [0, 2, 4]


def test_spectrum_mismatch_exits_4(capsys, monkeypatch):
    import contspec.cli as cli
    monkeypatch.setattr(cli, "window", lambda s, n: [0])
    code, out, err = run(capsys, "realize-line", "-g", "3,4,5", "-N", "4")
    assert code == 4
    assert json.loads(out)["match"] is False
    assert "verification failed" in err
