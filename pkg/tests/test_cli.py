import io
import json
import subprocess
import sys

import pytest

from brauer import canonical_code, parse_tree
from brauer.cli import run

STAR = "vertex v0: 1 2 3 4 5;vertex v1: 1;vertex v2: 2;vertex v3: 3;vertex v4: 4;vertex v5: 5"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("cmd", ["validate", "invariants", "quiver", "cartan", "reduce"])
def test_json_has_schema_version(cmd):
    code, out, _ = call(cmd, "--tree", STAR, "--format", "json")
    assert code == 0
    assert json.loads(out)["schema_version"] == 1


def test_validate_text():
    code, out, _ = call("validate", "--tree", STAR)
    assert code == 0 and out.startswith("valid: 5 edges, multiplicity 1")


def test_cartan_matrix_text():
    code, out, _ = call("cartan", "--tree", "vertex v0: 1 2;vertex v1: 1;vertex v2: 2")
    rows = [line.split() for line in out.splitlines()]
    assert rows[1:] == [["1", "2", "1"], ["2", "1", "2"]]


def test_reflect_output_round_trips(tmp_path):
    code, out, _ = call("reflect", "--tree", STAR, "--edge", "1", "--check-quiver")
    assert code == 0 and "quiver check: PASS" in out
    tree = parse_tree(out)
    (tmp_path / "r.txt").write_text(out)
    assert call("validate", "--in", str(tmp_path / "r.txt"))[0] == 0
    assert sorted(tree.edges) == [2, 3, 4, 5, 6]


def test_reflect_json():
    code, out, _ = call("reflect", "--tree", STAR, "--edge", "2", "--format", "json")
    data = json.loads(out)
    assert data["removed_edge"] == 2 and data["rename"] == {"2": data["new_edge"]}
    assert canonical_code(parse_tree(data["text"])).decode() == data["code"]


def test_reduce_ends_on_a_line():
    code, out, _ = call("reduce", "--tree", STAR, "--format", "json")
    plan = json.loads(out)
    final = plan["final_tree"]
    assert code == 0
    assert all(len(rot) <= 2 for rot in final["rotation"].values())


def test_enumerate_counts():
    code, out, _ = call("enumerate", "--edges", "4", "--format", "json")
    assert json.loads(out)["count"] == 3


def test_verify_passes_and_is_deterministic():
    a = call("verify", "--tree", STAR, "--edge", "1", "--field", "3", "--format", "json")
    b = call("verify", "--tree", STAR, "--edge", "1", "--field", "3", "--format", "json")
    assert a == b and a[0] == 0
    assert json.loads(a[1])["passed"] is True


def test_verify_all_edges_text():
    code, out, _ = call("verify", "--tree", "vertex v0: 1 2;vertex v1: 1;vertex v2: 2", "--all-edges")
    assert code == 0 and out.count("GF(2)") == 2


def test_dot_outputs():
    assert call("quiver", "--tree", STAR, "--dot")[1].startswith("digraph")
    assert "graph" in call("validate", "--tree", STAR, "--format", "dot")[1]


def test_out_file(tmp_path):
    target = tmp_path / "c.json"
    code, out, _ = call("cartan", "--tree", STAR, "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["edges"] == [1, 2, 3, 4, 5]


def test_in_file(tmp_path):
    src = tmp_path / "t.txt"
    src.write_text(STAR.replace(";", "\n"))
    assert call("invariants", "--in", str(src))[1] == "edge_count 5\nmultiplicity 1\n"


@pytest.mark.parametrize(
    "argv, status",
    [
        (["verify", "--tree", STAR, "--edge", "1", "--field", "4"], 2),
        (["verify", "--tree", STAR, "--edge", "1", "--field", "x"], 2),
        (["verify", "--tree", STAR], 2),
        (["reflect", "--tree", STAR], 2),
        (["cartan"], 2),
        (["cartan", "--in", "/nonexistent/tree.txt"], 2),
        (["frobnicate"], 2),
        (["enumerate", "--edges", "0"], 2),
        (["reflect", "--tree", STAR, "--edge", "9"], 1),
        (["verify", "--tree", STAR, "--edge", "9"], 1),
        (["validate", "--tree", "vertex v0: 1;vertex v1: 1;vertex v2: 1"], 1),
        (["validate", "--tree", "vertex v0: 1 2;vertex v1: 1"], 1),
    ],
)
def test_exit_codes(argv, status):
    code, out, err = call(*argv)
    assert code == status
    assert out == "" and err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "brauer", "invariants", "--tree", STAR],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("edge_count 5")
