import json
import os
import subprocess

import pathmorse

TRIANGLE = (["v0", "v1", "v2"], [("v0", "v1"), ("v1", "v2"), ("v0", "v2")])
VALUES = {"v0": "1", "v1": "0", "v2": "2"}


def test_homology_triangle():
    r = pathmorse.homology(*TRIANGLE, max_dim=3)
    assert r["betti"] == [1, 0, 0, 0]
    assert r["omega_dims"] == [3, 3, 1, 0]
    assert not r["loop_warning"]


def test_homology_cycle_integer():
    vertices = ["v%d" % i for i in range(4)]
    edges = [("v%d" % i, "v%d" % ((i + 1) % 4)) for i in range(4)]
    r = pathmorse.homology(vertices, edges, max_dim=2, ring="integer")
    assert r["betti"] == [1, 1, 0]
    assert r["torsion"] == [[], [], []]
    assert r["loop_warning"]


def test_allowed_paths():
    paths = pathmorse.allowed_paths(*TRIANGLE, max_dim=2)
    assert paths[0] == [["v0"], ["v1"], ["v2"]]
    assert paths[1] == [["v0", "v1"], ["v0", "v2"], ["v1", "v2"]]
    assert paths[2] == [["v0", "v1", "v2"]]


def test_validate_and_critical():
    r = pathmorse.validate_morse(*TRIANGLE, values=VALUES)
    assert r["valid"]
    assert "witness" not in r
    crit = pathmorse.critical_paths(*TRIANGLE, values=VALUES, max_dim=2)
    assert crit[0] == [["v1"]]
    assert crit[1] == []
    assert crit[2] == []


def test_validate_rejects_zero_on_loop():
    r = pathmorse.validate_morse(
        ["a", "b"], [("a", "b"), ("b", "a")], values={"a": 0, "b": 3}
    )
    assert not r["valid"]
    assert r["witness"]["kind"] == "zero_on_loop"


def test_matching_and_morse_complex():
    m = pathmorse.matching(*TRIANGLE, values=VALUES, max_dim=2)
    assert len(m["pairs"]) == 3
    assert m["acyclic"]
    lowers = sorted(tuple(p["lower"]) for p in m["pairs"])
    assert lowers == [("v0",), ("v0", "v2"), ("v2",)]

    mc = pathmorse.morse_complex(*TRIANGLE, values=VALUES, max_dim=2)
    assert mc["betti"] == [1, 0, 0]
    assert mc["critical_cells"][0] == [["v1"]]
    assert mc["critical_cells"][1] == []


def test_collapse_and_theorems():
    c = pathmorse.collapse(*TRIANGLE, values=VALUES)
    assert c["steps"] == 1
    assert c["removed"] == [("v0", "v1", "v2")]
    assert c["digraph"]["vertices"] == ["v0", "v2"]
    assert c["digraph"]["edges"] == [("v0", "v2")]
    assert c["values"] == {"v0": "1", "v2": "2"}

    t1 = pathmorse.verify_theorem_1(*TRIANGLE, values=VALUES, max_dim=2)
    assert t1["pass"]
    assert t1["dimension_accounting"]
    assert t1["betti_direct"] == t1["betti_morse"] == [1, 0, 0]

    t2 = pathmorse.verify_theorem_2(*TRIANGLE, values=VALUES, max_dim=2)
    assert t2["pass"]
    assert t2["steps"] == 1
    assert t2["inclusion_iso"] == [True, True, True]


def test_generate_feeds_verification():
    inst = pathmorse.generate("transitive-dag", n=6, seed=11, morse="single-zero")
    r = pathmorse.verify_theorem_1(
        inst["vertices"], inst["edges"], values=inst["values"], max_dim=3
    )
    assert r["pass"]


def test_errors_are_python_exceptions():
    try:
        pathmorse.homology(["a"], [("a", "a")])
    except ValueError as e:
        assert "self-loop" in str(e)
    else:
        raise AssertionError("self-loop accepted")


def test_cli_end_to_end(tmp_path):
    cli = os.environ.get("PATHMORSE_CLI")
    assert cli, "PATHMORSE_CLI is not set"
    gpath = tmp_path / "tri.digraph.json"
    mpath = tmp_path / "tri.morse.json"
    gpath.write_text(
        json.dumps(
            {
                "format": "digraph/1",
                "vertices": ["v0", "v1", "v2"],
                "edges": [["v0", "v1"], ["v1", "v2"], ["v0", "v2"]],
            }
        )
    )
    mpath.write_text(json.dumps({"format": "morse/1", "values": VALUES}))

    run = subprocess.run(
        [cli, "verify-thm1", str(gpath), str(mpath), "--max-dim", "2", "--output", "json"],
        capture_output=True,
        text=True,
    )
    assert run.returncode == 0, run.stderr
    report = json.loads(run.stdout)
    assert report["pass"] is True
    assert report["betti_direct"] == [1, 0, 0]
    assert "wall_time_ms=" in run.stderr

    # module and CLI agree
    t1 = pathmorse.verify_theorem_1(*TRIANGLE, values=VALUES, max_dim=2)
    assert report["betti_morse"] == t1["betti_morse"]
