import json
import math
import subprocess
import sys

import pytest

from hyperinterlace.cli import main
from hyperinterlace.document import load, parse_hypergraph

from .conftest import FIXTURES

HYPEREDGE_LOOP = str(FIXTURES / "hyperedge_loop.json")
TRIANGLE = str(FIXTURES / "triangle.json")
MIXED = str(FIXTURES / "mixed.json")


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, out


def records(out):
    return [json.loads(line) for line in out.splitlines() if line.strip()]


def test_spectrum_L_example(capsys):
    status, out = run(capsys, "spectrum", "--operator", "L", "--input", HYPEREDGE_LOOP)
    assert status == 0
    values = [float(x) for x in out.split()]
    expected = [0.0, (3 - math.sqrt(5)) / 2, (3 + math.sqrt(5)) / 2]
    assert values == pytest.approx(expected, abs=1e-9)
    assert out.splitlines()[1] == "0.3819660113"


@pytest.mark.parametrize("op", ["A", "K", "L", "Kdual", "Lrw"])
def test_spectrum_operators_json(capsys, op):
    status, out = run(capsys, "spectrum", "--operator", op, "--input", MIXED, "--format", "json-lines")
    (rec,) = records(out)
    assert status == 0 and rec["operator"] == op
    assert set(rec) == {"command", "argv", "input_digest", "operator", "dim", "values"}
    assert rec["values"] == sorted(rec["values"])


def test_lrw_matches_L(capsys):
    _, a = run(capsys, "spectrum", "--operator", "L", "--input", MIXED)
    _, b = run(capsys, "spectrum", "--operator", "Lrw", "--input", MIXED)
    assert a == b


def test_matrices(capsys):
    status, out = run(capsys, "matrices", "--input", HYPEREDGE_LOOP, "--format", "json-lines")
    recs = records(out)
    assert status == 0
    assert [r["matrix"] for r in recs] == ["D", "A", "I", "L", "Lrw", "K", "Kdual"]
    by_name = {r["matrix"]: r for r in recs}
    assert by_name["K"]["entries"] == [[2, 1, 1], [1, 1, 1], [1, 1, 1]]
    assert (by_name["I"]["rows"], by_name["I"]["cols"]) == (3, 2)


def test_matrices_with_isolated_vertex(capsys, tmp_path):
    path = tmp_path / "iso.json"
    path.write_text('{"vertices": ["a", "b"], "edges": [{"id": "e", "coefficients": {"a": 1}}]}')
    status, out = run(capsys, "matrices", "--input", str(path))
    assert status == 0
    assert "unavailable" in out


def test_delete_vertex(capsys):
    status, out = run(capsys, "delete", "--input", HYPEREDGE_LOOP, "--vertex", "v1")
    G = parse_hypergraph(out)
    assert status == 0 and G.vertices == ("v2", "v3") and G.edge("l").cardinality == 0


def test_delete_edge_and_restrict(capsys, tmp_path):
    target = tmp_path / "out.json"
    assert main(["delete", "--input", HYPEREDGE_LOOP, "--edge", "l", "--output", str(target)]) == 0
    assert load(target).edge_ids == ("e1",)
    _, out = run(capsys, "delete", "--input", HYPEREDGE_LOOP, "--restrict", "l")
    assert parse_hypergraph(out).vertices == ("v1",)


def test_delete_needs_one_mode(capsys):
    with pytest.raises(SystemExit) as info:
        main(["delete", "--input", HYPEREDGE_LOOP])
    assert info.value.code == 2


def test_verify_loop_passes(capsys):
    status, out = run(capsys, "verify", "--theorem", "loop", "--edge", "l", "--input", HYPEREDGE_LOOP)
    assert status == 0
    assert "verdict: PASS" in out


def test_verify_edge_K_reports_stated_chain_failure(capsys):
    status, out = run(capsys, "verify", "--theorem", "edge-K", "--input", TRIANGLE)
    assert status == 1
    assert "stated chain on K" in out and "dual mechanism on K*" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["--theorem", "vertex-A"],
        ["--theorem", "vertex-K", "--vertex", "v2"],
        ["--theorem", "vertex-L"],
        ["--theorem", "edgeset-A", "--edge", "e12"],
        ["--theorem", "edgeset-L", "--edge", "e12"],
        ["--theorem", "butler", "--edge", "e12"],
        ["--theorem", "traces"],
    ],
)
def test_verify_passing_theorems(capsys, argv):
    status, out = run(capsys, "verify", "--input", TRIANGLE, "--format", "json-lines", *argv)
    recs = records(out)
    assert status == 0 and recs[-1]["summary"]["verdict"] is True
    assert all(r["tolerance"] == 1e-8 for r in recs)


def test_verify_precondition_exit_code(capsys):
    status, _ = run(capsys, "verify", "--theorem", "edgeset-L", "--edge", "e1", "--input", HYPEREDGE_LOOP)
    assert status == 2
    with pytest.raises(SystemExit) as info:
        main(["verify", "--theorem", "butler", "--input", HYPEREDGE_LOOP])
    assert info.value.code == 2


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["v1"], "edges": [{"id": "e", "coefficients": {"v1": 0}}]}')
    assert main(["classify", "--input", str(bad)]) == 2
    assert main(["classify", "--input", str(tmp_path / "missing.json")]) == 2
    with pytest.raises(SystemExit) as info:
        main(["nope"])
    assert info.value.code == 2


def test_classify(capsys):
    status, out = run(capsys, "classify", "--input", TRIANGLE, "--format", "json-lines")
    (rec,) = records(out)
    assert status == 0 and rec["class"]["simple_graph"] is True


def test_fuzz_deterministic(capsys):
    argv = ["fuzz", "--theorem", "vertex-L", "--count", "30", "--seed", "1"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_fuzz_edge_K_fails_with_witness(capsys):
    status, out = run(capsys, "fuzz", "--theorem", "edge-K", "--count", "5", "--seed", "0", "--format", "json-lines")
    (rec,) = records(out)
    assert status == 1
    assert rec["summary"]["first_failure"]["document"]["vertices"]


@pytest.mark.parametrize("theorem", ["vertex-A", "butler", "loop"])
def test_fuzz_schema_stable(capsys, theorem):
    _, out = run(capsys, "fuzz", "--theorem", theorem, "--count", "3", "--format", "json-lines")
    (rec,) = records(out)
    _, ref = run(capsys, "fuzz", "--theorem", "traces", "--count", "3", "--format", "json-lines")
    assert set(rec) == set(records(ref)[0]) and set(rec["summary"]) == set(records(ref)[0]["summary"])


def test_tightness_edgeset_finds_example(capsys):
    status, out = run(capsys, "tightness", "--target", "edgeset-L", "--input", HYPEREDGE_LOOP, "--budget", "1")
    assert status == 0 and "witnesses found: 1" in out


def test_tightness_butler(capsys):
    status, out = run(capsys, "tightness", "--target", "butler", "--budget", "1000", "--format", "json-lines")
    recs = records(out)
    assert status == 0 and recs[-1]["summary"]["witnesses"] == 1
    assert recs[0]["witness"]["target"] == "butler_strictness"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperinterlace", "spectrum", "--operator", "K", "--input", TRIANGLE],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert [float(x) for x in proc.stdout.split()] == pytest.approx([0, 3, 3], abs=1e-9)
    assert "finished in" in proc.stderr
