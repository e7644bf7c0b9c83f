import io
import json
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graver_opt import NEG_INF, POS_INF, InstanceError, ProblemInstance, parse_instance, serialize_instance
from graver_opt.cli import main, subset_sum_fixture

from oracles import brute_minimum, random_certified_instance

EXAMPLE = {
    "A": [[1, 1, 1]],
    "b": [0],
    "l": [-3, -3, -3],
    "u": [3, 3, 3],
    "objective": {"type": "quadratic", "V": [[2] * 3] * 3, "w": [1, 0, -1], "a": 0},
}


def run(argv, capsys, doc=None, tmp_path=None):
    if doc is not None:
        path = tmp_path / "in.json"
        path.write_text(json.dumps(doc))
        argv = [a if a != "@" else str(path) for a in argv]
    code = main(argv)
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_solve_example(capsys, tmp_path):
    code, out, _ = run(["solve", "@"], capsys, EXAMPLE, tmp_path)
    assert code == 0
    assert out["status"] == "optimal" and out["certified"] is True
    assert out["x"] == [-3, 0, 3] and out["value"] == -6


def test_solve_trace(capsys, tmp_path):
    code, out, _ = run(["solve", "--trace", "@"], capsys, EXAMPLE, tmp_path)
    assert code == 0 and len(out["trace"]) == out["steps"]


def test_solve_infeasible_and_infinite(capsys, tmp_path):
    doc = dict(EXAMPLE, b=[4], l=[0, 0, 0], u=[1, 1, 1])
    code, out, _ = run(["solve", "@"], capsys, doc, tmp_path)
    assert code == 20 and out["status"] == "infeasible"
    doc = dict(EXAMPLE, A=[[0, 0, 0]], b=[0], l=[0, 0, 0], u=["inf"] * 3)
    code, out, _ = run(["solve", "@"], capsys, doc, tmp_path)
    assert code == 21 and out["status"] == "infinite"


def test_uncertified_exit_code(capsys, tmp_path):
    code, out, _ = run(["solve", "@"], capsys, subset_sum_fixture([2, 3, 5], 5), tmp_path)
    assert code == 10 and out["certified"] is False
    assert out["certificate"]["member"] is False and out["certificate"]["value"] < 0
    code, out, _ = run(["solve", "--no-certify", "@"], capsys, EXAMPLE, tmp_path)
    assert code == 10 and out["certification"] == "skipped"


def test_solve_with_precomputed_basis(capsys, tmp_path):
    code, basis, _ = run(["graver", "@"], capsys, {"A": [[1, 1, 1]]}, tmp_path)
    (tmp_path / "g.json").write_text(json.dumps(basis))
    (tmp_path / "i.json").write_text(json.dumps(EXAMPLE))
    code = main(["solve", "--graver", str(tmp_path / "g.json"), str(tmp_path / "i.json")])
    out = json.loads(capsys.readouterr().out)
    assert code == 0 and out["value"] == -6


def test_graver_command(capsys, tmp_path):
    code, out, _ = run(["graver", "@"], capsys, {"A": [[1, 2, 1]]}, tmp_path)
    assert code == 0 and len(out["graver"]) == 8
    code, brute, _ = run(["graver", "--oracle", "brute", "--radius", "2", "@"], capsys, {"A": [[1, 2, 1]]}, tmp_path)
    assert brute["graver"] == out["graver"]


def test_cone_command(capsys, tmp_path):
    code, out, _ = run(["cone", "@"], capsys, {"A": [[1, 1, 1]], "v": [-1, 0, 0]}, tmp_path)
    assert code == 0 and out["member"] is False and out["value"] == -1
    code, out, _ = run(["cone", "@"], capsys, {"A": [[0, 0]], "V": [[1, 1], [1, 1]]}, tmp_path)
    assert out["witness"] == [[1, 0], [0, -1]]
    doc = {"A": [[1, 1, 1]], "form": {"degree": 3, "terms": [{"index": [i, j, k], "coef": 1} for i in range(3) for j in range(3) for k in range(3)]}}
    code, out, _ = run(["cone", "--check", "kd", "@"], capsys, doc, tmp_path)
    assert out == {"check": "kd", "member": True}
    code, out, err = run(["cone", "@"], capsys, {"A": [[1, 1]], "v": [1, 1], "V": [[0, 0], [0, 0]]}, tmp_path)
    assert code == 1 and "exactly one" in err


def test_characterize_command(capsys, tmp_path):
    code, out, _ = run(["characterize", "@"], capsys, {"A": [[1, 1, 1]]}, tmp_path)
    assert out["strict"] is False and out["witness"] is None
    code, out, _ = run(["characterize", "@"], capsys, {"A": [[1, 2, 3, 4], [1, 4, 9, 16]]}, tmp_path)
    assert out["witness"] == 0


@pytest.mark.parametrize("v, v0, optimum", [([2, 3, 5], 5, 0), ([2, 4], 3, 1), ([], 0, 0)])
def test_subset_sum_fixture(v, v0, optimum, capsys):
    code = main(["fixture-subset-sum", *map(str, v), "--v0", str(v0)])
    doc = json.loads(capsys.readouterr().out)
    inst = parse_instance(doc)
    assert code == 0
    assert brute_minimum(inst.objective, inst.A, inst.b, inst.bounds)[0] == optimum


def test_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(EXAMPLE)))
    assert main(["solve", "-"]) == 0


@pytest.mark.parametrize(
    "patch, key",
    [
        ({"b": [1, 2]}, "b"),
        ({"l": [0, "oops", 0]}, "l[1]"),
        ({"u": [1, 1, "+inf"]}, "u[2]"),
        ({"objective": {"type": "cubic"}}, "objective.type"),
        ({"objective": {"type": "quadratic", "V": [[1, 2], [3, 4]]}}, "objective.V[0]"),
        ({"objective": {"type": "form", "degree": 2, "terms": [{"index": [0, 5], "coef": 1}]}}, "objective.terms[0].index"),
        ({"A": [[1, 1.5, 1]]}, "A[0][1]"),
    ],
)
def test_errors_name_the_key(patch, key, capsys, tmp_path):
    code, out, err = run(["solve", "@"], capsys, dict(EXAMPLE, **patch), tmp_path)
    assert code == 1 and out is None
    assert key + ":" in err
    with pytest.raises(InstanceError) as info:
        parse_instance(dict(EXAMPLE, **patch))
    assert info.value.path == key


def test_missing_key_and_bad_json(capsys, tmp_path):
    doc = {k: v for k, v in EXAMPLE.items() if k != "b"}
    code, _, err = run(["solve", "@"], capsys, doc, tmp_path)
    assert code == 1 and "b: missing key" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"A": [[1, 1]],\n "b": [x]}')
    assert main(["solve", str(bad)]) == 1
    assert "line 2" in capsys.readouterr().err
    assert main(["solve", str(tmp_path / "nope.json")]) == 1


def test_decimal_strings_and_infinity_tokens():
    doc = dict(EXAMPLE, b=["0"], l=["-inf", "-3", -3], u="inf")
    doc["objective"] = dict(EXAMPLE["objective"], a="123456789012345678901234567890")
    inst = parse_instance(doc)
    assert inst.bounds.lower == (NEG_INF, -3, -3) and inst.bounds.upper == (POS_INF,) * 3
    assert inst.objective.a == 123456789012345678901234567890
    out = serialize_instance(inst)
    assert out["l"][0] == "-inf" and out["u"] == ["inf"] * 3


def test_round_trip_random_instances():
    rng = random.Random(31)
    for t in range(100):
        A, b, bounds, obj = random_certified_instance(rng, ("separable", "family", "rowspace", "vacuous")[t % 4])
        inst = ProblemInstance(A, b, bounds, obj)
        doc = json.loads(json.dumps(serialize_instance(inst)))
        assert parse_instance(doc) == inst


@given(st.integers(1, 3), st.data())
@settings(max_examples=50, deadline=None)
def test_round_trip_forms(n, data):
    d = data.draw(st.integers(1, 3))
    terms = data.draw(
        st.lists(
            st.fixed_dictionaries({"index": st.lists(st.integers(0, n - 1), min_size=d, max_size=d), "coef": st.integers(-9, 9)}),
            max_size=5,
        )
    )
    doc = {"A": [[1] * n], "b": [0], "l": 0, "u": "inf", "objective": {"type": "form", "degree": d, "terms": terms}}
    inst = parse_instance(doc)
    assert parse_instance(serialize_instance(inst)) == inst


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "graver_opt", "fixture-subset-sum", "1", "--v0", "1"], capture_output=True, text=True)
    assert r.returncode == 0 and json.loads(r.stdout)["objective"]["a"] == 1
