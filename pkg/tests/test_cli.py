import json
import subprocess
import sys
from fractions import Fraction

import pytest

from padicnorm import FieldConfig, SplitNorm, io, linalg
from padicnorm.cli import main

F = Fraction
CFG2 = FieldConfig(2)


@pytest.fixture(scope="module")
def docs(tmp_path_factory):
    root = tmp_path_factory.mktemp("docs")

    def write(name, norm):
        path = root / name
        path.write_text(io.dumps_machine(io.norm_to_doc(norm)))
        return str(path)

    bad = root / "bad.json"
    bad.write_text('{"prime": 2}')
    return {
        "alpha": write(
            "alpha.json", SplitNorm(CFG2, 2, linalg.identity(2), (F(0), F(1, 2)))
        ),
        "beta": write("beta.json", SplitNorm(CFG2, 2, linalg.identity(2), (F(0), F(0)))),
        "lat": write(
            "lat.json",
            SplitNorm(CFG2, 2, linalg.from_columns([(1, 0), (0, 2)]), (F(0), F(0))),
        ),
        "bad": str(bad),
        "three": write(
            "three.json",
            SplitNorm(FieldConfig(3), 3, linalg.identity(3), (F(0), F(0), F(0))),
        ),
    }


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_frozen_lines(docs, capsys):
    alpha, beta, lat = docs["alpha"], docs["beta"], docs["lat"]
    expected = [
        (("eval", alpha, "--vector", "1,1"), "1/2\n"),
        (("eval", alpha, "--vector", "0,0"), "-inf\n"),
        (("graded-dims", alpha), "0 2\n-1/2 2\n"),
        (("graded-dims", alpha, "--delta=-1/2"), "2\n"),
        (("graded-dims", alpha, "--delta", "1/4"), "0\n"),
        (("chi-weights", alpha), "0 1\n1/2 1\n"),
        (("bc-dims", alpha), "kernel=2 centralizer=2 total=4\n"),
        (
            ("bc-dims", alpha, "--ram-index", "2"),
            "ram_index=2 classes=[0:2] lattice_norm=true\n",
        ),
        (
            ("bc-dims", alpha, "--ram-index", "unbounded"),
            "ram_index=unbounded classes=[0:2] lattice_norm=true\n",
        ),
        (("bc-dims", alpha, "--at", "0"), "0 lhs=1 rhs=1\n-1/2 lhs=1 rhs=1\n"),
        (("level", alpha, "--matrix", "1,1;0,1"), "-1/2\n"),
        (("level", alpha, "--matrix", "1,1;0,1", "--delta=-1/2"), "true\n"),
        (("level", alpha, "--matrix", "1,1;0,1", "--delta=-1"), "false\n"),
        (("fiber", alpha), "levi=[1,1] unipotent=2 total=4\n"),
        (("fiber", beta), "levi=[2] unipotent=0 total=4\n"),
        (("coords", alpha), "0,1/2\n"),
        (("coords", alpha, "--frame", "1,0;1,1"), "none\n"),
        (("cartan", beta, lat), "1,0\n"),
        (("cartan", beta, alpha), "1/2,0\n"),
        (("type", alpha), "1,1\n"),
        (("type", beta), "2\n"),
        (("translate", "--matrix", "4,0;0,1", "--prime", "2"), "2,0\n"),
        (("translate", "--matrix", "1/2,0;0,1", "--prime", "2"), "-1,0\n"),
        (("stab-check", alpha, "--matrix", "1,2;0,1"), "true\n"),
        (("stab-check", alpha, "--matrix", "2,0;0,1"), "false\n"),
        (("equals", alpha, beta), "false\n"),
        (("equals", alpha, alpha), "true\n"),
    ]
    for argv, want in expected:
        code, out, err = run(capsys, *argv)
        assert (code, err) == (0, ""), argv
        assert out == want, argv


def test_frozen_documents(docs, capsys):
    alpha, beta = docs["alpha"], docs["beta"]
    expected = [
        (
            ("ball", alpha, "--format", "machine"),
            '{"dim":2,"matrix":[["1","0"],["0","2"]],"prime":2}\n',
        ),
        (
            ("ball", alpha, "--open", "--format", "machine"),
            '{"dim":2,"matrix":[["2","0"],["0","2"]],"prime":2}\n',
        ),
        (
            ("apartment", "--vector", "0,1/2", "--prime", "2", "--format", "machine"),
            '{"basis":[["1","0"],["0","1"]],"dim":2,"prime":2,"values":["0","1/2"]}\n',
        ),
        (
            ("dual", alpha, "--format", "machine"),
            '{"basis":[["1","0"],["0","1"]],"dim":2,"prime":2,"values":["0","-1/2"]}\n',
        ),
        (
            ("act", beta, "--matrix", "2,0;0,1", "--format", "machine"),
            '{"basis":[["2","0"],["0","1"]],"dim":2,"prime":2,"values":["0","0"]}\n',
        ),
        (
            ("restrict", alpha, "--span", "1,0", "--format", "machine"),
            '{"basis":[["1"]],"dim":1,"prime":2,"values":["0"]}\n',
        ),
        (
            ("quotient", alpha, "--span", "1,0", "--format", "machine"),
            '{"basis":[["1"]],"dim":1,"prime":2,"values":["1/2"]}\n',
        ),
        (
            ("chain", alpha, "--format", "machine"),
            '{"classes":["0","1/2"],"dim":2,'
            '"lattices":[[["1","0"],["0","2"]],[["1","0"],["0","1"]]],"prime":2}\n',
        ),
    ]
    for argv, want in expected:
        code, out, err = run(capsys, *argv)
        assert (code, err) == (0, ""), argv
        assert out == want, argv


def test_tree_output(docs, capsys):
    code, out, _ = run(capsys, "tree", docs["beta"], "--format", "machine")
    assert code == 0
    doc = json.loads(out)
    assert [n["basis"] for n in doc["neighbors"]] == [
        [["2", "0"], ["0", "1"]],
        [["1", "0"], ["0", "2"]],
        [["1", "1"], ["0", "2"]],
    ]


def test_machine_payloads(docs, capsys):
    alpha = docs["alpha"]
    code, out, _ = run(capsys, "eval", alpha, "--vector", "1,1", "--format", "machine")
    assert code == 0 and json.loads(out) == {"value": "1/2"}
    code, out, _ = run(capsys, "fiber", alpha, "--format", "machine")
    assert code == 0 and json.loads(out) == {"levi": [1, 1], "total": 4, "unipotent": 2}
    code, out, _ = run(capsys, "equals", alpha, alpha, "--format", "machine")
    assert code == 0 and json.loads(out) == {"result": True}
    code, out, _ = run(capsys, "coords", alpha, "--format", "machine")
    assert code == 0 and json.loads(out) == {"coords": ["0", "1/2"]}
    code, out, _ = run(
        capsys, "graded-dims", alpha, "--format", "machine"
    )
    assert code == 0 and json.loads(out) == {
        "classes": [["0", 2], ["-1/2", 2]],
        "total": 4,
    }


def test_exit_codes(docs, capsys):
    alpha = docs["alpha"]

    code, out, err = run(capsys, "eval", docs["bad"], "--vector", "1,1")
    assert code == 1 and out == "" and err.startswith("error:")

    code, out, err = run(capsys, "eval", str(docs["alpha"]) + ".missing", "--vector", "1")
    assert code == 1 and err.startswith("error:")

    code, out, err = run(capsys, "eval", alpha, "--vector", "1,1,1")
    assert code == 2 and out == "" and err.startswith("error:")

    code, _, err = run(capsys, "act", alpha, "--matrix", "1,1;1,1")
    assert code == 2 and err.startswith("error:")

    code, _, err = run(capsys, "tree", alpha)
    assert code == 2 and err.startswith("error:")

    code, _, err = run(capsys, "equals", alpha, docs["three"])
    assert code == 2 and err.startswith("error:")


def test_usage_errors(docs):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-verb", docs["alpha"]])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["eval", docs["alpha"]])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["bc-dims", docs["alpha"], "--ram-index", "0"])
    assert exc.value.code == 2


def test_document_pipeline(docs, capsys, tmp_path):
    code, out, _ = run(capsys, "dual", docs["alpha"], "--format", "machine")
    assert code == 0
    once = tmp_path / "dual.json"
    once.write_text(out)
    code, out, _ = run(capsys, "dual", str(once), "--format", "machine")
    assert code == 0
    assert out == open(docs["alpha"]).read()


def test_determinism(docs, capsys):
    for argv in (
        ("graded-dims", docs["alpha"]),
        ("chain", docs["alpha"], "--format", "machine"),
        ("tree", docs["beta"], "--format", "machine"),
    ):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


def test_module_entry_point(docs):
    proc = subprocess.run(
        [sys.executable, "-m", "padicnorm", "eval", docs["alpha"], "--vector", "1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1/2\n"
    assert proc.stderr == ""
