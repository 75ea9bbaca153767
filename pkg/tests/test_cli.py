"""Command-line surface: golden outputs, JSON round trips, exit codes."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from hesskit import Filling, Monomial, Polynomial
from hesskit.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def assert_golden(capsys, name, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    expected = (GOLDEN / name).read_text()
    assert out == expected
    return out


class TestGoldenOutputs:
    def test_fillings_h333(self, capsys):
        out = assert_golden(
            capsys, "fillings_h333_mu21.txt", "fillings", "--h", "3,3,3", "--mu", "2,1"
        )
        # six fillings, every placement permissible for the maximal function
        assert len(out.splitlines()) == 6

    def test_fillings_h133(self, capsys):
        out = assert_golden(
            capsys, "fillings_h133_mu21.txt", "fillings", "--h", "1,3,3", "--mu", "2,1"
        )
        rows = [line.split("\t") for line in out.splitlines()]
        assert [r[0] for r in rows] == ["12/3", "13/2", "23/1", "32/1"]
        assert [r[1] for r in rows] == ["(1,3),(2,3)", "(1,2)", "-", "(2,3)"]

    def test_fillings_h3334_table(self, capsys):
        out = assert_golden(
            capsys, "fillings_h3334_mu4.txt", "fillings", "--h", "3,3,3,4", "--mu", "4"
        )
        rows = [line.split("\t") for line in out.splitlines()]
        assert [r[2] for r in rows] == ["1", "x3", "x2", "x2*x3", "x3^2", "x2*x3^2"]

    def test_ideal(self, capsys):
        out = assert_golden(capsys, "ideal_h3334.txt", "ideal", "--h", "3,3,3,4")
        assert out.splitlines()[0] == "x4"
        assert out.splitlines()[3] == "x1 + x2 + x3 + x4"

    @pytest.mark.parametrize(
        "name,argv",
        [
            ("tree_gp_mu22.dot", ["tree", "--mu", "2,2", "--kind", "gp"]),
            ("tree_modgp_mu22.dot", ["tree", "--mu", "2,2", "--kind", "modified-gp"]),
            ("tree_h_h233.dot", ["tree", "--h", "2,3,3", "--kind", "h"]),
            ("tree_htab_h3334.dot", ["tree", "--h", "3,3,3,4", "--kind", "h-tableau"]),
        ],
    )
    def test_tree_dot(self, capsys, name, argv):
        assert_golden(capsys, name, *argv)

    def test_gp_tree_leaf_labels_match_figure(self):
        dot = (GOLDEN / "tree_gp_mu22.dot").read_text()
        for label in ["1", "x2", "x3", "x4", "x2*x4", "x3*x4"]:
            assert f'[label="{label}"];' in dot

    def test_outputs_are_deterministic(self, capsys):
        first = run_cli(capsys, "fillings", "--h", "1,3,3", "--mu", "2,1")
        second = run_cli(capsys, "fillings", "--h", "1,3,3", "--mu", "2,1")
        assert first == second


class TestPlainCommands:
    def test_betti(self, capsys):
        code, out, _ = run_cli(capsys, "betti", "--h", "1,3,3", "--mu", "2,1")
        assert code == 0
        assert out.splitlines() == ["1,2,1", "1 + 2*t^2 + t^4"]

    def test_betti_trivial(self, capsys):
        _, out, _ = run_cli(capsys, "betti", "--h", "1,2,3,4", "--mu", "4")
        assert out.splitlines()[0] == "1"

    def test_betti_h3334(self, capsys):
        _, out, _ = run_cli(capsys, "betti", "--h", "3,3,3,4", "--mu", "4")
        assert out.splitlines()[0] == "1,2,2,1"

    def test_tree_single_box_modified_chain(self, capsys):
        code, out, _ = run_cli(
            capsys, "tree", "--mu", "1", "--kind", "modified-gp", "--format", "json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["levels"] == ["1", "0", "B"]
        node, depth = data["root"], 1
        while "children" in node:
            assert len(node["children"]) == 1
            node = node["children"][0]
            depth += 1
        assert depth == 3 and node["label"] == "1"

    def test_psih_worked_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "psih", "--h", "2,4,4,5,5", "--monomial", "x2*x4^2*x5"
        )
        assert code == 0
        assert out == "54213\n"

    def test_psi_worked_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "psi", "--mu", "2,2,2", "--monomial", "x3*x4^2*x5*x6"
        )
        assert code == 0
        assert out == "12/36/45\n"

    def test_phi(self, capsys):
        code, out, _ = run_cli(
            capsys, "phi", "--h", "3,3,3,4", "--mu", "4", "--filling", "3214"
        )
        assert code == 0
        assert out.splitlines() == ["pairs: (1,2),(1,3),(2,3)", "x2*x3^2"]

    def test_basis_h(self, capsys):
        _, out, _ = run_cli(capsys, "basis", "--h", "3,3,3,4")
        assert out.splitlines() == ["1", "x3", "x3^2", "x2", "x2*x3", "x2*x3^2"]

    def test_basis_mu(self, capsys):
        _, out, _ = run_cli(capsys, "basis", "--mu", "2,2")
        assert set(out.splitlines()) == {"1", "x2", "x3", "x4", "x2*x4", "x3*x4"}

    def test_verify_single(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--h", "3,3,3,4")
        assert code == 0
        assert out.splitlines() == [
            "h=3,3,3,4",
            "fillings: 6",
            "leaves: 6",
            "prod_nu: 6",
            "prod_beta: 6",
            "a_equals_b: true",
            "OK",
        ]

    def test_verify_sweep(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--all-n", "5")
        assert code == 0
        assert out.splitlines()[-1] == "42 functions checked, 0 failures"


class TestJsonOutputs:
    def test_fillings_round_trip(self, capsys):
        _, out, _ = run_cli(
            capsys, "fillings", "--h", "1,3,3", "--mu", "2,1", "--format", "json"
        )
        records = json.loads(out)
        assert len(records) == 4
        first = records[0]
        filling = Filling.from_json(first["filling"])
        assert filling.word == (1, 2, 3)
        assert first["pairs"] == [[1, 3], [2, 3]]
        assert Monomial.from_json(first["monomial"]) == Monomial.parse("x3^2", 3)

    def test_ideal_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, "ideal", "--h", "3,3,3,4", "--format", "json")
        polys = [Polynomial.from_json(entry) for entry in json.loads(out)]
        assert str(polys[1]) == "x3^3 + x3^2*x4 + x3*x4^2 + x4^3"

    def test_basis_round_trip(self, capsys):
        _, out, _ = run_cli(capsys, "basis", "--h", "3,3,3,4", "--format", "json")
        basis = {Monomial.from_json(e) for e in json.loads(out)}
        assert Monomial.parse("x2*x3^2", 4) in basis
        assert len(basis) == 6

    def test_psi_json(self, capsys):
        _, out, _ = run_cli(
            capsys, "psi", "--mu", "2,2,2", "--monomial", "x3*x4^2*x5*x6", "--format", "json"
        )
        assert Filling.from_json(json.loads(out)).rows == ((1, 2), (3, 6), (4, 5))

    def test_tree_json(self, capsys):
        _, out, _ = run_cli(
            capsys, "tree", "--h", "2,3,3", "--kind", "h", "--format", "json"
        )
        data = json.loads(out)
        assert data["kind"] == "h"
        assert data["root"]["id"] == "r"
        assert len(data["root"]["children"]) == 2

    def test_verify_json(self, capsys):
        _, out, _ = run_cli(capsys, "verify", "--h", "2,3,3", "--format", "json")
        data = json.loads(out)
        assert data["ok"] is True
        assert data["prod_beta"] == 4


class TestExitCodes:
    def test_invalid_h(self, capsys):
        code, _, err = run_cli(capsys, "fillings", "--h", "2,1,3", "--mu", "3")
        assert code == 2
        assert "monotonicity" in err

    def test_shape_size_mismatch(self, capsys):
        code, _, _ = run_cli(capsys, "fillings", "--h", "1,2,3", "--mu", "2,2")
        assert code == 2

    def test_mismatched_tree_kind(self, capsys):
        code, _, err = run_cli(capsys, "tree", "--kind", "gp", "--h", "2,3,3")
        assert code == 2
        assert "--mu" in err

    def test_cap_exceeded(self, capsys):
        code, _, _ = run_cli(
            capsys, "fillings", "--h", ",".join(["10"] * 10), "--mu", "10"
        )
        assert code == 3

    def test_cap_override_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "betti", "--h", "1,2,3,4,5,6,7,8,9,10", "--mu", "10", "--max-n", "10"
        )
        assert code == 0
        assert out.splitlines()[0] == "1"

    def test_not_in_basis(self, capsys):
        code, _, err = run_cli(capsys, "psih", "--h", "3,3,3,4", "--monomial", "x4")
        assert code == 4
        assert "basis" in err

    def test_not_permissible_filling(self, capsys):
        code, _, _ = run_cli(
            capsys, "phi", "--h", "1,3,3", "--mu", "2,1", "--filling", "213"
        )
        assert code == 2

    def test_verify_requires_exactly_one_mode(self, capsys):
        assert run_cli(capsys, "verify")[0] == 2
        assert run_cli(capsys, "verify", "--h", "1,2", "--all-n", "3")[0] == 2


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "hesskit.cli", "betti", "--h", "1,3,3", "--mu", "2,1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "1,2,1"
