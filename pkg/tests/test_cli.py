import json
import shutil
import subprocess

import pytest

from affgebra.checks import run_check
from affgebra.classes import ClassKind, MatrixClassSpec
from affgebra.cli import main
from affgebra.affine import COMMUTATOR
from affgebra.matrix import Matrix, matrix_from_wire, matrix_to_wire
from affgebra.scalars import QQ

CYCLE = Matrix(QQ, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])
SWAP = Matrix(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    def test_green_run_exit_zero(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "--class", "gna", "--n", "2", "--field", "Q",
            "--bracket", "commutator", "--seed", "0", "--trials", "4",
        )
        assert code == 0
        assert err == ""
        reports = [json.loads(line) for line in out.splitlines()]
        assert reports and all(r["passed"] for r in reports)
        assert {"check", "passed", "trials", "counterexample", "elapsed_ms"} == set(reports[0])

    def test_zeta_bracket(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--class", "una", "--n", "1", "--field", "Qi",
            "--bracket", "zeta:2", "--seed", "0", "--trials", "4",
        )
        assert code == 0
        names = [json.loads(line)["check"] for line in out.splitlines()]
        assert "zeta-retract-trivial" in names
        assert "bullet-assoc" not in names

    def test_characteristic_obstruction_is_usage_error(self, capsys):
        code, out, err = run_cli(
            capsys, "verify", "--class", "sna", "--n", "5", "--field", "GF", "--p", "5",
            "--trials", "2",
        )
        assert code == 2
        assert "NonInvertibleScalar" in err
        assert out == ""

    def test_check_selection(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--class", "gna", "--n", "1", "--checks", "malcev,antisym",
            "--trials", "3",
        )
        assert code == 0
        assert [json.loads(l)["check"] for l in out.splitlines()] == ["malcev", "antisym"]

    def test_unknown_check_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--class", "gna", "--n", "1", "--checks", "nope", "--trials", "1"
        )
        assert code == 2
        assert "nope" in err

    def test_theorem_check_selectable(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--class", "gna", "--n", "1",
            "--checks", "theorem-iso,corollary-retract", "--trials", "4",
        )
        assert code == 0
        names = [json.loads(l)["check"] for l in out.splitlines()]
        assert names == ["theorem-iso", "corollary-retract"]

    def test_bad_bracket_flag(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--class", "gna", "--n", "1", "--bracket", "poisson", "--trials", "1"
        )
        assert code == 2


class TestIsoCheck:
    def test_gna_base_point_image(self, capsys):
        code, out, _ = run_cli(
            capsys, "iso-check", "--class", "gna", "--n", "2", "--field", "Q",
            "--via", "P", "--seed", "0", "--trials", "4",
        )
        assert code == 0
        header, report = (json.loads(line) for line in out.splitlines())
        assert header["block_kind"] == "gl"
        img = matrix_from_wire(header["base_point_image"])
        assert img == Matrix.diagonal(QQ, [0, 0, 1])
        assert report["passed"]

    def test_ona_via_u_fixes_identity(self, capsys):
        code, out, _ = run_cli(
            capsys, "iso-check", "--class", "ona", "--n", "2", "--via", "U",
            "--seed", "0", "--trials", "3",
        )
        assert code == 0
        header = json.loads(out.splitlines()[0])
        img = matrix_from_wire(header["base_point_image"])
        assert img == Matrix.identity(img.field, 3)

    def test_ona_via_p_rejected(self, capsys):
        code, _, err = run_cli(
            capsys, "iso-check", "--class", "ona", "--n", "2", "--via", "P", "--trials", "2"
        )
        assert code == 2
        assert "ClassViolation" in err


class TestCorollary:
    def test_runs_green(self, capsys):
        code, out, _ = run_cli(
            capsys, "corollary", "--class", "suna", "--n", "2", "--seed", "1", "--trials", "10"
        )
        assert code == 0
        assert json.loads(out.splitlines()[0])["check"] == "corollary-retract"


class TestEmitMatrix:
    def test_integral_basis(self, capsys):
        code, out, _ = run_cli(capsys, "emit-matrix", "--which", "P", "--n", "2", "--field", "Q")
        assert code == 0
        doc = json.loads(out)
        assert doc["entries"] == [["1", "1", "1"], ["0", "-1", "1"], ["-1", "0", "1"]]

    def test_inverse_display(self, capsys):
        code, out, _ = run_cli(capsys, "emit-matrix", "--which", "Pinv", "--n", "2")
        assert code == 0
        doc = json.loads(out)
        assert doc["entries"] == [
            ["1/3", "1/3", "-2/3"], ["1/3", "-2/3", "1/3"], ["1/3", "1/3", "1/3"]
        ]

    def test_orthonormal_entries(self, capsys):
        code, out, _ = run_cli(capsys, "emit-matrix", "--which", "U", "--n", "1")
        assert code == 0
        doc = json.loads(out)
        assert doc["field"] == "surd"
        assert doc["entries"][0][0] == "1/2*sqrt(2)"

    def test_roundtrip(self, capsys):
        from affgebra.transforms import change_of_basis

        code, out, _ = run_cli(capsys, "emit-matrix", "--which", "P", "--n", "3")
        assert matrix_from_wire(json.loads(out)) == change_of_basis(3, QQ)

    def test_characteristic_obstruction(self, capsys):
        code, _, err = run_cli(
            capsys, "emit-matrix", "--which", "Pinv", "--n", "4", "--field", "GF", "--p", "5"
        )
        assert code == 2
        assert "NonInvertibleScalar" in err


class TestBracketAndRetract:
    def test_bracket_example(self, capsys):
        a = json.dumps(matrix_to_wire(CYCLE))
        b = json.dumps(matrix_to_wire(SWAP))
        code, out, _ = run_cli(capsys, "bracket", "--bracket", "commutator", a, b)
        assert code == 0
        assert matrix_from_wire(json.loads(out)) == Matrix(
            QQ, [[1, 1, -1], [1, -1, 1], [-1, 1, 1]]
        )

    def test_retract_alternating(self, capsys):
        o = json.dumps(matrix_to_wire(CYCLE))
        code, out, _ = run_cli(capsys, "retract", "-o", o, o, o)
        assert code == 0
        assert matrix_from_wire(json.loads(out)) == CYCLE

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "m.json"
        path.write_text(json.dumps(matrix_to_wire(CYCLE)))
        code, out, _ = run_cli(capsys, "bracket", str(path), str(path))
        assert code == 0
        assert matrix_from_wire(json.loads(out)) == CYCLE

    def test_malformed_input(self, capsys):
        code, _, err = run_cli(capsys, "bracket", "{not json", "{}")
        assert code == 2


class TestDims:
    def test_table_values(self, capsys):
        for args, expected in [
            (("--class", "suna", "--n", "3"), 8),
            (("--class", "gna", "--n", "3"), 9),
            (("--class", "ona", "--n", "3"), 3),
            (("--class", "una", "--n", "2"), 4),
        ]:
            code, out, _ = run_cli(capsys, "dims", *args)
            assert code == 0
            assert int(out.strip()) == expected


class TestSample:
    def test_deterministic_stream(self, capsys):
        args = ("sample", "--class", "sna", "--n", "2", "--seed", "42", "--count", "3")
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert len(out1.splitlines()) == 3

    def test_env_seed_default(self, capsys, monkeypatch):
        monkeypatch.setenv("AFFGEBRA_SEED", "42")
        code, out_env, _ = run_cli(capsys, "sample", "--class", "sna", "--n", "2", "--count", "2")
        assert code == 0
        _, out_explicit, _ = run_cli(
            capsys, "sample", "--class", "sna", "--n", "2", "--seed", "42", "--count", "2"
        )
        assert out_env == out_explicit


class TestReproducibility:
    def test_verify_byte_identical_modulo_elapsed(self, capsys):
        args = (
            "verify", "--class", "sna", "--n", "2", "--bracket", "commutator",
            "--seed", "31", "--trials", "5",
        )
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)

        def strip_elapsed(text):
            docs = [json.loads(line) for line in text.splitlines()]
            for d in docs:
                d.pop("elapsed_ms")
            return docs

        assert strip_elapsed(out1) == strip_elapsed(out2)


class TestReplay:
    def _failing_report(self):
        def mutate(i, inputs):
            out = dict(inputs)
            out["x"] = out["x"].with_entry(0, 0, out["x"].entry(0, 0) + 1)
            return out

        spec = MatrixClassSpec(ClassKind.GNA, 2, QQ)
        return run_check("closure", spec, COMMUTATOR, seed=0, trials=5, mutate=mutate)

    def test_replay_reproduces(self, capsys, tmp_path):
        report = self._failing_report()
        path = tmp_path / "report.json"
        path.write_text(json.dumps(report.to_wire()))
        code, out, _ = run_cli(capsys, "replay", str(path))
        assert code == 0  # failure reproduced
        fresh = json.loads(out)
        assert fresh["passed"] is False
        assert fresh["check"] == "closure"

    def test_replay_inline_json(self, capsys):
        report = self._failing_report()
        code, out, _ = run_cli(capsys, "replay", json.dumps(report.to_wire()))
        assert code == 0

    def test_replay_without_counterexample(self, capsys):
        spec = MatrixClassSpec(ClassKind.GNA, 1, QQ)
        good = run_check("malcev", spec, COMMUTATOR, seed=0, trials=2)
        code, _, err = run_cli(capsys, "replay", json.dumps(good.to_wire()))
        assert code == 2

    def test_replay_exit_one_when_failure_vanishes(self, capsys):
        # undoing the perturbation makes the recorded inputs pass again,
        # so the failure does not reproduce
        report = self._failing_report()
        wire = json.loads(json.dumps(report.to_wire()))
        x = matrix_from_wire(wire["counterexample"]["inputs"]["x"])
        x = x.with_entry(0, 0, x.entry(0, 0) - 1)
        wire["counterexample"]["inputs"]["x"] = matrix_to_wire(x)
        code, out, _ = run_cli(capsys, "replay", json.dumps(wire))
        assert code == 1
        assert json.loads(out)["passed"] is True


class TestConsoleScript:
    @pytest.mark.skipif(shutil.which("affgebra") is None, reason="console script not installed")
    def test_installed_entry_point(self):
        proc = subprocess.run(
            ["affgebra", "emit-matrix", "--which", "Pinv", "--n", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        doc = json.loads(proc.stdout)
        assert doc["entries"][2] == ["1/3", "1/3", "1/3"]
