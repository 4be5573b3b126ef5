import io
import json
import subprocess
import sys

import pytest

from golden_cases import CASES, REPORTS, doc_path, resolve
from homlie.cli import COMMANDS, run
from homlie.documents import load


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_every_subcommand_has_a_golden_report():
    covered = {argv[0] for _, argv, _ in CASES}
    assert covered == set(COMMANDS)
    assert len(COMMANDS) == 21


@pytest.mark.parametrize("case,argv,expected", CASES, ids=[c[0] for c in CASES])
def test_golden_report(case, argv, expected):
    code, out, _ = invoke(resolve(argv) + ["--json"])
    assert code == expected
    assert out == (REPORTS / f"{case}.json").read_text(encoding="utf-8")


@pytest.mark.parametrize("case,argv,expected", CASES[:6], ids=[c[0] for c in CASES[:6]])
def test_reports_are_deterministic(case, argv, expected):
    first = invoke(resolve(argv) + ["--json"])
    assert invoke(resolve(argv) + ["--json"]) == first


def test_text_mode():
    code, out, _ = invoke(resolve(["validate", "@hom_lie_algebra/aff1"]))
    assert code == 0
    assert out.startswith("homlie validate: PASS\n")
    assert out.splitlines()[-1].startswith("generated ")


def test_o_check_identity_witness():
    code, out, _ = invoke(resolve(["o-check", "@representation/aff1_adjoint", "--t", "@linear_map/identity2", "--json"]))
    assert code == 1
    w = json.loads(out)["checks"][0]["witnesses"][0]
    assert (w["axiom"], w["at"], w["lhs"], w["rhs"]) == ("o-bracket", [1, 2], ["0", "1"], ["0", "2"])


def test_r_check_aff1_values():
    _, out, _ = invoke(resolve(["r-check", "@hom_lie_algebra/aff1", "--r", "@bivector/r12_dim2", "--json"]))
    report = json.loads(out)
    assert report["passed"]
    assert {c["name"] for c in report["checks"]} >= {"zero-cochain", "chybe"}


def test_output_file(tmp_path):
    target = tmp_path / "double.json"
    code, out, _ = invoke(resolve(["double", "@bialgebra/aff1_coboundary"]) + ["-o", str(target)])
    assert code == 0 and "wrote" in out
    assert load(target).kind == "manin_triple"


def test_multiple_outputs(tmp_path):
    target = tmp_path / "m.json"
    code, _, _ = invoke(resolve(["hlsa-commutator", "@hlsa/e11"]) + ["-o", str(target)])
    assert code == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == sorted(f"m.{n}.json" for n in ("algebra", "representation"))


def test_usage_errors():
    assert invoke(["no-such-command"])[0] == 2
    assert invoke(["validate"])[0] == 2
    assert invoke(["o-check", str(doc_path("representation/aff1_adjoint"))])[0] == 2


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "hom_lie_algebra", "dim": 1}', encoding="utf-8")
    code, out, err = invoke(["validate", str(bad)])
    assert code == 2 and out == ""
    assert "input error" in err and "bad.json" in err
    code, _, err = invoke(["validate", str(doc_path("linear_map/identity2"))])
    assert code == 2 and "expected a hom_lie_algebra" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "homlie", "validate", str(doc_path("hom_lie_algebra/aff1")), "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (REPORTS / "validate-aff1.json").read_text(encoding="utf-8")
