import json
import subprocess
import sys
from pathlib import Path

import pytest

from lescop import checks, cli
from lescop.cli import EXIT_DATA, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, main

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, obj, name="p.json"):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return path


# --------------------------------------------------------------------- lambda


@pytest.mark.parametrize("name, value", [("unknot_0", "-1/12"), ("unknot_1", "0"), ("whitehead", "-9/4"), ("borromean", "1")])
def test_lambda_demo_files(capsys, name, value):
    code, out, _ = run(capsys, "lambda", DATA / f"{name}.json", "--json")
    assert code == EXIT_OK
    assert json.loads(out)["lambda"] == value


def test_lambda_text_and_walker(capsys, tmp_path):
    path = write(tmp_path, {"components": 1, "slopes": [{"p": 5, "q": 2}], "a1hat": {"0": 1}})
    code, out, _ = run(capsys, "lambda", path, "--walker")
    assert code == EXIT_OK
    assert "lambda = 2" in out and "lambda_w = 4/5" in out and "boyer-lines" in out
    code, out, _ = run(capsys, "lambda", DATA / "unknot_0.json", "--walker", "--json")
    assert json.loads(out)["lambda_w"] is None


def test_lambda_named_formula(capsys):
    code, out, _ = run(capsys, "lambda", DATA / "borromean.json", "--formula", "three-split", "--json")
    assert code == EXIT_OK and json.loads(out)["lambda"] == "1"
    code, _, err = run(capsys, "lambda", DATA / "unknot_0.json", "--formula", "m00")
    assert code == EXIT_INVALID and "does not apply" in err


def test_lambda_from_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps({"components": 1, "slopes": [{"p": 0, "q": 1}], "a1hat": {"0": 2}})))
    code, out, _ = run(capsys, "lambda", "-", "--json")
    assert json.loads(out)["lambda"] == "23/12"


def test_theta_override_from_file(capsys, tmp_path):
    obj = {
        "components": 3,
        "linking": [[0, 1, 0], [1, 0, 1], [0, 1, 0]],
        "slopes": [{"p": 1, "q": 1}] * 3,
        "a1hat": {k: 0 for k in ["0", "1", "2", "0,1", "0,2", "1,2", "0,1,2"]},
    }
    code, _, err = run(capsys, "lambda", write(tmp_path, obj))
    assert code == EXIT_DATA and "0,1,2" in err
    obj["theta"] = {"0,1,2": "1/2"}
    code, out, _ = run(capsys, "lambda", write(tmp_path, obj), "--json")
    assert code == EXIT_OK


def test_missing_data_names_subset(capsys, tmp_path):
    obj = {"components": 2, "linking": [[0, 1], [1, 0]], "slopes": [{"p": 1, "q": 1}, {"p": 2, "q": 1}],
           "a1hat": {"0": 0, "1": 0}}
    code, _, err = run(capsys, "lambda", write(tmp_path, obj))
    assert code == EXIT_DATA and "0,1" in err


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({"components": 1}, "slopes"),
        ({"components": 1, "slopes": [{"p": 1, "q": 0}]}, "slope 0"),
        ({"components": 1, "slopes": [{"p": 1.5, "q": 1}]}, "integer"),
        ({"components": 2, "linking": [[0, 1], [2, 0]], "slopes": [{"p": 1}, {"p": 1}]}, "symmetric"),
        ({"components": 1, "slopes": [{"p": 1}], "a1hat": {"3": 0}}, "beyond"),
        ({"components": 1, "slopes": [{"p": 1}], "pd": {"0": "X[1,2,3"}}, "pd"),
        ({"components": 2, "linking": [[0, 0], [0, 0]], "slopes": [{"p": 1}, {"p": 1}],
          "pd": {"0,1": "X[1,3,2,4], X[3,1,4,2]"}}, "linking number"),
    ],
)
def test_invalid_files(capsys, tmp_path, obj, fragment):
    code, _, err = run(capsys, "lambda", write(tmp_path, obj))
    assert code == EXIT_INVALID
    assert fragment in err


def test_unreadable_and_malformed(capsys, tmp_path):
    code, _, err = run(capsys, "lambda", tmp_path / "nope.json")
    assert code == EXIT_INVALID
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    code, _, err = run(capsys, "lambda", bad)
    assert code == EXIT_INVALID and "invalid JSON" in err


def test_pd_derived_data_must_agree(capsys, tmp_path):
    obj = json.loads((DATA / "whitehead.json").read_text())
    obj["a1hat"] = {"0,1": 1}
    code, _, err = run(capsys, "lambda", write(tmp_path, obj))
    assert code == EXIT_INVALID and "PD diagram gives -1" in err
    obj["a1hat"] = {"0,1": -1, "0": 0}
    assert run(capsys, "lambda", write(tmp_path, obj))[0] == EXIT_OK


def test_specialization_mismatch_exits_4(capsys, monkeypatch):
    real = cli._specializations

    def broken(pres, cd, th):
        out = real(pres, cd, th)
        out["three-split"] = lambda: 42
        return out

    monkeypatch.setattr(cli, "_specializations", broken)
    code, _, err = run(capsys, "lambda", DATA / "borromean.json")
    assert code == EXIT_MISMATCH and "three-split=42" in err


# --------------------------------------------------------------------- conway


def test_conway_builtins(capsys):
    code, out, _ = run(capsys, "conway", "--name", "whitehead", "--json")
    rec = json.loads(out)
    assert code == EXIT_OK and rec["conway_coefficients"] == [0, 0, 0, 1] and rec["a1hat"] == -1
    code, out, _ = run(capsys, "conway", "--name", "L_m", "--param", "-2")
    assert code == EXIT_OK and "-2z^3" in out and "a1hat        2" in out
    code, out, _ = run(capsys, "conway", "--name", "borromean")
    assert "z^4" in out


def test_conway_pd_inputs(capsys, tmp_path):
    code, out, _ = run(capsys, "conway", "--pd", "X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]", "--json")
    assert json.loads(out)["conway_coefficients"] == [1, 0, 1]
    f = tmp_path / "k.pd"
    f.write_text("PD[X[1,2,2,1]]\n")
    code, out, _ = run(capsys, "conway", "--pd-file", f, "--json")
    assert json.loads(out)["conway_coefficients"] == [1]


def test_conway_errors(capsys):
    code, _, err = run(capsys, "conway", "--pd", "X[1,2,2,3]")
    assert code == EXIT_INVALID and "crossing 0" in err
    code, _, err = run(capsys, "conway", "--name", "nosuchknot")
    assert code == EXIT_INVALID
    code, _, err = run(capsys, "conway", "--name", "borromean", "--max-crossings", "3")
    assert code == EXIT_INVALID and "max_crossings" in err


# ------------------------------------------------------------------- cosmetic


def test_cosmetic_examples(capsys):
    code, out, _ = run(capsys, "cosmetic", DATA / "whitehead.json", "--mode", "thm3")
    assert code == EXIT_OK and "verdict: no purely cosmetic surgeries" in out
    code, out, _ = run(capsys, "cosmetic", DATA / "borromean.json", "--mode", "thm5", "--json")
    rec = json.loads(out)
    assert rec["statement"] == "no purely cosmetic surgeries"
    assert rec["witness"] == {"form": "1", "vs_base": "1"}


def test_cosmetic_thm21_thm22(capsys, tmp_path):
    obj = {"components": 2, "slopes": [{"p": 1}, {"p": 3, "q": 2}], "a1hat": {"0": 0, "1": 0, "0,1": 1}}
    path = write(tmp_path, obj)
    code, out, _ = run(capsys, "cosmetic", path, "--mode", "thm21", "--json")
    rec = json.loads(out)
    assert code == EXIT_OK and set(rec["poly"]) == {"c2", "c1", "c0"}
    code, out, _ = run(capsys, "cosmetic", path, "--mode", "thm22", "--json")
    rec = json.loads(out)
    assert rec["difference_quadratics"]["plus"]["c1"] == "0"
    assert rec["statement"] == "no purely cosmetic surgeries"


def test_cosmetic_wrong_shape(capsys):
    code, _, err = run(capsys, "cosmetic", DATA / "borromean.json", "--mode", "thm3")
    assert code == EXIT_INVALID and "two-component" in err


def test_cosmetic_scan_is_sorted_and_worker_independent(capsys):
    args = ["cosmetic-scan", DATA / "whitehead.json", "--mode", "thm3", "--grid", "q0=1:3,q0p=1:3", "--json"]
    code, out1, _ = run(capsys, *args)
    rows = [json.loads(line) for line in out1.splitlines()]
    assert code == EXIT_OK and len(rows) == 9
    assert [(r["params"]["q0"], r["params"]["q0p"]) for r in rows] == sorted((a, b) for a in (1, 2, 3) for b in (1, 2, 3))
    for r in rows:
        assert r["witness"]["pair"] == str(-(r["params"]["q0"] - r["params"]["q0p"]))
    code, out2, _ = run(capsys, *args, "--workers", "3")
    assert out1 == out2


def test_cosmetic_scan_requires_grid(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cosmetic-scan", str(DATA / "whitehead.json"), "--mode", "thm3"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "cosmetic", DATA / "whitehead.json", "--mode", "thm3", "--grid", "q0=1")
    assert code == EXIT_INVALID and "bad grid" in err


# --------------------------------------------------------------------- verify


def test_verify_passes_and_is_deterministic(capsys):
    code, out1, _ = run(capsys, "verify", "--seed", "3", "--cases", "20")
    assert code == EXIT_OK and "all checks passed" in out1
    _, out2, _ = run(capsys, "verify", "--seed", "3", "--cases", "20", "--workers", "2")
    assert out1 == out2
    _, out3, _ = run(capsys, "verify", "--seed", "4", "--cases", "20")
    assert out3 != out1


def test_verify_reports_injected_fault(capsys, monkeypatch):
    def faulty(rng, cases):
        return 1, ["deliberately wrong"]

    monkeypatch.setattr(checks, "CHECKS", checks.CHECKS[:1] + [checks.Check("faulty", faulty, fixed=True)])
    code, out, _ = run(capsys, "verify", "--cases", "10")
    assert code == EXIT_MISMATCH
    assert "faulty" in out and "FAIL" in out and "deliberately wrong" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "lescop", "conway", "--name", "trefoil"], capture_output=True, text=True)
    assert res.returncode == 0 and "1 + z^2" in res.stdout
