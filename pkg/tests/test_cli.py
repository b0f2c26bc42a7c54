import json
import subprocess
import sys

import pytest

from finsemiring import dump_algebra, parse_algebra, two_element, verify_semiring
from finsemiring.cli import Report, main, run
from finsemiring.constructions import chain, cyclic_group, diamond, left_zero_semigroup


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, obj in {
        "t2": two_element(2),
        "t4": two_element(4),
        "t6": two_element(6),
        "t7": two_element(7),
        "z2": cyclic_group(2),
        "lz": left_zero_semigroup(2),
        "c3": chain(3),
        "dia": diamond(),
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(dump_algebra(obj))
        out[name] = str(p)
    bad = tmp_path / "bad.txt"
    bad.write_text("semiring\norder 2\nadd\n0 1 1\n")
    out["bad"] = str(bad)
    notsr = tmp_path / "notsr.txt"
    notsr.write_text("semiring\norder 2\nadd\n0 1\n0 1\nmul\n0 0\n0 1\n")
    out["notsr"] = str(notsr)
    return out


def test_enumerate_order2_count():
    status, rep = run(["enumerate", "--order", "2", "--absorbing", "--count-only"])
    assert status == 0 and rep.verdicts["count"] == 8
    assert "semirings" not in rep.payload


def test_enumerate_lists_semirings():
    status, rep = run(["enumerate", "--order", "2", "--absorbing", "--no-nilpotents", "--congruence-simple"])
    assert status == 0 and len(rep.payload["semirings"]) == 4


def test_classify_f2(files):
    status, rep = run(["classify", files["t2"]])
    assert status == 0
    assert rep.verdicts["case_labels"] == ["FiniteField(2)"]


def test_classify_precondition_failure(files):
    status, rep = run(["classify", files["t7"]])
    assert status == 1 and "nilpotent" in rep.verdicts["error"]


def test_check(files):
    status, rep = run(["check", files["t4"]])
    assert status == 0 and rep.verdicts["zero"] == 0 and rep.verdicts["semiring"]
    status, rep = run(["check", files["notsr"]])
    assert status == 0 and not rep.verdicts["semiring"]
    assert rep.payload["violations"][0][0] == "add-commutativity"
    status, rep = run(["check", files["z2"]])
    assert rep.verdicts == {"cancellative": True, "simple": True, "group": True, "exit_status": 0}


def test_congruences_and_simple(files):
    status, rep = run(["congruences", files["t6"]])
    assert status == 0 and rep.verdicts["count"] == 2
    status, rep = run(["simple", files["t6"]])
    assert rep.verdicts["congruence_simple"] and rep.verdicts["ideal_simple"]


def test_parse_error_exit(files):
    status, rep = run(["check", files["bad"]])
    assert status == 1 and "line 4" in rep.verdicts["error"]
    status, rep = run(["simple", files["notsr"]])
    assert status == 1


def test_usage_error():
    assert run(["enumerate"])[0] == 1
    assert run(["frobnicate"])[0] == 1


def test_capability_exit():
    status, rep = run(["enumerate", "--order", "5", "--count-only"])
    assert status == 2 and "bound 4" in rep.verdicts["error"]


@pytest.mark.parametrize(
    "args",
    [["t4"], ["v", "@z2"], ["box", "@t6", "@t6"], ["end1", "@c3"], ["end1", "@dia", "--sub=g"], ["end1", "@c3", "--sub=y"]],
)
def test_construct_round_trip(files, tmp_path, args):
    out = tmp_path / "out.txt"
    argv = ["construct"] + [files[a[1:]] if a[0] == "@" else a for a in args] + ["-o", str(out)]
    status, rep = run(argv)
    assert status == 0
    S = parse_algebra(out.read_text()).build()
    assert verify_semiring(S.add, S.mul).ok
    assert rep.payload["semiring"]["add"] == [list(r) for r in S.add]


def test_construct_rejects(files):
    assert run(["construct", "v", files["lz"]])[0] == 1
    assert run(["construct", "t9"])[0] == 1
    assert run(["construct", "box", files["t4"], files["t6"]])[0] == 1


def test_scan_exit_and_report():
    status, rep = run(["scan-conjecture", "--max-order", "3"])
    assert status == 0
    assert rep.verdicts["counterexamples"] == 0
    assert rep.verdicts["counts"] == {"2": 4, "3": 2}


def test_json_round_trip(capsys):
    assert main(["scan-conjecture", "--max-order", "3", "--json"]) == 0
    text = capsys.readouterr().out
    rep = Report.from_json(text)
    assert rep.to_json() == text.strip()
    assert "timings" not in json.loads(text)


def test_jobs_do_not_change_reports(capsys):
    outs = []
    for jobs in ("1", "2", "3"):
        main(["enumerate", "--order", "3", "--absorbing", "--jobs", jobs, "--json"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1] == outs[2]


def test_timings_opt_in(capsys):
    main(["enumerate", "--order", "2", "--json", "--timings"])
    assert "enumerate" in json.loads(capsys.readouterr().out)["timings"]


def test_human_output(capsys, files):
    assert main(["construct", "t2"]) == 0
    out = capsys.readouterr().out
    assert "semiring\norder 2\nadd\n0 1\n1 0\n" in out


def test_module_entry_point():
    p = subprocess.run(
        [sys.executable, "-m", "finsemiring", "enumerate", "--order", "2", "--absorbing", "--count-only", "--json"],
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0 and json.loads(p.stdout)["verdicts"]["count"] == 8
