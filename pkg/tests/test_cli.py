import json

import pytest

from preprank import __version__
from preprank.cli import main
from preprank.fixtures import fixture_text


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_dims_tsv(capsys):
    code, out = run(capsys, "dims", "--quiver", "a2", "--max-degree", "3", "--format", "tsv")
    assert code == 0
    assert out.out.splitlines() == ["t\td=0\td=1\td=2\td=3", "1\t2\t0\t0\t0", "2\t1\t1\t0\t0"]


def test_dims_json_and_file_path(capsys, tmp_path):
    path = tmp_path / "k.quiver"
    path.write_text(fixture_text("kronecker"))
    code, out = run(capsys, "dims", "--quiver", str(path), "--max-degree", "4")
    report = json.loads(out.out)
    assert code == 0
    assert report["dims"] == {"1": [3, 7, 11, 15, 19], "2": [1, 5, 9, 13, 17]}
    for key in ("quiver_hash", "field", "seed", "trials", "tool_version", "schema_version"):
        assert key in report
    assert report["tool_version"] == __version__


def test_single_vertex(capsys):
    code, out = run(capsys, "dims", "--quiver", "point", "--max-degree", "2", "--format", "tsv")
    assert out.out.splitlines()[1] == "1\t1\t0\t0"


def test_check_ar(capsys):
    code, out = run(capsys, "check", "ar", "--quiver", "a2")
    report = json.loads(out.out)
    assert code == 0 and report["result"] == "PASS"
    assert [(i["t"], i["d"]) for i in report["items"]] == [(2, 0)]


def test_check_maxrank_exhaustive(capsys):
    code, out = run(capsys, "check", "maxrank", "--quiver", "a2", "--mode", "exhaustive", "--p", "2")
    report = json.loads(out.out)
    assert code == 0
    item = report["items"][0]
    assert item["right_omnipresent"]["result"] == "PASS"
    lo = item["left_omnipresent_info"]
    assert lo["result"] == "FAIL" and lo["witness"]["subspaces"][0]["basis"] == [["0", "1"]]


def test_check_hl_poly(capsys):
    code, out = run(capsys, "check", "hl-poly", "--r", "2", "--d", "2", "--trials", "100", "--seed", "7")
    report = json.loads(out.out)
    assert code == 0 and report["items"][0]["certificate"]["failure_fraction"] == 0.0
    assert report["seed"] == 7 and report["quiver_hash"] is None


@pytest.mark.parametrize("suite", ["bounds", "hl-analog", "maxrank"])
def test_other_suites_pass(capsys, suite):
    code, out = run(capsys, "check", suite, "--quiver", "d4_oio", "--max-degree", "3")
    assert code == 0 and json.loads(out.out)["result"] == "PASS"


def test_examples_suite(capsys):
    code, out = run(capsys, "check", "examples", "--format", "tsv")
    assert code == 0 and out.out.count("PASS") == 2


def test_failing_suite_exits_one(capsys):
    # sampled over F_2, random choices are far from generic and the hl-analog checks fail
    code, out = run(capsys, "check", "hl-analog", "--quiver", "a2", "--p", "2", "--trials", "50")
    assert code == 1 and json.loads(out.out)["result"] == "FAIL"


def test_byte_identical_reports(capsys):
    args = ("check", "maxrank", "--quiver", "kronecker", "--max-degree", "2", "--seed", "3")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first.out == second.out


@pytest.mark.parametrize("argv", [
    ["dims"],
    ["dims", "--quiver", "no_such_fixture"],
    ["dims", "--quiver", "a2", "--field", "4"],
    ["dims", "--quiver", "a2", "--trials", "0"],
    ["check", "hl-poly", "--r", "2"],
    ["check", "maxrank", "--quiver", "a2", "--mode", "exhaustive", "--field", "rational"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 2 and "error" in out.err


def test_parse_error_exit_two(capsys, tmp_path):
    path = tmp_path / "bad.quiver"
    path.write_text("vertices 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n")
    code, out = run(capsys, "dims", "--quiver", str(path))
    assert code == 2 and "cycle" in out.err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["check", "nonsense"])
    assert exc.value.code == 2
