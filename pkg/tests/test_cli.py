import csv
import io
import json
import subprocess
import sys

import pytest

from genlab import __version__
from genlab.cli import main
from genlab.suites import run_suite

CHI4 = [-17, 81, -162, 177, -115, 45, -10, 1]


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_charpoly_single(capsys):
    code, out, _ = run(capsys, "charpoly", "1")
    assert code == 0 and json.loads(out) == {"coeffs": [-1, 1]}
    code, out, _ = run(capsys, "charpoly", "3", "--eval", "-1")
    assert code == 0 and out.strip() == "-56"
    code, out, _ = run(capsys, "charpoly", "3", "--eval", "0", "--json")
    assert json.loads(out)["value"] == -3


def test_charpoly_all_n4(capsys):
    code, out, _ = run(capsys, "charpoly", "4", "--method", "all")
    r = json.loads(out)
    assert code == 0 and r["agree"]
    assert r["coeffs"] == CHI4 and r["at_minus_one"] == -608 and r["at_zero"] == -17
    assert len(r["routes"]) >= 6
    assert all(all(row.values()) for row in r["agreement"].values())


def test_emit_lattice_json_lines(capsys):
    code, out, _ = run(capsys, "charpoly", "2", "--emit-lattice")
    lines = out.strip().splitlines()
    assert json.loads(lines[0]) == {"coeffs": [-1, 3, -3, 1]}
    elems = [json.loads(x) for x in lines[1:]]
    assert len(elems) == 8
    assert sum(e["mobius"] for e in elems if e["rank"] == 3) == -1


def test_count(capsys):
    assert run(capsys, "count", "dumont", "10")[1].strip() == "2073"
    assert run(capsys, "count", "dperm", "6")[1].strip() == "56"
    assert run(capsys, "count", "dcycle", "8")[1].strip() == "17"
    code, out, _ = run(capsys, "count", "dperm", "4", "--by-cycles")
    assert json.loads(out) == {"1": 1, "2": 3, "3": 3, "4": 1}


def test_tables(capsys):
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "genocchi", "--upto", "6")[1])))
    assert rows[0] == ["n", "g_n", "h_n"]
    assert [r[1] for r in rows[1:]] == ["1", "1", "3", "17", "155", "2073"]
    assert [r[2] for r in rows[1:6]] == ["2", "8", "56", "608", "9440"]
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "charpoly", "--upto", "4")[1])))
    assert [r[2:] for r in rows[1:]] == [["-2", "-1"], ["-8", "-1"], ["-56", "-3"], ["-608", "-17"]]
    rows = list(csv.reader(io.StringIO(run(capsys, "table", "sd", "--n", "2")[1])))
    assert [int(r[1]) for r in rows[1:]] == [-1, 3, -3, 1]


def test_usage_errors(capsys):
    code, out, err = run(capsys, "table", "sd")
    assert code == 2 and out == "" and "--n" in err
    assert run(capsys, "charpoly", "9", "--method", "lattice")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["charpoly", "2", "--method", "nope"])
    assert e.value.code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "2", "--json")
    r = json.loads(out)
    assert code == 0 and r["checks"]
    assert all(c["status"] != "fail" for c in r["checks"])
    assert "elapsed" not in json.dumps(r)
    code, out, _ = run(capsys, "verify", "genfun", "--order", "4")
    assert code == 0 and "FAIL" not in out


def test_report_contract():
    rep = run_suite("geometry", max_n=5)
    assert rep.ok
    for c in rep.checks:
        assert c.status in ("pass", "fail", "skipped")
        if c.status == "skipped":
            assert c.witness


def test_conjecture(capsys):
    code, out, _ = run(capsys, "conjecture", "--max-n", "3", "--cycles")
    r = json.loads(out)
    assert code == 0 and r["falsified"] is False
    assert [c["lhs"] for c in r["cycles"]] == [1, 1, 3]


def _sub(*argv, env=None):
    return subprocess.run([sys.executable, "-m", "genlab", *argv], capture_output=True, text=True, env=env)


def test_byte_stable_across_processes():
    for argv in (["charpoly", "3", "--method", "all"], ["verify", "bijections", "--max-n", "2", "--json"],
                 ["table", "decomp", "--n", "4"]):
        a, b = _sub(*argv), _sub(*argv)
        assert a.returncode == 0 and a.stdout == b.stdout


def test_cache_round_trip_and_tamper(tmp_path, capsys):
    assert run(capsys, "--cache", str(tmp_path), "charpoly", "3", "--method", "dperm")[0] == 0
    path = tmp_path / f"charpoly-n3-dperm-v{__version__}.json"
    obj = json.loads(path.read_text())
    assert obj["schema_version"] == 1 and obj["family"] == "charpoly" and obj["version"] == __version__
    code, out, err = run(capsys, "--cache", str(tmp_path), "charpoly", "3", "--method", "dperm")
    assert code == 0 and err == ""
    obj["poly"]["coeffs"][0] = 99
    path.write_text(json.dumps(obj))
    code, out, err = run(capsys, "--cache", str(tmp_path), "charpoly", "3", "--method", "dperm")
    assert code == 0 and "re-verification" in err
    assert json.loads(out)["coeffs"][0] == -3
    assert json.loads(path.read_text())["poly"]["coeffs"][0] == -3
    path.write_text("{not json")
    code, out, err = run(capsys, "--cache", str(tmp_path), "charpoly", "3", "--method", "dperm")
    assert code == 0 and "unreadable" in err


def test_cache_env_var(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("GENLAB_CACHE", str(tmp_path))
    assert run(capsys, "charpoly", "2")[0] == 0
    assert list(tmp_path.iterdir())
