import json
import subprocess
import sys

import pytest

from gl3slopes import cli, hecke
from gl3slopes import representation as rep
from gl3slopes.slopes import parse_cell

from golden import TABLE_1


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gamma0_rows(capsys):
    code, out, _ = run(capsys, "--q", "2", "--k", "0..4", "--op", "u1", "--level", "gamma0")
    assert code == 0
    rows = [line.split("|")[1:-1] for line in out.splitlines()[2:]]
    assert [int(r[1]) for r in rows] == [0, 1, 2, 3, 4]
    for r, want in zip(rows, TABLE_1[(1, "gamma0")]):
        assert parse_cell(r[5].strip()) == parse_cell(want)


def test_empty_t1_cell_json(capsys):
    code, out, _ = run(capsys, "--q", "2", "--k", "3", "--op", "t1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data) == 1
    assert data[0]["dim"] == 0 and data[0]["slopes"] == [] and data[0]["level"] == "gl3"


def test_gamma0_empty_when_q_minus_1_does_not_divide(capsys):
    code, out, _ = run(capsys, "--q", "3", "--k", "2", "--op", "u1", "--level", "gamma0")
    assert code == 0
    assert out.splitlines()[2] == "| 3 | 2 | 1 | Γ0(t) | 0 |  |"


@pytest.mark.parametrize("argv", [
    ["--q", "6", "--k", "1"],
    ["--q", "11", "--k", "1"],
    ["--q", "2", "--k", "3..1"],
    ["--q", "2", "--k", "x"],
    ["--q", "2", "--k", "1", "--op", "u3"],
    ["--q", "2", "--k", "1", "--level", "gamma7"],
    ["--q", "2", "--k", "1", "--op", "t1", "--level", "p0"],
    ["--q", "2", "--k", "1", "--op", "u1", "--level", "gl3"],
    ["--q", "2", "--k", "1", "--jobs", "0"],
    ["--k", "1"],
])
def test_invalid_config_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_verify_passes(capsys):
    code, _, err = run(capsys, "--q", "2", "--k", "2", "--op", "u2", "--level", "p2", "--verify")
    assert code == 0, err


def test_verify_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(hecke, "check_transcription", lambda q: False)
    code, _, err = run(capsys, "--q", "2", "--k", "1", "--op", "u1", "--level", "p0", "--verify")
    assert code == 1 and "transcription" in err


def test_deterministic_across_jobs(capsys):
    args = ["--q", "2", "--k", "2..5", "--format", "csv"]
    _, one, _ = run(capsys, *args, "--jobs", "1")
    _, many, _ = run(capsys, *args, "--jobs", "3")
    assert one == many
    lines = one.splitlines()
    assert lines[0] == "q,k,i,level,slope,mult"


def test_output_order(capsys):
    _, out, _ = run(capsys, "--q", "2", "--k", "4", "--format", "json")
    keys = [(d["k"], d["i"], d["level"]) for d in json.loads(out)]
    assert keys == [(4, 1, "gamma1"), (4, 1, "gamma0"), (4, 1, "p0"), (4, 1, "p2"), (4, 1, "gl3"),
                    (4, 2, "gamma1"), (4, 2, "gamma0"), (4, 2, "p0"), (4, 2, "p2"), (4, 2, "gl3")]


def test_config_file_and_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# sample\nq = 2\nk = 4\nop = t2\nformat = json\n")
    code, out, _ = run(capsys, "--config", str(cfg))
    assert code == 0
    assert [(d["k"], d["i"]) for d in json.loads(out)] == [(4, 2)]
    code, out, _ = run(capsys, "--config", str(cfg), "--k", "5", "--format", "csv")
    assert code == 0 and out.splitlines()[1].startswith("2,5,2,gl3,")


def test_bad_config_file(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("q = 2\ncolour = blue\n")
    assert run(capsys, "--config", str(cfg), "--k", "1")[0] == 2
    assert run(capsys, "--config", str(tmp_path / "missing.cfg"))[0] == 2


def test_out_and_emit_charpoly(tmp_path, capsys):
    out = tmp_path / "t.md"
    cp = tmp_path / "cp.json"
    code, stdout, _ = run(capsys, "--q", "2", "--k", "4", "--op", "t1", "--out", str(out),
                          "--emit-charpoly", str(cp))
    assert code == 0 and stdout == ""
    assert "| 2 | 4 | 1 | GL3(A) | 1 | 1^1 |" in out.read_text()
    data = json.loads(cp.read_text())
    assert data[0]["coefficients"][-1] == [1] and len(data[0]["coefficients"]) == 2


def _clear_memos():
    hecke._operator.cache_clear()
    rep.level_subspace.cache_clear()


def test_cache_dir_resumes(tmp_path, capsys, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setattr(rep, "_default_cache", rep.ActionCache())
    _clear_memos()
    run(capsys, "--q", "3", "--k", "2", "--op", "u1", "--level", "p0", "--cache-dir", str(d))
    assert rep.get_cache().misses > 0 and any(d.iterdir())
    _clear_memos()
    rep.set_cache(rep.ActionCache())
    run(capsys, "--q", "3", "--k", "2", "--op", "u1", "--level", "p0", "--cache-dir", str(d))
    c = rep.get_cache()
    assert c.misses == 0 and c.disk_hits > 0
    _clear_memos()


def test_env_var_overrides_cache_dir(tmp_path, capsys, monkeypatch):
    env_dir, flag_dir = tmp_path / "env", tmp_path / "flag"
    monkeypatch.setenv("COCYCLE_CACHE_DIR", str(env_dir))
    monkeypatch.setattr(rep, "_default_cache", rep.ActionCache())
    _clear_memos()
    run(capsys, "--q", "2", "--k", "2", "--op", "u1", "--level", "p0", "--cache-dir", str(flag_dir))
    assert env_dir.is_dir() and any(env_dir.iterdir())
    assert not flag_dir.exists()
    _clear_memos()


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "gl3slopes", "--q", "4", "--k", "0", "--op", "t2"],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert "| 4 | 0 | 2 | GL3(A) | 0 |  |" in res.stdout
