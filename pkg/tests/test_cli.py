import json
import subprocess
import sys

import pytest

from sntlogic.cli import RunConfig, UsageError, cmd_check, cmd_eval, cmd_table, load_config, main, _parser


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval(capsys):
    assert run(capsys, "eval", "snt(max,std,min)", "0.3", "0.8") == (0, "0.8\n", "")
    assert run(capsys, "eval", "crisplow:0.3", "0.9", "0.1")[1] == "0\n"
    assert run(capsys, "eval", "std", "0.25")[1] == "0.75\n"
    assert run(capsys, "eval", "luk", "0.7", "0.5", "--kind", "tconorm")[1] == "1\n"


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "snt(max,std,min)", "1.3", "0.8"),
        ("eval", "snt(max,std,min)", "0.3", "-0.1"),
        ("eval", "snt(max,std,min)", "0.3", "abc"),
        ("eval", "snt(max,std,min)", "0.3"),
        ("eval", "std", "0.3", "0.4"),
        ("eval", "snt(min,std,max)", "0.3", "0.8"),
        ("check", "snt(max,std", "--props", "EP"),
        ("check", "snt(max,std,min)", "--props", "NOPE"),
        ("check", "min", "--props", "I1"),
        ("check", "snt(max,std,min)", "--grid-step", "0.7"),
        ("check", "snt(max,std,min)", "--tolerance", "0"),
        ("table", "std"),
        ("suite", "Thm9.9", "--inputs", "std"),
        ("suite", "Thm3.1", "--inputs", "luk", "probsum", "std"),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 2


def test_check_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "snt(probsum,nalpha:0.3,prod)", "--props", "EP")
    assert code == 0 and "no_counterexample" in out
    code, out, _ = run(capsys, "check", "snt(probsum,nalpha:0.3,prod)", "--props", "NP,ROP", "--json")
    assert code == 1
    data = json.loads(out)
    assert [d["verdict"] for d in data] == ["falsified", "falsified"]
    code, _, _ = run(capsys, "check", "min", "--kind", "tnorm")
    assert code == 0
    code, _, _ = run(capsys, "check", "snt(max,std,min)", "--props", "CP,LCP,NATNEG")
    assert code == 0


def test_check_default_props_cover_everything(capsys):
    _, out, _ = run(capsys, "check", "snt(max,std,min)", "--format", "json")
    ids = [d["property_id"] for d in json.loads(out)]
    assert ids[:9] == [f"I{i}" for i in range(1, 10)]
    assert {"NP", "EP", "IP", "LOP", "ROP", "OP", "CB", "SIB", "IB", "CP", "LCP", "RCP", "NATNEG"} <= set(ids)


def test_check_csv(capsys):
    code, out, _ = run(capsys, "check", "snt(max,nalpha:0.3,min)", "--props", "ROP", "--format", "csv")
    assert code == 1
    header, row = out.strip().split("\n")
    assert header.startswith("property_id,verdict,witness")
    assert row.startswith("ROP,falsified,")


def test_suite(capsys):
    code, out, _ = run(capsys, "suite", "Thm3.1", "--inputs", "T=min,S=probsum,N=std", "--json")
    assert code == 0
    data = {d["property_id"]: d for d in json.loads(out)}
    assert data["LC"]["witness"] == [0.5] and data["IP"]["expected"] == "falsified"
    code, _, _ = run(capsys, "suite", "Prop3.5", "--inputs", "snt(max,std,min)")
    assert code == 0


def test_table_shape_and_stability(tmp_path, capsys):
    text = cmd_table("snt(max,std,min)", 0.01)
    rows = text.splitlines()
    assert len(rows) == 102 and all(len(r.split(",")) == 102 for r in rows)
    assert rows[0].split(",")[:3] == ["x\\y", "0", "0.01"]
    assert cmd_table("snt(max,std,min)", 0.01) == text
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "table", "snt(probsum,std,prod)", "--out", str(a))[0] == 0
    assert run(capsys, "table", "snt(probsum,std,prod)", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_table_cell_meaning():
    rows = [r.split(",") for r in cmd_table("crisplow:0.5", 0.25).splitlines()]
    ys = rows[0][1:]
    for row in rows[1:]:
        x = float(row[0])
        for y, cell in zip(ys, row[1:]):
            assert float(cell) == (1.0 if x <= 0.5 or float(y) > 0.5 else 0.0)


def test_table_step_from_global_option(capsys):
    code, out, _ = run(capsys, "table", "snt(max,std,min)", "--grid-step", "0.5")
    assert code == 0 and len(out.splitlines()) == 4


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "sugeno" in out and "Thm3.1" in out


def test_config_precedence(tmp_path, monkeypatch):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"seed": 7, "grid_step": 0.05}))
    monkeypatch.setenv("SNTLOGIC_SEED", "99")
    p = _parser()
    assert load_config(p.parse_args(["check", "std"])).seed == 99
    loaded = load_config(p.parse_args(["check", "std", "--config", str(cfg)]))
    assert (loaded.seed, loaded.grid_step) == (7, 0.05)
    loaded = load_config(p.parse_args(["check", "std", "--config", str(cfg), "--seed", "3"]))
    assert loaded.seed == 3
    cfg.write_text(json.dumps({"colour": "red"}))
    with pytest.raises(UsageError):
        load_config(p.parse_args(["check", "std", "--config", str(cfg)]))


def test_run_config_validation():
    RunConfig(grid_step=0.5)
    for bad in ({"grid_step": 0.6}, {"triple_grid_step": 0}, {"tolerance": -1}, {"format": "xml"}):
        with pytest.raises(UsageError):
            RunConfig(**bad)


def test_functions_directly():
    assert cmd_eval("snt(max,std,min)", "0.3", "0.8") == 0.8
    reports = cmd_check("snt(probsum,nalpha:0.3,prod)", "EP", RunConfig())
    assert [r.verdict for r in reports] == ["no_counterexample"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sntlogic", "eval", "snt(max,std,min)", "0.3", "0.8"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "0.8\n"
