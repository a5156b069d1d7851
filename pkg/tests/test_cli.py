import json

import pytest

from polylab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def seeded(monkeypatch):
    monkeypatch.setenv("POLYLAB_SEED", "11")


def test_gen_then_verify_nodal(tmp_path, capsys, seeded):
    out = tmp_path / "nodal.json"
    assert run(capsys, "gen", "--n", "7", "--source", "nodal", "--p", "29", "--out", str(out))[0] == 0
    code, text, _ = run(capsys, "verify", "--in", str(out))
    assert code == 0 and json.loads(text)["ok"]


@pytest.mark.parametrize("source,extra", [("fp-curve", ["--p", "211"]), ("tate", []), ("cuspidal", []),
                                          ("nodal", [])])
def test_gen_sources(tmp_path, capsys, seeded, source, extra):
    n = "7" if source == "cuspidal" else "6" if source == "tate" else "8"
    out = tmp_path / "g.json"
    code, _, err = run(capsys, "gen", "--n", n, "--source", source, *extra, "--out", str(out))
    assert code == 0, err
    data = json.loads(out.read_text())
    assert data["report"]["ok"]


def test_determinism(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("POLYLAB_SEED", "5")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        run(capsys, "gen", "--n", "9", "--source", "fp-curve", "--p", "307", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()
    monkeypatch.setenv("POLYLAB_SEED", "6")
    run(capsys, "gen", "--n", "9", "--source", "fp-curve", "--p", "307", "--out", str(b))
    assert a.read_bytes() != b.read_bytes()


def test_seed_flag_used_without_env(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("POLYLAB_SEED", raising=False)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "--seed", "1", "gen", "--n", "7", "--source", "nodal", "--out", str(a))
    run(capsys, "--seed", "2", "gen", "--n", "7", "--source", "nodal", "--out", str(b))
    assert json.loads(a.read_text())["param"] != json.loads(b.read_text())["param"]


def test_mulneg2_crosscheck(tmp_path, capsys, seeded):
    g = tmp_path / "g.json"
    run(capsys, "gen", "--n", "10", "--source", "fp-curve", "--p", "401", "--out", str(g))
    code, text, _ = run(capsys, "mulneg2", "--in", str(g))
    assert code == 0 and json.loads(text)["crosscheck"] is True


def test_fitcubic(tmp_path, capsys, seeded):
    g = tmp_path / "g.json"
    run(capsys, "gen", "--n", "7", "--source", "fp-curve", "--p", "101", "--out", str(g))
    code, text, _ = run(capsys, "fitcubic", "--in", str(g))
    assert code == 0 and json.loads(text)["rank"] == 9


def test_apply_and_orbit(tmp_path, capsys, seeded):
    g = tmp_path / "g.json"
    # chance collinearities give extra rich lines with probability about 100/p, so use a larger prime
    run(capsys, "gen", "--n", "7", "--source", "nodal", "--p", "883", "--out", str(g))
    data = json.loads(g.read_text())
    first = {**data["realization"], "members": data["realization"]["members"][:7],
             "labels": list(range(7))}
    c0 = tmp_path / "c0.json"
    c0.write_text(json.dumps(first))
    code, text, _ = run(capsys, "apply", "--op", "lambda", "--in", str(c0))
    assert code == 0
    lines = json.loads(text)["arrangement"]["members"]
    assert sorted(lines) == sorted(data["realization"]["members"][7:])
    code, text, _ = run(capsys, "orbit", "--op", "labeled_lambda", "--seed-arrangement", str(c0), "--max", "10")
    assert code == 0 and "iterates" in json.loads(text)


def test_periods(capsys):
    code, text, _ = run(capsys, "periods", "--k", "12", "--format", "csv")
    assert code == 0 and len(text.strip().splitlines()) == 17
    code, text, _ = run(capsys, "periods", "--k", "3-5")
    assert [r["lowest"] for r in json.loads(text)["summary"]] == [9, 5, 11]
    code, _, err = run(capsys, "periods", "--k", "60")
    assert code != 0 and json.loads(err)["error"] == "OptInRequired"


def test_fibers(capsys):
    code, text, _ = run(capsys, "fibers", "--map", "lambda23", "--samples", "10")
    assert code == 0 and json.loads(text)["rational"]["samples"] == 10


def test_pmap(capsys):
    code, text, _ = run(capsys, "pmap", "--map", "s1p", "--point", "5:7:3", "--steps", "2")
    orbit = json.loads(text)["orbit"]
    assert code == 0 and orbit[0] == orbit[2]


def test_render(tmp_path, capsys, seeded):
    g, svg = tmp_path / "g.json", tmp_path / "g.svg"
    run(capsys, "gen", "--n", "6", "--source", "tate", "--out", str(g))
    assert run(capsys, "render", "--in", str(g), "--out", str(svg))[0] == 0
    assert svg.read_text().startswith("<svg") and svg.read_text().count("<line") == 12
    f = tmp_path / "f.json"
    run(capsys, "gen", "--n", "7", "--source", "nodal", "--out", str(f))
    code, _, err = run(capsys, "render", "--in", str(f), "--out", str(svg))
    assert code != 0 and json.loads(err)["message"] == "field not orderable"


def test_bad_input_reports_json(tmp_path, capsys):
    code, _, err = run(capsys, "verify", "--in", str(tmp_path / "missing.json"))
    assert code != 0 and "error" in json.loads(err)
