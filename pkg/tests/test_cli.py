import json

from cuspidal_lab.cli import main


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_gb(tmp_path, capsys):
    src = write(tmp_path, "i.txt", "u^2 - v*w\nu*v\n")
    out = str(tmp_path / "gb.txt")
    assert main(["gb", "--in", src, "--out", out]) == 0
    assert "u*v" in open(out).read()


def test_resolve_json(tmp_path):
    src = write(tmp_path, "i.txt", "u^2\nu*v\nv^2\n")
    out = tmp_path / "r.json"
    assert main(["resolve", "--in", src, "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["gen_degrees"] == [2, 2, 2] and data["syz_degrees"] == [3, 3]


def test_hilbert(tmp_path, capsys):
    src = write(tmp_path, "i.txt", "u^2\nu*v\nv^2\n")
    assert main(["hilbert", "--in", src, "--degree", "2", "--max-degree", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim_I"] == 3 and data["quotient_values"] == [1, 3, 3, 3] and data["length"] == 3


def test_singular_exit_codes(tmp_path, capsys):
    cusp = write(tmp_path, "c.txt", "v^2*w - u^3\n")
    assert main(["singular", "--curve", cusp]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["count"] == 1 and data["points"][0]["type"] == "A2"
    node = write(tmp_path, "n.txt", "u*v*w\n")
    assert main(["singular", "--curve", node]) == 1


def test_alexander_on_a_torus_sextic(tmp_path, capsys):
    from cuspidal_lab import zoo
    f = zoo.build_C68sub().curve
    path = write(tmp_path, "f.txt", f.format() + "\n")
    assert main(["alexander", "--curve", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["degree_via_hilbert"] == data["degree_via_betti"] == 4


def test_qtr(tmp_path, capsys):
    curve = write(tmp_path, "f.txt", "u^6 + v^6\n")
    assert main(["qtr", "--curve", curve, "--h1", "u^3", "--h2", "v^2"]) == 0
    assert json.loads(capsys.readouterr().out)["valid"]
    h1 = write(tmp_path, "h1.txt", "u^3  # cubic\n")
    assert main(["qtr", "--curve", curve, "--h1", "@" + h1, "--h2", "v^2 + u^2"]) == 1


def test_known_errors_exit_2(tmp_path, capsys):
    bad = write(tmp_path, "b.txt", "u^^2\n")
    assert main(["gb", "--in", bad]) == 2
    assert main(["gb", "--in", str(tmp_path / "missing.txt")]) == 2
    assert main(["gb", "--field", "F455", "--in", bad]) == 2
    assert "error" in capsys.readouterr().err


def test_replay_subset(tmp_path):
    out = tmp_path / "rep.json"
    rc = main(["replay", "--only", "dimension-audit,c68sub", "--json", str(out), "--quiet"])
    reports = {r["id"]: r for r in json.loads(out.read_text())}
    assert rc == 0
    assert reports["c68sub"]["status"] == "pass"
    assert reports["c120bar-cusps"]["status"] == "skipped"
    assert set(reports["c68sub"]) >= {"id", "status", "expected", "computed", "ms"}
    assert set(reports["c68sub"]["expected"]) == {"value", "provenance"}


def test_replay_corrupt_control(tmp_path):
    out = tmp_path / "rep.json"
    rc = main(["replay", "--only", "c120bar-cusps", "--corrupt-c120bar", "--json", str(out), "--quiet"])
    assert rc == 1
    rep = [r for r in json.loads(out.read_text()) if r["id"] == "c120bar-cusps"][0]
    assert rep["status"] == "fail" and rep["computed"]["count"] != 32


def test_replay_other_prime(tmp_path):
    out = tmp_path / "rep.json"
    rc = main(["replay", "--char", "97", "--only", "c66-cusps,c68sub,c120bar-cusps", "--json", str(out),
               "--quiet"])
    reports = {r["id"]: r for r in json.loads(out.read_text())}
    assert rc == 0
    assert reports["c120bar-cusps"]["status"] == "skipped"
    assert reports["c66-cusps"]["status"] == reports["c68sub"]["status"] == "pass"


def test_replay_small_characteristic_is_reported(tmp_path):
    out = tmp_path / "rep.json"
    assert main(["replay", "--char", "13", "--only", "c68sub", "--json", str(out), "--quiet"]) == 1
    rep = [r for r in json.loads(out.read_text()) if r["id"] == "c68sub"][0]
    assert "CharacteristicTooSmall" in rep["computed"]["error"]
