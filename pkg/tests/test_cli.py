import json
from fractions import Fraction as F

from fdomlab.cli import main
from fdomlab.distributions import DominatingDistribution
from fdomlab.fdom import certificate_from_json
from fdomlab.generators import cycle, theta_graph
from fdomlab.graphs import read_graph_text, write_graph_text


def write_graph(tmp_path, g, name="g.graph"):
    path = tmp_path / name
    path.write_text(write_graph_text(g))
    return str(path)


def test_gen_roundtrip(tmp_path, capsys):
    out = tmp_path / "c7.graph"
    assert main(["gen", "cycle", "7", "--out", str(out)]) == 0
    g = read_graph_text(out.read_text())
    assert g == cycle(7)


def test_fdom_prints_rational_and_certificates_verify(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(7))
    cert_path = tmp_path / "cert.json"
    assert main(["fdom", "--in", path, "--out", str(cert_path)]) == 0
    assert capsys.readouterr().out.strip() == "7/3"
    blob = json.loads(cert_path.read_text())
    primal = certificate_from_json(blob["primal"])
    assert primal.objective == F(7, 3)
    # bit-exact round trip through the verify subcommand
    primal_path = tmp_path / "primal.json"
    primal_path.write_text(json.dumps(blob["primal"]))
    assert main(["verify", "--in", path, "--primal", str(primal_path)]) == 0
    dual_path = tmp_path / "dual.json"
    dual_path.write_text(json.dumps(blob["dual"]))
    assert main(["verify", "--in", path, "--dual", str(dual_path)]) == 0


def test_construct52_bad_family_exit(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(7))
    assert main(["construct52", "--in", path]) == 1
    assert "bad-family:C7" in capsys.readouterr().err


def test_construct52_emits_verifiable_distribution(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(5))
    out = tmp_path / "dist.json"
    assert main(["construct52", "--in", path, "--out", str(out)]) == 0
    d, r = DominatingDistribution.from_json(json.loads(out.read_text()))
    assert r == F(2, 5)
    assert main(["verify", "--in", path, "--distribution", str(out)]) == 0


def test_verify_rejects_bad_dual(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(5))
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"type": "dual", "value": ["5", "3"],
                               "weights": [["1", "3"]] * 5}))
    assert main(["verify", "--in", path, "--dual", str(bad)]) == 1


def test_gamma_domatic_chi(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(6))
    assert main(["gamma", "--in", path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "2"
    assert main(["domatic", "--in", path]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "3"
    assert main(["chi", "--in", path]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["chif", "--in", path]) == 0
    assert capsys.readouterr().out.strip() == "2/1"


def test_usage_errors(tmp_path, capsys):
    assert main(["gen", "nosuchfamily"]) == 2
    path = write_graph(tmp_path, cycle(5))
    assert main(["verify", "--in", path]) == 2


def test_cap_exit(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(21))
    assert main(["fdom", "--in", path, "--colgen"]) == 0
    assert main(["--caps", "domatic=5", "domatic", "--in", path]) == 3
    assert main(["--caps", "bogus=1", "domatic", "--in", path]) == 2


def test_intersecting_family_cli(capsys):
    assert main(["intersecting-family", "--a", "2", "--b", "0"]) == 0
    out = capsys.readouterr().out
    assert "t 20" in out and "set_size 8" in out


def test_sample_cli(tmp_path, capsys):
    path = write_graph(tmp_path, cycle(6))
    assert main(["sample-lnbound", "--in", path, "--p", "1/3",
                 "--trials", "200", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "all_dominating True" in out


def test_family_cert_cli(tmp_path, capsys):
    out = tmp_path / "cert.json"
    assert main(["family-cert", "--kind", "girth6", "2", "--out", str(out)]) == 0
    blob = json.loads(out.read_text())
    assert blob["type"] == "dual"


def test_corpus_runner(tmp_path, capsys):
    # empty directory: empty summary, exit 0
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["corpus", "--dir", str(empty), "--check", "fdom<5/2"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["results"] == [] and summary["failures"] == 0
    # the eight exceptional graphs all satisfy fdom < 5/2
    from fdomlab.badfamily import bad_family_members
    bdir = tmp_path / "bad"
    bdir.mkdir()
    for idx, g in bad_family_members().items():
        (bdir / f"member{idx}.graph").write_text(write_graph_text(g))
    assert main(["corpus", "--dir", str(bdir), "--check", "fdom<5/2"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["failures"] == 0 and len(summary["results"]) == 8
    # construct52 over a mixed directory fails on the exceptional member
    mixed = tmp_path / "mixed"
    mixed.mkdir()
    (mixed / "a_c5.graph").write_text(write_graph_text(cycle(5)))
    (mixed / "b_c7.graph").write_text(write_graph_text(cycle(7)))
    (mixed / "c_theta.graph").write_text(write_graph_text(theta_graph((2, 2, 5))))
    assert main(["corpus", "--dir", str(mixed), "--check", "construct52"]) == 1
    summary = json.loads(capsys.readouterr().out)
    assert summary["failures"] == 1
    assert [r["file"] for r in summary["results"]] == \
        ["a_c5.graph", "b_c7.graph", "c_theta.graph"]
