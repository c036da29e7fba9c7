import json
import subprocess
import sys

from snarkforge.cli import main
from snarkforge.coloring import verify_normal
from snarkforge.fileio import parse_coloring, parse_graph


def run(*argv) -> int:
    return main(list(argv))


def test_generate_mansha_k5(tmp_path, capsys):
    out = tmp_path / "m5"
    assert run("generate", "mansha", "--k", "5", "--out", str(out)) == 0
    graph = parse_graph((tmp_path / "m5.graph").read_text())
    assert graph.n == 36
    assert (tmp_path / "m5.lp").exists()


def test_generate_lp1_star(tmp_path):
    out = tmp_path / "s3"
    assert run("generate", "lp1", "--k", "3", "--star", "1,2,3", "--out", str(out)) == 0
    graph = parse_graph((tmp_path / "s3.graph").read_text())
    assert graph.n == 22


def test_generate_rejects_even_k(tmp_path, capsys):
    code = run("generate", "lp1", "--k", "4", "--star", "1,2,3", "--out", str(tmp_path / "x"))
    assert code == 2
    assert "odd" in capsys.readouterr().err


def test_generate_petersen_and_block(tmp_path):
    assert run("generate", "petersen", "--out", str(tmp_path / "p")) == 0
    assert parse_graph((tmp_path / "p.graph").read_text()).n == 10
    assert run("generate", "bp-block", "--out", str(tmp_path / "b")) == 0
    assert parse_graph((tmp_path / "b.graph").read_text()).n == 7


def test_color_theorem5_on_mansha7(tmp_path):
    out = tmp_path / "m7"
    assert run("generate", "mansha", "--k", "7", "--out", str(out)) == 0
    cert = tmp_path / "m7.cert"
    assert run("color", "--method", "theorem5", "--spec", str(tmp_path / "m7.lp"),
               "--out", str(cert)) == 0
    graph = parse_graph((tmp_path / "m7.graph").read_text())
    coloring = parse_coloring(cert.read_text())
    assert verify_normal(graph, coloring).ok


def test_color_theorem5_refuses_twisted_spec(tmp_path, capsys):
    out = tmp_path / "t"
    assert run("generate", "lp2", "--k", "3", "--star", "1,2,3", "--twists", "1",
               "--out", str(out)) == 0
    code = run("color", "--method", "theorem5", "--spec", str(tmp_path / "t.lp"),
               "--out", str(tmp_path / "t.cert"))
    assert code == 2
    assert "theorem6" in capsys.readouterr().err


def test_color_theorem6_on_twisted_spec(tmp_path):
    out = tmp_path / "t"
    assert run("generate", "lp2", "--k", "3", "--star", "1,2,3", "--twists", "1",
               "--out", str(out)) == 0
    cert = tmp_path / "t.cert"
    assert run("color", "--method", "theorem6", "--spec", str(tmp_path / "t.lp"),
               "--out", str(cert)) == 0
    graph = parse_graph((tmp_path / "t.graph").read_text())
    assert verify_normal(graph, parse_coloring(cert.read_text())).ok


def test_color_search_unsat_exit_1(tmp_path, capsys):
    assert run("generate", "petersen", "--out", str(tmp_path / "p")) == 0
    code = run("color", "--method", "search", "--graph", str(tmp_path / "p.graph"),
               "--k", "4", "--out", str(tmp_path / "p.cert"))
    assert code == 1
    assert "UNSAT" in capsys.readouterr().out


def test_search_index_mode(tmp_path, capsys):
    assert run("generate", "petersen", "--out", str(tmp_path / "p")) == 0
    assert run("search", "--graph", str(tmp_path / "p.graph"), "--mode", "index",
               "--kmax", "7") == 0
    payload = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert payload["index"] == 5


def test_search_petersen_mode_with_hint(tmp_path, capsys):
    out = tmp_path / "m5"
    assert run("generate", "mansha", "--k", "5", "--out", str(out)) == 0
    cert = tmp_path / "m5.cert"
    assert run("color", "--method", "theorem5", "--spec", str(tmp_path / "m5.lp"),
               "--out", str(cert)) == 0
    phi_path = tmp_path / "m5.phi"
    assert run("search", "--graph", str(tmp_path / "m5.graph"), "--mode", "petersen",
               "--hint", str(cert), "--out", str(phi_path)) == 0
    payload = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert payload["status"] == "sat"
    code = run("verify", "petersen", "--graph", str(tmp_path / "m5.graph"),
               "--cert", str(phi_path))
    assert code == 0


def test_budget_env_var_gives_exit_3(tmp_path, capsys, monkeypatch):
    assert run("generate", "petersen", "--out", str(tmp_path / "p")) == 0
    monkeypatch.setenv("SNARKFORGE_BUDGET", "5")
    code = run("color", "--method", "search", "--graph", str(tmp_path / "p.graph"),
               "--k", "5", "--out", str(tmp_path / "p.cert"))
    assert code == 3


def test_verify_snark_q3_exit_1(tmp_path, capsys, q3):
    from snarkforge.fileio import format_graph

    path = tmp_path / "q3.graph"
    path.write_text(format_graph(q3))
    code = run("verify", "snark", "--graph", str(path))
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is False
    assert payload["failed_check"] is not None


def test_verify_normal_detects_tampering(tmp_path, capsys):
    out = tmp_path / "m5"
    assert run("generate", "mansha", "--k", "5", "--out", str(out)) == 0
    cert = tmp_path / "m5.cert"
    assert run("color", "--method", "theorem5", "--spec", str(tmp_path / "m5.lp"),
               "--out", str(cert)) == 0
    lines = cert.read_text().splitlines()
    edge, color = lines[1].split()
    lines[1] = f"{edge} {1 if color != '1' else 2}"
    cert.write_text("\n".join(lines) + "\n")
    capsys.readouterr()
    code = run("verify", "normal", "--graph", str(tmp_path / "m5.graph"), "--cert", str(cert))
    assert code == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["improper_at"] is not None or payload["abnormal_edges"]


def test_export_dot(tmp_path):
    out = tmp_path / "m5"
    assert run("generate", "mansha", "--k", "5", "--out", str(out)) == 0
    cert = tmp_path / "m5.cert"
    assert run("color", "--method", "theorem5", "--spec", str(tmp_path / "m5.lp"),
               "--out", str(cert)) == 0
    dot = tmp_path / "m5.dot"
    assert run("export", "--graph", str(tmp_path / "m5.graph"), "--cert", str(cert),
               "--out", str(dot)) == 0
    assert "label=" in dot.read_text()


def test_stats_json(tmp_path, capsys):
    assert run("generate", "petersen", "--out", str(tmp_path / "p")) == 0
    assert run("stats", "--graph", str(tmp_path / "p.graph")) == 0
    payload = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert payload == {
        "vertices": 10, "edges": 15, "cubic": True,
        "degree_counts": {"3": 10}, "girth": 5,
    }


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.graph"
    bad.write_text("2 1\n0 0\n")
    assert run("stats", "--graph", str(bad)) == 2


def test_pipeline_certificates_reverify_in_fresh_processes(tmp_path):
    out = tmp_path / "m5"
    assert run("generate", "mansha", "--k", "5", "--out", str(out)) == 0
    assert run("pipeline", "--spec", str(tmp_path / "m5.lp"), "--out", str(out)) == 0
    graph = str(tmp_path / "m5.graph")
    for kind, cert in [
        ("normal", "m5.normal.cert"),
        ("petersen", "m5.petersen.cert"),
        ("bf", "m5.bf.cert"),
    ]:
        proc = subprocess.run(
            [sys.executable, "-m", "snarkforge", "verify", kind,
             "--graph", graph, "--cert", str(tmp_path / cert)],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, proc.stdout + proc.stderr
        assert json.loads(proc.stdout)["ok"] is True


def test_pipeline_output_is_deterministic(tmp_path):
    for sub in ("a", "b"):
        d = tmp_path / sub
        d.mkdir()
        assert run("generate", "mansha", "--k", "5", "--out", str(d / "m")) == 0
        assert run("pipeline", "--spec", str(d / "m.lp"), "--out", str(d / "m")) == 0
    for name in ("m.graph", "m.lp", "m.normal.cert", "m.petersen.cert", "m.bf.cert"):
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
