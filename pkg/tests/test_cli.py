import json

import pytest

from mucalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_info_and_homology(capsys, tmp_path):
    path = tmp_path / "s.txt"
    path.write_text("1 2 3\n1 2 4\n1 3 4\n2 3 5\n2 4 5\n3 4 5\n")
    code, out = run(capsys, "info", str(path))
    assert code == 0 and out["f_vector"] == [1, 5, 9, 6] and not out["two_neighbourly"]
    code, out = run(capsys, "homology", "--named", "rp2_6", "--char", "2")
    assert out["reduced_betti"] == [0, 0, 1, 1] and out["betti"] == [1, 1, 1]


def test_sigma_and_mu(capsys):
    code, out = run(capsys, "sigma", "--named", "stacked5")
    assert out["sigma"] == ["-9/10", "1/10", "1/1"]
    code, out = run(capsys, "mu", "--named", "stacked5", "--pairs")
    assert out["mu"] == out["mu_via_pairs"] == ["11/10", "1/5", "11/10"]


def test_bad_char():
    with pytest.raises(SystemExit):
        main(["sigma", "--named", "stacked5", "--char", "4"])


def test_stacked(capsys):
    code, out = run(capsys, "stacked", "--named", "stacked5", "--ell", "1")
    assert out["valid"] and out["delta_facets"] == [[1, 2, 3, 4], [2, 3, 4, 5]]
    code, out = run(capsys, "stacked", "--named", "octahedron", "--ell", "1")
    assert not out["valid"] and out["failed_check"] == "is_ball_or_manifold"


def test_generate_replay_verify(capsys, tmp_path):
    log = tmp_path / "walk.json"
    code, out = run(capsys, "generate", "--dim", "3", "--moves", "4", "--seed", "2", "--out", str(log))
    assert code == 0 and out["tame"] and len(out["moves"]) == 4
    code, out = run(capsys, "replay", str(log))
    assert code == 0 and out["matches_claimed"]
    raw = json.loads(log.read_text())
    raw["final_facets"] = raw["final_facets"][:-1]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(raw))
    code, out = run(capsys, "replay", str(bad))
    assert code == 1 and not out["matches_claimed"]
    code, out = run(capsys, "verify", str(log), "--suite", "tame")
    assert code == 0 and {r["theorem_id"] for r in out} >= {"walk-length", "glbt-tame-sphere", "sigma-bound"}


def test_verify_all(capsys):
    code, out = run(capsys, "verify", "--named", "torus_7")
    assert code == 0
    assert all(r["verdict"] != "fail" for r in out)
    assert any(r["verdict"] == "not-applicable" for r in out)


def test_scan(capsys):
    code, out = run(capsys, "scan", "--conjecture", "1", "--dim", "2", "--trials", "3")
    assert code == 0 and out


def test_size_cap(capsys, tmp_path):
    path = tmp_path / "big.txt"
    path.write_text(" ".join(str(i) for i in range(18)) + "\n")
    with pytest.raises(SystemExit):
        main(["sigma", str(path)])
