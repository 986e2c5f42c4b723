import json

from dieumod.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_construct_then_invariants_pipe(capsys, tmp_path):
    code, out = run_cli(capsys, "construct", "--family", "slope", "--a", "1",
                        "--p", "3", "--f", "2", "--e", "1", "--ext", "1")
    assert code == 0
    path = tmp_path / "m.json"
    path.write_text(out)
    code, out = run_cli(capsys, "invariants", "--module", str(path))
    assert code == 0
    rep = json.loads(out)
    assert rep["flags"]["supersingular"] is True
    assert rep["newton"]["index_num"] == 1


def test_deterministic_output(capsys):
    args = ("construct", "--family", "normal", "--tau", "0", "--avals", "1",
            "--p", "3", "--f", "2", "--e", "2")
    _, out1 = run_cli(capsys, *args)
    _, out2 = run_cli(capsys, *args)
    assert out1 == out2


def test_poset_json_and_dot(capsys):
    code, out = run_cli(capsys, "poset", "--e", "1", "--f", "4")
    assert code == 0
    assert len(json.loads(out)["nodes"]) == 16
    code, out = run_cli(capsys, "poset", "--e", "1", "--f", "2",
                        "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_hecke_subcommand(capsys):
    code, out = run_cli(capsys, "hecke", "--p", "3", "--s", "1")
    assert code == 0
    rep = json.loads(out)
    assert rep["enumerated"] == 33 and rep["count_matches"]


def test_sample_deform_subcommand(capsys):
    code, out = run_cli(capsys, "sample-deform", "--p", "3", "--f", "2",
                        "--e", "1", "--ext", "4", "--tau", "0",
                        "--target", "1,0", "--trials", "10", "--seed", "7")
    assert code == 0
    rep = json.loads(out)
    assert rep["trials"] == 10 and sum(rep["slope_histogram"].values()) == 10


def test_seed_flag_wins_over_env(capsys, monkeypatch):
    monkeypatch.setenv("DIEUMOD_SEED", "4")
    args = ("sample-deform", "--p", "3", "--f", "2", "--e", "1", "--ext", "4",
            "--tau", "0", "--target", "1,0", "--trials", "5")
    _, out_env = run_cli(capsys, *args)
    _, out_flag = run_cli(capsys, *args, "--seed", "4")
    assert json.loads(out_env) == json.loads(out_flag)


def test_domain_error_yields_json_and_exit_1(capsys):
    code, out = run_cli(capsys, "construct", "--family", "slope", "--a", "9",
                        "--p", "3", "--f", "2", "--e", "1")
    assert code == 1
    err = json.loads(out)["error"]
    assert err["code"] == "bad-shape"


def test_malformed_module_json(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, out = run_cli(capsys, "invariants", "--module", str(path))
    assert code == 1
    assert json.loads(out)["error"]["code"] == "bad-input"


def test_usage_error_exit_2(capsys):
    try:
        main(["frobnicate"])
    except SystemExit as exc:
        assert exc.code == 2
    else:
        raise AssertionError("unknown subcommand must exit 2")


def test_verify_scaled_suite(capsys):
    code = main(["verify", "--suite", "hecke", "--scale", "1.0"])
    captured = capsys.readouterr()
    assert code == 0
    rep = json.loads(captured.out)
    assert rep["passed"] and rep["checks"][0]["id"] == 9
    assert "pass" in captured.err
