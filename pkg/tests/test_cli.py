import json

from youngfock.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_convert_printed_values(capsys):
    code, out, _ = run_cli(
        ["convert", "--x", "1=1,2=1", "--max-degree", "2", "--ring", "poly-z"], capsys)
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert lines[0] == {"N": 1, "A": "1", "B": "0", "X": {"poly": ["0", "1"]}}
    assert lines[1] == {"N": 2, "A": "3/2", "B": "1/2", "X": {"poly": ["1/2", "3/2"]}}
    assert lines[-1]["command"] == "convert" and lines[-1]["ok"]


def test_convert_rational_ring_and_y_side(capsys):
    code, out, _ = run_cli(
        ["convert", "--x", "1=1", "--y", "1=2", "--z", "1/2", "--w", "1/3",
         "--max-degree", "2"], capsys)
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert lines[0]["X"] == "1/2"
    ys = [l for l in lines if "Y" in l]
    assert ys[0]["Y"] == "2/3"


def test_measure_csv(capsys):
    code, out, _ = run_cli(
        ["measure", "--kind", "virasoro", "--z", "1/2", "--w", "1/3",
         "--x", "1=1,2=1/2", "--y", "1=1", "--max-degree", "2",
         "--output", "csv"], capsys)
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "partition,weight,normalized"
    assert len(rows) == 1 + 4  # partitions of 0, 1, 2


def test_measure_json_summary(capsys):
    code, out, _ = run_cli(
        ["measure", "--kind", "schur", "--x", "1=1", "--y", "1=1",
         "--max-degree", "3"], capsys)
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    summary = lines[-1]
    assert summary["command"] == "measure"
    assert summary["cauchy_normalizer"] == summary["z_trunc"]


def test_measure_poly_ring(capsys):
    code, out, _ = run_cli(
        ["measure", "--kind", "virasoro", "--w", "1/3", "--x", "1=1",
         "--y", "1=1", "--max-degree", "2", "--ring", "poly-z"], capsys)
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    row1 = next(l for l in lines if l.get("partition") == [1])
    assert row1["weight"] == {"poly": ["0", "1/3"]}  # x1*z times y1*w
    assert row1["normalized"] is None  # not a ring element over poly z
    summary = lines[-1]
    assert summary["params"]["z"] == {"poly": ["0", "1"]}


def test_measure_m_virasoro(capsys):
    code, out, _ = run_cli(
        ["measure", "--kind", "m-virasoro", "--m", "1", "--gamma", "1/4",
         "--z", "1", "--w", "1", "--x", "1=1", "--y", "1=1",
         "--max-degree", "2"], capsys)
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["m"] == 1 and summary["params"]["gamma"] == "1/4"


def test_correlations_vacuum_point(capsys):
    code, out, _ = run_cli(
        ["correlations", "--kind", "schur", "--points", '["-1/2"]',
         "--max-degree", "2"], capsys)
    assert code == 0
    first = json.loads(out.strip().splitlines()[0])
    assert first == {"points": ["-1/2"], "probability": "1"}


def test_verify_ok_and_exit_codes(capsys):
    code, out, _ = run_cli(["verify", "--suite", "sl2", "--seed", "7"], capsys)
    assert code == 0
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["ok"] is True and summary["suite"] == "sl2"


def test_verify_falsified_identity_exits_one(capsys):
    # the all-diagram Schur-reduction identity is honestly falsified
    code, out, _ = run_cli(
        ["verify", "--suite", "determinancy", "--seed", "7", "--max-degree", "4"],
        capsys)
    assert code == 1
    summary = json.loads(out.strip().splitlines()[-1])
    assert summary["ok"] is False


def test_parse_error_exits_two(capsys):
    code, _, err = run_cli(
        ["measure", "--kind", "schur", "--x", "0=1", "--max-degree", "2"], capsys)
    assert code == 2
    assert "error" in err


def test_usage_error_exits_two(capsys):
    assert main(["measure", "--kind", "nonsense"]) == 2
    assert main(["bogus-command"]) == 2


def test_determinism_byte_identical(capsys):
    argv = ["measure", "--kind", "virasoro", "--z", "2/3", "--w", "-1/5",
            "--x", "1=1,2=1/3", "--y", "1=1/2", "--max-degree", "4"]
    _, out1, _ = run_cli(argv, capsys)
    _, out2, _ = run_cli(argv, capsys)
    assert out1 == out2
    argv = ["verify", "--suite", "kernels", "--seed", "11"]
    _, out1, _ = run_cli(argv, capsys)
    _, out2, _ = run_cli(argv, capsys)
    assert out1 == out2
    for argv in (
        ["decompose", "--z", "1/2", "--w", "0", "--max-degree", "4"],
        ["correlations", "--kind", "schur", "--x", "1=1", "--y", "1=1/3",
         "--points", '["1/2"]', "--max-degree", "4"],
    ):
        _, out1, _ = run_cli(argv, capsys)
        _, out2, _ = run_cli(argv, capsys)
        assert out1 == out2 and out1


def test_out_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("YOUNGFOCK_OUT_DIR", str(tmp_path))
    code, out, _ = run_cli(
        ["convert", "--x", "1=1", "--max-degree", "1", "--out", "result.jsonl"],
        capsys)
    assert code == 0 and out == ""
    content = (tmp_path / "result.jsonl").read_text()
    assert json.loads(content.splitlines()[0])["N"] == 1


def test_decompose_command(capsys):
    code, out, _ = run_cli(["decompose", "--z", "0", "--w", "5",
                            "--max-degree", "3"], capsys)
    assert code == 0
    rep = json.loads(out.strip())
    assert rep["case"] == "z-zero"
    assert len(rep["per_degree"]) == 4
    assert all(r["holds"] for r in rep["relations"])
