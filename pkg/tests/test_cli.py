import io
import json
from contextlib import redirect_stdout


from thetasym.cli import main


def run_cli(argv):
    out = io.StringIO()
    with redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def test_symbols_enumerate_pretty():
    code, out = run_cli(["symbols-enumerate", "--rank", "1", "--family", "sp"])
    assert code == 0
    assert "[1|]" in out and "[1,0|1]" in out


def test_theta_first_example():
    code, out = run_cli(
        ["theta-first", "--symbol", "[1,0|1]", "--sign", "+", "--direction", "sp-to-o"]
    )
    assert code == 0
    assert "1" in out and "[1|0]" in out


def test_theta_fiber_json():
    code, out = run_cli(
        [
            "theta-fiber",
            "--symbol",
            "[1,0|1]",
            "--sign",
            "+",
            "--target-rank",
            "1",
            "--format",
            "json",
        ]
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert rows == [{"symbol": "[1|0]", "rank": 1, "defect": 0}]


def test_theta_cuspidal():
    code, out = run_cli(["theta-cuspidal", "--k", "1", "--variant", "down", "--format", "csv"])
    assert code == 0
    assert "[|2,1,0]" in out and "[1,0|]" in out


def test_ggp_mult():
    code, out = run_cli(
        [
            "ggp-mult",
            "--left",
            "sp(2): rho=trivial:0:reg ; L=[1,0|1] ; L'=[|]",
            "--right",
            "sp(2): rho=trivial:0:reg ; L=[0|] ; L'=[1|0]",
            "--case",
            "fj",
            "--eps-minus-one",
            "+",
            "--format",
            "json",
        ]
    )
    assert code == 0
    row = json.loads(out.strip())
    assert row["multiplicity"] == "1" and row["status"] == "ok"


def test_ggp_branch_trivial():
    code, out = run_cli(
        [
            "ggp-branch",
            "--pi",
            "o+(3): rho=trivial:0:reg ; L=[1|] ; L'=[0|] ; eps=+",
            "--target",
            "o+(2)",
            "--eps-minus-one",
            "+",
            "--format",
            "json",
        ]
    )
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    trivial = [r for r in rows if "L=[1|0]" in r["label"]]
    assert len(trivial) == 1 and trivial[0]["multiplicity"] == "1"


def test_eps_required_for_sign_sensitive_verbs():
    code, _ = run_cli(
        [
            "ggp-mult",
            "--left",
            "sp(2): rho=trivial:0:reg ; L=[1,0|1] ; L'=[|]",
            "--right",
            "sp(2): rho=trivial:0:reg ; L=[0|] ; L'=[1|0]",
            "--case",
            "fj",
        ]
    )
    assert code == 1
    code, _ = run_cli(
        [
            "ggp-mult",
            "--left",
            "x",
            "--right",
            "y",
            "--case",
            "fj",
            "--eps-minus-one",
            "+",
            "--q",
            "5",
        ]
    )
    assert code == 1


def test_q_sets_eps():
    code, out = run_cli(
        [
            "ggp-mult",
            "--left",
            "sp(2): rho=trivial:0:reg ; L=[1,0|1] ; L'=[|]",
            "--right",
            "sp(2): rho=trivial:0:reg ; L=[0|] ; L'=[1|0]",
            "--case",
            "fj",
            "--q",
            "5",
        ]
    )
    assert code == 0


def test_domain_error_exit_code():
    code, _ = run_cli(["theta-first", "--symbol", "[1,1|]", "--sign", "+", "--direction", "sp-to-o"])
    assert code == 1
    code, _ = run_cli(["theta-first", "--symbol", "[1|0]", "--sign", "+", "--direction", "sp-to-o"])
    assert code == 1


def test_verify_exit_codes():
    code, out = run_cli(["verify", "--suite", "counts", "--max-rank", "4"])
    assert code == 0
    assert "pass" in out


def test_verify_failure_exit_code(monkeypatch):
    import thetasym.cli as cli
    from thetasym.oracle import VerificationReport

    failing = VerificationReport()
    failing.record(False, "probe", 1, 2)
    monkeypatch.setattr(cli, "verify_f1", lambda max_rank: failing)
    code, out = run_cli(["verify", "--suite", "f1", "--max-rank", "1"])
    assert code == 2
    assert "FAIL" in out and "probe" in out


def test_output_byte_identical():
    args = ["symbols-enumerate", "--rank", "4", "--family", "o-", "--format", "csv"]
    assert run_cli(args) == run_cli(args)


def test_cache_roundtrip(tmp_path):
    args = ["symbols-enumerate", "--rank", "3", "--family", "sp", "--format", "json"]
    cold = run_cli(args + ["--cache-dir", str(tmp_path)])
    warm = run_cli(args + ["--cache-dir", str(tmp_path)])
    plain = run_cli(args)
    assert cold == warm == plain
    assert list(tmp_path.glob("*.json"))


def test_cache_ignores_corrupt_entries(tmp_path):
    args = [
        "symbols-enumerate",
        "--rank",
        "2",
        "--family",
        "o+",
        "--format",
        "json",
        "--cache-dir",
        str(tmp_path),
    ]
    first = run_cli(args)
    entry = next(tmp_path.glob("*.json"))
    entry.write_text('{"version": "0.0.0", "symbols": ["[|]"], "checksum": "bad"}')
    assert run_cli(args) == first
