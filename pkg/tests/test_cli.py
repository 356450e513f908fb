"""The command-line interface: expression parsing, normal forms, counting,
basis listing, suite running, and report round-trips."""

import json

import pytest

from qgrass.cli import ParseError, main, parse_expression
from qgrass.manin import ManinAlgebra


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normal_form_command(capsys):
    code, out, _ = run(capsys, ["normal-form", "--algebra", "mq", "a[1,2]*a[1,1]"])
    assert code == 0
    assert out.strip() == "q^1 * a[1,1]a[1,2]"
    code, out, _ = run(capsys, ["normal-form", "--algebra", "bigcell", "tau[1]*tau[1]"])
    assert code == 0
    assert out.strip() == "0"
    code, out, _ = run(
        capsys, ["normal-form", "--algebra", "gr", "D[1,5]*D[2,5] - q^1 * D[1,2]*D[5,5]"]
    )
    assert code == 0
    assert out.strip() == "0"


def test_normal_form_with_rational_specialization(capsys):
    code, out, _ = run(
        capsys, ["normal-form", "--algebra", "mq", "a[1,2]*a[1,1]", "--q", "2"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "q^1 * a[1,1]a[1,2]"
    assert any(line.startswith("q=2:") and "2" in line for line in lines[1:])


def test_parse_errors_carry_positions(capsys):
    code, _, err = run(capsys, ["normal-form", "a[1,2]*"])
    assert code == 2
    assert "position" in err
    code, _, err = run(capsys, ["normal-form", "b[1,2]"])
    assert code == 2
    code, _, err = run(capsys, ["normal-form", "a[9,9]"])
    assert code == 2


def test_parse_expression_directly():
    mq = ManinAlgebra(2, 1)

    def resolve(name, idx):
        assert name == "a"
        return mq.gid(*idx)

    e = parse_expression(mq.algebra, resolve, "a[1,1]*a[2,2] - q^-1 * a[1,2]*a[2,1]")
    assert mq.nf(e) == mq.quantum_minor((1, 2))
    with pytest.raises(ParseError):
        parse_expression(mq.algebra, resolve, "a[1,1] +")
    with pytest.raises(ParseError):
        parse_expression(mq.algebra, resolve, "q^x")


def test_hilbert_command(capsys):
    assert run(capsys, ["hilbert", "--algebra", "mq", "--m", "1", "--n", "1",
                        "--degree", "2"])[1].strip() == "8"
    assert run(capsys, ["hilbert", "--algebra", "bigcell", "--degree", "3"])[1].strip() == "44"
    assert run(capsys, ["hilbert", "--algebra", "parabolic", "--degree", "1"])[1].strip() == "19"


def test_basis_command(capsys):
    code, out, _ = run(capsys, ["basis", "--algebra", "gr", "--degree", "1"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11
    assert lines[0] == "D[1,2]"
    assert "D[5,5]" in lines


def test_verify_single_suite_text(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "bigcell-flatness"])
    assert code == 0
    assert "[  ok]" in out and "FAIL" not in out


def test_verify_coords_reports_the_known_defects(capsys):
    code, out, _ = run(
        capsys, ["verify", "--suite", "coords", "--format", "json", "--quiet"]
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["suite"] == "coords"
    failed = {i["id"] for i in doc["items"] if i["status"] == "fail"}
    assert failed == {
        "localize:parabolic:D[3,4|3,4]:certificate",
        "localize:parabolic:g[5,5]:certificate",
    }
    assert all(i["residual"] for i in doc["items"] if i["status"] == "fail")
    assert doc["summary"]["fail"] == 2


def test_verify_manin_with_precheck_and_jobs(capsys):
    argv = ["verify", "--suite", "manin", "--m", "1", "--n", "1", "--degree", "2",
            "--q", "2", "--q=-1/3", "--format", "json", "--quiet"]
    code, out, _ = run(capsys, argv)
    assert code == 0
    docs = json.loads(out)
    assert [d["suite"] for d in docs] == ["precheck", "manin"]
    ids = {i["id"] for d in docs for i in d["items"]}
    assert "precheck:laurent:q=2" in ids
    assert "precheck:laurent:q=-1/3" in ids
    code2, out2, _ = run(capsys, argv + ["--jobs", "2"])
    assert code2 == 0
    got = [d["summary"] for d in json.loads(out2)]
    assert got == [d["summary"] for d in docs]


def test_verify_rejects_zero_q(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "manin", "--q", "0"])
    capsys.readouterr()


def test_report_round_trip(tmp_path, capsys):
    code, out, _ = run(
        capsys, ["verify", "--suite", "bigcell-flatness", "--format", "json", "--quiet"]
    )
    assert code == 0
    f = tmp_path / "rep.json"
    f.write_text(out)
    code, out2, _ = run(capsys, ["report", str(f)])
    assert code == 0
    assert "[  ok]" in out2 and "bigcell:confluent" in out2
