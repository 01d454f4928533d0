import subprocess
import sys

import pytest

from perfembed.cli import main, parse_code, InputError

FANO = "v=7\n1 2 3\n1 4 5\n1 6 7\n2 4 6\n2 5 7\n3 4 7\n3 5 6\n"


@pytest.fixture
def files(tmp_path):
    def make(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_code():
    m, words = parse_code("# seed\nm=3\n000\n111  # antipode\n\n")
    assert m == 3 and [str(w) for w in words] == ["000", "111"]
    for bad in ["000\n", "m=3\n00\n", "m=3\n0a0\n", ""]:
        with pytest.raises(InputError):
            parse_code(bad)


def test_embed_summary_and_dump(files, tmp_path, capsys):
    code = files("c.code", "m=3\n000\n111\n")
    dump = tmp_path / "p.txt"
    rc, out, _ = run(["embed", code, "--dump", str(dump)], capsys)
    assert rc == 0 and "n=7 |P|=16" in out and "offset=000" in out
    lines = dump.read_text().split()
    assert len(lines) == 16 and "1110000" in lines and lines == sorted(lines)


def test_embed_hamming_dump(files, capsys):
    from conftest import brute_hamming
    from perfembed.gf2core import BitWord

    rc, out, _ = run(["embed", files("h.code", "m=3\n000\n"), "--dump", "-"], capsys)
    words = out.splitlines()[1:]
    assert {BitWord.from_str(w).value for w in words} == brute_hamming(3)


def test_embed_formula_label(files, capsys):
    rc, out, _ = run(["embed", files("c5.code", "m=5\n00000\n11100\n")], capsys)
    assert rc == 0 and "|P|=67108864 (formula" in out
    rc, _, err = run(["embed", files("c6.code", "m=6\n000000\n"), "--dump", "-"], capsys)
    assert rc == 2 and "enumeration limit" in err


def test_embed_invalid_seed(files, capsys):
    rc, _, err = run(["embed", files("bad.code", "m=3\n000\n110\n")], capsys)
    assert rc == 2 and "(000,110)" in err


def test_missing_file(capsys, tmp_path):
    rc, _, _ = run(["embed", str(tmp_path / "nope.code")], capsys)
    assert rc == 1


def test_member_decode(files, capsys):
    code = files("c.code", "m=3\n000\n111\n")
    assert run(["member", code, "--word", "1110000"], capsys)[1].strip() == "IN"
    assert run(["member", code, "--word", "1110001"], capsys)[1].strip() == "OUT"
    rc, out, _ = run(["decode", code, "--word", "0110000"], capsys)
    assert out.splitlines() == ["1110000", "flipped position 1"]
    rc, out, _ = run(["decode", code, "--word", "1110000"], capsys)
    assert out.splitlines()[1] == "flipped position none"
    rc, _, _ = run(["member", code, "--word", "111"], capsys)
    assert rc == 2


@pytest.mark.parametrize("text", ["m=3\n000\n111\n", "m=4\n0000\n1111\n", "m=3\n101\n010\n"])
def test_verify_exhaustive(files, capsys, text):
    rc, out, _ = run(["verify", files("c.code", text), "--level", "exhaustive"], capsys)
    assert rc == 0, out
    assert "FAIL" not in out and "PASS oracle-agreement" in out


def test_verify_m4_reports_coverage(files, capsys):
    rc, out, _ = run(["verify", files("c.code", "m=4\n0000\n1111\n"), "--level", "exhaustive"], capsys)
    assert "coverage counts=32768" in out


def test_verify_levels_guarded(files, capsys):
    code5 = files("c5.code", "m=5\n00000\n11100\n00111\n")
    assert run(["verify", code5, "--level", "exhaustive"], capsys)[0] == 2
    assert run(["verify", files("c.code", "m=3\n000\n"), "--level", "m5-sweep"], capsys)[0] == 2
    rc, out, _ = run(["verify", code5, "--level", "m5-sweep", "--samples", "2000"], capsys)
    assert rc == 0 and "PASS decode-sample" in out
    rc, out, _ = run(["verify", code5], capsys)
    assert rc == 0


def test_verify_tampered_dump(files, capsys, tmp_path):
    code = files("c.code", "m=3\n000\n111\n")
    dump = tmp_path / "p.txt"
    run(["embed", code, "--dump", str(dump)], capsys)
    rc, out, _ = run(["verify", "--words", str(dump)], capsys)
    assert rc == 0 and "perfect" in out
    tampered = files("t.txt", "\n".join(dump.read_text().split()[1:]))
    rc, out, _ = run(["verify", "--words", tampered], capsys)
    assert rc == 3 and "NOT perfect" in out and "covered 0 times" in out


def test_dump_pipe_roundtrip(files):
    code = files("c.code", "m=4\n0000\n1111\n")
    cmd = [sys.executable, "-m", "perfembed"]
    dump = subprocess.run(cmd + ["embed", code, "--dump", "-"], capture_output=True, text=True, check=True)
    words = "\n".join(dump.stdout.splitlines()[1:])
    res = subprocess.run(cmd + ["verify", "--words", "-"], input=words, capture_output=True, text=True)
    assert res.returncode == 0 and "coverage counts=32768" in res.stdout


def test_sts_commands(files, tmp_path, capsys):
    fano = files("fano.triples", FANO)
    out_path = tmp_path / "sts127.triples"
    rc, _, err = run(["sts", "embed", fano, "-o", str(out_path)], capsys)
    assert rc == 0 and "STS(127)" in err
    lines = out_path.read_text().splitlines()
    assert lines[0] == "v=127" and len(lines) == 1 + 2667
    assert lines[1:8] == FANO.splitlines()[1:]
    assert run(["sts", "check", str(out_path)], capsys)[0] == 0

    single = tmp_path / "sts7.triples"
    run(["sts", "embed", files("one.triples", "v=3\n1 2 3\n"), "-o", str(single)], capsys)
    assert len(single.read_text().splitlines()) == 8

    rc, _, err = run(["sts", "embed", files("bad.triples", "v=7\n1 2 3\n1 2 4\n")], capsys)
    assert rc == 2

    rc, out, _ = run(["sts", "extract", files("c.code", "m=3\n000\n111\n")], capsys)
    assert out.splitlines()[1:] == FANO.splitlines()[1:]


def test_sts_check_modes(files, capsys):
    partial = files("p.triples", "v=7\n1 2 3\n")
    rc, out, _ = run(["sts", "check", partial], capsys)
    assert rc == 3 and "invalid" in out
    assert run(["sts", "check", partial, "--partial"], capsys)[0] == 0
