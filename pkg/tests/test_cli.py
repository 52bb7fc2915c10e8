import io
import random
import subprocess
import sys

import pytest

from profmonad import biparser, cli
from profmonad.suites import random_text

T0 = "(N (N L 0 L) 1 (N L 2 L))"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestCodec:
    @pytest.mark.parametrize("payload,wire", [("SKI", "3 SKI"), ("", "0 "), ("lambda", "6 lambda")])
    def test_encode(self, payload, wire):
        assert run("encode", payload) == (0, wire + "\n", "")

    def test_decode(self):
        assert run("decode", "6 lambda calculus") == (0, "lambda\n calculus\n", "")
        assert run("decode", "0 rest") == (0, "\nrest\n", "")

    def test_decode_failure(self):
        code, out, err = run("decode", "5 ab")
        assert code == 1 and out == "" and "decode" in err

    def test_round_trip_1000_payloads(self):
        rnd = random.Random(1)
        for _ in range(1000):
            x = random_text(rnd, 100)
            code, wire, _ = run("encode", "--", x)
            assert code == 0
            code, out, _ = run("decode", wire[:-1])
            assert (code, out) == (0, x + "\n\n")

    def test_long_payload_beyond_default_recursion(self):
        x = "ab" * 5000
        code, wire, _ = run("encode", "--", x)
        assert code == 0 and wire == biparser.oracle_print_string(x) + "\n"
        assert run("decode", wire[:-1])[1] == x + "\n\n"


class TestSpine:
    def test_get(self):
        assert run("spine-get", T0) == (0, "1 2\n", "")
        assert run("spine-get", "L") == (0, "\n", "")

    def test_put(self):
        expected = "(N (N L 0 L) 3 (N L 4 (N L 5 L)))\n"
        assert run("spine-put", T0, "3 4 5") == (0, expected, "")
        assert run("spine-put", T0, "3", "4", "5")[1] == expected

    def test_malformed_tree(self):
        assert run("spine-get", "(N L")[0] == 2
        assert run("spine-put", "Q", "1")[0] == 2

    def test_malformed_int(self):
        assert run("spine-put", T0, "3 x")[0] == 2


class TestKv:
    def test_put_then_get(self, tmp_path):
        f = tmp_path / "m.kv"
        f.write_text("")
        assert run("kv-put", str(f), "--keys", "a", "b", "--values", "1", "2") == (0, "1\n2\n", "")
        assert f.read_text() == "a=1\nb=2\n"
        assert run("kv-get", str(f), "b", "a") == (0, "2\n1\n", "")

    def test_put_creates_missing_file(self, tmp_path):
        f = tmp_path / "new.kv"
        assert run("kv-put", str(f), "--keys", "k", "--values", "v")[0] == 0
        assert f.read_text() == "k=v\n"

    def test_get(self, tmp_path):
        f = tmp_path / "m.kv"
        f.write_text("k=v\n")
        assert run("kv-get", str(f), "k") == (0, "v\n", "")
        code, _, err = run("kv-get", str(f), "zz")
        assert code == 1 and "zz" in err

    def test_length_mismatch(self, tmp_path):
        f = tmp_path / "m.kv"
        f.write_text("c=0\n")
        assert run("kv-put", str(f), "--keys", "a", "b", "--values", "1")[0] == 1
        assert f.read_text() == "c=0\n"

    def test_conflicting_duplicate_keys(self, tmp_path):
        f = tmp_path / "m.kv"
        assert run("kv-put", str(f), "--keys", "a", "a", "--values", "1", "2")[0] == 1
        assert not f.exists()

    def test_bad_file(self, tmp_path):
        f = tmp_path / "bad.kv"
        f.write_text("no equals sign\n")
        assert run("kv-get", str(f), "a")[0] == 2
        assert run("kv-get", str(tmp_path / "missing.kv"), "a")[0] == 2
        assert run("kv-put", str(tmp_path / "x.kv"), "--keys", "a=b", "--values", "1")[0] == 2


class TestBst:
    @pytest.mark.parametrize("cmd", [["bst", "check"], ["bst-check"]])
    def test_check(self, cmd):
        assert run(*cmd, "--lo", "0", "--hi", "20", T0) == (0, "true\n", "")
        assert run(*cmd, "--lo", "0", "--hi", "20", "(N L 5 (N L 3 L))") == (1, "false\n", "")
        assert run(*cmd, "--lo", "0", "--hi", "20", "(N L")[0] == 2

    def test_sample_empty_range(self):
        assert run("bst", "sample", "--lo", "5", "--hi", "4", "--count", "3", "--seed", "1") == (0, "L\nL\nL\n", "")

    def test_sample_deterministic_and_valid(self):
        a = run("bst-sample", "--lo", "0", "--hi", "9", "--count", "25", "--seed", "123")
        assert a == run("bst-sample", "--lo", "0", "--hi", "9", "--count", "25", "--seed", "123")
        lines = a[1].splitlines()
        assert len(lines) == 25
        for line in lines:
            assert run("bst-check", "--lo", "0", "--hi", "9", line)[0] == 0

    def test_seed_default_and_range(self):
        assert run("bst-sample", "--lo", "0", "--hi", "9", "--count", "4") == \
            run("bst-sample", "--lo", "0", "--hi", "9", "--count", "4", "--seed", "42")
        assert run("bst-sample", "--lo", "0", "--hi", "9", "--seed", str(2**64 - 1))[0] == 0


class TestLaws:
    def test_zero_cases(self):
        code, out, _ = run("laws", "--cases", "0")
        assert code == 0 and out.endswith("suites passed\n") and "FAIL" not in out

    def test_default_run_passes(self):
        code, out, _ = run("laws", "--seed", "42", "--cases", "1000")
        assert code == 0, out
        assert "FAIL" not in out

    def test_mutated_char_fails_with_counterexample(self, monkeypatch):
        broken = lambda: biparser.mk_biparser(biparser._char_forward, lambda c: (c, ""))
        monkeypatch.setattr(biparser, "char", broken)
        code, out, _ = run("laws", "--cases", "20")
        assert code == 1
        line = next(l for l in out.splitlines() if l.startswith("FAIL\tbiparser/backward-rt"))
        assert "print then parse of" in line


class TestArgs:
    @pytest.mark.parametrize("argv", [
        ["laws", "--bogus"], ["laws", "--seed", "-1"], ["laws", "--seed", str(2**64)],
        ["laws", "--cases", "x"], ["nonsense"], [], ["bst-sample", "--lo", "a", "--hi", "3"],
    ])
    def test_usage_errors(self, argv, capsys):
        with pytest.raises(SystemExit) as e:
            cli.main(argv, out=io.StringIO(), err=io.StringIO())
        assert e.value.code == 2
        assert "usage" in capsys.readouterr().err


def test_module_entry_point_utf8():
    r = subprocess.run([sys.executable, "-m", "profmonad", "encode", "é中🙂"], capture_output=True)
    assert r.returncode == 0
    assert r.stdout == "3 é中🙂\n".encode("utf-8")
