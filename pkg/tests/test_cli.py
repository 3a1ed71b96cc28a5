import io
import subprocess
import sys

import pytest

from endw.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_compose():
    code, out, _ = run("compose", "x1 -> x1+x2; x2 -> x2", "x1 -> x1^2; x2 -> 3")
    assert code == 0
    assert out == "x1 -> x1^2 + 2*x1*x2 + x2^2; x2 -> 3\n"


def test_flags_before_or_after_the_command():
    a = run("--kind", "assoc", "compose", "x1 -> x1*x2; x2 -> x2", "x1 -> x2; x2 -> x1")
    b = run("compose", "x1 -> x1*x2; x2 -> x2", "x1 -> x2; x2 -> x1", "--kind", "assoc")
    assert a == b
    assert a[1] == "x1 -> x2; x2 -> x1*x2\n"


def test_conjugate_by_mirror():
    code, out, _ = run("conjugate", "mirror", "x1 -> x1*x2; x2 -> x2", "--kind", "assoc")
    assert code == 0
    assert out.splitlines() == ["mu: linear(1,0) . alpha(id) . auto[id] . mirror^1", "x1 -> x2*x1; x2 -> x2"]


def test_normalize():
    code, out, _ = run("normalize", "auto[elem 1 s*x2] . alpha(conj)", "--field", "qsqrt:2")
    assert code == 0
    assert out == "linear(1,0) . alpha(conj) . auto[elem 1 -s*x2] . mirror^0\n"


@pytest.mark.parametrize("flags", [["--kind", "comm"], ["--kind", "assoc", "--vars", "3", "--field", "qsqrt:-1"]])
def test_table_decompose_round_trip(tmp_path, flags):
    path = tmp_path / "table.txt"
    code, _, _ = run("table", "-o", str(path), "--seed", "9", *flags)
    assert code == 0
    text = path.read_text(encoding="utf-8")
    source = text.splitlines()[0].removeprefix("# source: ")
    code, out, _ = run("decompose", str(path), *flags)
    assert code == 0
    assert f"canonical: {source}" in out.splitlines()
    assert out.splitlines()[-1] == "violations: 0"


def test_decompose_failures(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("0 => 0\n1 => 1\nx1 => x1 + 1\nx2 => x2\nx1*x2 => x1*x2\n", encoding="utf-8")
    code, out, _ = run("decompose", str(path))
    assert code == 1
    assert "violation: x1*x2" in out
    path.write_text("0 => 0\n1 => 0\n", encoding="utf-8")
    code, out, _ = run("decompose", str(path))
    assert code == 1 and out.startswith("FAIL decompose")
    path.write_text("0 => 0\nnonsense\n", encoding="utf-8")
    assert run("decompose", str(path))[0] == 2
    assert run("decompose", str(tmp_path / "missing.txt"))[0] == 2


def test_ideal_member():
    code, out, _ = run("ideal", "member", "--phi", "elem 1 x2^2", "(x1+x2^2)^2 - 5*(x1+x2^2)")
    assert code == 0 and out.splitlines() == ["generator: x2^2 + x1", "member: true"]
    code, out, _ = run("ideal", "member", "--phi", "elem 1 x2^2", "x1 + x2^2 + x2")
    assert out.splitlines()[-1] == "member: false"
    assert run("ideal", "member", "--index", "3", "x1")[0] == 2


def test_verify_lemma42():
    code, out, _ = run("verify", "lemma42")
    assert code == 0
    assert "PASS lemma42 solve.q {(1,0),(0,1)}" in out.splitlines()
    assert "PASS lemma42 solve.qsqrt:2 {(1,0),(0,1)}" in out.splitlines()


def test_verify_thm2_commutative():
    code, out, _ = run("verify", "thm2", "--kind", "comm", "--vars", "2")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for ln in lines if ".linear" in ln and ln.startswith("PASS")) == 20
    assert any(ln.startswith("PASS thm2 comm.square central-nonbijective: collision") for ln in lines)
    assert not any(" assoc." in ln for ln in lines)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nosuch"],
        ["--field", "qsqrt:4", "verify", "lemma42"],
        ["--vars", "0", "verify", "lemma42"],
        ["--max-degree", "0", "verify", "lemma42"],
        ["compose", "x1 -> x1 x2; x2 -> x2", "x1 -> x1; x2 -> x2"],
        ["compose", "x1 -> x3; x2 -> x2", "x1 -> x1; x2 -> x2"],
        ["normalize", "mirror"],
        ["normalize", "alpha(conj)"],
        ["conjugate", "auto[elem 1 x1]", "x1 -> x1; x2 -> x2"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert err.startswith("error:")


def test_degree_cap_is_reported():
    code, _, err = run("--max-degree", "3", "compose", "x1 -> x1^2; x2 -> x2", "x1 -> x1^2; x2 -> x2")
    assert code == 2 and "degree" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "endw", "normalize", "mirror . mirror", "--kind", "assoc"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "linear(1,0) . alpha(id) . auto[id] . mirror^0\n"
