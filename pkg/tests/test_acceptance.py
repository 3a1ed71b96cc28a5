"""Acceptance criteria, each at exact equality.

Every test prints one ``PASS|FAIL criterion-<k> ...`` line before asserting,
so ``pytest -v -s`` (or the captured output) doubles as a report.
"""

import random
import subprocess
import sys
import time

import pytest

from endw import (
    Algebra,
    Endomorphism,
    Field,
    Kind,
    OracleTable,
    apply_bijection,
    compose,
    conjugate,
    conjugate_by_definition,
    decompose_blackbox,
    identity,
    is_constant,
    normalize,
    solve_product_coefficients,
    standard_probes,
)
from endw.sampling import random_bijection_word, random_canonical, random_element
from endw.verify import SessionConfig, run_suite

Q2 = Field(2)
CFG = SessionConfig(seed=0)


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion-{k} {detail}")

    return emit


@pytest.fixture(scope="module")
def semigroup_run():
    start = time.perf_counter()
    checks = run_suite("semigroup", CFG)
    return checks, time.perf_counter() - start


def _failed(checks):
    return [c.line() for c in checks if not c.ok]


def test_criterion_1_semigroup_automorphism(semigroup_run, report):
    checks, elapsed = semigroup_run
    core = [c for c in checks if c.case.endswith((".hom", ".id"))]
    cases = {c.case.split(".")[0] for c in core}
    bad = _failed(core)
    ok = len(cases) == 100 and not bad and elapsed < 30
    report(1, ok, f"{len(cases)} cases, {len(core)} hom/id checks, {len(bad)} failed, {elapsed:.1f}s")
    assert not bad, bad[:3]
    assert len(cases) == 100 and elapsed < 30


def test_criterion_1_oracle_cross_check():
    # the componentwise conjugation formula against mu o s o mu^-1 evaluated directly
    rng = random.Random(101)
    for k in range(40):
        alg = Algebra(rng.choice(list(Kind)), rng.choice([2, 3]), Q2, 36)
        mu = random_canonical(rng, alg, max_nonlinear=0)
        s = Endomorphism(alg, [random_element(rng, alg, 3, 3) for _ in range(alg.n)])
        t = Endomorphism(alg, [random_element(rng, alg, 3, 3) for _ in range(alg.n)])
        assert conjugate(mu, s) == conjugate_by_definition(mu, s)
        assert conjugate_by_definition(mu, compose(s, t)) == compose(
            conjugate_by_definition(mu, s), conjugate_by_definition(mu, t)
        )
        assert conjugate_by_definition(mu, identity(alg)) == identity(alg)


def test_criterion_2_product_coefficients(report):
    got = {str(f): solve_product_coefficients(f) for f in (Field(), Q2)}
    ok = all(sols == {(f.one(), f.zero()), (f.zero(), f.one())} for f, sols in zip((Field(), Q2), got.values()))
    text = "; ".join(f"{name}: " + ",".join(f"({a},{b})" for a, b in sorted(s, key=lambda p: -p[0].a)) for name, s in got.items())
    report(2, ok, text)
    assert ok


def test_criterion_3_decomposition_round_trip(report):
    rng = random.Random(303)
    bad = []
    for k in range(50):
        kind = Kind.COMMUTATIVE if k % 2 == 0 else Kind.ASSOCIATIVE
        alg = Algebra(kind, rng.choice([2, 3]), Q2, 36)
        mu = random_canonical(rng, alg)
        table = OracleTable.from_map(mu, alg, standard_probes(alg))
        got = decompose_blackbox(table, witnesses=[mu.phi]).canonical
        parts_ok = (
            got.linear == mu.linear
            and got.alpha is mu.alpha
            and got.mirror == mu.mirror
            and list(got.phi.word) == list(mu.phi.word)
        )
        agree = all(got(alg.monomial(m)) == mu(alg.monomial(m)) for m in alg.monomials_up_to(4))
        if not (parts_ok and agree):
            bad.append(f"case {k}: {mu} -> {got}")
    report(3, not bad, f"50 tables, {50 - len(bad)} recovered exactly")
    assert not bad, bad[:3]


def test_criterion_3_probe_set_is_exact():
    alg = Algebra(Kind.ASSOCIATIVE, 2, Q2)
    keys = {str(p) for p in standard_probes(alg)}
    assert keys == {"0", "1", "x1", "x2", "s", "x1*x2", "x2*x1"}


def test_criterion_4_lemma31(report):
    checks = run_suite("lemma31", CFG)
    members = [c for c in checks if ".member" in c.case]
    non = [c for c in checks if ".nonmember" in c.case]
    witnesses = {c.case.split(".")[0] for c in checks}
    bad = _failed(checks)
    ok = len(witnesses) == 25 and len(members) == 100 and len(non) == 100 and not bad
    report(4, ok, f"{len(witnesses)} witnesses, {len(members)} members, {len(non)} non-members, {len(bad)} failed")
    assert ok, bad[:3]


def test_criterion_5_central_bijections(report):
    checks = run_suite("thm2", CFG)
    bad = _failed(checks)
    linear = [c for c in checks if ".linear" in c.case]
    square = [c for c in checks if c.case.endswith(".square")]
    planted = [c for c in checks if ".planted" in c.case]
    witnessed = all("collapse" in c.witness or "one-slot" in c.witness or "random" in c.witness for c in planted)
    ok = not bad and len(linear) == 40 and len(square) == 2 and len(planted) == 20 and witnessed
    report(5, ok, f"{len(linear)} linear, {len(square)} square, {len(planted)} planted (both kinds), {len(bad)} failed")
    assert ok, bad[:3]


def test_criterion_6_mirror_separation(report):
    checks = run_suite("mirror", CFG)
    bad = _failed(checks)
    samples = [c for c in checks if c.case.startswith("m")]
    laws = next(c for c in checks if c.case == "beta.laws")
    ok = not bad and len(samples) == 50 and "anti-multiplicative" in laws.witness
    report(6, ok, f"50 mirror-free forms separated; witness {laws.witness}")
    assert ok, bad[:3]


def test_criterion_7_normalize_soundness(report):
    rng = random.Random(707)
    bad = 0
    for k in range(100):
        alg = Algebra(Kind.COMMUTATIVE if k < 50 else Kind.ASSOCIATIVE, rng.choice([2, 3]), Q2, 36)
        w = random_bijection_word(rng, alg, max_length=5)
        c = normalize(w)
        for _ in range(50):
            f = random_element(rng, alg, 4, 4)
            if apply_bijection(w, f) != c(f):
                bad += 1
                break
    linear = [c for suite in ("thm3", "thm4") for c in run_suite(suite, CFG) if ".linear" in "." + c.case]
    lin_bad = _failed(linear)
    ok = bad == 0 and len(linear) == 40 and not lin_bad
    report(7, ok, f"100 words x 50 elements, {bad} disagreements; linear invariance {len(linear) - len(lin_bad)}/{len(linear)}")
    assert ok


def test_criterion_8_constancy(semigroup_run, report):
    checks, _ = semigroup_run
    const = [c for c in checks if c.case.endswith(".const")]
    bad = _failed(const)
    ok = len(const) == 100 and not bad
    report(8, ok, f"{len(const)} cases, {len(bad)} failed")
    assert ok, bad[:3]


def test_criterion_8_sample_contains_constants():
    rng = random.Random(808)
    alg = Algebra(Kind.ASSOCIATIVE, 2, Q2, 36)
    mu = random_canonical(rng, alg, mirror=True)
    c = Endomorphism(alg, [alg.scalar(Q2(1, 1)), alg.scalar(Q2(-3))])
    assert is_constant(conjugate(mu, c))
    assert not is_constant(conjugate(mu, identity(alg)))


def test_criterion_9_full_battery(report):
    cmd = [sys.executable, "-m", "endw", "verify", "all", "--seed", "0"]
    start = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True, check=False)
    elapsed = time.perf_counter() - start
    second = subprocess.run(cmd, capture_output=True, check=False)
    stable = first.stdout == second.stdout
    ok = first.returncode == 0 and second.returncode == 0 and stable and elapsed < 120
    tail = first.stdout.decode().strip().splitlines()[-1] if first.stdout else "no output"
    report(9, ok, f"exit {first.returncode}, {elapsed:.1f}s, byte-stable={stable}, {tail}")
    assert ok, first.stderr.decode()[-2000:]
