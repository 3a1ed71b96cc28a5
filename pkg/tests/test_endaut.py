import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from endw import (
    Algebra,
    AlgebraAuto,
    BijectionWord,
    CanonicalQuasiInner,
    DecompositionError,
    Elementary,
    Endomorphism,
    Field,
    FieldAutomorphism,
    FieldSemilinear,
    Kind,
    Linear,
    Mirror,
    OracleTable,
    TameAutomorphism,
    UnaryPolynomial,
    apply,
    apply_bijection,
    as_endomorphism,
    base_image_check,
    base_image_witness,
    centrality_probe,
    compose,
    conjugate,
    conjugate_by_definition,
    decompose_blackbox,
    identity,
    invert,
    law_checks,
    mirror,
    normalize,
    parse_bijection_word,
    solve_product_coefficients,
    standard_probes,
)
from endw.endaut import law_probes
from endw.sampling import random_bijection_word, random_canonical, random_element, random_endomorphism, random_tame

Q2 = Field(2)
C2 = Algebra(Kind.COMMUTATIVE, 2)
R2 = Algebra(Kind.COMMUTATIVE, 2, Q2)
A2 = Algebra(Kind.ASSOCIATIVE, 2, Q2)
CONJ = FieldAutomorphism.CONJUGATION
ID = FieldAutomorphism.IDENTITY


def canon(alg, linear=None, alpha=ID, phi=None, mirror_flag=False):
    return CanonicalQuasiInner(
        linear or Linear.identity(alg.field), alpha, phi or TameAutomorphism.identity(alg), mirror_flag
    )


def test_apply_bijection_examples():
    f = R2.parse("(1+s)*x1 + 3")
    assert apply_bijection(BijectionWord(R2, []), f) == f
    assert apply_bijection(BijectionWord(R2, [Linear(Q2(2), Q2(1))]), R2.x(1)) == R2.parse("2*x1 + 1")
    assert apply_bijection(BijectionWord(R2, [FieldSemilinear(CONJ)]), f) == R2.parse("(1-s)*x1 + 3")


def test_words_apply_right_to_left():
    w = BijectionWord(A2, [Linear(Q2(2), Q2(0)), Mirror()])
    assert apply_bijection(w, A2.parse("x1*x2 + 1")) == A2.parse("2*x2*x1 + 2")
    w = BijectionWord(A2, [Mirror(), Linear(Q2(1), Q2(0, 1))])
    assert apply_bijection(w, A2.parse("x1*x2")) == A2.parse("x2*x1 + s")


def test_mirror_rejected_in_commutative_kind():
    with pytest.raises(ValueError):
        BijectionWord(C2, [Mirror()])
    with pytest.raises(ValueError):
        canon(C2, mirror_flag=True)
    with pytest.raises(ValueError):
        Linear(Q2(0), Q2(1))


def test_conjugate_examples():
    s = Endomorphism.parse("x1 -> x1*x2; x2 -> x2", A2)
    assert conjugate(canon(A2), s) == s
    assert conjugate(canon(A2, mirror_flag=True), s) == Endomorphism.parse("x1 -> x2*x1; x2 -> x2", A2)

    x1, x2 = C2.gens()
    phi = TameAutomorphism(C2, [Elementary(1, x2 ** 2)])
    s = Endomorphism.parse("x1 -> 0; x2 -> x2", C2)
    # reference: phi o s o phi^-1 on generators, composed by hand
    by_hand = compose(Endomorphism(C2, [x1 + x2 ** 2, x2]), compose(s, Endomorphism(C2, [x1 - x2 ** 2, x2])))
    got = conjugate(canon(C2, phi=phi), s)
    assert got == by_hand == Endomorphism.parse("x1 -> -x2^2; x2 -> x2", C2)
    assert apply(got, x1 + x2 ** 2).is_zero()


def test_conjugate_accepts_words():
    w = parse_bijection_word("alpha(conj) . auto[elem 1 s*x2] . mirror", A2)
    s = Endomorphism.parse("x1 -> x1*x2 + s; x2 -> x1", A2)
    assert conjugate(w, s) == conjugate(normalize(w), s)


def test_normalize_examples():
    assert normalize(BijectionWord(A2, [Mirror(), Mirror()])) == canon(A2)
    # conj-bar applied after the automorphism becomes a twisted automorphism after conj-bar
    phi = TameAutomorphism(R2, [Elementary(1, R2.parse("s*x2"))])
    w = BijectionWord(R2, [AlgebraAuto(phi), FieldSemilinear(CONJ)])
    c = normalize(w)
    assert c.alpha is CONJ
    assert c.phi.word == (Elementary(1, R2.parse("-s*x2")),)
    for probe in ("x1", "x2", "s*x2^2"):
        f = R2.parse(probe)
        assert c(f) == apply_bijection(w, f)
    # the opposite order is already canonical
    w2 = BijectionWord(R2, [FieldSemilinear(CONJ), AlgebraAuto(phi)])
    assert normalize(w2) == canon(R2, alpha=CONJ, phi=phi)


def test_canonical_text_round_trip():
    rng = random.Random(5)
    for _ in range(20):
        c = random_canonical(rng, A2)
        text = str(c)
        assert text.startswith("linear(") and " . alpha(" in text and text.endswith(("mirror^0", "mirror^1"))
        assert CanonicalQuasiInner.parse(text, A2) == c


@pytest.mark.parametrize("kind", list(Kind))
def test_normalize_soundness(kind):
    rng = random.Random(17)
    alg = Algebra(kind, 2, Q2, 30)
    for _ in range(25):
        w = random_bijection_word(rng, alg)
        c = normalize(w)
        for _ in range(10):
            f = random_element(rng, alg, 4, 3)
            assert c(f) == apply_bijection(w, f), str(w)


@pytest.mark.parametrize("kind", list(Kind))
def test_conjugation_matches_definition(kind):
    rng = random.Random(23)
    alg = Algebra(kind, 2, Q2, 36)
    for _ in range(25):
        mu = random_canonical(rng, alg)
        s = random_endomorphism(rng, alg, 2, 2)
        assert conjugate(mu, s) == conjugate_by_definition(mu, s)


def test_conjugation_by_inverse_undoes():
    rng = random.Random(29)
    for kind in Kind:
        alg = Algebra(kind, 2, Q2, 36)
        for _ in range(10):
            mu = random_canonical(rng, alg)
            s = random_endomorphism(rng, alg, 2, 2)
            assert conjugate(mu.inverse(), conjugate(mu, s)) == s
            round_trip = normalize(BijectionWord(alg, [*mu.as_word().prims, *mu.inverse().as_word().prims]))
            assert round_trip.same_action(canon(alg))


def test_decompose_round_trip_example():
    x2 = R2.x(2)
    mu = canon(R2, Linear(Q2(2), Q2(1)), CONJ, TameAutomorphism(R2, [Elementary(1, x2 ** 2)]))
    probes = [R2.zero(), R2.one(), *R2.gens(), R2.scalar(Q2.sqrt()), R2.x(1) * x2]
    rep = decompose_blackbox(OracleTable.from_map(mu, R2, probes))
    assert rep.canonical == mu
    assert rep.ok and rep.violations == []
    assert rep.normalizer == Linear(Q2(1) / 2, Q2(-1) / 2)


def test_decompose_identity_and_mirror():
    rep = decompose_blackbox(OracleTable.from_map(lambda f: f, A2, standard_probes(A2)))
    assert rep.canonical == canon(A2)
    rep = decompose_blackbox(OracleTable.from_map(mirror, A2, standard_probes(A2)))
    assert rep.canonical == canon(A2, mirror_flag=True)


def test_decompose_errors():
    probes = standard_probes(R2)
    with pytest.raises(DecompositionError, match="mu\\(0\\) = mu\\(1\\)"):
        decompose_blackbox(OracleTable.from_map(lambda f: R2.one(), R2, probes))
    with pytest.raises(DecompositionError, match="no entry"):
        decompose_blackbox(OracleTable(R2, [(R2.zero(), R2.zero())]))
    x1, x2 = R2.gens()
    phi = TameAutomorphism(R2, [Elementary(1, x2 ** 2), Elementary(2, x1 ** 2)])
    table = OracleTable.from_map(canon(R2, phi=phi), R2, probes)
    with pytest.raises(DecompositionError, match="witness"):
        decompose_blackbox(table)
    assert decompose_blackbox(table, [phi]).canonical == canon(R2, phi=phi)
    bad = OracleTable.from_map(lambda f: f, A2, standard_probes(A2)).with_entry(A2.parse("x1*x2"), A2.parse("x1"))
    with pytest.raises(DecompositionError, match="neither"):
        decompose_blackbox(bad)
    odd = OracleTable.from_map(lambda f: f, R2, probes).with_entry(R2.scalar(Q2.sqrt()), R2.scalar(Q2(3)))
    with pytest.raises(DecompositionError, match="field automorphism"):
        decompose_blackbox(odd)


def test_decompose_reports_violations():
    table = OracleTable.from_map(lambda f: f, R2, standard_probes(R2)).with_entry(R2.parse("x1*x2"), R2.parse("x1*x2 + 1"))
    rep = decompose_blackbox(table)
    assert not rep.ok
    assert rep.violations == [(R2.parse("x1*x2"), R2.parse("x1*x2 + 1"), R2.parse("x1*x2"))]
    assert rep.lines()[-1] == "violations: 1"


def test_table_serialization():
    rng = random.Random(3)
    mu = random_canonical(rng, A2)
    table = OracleTable.from_map(mu, A2, standard_probes(A2), witnesses=[mu.phi])
    text = table.dumps()
    back = OracleTable.loads("# comment\n\n" + text, A2)
    assert back.entries == table.entries
    assert [w.word for w in back.witnesses] == [mu.phi.word]
    with pytest.raises(ValueError):
        OracleTable.loads("x1 -> x2\n", A2)


def test_solver():
    for field in (Field(), Q2):
        sols = solve_product_coefficients(field)
        assert sols == {(field.one(), field.zero()), (field.zero(), field.one())}
        for a, b in sols:
            assert a == a * a and b == b * b and not a * b and a + b == field.one()


def test_solver_against_symbolic_idempotents():
    import sympy

    a, b = sympy.symbols("a b")
    sym = sympy.solve([a - a ** 2, b - b ** 2, a * b, a + b - 1], [a, b], dict=True)
    expected = {(int(s[a]), int(s[b])) for s in sym}
    got = {(int(p), int(q)) for p, q in ((x.a, y.a) for x, y in solve_product_coefficients(Q2))}
    assert got == expected


def test_law_checks_examples():
    rng = random.Random(41)
    for alg in (R2, A2):
        mu = random_canonical(rng, alg, mirror=False)
        laws = law_checks(OracleTable.from_map(mu, alg, law_probes(alg)))
        dichotomy = laws.pop("product-dichotomy")
        assert all(r.passed for r in laws.values()), {k: r.witnesses for k, r in laws.items()}
        # both product orders coincide in the commutative kind
        assert dichotomy.status == ("pass" if alg.is_associative else "not-checkable")

    beta = canon(A2, mirror_flag=True)
    laws = law_checks(OracleTable.from_map(beta, A2, law_probes(A2)))
    for name in ("additivity", "scalar-proportional", "scalar-multiplicative", "product-dichotomy"):
        assert laws[name].passed
    mult = laws["multiplicativity"]
    assert mult.status == "fail"
    assert "(x1, x2)" in mult.witnesses[0] and "anti-multiplicative" in mult.witnesses[0]

    base = OracleTable.from_map(lambda f: f, R2, law_probes(R2))
    x1, x2 = R2.gens()
    laws = law_checks(base.with_entry(x1 + x2, x1 + x2 + 1))
    assert laws["additivity"].status == "fail"
    assert "x1 + x2" in laws["additivity"].witnesses[0]


def test_law_checks_not_checkable():
    laws = law_checks(OracleTable(R2, [(R2.zero(), R2.zero()), (R2.one(), R2.one())]))
    assert {r.status for r in laws.values()} == {"not-checkable"}


def test_centrality_examples():
    v = centrality_probe(UnaryPolynomial.of(Q2, 1, 2), R2)
    assert v.verdict == "central-linear"
    v = centrality_probe(UnaryPolynomial.of(Q2, 0, 0, 1), R2)
    assert v.verdict == "central-nonbijective"
    assert v.witness.startswith("collision") and "x1" in v.witness and "-x1" in v.witness
    assert any("x1" in note and "preimage" in note for note in v.notes)
    x1, x2 = C2.gens()
    table = OracleTable.from_map(lambda f: f, C2, standard_probes(C2, products=False)).with_entry(x1, x1 + x2)
    v = centrality_probe(table, C2)
    assert v.verdict == "not-central"
    assert "x1 -> x1; x2 -> 0" in v.witness and "x1 + x2" in v.witness
    with pytest.raises(ValueError):
        centrality_probe(UnaryPolynomial.of(Q2), R2)
    v = centrality_probe(OracleTable.from_map(lambda f: f, A2, standard_probes(A2)), A2)
    assert v.verdict == "central-linear"


def test_constant_unary_is_not_bijective():
    v = centrality_probe(UnaryPolynomial.of(Q2, 5), R2)
    assert v.verdict == "central-nonbijective"


def test_base_images():
    x1, x2 = R2.gens()
    base = TameAutomorphism(R2, [Elementary(2, x1 ** 2)])
    assert base_image_check(canon(R2), base)
    phi = TameAutomorphism(R2, [Elementary(1, x2)])
    mu = canon(R2, phi=phi)
    w = base_image_witness(mu, base)
    assert as_endomorphism(w) == compose(as_endomorphism(phi), as_endomorphism(base))
    rng = random.Random(43)
    for kind in Kind:
        alg = Algebra(kind, 2, Q2, 36)
        for _ in range(15):
            mu, base = random_canonical(rng, alg), random_tame(rng, alg, max_length=2)
            w = base_image_witness(mu, base)
            images = [mu(b) for b in as_endomorphism(base).images]
            assert list(as_endomorphism(w).images) == images
            assert compose(as_endomorphism(invert(w)), as_endomorphism(w)) == identity(alg)


@given(st.integers(0, 10 ** 6))
def test_linear_part_is_invisible(seed):
    rng = random.Random(seed)
    alg = Algebra(rng.choice(list(Kind)), 2, Q2, 36)
    mu = random_canonical(rng, alg, max_nonlinear=0)
    other = CanonicalQuasiInner(Linear(Q2(3, 1), Q2(-2)), mu.alpha, mu.phi, mu.mirror)
    s = random_endomorphism(rng, alg, 2, 2)
    assert conjugate(mu, s) == conjugate(other, s)
