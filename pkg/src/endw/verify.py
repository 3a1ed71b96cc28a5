"""Seeded verification suites, one per statement about Aut(End(W)).

Each suite yields :class:`Check` records that print as
``PASS|FAIL <suite> <case-id> [witness]``.  A suite draws everything from a
``random.Random`` seeded by the session seed and the suite name, so a given
seed always produces the same report.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from typing import Callable, Iterator

from .autos import TameAutomorphism, as_endomorphism, invert
from .endaut import (
    CanonicalQuasiInner,
    Linear,
    OracleTable,
    UnaryPolynomial,
    apply_bijection,
    centrality_probe,
    conjugate,
    decompose_blackbox,
    law_checks,
    law_probes,
    normalize,
    solve_product_coefficients,
    standard_probes,
    base_image_check,
)
from .endo import Endomorphism, compose, identity, is_constant, vanishes_on_grid
from .freealg import Algebra, Kind
from .galois import PrincipalBasicIdeal, in_double_prime, killing_endomorphism, random_prime_member, sample_ideal
from .sampling import (
    random_bijection_word,
    random_canonical,
    random_constant_endomorphism,
    random_element,
    random_endomorphism,
    random_scalar,
    random_tame,
)
from .scalars import Field, FieldAutomorphism

__all__ = ["Check", "SessionConfig", "SUITES", "run_suite", "run_all", "format_report"]

# conjugating by phi multiplies degrees by deg(phi) * deg(phi^-1); composing two
# conjugates multiplies again, so samples are drawn under this degree budget
DEGREE_BUDGET = 36


@dataclass(frozen=True)
class Check:
    suite: str
    case: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.suite} {self.case}"
        return f"{head} {self.witness}" if self.witness else head


@dataclass(frozen=True)
class SessionConfig:
    """Flags shared by every command; ``None`` lets a suite use its own default."""

    field: Field | None = None
    kind: Kind | None = None
    n: int | None = None
    max_degree: int = 12
    seed: int = 0

    def __post_init__(self):
        if self.n is not None and self.n < 1:
            raise ValueError("--vars must be at least 1")
        if self.max_degree < 1:
            raise ValueError("--max-degree must be at least 1")

    def algebra(self, cap: int | None = None) -> Algebra:
        return Algebra(self.kind or Kind.COMMUTATIVE, self.n or 2, self.field or Field(), cap or self.max_degree)

    def rng(self, suite: str) -> random.Random:
        return random.Random(self.seed * 1_000_003 + zlib.crc32(suite.encode()))

    def kinds(self, default=(Kind.COMMUTATIVE, Kind.ASSOCIATIVE)):
        return (self.kind,) if self.kind else default

    def arities(self, default=(2, 3)):
        return (self.n,) if self.n else default

    def fields(self, default=None):
        return (self.field,) if self.field else (default or (Field(2),))


def _pick_algebra(rng, cfg: SessionConfig, cap: int, kinds=None, arities=None, fields=None) -> Algebra:
    kind = rng.choice(cfg.kinds(kinds or (Kind.COMMUTATIVE, Kind.ASSOCIATIVE)))
    n = rng.choice(cfg.arities(arities or (2, 3)))
    field = rng.choice(cfg.fields(fields))
    return Algebra(kind, n, field, max(cap, cfg.max_degree))


def _phi_degree(mu: CanonicalQuasiInner) -> int:
    fwd = as_endomorphism(mu.phi).degree
    back = as_endomorphism(invert(mu.phi)).degree
    return int(max(fwd, 1) * max(back, 1))


def _budget_pair(rng, dphi: int) -> tuple[int, int]:
    while True:
        ds, dt = rng.randint(1, 3), rng.randint(1, 3)
        if dphi * dphi * ds * dt <= DEGREE_BUDGET:
            return ds, dt


# -- suites -------------------------------------------------------------------


def suite_semigroup(cfg: SessionConfig, cases: int = 100) -> Iterator[Check]:
    """Conjugation by a canonical bijection is an automorphism of End(W) that preserves constants."""
    rng = cfg.rng("semigroup")
    for c in range(cases):
        alg = _pick_algebra(rng, cfg, DEGREE_BUDGET)
        mu = random_canonical(rng, alg)
        ds, dt = _budget_pair(rng, _phi_degree(mu))
        s = random_constant_endomorphism(rng, alg) if c % 4 == 3 else random_endomorphism(rng, alg, ds, 3)
        t = random_endomorphism(rng, alg, dt, 3)
        cid = f"c{c:03d}"
        lhs = conjugate(mu, compose(s, t))
        rhs = compose(conjugate(mu, s), conjugate(mu, t))
        yield Check("semigroup", f"{cid}.hom", lhs == rhs, "" if lhs == rhs else f"mu={mu} s=({s}) t=({t})")
        ident = conjugate(mu, identity(alg))
        yield Check("semigroup", f"{cid}.id", ident == identity(alg), "" if ident == identity(alg) else f"mu={mu} gives ({ident})")
        cs = conjugate(mu, s)
        same = is_constant(s) == is_constant(cs)
        yield Check("semigroup", f"{cid}.const", same, "" if same else f"mu={mu} s=({s}) s^mu=({cs})")
        back = conjugate(mu.inverse(), cs)
        yield Check("semigroup", f"{cid}.inverse", back == s, "" if back == s else f"mu={mu} s=({s})")


def suite_mirror(cfg: SessionConfig, samples: int = 50) -> Iterator[Check]:
    """Conjugation by the mirror map is not induced by any mirror-free canonical form."""
    rng = cfg.rng("mirror")
    field = cfg.field or Field(2)
    alg = Algebra(Kind.ASSOCIATIVE, 2, field, max(cfg.max_degree, DEGREE_BUDGET))
    x1, x2 = alg.gens()
    s = Endomorphism(alg, [x1 * x2, x2])
    beta = CanonicalQuasiInner(Linear.identity(field), FieldAutomorphism.IDENTITY, TameAutomorphism.identity(alg), True)
    target = conjugate(beta, s)
    yield Check("mirror", "beta", target == Endomorphism(alg, [x2 * x1, x2]), f"s^beta = ({target})")
    laws = law_checks(OracleTable.from_map(beta, alg, law_probes(alg)))
    mult = laws["multiplicativity"]
    anti = mult.status == "fail" and any("(x1, x2)" in w and "anti-multiplicative" in w for w in mult.witnesses)
    yield Check("mirror", "beta.laws", anti and laws["additivity"].passed, mult.witnesses[0] if mult.witnesses else "no witness")
    for k in range(samples):
        mu = random_canonical(rng, alg, mirror=False)
        other = conjugate(mu, s)
        table_laws = law_checks(OracleTable.from_map(mu, alg, law_probes(alg)))
        ok = other != target and table_laws["multiplicativity"].passed
        yield Check("mirror", f"m{k:02d}", ok, "" if ok else f"mu={mu}")


def suite_lemma31(cfg: SessionConfig, witnesses: int = 25, per: int = 4) -> Iterator[Check]:
    """For basic u, membership in <u>'' equals membership in <u>."""
    rng = cfg.rng("lemma31")
    for w in range(witnesses):
        alg = _pick_algebra(rng, cfg, 24)
        phi = random_tame(rng, alg, max_length=2)
        i = rng.randint(1, alg.n)
        ideal = PrincipalBasicIdeal.of(phi, i)
        u = ideal.generator
        sample = [killing_endomorphism(ideal)] + [random_prime_member(rng, ideal) for _ in range(19)]
        for k in range(per):
            g = random_element(rng, alg, 2, 2)
            f = g * u
            if alg.is_associative:
                f = f + u * random_element(rng, alg, 2, 2)
            ok = in_double_prime(f, ideal) and sample_ideal(sample, f)
            yield Check("lemma31", f"w{w:02d}.member{k}", ok, "" if ok else f"u={u} f={f}")
        for k in range(per):
            base = random_element(rng, alg, 2, 2, avoid=i)
            if base.is_zero():
                base = alg.one()
            F = base + alg.x(i) * random_element(rng, alg, 2, 2)
            f = as_endomorphism(phi)(F)
            ok = not in_double_prime(f, ideal) and not sample_ideal(sample, f)
            yield Check("lemma31", f"w{w:02d}.nonmember{k}", ok, "" if ok else f"u={u} f={f}")


def _table_cases(rng, cfg, count, mirror):
    for k in range(count):
        alg = _pick_algebra(rng, cfg, DEGREE_BUDGET)
        mu = random_canonical(rng, alg, mirror=mirror if alg.is_associative else False)
        yield k, alg, mu, OracleTable.from_map(mu, alg, law_probes(alg))


def suite_lemma32_33(cfg: SessionConfig, cases: int = 20) -> Iterator[Check]:
    """Normalized mu(a*x) is proportional to mu(x) and equals mu(a)*mu(x)."""
    rng = cfg.rng("lemma32-33")
    for k, alg, mu, table in _table_cases(rng, cfg, cases, None):
        laws = law_checks(table)
        for name in ("scalar-proportional", "scalar-multiplicative"):
            r = laws[name]
            yield Check("lemma32-33", f"t{k:02d}.{name}", r.passed, "; ".join(r.witnesses) if not r.passed else "")
    alg = Algebra(Kind.COMMUTATIVE, 2, cfg.field or Field(2))
    table = OracleTable.from_map(lambda f: f, alg, law_probes(alg))
    planted = table.with_entry(alg.x(1).scale(alg.field(2)), alg.x(1).scale(alg.field(2)) + alg.x(2))
    r = law_checks(planted)["scalar-proportional"]
    yield Check("lemma32-33", "planted", r.status == "fail", r.witnesses[0] if r.witnesses else "not detected")


def suite_lemma34(cfg: SessionConfig, cases: int = 20) -> Iterator[Check]:
    """Normalized mu is additive."""
    rng = cfg.rng("lemma34")
    for k, alg, mu, table in _table_cases(rng, cfg, cases, None):
        r = law_checks(table)["additivity"]
        yield Check("lemma34", f"t{k:02d}", r.passed, "; ".join(r.witnesses) if not r.passed else "")
    alg = Algebra(Kind.COMMUTATIVE, 2, cfg.field or Field(2))
    table = OracleTable.from_map(lambda f: f, alg, law_probes(alg))
    x1, x2 = alg.gens()
    planted = table.with_entry(x1 + x2, x1 + x2 + 1)
    r = law_checks(planted)["additivity"]
    yield Check("lemma34", "planted", r.status == "fail", r.witnesses[0] if r.witnesses else "not detected")


def suite_lemma41(cfg: SessionConfig, cases: int = 20) -> Iterator[Check]:
    """Commutative case: normalized mu is multiplicative; constants separate polynomials."""
    rng = cfg.rng("lemma41")
    for k, alg, mu, table in _table_cases(rng, cfg.__class__(cfg.field, Kind.COMMUTATIVE, cfg.n, cfg.max_degree, cfg.seed), cases, False):
        r = law_checks(table)["multiplicativity"]
        yield Check("lemma41", f"t{k:02d}", r.passed, "; ".join(r.witnesses) if not r.passed else "")
    for k in range(cases):
        n = rng.choice(cfg.arities())
        alg = Algebra(Kind.COMMUTATIVE, n, cfg.field or Field(2))
        f = random_element(rng, alg, 3, 3)
        if f.is_zero():
            continue
        ok = not vanishes_on_grid(f)
        yield Check("lemma41", f"grid{k:02d}", ok, "" if ok else f"{f} vanishes on the grid")


def suite_lemma42(cfg: SessionConfig, cases: int = 20) -> Iterator[Check]:
    """a = a^2, b = b^2, ab = 0, a + b = 1 has exactly the solutions (1,0), (0,1)."""
    for field in cfg.fields((Field(), Field(2))):
        sols = solve_product_coefficients(field)
        expected = {(field.one(), field.zero()), (field.zero(), field.one())}
        text = "{" + ",".join(f"({a},{b})" for a, b in sorted(sols, key=lambda p: (-p[0].a, p[1].a))) + "}"
        yield Check("lemma42", f"solve.{field}", sols == expected, text)
    rng = cfg.rng("lemma42")
    assoc = cfg.__class__(cfg.field, Kind.ASSOCIATIVE, cfg.n, cfg.max_degree, cfg.seed)
    for k, alg, mu, table in _table_cases(rng, assoc, cases, None):
        r = law_checks(table)["product-dichotomy"]
        yield Check("lemma42", f"t{k:02d}", r.passed, "; ".join(r.witnesses) if not r.passed else "")


def suite_thm1(cfg: SessionConfig, cases: int = 50) -> Iterator[Check]:
    """Canonical bijections send bases to bases."""
    rng = cfg.rng("thm1")
    for k in range(cases):
        alg = _pick_algebra(rng, cfg, DEGREE_BUDGET)
        mu = random_canonical(rng, alg)
        base = random_tame(rng, alg, max_length=2)
        ok = base_image_check(mu, base)
        yield Check("thm1", f"b{k:02d}", ok, "" if ok else f"mu={mu} base={base}")


def suite_thm2(cfg: SessionConfig, linear: int = 20, planted: int = 10) -> Iterator[Check]:
    """Central bijections are linear: linear maps pass, u^2 is not bijective, non-central tables are caught."""
    rng = cfg.rng("thm2")
    for kind in cfg.kinds():
        alg = Algebra(kind, cfg.n or 2, cfg.field or Field(2), cfg.max_degree)
        tag = kind.value
        for k in range(linear):
            c = random_scalar(rng, alg.field, nonzero=True)
            d = random_scalar(rng, alg.field)
            r = UnaryPolynomial((d, c))
            v = centrality_probe(r, alg)
            yield Check("thm2", f"{tag}.linear{k:02d}", v.verdict == "central-linear", f"r(u) = {r}: {v.verdict}")
        v = centrality_probe(UnaryPolynomial.of(alg.field, 0, 0, 1), alg)
        ok = v.verdict == "central-nonbijective" and v.witness is not None and v.witness.startswith("collision")
        yield Check("thm2", f"{tag}.square", ok, f"{v.verdict}: {v.witness}")
        if alg.n < 2:
            continue
        for k in range(planted):
            table = _planted_noncentral(rng, alg)
            v = centrality_probe(table, alg, seed=k)
            ok = v.verdict == "not-central" and v.witness is not None
            yield Check("thm2", f"{tag}.planted{k:02d}", ok, v.witness or v.verdict)


def _planted_noncentral(rng, alg: Algebra) -> OracleTable:
    """Identity on probes except mu(x1) = x1 + (a term involving another generator)."""
    probes = standard_probes(alg, products=False)
    table = OracleTable.from_map(lambda f: f, alg, probes)
    # one nonconstant term free of x1, so mu moves x1 off the line through it
    extra = random_element(rng, alg, 2, 1, min_degree=1, avoid=1)
    return table.with_entry(alg.x(1), alg.x(1) + extra)


def _monomial_agreement(a, b, alg: Algebra, degree: int = 4) -> str | None:
    for m in alg.monomials_up_to(degree):
        f = alg.monomial(m)
        if a(f) != b(f):
            return str(f)
    return None


def _decomposition_suite(name: str, kind: Kind, cfg: SessionConfig, cases: int, words: int) -> Iterator[Check]:
    rng = cfg.rng(name)
    for k in range(cases):
        n = rng.choice(cfg.arities())
        field = rng.choice(cfg.fields())
        alg = Algebra(kind, n, field, max(cfg.max_degree, DEGREE_BUDGET))
        mu = random_canonical(rng, alg)
        table = OracleTable.from_map(mu, alg, standard_probes(alg), witnesses=[mu.phi])
        rep = decompose_blackbox(table)
        got = rep.canonical
        parts = (got.linear == mu.linear, got.alpha is mu.alpha, got.mirror == mu.mirror, got.phi.same_action(mu.phi))
        ok = all(parts) and rep.ok
        bad = _monomial_agreement(got, mu, alg) if ok else None
        ok = ok and bad is None
        yield Check(name, f"decompose{k:02d}", ok, "" if ok else f"source={mu} recovered={got} at={bad}")
    for k in range(words):
        n = rng.choice(cfg.arities())
        field = rng.choice(cfg.fields())
        alg = Algebra(kind, n, field, max(cfg.max_degree, DEGREE_BUDGET))
        w = random_bijection_word(rng, alg)
        canon = normalize(w)
        bad = None
        for _ in range(50):
            f = random_element(rng, alg, 4, 4)
            if apply_bijection(w, f) != canon(f):
                bad = f
                break
        yield Check(name, f"normalize{k:02d}", bad is None, "" if bad is None else f"word={w} f={bad}")
    # linear parts do not change the induced automorphism
    alg = Algebra(kind, cfg.n or 2, cfg.field or Field(2), max(cfg.max_degree, DEGREE_BUDGET))
    mu = random_canonical(rng, alg)
    other = CanonicalQuasiInner(Linear(alg.field(3), alg.field(-5)), mu.alpha, mu.phi, mu.mirror)
    for k in range(20):
        s = random_endomorphism(rng, alg, 1 if _phi_degree(mu) > 1 else 2, 2)
        ok = conjugate(mu, s) == conjugate(other, s)
        yield Check(name, f"linear{k:02d}", ok, "" if ok else f"s=({s})")


def suite_thm3(cfg: SessionConfig, cases: int = 25, words: int = 50) -> Iterator[Check]:
    """Commutative case: every bijection word is semi-inner; tables decompose back to their source."""
    return _decomposition_suite("thm3", Kind.COMMUTATIVE, cfg, cases, words)


def suite_thm4(cfg: SessionConfig, cases: int = 25, words: int = 50) -> Iterator[Check]:
    """Associative case: bijection words are semi-inner times a mirror power; tables decompose back."""
    return _decomposition_suite("thm4", Kind.ASSOCIATIVE, cfg, cases, words)


SUITES: dict[str, Callable[[SessionConfig], Iterator[Check]]] = {
    "semigroup": suite_semigroup,
    "mirror": suite_mirror,
    "lemma31": suite_lemma31,
    "lemma32-33": suite_lemma32_33,
    "lemma34": suite_lemma34,
    "lemma41": suite_lemma41,
    "lemma42": suite_lemma42,
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "thm3": suite_thm3,
    "thm4": suite_thm4,
}


def run_suite(name: str, cfg: SessionConfig) -> list[Check]:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return list(SUITES[name](cfg))


def run_all(cfg: SessionConfig) -> list[Check]:
    out = []
    for name in SUITES:
        out.extend(run_suite(name, cfg))
    return out


def format_report(checks: list[Check]) -> str:
    lines = [c.line() for c in checks]
    failed = sum(1 for c in checks if not c.ok)
    lines.append(f"{len(checks) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"
