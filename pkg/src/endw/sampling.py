"""Seeded random objects for property checks and verification suites.

Everything takes an explicit ``random.Random`` so that a seed fixes the whole
sample.  Affine generators are kept sparse (a scaled permutation plus at most
one off-diagonal entry) and nonlinear elementary generators are rationed,
because conjugating by a dense or high-degree automorphism multiplies degrees
and term counts.
"""

from __future__ import annotations

import random
from .autos import Affine, Elementary, TameAutomorphism
from .endaut import (
    AlgebraAuto,
    BijectionWord,
    CanonicalQuasiInner,
    FieldSemilinear,
    Linear,
    Mirror,
)
from .endo import Endomorphism
from .freealg import Algebra, Element
from .scalars import Field, Scalar


def random_rational(rng: random.Random, bound: int = 3, nonzero: bool = False):
    from fractions import Fraction

    while True:
        q = Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 2, 3)))
        if q or not nonzero:
            return q


def random_scalar(rng: random.Random, field: Field, nonzero: bool = False, irrational_prob: float = 0.3) -> Scalar:
    while True:
        a = random_rational(rng)
        b = random_rational(rng) if field.d is not None and rng.random() < irrational_prob else 0
        s = field(a, b)
        if s or not nonzero:
            return s


def random_monomial(rng: random.Random, alg: Algebra, degree: int, avoid: int | None = None) -> tuple:
    """Random monomial of exactly ``degree`` avoiding 1-based generator ``avoid``."""
    choices = [i for i in range(alg.n) if avoid is None or i != avoid - 1]
    if not choices:
        degree = 0
    return alg.word_monomial(rng.choice(choices) for _ in range(degree))


def random_element(
    rng: random.Random,
    alg: Algebra,
    max_degree: int = 3,
    max_terms: int = 3,
    avoid: int | None = None,
    min_degree: int = 0,
) -> Element:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = random_monomial(rng, alg, rng.randint(min_degree, max_degree), avoid)
        terms[m] = random_scalar(rng, alg.field, nonzero=True)
    return alg.from_terms(terms)


def random_endomorphism(rng: random.Random, alg: Algebra, max_degree: int = 3, max_terms: int = 3) -> Endomorphism:
    return Endomorphism(alg, [random_element(rng, alg, max_degree, max_terms) for _ in range(alg.n)])


def random_constant_endomorphism(rng: random.Random, alg: Algebra) -> Endomorphism:
    return Endomorphism(alg, [alg.scalar(random_scalar(rng, alg.field)) for _ in range(alg.n)])


def random_affine(rng: random.Random, alg: Algebra) -> Affine:
    n = alg.n
    field = alg.field
    perm = list(range(n))
    rng.shuffle(perm)
    matrix = [[field.zero()] * n for _ in range(n)]
    for i, j in enumerate(perm):
        matrix[i][j] = random_scalar(rng, field, nonzero=True, irrational_prob=0.2)
    if n > 1 and rng.random() < 0.5:
        i = rng.randrange(n)
        j = rng.choice([k for k in range(n) if k != perm[i]])
        matrix[i][j] = random_scalar(rng, field, nonzero=True, irrational_prob=0.2)
    shift = [random_scalar(rng, field) if rng.random() < 0.4 else field.zero() for _ in range(n)]
    return Affine.build(alg, matrix, shift)


def random_elementary(rng: random.Random, alg: Algebra, max_degree: int = 2, max_terms: int = 2) -> Elementary:
    i = rng.randint(1, alg.n)
    if alg.n == 1:
        return Elementary(i, alg.scalar(random_scalar(rng, alg.field, nonzero=True)))
    while True:
        f = random_element(rng, alg, max_degree, max_terms, avoid=i)
        if f:
            return Elementary(i, f)


def random_tame(
    rng: random.Random,
    alg: Algebra,
    max_length: int = 3,
    max_nonlinear: int = 1,
    elementary_degree: int = 2,
    min_length: int = 0,
) -> TameAutomorphism:
    word = []
    nonlinear = 0
    for _ in range(rng.randint(min_length, max_length)):
        if rng.random() < 0.5:
            word.append(random_affine(rng, alg))
        else:
            deg = elementary_degree if nonlinear < max_nonlinear else 1
            g = random_elementary(rng, alg, deg)
            if g.f.degree > 1:
                nonlinear += 1
            word.append(g)
    return TameAutomorphism(alg, word)


def random_linear(rng: random.Random, field: Field) -> Linear:
    return Linear(random_scalar(rng, field, nonzero=True), random_scalar(rng, field))


def random_canonical(
    rng: random.Random,
    alg: Algebra,
    mirror: bool | None = None,
    max_length: int = 3,
    max_nonlinear: int = 1,
    elementary_degree: int = 2,
) -> CanonicalQuasiInner:
    """Random ``linear o alpha o phi o mirror^e``; ``mirror=None`` draws the flag."""
    alpha = rng.choice(alg.field.automorphisms())
    if mirror is None:
        mirror = alg.is_associative and rng.random() < 0.5
    phi = random_tame(rng, alg, max_length, max_nonlinear, elementary_degree)
    return CanonicalQuasiInner(random_linear(rng, alg.field), alpha, phi, bool(mirror))


def random_bijection_word(
    rng: random.Random,
    alg: Algebra,
    max_length: int = 5,
    max_nonlinear: int = 1,
) -> BijectionWord:
    prims = []
    budget = max_nonlinear
    kinds = ["linear", "field", "auto"] + (["mirror"] if alg.is_associative else [])
    for _ in range(rng.randint(0, max_length)):
        kind = rng.choice(kinds)
        if kind == "linear":
            prims.append(random_linear(rng, alg.field))
        elif kind == "field":
            prims.append(FieldSemilinear(rng.choice(alg.field.automorphisms())))
        elif kind == "auto":
            phi = random_tame(rng, alg, max_length=2, max_nonlinear=budget)
            budget -= sum(1 for g in phi.word if isinstance(g, Elementary) and g.f.degree > 1)
            prims.append(AlgebraAuto(phi))
        else:
            prims.append(Mirror())
    return BijectionWord(alg, prims)

