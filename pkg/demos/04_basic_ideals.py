"""
Ideals of basic elements
========================

u = x1 + x2^2 belongs to the base (x1 + x2^2, x2).  Membership of f in the
ideal <u> is decided by rewriting f in that base and setting the u
coordinate to zero; the endomorphisms killing u cut out the same ideal.
"""

import random

from endw import Algebra, Elementary, Kind, PrincipalBasicIdeal, TameAutomorphism, in_double_prime, sample_ideal
from endw.galois import killing_endomorphism, random_prime_member

A = Algebra(Kind.COMMUTATIVE, 2)
x1, x2 = A.gens()
ideal = PrincipalBasicIdeal.of(TameAutomorphism(A, [Elementary(1, x2 ** 2)]), 1)
u = ideal.generator
print("u =", u)
print("killing endomorphism:", killing_endomorphism(ideal))

rng = random.Random(1)
sample = [random_prime_member(rng, ideal) for _ in range(10)]
for f in (u * u - 5 * u, u * x2 + 3 * u, u + x2, x1):
    print(f"{str(f):32} in <u>: {in_double_prime(f, ideal)!s:5}  killed by sample: {sample_ideal(sample, f)}")
