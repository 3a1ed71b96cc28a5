"""
Conjugating endomorphisms
=========================

A bijection mu of the algebra acts on End(W) by s -> mu o s o mu^-1.
Here mu runs through the four kinds of building blocks.
"""

from endw import Algebra, Endomorphism, Field, Kind, conjugate, is_constant, normalize, parse_bijection_word

A = Algebra(Kind.ASSOCIATIVE, 2, Field(2))
s = Endomorphism.parse("x1 -> x1*x2 + s; x2 -> x2", A)
print("s          :", s)

# %%
# Word reversal turns x1*x2 into x2*x1 inside s.
mirror = normalize(parse_bijection_word("mirror", A))
print("mirror     :", conjugate(mirror, s))

# %%
# Field conjugation flips the sign of s = sqrt 2 in every coefficient.
conj = normalize(parse_bijection_word("alpha(conj)", A))
print("alpha(conj):", conjugate(conj, s))

# %%
# An algebra automorphism is a change of coordinates.
inner = normalize(parse_bijection_word("auto[elem 1 x2^2]", A))
print("inner      :", conjugate(inner, s))

# %%
# u -> 2u + 1 commutes with every substitution, so it changes nothing.
lin = normalize(parse_bijection_word("linear(2,1)", A))
print("linear     :", conjugate(lin, s))
assert conjugate(lin, s) == s

# %%
# Constants stay constant.
c = Endomorphism.parse("x1 -> 3; x2 -> 1 - s", A)
print("constant   :", conjugate(inner, c), is_constant(conjugate(inner, c)))
