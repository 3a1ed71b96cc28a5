"""
Rewriting to canonical form
===========================

Any word in the building blocks can be pushed into the shape
linear o alpha o phi o mirror^e.  The rewriting moves field and mirror maps
to the right through the automorphism, twisting it on the way.
"""

import random

from endw import Algebra, Field, Kind, apply_bijection, normalize, parse_bijection_word
from endw.sampling import random_element

A = Algebra(Kind.ASSOCIATIVE, 2, Field(2), 30)
word = parse_bijection_word("mirror . auto[elem 1 s*x2^2] . linear(3,0) . alpha(conj) . mirror . auto[elem 2 x1]", A)
canon = normalize(word)
print("word     :", word)
print("canonical:", canon)

# %%
# Both act identically on random elements.
rng = random.Random(0)
for _ in range(5):
    f = random_element(rng, A, 2, 2)
    assert apply_bijection(word, f) == canon(f)
    print(f"{str(f):30} -> {canon(f)}")
