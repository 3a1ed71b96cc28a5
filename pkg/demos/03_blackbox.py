"""
Recovering mu from a table of values
====================================

Given only the values of mu on 0, 1, the generators, sqrt d and the products
x_i*x_j, the pipeline strips off the linear part, reads the field
automorphism off sqrt d, matches the automorphism and decides the mirror flag
by comparing product orders.
"""

import random

from endw import Algebra, Field, Kind, OracleTable, decompose_blackbox, law_checks, standard_probes
from endw.endaut import law_probes
from endw.sampling import random_canonical

A = Algebra(Kind.ASSOCIATIVE, 2, Field(2), 30)
mu = random_canonical(random.Random(4), A, mirror=True, max_length=2)
table = OracleTable.from_map(mu, A, standard_probes(A), witnesses=[mu.phi])
print(table.dumps())

report = decompose_blackbox(table)
print("\n".join(report.lines()))
assert report.canonical == mu

# %%
# Reversal shows up in the law checks as anti-multiplicativity.
laws = law_checks(OracleTable.from_map(mu, A, law_probes(A)))
for name, result in laws.items():
    print(f"{name:22} {result.status:14} {result.witnesses[:1]}")
