"""
Central bijections
==================

A map u -> r(u) given by a one-variable polynomial commutes with every
substitution.  Only the linear ones are bijective; a table that moves x1 off
its own line fails to commute with a collapsing probe.
"""

from endw import Algebra, Field, Kind, OracleTable, UnaryPolynomial, centrality_probe, standard_probes

A = Algebra(Kind.COMMUTATIVE, 2, Field(2))
F = A.field

for r in (UnaryPolynomial.of(F, 1, 2), UnaryPolynomial.of(F, 0, 0, 1), UnaryPolynomial.of(F, 0, 1, 0, 1)):
    v = centrality_probe(r, A)
    print(f"r(u) = {r}: {v.verdict}; {v.witness}")

x1, x2 = A.gens()
table = OracleTable.from_map(lambda f: f, A, standard_probes(A, products=False)).with_entry(x1, x1 + x2)
v = centrality_probe(table, A)
print("table:", v.verdict)
print("  ", v.witness)
