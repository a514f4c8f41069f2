"""
Virtual knots
=============

Virtual crossings are simply left out of the PD code: colorings ignore them
and state circles pass straight through.  Both bundled virtual knots have
trivial Jones polynomial.  With these two codes the quiver polynomials
coincide as well; docs/orientations.md explains why the bundled 3.1 code
is suspect.
"""

from bbquiver import (bracket_values, build_quiver, endomorphisms, enumerate_colorings,
                      from_gauss_code, indegree_polynomial, load_biquandle, load_bracket,
                      load_diagrams)

X = load_biquandle("virtual_q.bq")
beta = load_bracket("virtual_q.br", X)
S = endomorphisms(X)
J = load_biquandle("jones.bq")
jb = load_bracket("jones.br", J)

for d in load_diagrams("virtual.pd"):
    jones = {v.key() for v in bracket_values(d, enumerate_colorings(d, J), jb)}
    poly = indegree_polynomial(build_quiver(d, X, S, beta), "edge")
    print(d.name, "Jones", jones, "|", poly.to_text())

# Gauss codes are accepted directly; this one is not realisable in the plane
d = from_gauss_code("O1-O2+O3-U1-U2+U3-", "gauss")
print(d)
