"""
The knot table
==============

In-degree quiver polynomials of the prime knots through eight crossings,
for a 4-element biquandle with eight endomorphisms and the q-bracket with
coefficients 1 and q.

The q-bracket does not satisfy the kink axiom (its w differs between the
color classes {1, 2} and {3, 4}), so it is loaded with fixed constants and
evaluated unchecked.  The numbers below are reproducible computations on
these particular diagrams, not knot invariants.
"""

import time

from bbquiver import (build_quiver, endomorphisms, indegree_polynomial, load_biquandle,
                      load_bracket, load_diagrams, two_variable_polynomial)

X = load_biquandle("knots_q.bq")
beta = load_bracket("knots_q.br", X)
S = endomorphisms(X)
print(len(S), "endomorphisms:", " ".join(f.one_indexed().replace(" ", "") for f in S))

t0 = time.perf_counter()
for d in load_diagrams("knots_upto8.pd"):
    q = build_quiver(d, X, S, beta)
    # one term per edge, at its source; the vertex sum is this divided by |S|
    print(f"{d.name:5s}", indegree_polynomial(q, "edge").to_text())
print(f"{time.perf_counter() - t0:.1f}s")

# the two-variable polynomial tells 3_1 and 4_1 apart by shape alone
for name in ("3_1", "4_1"):
    d = load_diagrams("knots_upto8.pd", name=name)[0]
    print(name, two_variable_polynomial(build_quiver(d, X, S, beta)).to_text())
