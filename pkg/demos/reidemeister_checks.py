"""
Invariance under Reidemeister moves
===================================

The counting invariant and the bracket quiver of equivalent diagrams agree.
The Alexander biquandle on Z_5 with t=2, s=3 has a nontrivial over
operation, which is what makes the kink a real test of the crossing rule.
"""

from collections import Counter

from bbquiver import (Modular, alexander_biquandle, bracket_values, build_quiver,
                      counting_invariant, endomorphisms, enumerate_colorings, from_braid,
                      indegree_polynomial, load_biquandle, load_bracket, load_diagrams,
                      quivers_isomorphic)

A = alexander_biquandle(Modular(5), 2, 3)
unknots = [from_braid([], 1), from_braid([1], 2), from_braid([-1], 2), from_braid([1, -2], 3)]
print("unknot colorings:", [counting_invariant(d, A) for d in unknots])

pairs = {d.name: d for d in load_diagrams("equivalent.pd")}
X = load_biquandle("hopf_z3.bq")
beta = load_bracket("hopf_z3.br", X)
S = endomorphisms(X)

for k in ("trefoil", "unknot", "hopf"):
    a, b = pairs[k + "_a"], pairs[k + "_b"]
    qa, qb = build_quiver(a, X, S, beta), build_quiver(b, X, S, beta)
    same = indegree_polynomial(qa) == indegree_polynomial(qb) and quivers_isomorphic(qa, qb)
    print(f"{k:8s} {a.n_crossings} vs {b.n_crossings} crossings,",
          "counts", counting_invariant(a, A), counting_invariant(b, A),
          "| quivers agree:", same)

# the Jones specialisation: one-element biquandle, A = q, B = q^-1
J = load_biquandle("jones.bq")
jb = load_bracket("jones.br", J)
t = pairs["trefoil_a"]
for d in (t, t.mirror()):
    print(Counter(v.key() for v in bracket_values(d, enumerate_colorings(d, J), jb)))
