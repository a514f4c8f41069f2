"""
The Hopf link, step by step
===========================

Colorings of L2a1 by a 4-element biquandle, their Z_3 bracket values, and
the quiver built from the single endomorphism (1 2).
"""

from bbquiver import (build_quiver, components, endomorphisms, enumerate_colorings,
                      evaluate_bracket, export_dot, indegree_polynomial, load_biquandle,
                      load_bracket, load_diagrams, load_maps, two_variable_polynomial, writhe)

hopf = load_diagrams("links_upto7.pd", name="L2a1")[0]
print(hopf.name, "writhe", writhe(hopf), "components", components(hopf))

X = load_biquandle("hopf_z3.bq")
beta = load_bracket("hopf_z3.br", X)  # validated on load
print("delta =", beta.delta.key(), " w =", beta.w.key())

# eight colorings, each a tuple of colors on semiarcs 1..4
for col in enumerate_colorings(hopf, X):
    print(" ", [c + 1 for c in col], "->", evaluate_bracket(hopf, col, beta).key())

phi = load_maps("hopf_z3.endo", X)
q = build_quiver(hopf, X, phi, beta)
print(indegree_polynomial(q).to_text())
print(two_variable_polynomial(q).to_text())

# with every endomorphism the quiver is larger but the link is the same
print(len(endomorphisms(X)), "endomorphisms")
print(indegree_polynomial(build_quiver(hopf, X, endomorphisms(X), beta)).to_text())

print(export_dot(q))
