import pytest
from hypothesis import given, settings, strategies as st

from bbquiver import (Modular, alexander_biquandle, apply_endomorphism, components,
                      counting_invariant, dihedral_quandle, endomorphisms, enumerate_colorings,
                      from_braid, is_coloring, load_biquandle, load_diagrams, trivial_biquandle)
from oracles import brute_force_colorings

SMALL_X = {
    "T2": trivial_biquandle(2),
    "R3": dihedral_quandle(3),
    "R4": dihedral_quandle(4),
    "Alex(Z4,3,1)": alexander_biquandle(Modular(4), 3, 1),
    "Alex(Z3,2,2)": alexander_biquandle(Modular(3), 2, 2),
    "Alex(Z5,2,3)": alexander_biquandle(Modular(5), 2, 3),
    "hopf_z3": load_biquandle("hopf_z3.bq"),
    "knots_q": load_biquandle("knots_q.bq"),
    "virtual_q": load_biquandle("virtual_q.bq"),
    "links_z6": load_biquandle("links_z6.bq"),
}


def _small_bundled():
    out = []
    for f in ("knots_upto8.pd", "links_upto7.pd", "virtual.pd", "equivalent.pd"):
        out += [d for d in load_diagrams(f) if d.n_crossings <= 3]
    return out


@pytest.mark.parametrize("xname", sorted(SMALL_X))
def test_bundled_small_diagrams_match_brute_force(xname):
    X = SMALL_X[xname]
    for d in _small_bundled():
        assert enumerate_colorings(d, X) == brute_force_colorings(d, X), d.name


@settings(max_examples=60, deadline=None)
@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=3), st.sampled_from(sorted(SMALL_X)))
def test_random_braids_match_brute_force(word, xname):
    X = SMALL_X[xname]
    d = from_braid(word, strands=3)
    assert enumerate_colorings(d, X) == brute_force_colorings(d, X)


@pytest.mark.parametrize("word", [[1], [-1]])
def test_kink_keeps_count_for_non_quandle(word):
    # x ⊳̄ y is not the identity here, so the color read off the over-strand
    # matters; the unknot must still have one coloring per element
    X = alexander_biquandle(Modular(5), 2, 3)
    assert counting_invariant(from_braid(word, strands=2), X) == 5


def test_hopf_counts(links):
    hopf = links["L2a1"]
    assert counting_invariant(hopf, trivial_biquandle(2)) == 4
    assert counting_invariant(hopf, SMALL_X["hopf_z3"]) == 8


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_biquandle_counts_components(n, links, knots):
    for d in list(links.values()) + [knots["3_1"], knots["8_19"]]:
        assert counting_invariant(d, trivial_biquandle(n)) == n ** components(d)


@pytest.mark.parametrize("xname", ["hopf_z3", "knots_q", "links_z6"])
def test_endomorphisms_preserve_colorings(xname, links):
    X = SMALL_X[xname]
    for d in (links["L2a1"], links["L6a4"]):
        cols = set(enumerate_colorings(d, X))
        for phi in endomorphisms(X):
            for c in cols:
                assert apply_endomorphism(phi, c, X=X, d=d) in cols


def test_colorings_sorted_and_valid(knots):
    X = SMALL_X["knots_q"]
    cols = enumerate_colorings(knots["8_18"], X)
    assert cols == sorted(cols)
    assert all(is_coloring(knots["8_18"], X, c) for c in cols)


def test_free_loops_trailing():
    d = from_braid([1, 1], strands=3)
    assert d.free_loops == 1
    cols = enumerate_colorings(d, trivial_biquandle(2))
    assert len(cols) == 8 and all(len(c) == d.semiarc_count + 1 for c in cols)
