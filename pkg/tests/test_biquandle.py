import pytest
from hypothesis import given, settings, strategies as st

from bbquiver import (Biquandle, BiquandleError, BqMap, Modular, alexander_biquandle,
                      conjugation_quandle, dihedral_quandle, endomorphisms, format_biquandle,
                      is_homomorphism, load_biquandle, parse_biquandle, parse_maps,
                      trivial_biquandle, validate_biquandle)

BUNDLED = ["hopf_z3.bq", "knots_q.bq", "virtual_q.bq", "links_z6.bq", "jones.bq"]


@pytest.mark.parametrize("name", BUNDLED)
def test_bundled_biquandles_valid(name):
    X = load_biquandle(name)
    assert validate_biquandle(X.under, X.over) == []
    assert parse_biquandle(format_biquandle(X)) == X


@pytest.mark.parametrize("name,count", [("hopf_z3.bq", 8), ("knots_q.bq", 8),
                                        ("virtual_q.bq", 4), ("links_z6.bq", 8)])
def test_endomorphism_counts(name, count):
    assert len(endomorphisms(load_biquandle(name))) == count


@pytest.mark.parametrize("name", BUNDLED[:4])
def test_endomorphisms_form_a_monoid(name):
    X = load_biquandle(name)
    E = endomorphisms(X)
    assert BqMap.identity(X.n) in E
    keys = {f.images for f in E}
    for f in E:
        for g in E:
            assert f.compose(g).images in keys


def test_endomorphisms_sorted_and_exhaustive():
    X = load_biquandle("hopf_z3.bq")
    E = endomorphisms(X)
    assert [f.images for f in E] == sorted(f.images for f in E)
    import itertools
    brute = [m for m in itertools.product(range(4), repeat=4) if is_homomorphism(BqMap(m, 4), X, X)]
    assert [f.images for f in E] == brute


@given(st.integers(2, 9))
def test_dihedral_valid(n):
    X = dihedral_quandle(n)
    assert validate_biquandle(X.under, X.over) == []
    assert X.is_quandle()
    # constant maps are endomorphisms of a quandle
    assert all(is_homomorphism(BqMap.constant(n, c), X, X) for c in range(n))


@settings(max_examples=40)
@given(st.integers(2, 9), st.data())
def test_alexander_valid(n, data):
    spec = Modular(n)
    units = [u for u in range(1, n) if spec(u).is_unit()]
    t = data.draw(st.sampled_from(units))
    s = data.draw(st.sampled_from(units))
    X = alexander_biquandle(spec, t, s)
    assert validate_biquandle(X.under, X.over) == []
    for x in range(n):
        assert X.under[x][x] == X.over[x][x]


def test_alexander_rejects_non_units():
    with pytest.raises(BiquandleError):
        alexander_biquandle(Modular(6), 2, 1)


def test_conjugation_quandle_of_s3():
    import itertools
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    mult = [[idx[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
    X = conjugation_quandle(mult)
    assert validate_biquandle(X.under, X.over) == []
    assert X.is_quandle()


def test_trivial():
    X = trivial_biquandle(3)
    assert len(endomorphisms(X)) == 27


def test_invalid_tables_reported():
    # column 1 of the under table is not a bijection
    under = [[0, 0], [0, 1]]
    over = [[0, 0], [1, 1]]
    bad = validate_biquandle(under, over)
    assert any(v.axiom == "ii.under" for v in bad)
    with pytest.raises(BiquandleError) as info:
        Biquandle(under, over)
    assert info.value.violations
    assert bad[0].describe().startswith("axiom=")


def test_parse_errors():
    with pytest.raises(BiquandleError):
        parse_biquandle("2\n1 2\n")
    with pytest.raises(BiquandleError):
        parse_biquandle("2\n1 x\n2 1\n\n1 1\n2 2\n")
    with pytest.raises(BiquandleError):
        parse_maps("1 5 3 4", 4)
