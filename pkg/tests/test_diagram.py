import pytest
from hypothesis import given, strategies as st

from bbquiver import (DiagramError, components, format_pd, from_braid, from_gauss_code,
                      from_planar_pd, load_diagrams, parse_pd, read_diagram_file, writhe)

braid_words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=0, max_size=7)


def test_bundled_files(knots, links):
    assert len(knots) == 35 and list(knots)[0] == "3_1" and list(knots)[-1] == "8_21"
    assert all(components(d) == 1 for d in knots.values())
    assert all(d.n_crossings == int(n.split("_")[0]) for n, d in knots.items())
    assert len(links) == 18
    three = {n for n, d in links.items() if components(d) == 3}
    assert three == {"L6a4", "L6a5", "L6n1", "L7a7"}
    assert all(d.n_crossings == int(n[1]) for n, d in links.items())


def test_virtual_file():
    vs = {d.name: d for d in load_diagrams("virtual.pd")}
    assert set(vs) == {"3.1", "3.7"}
    assert all(d.n_crossings == 3 and components(d) == 1 for d in vs.values())


@pytest.mark.parametrize("text", ["X+(1,4,2,3) X+(3,2,4,1)", "U", "X-(2,6,1,3) X-(4,1,2,5) X+(5,3,4,6) U"])
def test_round_trip(text):
    d = parse_pd(text)
    assert format_pd(d) == text
    assert parse_pd(format_pd(d)) == d


def test_writhe_and_components():
    d = parse_pd("X+(1,4,2,3) X+(3,2,4,1)")
    assert (writhe(d), components(d)) == (2, 2)
    assert writhe(d.mirror()) == -2
    assert components(parse_pd("U U")) == 2


def test_mirror_and_reverse_are_involutions(knots):
    for d in knots.values():
        assert d.mirror().mirror() == d
        assert d.reverse().reverse() == d
        assert writhe(d.reverse()) == writhe(d)


@pytest.mark.parametrize("text,msg", [
    ("X+(1,2,3)", "4 labels"),
    ("X+(1,1,2,2)", "orientation conflict"),
    ("X+(1,2,3,5) X+(3,5,1,2)", "1..4"),
    ("X+(1,4,2,3) Y", "column 13"),
])
def test_parse_errors(text, msg):
    with pytest.raises(DiagramError, match=msg):
        parse_pd(text)


def test_diagram_file_errors():
    with pytest.raises(DiagramError, match="line 2"):
        read_diagram_file("a : U\nno colon here\n")
    ds = read_diagram_file("# comment\n\nhopf : X+(1,4,2,3) X+(3,2,4,1)  # trailing\n")
    assert [d.name for d in ds] == ["hopf"]


def test_planar_pd_trefoil():
    d = from_planar_pd([[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]])
    assert d.n_crossings == 3 and components(d) == 1 and abs(writhe(d)) == 3


def test_gauss_code():
    d = from_gauss_code("O1-O2-U1-O3+U2-U3+")
    assert d.n_crossings == 3 and writhe(d) == -1
    hopf = from_gauss_code("O1+U2+|U1+O2+")
    assert components(hopf) == 2 and writhe(hopf) == 2
    with pytest.raises(DiagramError):
        from_gauss_code("O1+O1+")


def test_braid_closures():
    assert from_braid([]).free_loops == 1
    assert components(from_braid([], strands=3)) == 3
    t = from_braid([1, 1, 1])
    assert (writhe(t), components(t)) == (3, 1)
    assert components(from_braid([1, 2, 1])) == 2


@given(braid_words)
def test_braid_components_match_permutation(word):
    k = 4
    perm = list(range(k))
    for g in word:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    seen, cycles = set(), 0
    for s in range(k):
        if s not in seen:
            cycles += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
    d = from_braid(word, strands=k)
    assert components(d) == cycles
    assert writhe(d) == sum(1 if g > 0 else -1 for g in word)
