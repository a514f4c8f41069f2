import sys

import pytest

from bbquiver import (Laurent, Modular, endomorphisms, load_biquandle, load_bracket,
                      load_diagrams, load_maps)


@pytest.fixture(scope="session")
def R():
    return Laurent("q")


@pytest.fixture(scope="session")
def Z3():
    return Modular(3)


@pytest.fixture(scope="session")
def hopf_data():
    """Biquandle, bracket and map of the worked Hopf link example."""
    X = load_biquandle("hopf_z3.bq")
    return X, load_bracket("hopf_z3.br", X), load_maps("hopf_z3.endo", X)


@pytest.fixture(scope="session")
def knot_data():
    X = load_biquandle("knots_q.bq")
    return X, load_bracket("knots_q.br", X), endomorphisms(X)


@pytest.fixture(scope="session")
def jones_data():
    X = load_biquandle("jones.bq")
    return X, load_bracket("jones.br", X)


@pytest.fixture(scope="session")
def knots():
    return {d.name: d for d in load_diagrams("knots_upto8.pd")}


@pytest.fixture(scope="session")
def links():
    return {d.name: d for d in load_diagrams("links_upto7.pd")}


@pytest.fixture(scope="session")
def pairs():
    ds = {d.name: d for d in load_diagrams("equivalent.pd")}
    return [(ds[f"{k}_a"], ds[f"{k}_b"]) for k in ("trefoil", "unknot", "hopf")]


def pytest_terminal_summary(terminalreporter):
    mods = [m for k, m in list(sys.modules.items())
            if k.endswith("test_acceptance") and getattr(m, "RESULTS", None)]
    if not mods:
        return
    mod = mods[0]
    if not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
