"""Biquandle bracket quivers of classical and virtual link diagrams.

The pipeline is diagram -> colorings by a finite biquandle X -> bracket value
of each coloring -> quiver of colorings under a set of endomorphisms ->
in-degree and two-variable polynomials.

>>> from bbquiver import load_diagrams, load_biquandle, load_bracket, load_maps
>>> hopf = load_diagrams("links_upto7.pd", name="L2a1")[0]
>>> X = load_biquandle("hopf_z3.bq")
>>> beta = load_bracket("hopf_z3.br", X)
>>> q = build_quiver(hopf, X, load_maps("hopf_z3.endo", X), beta)
>>> indegree_polynomial(q).to_text()
'4u^{2}v^{1} + 4u^{1}v^{1}'
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .biquandle import *  # noqa: F401,F403
from .bracket import *  # noqa: F401,F403
from .coloring import *  # noqa: F401,F403
from .diagram import *  # noqa: F401,F403
from .quiver import *  # noqa: F401,F403
from .rings import *  # noqa: F401,F403
from . import biquandle, bracket, coloring, diagram, quiver, rings

__version__ = "0.1.0"


def data_path(name: str) -> Path:
    """Path of a bundled data file such as ``knots_upto8.pd``."""
    path = Path(str(resources.files(__package__).joinpath("data", name)))
    if not path.is_file():
        raise FileNotFoundError(f"no bundled data file {name!r}")
    return path


def _read(source) -> str:
    p = Path(source)
    if not p.is_file() and p.parent == Path("."):
        p = data_path(str(source))
    return p.read_text(encoding="utf-8")


def load_diagrams(source, name: str | None = None) -> list:
    """Diagrams from a file path or bundled data name, optionally one by name."""
    ds = diagram.read_diagram_file(_read(source))
    if name is not None:
        ds = [d for d in ds if d.name == name]
        if not ds:
            raise diagram.DiagramError(f"no diagram named {name!r} in {source}")
    return ds


def load_biquandle(source) -> biquandle.Biquandle:
    return biquandle.parse_biquandle(_read(source), name=Path(str(source)).stem)


def load_bracket(source, X, strict: bool | None = None) -> bracket.BiquandleBracket:
    """Load a bracket file.  ``strict=None`` validates unless the file fixes
    ``delta``/``w`` itself (the printed brackets that fail the axioms)."""
    text = _read(source)
    if strict is None:
        strict = not any(ln.split("#", 1)[0].strip().startswith(("delta ", "w "))
                         for ln in text.splitlines())
    return bracket.parse_bracket(text, X, strict=strict)


def load_maps(source, X) -> list:
    return biquandle.parse_maps(_read(source), X.n)
