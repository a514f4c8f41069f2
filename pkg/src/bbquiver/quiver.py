"""Biquandle bracket quivers and their two decategorifications.

The quiver has one vertex per X-coloring of a diagram, weighted by the
bracket value of that coloring, and one edge ``f -> φ∘f`` for every coloring
``f`` and every ``φ`` in a chosen set S of endomorphisms.  Parallel edges
(distinct φ with equal composites) are kept.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .biquandle import Biquandle, BqMap, is_homomorphism
from .bracket import BiquandleBracket, evaluate_bracket
from .coloring import Coloring, enumerate_colorings
from .diagram import LinkDiagram
from .rings import FormalSum, RingElement, RingSpec

__all__ = [
    "QuiverError",
    "BracketQuiver",
    "build_quiver",
    "indegree_polynomial",
    "two_variable_polynomial",
    "export_dot",
    "quivers_isomorphic",
    "parse_polynomial",
    "MAX_ISO_VERTICES",
    "WORKERS_ENV",
]

MAX_ISO_VERTICES = 64
WORKERS_ENV = "BBQUIVER_WORKERS"


class QuiverError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class BracketQuiver:
    """Vertices are ``(coloring, weight)``; edges are ``(source, target, endo)``
    index triples."""

    vertices: tuple[tuple[Coloring, RingElement], ...]
    edges: tuple[tuple[int, int, int], ...]
    endos: tuple[BqMap, ...]
    name: str = ""

    @property
    def weights(self) -> list[RingElement]:
        return [w for _, w in self.vertices]

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for _, t, _ in self.edges:
            deg[t] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for s, _, _ in self.edges:
            deg[s] += 1
        return deg


def _weights_chunk(args):
    d, colorings, beta, normalization = args
    return [evaluate_bracket(d, c, beta, check=False, normalization=normalization) for c in colorings]


def _worker_count(workers):
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def build_quiver(d: LinkDiagram, X: Biquandle, S: Sequence[BqMap], beta: BiquandleBracket, *,
                 normalization: str = "closed", workers: int | None = None) -> BracketQuiver:
    """Build the bracket quiver of ``d`` for the endomorphisms ``S``.

    Vertex weights can be computed in ``workers`` processes (default: the
    ``BBQUIVER_WORKERS`` environment variable, else 1); the result does not
    depend on the worker count.
    """
    if beta.X != X:
        raise QuiverError("the bracket is defined over a different biquandle")
    for i, phi in enumerate(S):
        if not is_homomorphism(phi, X, X):
            raise QuiverError(f"map {i + 1} ({phi.one_indexed()}) is not an endomorphism of X")
    colorings = enumerate_colorings(d, X)
    n = _worker_count(workers)
    if n > 1 and len(colorings) > n:
        size = -(-len(colorings) // n)
        chunks = [colorings[i:i + size] for i in range(0, len(colorings), size)]
        with ProcessPoolExecutor(max_workers=n) as pool:
            parts = pool.map(_weights_chunk, [(d, ch, beta, normalization) for ch in chunks])
            weights = [w for part in parts for w in part]
    else:
        weights = _weights_chunk((d, colorings, beta, normalization))
    index = {c: i for i, c in enumerate(colorings)}
    edges = []
    for i, c in enumerate(colorings):
        for k, phi in enumerate(S):
            image = tuple(phi.images[v] for v in c)
            j = index.get(image)
            if j is None:  # cannot happen for a genuine endomorphism
                raise QuiverError(f"image of coloring {i} under map {k + 1} is not a coloring")
            edges.append((i, j, k))
    return BracketQuiver(tuple(zip(colorings, weights)), tuple(edges), tuple(S), d.name)


def indegree_polynomial(q: BracketQuiver, weighting: str = "vertex") -> FormalSum:
    """Sum of ``u^{β(v)} v^{deg⁺(v)}`` with deg⁺ the in-degree.

    ``weighting="vertex"`` takes one term per vertex.  ``"edge"`` takes one
    term per edge, for its source vertex, i.e. ``|S|`` times the vertex sum;
    that is the normalisation the published knot tables use.
    """
    if weighting not in ("vertex", "edge"):
        raise ValueError("weighting must be 'vertex' or 'edge'")
    deg = q.in_degrees()
    out = FormalSum(("u", "v"))
    if weighting == "vertex":
        for (_, w), k in zip(q.vertices, deg):
            out.add((w, k))
    else:
        for s, _, _ in q.edges:
            out.add((q.vertices[s][1], deg[s]))
    return out


def two_variable_polynomial(q: BracketQuiver) -> FormalSum:
    """Sum over edges of ``s^{β(source)} t^{β(target)}``."""
    out = FormalSum(("s", "t"))
    for s, t, _ in q.edges:
        out.add((q.vertices[s][1], q.vertices[t][1]))
    return out


def export_dot(q: BracketQuiver) -> str:
    """DOT digraph: node labels ``index: weight``, edge labels the map number."""
    title = q.name or "quiver"
    lines = [f'digraph "{_dot_escape(title)}" {{']
    for i, (_, w) in enumerate(q.vertices):
        lines.append(f'  v{i} [label="{i}: {_dot_escape(w.key())}"];')
    for s, t, k in q.edges:
        lines.append(f'  v{s} -> v{t} [label="{k + 1}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


# -- isomorphism ------------------------------------------------------------

def _multiplicities(q: BracketQuiver) -> list[Counter]:
    out = [Counter() for _ in q.vertices]
    for s, t, _ in q.edges:
        out[s][t] += 1
    return out


def _refine(q: BracketQuiver, mult: list[Counter]) -> list:
    # colour refinement seeded by weight and degrees, run to a fixed point
    ind, outd = q.in_degrees(), q.out_degrees()
    colour = [(w.key(), ind[i], outd[i]) for i, (_, w) in enumerate(q.vertices)]
    incoming = [Counter() for _ in q.vertices]
    for s, row in enumerate(mult):
        for t, m in row.items():
            incoming[t][s] += m
    for _ in range(len(colour)):
        new = []
        for i in range(len(colour)):
            outs = sorted((colour[t], m) for t, m in mult[i].items())
            ins = sorted((colour[s], m) for s, m in incoming[i].items())
            new.append((colour[i], tuple(outs), tuple(ins)))
        if len(set(new)) == len(set(colour)):
            break
        colour = new
    return colour


def quivers_isomorphic(q1: BracketQuiver, q2: BracketQuiver) -> bool:
    """Weight-preserving isomorphism of directed multigraphs.

    Edge labels are ignored; edge multiplicities are respected.  Raises
    :class:`QuiverError` ("too large") beyond ``MAX_ISO_VERTICES`` vertices.
    """
    n = len(q1.vertices)
    if n != len(q2.vertices) or len(q1.edges) != len(q2.edges):
        return False
    if n > MAX_ISO_VERTICES:
        raise QuiverError(f"quiver too large for isomorphism test ({n} > {MAX_ISO_VERTICES} vertices)")
    if n == 0:
        return True
    m1, m2 = _multiplicities(q1), _multiplicities(q2)
    c1, c2 = _refine(q1, m1), _refine(q2, m2)
    # refinement runs the same number of rounds only if both sides stabilise
    # alike; compare class sizes on the seed colours as a cheap filter, then
    # match with the refined colours
    if Counter(c1) != Counter(c2):
        return False
    cand = [[j for j in range(n) if c2[j] == c1[i]] for i in range(n)]
    order = sorted(range(n), key=lambda i: len(cand[i]))
    f: dict[int, int] = {}
    used = set()

    def consistent(i, j):
        if m1[i][i] != m2[j][j]:
            return False
        for a, b in f.items():
            if m1[i][a] != m2[j][b] or m1[a][i] != m2[b][j]:
                return False
        return True

    def rec(pos):
        if pos == n:
            return True
        i = order[pos]
        for j in cand[i]:
            if j not in used and consistent(i, j):
                f[i] = j
                used.add(j)
                if rec(pos + 1):
                    return True
                del f[i]
                used.discard(j)
        return False

    return rec(0)


# -- polynomial text ----------------------------------------------------------

def _split_top(text: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    i = 0
    while i < len(text):
        ch = text[i]
        depth += ch == "{"
        depth -= ch == "}"
        if depth == 0 and text.startswith(sep, i):
            parts.append("".join(cur))
            cur = []
            i += len(sep)
            continue
        cur.append(ch)
        i += 1
    parts.append("".join(cur))
    return parts


def parse_polynomial(text: str, spec: RingSpec, variables: Sequence[str]) -> FormalSum:
    """Parse sums like ``16u^{-q^5 - q^{-5}}v^{12} + 16u^{...}v^4``.

    The first exponent is a ring element of ``spec``; later exponents of an
    in-degree polynomial are plain integers but are parsed the same way and
    converted back.  A missing exponent means 1.
    """
    variables = tuple(variables)
    out = FormalSum(variables)
    flat = " ".join(text.split())
    for raw in _split_top(flat.replace(" + ", "+"), "+"):
        term = raw.strip()
        if not term:
            continue
        k = 0
        while k < len(term) and term[k].isdigit():
            k += 1
        coeff = int(term[:k]) if k else 1
        rest = term[k:].strip()
        key = []
        for var in variables:
            if not rest.startswith(var):
                raise QuiverError(f"expected variable {var!r} in term {term!r}")
            rest = rest[len(var):]
            if rest.startswith("^"):
                rest = rest[1:]
                if rest.startswith("{"):
                    depth, end = 0, 0
                    for end, ch in enumerate(rest):
                        depth += ch == "{"
                        depth -= ch == "}"
                        if depth == 0:
                            break
                    expo, rest = rest[1:end], rest[end + 1:]
                else:
                    end = 0
                    while end < len(rest) and (rest[end].isdigit() or (end == 0 and rest[end] == "-")):
                        end += 1
                    expo, rest = rest[:end], rest[end:]
            else:
                expo = "1"
            key.append(expo)
        if rest.strip():
            raise QuiverError(f"trailing text {rest!r} in term {term!r}")
        # only the first variable carries a ring element in an in-degree sum
        if variables == ("u", "v"):
            out.add((spec.parse(key[0]), int(key[1])), coeff)
        else:
            out.add(tuple(spec.parse(e) for e in key), coeff)
    return out
