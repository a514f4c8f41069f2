"""Biquandle colorings of link diagrams, i.e. the homset Hom(B(L), X).

Crossing convention.  Colors are read sideways.  At a positive crossing the
under-strand entering with x and the over-strand leaving with y determine
the other two semiarcs,

    under_out = x ⊳̲ y,    over_in = y ⊳̄ x.

At a negative crossing the under-strand leaving with x and the over-strand
entering with y determine

    under_in = x ⊳̲ y,     over_out = y ⊳̄ x.

In both cases (x, y) is the pair that indexes the bracket coefficients of
the crossing.  For a quandle (x ⊳̄ y = x) this is the familiar rule, with
the over-strand keeping its color.  Reading y as the *incoming* over color
instead gives a relation that is not Reidemeister I invariant once ⊳̄ is
nontrivial, e.g. for the Alexander biquandle on Z_5 with t=2, s=3.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from .biquandle import Biquandle, BqMap, is_homomorphism
from .diagram import Crossing, LinkDiagram

__all__ = [
    "Coloring",
    "ColoringError",
    "crossing_relations",
    "is_coloring",
    "enumerate_colorings",
    "counting_invariant",
    "apply_endomorphism",
]

Coloring = tuple  # tuple of colors indexed by semiarc label - 1 (plus free loops)


class ColoringError(ValueError):
    pass


@lru_cache(maxsize=None)
def crossing_relations(X: Biquandle, sign: int) -> frozenset:
    """All valid (under_in, over_in, over_out, under_out) color tuples."""
    # x, y as in the module docstring
    U, O = X.under, X.over
    out = set()
    for x in range(X.n):
        for y in range(X.n):
            if sign > 0:
                out.add((x, O[y][x], y, U[x][y]))
            else:
                out.add((U[x][y], y, O[y][x], x))
    return frozenset(out)


def _colors_at(c: Crossing, coloring: Sequence[int]) -> tuple[int, int, int, int]:
    return tuple(coloring[s - 1] for s in c.slots)


def is_coloring(d: LinkDiagram, X: Biquandle, coloring: Sequence[int]) -> bool:
    if len(coloring) != d.semiarc_count + d.free_loops:
        return False
    if any(not 0 <= v < X.n for v in coloring):
        return False
    return all(_colors_at(c, coloring) in crossing_relations(X, c.sign) for c in d.crossings)


def _traversal_order(d: LinkDiagram) -> list[int]:
    # semiarcs in order of a walk along each component, components taken
    # breadth-first through shared crossings so that forcing kicks in early
    nxt = d.successor()
    at = {}
    for i, c in enumerate(d.crossings):
        for s in c.slots:
            at.setdefault(s, []).append(i)
    order, seen = [], set()
    queue = [1] if d.semiarc_count else []
    while len(seen) < d.semiarc_count:
        if not queue:
            queue.append(min(set(d.labels()) - seen))
        start = queue.pop(0)
        if start in seen:
            continue
        lab = start
        while lab not in seen:
            seen.add(lab)
            order.append(lab)
            for ci in at[lab]:
                queue.extend(s for s in d.crossings[ci].slots if s not in seen)
            lab = nxt[lab]
    return order


def _search(d: LinkDiagram, X: Biquandle) -> Iterator[list[int]]:
    m = d.semiarc_count
    order = _traversal_order(d)
    rels = [(c.slots, crossing_relations(X, c.sign)) for c in d.crossings]
    touching = [[] for _ in range(m + 1)]
    for ci, c in enumerate(d.crossings):
        for s in set(c.slots):
            touching[s].append(ci)
    assign = [None] * (m + 1)

    def propagate(labels):
        # unit propagation over crossing relation tables; returns the labels
        # assigned here (for undo) or None on contradiction
        trail = []
        pending = list(labels)
        while pending:
            lab = pending.pop()
            for ci in touching[lab]:
                slots, table = rels[ci]
                known = [assign[s] for s in slots]
                fits = [t for t in table if all(k is None or k == v for k, v in zip(known, t))]
                if not fits:
                    for s in trail:
                        assign[s] = None
                    return None
                if len(fits) == 1:
                    for s, v in zip(slots, fits[0]):
                        if assign[s] is None:
                            assign[s] = v
                            trail.append(s)
                            pending.append(s)
                        elif assign[s] != v:
                            for t in trail:
                                assign[t] = None
                            return None
        return trail

    def rec(pos):
        while pos < len(order) and assign[order[pos]] is not None:
            pos += 1
        if pos == len(order):
            yield assign[1:]
            return
        lab = order[pos]
        for color in range(X.n):
            assign[lab] = color
            trail = propagate([lab])
            if trail is not None:
                yield from rec(pos + 1)
                for s in trail:
                    assign[s] = None
            assign[lab] = None

    yield from rec(0)


def enumerate_colorings(d: LinkDiagram, X: Biquandle) -> list[Coloring]:
    """Every X-coloring of ``d``, sorted lexicographically.

    A coloring is a tuple indexed by semiarc label minus one; free unknotted
    loops (``U`` tokens) get one extra trailing entry each.
    """
    found = []
    for partial in _search(d, X):
        found.append(tuple(partial))
    if d.free_loops:
        loops = list(itertools.product(range(X.n), repeat=d.free_loops))
        found = [c + extra for c in found for extra in loops]
    found.sort()
    return found


def counting_invariant(d: LinkDiagram, X: Biquandle) -> int:
    return len(enumerate_colorings(d, X))


def apply_endomorphism(phi: BqMap, coloring: Coloring, *, X: Biquandle | None = None,
                       d: LinkDiagram | None = None) -> Coloring:
    """Post-compose a coloring with an endomorphism.

    Passing ``X`` and ``d`` turns on the (slow) sanity checks that ``phi``
    is a homomorphism and the result is again a coloring.
    """
    out = tuple(phi.images[v] for v in coloring)
    if X is not None and d is not None:
        if not is_homomorphism(phi, X, X):
            raise ColoringError("map is not an endomorphism of X")
        if not is_coloring(d, X, out):
            raise ColoringError("image is not a coloring")
    return out
