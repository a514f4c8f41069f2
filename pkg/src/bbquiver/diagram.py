"""Oriented classical and virtual link diagrams as signed PD codes.

A crossing is written ``X+(a,b,c,d)`` or ``X-(a,b,c,d)`` with the semiarc
labels in slot order (under_in, over_in, over_out, under_out).  ``U`` stands
for a crossing-free unknotted component.  Virtual crossings are not recorded:
a semiarc runs from one classical crossing to the next, passing through any
virtual crossings in between, so every abstract code describes a virtual
diagram.

Because the sign is explicit, the cyclic order of the four endpoints is
recoverable.  Counter-clockwise from the incoming under-strand it is
(under_in, over_out, under_out, over_in) at a positive crossing and
(under_in, over_in, under_out, over_out) at a negative one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DiagramError",
    "Crossing",
    "LinkDiagram",
    "parse_pd",
    "format_pd",
    "writhe",
    "components",
    "read_diagram_file",
    "from_planar_pd",
    "from_gauss_code",
    "from_braid",
]


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    sign: int
    under_in: int
    over_in: int
    over_out: int
    under_out: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign!r}")

    @property
    def slots(self) -> tuple[int, int, int, int]:
        return (self.under_in, self.over_in, self.over_out, self.under_out)

    def ccw(self) -> tuple[int, int, int, int]:
        """Endpoint labels in counter-clockwise order from under_in."""
        if self.sign > 0:
            return (self.under_in, self.over_out, self.under_out, self.over_in)
        return (self.under_in, self.over_in, self.under_out, self.over_out)

    def mirror(self) -> Crossing:
        return Crossing(-self.sign, self.over_in, self.under_in, self.under_out, self.over_out)

    def token(self) -> str:
        s = "+" if self.sign > 0 else "-"
        return f"X{s}({self.under_in},{self.over_in},{self.over_out},{self.under_out})"


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    free_loops: int = 0
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        _validate(self.crossings, self.free_loops)

    @property
    def semiarc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def labels(self) -> range:
        return range(1, self.semiarc_count + 1)

    def successor(self) -> dict[int, int]:
        """Semiarc -> next semiarc along the orientation."""
        nxt = {}
        for c in self.crossings:
            nxt[c.under_in] = c.under_out
            nxt[c.over_in] = c.over_out
        return nxt

    def mirror(self) -> LinkDiagram:
        """Mirror image: every crossing changed, orientation kept."""
        return LinkDiagram(tuple(c.mirror() for c in self.crossings), self.free_loops, self.name)

    def reverse(self) -> LinkDiagram:
        """Reverse the orientation of every component."""
        rev = []
        for c in self.crossings:
            rev.append(Crossing(c.sign, c.under_out, c.over_out, c.over_in, c.under_in))
        return LinkDiagram(tuple(rev), self.free_loops, self.name)

    def relabel(self, perm: dict[int, int]) -> LinkDiagram:
        out = [
            Crossing(c.sign, *(perm[s] for s in c.slots)) for c in self.crossings
        ]
        return LinkDiagram(tuple(out), self.free_loops, self.name)

    def __str__(self):
        return format_pd(self)


def _validate(crossings: Sequence[Crossing], free_loops: int) -> None:
    if free_loops < 0:
        raise DiagramError("free_loops must be >= 0")
    inbound: dict[int, int] = {}
    outbound: dict[int, int] = {}
    for c in crossings:
        for lab in (c.under_in, c.over_in):
            if lab in inbound:
                raise DiagramError(f"orientation conflict: semiarc {lab} enters two crossings")
            inbound[lab] = 1
        for lab in (c.over_out, c.under_out):
            if lab in outbound:
                raise DiagramError(f"orientation conflict: semiarc {lab} leaves two crossings")
            outbound[lab] = 1
    labels = set(inbound) | set(outbound)
    for lab in sorted(labels):
        if lab not in inbound or lab not in outbound:
            raise DiagramError(f"dangling semiarc {lab}")
    n = 2 * len(crossings)
    if labels != set(range(1, n + 1)):
        raise DiagramError(f"semiarc labels must be exactly 1..{n}")


_TOKEN = re.compile(r"\s*(?:(X)([+-])\(\s*([^)]*)\)|(U)\b|(\S+))")


def parse_pd(text: str, name: str = "", line: int = 1) -> LinkDiagram:
    """Parse a whitespace-separated list of ``X±(a,b,c,d)`` and ``U`` tokens.

    >>> d = parse_pd("X+(1,4,2,3) X+(3,2,4,1)")
    >>> d.n_crossings, writhe(d), components(d)
    (2, 2, 2)
    """
    crossings = []
    loops = 0
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1
        if m.group(5) is not None:
            raise DiagramError(f"parse error at line {line}, column {col}: unexpected {m.group(5)!r}")
        if m.group(4):
            loops += 1
        else:
            try:
                labels = [int(tok) for tok in m.group(3).split(",")]
            except ValueError:
                raise DiagramError(f"parse error at line {line}, column {col}: bad label list") from None
            if len(labels) != 4:
                raise DiagramError(f"parse error at line {line}, column {col}: crossing needs 4 labels")
            crossings.append(Crossing(1 if m.group(2) == "+" else -1, *labels))
        pos = m.end()
    return LinkDiagram(tuple(crossings), loops, name)


def format_pd(d: LinkDiagram) -> str:
    toks = [c.token() for c in d.crossings] + ["U"] * d.free_loops
    return " ".join(toks)


def writhe(d: LinkDiagram) -> int:
    return sum(c.sign for c in d.crossings)


def components(d: LinkDiagram) -> int:
    nxt = d.successor()
    seen = set()
    count = 0
    for start in d.labels():
        if start in seen:
            continue
        count += 1
        lab = start
        while lab not in seen:
            seen.add(lab)
            lab = nxt[lab]
    return count + d.free_loops


def read_diagram_file(text: str) -> list[LinkDiagram]:
    """Parse ``name : <PD tokens>`` lines; ``#`` starts a comment."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise DiagramError(f"line {lineno}: expected 'name : <PD tokens>'")
        name, body = line.split(":", 1)
        try:
            out.append(parse_pd(body, name=name.strip(), line=lineno))
        except DiagramError as exc:
            raise DiagramError(f"{name.strip()}: {exc}") from None
    return out


# -- conversions from other notations ----------------------------------------

def from_planar_pd(pd: Iterable[Sequence[int]], name: str = "") -> LinkDiagram:
    """Convert a KnotTheory/KnotInfo style PD code ``[[i,j,k,l], ...]``.

    In that convention ``i`` is the incoming under-strand and the labels run
    counter-clockwise.  The direction of each over-strand is solved from the
    requirement that every label enters one crossing and leaves another; when
    that leaves a choice (a component that never passes under), labels are
    taken to increase along each component.  Labels are renumbered to
    ``1..2n`` in sorted order.
    """
    pd = [tuple(x) for x in pd]
    if not pd:
        return LinkDiagram((), 1, name)
    heads = {}  # label -> crossing index where it ends
    tails = {}
    for idx, (i, j, k, l) in enumerate(pd):
        heads[i] = idx
        tails[k] = idx
    unresolved = set(range(len(pd)))
    over_dir = {}  # idx -> True if over runs l -> j

    def settle(idx, l_to_j):
        i, j, k, l = pd[idx]
        over_dir[idx] = l_to_j
        src, dst = (l, j) if l_to_j else (j, l)
        heads[src] = idx
        tails[dst] = idx
        unresolved.discard(idx)

    changed = True
    while unresolved:
        changed = False
        for idx in sorted(unresolved):
            i, j, k, l = pd[idx]
            # a label already ending elsewhere must start here, and vice versa
            if (j in heads and heads[j] != idx) or (l in tails and tails[l] != idx):
                settle(idx, True)
                changed = True
            elif (l in heads and heads[l] != idx) or (j in tails and tails[j] != idx):
                settle(idx, False)
                changed = True
        if not changed:
            idx = min(unresolved)
            i, j, k, l = pd[idx]
            settle(idx, j - l == 1 or l - j > 1)
    labels = sorted({x for c in pd for x in c})
    ren = {lab: n + 1 for n, lab in enumerate(labels)}
    crossings = []
    for idx, (i, j, k, l) in enumerate(pd):
        if over_dir[idx]:  # over l -> j: positive
            crossings.append(Crossing(1, ren[i], ren[l], ren[j], ren[k]))
        else:
            crossings.append(Crossing(-1, ren[i], ren[j], ren[l], ren[k]))
    return LinkDiagram(tuple(crossings), 0, name)


_GAUSS = re.compile(r"([OU])(\d+)([+-])")


def from_gauss_code(code: str, name: str = "") -> LinkDiagram:
    """Convert a signed Gauss code such as ``O1-O2-U1-O3+U2-U3+``.

    Components are separated by ``|``.  Each classical crossing appears once
    as ``O`` (over) and once as ``U`` (under) with the same sign.  Virtual
    crossings do not appear, so any such code is accepted.
    """
    comps = [part for part in code.replace(" ", "").split("|")]
    seq = []  # per component list of (kind, crossing, sign)
    for part in comps:
        toks = _GAUSS.findall(part)
        if "".join(a + b + c for a, b, c in toks) != part:
            raise DiagramError(f"bad Gauss code component {part!r}")
        seq.append([(k, int(c), 1 if s == "+" else -1) for k, c, s in toks])
    free = sum(1 for comp in seq if not comp)
    seq = [comp for comp in seq if comp]
    # semiarc leaving occurrence t of a component is labelled consecutively
    label = 0
    slot: dict[tuple[int, str], dict[str, int]] = {}
    signs: dict[int, int] = {}
    for comp in seq:
        first = label + 1
        m = len(comp)
        for t, (kind, c, s) in enumerate(comp):
            if signs.setdefault(c, s) != s:
                raise DiagramError(f"crossing {c} has inconsistent signs")
            incoming = first + (t - 1) % m
            outgoing = first + t
            entry = slot.setdefault((c, kind), {})
            if entry:
                raise DiagramError(f"crossing {c} has two {kind} passages")
            entry["in"], entry["out"] = incoming, outgoing
        label += m
    crossings = []
    for c in sorted(signs):
        if (c, "O") not in slot or (c, "U") not in slot:
            raise DiagramError(f"crossing {c} needs one O and one U passage")
        o, u = slot[(c, "O")], slot[(c, "U")]
        crossings.append(Crossing(signs[c], u["in"], o["in"], o["out"], u["out"]))
    return LinkDiagram(tuple(crossings), free, name)


def from_braid(word: Sequence[int], strands: int | None = None, name: str = "") -> LinkDiagram:
    """Closure of a braid word; ``i`` is σ_i and ``-i`` its inverse.

    Strands run upward.  σ_i is the positive crossing where the strand in
    position i passes over the strand in position i + 1.
    """
    k = strands or (max((abs(g) for g in word), default=0) + 1)
    if any(g == 0 or abs(g) >= k for g in word):
        raise DiagramError(f"generator out of range for {k} strands")
    # placeholders -p for the bottom of position p; renamed at closure
    current = [-(p + 1) for p in range(k)]
    raw = []
    fresh = 0
    for g in word:
        i = abs(g) - 1
        left, right = current[i], current[i + 1]
        fresh += 1
        new_left = fresh
        fresh += 1
        new_right = fresh
        if g > 0:  # left strand over, moving right
            raw.append((1, right, left, new_right, new_left))
        else:  # left strand under, moving right
            raw.append((-1, left, right, new_left, new_right))
        current[i], current[i + 1] = new_left, new_right
    # close: the top label at position p is the bottom label at position p
    alias = {-(p + 1): current[p] for p in range(k)}

    def resolve(lab):
        seen = set()
        while lab < 0:
            if lab in seen:
                return None
            seen.add(lab)
            lab = alias[lab]
        return lab

    loops = _count_untouched_cycles(alias, k)
    crossings = [Crossing(s, *(resolve(x) for x in slots)) for s, *slots in raw]
    used = sorted({x for c in crossings for x in c.slots})
    ren = {lab: n + 1 for n, lab in enumerate(used)}
    crossings = [Crossing(c.sign, *(ren[x] for x in c.slots)) for c in crossings]
    return LinkDiagram(tuple(crossings), loops, name)


def _count_untouched_cycles(alias: dict[int, int], k: int) -> int:
    # components made only of crossing-free strands
    count, seen = 0, set()
    for p in range(k):
        start = -(p + 1)
        if start in seen:
            continue
        lab, cyc = start, []
        while lab < 0 and lab not in seen:
            seen.add(lab)
            cyc.append(lab)
            lab = alias[lab]
        if lab < 0 and lab == start:
            count += 1
    return count
