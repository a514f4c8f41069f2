"""Biquandle brackets: validation, state-sum evaluation, entrywise products.

Skein convention used by :func:`evaluate_bracket`.  Every classical crossing
has two smoothings:

* the *oriented* smoothing joins under_in with over_out and over_in with
  under_out;
* the *unoriented* smoothing joins the two incoming and the two outgoing
  ends.

A crossing is indexed by the colors of the under strand (x) and the over
strand (y) on the region to the right of both strands, with both strands
drawn pointing up.  That is (under_in, over_out) at a positive crossing and
(under_out, over_in) at a negative one; at a kink the pair is diagonal, which
is what the axiom ``w = -A²ₓₓB⁻¹ₓₓ`` presumes.  It is also the pair that
determines the other two colors (see :mod:`bbquiver.coloring`).  A positive crossing expands as
``A[x][y]·oriented + B[x][y]·unoriented`` and a negative one as
``A[x][y]⁻¹·oriented + B[x][y]⁻¹·unoriented``.

The state sum is multiplied by ``w^(n₋ - n₊)``.  With the default
``normalization="closed"`` each state weighs ``δ^circles``, so the unknot
evaluates to δ; ``"unit"`` uses ``δ^(circles - 1)`` and the unknot is 1.
With the one-element biquandle, ``A = q`` and ``B = q⁻¹`` this is the
Kauffman bracket in the variable q, normalised by the writhe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .biquandle import Biquandle
from .coloring import is_coloring
from .diagram import LinkDiagram
from .rings import RingElement, RingSpec, parse_ring_spec

__all__ = [
    "BracketError",
    "BracketViolation",
    "BiquandleBracket",
    "bracket_violations",
    "validate_bracket",
    "evaluate_bracket",
    "bracket_values",
    "crossing_index",
    "state_circles",
    "state_table",
    "hadamard_product",
    "cocycle_bracket",
    "parse_bracket",
    "format_bracket",
]


class BracketError(ValueError):
    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class BracketViolation:
    """A failed bracket axiom.  Indices are 0-indexed elements of X."""

    axiom: str
    witnesses: tuple
    detail: str = ""

    def describe(self) -> str:
        w = " ".join(f"{'xyz'[i]}={v + 1}" for i, v in enumerate(self.witnesses))
        text = f"axiom={self.axiom} {w}".rstrip()
        return f"{text} {self.detail}".rstrip()


@dataclass(frozen=True, eq=False)
class BiquandleBracket:
    X: Biquandle
    spec: RingSpec
    A: tuple
    B: tuple
    delta: RingElement
    w: RingElement
    Ainv: tuple = field(repr=False, default=())
    Binv: tuple = field(repr=False, default=())

    @property
    def n(self) -> int:
        return self.X.n

    @classmethod
    def unchecked(cls, X: Biquandle, spec: RingSpec, A, B, delta=None, w=None) -> BiquandleBracket:
        """Wrap matrices without checking the bracket axioms.

        Only the unit condition is enforced.  ``delta`` and ``w`` default to
        the values read at the pair (1, 1).  Values computed from such an
        object are not guaranteed to be link invariants; this exists to
        reproduce published computations made with non-conforming matrices.
        """
        A = _as_matrix(spec, A, X.n, "A")
        B = _as_matrix(spec, B, X.n, "B")
        for name, M in (("A", A), ("B", B)):
            for x, row in enumerate(M):
                for y, v in enumerate(row):
                    if not v.is_unit():
                        raise BracketError(f"{name}[{x + 1}][{y + 1}]={v.key()} is not a unit")
        Ai = tuple(tuple(a.inverse() for a in row) for row in A)
        Bi = tuple(tuple(b.inverse() for b in row) for row in B)
        if delta is None:
            delta = -(Ai[0][0] * B[0][0]) - A[0][0] * Bi[0][0]
        if w is None:
            w = -(A[0][0] * A[0][0] * Bi[0][0])
        return cls(X, spec, A, B, spec(delta), spec(w), Ai, Bi)


def _as_matrix(spec, M, n, name):
    if len(M) != n or any(len(row) != n for row in M):
        raise BracketError(f"{name} must be {n}x{n}")
    return tuple(tuple(spec(v) for v in row) for row in M)


def bracket_violations(X: Biquandle, spec: RingSpec, A, B):
    """Check the bracket axioms; returns ``(delta, w, violations)``.

    ``delta``/``w`` are the values read at the first pair (or ``None`` when
    some entry is not a unit).
    """
    n = X.n
    A = _as_matrix(spec, A, n, "A")
    B = _as_matrix(spec, B, n, "B")
    bad: list[BracketViolation] = []
    for name, M in (("A", A), ("B", B)):
        for x in range(n):
            for y in range(n):
                if not M[x][y].is_unit():
                    bad.append(BracketViolation("unit", (x, y), f"{name}={M[x][y].key()}"))
    if bad:
        return None, None, bad
    Ai = [[a.inverse() for a in row] for row in A]
    Bi = [[b.inverse() for b in row] for row in B]

    ws = [-(A[x][x] * A[x][x] * Bi[x][x]) for x in range(n)]
    w = ws[0]
    for x in range(1, n):
        if ws[x] != w:
            bad.append(BracketViolation("i", (0, x), f"w={w.key()} vs {ws[x].key()}"))
    deltas = {(x, y): -(Ai[x][y] * B[x][y]) - A[x][y] * Bi[x][y] for x in range(n) for y in range(n)}
    delta = deltas[(0, 0)]
    for (x, y), d in deltas.items():
        if d != delta:
            bad.append(BracketViolation("ii", (x, y), f"delta={delta.key()} vs {d.key()}"))

    U, O = X.under, X.over
    for x in range(n):
        for y in range(n):
            for z in range(n):
                a, b = U[x][y], O[z][y]
                c, e = O[y][x], O[z][x]
                f, g = U[x][z], U[y][z]
                eqs = (
                    (A[x][y] * A[y][z] * A[a][b], A[x][z] * A[c][e] * A[f][g]),
                    (A[x][y] * B[y][z] * B[a][b], B[x][z] * B[c][e] * A[f][g]),
                    (B[x][y] * A[y][z] * B[a][b], B[x][z] * A[c][e] * B[f][g]),
                    (
                        A[x][y] * A[y][z] * B[a][b],
                        A[x][z] * B[c][e] * A[f][g]
                        + A[x][z] * A[c][e] * B[f][g]
                        + delta * A[x][z] * B[c][e] * B[f][g]
                        + B[x][z] * B[c][e] * B[f][g],
                    ),
                    (
                        B[x][y] * A[y][z] * A[a][b]
                        + A[x][y] * B[y][z] * A[a][b]
                        + delta * B[x][y] * B[y][z] * A[a][b]
                        + B[x][y] * B[y][z] * B[a][b],
                        B[x][z] * A[c][e] * A[f][g],
                    ),
                )
                for k, (lhs, rhs) in enumerate(eqs, 1):
                    if lhs != rhs:
                        bad.append(BracketViolation(f"iii.{k}", (x, y, z), f"{lhs.key()} != {rhs.key()}"))
    return delta, w, bad


def validate_bracket(X: Biquandle, spec: RingSpec, A, B) -> BiquandleBracket:
    """Return the certified bracket or raise :class:`BracketError`.

    The raised error carries every violated instance in ``.violations``.
    """
    delta, w, bad = bracket_violations(X, spec, A, B)
    if bad:
        raise BracketError(
            f"not a biquandle bracket: {len(bad)} violations, first {bad[0].describe()}", bad
        )
    A = _as_matrix(spec, A, X.n, "A")
    B = _as_matrix(spec, B, X.n, "B")
    Ai = tuple(tuple(a.inverse() for a in row) for row in A)
    Bi = tuple(tuple(b.inverse() for b in row) for row in B)
    return BiquandleBracket(X, spec, A, B, delta, w, Ai, Bi)


def hadamard_product(b1: BiquandleBracket, b2: BiquandleBracket) -> BiquandleBracket:
    """Entrywise product of two brackets over the same X and ring.

    The product is re-validated; a :class:`BracketError` is raised when it
    fails the axioms.
    """
    if b1.X != b2.X or b1.spec != b2.spec:
        raise BracketError("brackets must share the biquandle and the ring")
    n = b1.n
    A = [[b1.A[x][y] * b2.A[x][y] for y in range(n)] for x in range(n)]
    B = [[b1.B[x][y] * b2.B[x][y] for y in range(n)] for x in range(n)]
    return validate_bracket(b1.X, b1.spec, A, B)


def cocycle_bracket(X: Biquandle, spec: RingSpec, phi) -> BiquandleBracket:
    """Bracket with A = B = phi (a biquandle 2-cocycle invariant)."""
    return validate_bracket(X, spec, phi, phi)


# -- state sums ---------------------------------------------------------------

class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            return True
        return False


def state_circles(d: LinkDiagram, smoothing: Sequence) -> int:
    """Closed curves after smoothing every crossing.

    ``smoothing[i]`` is ``"A"`` (oriented smoothing) or ``"B"`` (unoriented)
    for crossing ``i``; booleans are accepted with ``True`` meaning ``"B"``.
    Free loops are not counted here.
    """
    if len(smoothing) != d.n_crossings:
        raise ValueError("one smoothing per crossing required")
    m = d.semiarc_count
    dsu = _DSU(m + 1)
    circles = m
    for c, s in zip(d.crossings, smoothing):
        b = s is True or s == "B"
        if b:
            pairs = ((c.under_in, c.over_in), (c.under_out, c.over_out))
        else:
            pairs = ((c.under_in, c.over_out), (c.over_in, c.under_out))
        for p, q in pairs:
            if dsu.union(p, q):
                circles -= 1
    return circles


@lru_cache(maxsize=256)
def state_table(d: LinkDiagram) -> tuple[int, ...]:
    """Circle count for every state, indexed by bitmask (bit i set = B at i)."""
    n = d.n_crossings
    return tuple(
        state_circles(d, [bool(mask >> i & 1) for i in range(n)]) for mask in range(1 << n)
    )


def crossing_index(c, coloring) -> tuple[int, int]:
    """The pair (x, y) indexing the bracket entries at crossing ``c``."""
    if c.sign > 0:
        return coloring[c.under_in - 1], coloring[c.over_out - 1]
    return coloring[c.under_out - 1], coloring[c.over_in - 1]


def _crossing_coeffs(d: LinkDiagram, coloring, beta: BiquandleBracket):
    out = []
    for c in d.crossings:
        x, y = crossing_index(c, coloring)
        if c.sign > 0:
            out.append((beta.A[x][y], beta.B[x][y]))
        else:
            out.append((beta.Ainv[x][y], beta.Binv[x][y]))
    return out


NORMALIZATIONS = ("closed", "unit")


def evaluate_bracket(d: LinkDiagram, coloring, beta: BiquandleBracket, check: bool = True,
                     normalization: str = "closed") -> RingElement:
    """Biquandle bracket value of one colored diagram."""
    if normalization not in NORMALIZATIONS:
        raise ValueError(f"normalization must be one of {NORMALIZATIONS}")
    shift = 0 if normalization == "closed" else 1
    spec = beta.spec
    n = d.n_crossings
    if n == 0 and d.free_loops == 0:
        raise BracketError("empty link")
    if check and not is_coloring(d, beta.X, coloring):
        raise BracketError("not a valid coloring of the diagram")
    coeffs = _crossing_coeffs(d, coloring, beta)
    # products over all states, built one crossing at a time
    prods = [spec.one()]
    for k, (a, b) in enumerate(coeffs):
        prods = [p * a for p in prods] + [p * b for p in prods]
    # bit k of the index now selects B at crossing k
    table = state_table(d) if n else (0,)
    by_circles: dict[int, RingElement] = {}
    for mask, p in enumerate(prods):
        k = table[mask]
        by_circles[k] = by_circles.get(k, spec.zero()) + p
    total = spec.zero()
    for k, s in by_circles.items():
        total = total + s * beta.delta ** (k + d.free_loops - shift)
    writhe = sum(c.sign for c in d.crossings)
    return total * beta.w ** (-writhe)


def bracket_values(d: LinkDiagram, colorings, beta: BiquandleBracket,
                   normalization: str = "closed") -> list[RingElement]:
    return [evaluate_bracket(d, c, beta, check=False, normalization=normalization) for c in colorings]


# -- files ----------------------------------------------------------------------

def parse_bracket(text: str, X: Biquandle, strict: bool = True) -> BiquandleBracket:
    """Ring spec line, size line, then n rows of 2n literals forming [A|B].

    With ``strict=False`` the axioms are not enforced (see
    :meth:`BiquandleBracket.unchecked`); optional ``delta <value>`` and
    ``w <value>`` lines override the values read at (1, 1).
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    overrides = {}
    for ln in list(lines):
        key, _, rest = ln.partition(" ")
        if key in ("delta", "w"):
            overrides[key] = rest.strip()
            lines.remove(ln)
    if len(lines) < 2:
        raise BracketError("bracket file needs a ring line and a size line")
    spec = parse_ring_spec(lines[0])
    n = int(lines[1])
    if n != X.n:
        raise BracketError(f"bracket is over {n} elements but the biquandle has {X.n}")
    rows = [ln.split() for ln in lines[2:]]
    if len(rows) != n or any(len(r) != 2 * n for r in rows):
        raise BracketError(f"expected {n} rows of {2 * n} entries")
    A = [[spec(tok) for tok in r[:n]] for r in rows]
    B = [[spec(tok) for tok in r[n:]] for r in rows]
    if strict:
        return validate_bracket(X, spec, A, B)
    return BiquandleBracket.unchecked(X, spec, A, B, **{k: spec(v) for k, v in overrides.items()})


def format_bracket(beta: BiquandleBracket) -> str:
    lines = [beta.spec.describe(), str(beta.n)]
    for x in range(beta.n):
        lines.append(" ".join(e.key() for e in beta.A[x] + beta.B[x]))
    return "\n".join(lines) + "\n"
