"""Finite biquandles given by operation tables.

Elements are ``0..n-1`` internally.  Text files and printed output are
1-indexed, matching the usual way operation tables are written down.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .rings import Modular, RingElement

__all__ = [
    "BiquandleError",
    "Violation",
    "Biquandle",
    "BqMap",
    "validate_biquandle",
    "dihedral_quandle",
    "conjugation_quandle",
    "alexander_biquandle",
    "trivial_biquandle",
    "is_homomorphism",
    "endomorphisms",
    "parse_biquandle",
    "format_biquandle",
    "parse_maps",
]


class BiquandleError(ValueError):
    """Malformed tables, or tables failing the biquandle axioms."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class Violation:
    """One failed axiom instance; witnesses are 0-indexed."""

    axiom: str
    witnesses: tuple

    def describe(self) -> str:
        names = "xyz"
        parts = [f"axiom={self.axiom}"]
        parts += [f"{names[i]}={w + 1}" for i, w in enumerate(self.witnesses)]
        return " ".join(parts)


def _check_shape(under, over) -> int:
    n = len(under)
    if n == 0:
        raise BiquandleError("empty operation table")
    for name, tab in (("under", under), ("over", over)):
        if len(tab) != n or any(len(row) != n for row in tab):
            raise BiquandleError(f"{name} table is not {n}x{n}")
        for row in tab:
            for v in row:
                if not (isinstance(v, int) and 0 <= v < n):
                    raise BiquandleError(f"{name} table entry {v!r} out of range")
    return n


def validate_biquandle(under, over) -> list[Violation]:
    """Return every violated axiom instance (empty list means valid).

    ``under[x][y]`` is x ⊳̲ y and ``over[x][y]`` is x ⊳̄ y.  Checked:

    * ``i``: x ⊳̲ x = x ⊳̄ x;
    * ``ii.under`` / ``ii.over``: y ↦ column maps x ↦ x ⊳̲ y, x ↦ x ⊳̄ y
      are bijections (witness: the column y);
    * ``ii.S``: (x, y) ↦ (y ⊳̄ x, x ⊳̲ y) is a bijection of X × X
      (witness: a pair hit twice);
    * ``iii.1``–``iii.3``: the three exchange laws at (x, y, z).
    """
    n = _check_shape(under, over)
    out: list[Violation] = []
    U, O = under, over
    for x in range(n):
        if U[x][x] != O[x][x]:
            out.append(Violation("i", (x,)))
    for y in range(n):
        if len({U[x][y] for x in range(n)}) != n:
            out.append(Violation("ii.under", (y,)))
        if len({O[x][y] for x in range(n)}) != n:
            out.append(Violation("ii.over", (y,)))
    seen = {}
    for x in range(n):
        for y in range(n):
            img = (O[y][x], U[x][y])
            if img in seen:
                out.append(Violation("ii.S", (x, y)))
            else:
                seen[img] = (x, y)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if U[U[x][y]][U[z][y]] != U[U[x][z]][O[y][z]]:
                    out.append(Violation("iii.1", (x, y, z)))
                if O[U[x][y]][U[z][y]] != U[O[x][z]][O[y][z]]:
                    out.append(Violation("iii.2", (x, y, z)))
                if O[O[x][y]][O[z][y]] != O[O[x][z]][U[y][z]]:
                    out.append(Violation("iii.3", (x, y, z)))
    return out


class Biquandle:
    """A validated finite biquandle.

    Construction raises :class:`BiquandleError` carrying the violation list
    when the tables are not a biquandle.
    """

    __slots__ = ("under", "over", "n", "name")

    def __init__(self, under: Sequence[Sequence[int]], over: Sequence[Sequence[int]], name: str = ""):
        under = tuple(tuple(int(v) for v in row) for row in under)
        over = tuple(tuple(int(v) for v in row) for row in over)
        bad = validate_biquandle(under, over)
        if bad:
            raise BiquandleError(
                f"not a biquandle: {len(bad)} violations, first {bad[0].describe()}", bad
            )
        self.under = under
        self.over = over
        self.n = len(under)
        self.name = name

    @classmethod
    def from_one_indexed(cls, under, over, name: str = "") -> Biquandle:
        return cls([[v - 1 for v in row] for row in under], [[v - 1 for v in row] for row in over], name)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Biquandle) and (self.under, self.over) == (other.under, other.over)

    def __hash__(self):
        return hash((self.under, self.over))

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Biquandle{label} of order {self.n}>"

    def is_quandle(self) -> bool:
        return all(self.over[x][y] == x for x in range(self.n) for y in range(self.n))

    def under_inv(self, y: int) -> list[int]:
        """Inverse of x ↦ x ⊳̲ y as a lookup list."""
        inv = [0] * self.n
        for x in range(self.n):
            inv[self.under[x][y]] = x
        return inv

    def over_inv(self, y: int) -> list[int]:
        inv = [0] * self.n
        for x in range(self.n):
            inv[self.over[x][y]] = x
        return inv


@dataclass(frozen=True)
class BqMap:
    """A map between finite sets given by its image list (0-indexed)."""

    images: tuple[int, ...]
    target_size: int

    @classmethod
    def identity(cls, n: int) -> BqMap:
        return cls(tuple(range(n)), n)

    @classmethod
    def constant(cls, n: int, value: int) -> BqMap:
        return cls((value,) * n, n)

    @property
    def source_size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def compose(self, other: BqMap) -> BqMap:
        """``self ∘ other``."""
        return BqMap(tuple(self.images[i] for i in other.images), self.target_size)

    def one_indexed(self) -> str:
        return " ".join(str(i + 1) for i in self.images)


def is_homomorphism(f: BqMap, X: Biquandle, Y: Biquandle) -> bool:
    if f.source_size != X.n or f.target_size != Y.n:
        return False
    if any(not 0 <= v < Y.n for v in f.images):
        return False
    im = f.images
    for a in range(X.n):
        for b in range(X.n):
            if im[X.under[a][b]] != Y.under[im[a]][im[b]]:
                return False
            if im[X.over[a][b]] != Y.over[im[a]][im[b]]:
                return False
    return True


def endomorphisms(X: Biquandle) -> list[BqMap]:
    """All of Hom(X, X), in lexicographic order of image lists.

    Plain exhaustive search over the n**n maps.  Hom(X, X) is a monoid under
    composition (it is sometimes loosely called the endomorphism ring).
    """
    n = X.n
    out = []
    for images in itertools.product(range(n), repeat=n):
        f = BqMap(images, n)
        if is_homomorphism(f, X, X):
            out.append(f)
    return out


# -- constructors -----------------------------------------------------------

def dihedral_quandle(n: int) -> Biquandle:
    """x ⊳̲ y = 2y - x (mod n), x ⊳̄ y = x."""
    if n < 2:
        raise BiquandleError("dihedral quandle needs n >= 2")
    under = [[(2 * y - x) % n for y in range(n)] for x in range(n)]
    over = [[x] * n for x in range(n)]
    return Biquandle(under, over, name=f"R{n}")


def trivial_biquandle(n: int) -> Biquandle:
    if n < 1:
        raise BiquandleError("trivial biquandle needs n >= 1")
    table = [[x] * n for x in range(n)]
    return Biquandle(table, table, name=f"T{n}")


def conjugation_quandle(mult: Sequence[Sequence[int]], power: int = 1) -> Biquandle:
    """n-fold conjugation quandle x ⊳̲ y = y^k x y^-k of a finite group.

    ``mult[a][b]`` is the 0-indexed product ab; the identity and inverses are
    read off the table.
    """
    n = len(mult)
    ident = next(e for e in range(n) if all(mult[e][a] == a == mult[a][e] for a in range(n)))
    inv = [next(b for b in range(n) if mult[a][b] == ident) for a in range(n)]

    def pw(y, k):
        r = ident
        base = y if k >= 0 else inv[y]
        for _ in range(abs(k)):
            r = mult[r][base]
        return r

    under = [[mult[mult[pw(y, power)][x]][pw(y, -power)] for y in range(n)] for x in range(n)]
    over = [[x] * n for x in range(n)]
    return Biquandle(under, over, name=f"Conj{power}")


def alexander_biquandle(spec: Modular, t: RingElement | int, s: RingElement | int) -> Biquandle:
    """Alexander biquandle on Z_n: x ⊳̲ y = tx + (s - t)y, x ⊳̄ y = sx."""
    if not isinstance(spec, Modular):
        raise BiquandleError("Alexander biquandles are only built over Z_n")
    t, s = spec(t), spec(s)
    if not (t.is_unit() and s.is_unit()):
        raise BiquandleError(f"t={t.key()} and s={s.key()} must be units of {spec}")
    n = spec.modulus
    tv, sv = t.payload, s.payload
    under = [[(tv * x + (sv - tv) * y) % n for y in range(n)] for x in range(n)]
    over = [[(sv * x) % n for _ in range(n)] for x in range(n)]
    return Biquandle(under, over, name=f"Alex(Z{n},t={tv},s={sv})")


# -- text formats -----------------------------------------------------------

def _int_rows(lines):
    return [[int(tok) for tok in line.split()] for line in lines]


def parse_biquandle(text: str, name: str = "") -> Biquandle:
    """Parse ``n``, n rows of ⊳̲, a blank line, n rows of ⊳̄ (1-indexed)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    body = [ln for ln in lines if ln]
    if not body:
        raise BiquandleError("empty biquandle file")
    try:
        n = int(body[0])
        rows = _int_rows(body[1:])
    except ValueError as exc:
        raise BiquandleError(f"non-integer token in biquandle file: {exc}") from None
    if len(rows) != 2 * n:
        raise BiquandleError(f"expected {2 * n} table rows, found {len(rows)}")
    return Biquandle.from_one_indexed(rows[:n], rows[n:], name=name)


def format_biquandle(X: Biquandle) -> str:
    lines = [str(X.n)]
    lines += [" ".join(str(v + 1) for v in row) for row in X.under]
    lines.append("")
    lines += [" ".join(str(v + 1) for v in row) for row in X.over]
    return "\n".join(lines) + "\n"


def parse_maps(text: str, n: int) -> list[BqMap]:
    """One 1-indexed image list per line, e.g. ``2 1 3 4``."""
    maps = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        imgs = tuple(int(tok) - 1 for tok in line.split())
        if len(imgs) != n or any(not 0 <= v < n for v in imgs):
            raise BiquandleError(f"line {lineno}: expected {n} images in 1..{n}")
        maps.append(BqMap(imgs, n))
    return maps
