"""Exact coefficient rings: Z_n and the integer Laurent polynomials Z[q, 1/q].

Elements are immutable and hashable, so they can be used as dictionary keys
and as exponents of the formal sums built by :mod:`bbquiver.quiver`.

>>> Z3 = Modular(3)
>>> Z3(2) + Z3(2)
Z3(1)
>>> R = Laurent("q")
>>> q = R.gen()
>>> (q + 1) + R(-1) == q
True
>>> (q**-1 * q).key()
'1'
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

__all__ = [
    "RingError",
    "NotAUnitError",
    "Modular",
    "Laurent",
    "RingSpec",
    "RingElement",
    "FormalSum",
    "ring_add",
    "ring_mul",
    "ring_neg",
    "ring_inverse",
    "canonical_key",
    "parse_ring_spec",
]


class RingError(ValueError):
    pass


class NotAUnitError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Modular:
    """The ring Z_n of residues modulo ``modulus``."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or self.modulus < 2:
            raise RingError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    def __call__(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.spec != self:
                raise RingError("ring mismatch")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return RingElement(self, int(value) % self.modulus)

    def zero(self) -> RingElement:
        return RingElement(self, 0)

    def one(self) -> RingElement:
        return RingElement(self, 1)

    def parse(self, text: str) -> RingElement:
        s = text.replace(" ", "")
        if not re.fullmatch(r"[+-]?\d+", s):
            raise RingError(f"bad Z_{self.modulus} literal: {text!r}")
        return self(int(s))

    def elements(self):
        return [RingElement(self, r) for r in range(self.modulus)]

    def describe(self) -> str:
        return f"Zn {self.modulus}"

    def __str__(self):
        return f"Z{self.modulus}"


@dataclass(frozen=True)
class Laurent:
    """Integer Laurent polynomials in one variable."""

    var: str = "q"

    def __post_init__(self):
        if not isinstance(self.var, str) or not self.var.isidentifier():
            raise RingError(f"variable name must be an identifier, got {self.var!r}")

    def __call__(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.spec != self:
                raise RingError("ring mismatch")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Mapping):
            return self.from_dict(value)
        return self.from_dict({0: int(value)})

    def from_dict(self, coeffs: Mapping[int, int]) -> RingElement:
        terms = tuple(sorted((int(e), int(c)) for e, c in coeffs.items() if c != 0))
        return RingElement(self, terms)

    def monomial(self, coeff: int, exp: int) -> RingElement:
        return self.from_dict({exp: coeff})

    def gen(self) -> RingElement:
        return self.monomial(1, 1)

    def zero(self) -> RingElement:
        return RingElement(self, ())

    def one(self) -> RingElement:
        return self.monomial(1, 0)

    def parse(self, text: str) -> RingElement:
        return self.from_dict(_parse_laurent(text, self.var))

    def describe(self) -> str:
        return f"laurent {self.var}"

    def __str__(self):
        return f"Z[{self.var}^{{+-1}}]"


RingSpec = Union[Modular, Laurent]


def parse_ring_spec(text: str) -> RingSpec:
    """Parse ``Zn 3`` or ``laurent q``."""
    parts = text.split()
    if len(parts) == 2 and parts[0].lower() in ("zn", "z"):
        return Modular(int(parts[1]))
    if len(parts) == 2 and parts[0].lower() == "laurent":
        return Laurent(parts[1])
    raise RingError(f"unrecognised ring spec: {text!r}")


def _parse_laurent(text: str, var: str) -> dict[int, int]:
    # accepts canonical keys ("-q^8-q^6+1") and TeX-ish forms ("2q^{-3}", "2*q^-3")
    s = text.replace(" ", "").replace("{", "").replace("}", "")
    if s in ("", "0"):
        return {}
    v = re.escape(var)
    term = re.compile(
        rf"([+-]?)(?:(\d+)\*?)?(?:({v})(?:\^([+-]?\d+))?)?"
    )
    out: Counter = Counter()
    pos = 0
    while pos < len(s):
        m = term.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise RingError(f"bad Laurent literal {text!r} at column {pos + 1}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and not m.group(1):
            raise RingError(f"missing sign in Laurent literal {text!r} at column {pos + 1}")
        coeff = int(m.group(2)) if m.group(2) is not None else 1
        exp = 0
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        out[exp] += sign * coeff
        pos = m.end()
    return {e: c for e, c in out.items() if c != 0}


@dataclass(frozen=True, eq=True)
class RingElement:
    """An element of ``spec``.

    ``payload`` is the reduced residue for :class:`Modular` and a sorted tuple
    of ``(exponent, nonzero coefficient)`` pairs for :class:`Laurent`.
    """

    spec: RingSpec
    payload: object

    # -- coercion ---------------------------------------------------------
    def _coerce(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.spec != self.spec:
                raise RingError("ring mismatch")
            return other
        if isinstance(other, int):
            return self.spec(other)
        return NotImplemented

    def as_dict(self) -> dict[int, int]:
        if isinstance(self.spec, Laurent):
            return dict(self.payload)
        return {0: self.payload} if self.payload else {}

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(self.spec, Modular):
            return RingElement(self.spec, (self.payload + other.payload) % self.spec.modulus)
        acc = dict(self.payload)
        for e, c in other.payload:
            acc[e] = acc.get(e, 0) + c
        return self.spec.from_dict(acc)

    __radd__ = __add__

    def __neg__(self):
        if isinstance(self.spec, Modular):
            return RingElement(self.spec, (-self.payload) % self.spec.modulus)
        return RingElement(self.spec, tuple((e, -c) for e, c in self.payload))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if isinstance(self.spec, Modular):
            return RingElement(self.spec, (self.payload * other.payload) % self.spec.modulus)
        acc: dict[int, int] = {}
        for e1, c1 in self.payload:
            for e2, c2 in other.payload:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return self.spec.from_dict(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.spec.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- units ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.payload

    def is_one(self) -> bool:
        return self == self.spec.one()

    def is_unit(self) -> bool:
        if isinstance(self.spec, Modular):
            from math import gcd

            return gcd(self.payload, self.spec.modulus) == 1
        return len(self.payload) == 1 and abs(self.payload[0][1]) == 1

    def inverse(self) -> RingElement:
        """Multiplicative inverse; raises :class:`NotAUnitError` otherwise."""
        if not self.is_unit():
            raise NotAUnitError(f"{self.key()} is not a unit in {self.spec}")
        if isinstance(self.spec, Modular):
            return RingElement(self.spec, pow(self.payload, -1, self.spec.modulus))
        (e, c), = self.payload
        return RingElement(self.spec, ((-e, c),))

    # -- text ---------------------------------------------------------------
    def key(self) -> str:
        """Canonical text form; see :func:`canonical_key`."""
        if isinstance(self.spec, Modular):
            return str(self.payload)
        if not self.payload:
            return "0"
        var = self.spec.var
        parts = []
        for e, c in sorted(self.payload, reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    def tex(self) -> str:
        """Exponent-friendly rendering, e.g. ``-q^{5}-q^{-5}``."""
        return re.sub(r"\^(-?\d+)", r"^{\1}", self.key()).replace("*", "")

    def __str__(self):
        return self.key()

    def __repr__(self):
        if isinstance(self.spec, Modular):
            return f"Z{self.spec.modulus}({self.payload})"
        return f"Laurent({self.key()!r})"


def ring_add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def ring_neg(a: RingElement) -> RingElement:
    return -a


def ring_inverse(a: RingElement) -> RingElement:
    return a.inverse()


def canonical_key(a: RingElement) -> str:
    """Deterministic text form of ``a``.

    Laurent terms are written in strictly decreasing exponent order with
    explicit signs; residues as plain decimals.  ``spec.parse`` accepts every
    string produced here.
    """
    return a.key()


KeyPart = Union[str, int]


class FormalSum:
    """A finite multiset of keys with positive integer multiplicities.

    Keys are tuples whose components are canonical-key strings or integers,
    e.g. ``("-q^5-q^-5", 12)`` for a term ``u^{-q^5-q^-5} v^12``.  Ring
    elements are converted with :func:`canonical_key` on insertion.

    >>> f = FormalSum(["u", "v"])
    >>> f.add(("2", 1)); f.add(("1", 1), 4); f.add(("2", 1), 3)
    >>> f.to_text()
    '4u^{2}v^{1} + 4u^{1}v^{1}'
    """

    def __init__(self, variables: Iterable[str], terms=None):
        self.variables = tuple(variables)
        self._terms: Counter = Counter()
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                self.add(key, coeff)

    @staticmethod
    def _canon(key) -> tuple:
        return tuple(k.key() if isinstance(k, RingElement) else k for k in key)

    def add(self, key, coeff: int = 1) -> None:
        key = self._canon(key)
        if len(key) != len(self.variables):
            raise ValueError(f"key {key!r} does not match variables {self.variables}")
        if coeff < 0:
            raise ValueError("FormalSum coefficients are positive")
        if coeff:
            self._terms[key] += coeff

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def total(self) -> int:
        return sum(self._terms.values())

    def _sorted(self):
        return sorted(self._terms.items(), key=lambda kv: tuple(map(str, kv[0])), reverse=True)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for key, coeff in self._sorted():
            mono = "".join(f"{v}^{{{k}}}" for v, k in zip(self.variables, key))
            out.append(f"{coeff}{mono}")
        return " + ".join(out)

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    def __len__(self):
        return len(self._terms)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"FormalSum({self.to_text()!r})"
