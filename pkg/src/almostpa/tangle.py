"""Rational tangles from Conway vectors: fractions, drawings, sums, closures.

A vector ``R(a1, ..., am)`` has fraction ``am + 1/(a(m-1) + ... + 1/a1)``.
The drawing is built outward from ``a1``: the last entry is always a
horizontal twist block, and blocks alternate vertical/horizontal going
backwards, so ``a1`` is horizontal exactly when ``m`` is odd.  Odd-length
vectors start from the 0-tangle, even-length ones from the infinity tangle.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction as _Q
from math import gcd
from typing import Sequence

from .diagram import Diagram
from .planar import Fragment


@dataclass(frozen=True)
class TangleFraction:
    """``alpha/beta`` in lowest terms with ``beta >= 0``; ``1/0`` is infinity."""

    alpha: int
    beta: int

    def __post_init__(self):
        a, b = self.alpha, self.beta
        if a == 0 and b == 0:
            raise ValueError("0/0 is not a tangle fraction")
        if b < 0 or (b == 0 and a < 0):
            a, b = -a, -b
        g = gcd(a, b)
        object.__setattr__(self, "alpha", a // g)
        object.__setattr__(self, "beta", b // g)

    @classmethod
    def parse(cls, text: str) -> "TangleFraction":
        s = text.strip()
        if s.lower() in ("inf", "infinity", "1/0", "∞"):
            return cls(1, 0)
        if "/" in s:
            p, q = s.split("/")
            return cls(int(p), int(q))
        return cls(int(s), 1)

    @property
    def is_infinite(self) -> bool:
        return self.beta == 0

    @property
    def value(self) -> _Q:
        if self.beta == 0:
            raise ZeroDivisionError("infinity tangle has no rational value")
        return _Q(self.alpha, self.beta)

    def sign(self) -> int:
        return (self.alpha > 0) - (self.alpha < 0)

    def __str__(self):
        if self.beta == 0:
            return "inf"
        if self.beta == 1:
            return str(self.alpha)
        return f"{self.alpha}/{self.beta}"


def parse_conway(text: str) -> tuple[int, ...]:
    s = text.strip()
    if not re.fullmatch(r"\[\s*(-?\d+\s*(,\s*-?\d+\s*)*)?\]", s):
        raise ValueError(f"malformed Conway vector {text!r}")
    body = s[1:-1].strip()
    return tuple(int(x) for x in body.split(",")) if body else ()


def format_conway(cv: Sequence[int]) -> str:
    return "[" + ",".join(str(a) for a in cv) + "]"


def fraction_of(cv: Sequence[int]) -> TangleFraction:
    num, den = 1, 0
    for a in cv:
        num, den = a * num + den, num
    return TangleFraction(num, den)


def canonical_vector(f: TangleFraction) -> tuple[int, ...]:
    """Alternating Conway vector (all entries of one sign) for ``f``."""
    if f.is_infinite:
        return ()
    p, q = abs(f.alpha), f.beta
    cf = []
    while q:
        cf.append(p // q)
        p, q = q, p % q
    s = -1 if f.alpha < 0 else 1
    return tuple(s * c for c in reversed(cf))


@dataclass(frozen=True)
class Tangle:
    """A 4-ended tangle diagram (ports NW, NE, SW, SE)."""

    fragment: Fragment

    @property
    def n(self) -> int:
        return self.fragment.n


@dataclass(frozen=True)
class RationalTangle(Tangle):
    conway: tuple[int, ...] = ()

    @property
    def fraction(self) -> TangleFraction:
        return fraction_of(self.conway)


def _twist(frag: Fragment, a: int, horizontal: bool) -> Fragment:
    step = 1 if a > 0 else -1
    for _ in range(abs(a)):
        x = Fragment.crossing(step)
        frag = Fragment.tangle_sum(frag, x) if horizontal else Fragment.tangle_product(frag, x)
    return frag


def tangle_fragment(cv: Sequence[int]) -> Fragment:
    m = len(cv)
    frag = Fragment.zero() if m % 2 else Fragment.infinity()
    horizontal = bool(m % 2)
    for a in cv:
        frag = _twist(frag, a, horizontal)
        horizontal = not horizontal
    return frag


def tangle_diagram(cv: Sequence[int]) -> RationalTangle:
    return _tangle_diagram(tuple(int(a) for a in cv))


@lru_cache(maxsize=4096)
def _tangle_diagram(cv: tuple[int, ...]) -> RationalTangle:
    # fragments are never mutated in place, so sharing cached ones is safe
    return RationalTangle(tangle_fragment(cv), cv)


def integer_tangle(a: int) -> RationalTangle:
    return tangle_diagram((a,))


def tangle_sum(t1: Tangle, t2: Tangle) -> Tangle:
    return Tangle(Fragment.tangle_sum(t1.fragment, t2.fragment))


def tangle_product(t1: Tangle, t2: Tangle) -> Tangle:
    return Tangle(Fragment.tangle_product(t1.fragment, t2.fragment))


def closures(t: Tangle, kind: str = "numerator") -> Diagram:
    if kind == "numerator":
        return t.fragment.numerator().to_diagram()
    if kind == "denominator":
        return t.fragment.denominator().to_diagram()
    raise ValueError(f"unknown closure {kind!r}")


def numerator_closure(t: Tangle) -> Diagram:
    return closures(t, "numerator")


def denominator_closure(t: Tangle) -> Diagram:
    return closures(t, "denominator")


def rotate_pi(t: Tangle) -> Tangle:
    frag = t.fragment.rotate_pi()
    if isinstance(t, RationalTangle):
        return RationalTangle(frag, t.conway)
    return Tangle(frag)
