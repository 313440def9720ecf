"""Integer Laurent polynomials in the bracket variable ``A``."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Exact Laurent polynomial with integer coefficients.

    Coefficients are kept in a dict ``{exponent: coefficient}`` with no zero
    entries, so equality is structural.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            c[int(e)] = c.get(int(e), 0) + int(v)
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, value: int) -> "LaurentPoly":
        return cls({0: value})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree_span(self) -> tuple[int, int]:
        if not self._c:
            raise ValueError("zero polynomial has no span")
        return min(self._c), max(self._c)

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((e, v),) = self._c.items()
            if v not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({-e * -n: v ** -n})
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mirror(self) -> "LaurentPoly":
        """Substitute ``A -> A^-1``."""
        return LaurentPoly({-e: v for e, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._c, reverse=True)):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("A" if e == 1 else f"A^{e}")
            if i == 0:
                parts.append(("-" if v < 0 else "") + body)
            else:
                parts.append(("- " if v < 0 else "+ ") + body)
        return " ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Inverse of ``str``; accepts the canonical rendering only."""
        s = text.replace(" ", "").replace("−", "-")
        if s == "0":
            return cls()
        out: dict[int, int] = {}
        i = 0
        while i < len(s):
            sign = 1
            if s[i] in "+-":
                sign = -1 if s[i] == "-" else 1
                i += 1
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            has_digits = j > i
            coeff = int(s[i:j]) if has_digits else 1
            i = j
            exp = 0
            if i < len(s) and s[i] == "A":
                i += 1
                exp = 1
                if i < len(s) and s[i] == "^":
                    i += 1
                    j = i + 1 if s[i] == "-" else i
                    while j < len(s) and s[j].isdigit():
                        j += 1
                    exp = int(s[i:j])
                    i = j
            elif not has_digits:
                raise ValueError(f"cannot parse polynomial {text!r}")
            out[exp] = out.get(exp, 0) + sign * coeff
        return cls(out)


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


A = LaurentPoly.monomial(1)
DELTA = LaurentPoly({2: -1, -2: -1})
