"""Exact sparse Laurent polynomials in the bracket variable A.

Coefficients are arbitrary-precision Python ints and exponents are
(possibly negative) ints, so bracket and trace computations downstream
stay exact. Instances are immutable: every operation returns a new value,
and values can be shared freely between threads.
"""

from __future__ import annotations

import cmath


class LaurentPoly:
    """A sparse Laurent polynomial with integer coefficients.

    Stored as a map exponent -> nonzero coefficient; the zero polynomial
    is the empty map. Supports +, -, * (with another polynomial or an
    int) and ** with a nonnegative integer exponent.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        """coeff * A^exp; the zero polynomial when coeff == 0."""
        return cls({exp: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    @staticmethod
    def _coerce(value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly({0: value})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def invert_variable(self) -> "LaurentPoly":
        """Substitute A -> A^-1 (negate every exponent)."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def evaluate_phase(self, theta: float) -> complex:
        """Evaluate at A = e^(i*theta) on the unit circle."""
        return sum(
            (c * cmath.exp(1j * theta * e) for e, c in self._terms.items()),
            complex(0),
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            parts.append(str(c) if e == 0 else f"{c}*A^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def to_json(self) -> list:
        """[[exponent, coefficient-as-string], ...] sorted by descending exponent.

        Coefficients are decimal strings so arbitrary-precision values survive
        JSON round trips intact.
        """
        return [[e, str(self._terms[e])] for e in sorted(self._terms, reverse=True)]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in data})


def delta() -> LaurentPoly:
    """The loop value -A^2 - A^-2 (what a closed circle contributes)."""
    return LaurentPoly({2: -1, -2: -1})


def jones_substitute(f: LaurentPoly) -> LaurentPoly:
    """Rewrite a normalized bracket in A as a polynomial in q = t^(1/4).

    The substitution A = t^(-1/4) sends c*A^e to c*q^(-e), so the result
    carries integer exponents of q; an exponent 4k in q is t^k.
    """
    return LaurentPoly({-e: c for e, c in f.terms.items()})


def format_jones(p: LaurentPoly) -> str:
    """Render a q-polynomial with exponents written as powers of t = q^4.

    Terms are ordered by increasing |exponent| (the customary way Jones
    polynomials are written out), positive exponent first on ties.
    Fractional powers of t print as t^1/2- or t^1/4-style labels.
    """
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.terms, key=lambda e: (abs(e), e < 0)):
        c = p.coeff(e)
        if e == 0:
            parts.append(str(c))
        elif e % 4 == 0:
            parts.append(f"{c}*t^{e // 4}")
        elif e % 2 == 0:
            parts.append(f"{c}*t^{e // 2}/2")
        else:
            parts.append(f"{c}*t^{e}/4")
    return " + ".join(parts)
