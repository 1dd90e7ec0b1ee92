"""Formal polynomials with rational coefficients and rational exponents.

A value is a finite sum ``sum(c_i * t**r_i)`` stored as a map from exponent
to nonzero coefficient.  Exponent ``-inf`` encodes the term ``t**-inf = 0``
and is dropped on construction, which is what makes eternal cells invisible
to every invariant built on top of this ring.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegerCoefficient, NonPositiveBase
from .rationals import NEG_INF, as_fraction

_ZERO = Fraction(0)


class Polynomial:
    """Immutable element of the exponent ring; supports +, -, * and exact ==."""

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data: dict[Fraction, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coeff in items:
            if exp is NEG_INF:
                continue
            exp = as_fraction(exp)
            data[exp] = data.get(exp, _ZERO) + as_fraction(coeff)
        self._terms = {e: c for e, c in data.items() if c != 0}

    @classmethod
    def _raw(cls, terms: dict[Fraction, Fraction]) -> Polynomial:
        # internal: terms already canonical (no zeros, no -inf keys)
        poly = object.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw({})

    @classmethod
    def one(cls) -> Polynomial:
        return cls._raw({_ZERO: Fraction(1)})

    @classmethod
    def monomial(cls, coeff, exp) -> Polynomial:
        """coeff * t**exp; the zero polynomial when coeff == 0 or exp is -inf."""
        if exp is NEG_INF:
            return cls.zero()
        coeff = as_fraction(coeff)
        if coeff == 0:
            return cls.zero()
        return cls._raw({as_fraction(exp): coeff})

    def terms(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """(exponent, coefficient) pairs sorted by increasing exponent."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exp) -> Fraction:
        return self._terms.get(as_fraction(exp), _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, _ZERO) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return Polynomial._raw(out)

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Fraction, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, _ZERO) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def scale(self, factor) -> Polynomial:
        factor = as_fraction(factor)
        if factor == 0:
            return Polynomial.zero()
        return Polynomial._raw({e: c * factor for e, c in self._terms.items()})

    def derivative(self) -> Polynomial:
        """Formal d/dt: c*t**r -> c*r*t**(r-1); constant terms vanish."""
        return Polynomial._raw(
            {e - 1: c * e for e, c in self._terms.items() if e != 0}
        )

    def shift(self, amount) -> Polynomial:
        """Multiply by t**amount, i.e. add `amount` to every exponent."""
        amount = as_fraction(amount)
        return Polynomial._raw({e + amount: c for e, c in self._terms.items()})

    def truncate(self, upto) -> Polynomial:
        """Keep exactly the terms with exponent <= upto (-inf keeps nothing)."""
        if upto is NEG_INF:
            return Polynomial.zero()
        upto = as_fraction(upto)
        return Polynomial._raw({e: c for e, c in self._terms.items() if e <= upto})

    def mod2(self) -> Polynomial:
        """Replace every integer coefficient by its parity in {0, 1}."""
        out = {}
        for e, c in self._terms.items():
            if c.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient {c} of t^{e} is not an integer")
            if c.numerator % 2:
                out[e] = Fraction(1)
        return Polynomial._raw(out)

    def at_one(self) -> Fraction:
        """Exact evaluation at t = 1: the sum of the coefficients."""
        return sum(self._terms.values(), _ZERO)

    def evalf(self, t: float) -> float:
        """Approximate evaluation at a float t > 0 (plotting only)."""
        if not t > 0:
            raise NonPositiveBase(f"evalf requires t > 0, got {t}")
        return sum(float(c) * float(t) ** float(e) for e, c in self._terms.items())

    def render(self) -> str:
        """Canonical text: terms by increasing exponent, `coeff*t^exp` each."""
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.terms())

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()!r})"
