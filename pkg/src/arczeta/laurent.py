"""Exact arithmetic on integer Laurent polynomials in one variable u.

Virtual Poincare polynomials of real algebraic and arc-symmetric sets live
in Z[u]; dividing by powers of the affine-line class u introduces negative
exponents, so the realization target of every invariant computed by this
package is Z[u, u^-1].  Coefficients are plain Python integers and all
operations are exact, so results never wrap or round.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

TermSource = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class NonDivisibleError(ArithmeticError):
    """Raised by :meth:`LaurentPoly.div_exact` when division leaves a remainder."""


@dataclass(frozen=True, init=False)
class LaurentPoly:
    """An integer Laurent polynomial in canonical sparse form.

    ``terms`` holds ``(exponent, coefficient)`` pairs sorted by decreasing
    exponent, never storing a zero coefficient; the zero polynomial is the
    empty tuple.  Equality is structural and instances are hashable, so
    polynomials can key caches directly.

    >>> u = LaurentPoly.monomial(1)
    >>> (u - 1) * (u + 1)
    LaurentPoly('u^2 - 1')
    >>> (u - 1).shift(-2)
    LaurentPoly('u^-1 - u^-2')
    >>> LaurentPoly.monomial(-1) * u == LaurentPoly.monomial(0)
    True
    """

    terms: tuple[tuple[int, int], ...]

    def __init__(self, terms: TermSource = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            acc[exp] = acc.get(exp, 0) + coeff
        canonical = tuple(
            sorted(((e, c) for e, c in acc.items() if c != 0), key=lambda t: -t[0])
        )
        object.__setattr__(self, "terms", canonical)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        """The polynomial ``coeff * u**exp``."""
        return cls(((exp, coeff),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exp: int) -> int:
        """The coefficient of ``u**exp`` (0 if absent)."""
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    @staticmethod
    def _coerce(value: LaurentPoly | int) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly.monomial(0, value)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(tuple(self.terms) + tuple(other.terms))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def shift(self, offset: int) -> LaurentPoly:
        """Multiply by ``u**offset`` (offset may be negative)."""
        return LaurentPoly(tuple((e + offset, c) for e, c in self.terms))

    def degree_and_leading(self) -> tuple[int, int] | None:
        """``(degree, leading coefficient)``, or None for the zero polynomial.

        The zero polynomial deliberately has no degree: callers that branch
        on leading coefficients must handle the empty signal explicitly.
        """
        if not self.terms:
            return None
        return self.terms[0]

    def evaluate(self, x: int) -> int | Fraction:
        """Exact value at ``x != 0``; an int whenever the result is integral.

        >>> LaurentPoly({1: 2, 0: -1}).evaluate(-1)
        -3
        >>> LaurentPoly.monomial(-1).evaluate(2)
        Fraction(1, 2)
        """
        if x == 0:
            raise ValueError("cannot evaluate at 0: negative exponents")
        total = Fraction(0)
        base = Fraction(x)
        for e, c in self.terms:
            total += c * base**e
        return int(total) if total.denominator == 1 else total

    def div_exact(self, divisor: LaurentPoly) -> LaurentPoly:
        """The quotient q with ``self == q * divisor``.

        Raises :class:`NonDivisibleError` if no such Laurent polynomial
        exists (over the integers).

        >>> u = LaurentPoly.monomial(1)
        >>> (u * u - 1).div_exact(u - 1)
        LaurentPoly('u + 1')
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.terms:
            return LaurentPoly()
        div_deg, div_lead = divisor.terms[0]
        min_quot_exp = self.terms[-1][0] - divisor.terms[-1][0]
        remainder = dict(self.terms)
        quotient: dict[int, int] = {}
        while remainder:
            r_deg = max(remainder)
            exp = r_deg - div_deg
            if exp < min_quot_exp:
                raise NonDivisibleError(f"{self} is not divisible by {divisor}")
            coeff, residue = divmod(remainder[r_deg], div_lead)
            if residue:
                raise NonDivisibleError(f"{self} is not divisible by {divisor}")
            quotient[exp] = coeff
            for e, c in divisor.terms:
                target = e + exp
                value = remainder.get(target, 0) - c * coeff
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return LaurentPoly(quotient)

    # ------------------------------------------------------------------
    # display and serialization
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        """Canonical text form, terms by decreasing exponent: ``u^2 - 2*u + u^-1``."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for i, (e, c) in enumerate(self.terms):
            magnitude = abs(c)
            if e == 0:
                body = str(magnitude)
            else:
                power = "u" if e == 1 else f"u^{e}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if i == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"

    def to_json(self) -> list[list[int]]:
        """JSON form: ``[exponent, coefficient]`` pairs, decreasing exponent."""
        return [[e, c] for e, c in self.terms]

    @classmethod
    def from_json(cls, data: Iterable[Iterable[int]]) -> LaurentPoly:
        return cls(tuple((int(e), int(c)) for e, c in data))


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(0)
U = LaurentPoly.monomial(1)
