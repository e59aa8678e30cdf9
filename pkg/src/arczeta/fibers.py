"""Virtual Poincare polynomials of the fibers {f = c}, c in {-1, 0, 1}.

Two independent engines compute the same invariant.

The closed engine first reduces the query: an empty sum and a sum with an
odd exponent are immediate (solving for an odd-power variable makes the
fiber the graph of a function of the remaining ones), and an all-even sum
turns into a pure 2-power form by dividing out odd parts of exponents
(the substitution x -> x^l, l odd, is a bijection compatible with all the
invariants used here).  On a 2-power form the answer is one of three
closed case formulas selected by the lowest 2-power level whose positive
and negative counts differ.

The recursive engine never touches those case formulas.  For target 0 it
peels the highest 2-power level: a +/- pair there contributes a factor
split (beta = u*beta(rest = 0) + (u-1)*u^vars(rest)), and a one-signed
residue block of size r rescales to beta = (u^r - 1)*beta(rest = -sign)
+ beta(rest = 0).  Targets +-1 reduce back to target 0 through an exact
division: adjoining one auxiliary top-level variable w gives
beta(f + w^top = 0) = (u-1)*beta(f = -1) + beta(f = 0), and with -w^top
the same identity for +1.  The division by (u - 1) must be exact; a
remainder would mean the engine itself is inconsistent.

Either engine specializes at u = -1 to the Euler characteristic with
compact support, for which :func:`euler_fiber` has direct closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from typing import Union

from .laurent import ONE, U, ZERO, LaurentPoly

Terms = tuple[tuple[int, int], ...]

TARGETS = (-1, 0, 1)


@dataclass(frozen=True, init=False)
class FiberQuery:
    """A fiber ``{sum of signed pure powers = target}``; terms may be empty."""

    terms: Terms
    target: int

    def __init__(self, terms, target: int):
        validated = tuple((int(k), int(s)) for k, s in terms)
        for k, s in validated:
            if k < 1:
                raise ValueError(f"exponent must be >= 1, got {k}")
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")
        if target not in TARGETS:
            raise ValueError(f"target must be -1, 0 or 1, got {target}")
        object.__setattr__(self, "terms", validated)
        object.__setattr__(self, "target", int(target))

    @property
    def variables(self) -> int:
        return len(self.terms)

    def negated(self) -> FiberQuery:
        """Flip every sign and the target; the fiber is literally the same set."""
        return FiberQuery(tuple((k, -s) for k, s in self.terms), -self.target)


@dataclass(frozen=True)
class EmptySum:
    """No variables at all: the fiber is a point (target 0) or empty."""


@dataclass(frozen=True)
class OddPresent:
    """Some exponent is odd: the fiber is a graph over the other variables."""

    variables: int


@dataclass(frozen=True, init=False)
class TwoPowerForm:
    """All exponents even, reduced to pure 2-powers and grouped by level.

    ``groups`` holds ``(level, positives, negatives)`` with strictly
    increasing levels (the actual exponent at a level is ``2**level``) and
    no empty group.
    """

    groups: tuple[tuple[int, int, int], ...]

    def __init__(self, groups):
        validated = tuple((int(l), int(a), int(b)) for l, a, b in groups)
        if not validated:
            raise ValueError("a two-power form needs at least one group")
        previous = 0
        for level, a, b in validated:
            if level < 1:
                raise ValueError(f"level must be >= 1, got {level}")
            if level <= previous and previous:
                raise ValueError("levels must be strictly increasing")
            if a < 0 or b < 0 or (a == 0 and b == 0):
                raise ValueError("each group needs a positive or negative count")
            previous = level
        object.__setattr__(self, "groups", validated)

    @property
    def variables(self) -> int:
        return sum(a + b for _, a, b in self.groups)

    @property
    def sigma_plus(self) -> int:
        return sum(a for _, a, _ in self.groups)

    @property
    def sigma_minus(self) -> int:
        return sum(b for _, _, b in self.groups)

    @property
    def first_unbalanced(self) -> tuple[int, int, int] | None:
        """The lowest-level group with differing counts, or None if all balance.

        The "all balanced" outcome is a structural case of its own (the
        sign pattern is symmetric at every level), so it is an explicit
        None rather than a sentinel level.
        """
        for group in self.groups:
            if group[1] != group[2]:
                return group
        return None


Reduced = Union[EmptySum, OddPresent, TwoPowerForm]


def reduce(query: FiberQuery) -> Reduced:
    """Classify a query into one of the three reduced shapes."""
    if not query.terms:
        return EmptySum()
    if any(k % 2 for k, _ in query.terms):
        return OddPresent(len(query.terms))
    counts: dict[int, list[int]] = {}
    for k, sign in query.terms:
        level = (k & -k).bit_length() - 1  # 2-adic valuation of k
        bucket = counts.setdefault(level, [0, 0])
        bucket[0 if sign > 0 else 1] += 1
    return TwoPowerForm(tuple((l, a, b) for l, (a, b) in sorted(counts.items())))


# ----------------------------------------------------------------------
# closed engine
# ----------------------------------------------------------------------


def beta_closed(query: FiberQuery) -> LaurentPoly:
    """Virtual Poincare polynomial of the fiber, by the closed case formulas."""
    shape = reduce(query)
    if isinstance(shape, EmptySum):
        return ONE if query.target == 0 else ZERO
    if isinstance(shape, OddPresent):
        return LaurentPoly.monomial(shape.variables - 1)
    return _closed_two_power(shape, query.target)


def _closed_two_power(form: TwoPowerForm, target: int) -> LaurentPoly:
    s = form.variables
    sp = form.sigma_plus
    sm = form.sigma_minus
    unbalanced = form.first_unbalanced
    plus_heavy = unbalanced is not None and unbalanced[1] > unbalanced[2]
    minus_heavy = unbalanced is not None and unbalanced[2] > unbalanced[1]
    base = LaurentPoly.monomial(s - 1)
    if target == 0:
        if plus_heavy:
            return base - LaurentPoly.monomial(sp - 1) + LaurentPoly.monomial(sm)
        return base + LaurentPoly.monomial(sp) - LaurentPoly.monomial(sm - 1)
    if target == 1:
        if plus_heavy:
            return base + LaurentPoly.monomial(sm)
        return base - LaurentPoly.monomial(sm - 1)
    if minus_heavy:
        return base + LaurentPoly.monomial(sp)
    return base - LaurentPoly.monomial(sp - 1)


# ----------------------------------------------------------------------
# recursive engine
# ----------------------------------------------------------------------


def beta_recursive(query: FiberQuery) -> LaurentPoly:
    """Same value as :func:`beta_closed`, from the elementary identities only."""
    shape = reduce(query)
    if isinstance(shape, EmptySum):
        return ONE if query.target == 0 else ZERO
    if isinstance(shape, OddPresent):
        return LaurentPoly.monomial(shape.variables - 1)
    return _recursive_two_power(shape.groups, query.target)


def _bump(groups: Terms, positive: bool) -> tuple[tuple[int, int, int], ...]:
    """Add one variable of the top level, signed + (positive) or -."""
    *head, (level, a, b) = groups
    if positive:
        a += 1
    else:
        b += 1
    return tuple(head) + ((level, a, b),)


@cache
def _recursive_two_power(
    groups: tuple[tuple[int, int, int], ...], target: int
) -> LaurentPoly:
    if not groups:
        return ONE if target == 0 else ZERO
    if target == 0:
        *head, (level, a, b) = groups
        if a and b:
            # cancel one +/- pair at the top level
            if a > 1 or b > 1:
                rest = tuple(head) + ((level, a - 1, b - 1),)
            else:
                rest = tuple(head)
            rest_vars = sum(x + y for _, x, y in rest)
            return U * _recursive_two_power(rest, 0) + (U - 1) * LaurentPoly.monomial(
                rest_vars
            )
        # one-signed residue block at the top level
        size = a or b
        sign = 1 if a else -1
        rest = tuple(head)
        scaled = LaurentPoly.monomial(size) - 1
        return scaled * _recursive_two_power(rest, -sign) + _recursive_two_power(
            rest, 0
        )
    # transport +-1 to 0 with one auxiliary top-level variable
    augmented = _bump(groups, positive=(target == -1))
    difference = _recursive_two_power(augmented, 0) - _recursive_two_power(groups, 0)
    return difference.div_exact(U - 1)


# ----------------------------------------------------------------------
# Euler characteristic with compact support
# ----------------------------------------------------------------------


def euler_fiber(query: FiberQuery) -> int:
    """chi_c of the fiber, by the closed parity formulas for two-power forms.

    Defined only for queries reducing to a two-power form; for the other
    shapes the beta engines answer directly.  Always equals
    ``beta_closed(query).evaluate(-1)``.
    """
    shape = reduce(query)
    if not isinstance(shape, TwoPowerForm):
        raise ValueError("Euler closed forms apply to two-power forms only")
    s = shape.variables
    base = (-1) ** (s - 1)
    if query.target == 0:
        return base + (-1) ** shape.sigma_plus + (-1) ** shape.sigma_minus
    if query.target == 1:
        return base + (-1) ** shape.sigma_minus
    return base + (-1) ** shape.sigma_plus
