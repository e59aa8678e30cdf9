"""Brieskorn polynomials: parsing, normalization, and the equivalence decision.

A Brieskorn polynomial is a sum of signed pure powers, one per variable.
Up to arc-analytic equivalence only the exponent of each variable and the
sign of its coefficient matter, and two singular Brieskorn polynomials in
the same number of variables are equivalent exactly when they share the
same (sorted) exponents and, for every sign-sensitive exponent, the same
number of positive and negative coefficients.  The sign-sensitive
exponents are the even exponents not divisible by any odd exponent of the
polynomial; signs elsewhere can be flipped by an equivalence.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations_with_replacement, groupby, product
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Syntax or semantic error in a polynomial string, with its position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, init=False)
class BrieskornPoly:
    """A nonempty sequence of ``(exponent, sign)`` terms, one per variable."""

    terms: tuple[tuple[int, int], ...]

    def __init__(self, terms: Iterable[tuple[int, int]]):
        validated = tuple((int(k), int(s)) for k, s in terms)
        if not validated:
            raise ValueError("a Brieskorn polynomial needs at least one term")
        for k, s in validated:
            if k < 1:
                raise ValueError(f"exponent must be >= 1, got {k}")
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")
        object.__setattr__(self, "terms", validated)

    @property
    def dimension(self) -> int:
        return len(self.terms)

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.terms)

    @property
    def max_exponent(self) -> int:
        return max(self.exponents)

    @property
    def is_singular(self) -> bool:
        """True iff every exponent is at least 2 (no linear term)."""
        return all(k >= 2 for k in self.exponents)

    @property
    def is_normalized(self) -> bool:
        """Exponents nondecreasing, positive signs first within equal exponents."""
        keys = [(k, -s) for k, s in self.terms]
        return keys == sorted(keys)

    def normalized(self) -> BrieskornPoly:
        """Reorder terms into the canonical presentation (same multiset)."""
        return BrieskornPoly(sorted(self.terms, key=lambda t: (t[0], -t[1])))

    def sign_counts(self, k: int) -> tuple[int, int]:
        """``(positives, negatives)`` among the terms of exponent k."""
        plus = sum(1 for kk, s in self.terms if kk == k and s > 0)
        minus = sum(1 for kk, s in self.terms if kk == k and s < 0)
        return plus, minus

    def relevant_exponents(self) -> tuple[int, ...]:
        """The sign-sensitive exponents, ascending: even exponents of the
        polynomial that no odd exponent of the polynomial divides.

        Only defined for singular polynomials.
        """
        if not self.is_singular:
            raise ValueError("relevant exponents are defined for singular polynomials")
        odd = {k for k in self.exponents if k % 2}
        return tuple(
            sorted(
                {
                    k
                    for k in self.exponents
                    if k % 2 == 0 and not any(k % o == 0 for o in odd)
                }
            )
        )

    def to_text(self) -> str:
        """Canonical text with variables renumbered x1..xd in term order."""
        parts: list[str] = []
        for i, (k, s) in enumerate(self.terms, start=1):
            body = f"x{i}^{k}"
            if i == 1:
                parts.append(body if s > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if s > 0 else f" - {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_text()


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coeff>\d+)\s*\*\s*)?x(?P<index>\d+)\s*(?:\^\s*(?P<exp>\d+))?"
)


def parse(text: str) -> BrieskornPoly:
    """Parse ``"x1^4 - x2^6 + x3^3"`` style input.

    Each term is ``[+-] [int *] xN [^ exp]`` with distinct variable indices
    N >= 1; a missing exponent means 1.  Any nonzero integer coefficient is
    collapsed to its sign; a zero coefficient is rejected.
    """
    pos = 0
    terms: list[tuple[int, int]] = []
    seen: set[int] = set()
    first = True
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TERM_RE.match(text, pos)
        if not match or match.group("index") is None:
            # point at the character where a variable was expected
            prefix = re.match(r"\s*[+-]?\s*(?:\d+\s*\*?\s*)?", text[pos:])
            raise ParseError("expected a term like 'x1^2'", pos + prefix.end())
        if not first and match.group("sign") is None:
            raise ParseError("expected '+' or '-' between terms", match.start())
        sign = -1 if match.group("sign") == "-" else 1
        coeff = match.group("coeff")
        if coeff is not None and int(coeff) == 0:
            raise ParseError("zero coefficient is not allowed", match.start("coeff"))
        index = int(match.group("index"))
        if index < 1:
            raise ParseError("variable indices start at x1", match.start("index"))
        if index in seen:
            raise ParseError(f"repeated variable x{index}", match.start("index"))
        seen.add(index)
        exp_text = match.group("exp")
        exponent = int(exp_text) if exp_text is not None else 1
        if exponent < 1:
            raise ParseError("exponent must be >= 1", match.start("exp"))
        terms.append((exponent, sign))
        pos = match.end()
        first = False
    if not terms:
        raise ParseError("empty polynomial", 0)
    return BrieskornPoly(terms)


def normalize(f: BrieskornPoly) -> BrieskornPoly:
    return f.normalized()


# ----------------------------------------------------------------------
# the equivalence decision
# ----------------------------------------------------------------------


class Cause(enum.Enum):
    BOTH_NONSINGULAR = "both-nonsingular"
    SINGULAR_VS_NONSINGULAR = "singular-vs-nonsingular"
    EXPONENT_MISMATCH = "exponent-mismatch"
    SIGN_MISMATCH = "sign-mismatch"
    ALL_CONDITIONS_MET = "all-conditions-met"


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Outcome of the pairwise decision, with the reason it was reached.

    ``detail`` carries the 1-based term index for an exponent mismatch and
    the exponent k for a sign mismatch; it is None otherwise.
    """

    equivalent: bool
    cause: Cause
    detail: int | None = None

    def describe(self) -> str:
        base = "equivalent" if self.equivalent else "not equivalent"
        if self.cause is Cause.EXPONENT_MISMATCH:
            return f"{base}: exponent mismatch at index {self.detail}"
        if self.cause is Cause.SIGN_MISMATCH:
            return f"{base}: sign mismatch at exponent {self.detail}"
        return f"{base}: {self.cause.value}"


def classify_pair(f: BrieskornPoly, g: BrieskornPoly) -> EquivalenceVerdict:
    """Decide arc-analytic equivalence of two Brieskorn polynomials.

    Both inputs must have the same number of variables; anything else is a
    usage error, not a negative verdict.  Nonsingular polynomials (some
    exponent 1) are all equivalent to a coordinate projection, hence to
    each other, and never to a singular one.  For two singular polynomials
    the decision reduces to equal exponent sequences plus equal sign
    counts at every sign-sensitive exponent.
    """
    if f.dimension != g.dimension:
        raise ValueError(
            f"dimension mismatch: {f.dimension} vs {g.dimension} variables"
        )
    nf, ng = f.normalized(), g.normalized()
    if not nf.is_singular and not ng.is_singular:
        return EquivalenceVerdict(True, Cause.BOTH_NONSINGULAR)
    if nf.is_singular != ng.is_singular:
        return EquivalenceVerdict(False, Cause.SINGULAR_VS_NONSINGULAR)
    for i, (kf, kg) in enumerate(zip(nf.exponents, ng.exponents), start=1):
        if kf != kg:
            return EquivalenceVerdict(False, Cause.EXPONENT_MISMATCH, i)
    for k in nf.relevant_exponents():
        if nf.sign_counts(k) != ng.sign_counts(k):
            return EquivalenceVerdict(False, Cause.SIGN_MISMATCH, k)
    return EquivalenceVerdict(True, Cause.ALL_CONDITIONS_MET)


# ----------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------


def iter_normalized_singular(
    dimension: int, max_exp: int, min_exp: int = 2
) -> Iterator[BrieskornPoly]:
    """All normalized singular polynomials in ``dimension`` variables with
    exponents in ``[min_exp, max_exp]``, in a fixed deterministic order.
    """
    if dimension < 1 or min_exp < 2 or max_exp < min_exp:
        raise ValueError("need dimension >= 1 and 2 <= min_exp <= max_exp")
    for ks in combinations_with_replacement(range(min_exp, max_exp + 1), dimension):
        runs = [(k, len(tuple(group))) for k, group in groupby(ks)]
        for plus_counts in product(*(range(length, -1, -1) for _, length in runs)):
            terms: list[tuple[int, int]] = []
            for (k, length), plus in zip(runs, plus_counts):
                terms.extend([(k, 1)] * plus)
                terms.extend([(k, -1)] * (length - plus))
            yield BrieskornPoly(terms)
