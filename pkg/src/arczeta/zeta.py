"""Realized motivic zeta functions of Brieskorn polynomials.

A zeta coefficient is not stored symbolically; it is realized through the
three Laurent-polynomial shadows that together form a complete invariant
for Brieskorn polynomials: the image under the forgetful map (``bbar``)
and under the two fiber maps at +1 and -1 (``fplus``, ``fminus``), each
composed with the virtual Poincare polynomial.

For a singular polynomial with exponents ``k_1..k_d`` the n-th modified
coefficient factors through the sub-polynomial on S_n = {i : k_i | n}.
With E_n = sum_i floor(n/k_i) and C(S, c) the fiber invariant of that
sub-polynomial at target c, the realization is

    bbar_n   = (u^|S_n| - u*C(S_n, 0)) * u^-E_n
    fplus_n  = (C(S_n, +1) - C(S_n, 0)) * u^-E_n
    fminus_n = (C(S_n, -1) - C(S_n, 0)) * u^-E_n

valid for every n >= 1 (an empty S_n gives the triple of the scalar
coefficient -u^-E_n).  The single-monomial series has its own direct
band-by-band formula, and for single monomials the plain (unmodified)
zeta function is also computed straight from the arc-space definition,
giving an oracle completely independent of the formulas above.

Plain and modified series carry the same information; the conversions in
both directions only ever add scalar multiples of the unit coefficient,
whose realization triple is ``(c*(u-1), c, c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .brieskorn import BrieskornPoly
from .fibers import FiberQuery, beta_closed
from .laurent import ONE, U, ZERO, LaurentPoly

Kind = Literal["modified", "plain"]

_ZERO_TRIPLE: "RealizedCoefficient"


@dataclass(frozen=True)
class RealizedCoefficient:
    """The three Laurent-polynomial realizations of one zeta coefficient."""

    bbar: LaurentPoly
    fplus: LaurentPoly
    fminus: LaurentPoly

    def add_unit_multiple(self, scalar: LaurentPoly) -> RealizedCoefficient:
        """Add ``scalar * unit`` to the underlying class.

        The unit realizes to ``(u - 1, 1, 1)``: its forgetful image is the
        punctured line, and each fiber map picks out one point of it.
        """
        return RealizedCoefficient(
            self.bbar + scalar * (U - 1),
            self.fplus + scalar,
            self.fminus + scalar,
        )

    @property
    def is_zero(self) -> bool:
        return self.bbar.is_zero and self.fplus.is_zero and self.fminus.is_zero


_ZERO_TRIPLE = RealizedCoefficient(ZERO, ZERO, ZERO)


@dataclass(frozen=True, init=False)
class RealizedZeta:
    """A truncated zeta series: coefficients for n = 1..order.

    ``kind`` tags the series as plain or modified; mixing kinds in any
    operation is an error, never a silent coercion.
    """

    kind: Kind
    coeffs: tuple[RealizedCoefficient, ...]

    def __init__(self, kind: Kind, coeffs):
        if kind not in ("modified", "plain"):
            raise ValueError(f"kind must be 'modified' or 'plain', got {kind!r}")
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a zeta series needs order >= 1")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, n: int) -> RealizedCoefficient:
        """The coefficient of T^n, 1-based."""
        if not 1 <= n <= self.order:
            raise IndexError(f"n must be in 1..{self.order}, got {n}")
        return self.coeffs[n - 1]

    @classmethod
    def zero(cls, kind: Kind, order: int) -> RealizedZeta:
        return cls(kind, (_ZERO_TRIPLE,) * order)


def default_order(f: BrieskornPoly) -> int:
    """Default truncation: twice the largest exponent, so every divisor
    pattern among the exponents occurs at least twice."""
    return 2 * f.max_exponent


def modified_zeta(f: BrieskornPoly, order: int | None = None) -> RealizedZeta:
    """The realized modified zeta function of f, truncated at ``order``.

    A nonsingular polynomial has the zero series.
    """
    n_max = default_order(f) if order is None else order
    if n_max < 1:
        raise ValueError("order must be >= 1")
    if not f.is_singular:
        return RealizedZeta.zero("modified", n_max)
    coeffs = []
    for n in range(1, n_max + 1):
        sub = tuple(term for term in f.terms if n % term[0] == 0)
        drop = sum(n // k for k, _ in f.terms)
        c0 = beta_closed(FiberQuery(sub, 0))
        cplus = beta_closed(FiberQuery(sub, 1))
        cminus = beta_closed(FiberQuery(sub, -1))
        coeffs.append(
            RealizedCoefficient(
                (LaurentPoly.monomial(len(sub)) - U * c0).shift(-drop),
                (cplus - c0).shift(-drop),
                (cminus - c0).shift(-drop),
            )
        )
    return RealizedZeta("modified", coeffs)


def real_root_counts(sign: int, k: int) -> tuple[int, int]:
    """Numbers of real solutions of ``sign * x^k = +1`` and ``= -1``."""
    if k % 2:
        return 1, 1
    return (2, 0) if sign > 0 else (0, 2)


def monomial_modified_zeta(sign: int, k: int, order: int) -> RealizedZeta:
    """Modified zeta series of a single signed monomial of exponent k >= 2.

    Away from multiples of k the coefficient is the scalar
    ``-u^-floor(n/k)`` times the unit; at n = m*k it is
    ``u^-m * (class of sign*x^k minus unit)``, whose fiber realizations
    count real k-th roots.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if k < 2:
        raise ValueError(f"exponent must be >= 2, got {k}")
    if order < 1:
        raise ValueError("order must be >= 1")
    rplus, rminus = real_root_counts(sign, k)
    coeffs = []
    for n in range(1, order + 1):
        if n % k == 0:
            scale = LaurentPoly.monomial(-(n // k))
            coeffs.append(
                RealizedCoefficient(ZERO, (rplus - 1) * scale, (rminus - 1) * scale)
            )
        else:
            scale = LaurentPoly.monomial(-(n // k))
            coeffs.append(
                RealizedCoefficient((ONE - U) * scale, -scale, -scale)
            )
    return RealizedZeta("modified", coeffs)


# ----------------------------------------------------------------------
# plain <-> modified conversions
# ----------------------------------------------------------------------


def plain_from_modified(z: RealizedZeta) -> RealizedZeta:
    """Convert a modified series to the plain zeta function, exactly.

    The n-th plain coefficient is the modified one plus ``c_n`` times the
    unit, with scalar c_n = u^-n - sum_{m<=n} bbar_m * u^(m-n-1).
    """
    if z.kind != "modified":
        raise ValueError("plain_from_modified expects a modified series")
    coeffs = []
    running = ZERO  # sum of bbar_m * u^m so far
    for n, coefficient in enumerate(z.coeffs, start=1):
        running = running + coefficient.bbar.shift(n)
        scalar = LaurentPoly.monomial(-n) + (-running).shift(-n - 1)
        coeffs.append(coefficient.add_unit_multiple(scalar))
    return RealizedZeta("plain", coeffs)


def modified_from_plain(z: RealizedZeta) -> RealizedZeta:
    """Exact inverse of :func:`plain_from_modified` up to the same order."""
    if z.kind != "plain":
        raise ValueError("modified_from_plain expects a plain series")
    coeffs = []
    running = ZERO  # sum of plain bbar_m so far
    for coefficient in z.coeffs:
        running = running + coefficient.bbar
        scalar = ONE - running
        coeffs.append(coefficient.add_unit_multiple(-scalar))
    return RealizedZeta("modified", coeffs)


# ----------------------------------------------------------------------
# arc-space oracle for single monomials
# ----------------------------------------------------------------------


def arc_space_monomial_oracle(sign: int, k: int, n: int) -> RealizedCoefficient:
    """n-th plain zeta coefficient of ``sign * x^k``, from first principles.

    Stratify truncated arcs gamma(t) = a_1 t + ... + a_n t^n by the index
    m of the first nonzero coefficient: then sign*gamma^k has exact order
    k*m with angular component sign*a_m^k, so the order-n stratum is
    nonempty only for n = k*m and is then {a_m != 0} x R^(n-m).  After the
    u^-n normalization the forgetful image realizes to (u-1)*u^-m and the
    fiber over e to (real solutions of sign*x^k = e) * u^-m.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if k < 2:
        raise ValueError(f"exponent must be >= 2, got {k}")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if n % k:
        return _ZERO_TRIPLE
    m = n // k
    rplus, rminus = real_root_counts(sign, k)
    stratum = LaurentPoly.monomial(n - m).shift(-n)  # u^(n-m) * u^-n
    return RealizedCoefficient((U - 1) * stratum, rplus * stratum, rminus * stratum)


def zeta_equal(a: RealizedZeta, b: RealizedZeta) -> bool:
    """Componentwise equality; comparing different kinds or orders is an error."""
    if a.kind != b.kind:
        raise ValueError(f"kind mismatch: {a.kind} vs {b.kind}")
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    return a.coeffs == b.coeffs


# ----------------------------------------------------------------------
# serialization
# ----------------------------------------------------------------------


def zeta_to_json(z: RealizedZeta) -> dict:
    """JSON form: {kind, order, coeffs: [{n, bbar, fplus, fminus}]}."""
    return {
        "kind": z.kind,
        "order": z.order,
        "coeffs": [
            {
                "n": n,
                "bbar": c.bbar.to_json(),
                "fplus": c.fplus.to_json(),
                "fminus": c.fminus.to_json(),
            }
            for n, c in enumerate(z.coeffs, start=1)
        ],
    }


def zeta_from_json(data: dict) -> RealizedZeta:
    entries = sorted(data["coeffs"], key=lambda item: item["n"])
    if [item["n"] for item in entries] != list(range(1, data["order"] + 1)):
        raise ValueError("coefficient indices must be exactly 1..order")
    coeffs = tuple(
        RealizedCoefficient(
            LaurentPoly.from_json(item["bbar"]),
            LaurentPoly.from_json(item["fplus"]),
            LaurentPoly.from_json(item["fminus"]),
        )
        for item in entries
    )
    return RealizedZeta(data["kind"], coeffs)
