"""Recover sign counts at the sign-sensitive exponents from a zeta series.

Given the exponent vector and the realized modified zeta function, the
coefficient at n = k for each sign-sensitive exponent k determines the
fiber invariant of the sub-polynomial on the exponents dividing k:

    pi = (u * fplus_k - bbar_k) * u^(E_k - 1) + u^(D_k - 1)

with E_k = sum_i floor(k/k_i) and D_k = #{i : k_i divides k}.  That fiber
value sits over a sub-polynomial whose exponents are all sign-sensitive,
and its deviation rho = pi - u^(D_k - 1) is a single signed monomial: a
positive leading coefficient means deg(rho) equals the total number of
negative signs among the dividing exponents, a negative one means it is
that total minus 1.  Processing k in ascending order, the totals of
previously handled divisors peel off and leave the count at k itself.

Exponents are an input here, not derived from the series: recovering the
exponent vector itself needs machinery outside this package's scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .brieskorn import BrieskornPoly
from .laurent import LaurentPoly, U
from .zeta import RealizedZeta, modified_zeta


class RecoveryError(ValueError):
    """The series cannot belong to a Brieskorn polynomial with these exponents."""


@dataclass(frozen=True)
class SignCountRecord:
    """Recovered counts at one exponent, with the full decision trace."""

    k: int
    sigma_plus: int
    sigma_minus: int
    pi: LaurentPoly
    rho: LaurentPoly
    branch: str  # "positive" or "negative" leading coefficient of rho

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "sigma_plus": self.sigma_plus,
            "sigma_minus": self.sigma_minus,
            "pi": self.pi.to_json(),
            "rho": self.rho.to_json(),
            "branch": self.branch,
        }


@dataclass(frozen=True)
class SignRecovery:
    """Records for every sign-sensitive exponent, ascending; may be empty."""

    records: tuple[SignCountRecord, ...]

    def counts(self) -> dict[int, tuple[int, int]]:
        return {r.k: (r.sigma_plus, r.sigma_minus) for r in self.records}


def _sensitive_exponents(exponents: Sequence[int]) -> list[int]:
    odd = {k for k in exponents if k % 2}
    return sorted(
        {k for k in exponents if k % 2 == 0 and not any(k % o == 0 for o in odd)}
    )


def recover(exponents: Sequence[int], z: RealizedZeta) -> SignRecovery:
    """Recover (sigma_plus, sigma_minus) for each sign-sensitive exponent.

    ``exponents`` must be the ascending exponent vector of a singular
    polynomial (all >= 2); ``z`` its realized modified zeta function, of
    order at least the largest sign-sensitive exponent.
    """
    exponents = list(exponents)
    if not exponents or any(k < 2 for k in exponents):
        raise ValueError("exponents must be >= 2 (singular polynomial)")
    if exponents != sorted(exponents):
        raise ValueError("exponents must be ascending")
    if z.kind != "modified":
        raise ValueError("recovery works on the modified series; convert first")
    sensitive = _sensitive_exponents(exponents)
    if not sensitive:
        return SignRecovery(())
    if z.order < sensitive[-1]:
        raise RecoveryError(
            f"series order {z.order} too short: need at least {sensitive[-1]}"
        )
    known_minus: dict[int, int] = {}
    records = []
    for k in sensitive:
        dividing = [ki for ki in exponents if k % ki == 0]
        # every dividing exponent is even and itself sign-sensitive, or an
        # odd exponent would divide k through it
        assert all(ki % 2 == 0 and ki in sensitive for ki in dividing)
        drop = sum(k // ki for ki in exponents)
        span = len(dividing)
        triple = z.coefficient(k)
        pi = (U * triple.fplus - triple.bbar) * LaurentPoly.monomial(
            drop - 1
        ) + LaurentPoly.monomial(span - 1)
        rho = pi - LaurentPoly.monomial(span - 1)
        top = rho.degree_and_leading()
        if top is None:
            raise RecoveryError(
                f"zero fiber deviation at exponent {k}: not a Brieskorn series"
            )
        degree, leading = top
        total_minus = degree if leading > 0 else degree + 1
        inherited = sum(
            known_minus[kp] for kp in sensitive if kp < k and k % kp == 0
        )
        sigma_minus = total_minus - inherited
        sigma_plus = exponents.count(k) - sigma_minus
        if sigma_minus < 0 or sigma_plus < 0:
            raise RecoveryError(
                f"inconsistent sign counts at exponent {k}: not a Brieskorn series"
            )
        known_minus[k] = sigma_minus
        records.append(
            SignCountRecord(
                k,
                sigma_plus,
                sigma_minus,
                pi,
                rho,
                "positive" if leading > 0 else "negative",
            )
        )
    return SignRecovery(tuple(records))


def roundtrip_check(f: BrieskornPoly, order: int | None = None) -> bool:
    """True iff recovery from the computed zeta reproduces f's sign counts."""
    if not f.is_singular:
        raise ValueError("round trip is defined for singular polynomials")
    g = f.normalized()
    recovered = recover(list(g.exponents), modified_zeta(g, order))
    expected = {k: g.sign_counts(k) for k in g.relevant_exponents()}
    return recovered.counts() == expected
