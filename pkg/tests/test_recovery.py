import pytest

from arczeta.brieskorn import BrieskornPoly, iter_normalized_singular
from arczeta.laurent import LaurentPoly
from arczeta.recovery import RecoveryError, recover, roundtrip_check
from arczeta.zeta import RealizedCoefficient, RealizedZeta, modified_zeta, plain_from_modified


def L(mapping):
    return LaurentPoly(mapping)


class TestRecoverFixtures:
    def test_balanced_quartics(self):
        z = modified_zeta(BrieskornPoly([(4, 1), (4, -1)]), 8)
        recovery = recover([4, 4], z)
        (record,) = recovery.records
        assert record.k == 4
        assert record.pi == L({1: 1, 0: -1})
        assert record.rho == L({0: -1})
        assert record.branch == "negative"
        assert (record.sigma_plus, record.sigma_minus) == (1, 1)

    def test_two_positive_squares(self):
        z = modified_zeta(BrieskornPoly([(2, 1), (2, 1)]), 4)
        recovery = recover([2, 2], z)
        (record,) = recovery.records
        assert record.pi == L({1: 1, 0: 1})
        assert record.rho == L({0: 1})
        assert record.branch == "positive"
        assert (record.sigma_plus, record.sigma_minus) == (2, 0)

    def test_empty_sensitive_set(self):
        z = modified_zeta(BrieskornPoly([(3, 1), (9, -1)]), 18)
        assert recover([3, 9], z).records == ()

    def test_counts_accessor(self):
        z = modified_zeta(BrieskornPoly([(2, -1), (4, 1)]), 8)
        assert recover([2, 4], z).counts() == {2: (0, 1), 4: (1, 0)}


class TestRecoverValidation:
    def test_series_too_short(self):
        z = modified_zeta(BrieskornPoly([(4, 1), (4, -1)]), 3)
        with pytest.raises(RecoveryError, match="too short"):
            recover([4, 4], z)

    def test_plain_series_rejected(self):
        z = plain_from_modified(modified_zeta(BrieskornPoly([(2, 1)]), 4))
        with pytest.raises(ValueError, match="modified"):
            recover([2], z)

    def test_unsorted_exponents_rejected(self):
        z = modified_zeta(BrieskornPoly([(2, 1), (4, 1)]), 8)
        with pytest.raises(ValueError, match="ascending"):
            recover([4, 2], z)

    def test_nonsingular_exponents_rejected(self):
        z = modified_zeta(BrieskornPoly([(2, 1)]), 4)
        with pytest.raises(ValueError):
            recover([1, 2], z)

    def test_corrupted_series_detected(self):
        # zero out the decisive coefficient: the fiber deviation collapses
        z = modified_zeta(BrieskornPoly([(2, 1), (2, 1)]), 4)
        zero = RealizedCoefficient(L({}), L({}), L({}))
        broken = RealizedZeta("modified", (z.coeffs[0], zero) + z.coeffs[2:])
        with pytest.raises(RecoveryError, match="deviation"):
            recover([2, 2], broken)


class TestRoundTrip:
    def test_fixtures(self):
        assert roundtrip_check(BrieskornPoly([(4, 1), (4, -1)]))
        assert roundtrip_check(BrieskornPoly([(2, 1), (4, 1), (4, 1)]))
        assert roundtrip_check(BrieskornPoly([(3, 1), (6, -1)]))  # vacuous: K empty

    def test_rejects_nonsingular(self):
        with pytest.raises(ValueError):
            roundtrip_check(BrieskornPoly([(1, 1)]))

    def test_small_exhaustive_sweep(self):
        for d in (1, 2):
            for poly in iter_normalized_singular(d, 6):
                assert roundtrip_check(poly, poly.max_exponent), poly

    def test_divisor_towers(self):
        # nested sensitive exponents force the inherited-count subtraction
        for terms in (
            [(2, 1), (4, -1), (8, -1)],
            [(2, -1), (4, -1), (8, 1), (8, -1)],
            [(2, -1), (2, -1), (6, 1), (6, -1)],
            [(4, -1), (8, -1), (16, -1), (16, -1)],
        ):
            assert roundtrip_check(BrieskornPoly(terms)), terms
