from itertools import combinations_with_replacement

import pytest

from arczeta.fibers import (
    EmptySum,
    FiberQuery,
    OddPresent,
    TwoPowerForm,
    beta_closed,
    beta_recursive,
    euler_fiber,
    reduce,
)
from arczeta.laurent import ONE, U, ZERO, LaurentPoly


def closed(terms, c):
    return beta_closed(FiberQuery(terms, c))


def recursive(terms, c):
    return beta_recursive(FiberQuery(terms, c))


class TestQueryValidation:
    def test_bad_target(self):
        with pytest.raises(ValueError):
            FiberQuery([(2, 1)], 2)

    def test_bad_sign(self):
        with pytest.raises(ValueError):
            FiberQuery([(2, 3)], 0)

    def test_bad_exponent(self):
        with pytest.raises(ValueError):
            FiberQuery([(0, 1)], 0)

    def test_negated(self):
        q = FiberQuery([(2, 1), (4, -1)], 1)
        assert q.negated() == FiberQuery([(2, -1), (4, 1)], -1)


class TestReduce:
    def test_odd_exponent_wins(self):
        assert reduce(FiberQuery([(2, 1), (3, -1)], 0)) == OddPresent(2)

    def test_two_power_grouping_merges_odd_parts(self):
        # 4 = 2^2 and 12 = 2^2 * 3 land in the same level-2 group
        shape = reduce(FiberQuery([(4, 1), (4, -1), (12, 1)], 0))
        assert shape == TwoPowerForm(((2, 2, 1),))

    def test_single_square(self):
        assert reduce(FiberQuery([(2, 1)], 0)) == TwoPowerForm(((1, 1, 0),))

    def test_empty(self):
        assert reduce(FiberQuery([], 1)) == EmptySum()

    def test_form_statistics(self):
        shape = reduce(FiberQuery([(2, 1), (2, -1), (8, -1)], 0))
        assert shape.variables == 3
        assert shape.sigma_plus == 1 and shape.sigma_minus == 2
        assert shape.first_unbalanced == (3, 0, 1)

    def test_balanced_form_has_no_unbalanced_group(self):
        shape = reduce(FiberQuery([(4, 1), (4, -1)], 0))
        assert shape.first_unbalanced is None

    def test_form_validation(self):
        with pytest.raises(ValueError):
            TwoPowerForm(())
        with pytest.raises(ValueError):
            TwoPowerForm(((1, 0, 0),))
        with pytest.raises(ValueError):
            TwoPowerForm(((2, 1, 0), (2, 0, 1)))


class TestClosedEngine:
    def test_definite_zero_fiber_is_a_point(self):
        assert closed([(2, 1), (4, 1)], 0) == ONE

    def test_definite_positive_fiber_is_an_oval(self):
        assert closed([(2, 1), (4, 1)], 1) == U + 1

    def test_balanced_zero_fiber_is_crossing_lines(self):
        assert closed([(4, 1), (4, -1)], 0) == 2 * U - 1

    def test_empty_fiber(self):
        assert closed([(2, -1), (2, -1)], 1) == ZERO

    def test_odd_shortcut_is_target_blind(self):
        for c in (-1, 0, 1):
            assert closed([(2, 1), (3, 1)], c) == U

    def test_empty_sum_conventions(self):
        assert closed([], 0) == ONE
        assert closed([], 1) == ZERO
        assert closed([], -1) == ZERO


class TestRecursiveEngine:
    def test_pair_cancellation(self):
        assert recursive([(2, 1), (2, -1)], 0) == 2 * U - 1

    def test_three_variables_zero(self):
        assert recursive([(2, 1), (2, -1), (4, 1)], 0) == U * U

    def test_three_variables_one(self):
        assert recursive([(2, 1), (2, -1), (4, 1)], 1) == U * U + U

    def test_bases(self):
        assert recursive([], 0) == ONE
        assert recursive([], -1) == ZERO
        assert recursive([(3, -1)], 1) == ONE


class TestEngineAgreement:
    def test_small_sweep(self):
        kinds = [(k, s) for k in (2, 4, 6) for s in (1, -1)]
        for size in range(4):
            for terms in combinations_with_replacement(kinds, size):
                for c in (-1, 0, 1):
                    assert closed(terms, c) == recursive(terms, c), (terms, c)

    def test_duality_small_sweep(self):
        kinds = [(k, s) for k in (2, 4, 8) for s in (1, -1)]
        for size in range(4):
            for terms in combinations_with_replacement(kinds, size):
                for c in (-1, 0, 1):
                    q = FiberQuery(terms, c)
                    assert beta_closed(q) == beta_closed(q.negated())


class TestEuler:
    def test_balanced_pair(self):
        assert euler_fiber(FiberQuery([(4, 1), (4, -1)], 0)) == -3
        assert euler_fiber(FiberQuery([(4, 1), (4, -1)], 1)) == -2

    def test_empty_negative_fiber(self):
        assert euler_fiber(FiberQuery([(2, 1), (2, 1)], -1)) == 0

    def test_rejects_non_two_power_shapes(self):
        with pytest.raises(ValueError):
            euler_fiber(FiberQuery([(2, 1), (3, 1)], 0))
        with pytest.raises(ValueError):
            euler_fiber(FiberQuery([], 0))

    def test_matches_beta_at_minus_one(self):
        kinds = [(k, s) for k in (2, 4, 8, 12) for s in (1, -1)]
        for size in range(1, 4):
            for terms in combinations_with_replacement(kinds, size):
                for c in (-1, 0, 1):
                    q = FiberQuery(terms, c)
                    assert beta_closed(q).evaluate(-1) == euler_fiber(q)


class TestDimension:
    def test_zero_fiber_never_empty(self):
        kinds = [(k, s) for k in (2, 4, 6, 16) for s in (1, -1)]
        for size in range(4):
            for terms in combinations_with_replacement(kinds, size):
                value = closed(terms, 0)
                top = value.degree_and_leading()
                assert top is not None and top[1] > 0

    def test_nonempty_unit_fibers_are_hypersurfaces(self):
        kinds = [(k, s) for k in (2, 4, 6, 16) for s in (1, -1)]
        for size in range(1, 4):
            for terms in combinations_with_replacement(kinds, size):
                for c in (-1, 1):
                    top = closed(terms, c).degree_and_leading()
                    if top is not None:
                        assert top == (size - 1, top[1]) and top[1] > 0
