import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ideal_interp import (
    ConditionSet,
    DependentConditions,
    HermiteFunctional,
    MonomialOrder,
    NotLowerSet,
    OrderIdeal,
    Polynomial,
    apply_functional,
    buchberger_reduced,
    collocation_matrix,
    escalier,
    is_poised,
    moller_vanishing_gb,
    rank_and_det,
    validate_conditions,
)
from ideal_interp.poly import all_orders

from conftest import F1, NEGATIVE_CONDITIONS, condition_corpus, example1_conditions, example4_conditions, p
from oracles import det_by_permutations, rank_by_fractions, raw_derivative_value, vanishing_ideal_by_products

EX1_ROWS = [[1, 1, 0, 0], [1, 1, 1, 1], [1, 1, 2, 4], [1, 2, 0, 0]]


class TestApplyFunctional:
    def test_evaluation(self):
        assert apply_functional(HermiteFunctional((1, 2), (0, 0)), p(F1)) == 2

    def test_first_derivative(self):
        assert apply_functional(HermiteFunctional((0, 1), (1, 0)), p("x1*x2")) == 1

    def test_raw_derivative_no_factorial(self):
        assert apply_functional(HermiteFunctional((0, 0), (0, 1)), p("x2^2")) == 0
        assert apply_functional(HermiteFunctional((0, 0), (0, 2)), p("x2^2")) == 2

    @given(st.tuples(st.integers(0, 3), st.integers(0, 3)),
           st.tuples(st.fractions(-3, 3, max_denominator=3), st.fractions(-3, 3, max_denominator=3)),
           st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-5, 5), max_size=5))
    def test_matches_termwise_oracle(self, alpha, point, terms):
        f = Polynomial(terms, 2)
        assert apply_functional(HermiteFunctional(point, alpha), f) == raw_derivative_value(f, alpha, point)


class TestMatrices:
    def test_example1_collocation(self):
        M = collocation_matrix(example1_conditions(), [p("1"), p("x1"), p("x2"), p("x2^2")])
        assert [list(r) for r in M.rows] == EX1_ROWS

    def test_example1_rank_and_det_against_oracle(self):
        expected_det = det_by_permutations(EX1_ROWS)
        assert expected_det == 2
        assert rank_and_det(EX1_ROWS) == (4, expected_det)

    def test_single_condition(self):
        M = collocation_matrix(ConditionSet.lagrange([(0, 0)]), [p("1")])
        assert [list(r) for r in M.rows] == [[1]]

    def test_zero_column(self):
        M = collocation_matrix(example1_conditions(), [Polynomial.zero(2)])
        assert M.column(0) == [0, 0, 0, 0]

    def test_identity_and_ones(self):
        assert rank_and_det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (3, 1)
        assert rank_and_det([[1, 1], [1, 1]]) == (1, 0)

    def test_rectangular_has_no_det(self):
        assert rank_and_det([[1, 2, 3], [2, 4, 6]]) == (1, None)

    @settings(max_examples=150)
    @given(st.integers(1, 5), st.integers(1, 5), st.data())
    def test_rank_against_fraction_elimination(self, n, k, data):
        rows = data.draw(st.lists(
            st.lists(st.fractions(-3, 3, max_denominator=4), min_size=k, max_size=k),
            min_size=n, max_size=n))
        rank, det = rank_and_det(rows)
        assert rank == rank_by_fractions(rows)
        if n == k:
            assert det == det_by_permutations(rows)


class TestValidation:
    def test_example4(self):
        assert validate_conditions(example4_conditions())

    def test_missing_origin(self):
        assert not validate_conditions(ConditionSet.hermite([((0, 0), [(1, 0)])]))

    def test_duplicate_point(self):
        assert not validate_conditions(ConditionSet.lagrange([(0, 0), (0, 0)]))

    def test_grouped_view(self):
        groups = example4_conditions().groups
        assert len(groups) == 3
        assert sum(len(v) for v in groups.values()) == 7


class TestMoller:
    def test_example1(self):
        G = moller_vanishing_gb(example1_conditions())
        assert G.generators == (p("x1^2-3*x1+2"), p("x1*x2-x2"), p("x2^3-3*x2^2+2*x2"))

    def test_example3(self):
        G = moller_vanishing_gb(ConditionSet.lagrange([(0, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1)]))
        expected = {p(s, 3) for s in ("x1*x2", "x2*x3", "x1^2-x1", "x2^2-x2", "x3^2-x3", "x1*x3-x1")}
        assert G.as_set() == expected

    def test_single_point(self):
        G = moller_vanishing_gb(ConditionSet.lagrange([(0, 0, 0)]))
        assert G.as_set() == {p("x1", 3), p("x2", 3), p("x3", 3)}

    def test_rejects_non_lower(self):
        with pytest.raises(NotLowerSet):
            moller_vanishing_gb(ConditionSet.hermite([((0, 0), [(0, 0), (0, 2)])]))

    def test_rejects_duplicates(self):
        with pytest.raises(DependentConditions):
            moller_vanishing_gb(ConditionSet.lagrange([(0, 0), (0, 0)]))

    @pytest.mark.parametrize("name,conds", sorted({**condition_corpus(), **NEGATIVE_CONDITIONS}.items()))
    @pytest.mark.parametrize("order", [MonomialOrder.lex(1), MonomialOrder.lex(2), MonomialOrder.grlex()], ids=repr)
    def test_annihilation_and_dimension(self, name, conds, order):
        G = moller_vanishing_gb(conds, order)
        for g in G:
            assert all(apply_functional(lam, g) == 0 for lam in conds)
        O = escalier(G)
        assert len(O) == len(conds)
        assert is_poised(conds, O)
        assert G == buchberger_reduced(G.generators, order)

    def test_kernel_meets_range_trivially(self):
        # a nonzero element of span(O) never vanishes on all conditions
        conds = example4_conditions()
        O = escalier(moller_vanishing_gb(conds))
        rank, _ = rank_and_det(collocation_matrix(conds, O.monomials()))
        assert rank == len(O)

    def test_random_lagrange_against_product_oracle(self):
        rng = random.Random(7)
        for _ in range(10):
            d = rng.randint(1, 3)
            pts = set()
            while len(pts) < rng.randint(1, 4):
                pts.add(tuple(Fraction(rng.randint(-2, 2), rng.randint(1, 2)) for _ in range(d)))
            pts = sorted(pts)
            for order in all_orders(d):
                expected = vanishing_ideal_by_products(pts, d, order, buchberger_reduced)
                assert moller_vanishing_gb(ConditionSet.lagrange(pts), order) == expected


class TestPoised:
    def test_example1(self):
        assert is_poised(example1_conditions(), OrderIdeal({(0, 0), (1, 0), (0, 1), (0, 2)}))

    def test_coincident_points(self):
        conds = ConditionSet.lagrange([(1, 1), (1, 1)])
        assert not is_poised(conds, OrderIdeal({(0, 0), (1, 0)}))

    def test_single(self):
        assert is_poised(ConditionSet.lagrange([(0, 0)]), OrderIdeal({(0, 0)}))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            is_poised(ConditionSet.lagrange([(0, 0)]), OrderIdeal({(0, 0), (1, 0)}))

    def test_example1_not_poised_on_wrong_space(self):
        assert not is_poised(example1_conditions(), OrderIdeal({(0, 0), (1, 0), (2, 0), (3, 0)}))
